//! `gaudin run`: config file in, verdict and manifest out.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::cache::{write_atomic, ModuleCache};
use crate::commutant::cyclic::seeded_rng;
use crate::commutant::verdict::{perfect_integrability_verdict, Verdict};
use crate::error::{Error, Result};
use crate::gaudin::config::{GaudinConfig, MonomialFactor};
use crate::gaudin::model::GaudinModel;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// SHA-256 of the canonical JSON serialization of a config.
pub fn config_digest(config: &GaudinConfig) -> String {
    let canonical = serde_json::to_string(config).expect("configs serialize");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

pub fn text_digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Command-line overrides applied on top of a config file.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub cache_dir: PathBuf,
    pub dim_cap: Option<usize>,
    pub tolerance: Option<f64>,
    pub include_cartan: Option<bool>,
    pub extra_generators: Option<Vec<Vec<MonomialFactor>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub config_path: Option<String>,
    pub config_digest: String,
    pub tool_version: String,
    pub seed: u64,
    pub cache_dir: String,
    pub cache_hits: usize,
    pub cache_misses: usize,
    pub stage_ms: BTreeMap<String, u128>,
    pub outputs: Vec<String>,
    pub verdict_digest: String,
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub verdict: Verdict,
    pub verdict_json: String,
    pub manifest: RunManifest,
}

impl RunOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.verdict.all_checks_pass {
            0
        } else {
            1
        }
    }
}

/// Exit code for an error: 2 for configuration problems, 3 for resource
/// caps, 1 otherwise.
pub fn error_exit_code(err: &Error) -> i32 {
    match err {
        Error::Config { .. }
        | Error::Parse(_)
        | Error::NonDominant { .. }
        | Error::InvalidType { .. }
        | Error::UnknownLabel(_)
        | Error::Json(_)
        | Error::Io(_) => 2,
        Error::DimensionCap { .. } => 3,
        _ => 1,
    }
}

pub fn load_config(path: &Path) -> Result<GaudinConfig> {
    let text = fs::read_to_string(path).map_err(|e| Error::config("<file>", format!("{}: {e}", path.display())))?;
    GaudinConfig::from_json_str(&text)
}

pub fn load_extra_generators(path: &Path) -> Result<Vec<Vec<MonomialFactor>>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::config("extra_generators", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::config("extra_generators", e.to_string()))
}

pub fn apply_overrides(mut config: GaudinConfig, opts: &RunOptions) -> GaudinConfig {
    if let Some(cap) = opts.dim_cap {
        config.dim_cap = Some(cap);
    }
    if let Some(c) = opts.include_cartan {
        config.include_cartan = Some(c);
    }
    if let Some(extra) = &opts.extra_generators {
        config.extra_generators.extend(extra.iter().cloned());
    }
    config
}

/// Runs the full pipeline on an in-memory config.
pub fn run_config(config: GaudinConfig, config_path: Option<&Path>, opts: &RunOptions) -> Result<RunOutcome> {
    let config = apply_overrides(config, opts);
    let digest = config_digest(&config);
    let mut stage_ms = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, stage_ms: &mut BTreeMap<String, u128>| {
        stage_ms.insert(name.to_string(), clock.elapsed().as_millis());
        clock = Instant::now();
    };

    let inst = config.validate()?;
    lap("validate", &mut stage_ms);
    let mut cache = ModuleCache::new(&opts.cache_dir);
    let mut factors = Vec::with_capacity(inst.sites());
    for w in &inst.weights {
        let (m, _, _) = cache.load_or_build(&inst.algebra, &inst.form, w, inst.dim_cap)?;
        factors.push(m);
    }
    lap("modules", &mut stage_ms);
    let model = GaudinModel::from_modules(inst, factors)?;
    lap("realize", &mut stage_ms);
    let mut rng = seeded_rng(opts.seed);
    let verdict = perfect_integrability_verdict(&model, digest.clone(), opts.seed, opts.tolerance, &mut rng)?;
    lap("verdict", &mut stage_ms);
    let verdict_json = serde_json::to_string_pretty(&verdict)? + "\n";

    let mut outputs = Vec::new();
    if let Some(dir) = &opts.out {
        let vpath = dir.join("verdict.json");
        write_atomic(&vpath, &verdict_json)?;
        outputs.push(vpath.display().to_string());
        outputs.push(dir.join("manifest.json").display().to_string());
    }
    let manifest = RunManifest {
        config_path: config_path.map(|p| p.display().to_string()),
        config_digest: digest,
        tool_version: TOOL_VERSION.to_string(),
        seed: opts.seed,
        cache_dir: opts.cache_dir.display().to_string(),
        cache_hits: cache.hits(),
        cache_misses: cache.misses(),
        stage_ms,
        outputs,
        verdict_digest: text_digest(&verdict_json),
    };
    if let Some(dir) = &opts.out {
        write_atomic(&dir.join("manifest.json"), &(serde_json::to_string_pretty(&manifest)? + "\n"))?;
    }
    Ok(RunOutcome {
        verdict,
        verdict_json,
        manifest,
    })
}

pub fn run_gaudin(config_path: &Path, opts: &RunOptions) -> Result<RunOutcome> {
    let config = load_config(config_path)?;
    run_config(config, Some(config_path), opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = r#"{"algebra": {"type": "A", "rank": 1}, "weights": [[1],[1]], "z": ["1","2"], "mode": "periodic"}"#;

    #[test]
    fn reruns_are_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let opts = RunOptions {
            seed: 5,
            cache_dir: dir.path().join("cache"),
            out: Some(dir.path().join("out")),
            ..RunOptions::default()
        };
        let cfg = GaudinConfig::from_json_str(SL2).unwrap();
        let a = run_config(cfg.clone(), None, &opts).unwrap();
        let b = run_config(cfg, None, &opts).unwrap();
        assert_eq!(a.verdict_json, b.verdict_json);
        assert_eq!((a.manifest.cache_misses, a.manifest.cache_hits), (1, 1));
        assert_eq!(b.manifest.cache_hits, 2);
        assert_eq!(a.exit_code(), 0);
        let on_disk = fs::read_to_string(dir.path().join("out/verdict.json")).unwrap();
        assert_eq!(on_disk, b.verdict_json);
    }

    #[test]
    fn exit_codes() {
        let mut cfg = GaudinConfig::from_json_str(SL2).unwrap();
        cfg.z[1] = "1".into();
        let dir = tempfile::tempdir().unwrap();
        let opts = RunOptions { cache_dir: dir.path().into(), ..RunOptions::default() };
        let err = run_config(cfg, None, &opts).unwrap_err();
        assert_eq!(error_exit_code(&err), 2);
        let mut cfg = GaudinConfig::from_json_str(SL2).unwrap();
        cfg.dim_cap = Some(1);
        let err = run_config(cfg, None, &opts).unwrap_err();
        assert_eq!(error_exit_code(&err), 3);
    }

    #[test]
    fn digest_tracks_content() {
        let a = GaudinConfig::from_json_str(SL2).unwrap();
        let mut b = a.clone();
        assert_eq!(config_digest(&a), config_digest(&b));
        b.z[1] = "3".into();
        assert_ne!(config_digest(&a), config_digest(&b));
        assert_eq!(config_digest(&a).len(), 64);
    }
}
