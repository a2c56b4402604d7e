//! On-disk cache of built irreducible modules.
//!
//! Layout: `{root}/{type}{rank}/{form}/{λ joined by '-'}.json`.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::hw::{build_irrep, HighestWeightModule, ModuleJson};
use crate::lie::chevalley::ChevalleyAlgebra;
use crate::lie::form::InvariantForm;

pub const CACHE_ENV: &str = "GAUDINLAB_CACHE";
pub const DEFAULT_CACHE_DIR: &str = "cache";

/// `--cache-dir`, then `GAUDINLAB_CACHE`, then `./cache`.
pub fn resolve_cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match std::env::var_os(CACHE_ENV) {
        Some(v) if !v.is_empty() => PathBuf::from(v),
        _ => PathBuf::from(DEFAULT_CACHE_DIR),
    }
}

#[derive(Clone, Debug)]
pub struct ModuleCache {
    root: PathBuf,
    hits: usize,
    misses: usize,
}

impl ModuleCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        ModuleCache {
            root: root.into(),
            hits: 0,
            misses: 0,
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn hits(&self) -> usize {
        self.hits
    }

    pub fn misses(&self) -> usize {
        self.misses
    }

    pub fn entry_path(&self, alg: &ChevalleyAlgebra, form: &InvariantForm, weight: &[i64]) -> PathBuf {
        let rs = alg.root_system();
        let name = weight.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("-");
        self.root
            .join(format!("{}{}", rs.lie_type(), rs.rank()))
            .join(form.normalization().as_str())
            .join(format!("{name}.json"))
    }

    fn load(&self, alg: &ChevalleyAlgebra, path: &Path) -> Option<HighestWeightModule> {
        let text = fs::read_to_string(path).ok()?;
        let json: ModuleJson = serde_json::from_str(&text).ok()?;
        HighestWeightModule::from_json(alg, &json).ok()
    }

    /// Returns the module and whether it came from disk. Unreadable or
    /// stale entries are rebuilt and overwritten.
    pub fn load_or_build(
        &mut self,
        alg: &ChevalleyAlgebra,
        form: &InvariantForm,
        weight: &[i64],
        cap: usize,
    ) -> Result<(HighestWeightModule, PathBuf, bool)> {
        let path = self.entry_path(alg, form, weight);
        if let Some(m) = self.load(alg, &path) {
            if m.highest_weight() == weight && m.dim() <= cap {
                self.hits += 1;
                return Ok((m, path, true));
            }
        }
        let m = build_irrep(alg, weight, cap)?;
        self.misses += 1;
        write_atomic(&path, &module_json_text(&m, alg, form)?)?;
        Ok((m, path, false))
    }
}

pub fn module_json_text(m: &HighestWeightModule, alg: &ChevalleyAlgebra, form: &InvariantForm) -> Result<String> {
    Ok(serde_json::to_string_pretty(&m.to_json(alg, form))? + "\n")
}

pub fn write_atomic(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::form::FormNormalization;
    use crate::lie::roots::LieType;

    #[test]
    fn hit_equals_cold_build() {
        let dir = tempfile::tempdir().unwrap();
        let alg = ChevalleyAlgebra::build(LieType::B, 2).unwrap();
        let form = InvariantForm::new(&alg, FormNormalization::Killing).unwrap();
        let mut cache = ModuleCache::new(dir.path());
        let (cold, path, hit) = cache.load_or_build(&alg, &form, &[0, 1], 400).unwrap();
        assert!(!hit);
        assert!(path.ends_with("B2/killing/0-1.json"));
        let (warm, _, hit) = cache.load_or_build(&alg, &form, &[0, 1], 400).unwrap();
        assert!(hit);
        assert_eq!(cold, warm);
        assert_eq!((cache.hits(), cache.misses()), (1, 1));
        fs::write(&path, "{ not json").unwrap();
        let (again, _, hit) = cache.load_or_build(&alg, &form, &[0, 1], 400).unwrap();
        assert!(!hit);
        assert_eq!(again, cold);
    }
}
