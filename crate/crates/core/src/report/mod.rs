//! Orchestration behind the command-line verbs: module cache, runs,
//! sweeps, and representation summaries.

pub mod cache;
pub mod run;
pub mod sweep;

use serde::Serialize;

use crate::error::Result;
use crate::hw::DEFAULT_DIM_CAP;
use crate::lie::chevalley::ChevalleyAlgebra;
use crate::lie::form::{FormNormalization, InvariantForm};
use crate::lie::roots::LieType;

pub use cache::{resolve_cache_dir, ModuleCache};
pub use run::{config_digest, error_exit_code, run_config, run_gaudin, RunManifest, RunOptions, RunOutcome};
pub use sweep::{parse_grid, run_sweep, SweepParam};

#[derive(Clone, Debug, Serialize)]
pub struct WeightMultiplicity {
    pub weight: Vec<i64>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepSummary {
    pub algebra: String,
    pub highest_weight: Vec<i64>,
    pub dim: usize,
    pub weyl_dim: String,
    pub cache_path: String,
    pub cache_hit: bool,
    pub casimir: Option<String>,
    pub multiplicities: Vec<WeightMultiplicity>,
}

/// `rep build`: builds or loads `V_λ` and summarizes it.
pub fn rep_build(
    lie_type: LieType,
    rank: usize,
    weight: &[i64],
    form: FormNormalization,
    cache: &mut ModuleCache,
    cap: Option<usize>,
) -> Result<RepSummary> {
    let alg = ChevalleyAlgebra::build(lie_type, rank)?;
    let inv = InvariantForm::new(&alg, form)?;
    if weight.len() != rank {
        return Err(crate::error::Error::config(
            "weight",
            format!("expected {rank} entries, got {}", weight.len()),
        ));
    }
    alg.root_system().check_dominant(weight)?;
    let (m, path, hit) = cache.load_or_build(&alg, &inv, weight, cap.unwrap_or(DEFAULT_DIM_CAP))?;
    Ok(RepSummary {
        algebra: alg.root_system().name(),
        highest_weight: weight.to_vec(),
        dim: m.dim(),
        weyl_dim: alg.root_system().weyl_dimension(weight)?.to_string(),
        cache_path: path.display().to_string(),
        cache_hit: hit,
        casimir: m.casimir_matrix(&inv).as_scalar().map(|c| c.to_string()),
        multiplicities: m
            .weight_spaces()
            .iter()
            .map(|s| WeightMultiplicity {
                weight: s.weight.clone(),
                multiplicity: s.labels.len(),
            })
            .collect(),
    })
}
