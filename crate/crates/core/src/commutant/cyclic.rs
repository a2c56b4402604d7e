//! Cyclic vectors and the seeded sampler used by all probabilistic steps.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use serde::Serialize;

use super::closure::AlgebraImage;
use crate::exact::scalar::{self, Scalar};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero vector with entries drawn uniformly from `{−3, …, 3}`.
pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Scalar> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        if n == 0 || v.iter().any(|&x| x != 0) {
            return v.into_iter().map(scalar::int).collect();
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CyclicReport {
    pub found: bool,
    #[serde(with = "crate::exact::scalar::serde_scalar_option_vec", skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<Scalar>>,
    pub trials: usize,
    pub max_rank: usize,
    /// Set when `dim 𝔄 < dim V` rules out a cyclic vector outright.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<String>,
}

pub fn orbit_rank(alg: &AlgebraImage, v: &[Scalar]) -> usize {
    alg.orbit_matrix(v).rank()
}

pub fn is_cyclic(alg: &AlgebraImage, v: &[Scalar]) -> bool {
    orbit_rank(alg, v) == alg.ambient_dim()
}

/// Tries up to `trials` random vectors; every success is verified exactly
/// by a rank computation.
pub fn find_cyclic_vector(alg: &AlgebraImage, trials: usize, rng: &mut impl Rng) -> CyclicReport {
    let n = alg.ambient_dim();
    if alg.dim() < n {
        return CyclicReport {
            found: false,
            vector: None,
            trials: 0,
            max_rank: alg.dim(),
            obstruction: Some(format!("dim 𝔄 = {} < dim V = {n}", alg.dim())),
        };
    }
    let mut max_rank = 0;
    for t in 1..=trials {
        let v = random_vector(rng, n);
        let r = orbit_rank(alg, &v);
        max_rank = max_rank.max(r);
        if r == n {
            return CyclicReport {
                found: true,
                vector: Some(v),
                trials: t,
                max_rank,
                obstruction: None,
            };
        }
    }
    CyclicReport {
        found: false,
        vector: None,
        trials,
        max_rank,
        obstruction: None,
    }
}
