//! The regular representation of `ℚ[x₁,x₂]/(x₁², x₁x₂, x₂²)`: cyclic, but
//! not Frobenius, with a two-dimensional eigenspace.

use rand::Rng;
use serde::Serialize;

use super::closure::{close_algebra, AlgebraImage};
use super::cyclic::{find_cyclic_vector, is_cyclic, CyclicReport};
use super::eigen::{joint_eigen_analysis, EigenReport};
use super::frobenius::{
    frobenius_gram_probe, generic_form_determinant, invariant_symmetric_forms, symbolic_lambda_determinant,
    ProbeVerdict,
};
use crate::error::Result;
use crate::exact::matrix::Matrix;
use crate::exact::scalar;

/// Multiplication by `x₁` and `x₂` on the basis `(1, x₁, x₂)`.
pub fn counterexample_generators() -> Vec<Matrix> {
    let unit = |row: usize| Matrix::from_fn(3, 3, |i, j| scalar::int((i == row && j == 0) as i64));
    vec![unit(1), unit(2)]
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub basis: Vec<String>,
    pub algebra_dim: usize,
    pub unit_is_cyclic: bool,
    pub cyclic: CyclicReport,
    pub probe: ProbeVerdict,
    /// Entries of `λ(b_i b_j)` in the unknowns `t0, t1, t2`.
    pub lambda_gram: Vec<Vec<String>>,
    pub lambda_determinant: String,
    pub invariant_forms: usize,
    pub invariant_forms_all_degenerate: Option<bool>,
    pub eigen: EigenReport,
    pub trivial_eigenspace_dim: String,
    pub trivial_generalized_dim: usize,
    pub cyclic_holds: bool,
    pub not_frobenius_holds: bool,
    pub eigenspace_two_holds: bool,
    pub pass: bool,
}

pub fn counterexample_algebra() -> Result<AlgebraImage> {
    close_algebra(3, &counterexample_generators())
}

pub fn run_counterexample(trials: usize, rng: &mut impl Rng) -> Result<CounterexampleReport> {
    let alg = counterexample_algebra()?;
    let unit = vec![scalar::int(1), scalar::int(0), scalar::int(0)];
    let unit_is_cyclic = is_cyclic(&alg, &unit);
    let cyclic = find_cyclic_vector(&alg, trials, rng);
    let probe = frobenius_gram_probe(&alg, trials, rng);
    let constants = alg.structure_constants();
    let lambda_gram = constants
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    let terms: Vec<String> = c
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !num::Zero::is_zero(*x))
                        .map(|(k, x)| {
                            if num::One::is_one(x) {
                                format!("t{k}")
                            } else {
                                format!("{}*t{k}", scalar::format(x))
                            }
                        })
                        .collect();
                    if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.join(" + ")
                    }
                })
                .collect()
        })
        .collect();
    let lambda_determinant = symbolic_lambda_determinant(&constants).to_string();
    let forms = invariant_symmetric_forms(&alg);
    let invariant_forms_all_degenerate = generic_form_determinant(&forms).map(|p| p.is_zero());
    let eigen = joint_eigen_analysis(&alg, None, rng)?;
    let trivial = eigen
        .blocks
        .iter()
        .find(|b| b.character.as_ref().is_some_and(|c| c.iter().skip(1).all(num::Zero::is_zero)));
    let trivial_eigenspace_dim = trivial.map_or_else(|| "0".to_string(), |b| scalar::format(&b.eigenspace_dim));
    let trivial_generalized_dim = trivial.map_or(0, |b| b.generalized_dim);
    let cyclic_holds = unit_is_cyclic && cyclic.found;
    let not_frobenius_holds = probe.is_frobenius() == Some(false);
    let eigenspace_two_holds = trivial_eigenspace_dim == "2" && trivial_generalized_dim == 3;
    Ok(CounterexampleReport {
        basis: vec!["1".into(), "x1".into(), "x2".into()],
        algebra_dim: alg.dim(),
        unit_is_cyclic,
        cyclic,
        probe,
        lambda_gram,
        lambda_determinant,
        invariant_forms: forms.len(),
        invariant_forms_all_degenerate,
        eigen,
        trivial_eigenspace_dim,
        trivial_generalized_dim,
        cyclic_holds,
        not_frobenius_holds,
        eigenspace_two_holds,
        pass: cyclic_holds && not_frobenius_holds && eigenspace_two_holds,
    })
}
