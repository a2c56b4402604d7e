//! Run configuration and its validation.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::scalar::{self, Scalar};
use crate::hw::DEFAULT_DIM_CAP;
use crate::lie::chevalley::{BasisLabel, ChevalleyAlgebra};
use crate::lie::form::{FormNormalization, InvariantForm};
use crate::lie::roots::{LieType, Root};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    #[serde(default)]
    pub form: FormNormalization,
}

/// `μ` in Chevalley coordinates: `h` lists the `h_i` coefficients, `f` maps
/// labels such as `f1` or `f[1,1]` to coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuSpec {
    #[serde(default)]
    pub h: Vec<String>,
    #[serde(default)]
    pub f: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `μ = 0`, chain space = singular vectors.
    Periodic,
    /// `μ ∈ h` regular, chain space = everything.
    #[serde(alias = "regular-quasi-periodic")]
    Regular,
    /// `μ ∈ b₋`, chain space cut out by `z_μ(g) ∩ n₊`.
    General,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Periodic => "periodic",
            Mode::Regular => "regular",
            Mode::General => "general",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Checks {
    pub commutativity: bool,
    pub shapovalov: bool,
    pub residue: bool,
    pub diagonal: bool,
    pub chain_invariance: bool,
    /// Require cyclicity, Frobenius and `dim 𝔄 = dim M`. Unset means
    /// "required when the rank is 1".
    pub integrability: Option<bool>,
}

impl Default for Checks {
    fn default() -> Self {
        Checks {
            commutativity: true,
            shapovalov: true,
            residue: true,
            diagonal: true,
            chain_invariance: true,
            integrability: None,
        }
    }
}

/// One factor of a current monomial: a basis label and a derivative order.
pub type MonomialFactor = (String, i64);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaudinConfig {
    pub algebra: AlgebraSpec,
    pub weights: Vec<Vec<i64>>,
    pub z: Vec<String>,
    #[serde(default)]
    pub mu: MuSpec,
    pub mode: Mode,
    #[serde(default)]
    pub extra_generators: Vec<Vec<MonomialFactor>>,
    #[serde(default)]
    pub checks: Checks,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub include_cartan: Option<bool>,
    /// Accept `z_a = 0`; outside the standing assumptions, reported as such.
    #[serde(default)]
    pub allow_zero_z: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_cap: Option<usize>,
}

/// A validated configuration with every scalar parsed.
#[derive(Clone, Debug)]
pub struct GaudinInstance {
    pub config: GaudinConfig,
    pub algebra: ChevalleyAlgebra,
    pub form: InvariantForm,
    pub weights: Vec<Vec<i64>>,
    pub z: Vec<Scalar>,
    /// `μ` in Chevalley coordinates, length `dim g`.
    pub mu: Vec<Scalar>,
    pub mode: Mode,
    pub include_cartan: bool,
    /// Monomials as `(basis index, derivative order)`.
    pub extra_generators: Vec<Vec<(usize, usize)>>,
    pub dim_cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub regular: bool,
    /// Positive roots with `α(μ) = 0`.
    pub vanishing_roots: Vec<Root>,
}

/// Regularity of `μ ∈ h`: `α(μ) ≠ 0` for every positive root.
pub fn check_mu_regular(alg: &ChevalleyAlgebra, mu: &[Scalar]) -> Result<Regularity> {
    let rs = alg.root_system();
    let r = rs.rank();
    if (0..alg.dim()).any(|i| !matches!(alg.label(i), BasisLabel::H(_)) && !mu[i].is_zero()) {
        return Err(Error::Invalid("regularity is only defined for μ in the Cartan subalgebra".into()));
    }
    let vanishing_roots: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|alpha| {
            let value: Scalar = (0..r)
                .map(|i| &mu[alg.h(i)] * scalar::int(rs.pair_with_coroot(alpha, i)))
                .sum();
            value.is_zero()
        })
        .cloned()
        .collect();
    Ok(Regularity {
        regular: vanishing_roots.is_empty(),
        vanishing_roots,
    })
}

fn root_text(root: &[i64]) -> String {
    format!("[{}]", root.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
}

impl GaudinConfig {
    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::config("<config>", e.to_string()))
    }

    pub fn validate(&self) -> Result<GaudinInstance> {
        let spec = &self.algebra;
        let algebra = ChevalleyAlgebra::build(spec.lie_type, spec.rank)
            .map_err(|e| Error::config("algebra", e.to_string()))?;
        let rs = algebra.root_system();
        let r = rs.rank();
        let form = InvariantForm::new(&algebra, spec.form)?;

        if self.weights.is_empty() {
            return Err(Error::config("weights", "at least one site is required"));
        }
        for (i, w) in self.weights.iter().enumerate() {
            if w.len() != r {
                return Err(Error::config(format!("weights[{i}]"), format!("expected {r} entries, got {}", w.len())));
            }
            if w.iter().any(|&c| c < 0) {
                return Err(Error::config(format!("weights[{i}]"), "weight is not dominant integral"));
            }
        }

        if self.z.len() != self.weights.len() {
            return Err(Error::config(
                "z",
                format!("{} points for {} sites", self.z.len(), self.weights.len()),
            ));
        }
        let mut z = Vec::with_capacity(self.z.len());
        for (i, text) in self.z.iter().enumerate() {
            let v = scalar::parse(text).map_err(|e| Error::config(format!("z[{i}]"), e.to_string()))?;
            if v.is_zero() && !self.allow_zero_z {
                return Err(Error::config(format!("z[{i}]"), "points must be nonzero"));
            }
            if let Some(j) = z.iter().position(|w: &Scalar| *w == v) {
                return Err(Error::config(format!("z[{i}]"), format!("repeats z[{j}] = {}", scalar::format(&v))));
            }
            z.push(v);
        }

        let mut mu = vec![Scalar::zero(); algebra.dim()];
        if !self.mu.h.is_empty() && self.mu.h.len() != r {
            return Err(Error::config("mu.h", format!("expected {r} entries, got {}", self.mu.h.len())));
        }
        for (i, text) in self.mu.h.iter().enumerate() {
            mu[algebra.h(i)] = scalar::parse(text).map_err(|e| Error::config(format!("mu.h[{i}]"), e.to_string()))?;
        }
        for (label, text) in &self.mu.f {
            let field = format!("mu.f.{label}");
            let idx = algebra.parse_label(label).map_err(|e| Error::config(&field, e.to_string()))?;
            if !matches!(algebra.label(idx), BasisLabel::F(_)) {
                return Err(Error::config(&field, "only lowering coordinates are allowed"));
            }
            mu[idx] = scalar::parse(text).map_err(|e| Error::config(&field, e.to_string()))?;
        }

        match self.mode {
            Mode::Periodic => {
                if mu.iter().any(|c| !c.is_zero()) {
                    return Err(Error::config("mu", "periodic mode requires μ = 0"));
                }
            }
            Mode::Regular => {
                if self.mu.f.values().any(|t| scalar::parse(t).map(|v| !v.is_zero()).unwrap_or(true)) {
                    return Err(Error::config("mu.f", "regular mode requires μ in the Cartan subalgebra"));
                }
                let reg = check_mu_regular(&algebra, &mu)?;
                if !reg.regular {
                    let witness: Vec<String> = reg.vanishing_roots.iter().map(|a| root_text(a)).collect();
                    return Err(Error::config(
                        "mu.h",
                        format!("μ is not regular: α(μ) = 0 for α = {}", witness.join(", ")),
                    ));
                }
            }
            Mode::General => {}
        }

        let mut extra_generators = Vec::with_capacity(self.extra_generators.len());
        for (i, mono) in self.extra_generators.iter().enumerate() {
            if mono.is_empty() {
                return Err(Error::config(format!("extra_generators[{i}]"), "empty monomial"));
            }
            let mut parsed = Vec::with_capacity(mono.len());
            for (j, (label, s)) in mono.iter().enumerate() {
                let field = format!("extra_generators[{i}][{j}]");
                let idx = algebra.parse_label(label).map_err(|e| Error::config(&field, e.to_string()))?;
                if *s < 0 {
                    return Err(Error::config(&field, "derivative order must be nonnegative"));
                }
                parsed.push((idx, *s as usize));
            }
            extra_generators.push(parsed);
        }

        let include_cartan = self
            .include_cartan
            .unwrap_or(matches!(self.mode, Mode::Periodic | Mode::Regular));

        Ok(GaudinInstance {
            config: self.clone(),
            form,
            weights: self.weights.clone(),
            z,
            mu,
            mode: self.mode,
            include_cartan,
            extra_generators,
            dim_cap: self.dim_cap.unwrap_or(DEFAULT_DIM_CAP),
            algebra,
        })
    }
}

impl GaudinInstance {
    pub fn sites(&self) -> usize {
        self.weights.len()
    }

    pub fn mu_is_zero(&self) -> bool {
        self.mu.iter().all(Zero::is_zero)
    }

    /// `μ` has no `e` or `f` coordinates.
    pub fn mu_in_cartan(&self) -> bool {
        (0..self.algebra.dim()).all(|i| matches!(self.algebra.label(i), BasisLabel::H(_)) || self.mu[i].is_zero())
    }

    /// Whether cyclicity, Frobenius and dimension equality are required.
    pub fn integrability_required(&self) -> bool {
        self.config
            .checks
            .integrability
            .unwrap_or(self.algebra.rank() == 1 && self.config.extra_generators.is_empty())
    }
}

/// `μ ∈ h` with `α_j(μ) = j + 1`, which is regular since every positive
/// root has nonnegative coefficients.
pub fn regular_cartan_element(alg: &ChevalleyAlgebra) -> Vec<Scalar> {
    let r = alg.rank();
    let cartan = alg.root_system().cartan();
    // α_j(Σ c_i h_i) = Σ_i c_i A[i][j]
    let a = crate::exact::matrix::Matrix::from_fn(r, r, |j, i| scalar::int(cartan[i][j]));
    let rhs = crate::exact::matrix::Matrix::from_fn(r, 1, |j, _| scalar::int(j as i64 + 1));
    let c = a.solve(&rhs).expect("Cartan matrix is invertible");
    let mut mu = vec![Scalar::zero(); alg.dim()];
    for i in 0..r {
        mu[alg.h(i)] = c.get(i, 0).clone();
    }
    mu
}
