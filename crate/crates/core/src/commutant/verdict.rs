//! The perfect-integrability pipeline for one Gaudin configuration.

use num::{One, Zero};
use rand::Rng;
use serde::Serialize;

use super::closure::{close_algebra, AlgebraImage};
use super::cyclic::{find_cyclic_vector, CyclicReport};
use super::eigen::{joint_eigen_analysis, EigenReport, NumericEigen};
use super::frobenius::{certify_frobenius_via_form, frobenius_gram_probe, FormCertificate, ProbeVerdict};
use crate::error::Result;
use crate::exact::matrix::Matrix;
use crate::exact::scalar::Scalar;
use crate::gaudin::model::{ChainKind, GaudinModel, Generator, GeneratorOrigin};

pub const CYCLIC_TRIALS: usize = 40;
pub const PROBE_TRIALS: usize = 20;
pub const H_CONVENTION: &str = "H_a = 1/2 Res_{u=z_a} S(u)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub required: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, ok: bool, required: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            required,
            detail: detail.into(),
        }
    }

    fn skipped(name: &str, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Skipped,
            required: false,
            detail: detail.into(),
        }
    }

    pub fn failed_required(&self) -> bool {
        self.required && self.status == CheckStatus::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub origin: GeneratorOrigin,
    pub quadratic: bool,
    pub preserves_chain_space: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Dims {
    #[serde(rename = "V")]
    pub v: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub algebra: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraSummary {
    pub generators: Vec<String>,
    pub dim: usize,
    pub commutative: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Commutativity {
    pub commutative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrobeniusSummary {
    pub form: FormCertificate,
    pub probe: ProbeVerdict,
    /// The form certificate and the probe do not contradict each other.
    pub consistent: bool,
    /// `"form"`, `"probe"` (an exact functional with nonsingular Gram), or `"none"`.
    pub method: String,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub config_digest: String,
    #[serde(rename = "type")]
    pub lie_type: String,
    pub weights: Vec<Vec<i64>>,
    pub mode: String,
    pub chain_space: ChainKind,
    pub form_normalization: String,
    pub hamiltonian_convention: String,
    pub seed: u64,
    pub generators: Vec<GeneratorInfo>,
    pub dims: Dims,
    pub algebras: Vec<AlgebraSummary>,
    pub commutative: Commutativity,
    pub cyclic: CyclicReport,
    pub frobenius: FrobeniusSummary,
    pub eigen: EigenReport,
    pub perfectly_integrable: bool,
    pub checks: Vec<CheckResult>,
    pub all_checks_pass: bool,
    pub notes: Vec<String>,
    pub numeric: Option<NumericEigen>,
}

impl Verdict {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn restrict_all(model: &GaudinModel, gens: &[Generator]) -> Vec<Option<Matrix>> {
    gens.iter().map(|g| model.chain.space.restrict(&g.matrix).ok()).collect()
}

fn structural_checks(model: &GaudinModel) -> Vec<CheckResult> {
    let inst = &model.instance;
    let cfg = &inst.config.checks;
    let alg = &inst.algebra;
    let t = &model.tensor;
    let hs = &model.hamiltonians;
    let l = hs.len();
    let mut out = Vec::new();

    if cfg.commutativity {
        let bad: Vec<String> = (0..l)
            .flat_map(|a| (a + 1..l).map(move |b| (a, b)))
            .filter(|&(a, b)| !hs[a].commutator(&hs[b]).is_zero())
            .map(|(a, b)| format!("[H{},H{}]", a + 1, b + 1))
            .collect();
        out.push(CheckResult::new(
            "commutativity",
            bad.is_empty(),
            true,
            if bad.is_empty() { "[H_a, H_b] = 0 for all pairs".to_string() } else { format!("nonzero: {}", bad.join(", ")) },
        ));
    }

    if cfg.shapovalov {
        if inst.mu_in_cartan() {
            let g = t.gram();
            let bad: Vec<usize> = (0..l)
                .filter(|&a| g.matmul(&hs[a]) != hs[a].transpose().matmul(&g))
                .collect();
            out.push(CheckResult::new(
                "shapovalov",
                bad.is_empty(),
                true,
                if bad.is_empty() { "G·H_a = H_aᵀ·G".to_string() } else { format!("fails for sites {bad:?}") },
            ));
        } else {
            out.push(CheckResult::skipped("shapovalov", "μ has lowering coordinates"));
        }
    }

    if cfg.residue {
        let mut problems = Vec::new();
        let mut sum = Matrix::zeros(t.dim(), t.dim());
        for h in hs {
            sum.add_scaled(&Scalar::one(), h);
        }
        if sum != t.diagonal(&crate::gaudin::model::twist_element(inst)) {
            problems.push("Σ H_a ≠ Δ(μ̂)".to_string());
        }
        let s = &model.segal_sugawara;
        let two = Scalar::from_integer(2.into());
        for (a, cas) in model.casimir_scalars().iter().enumerate() {
            let Some(c) = cas else {
                problems.push(format!("site {} Casimir is not scalar", a + 1));
                continue;
            };
            if s.coefficient(a, 2) != Matrix::scalar(t.dim(), c) {
                problems.push(format!("double pole at z{} ≠ Casimir", a + 1));
            }
            if s.coefficient(a, 1) != hs[a].scale(&two) {
                problems.push(format!("simple pole at z{} ≠ 2·H{}", a + 1, a + 1));
            }
        }
        if s.constant() != &Matrix::scalar(t.dim(), &model.twist_norm()) {
            problems.push("constant term ≠ ⟨μ,μ⟩".into());
        }
        if s.max_order() > 2 {
            problems.push("pole of order > 2".into());
        }
        out.push(CheckResult::new(
            "residue",
            problems.is_empty(),
            true,
            if problems.is_empty() {
                "Σ H_a = Δ(μ̂); S(u) poles match Casimirs and 2·H_a".to_string()
            } else {
                problems.join("; ")
            },
        ));
    }

    if cfg.diagonal {
        if inst.mu_is_zero() {
            let mut bad = Vec::new();
            for x in 0..alg.dim() {
                let d = t.diagonal_basis(x);
                for (a, h) in hs.iter().enumerate() {
                    if !h.commutator(&d).is_zero() {
                        bad.push(format!("[H{}, Δ({})]", a + 1, alg.label_name(x)));
                    }
                }
            }
            out.push(CheckResult::new(
                "diagonal",
                bad.is_empty(),
                true,
                if bad.is_empty() { "H_a commute with Δ(g)".to_string() } else { format!("nonzero: {}", bad.join(", ")) },
            ));
        } else {
            out.push(CheckResult::skipped("diagonal", "μ ≠ 0"));
        }
    }
    out
}

fn summary(gens: &[Generator], restricted: &[Option<Matrix>], keep: impl Fn(&Generator) -> bool, m: usize) -> Result<(AlgebraSummary, AlgebraImage)> {
    let picked: Vec<(String, Matrix)> = gens
        .iter()
        .zip(restricted)
        .filter(|(g, r)| keep(g) && r.is_some())
        .map(|(g, r)| (g.name.clone(), r.clone().expect("filtered")))
        .collect();
    let mats: Vec<Matrix> = picked.iter().map(|(_, m)| m.clone()).collect();
    let img = close_algebra(m, &mats)?;
    Ok((
        AlgebraSummary {
            generators: picked.into_iter().map(|(n, _)| n).collect(),
            dim: img.dim(),
            commutative: img.is_commutative(),
        },
        img,
    ))
}

/// Runs every stage on a realized model.
pub fn perfect_integrability_verdict(
    model: &GaudinModel,
    config_digest: String,
    seed: u64,
    tolerance: Option<f64>,
    rng: &mut impl Rng,
) -> Result<Verdict> {
    let inst = &model.instance;
    let mut checks = structural_checks(model);
    let gens = model.generators();
    let restricted = restrict_all(model, &gens);
    let m = model.chain.space.dim();

    if inst.config.checks.chain_invariance {
        let bad: Vec<&str> = gens
            .iter()
            .zip(&restricted)
            .filter(|(_, r)| r.is_none())
            .map(|(g, _)| g.name.as_str())
            .collect();
        checks.push(CheckResult::new(
            "chain_invariance",
            bad.is_empty(),
            true,
            if bad.is_empty() { "all generators preserve M".to_string() } else { format!("leave M: {}", bad.join(", ")) },
        ));
    }

    let (quadratic, _) = summary(&gens, &restricted, Generator::is_quadratic, m)?;
    let (extended, img) = summary(&gens, &restricted, |_| true, m)?;
    let names = &extended.generators;
    let commutative = Commutativity {
        commutative: img.is_commutative(),
        witness: img.noncommuting_witness().map(|(a, b)| [names[a].clone(), names[b].clone()]),
    };

    let cyclic = find_cyclic_vector(&img, CYCLIC_TRIALS, rng);
    let gram = model.chain.space.restrict_form(&model.tensor.gram());
    let form = certify_frobenius_via_form(&img, &gram, &cyclic)?;
    let probe = frobenius_gram_probe(&img, PROBE_TRIALS, rng);
    let by_form = form.is_certified();
    let by_probe = matches!(probe, ProbeVerdict::Certified { .. });
    let certified = by_form || by_probe;
    let consistent = !by_form || probe.is_frobenius() == Some(true);
    let method = if by_form {
        "form"
    } else if by_probe {
        "probe"
    } else {
        "none"
    };
    let mut eigen = joint_eigen_analysis(&img, tolerance, rng)?;
    let numeric = eigen.numeric.take();

    let equal_dims = img.dim() == m;
    let perfectly_integrable = img.is_commutative() && cyclic.found && certified && equal_dims;
    let required = inst.integrability_required();
    checks.push(CheckResult::new(
        "integrability",
        perfectly_integrable && eigen.all_eigenspaces_one,
        required,
        format!(
            "cyclic={}, frobenius={}, dim 𝔄={} vs dim M={}, eigenspaces one={}",
            cyclic.found, certified, img.dim(), m, eigen.all_eigenspaces_one
        ),
    ));
    if certified {
        let injective = !by_form || matches!(form, FormCertificate::Certified { injective: true, .. });
        let ok = cyclic.found && equal_dims && consistent && eigen.all_eigenspaces_one && eigen.blocks_consistent && injective;
        checks.push(CheckResult::new(
            "cross_implications",
            ok,
            true,
            format!(
                "Frobenius ⇒ cyclic={}, dim 𝔄 = dim M: {}, probe agrees: {}, eigenspaces one: {}, blocks consistent: {}, ξ injective: {}",
                cyclic.found, equal_dims, consistent, eigen.all_eigenspaces_one, eigen.blocks_consistent, injective
            ),
        ));
    } else {
        checks.push(CheckResult::skipped("cross_implications", "no Frobenius certificate"));
    }

    let mut notes = Vec::new();
    if inst.z.iter().any(Zero::is_zero) {
        notes.push("z contains 0: outside the standing assumptions".to_string());
    }
    if inst.include_cartan {
        notes.push("generator set includes the diagonal Cartan operators".to_string());
    }
    if inst.algebra.rank() > 1 {
        notes.push("quadratic generators only span part of the full Gaudin algebra in rank ≥ 2".to_string());
    }
    if let Some(w) = numeric.as_ref().and_then(|n| n.warning.clone()) {
        notes.push(format!("numeric warning: {w}"));
    }

    let all_checks_pass = !checks.iter().any(CheckResult::failed_required);
    Ok(Verdict {
        config_digest,
        lie_type: inst.algebra.root_system().name(),
        weights: inst.weights.clone(),
        mode: inst.mode.as_str().into(),
        chain_space: model.chain.kind,
        form_normalization: inst.form.normalization().as_str().into(),
        hamiltonian_convention: H_CONVENTION.into(),
        seed,
        generators: gens
            .iter()
            .zip(&restricted)
            .map(|(g, r)| GeneratorInfo {
                name: g.name.clone(),
                origin: g.origin.clone(),
                quadratic: g.is_quadratic(),
                preserves_chain_space: r.is_some(),
            })
            .collect(),
        dims: Dims {
            v: model.tensor.dim(),
            m,
            algebra: img.dim(),
        },
        algebras: vec![quadratic, extended],
        commutative,
        cyclic,
        frobenius: FrobeniusSummary {
            form,
            probe,
            consistent,
            method: method.to_string(),
            certified,
        },
        eigen,
        perfectly_integrable,
        checks,
        all_checks_pass,
        notes,
        numeric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutant::cyclic::seeded_rng;
    use crate::gaudin::config::GaudinConfig;

    fn run(json: &str) -> Verdict {
        let inst = GaudinConfig::from_json_str(json).unwrap().validate().unwrap();
        let model = GaudinModel::build(inst).unwrap();
        perfect_integrability_verdict(&model, "x".into(), 0, None, &mut seeded_rng(0)).unwrap()
    }

    #[test]
    fn sl2_two_sites_periodic() {
        let v = run(r#"{"algebra": {"type": "A", "rank": 1, "form": "normalized"}, "weights": [[1],[1]], "z": ["1","2"], "mode": "periodic"}"#);
        assert!(v.all_checks_pass, "{:#?}", v.checks);
        assert!(v.perfectly_integrable);
        assert_eq!(v.dims, Dims { v: 4, m: 2, algebra: 2 });
        assert!(v.eigen.all_eigenspaces_one);
        assert_eq!(v.eigen.blocks.len(), 2);
    }

    #[test]
    fn sl2_three_sites_regular() {
        let v = run(r#"{"algebra": {"type": "A", "rank": 1}, "weights": [[1],[1],[1]], "z": ["1","2","3"], "mu": {"h": ["1"]}, "mode": "regular"}"#);
        assert!(v.all_checks_pass, "{:#?}", v.checks);
        assert_eq!(v.dims, Dims { v: 8, m: 8, algebra: 8 });
    }

    #[test]
    fn single_site() {
        let v = run(r#"{"algebra": {"type": "A", "rank": 1}, "weights": [[3]], "z": ["1"], "mode": "periodic"}"#);
        assert_eq!(v.dims, Dims { v: 4, m: 1, algebra: 1 });
        assert!(v.perfectly_integrable);
    }
}
