//! Finite-dimensional irreducible highest-weight modules.

pub mod engine;
pub mod verma;

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::{self, Scalar};
use crate::lie::chevalley::{extend_root_vectors, ChevalleyAlgebra};
use crate::lie::form::InvariantForm;
use crate::lie::roots::LieType;

pub use engine::{parse_word, word_label, Word};

/// Bumped whenever the on-disk layout of [`ModuleJson`] changes.
pub const FORMAT_VERSION: u32 = 1;

pub const DEFAULT_DIM_CAP: usize = 400;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpace {
    pub weight: Vec<i64>,
    pub labels: Vec<Word>,
    pub offset: usize,
    pub gram: Matrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HighestWeightModule {
    lie_type: LieType,
    rank: usize,
    highest_weight: Vec<i64>,
    spaces: Vec<WeightSpace>,
    /// Matrices of all Chevalley basis elements, in algebra order.
    actions: Vec<Matrix>,
    gram: Matrix,
}

/// Builds `V_λ`; fails with [`Error::DimensionCap`] past `cap`.
pub fn build_irrep(alg: &ChevalleyAlgebra, highest_weight: &[i64], cap: usize) -> Result<HighestWeightModule> {
    let rs = alg.root_system();
    if highest_weight.len() != rs.rank() {
        return Err(Error::Shape(format!(
            "highest weight has {} entries, rank is {}",
            highest_weight.len(),
            rs.rank()
        )));
    }
    let blocks = engine::build_blocks(rs, highest_weight, cap)?;
    let (e, f, h) = blocks.simple_generators();
    let (es, fs) = extend_root_vectors(rs, alg.recipes(), &e, &f);
    let mut actions = Vec::with_capacity(alg.dim());
    actions.extend(es);
    actions.extend(h);
    actions.extend(fs);
    let offsets = blocks.offsets();
    let gram = blocks.full_gram();
    let spaces = (0..blocks.weights.len())
        .map(|w| WeightSpace {
            weight: blocks.weights[w].clone(),
            labels: blocks.labels[w].clone(),
            offset: offsets[w],
            gram: blocks.grams[w].clone(),
        })
        .collect();
    Ok(HighestWeightModule {
        lie_type: rs.lie_type(),
        rank: rs.rank(),
        highest_weight: highest_weight.to_vec(),
        spaces,
        actions,
        gram,
    })
}

impl HighestWeightModule {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn highest_weight(&self) -> &[i64] {
        &self.highest_weight
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn weight_spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    pub fn action(&self, basis: usize) -> &Matrix {
        &self.actions[basis]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Block-diagonal Shapovalov Gram matrix.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Weight of each basis vector, in order.
    pub fn basis_weights(&self) -> Vec<Vec<i64>> {
        self.spaces
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.weight.clone(), s.labels.len()))
            .collect()
    }

    /// Matrix of the element with coordinates `x` in the Chevalley basis.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (c, a) in x.iter().zip(&self.actions) {
            if !c.is_zero() {
                m.add_scaled(c, a);
            }
        }
        m
    }

    /// `Σ_{a,b} Ω_ab X_a X_b` for the canonical element of `form`.
    pub fn casimir_matrix(&self, form: &InvariantForm) -> Matrix {
        let omega = form.canonical_element();
        let n = self.dim();
        let mut c = Matrix::zeros(n, n);
        for a in 0..omega.rows() {
            for b in 0..omega.cols() {
                let w = omega.get(a, b);
                if !w.is_zero() {
                    c.add_scaled(w, &self.actions[a].matmul(&self.actions[b]));
                }
            }
        }
        c
    }

    /// Number of algebra basis pairs whose commutator in this module does
    /// not match the structure constants.
    pub fn representation_defects(&self, alg: &ChevalleyAlgebra) -> usize {
        alg.verify_against_representation(&self.actions)
    }

    /// Checks `G·X = ϖ(X)ᵀ·G` for every basis element.
    pub fn adjointness_defects(&self, alg: &ChevalleyAlgebra) -> usize {
        let w = alg.cartan_antiinvolution();
        (0..alg.dim())
            .filter(|&x| {
                let (t, s) = w.image(x);
                let lhs = self.gram.matmul(&self.actions[x]);
                let rhs = self.actions[t].transpose().matmul(&self.gram).scale(s);
                lhs != rhs
            })
            .count()
    }

    pub fn to_json(&self, alg: &ChevalleyAlgebra, form: &InvariantForm) -> ModuleJson {
        let casimir = self.casimir_matrix(form).as_scalar().map(|c| scalar::format(&c));
        ModuleJson {
            format_version: FORMAT_VERSION,
            lie_type: self.lie_type,
            rank: self.rank,
            highest_weight: self.highest_weight.clone(),
            form: form.normalization().as_str().to_string(),
            dim: self.dim(),
            weights: self
                .spaces
                .iter()
                .map(|s| WeightJson {
                    weight: s.weight.clone(),
                    labels: s.labels.iter().map(|w| word_label(w)).collect(),
                    gram: s.gram.clone(),
                })
                .collect(),
            actions: (0..alg.dim())
                .map(|i| (alg.label_name(i), self.actions[i].clone()))
                .collect(),
            casimir,
        }
    }

    pub fn from_json(alg: &ChevalleyAlgebra, json: &ModuleJson) -> Result<Self> {
        if json.format_version != FORMAT_VERSION {
            return Err(Error::Invalid(format!(
                "cache format {} does not match {}",
                json.format_version, FORMAT_VERSION
            )));
        }
        if json.lie_type != alg.root_system().lie_type() || json.rank != alg.rank() {
            return Err(Error::Invalid("cached module belongs to another algebra".into()));
        }
        let mut offset = 0;
        let mut spaces = Vec::with_capacity(json.weights.len());
        for w in &json.weights {
            let labels = w.labels.iter().map(|l| parse_word(l)).collect::<Result<Vec<_>>>()?;
            if w.gram.rows() != labels.len() || w.gram.cols() != labels.len() {
                return Err(Error::Shape("weight-space Gram does not match its labels".into()));
            }
            spaces.push(WeightSpace {
                weight: w.weight.clone(),
                labels,
                offset,
                gram: w.gram.clone(),
            });
            offset += w.labels.len();
        }
        if offset != json.dim {
            return Err(Error::Shape(format!("weight spaces sum to {offset}, expected {}", json.dim)));
        }
        let mut actions = vec![None; alg.dim()];
        for (label, m) in &json.actions {
            let idx = alg.parse_label(label)?;
            if m.rows() != offset || m.cols() != offset {
                return Err(Error::Shape(format!("action of {label} has the wrong size")));
            }
            actions[idx] = Some(m.clone());
        }
        let actions = actions
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::Invalid(format!("missing action of {}", alg.label_name(i)))))
            .collect::<Result<Vec<_>>>()?;
        let mut gram = Matrix::zeros(offset, offset);
        for s in &spaces {
            for r in 0..s.labels.len() {
                for c in 0..s.labels.len() {
                    gram.set(s.offset + r, s.offset + c, s.gram.get(r, c).clone());
                }
            }
        }
        Ok(HighestWeightModule {
            lie_type: json.lie_type,
            rank: json.rank,
            highest_weight: json.highest_weight.clone(),
            spaces,
            actions,
            gram,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightJson {
    pub weight: Vec<i64>,
    pub labels: Vec<String>,
    pub gram: Matrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub format_version: u32,
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub highest_weight: Vec<i64>,
    pub form: String,
    pub dim: usize,
    pub weights: Vec<WeightJson>,
    pub actions: BTreeMap<String, Matrix>,
    pub casimir: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::form::FormNormalization;

    fn module(t: LieType, r: usize, w: &[i64]) -> (ChevalleyAlgebra, HighestWeightModule) {
        let alg = ChevalleyAlgebra::build(t, r).unwrap();
        let m = build_irrep(&alg, w, DEFAULT_DIM_CAP).unwrap();
        (alg, m)
    }

    #[test]
    fn trivial_module() {
        let (_, m) = module(LieType::A, 1, &[0]);
        assert_eq!(m.dim(), 1);
        assert!(m.actions().iter().all(Matrix::is_zero));
    }

    #[test]
    fn casimir_scalars() {
        let (alg, m) = module(LieType::A, 1, &[1]);
        let trace = InvariantForm::new(&alg, FormNormalization::Normalized).unwrap();
        let killing = InvariantForm::new(&alg, FormNormalization::Killing).unwrap();
        assert_eq!(m.casimir_matrix(&trace).as_scalar(), Some(scalar::ratio(3, 2)));
        assert_eq!(m.casimir_matrix(&killing).as_scalar(), Some(scalar::ratio(3, 8)));
        let (alg0, m0) = module(LieType::A, 1, &[0]);
        let k0 = InvariantForm::new(&alg0, FormNormalization::Killing).unwrap();
        assert!(m0.casimir_matrix(&k0).is_zero());
    }

    #[test]
    fn module_invariants_grid() {
        for (t, r, w) in [
            (LieType::A, 1, vec![3]),
            (LieType::A, 2, vec![1, 1]),
            (LieType::B, 2, vec![1, 1]),
            (LieType::C, 3, vec![0, 1, 0]),
            (LieType::G, 2, vec![1, 0]),
            (LieType::G, 2, vec![0, 1]),
        ] {
            let (alg, m) = module(t, r, &w);
            let rs = alg.root_system();
            assert_eq!(scalar::int(m.dim() as i64), rs.weyl_dimension(&w).unwrap(), "{t}{r} {w:?}");
            assert_eq!(m.representation_defects(&alg), 0, "{t}{r} {w:?}");
            assert_eq!(m.adjointness_defects(&alg), 0, "{t}{r} {w:?}");
            assert_eq!(m.weight_spaces()[0].gram, Matrix::identity(1));
            let form = InvariantForm::new(&alg, FormNormalization::Killing).unwrap();
            assert!(m.casimir_matrix(&form).as_scalar().is_some(), "{t}{r} {w:?}");
            for s in m.weight_spaces() {
                assert!(s.gram.is_symmetric());
                assert!(s.gram.determinant().unwrap() > Scalar::zero());
                assert_eq!(s.gram, verma::gram_of_words(rs, &w, &s.labels));
            }
        }
    }

    #[test]
    fn g2_short_fundamental_is_seven() {
        let (_, m) = module(LieType::G, 2, &[1, 0]);
        assert_eq!(m.dim(), 7);
    }

    #[test]
    fn json_round_trip() {
        let (alg, m) = module(LieType::B, 2, &[1, 0]);
        let form = InvariantForm::new(&alg, FormNormalization::Normalized).unwrap();
        let json = m.to_json(&alg, &form);
        let text = serde_json::to_string(&json).unwrap();
        let back: ModuleJson = serde_json::from_str(&text).unwrap();
        assert_eq!(HighestWeightModule::from_json(&alg, &back).unwrap(), m);
        let mut stale = back.clone();
        stale.format_version += 1;
        assert!(HighestWeightModule::from_json(&alg, &stale).is_err());
    }

    #[test]
    fn cap_is_a_resource_error() {
        let alg = ChevalleyAlgebra::build(LieType::A, 2).unwrap();
        match build_irrep(&alg, &[3, 3], 20) {
            Err(Error::DimensionCap { cap: 20, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
