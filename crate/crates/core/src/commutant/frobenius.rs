//! Frobenius certification: via an invariant form on the module, and via
//! the Gram matrix `λ(b_i b_j)` of a functional on the algebra.

use num::Zero;
use rand::Rng;
use serde::Serialize;

use super::closure::AlgebraImage;
use super::cyclic::{random_vector, CyclicReport};
use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::poly::MultiPoly;
use crate::exact::scalar::{self, Scalar};

/// Largest algebra dimension for which the `λ`-Gram determinant is expanded
/// symbolically.
pub const SYMBOLIC_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Nondegenerate,
    Invariant,
    Cyclic,
    InducedGram,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FormCertificate {
    Certified {
        #[serde(with = "crate::exact::scalar::serde_scalar_vec")]
        cyclic_vector: Vec<Scalar>,
        /// `(a v⁺ | b v⁺)` on the algebra basis.
        induced_gram: Matrix,
        #[serde(with = "crate::exact::scalar::serde_scalar")]
        determinant: Scalar,
        /// `rank [b_i v⁺] = dim 𝔄`, i.e. `a ↦ a v⁺` is injective.
        injective: bool,
    },
    Refused {
        hypothesis: Hypothesis,
        detail: String,
    },
}

impl FormCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, FormCertificate::Certified { .. })
    }
}

/// Checks that `gram` is nondegenerate and invariant (`bᵀG = Gb`), that a
/// cyclic vector `v⁺` exists, and that `(a v⁺ | b v⁺)` is nondegenerate.
pub fn certify_frobenius_via_form(alg: &AlgebraImage, gram: &Matrix, cyclic: &CyclicReport) -> Result<FormCertificate> {
    if !gram.is_symmetric() {
        return Err(Error::Asymmetric);
    }
    if gram.rows() != alg.ambient_dim() {
        return Err(Error::Shape("Gram matrix does not match the module".into()));
    }
    let refuse = |hypothesis, detail: String| Ok(FormCertificate::Refused { hypothesis, detail });
    let rank = gram.rank();
    if rank < gram.rows() {
        return refuse(Hypothesis::Nondegenerate, format!("form has rank {rank} < {}", gram.rows()));
    }
    for (i, b) in alg.basis().iter().enumerate() {
        if b.transpose().matmul(gram) != gram.matmul(b) {
            return refuse(Hypothesis::Invariant, format!("basis element {i} is not self-adjoint"));
        }
    }
    let Some(v) = cyclic.vector.clone() else {
        return refuse(
            Hypothesis::Cyclic,
            cyclic
                .obstruction
                .clone()
                .unwrap_or_else(|| format!("no cyclic vector in {} trials (max rank {})", cyclic.trials, cyclic.max_rank)),
        );
    };
    let orbit = alg.orbit_matrix(&v);
    let injective = orbit.rank() == alg.dim();
    let induced = orbit.transpose().matmul(gram).matmul(&orbit);
    let det = induced.determinant()?;
    if det.is_zero() {
        return refuse(Hypothesis::InducedGram, "induced Gram on 𝔄 is singular".into());
    }
    Ok(FormCertificate::Certified {
        cyclic_vector: v,
        induced_gram: induced,
        determinant: det,
        injective,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ProbeVerdict {
    /// A sampled functional has nondegenerate Gram.
    Certified {
        #[serde(with = "crate::exact::scalar::serde_scalar_vec")]
        functional: Vec<Scalar>,
        #[serde(with = "crate::exact::scalar::serde_scalar")]
        determinant: Scalar,
        trials: usize,
    },
    /// The symbolic determinant vanishes identically.
    NotFrobenius { method: String },
    /// Symbolically nonzero, but no sample hit a nonzero value.
    FrobeniusUnsampled { trials: usize },
    /// All samples singular and the algebra is too large for the symbolic
    /// check.
    ProbablyNot { trials: usize },
}

impl ProbeVerdict {
    pub fn is_frobenius(&self) -> Option<bool> {
        match self {
            ProbeVerdict::Certified { .. } | ProbeVerdict::FrobeniusUnsampled { .. } => Some(true),
            ProbeVerdict::NotFrobenius { .. } => Some(false),
            ProbeVerdict::ProbablyNot { .. } => None,
        }
    }
}

/// `λ(b_i b_j) = Σ_k c_ijk λ_k`.
pub fn lambda_gram(constants: &[Vec<Vec<Scalar>>], lambda: &[Scalar]) -> Matrix {
    let d = constants.len();
    Matrix::from_fn(d, d, |i, j| constants[i][j].iter().zip(lambda).map(|(c, l)| c * l).sum())
}

/// `det λ(b_i b_j)` as a polynomial in the coordinates of `λ`.
pub fn symbolic_lambda_determinant(constants: &[Vec<Vec<Scalar>>]) -> MultiPoly {
    let d = constants.len();
    let entries: Vec<Vec<MultiPoly>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    constants[i][j].iter().enumerate().fold(MultiPoly::zero(), |acc, (k, c)| {
                        if c.is_zero() {
                            acc
                        } else {
                            acc.add(&MultiPoly::var(d, k).scale(c))
                        }
                    })
                })
                .collect()
        })
        .collect();
    MultiPoly::determinant(&entries)
}

pub fn frobenius_gram_probe(alg: &AlgebraImage, trials: usize, rng: &mut impl Rng) -> ProbeVerdict {
    let constants = alg.structure_constants();
    let d = alg.dim();
    for t in 1..=trials {
        let lambda = random_vector(rng, d);
        let det = lambda_gram(&constants, &lambda).determinant().expect("square");
        if !det.is_zero() {
            return ProbeVerdict::Certified {
                functional: lambda,
                determinant: det,
                trials: t,
            };
        }
    }
    if d <= SYMBOLIC_LIMIT {
        if symbolic_lambda_determinant(&constants).is_zero() {
            ProbeVerdict::NotFrobenius {
                method: format!("symbolic {d}x{d} determinant"),
            }
        } else {
            ProbeVerdict::FrobeniusUnsampled { trials }
        }
    } else {
        ProbeVerdict::ProbablyNot { trials }
    }
}

/// Basis of the symmetric forms `G` on the module with `bᵀG = Gb` for all
/// basis elements `b`.
pub fn invariant_symmetric_forms(alg: &AlgebraImage) -> Vec<Matrix> {
    let n = alg.ambient_dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let unit = |k: usize| {
        let (i, j) = pairs[k];
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, scalar::int(1));
        m.set(j, i, scalar::int(1));
        m
    };
    let mut columns = Vec::with_capacity(pairs.len());
    for k in 0..pairs.len() {
        let g = unit(k);
        let mut col = Vec::new();
        for b in alg.basis() {
            let defect = &b.transpose().matmul(&g) - &g.matmul(b);
            col.extend(defect.flatten());
        }
        columns.push(col);
    }
    let rows = columns.first().map_or(0, Vec::len);
    let system = Matrix::from_columns(rows, &columns);
    system
        .kernel_basis()
        .into_iter()
        .map(|x| {
            let mut g = Matrix::zeros(n, n);
            for (k, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    g.add_scaled(c, &unit(k));
                }
            }
            g
        })
        .collect()
}

/// Determinant of `Σ t_k G_k` as a polynomial in the `t_k`; `None` past
/// the symbolic limit.
pub fn generic_form_determinant(forms: &[Matrix]) -> Option<MultiPoly> {
    let Some(first) = forms.first() else {
        return Some(MultiPoly::zero());
    };
    let n = first.rows();
    if n > SYMBOLIC_LIMIT || forms.len() > 2 * SYMBOLIC_LIMIT {
        return None;
    }
    let k = forms.len();
    let entries: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    forms.iter().enumerate().fold(MultiPoly::zero(), |acc, (t, g)| {
                        let c = g.get(i, j);
                        if c.is_zero() {
                            acc
                        } else {
                            acc.add(&MultiPoly::var(k, t).scale(c))
                        }
                    })
                })
                .collect()
        })
        .collect();
    Some(MultiPoly::determinant(&entries))
}
