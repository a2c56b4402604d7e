//! Invariant symmetric bilinear forms on a Chevalley algebra.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::{Deserialize, Serialize};

use super::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::Scalar;

/// `Killing` is `tr(ad x ad y)`. `Normalized` rescales it so that long
/// roots have `(θ, θ) = 2`; for `sl_n` this is the trace form of the
/// defining representation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormNormalization {
    #[default]
    Killing,
    Normalized,
}

impl FormNormalization {
    pub fn as_str(self) -> &'static str {
        match self {
            FormNormalization::Killing => "killing",
            FormNormalization::Normalized => "normalized",
        }
    }
}

impl fmt::Display for FormNormalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormNormalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "killing" => Ok(FormNormalization::Killing),
            "normalized" | "trace" => Ok(FormNormalization::Normalized),
            _ => Err(Error::Parse(format!("unknown form normalization `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantForm {
    normalization: FormNormalization,
    gram: Matrix,
    inverse: Matrix,
}

impl InvariantForm {
    pub fn new(alg: &ChevalleyAlgebra, normalization: FormNormalization) -> Result<Self> {
        let killing = alg.killing_gram();
        let gram = match normalization {
            FormNormalization::Killing => killing.clone(),
            FormNormalization::Normalized => {
                let theta = alg.num_positive() - 1;
                let k = killing.get(alg.e(theta), alg.f(theta)).clone();
                if k.is_zero() {
                    return Err(Error::Internal("Killing form degenerate on the highest root".into()));
                }
                killing.scale(&(Scalar::from_integer(1.into()) / k))
            }
        };
        let inverse = gram
            .inverse()
            .ok_or_else(|| Error::Internal("invariant form is degenerate".into()))?;
        Ok(InvariantForm {
            normalization,
            gram,
            inverse,
        })
    }

    pub fn normalization(&self) -> FormNormalization {
        self.normalization
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    /// Coordinates of the dual basis: `X^a` is column `a` of the result.
    pub fn dual_bases(&self) -> Matrix {
        self.inverse.clone()
    }

    /// `Ω = Σ_a X_a ⊗ X^a` as the coefficient matrix `Ω[a][b]` of
    /// `X_a ⊗ X_b`.
    pub fn canonical_element(&self) -> Matrix {
        self.inverse.transpose()
    }
}
