//! Tensor products `V_{λ_1} ⊗ ··· ⊗ V_{λ_ℓ}` with site embeddings.

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::Scalar;
use crate::hw::HighestWeightModule;

#[derive(Clone, Debug)]
pub struct TensorModule {
    factors: Vec<HighestWeightModule>,
    dims: Vec<usize>,
    strides: Vec<usize>,
    dim: usize,
}

impl TensorModule {
    /// Site 0 is the most significant tensor index, matching `kron`.
    pub fn new(factors: Vec<HighestWeightModule>, cap: Option<usize>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Invalid("a tensor product needs at least one factor".into()));
        }
        let dims: Vec<usize> = factors.iter().map(HighestWeightModule::dim).collect();
        let mut dim: usize = 1;
        for &d in &dims {
            dim = dim.saturating_mul(d);
        }
        if let Some(cap) = cap {
            if dim > cap {
                return Err(Error::DimensionCap { dim, cap });
            }
        }
        let mut strides = vec![1; dims.len()];
        for a in (0..dims.len().saturating_sub(1)).rev() {
            strides[a] = strides[a + 1] * dims[a + 1];
        }
        Ok(TensorModule {
            factors,
            dims,
            strides,
            dim,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sites(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, site: usize) -> &HighestWeightModule {
        &self.factors[site]
    }

    pub fn factors(&self) -> &[HighestWeightModule] {
        &self.factors
    }

    pub fn site_dims(&self) -> &[usize] {
        &self.dims
    }

    fn digit(&self, index: usize, site: usize) -> usize {
        (index / self.strides[site]) % self.dims[site]
    }

    /// `S_{λ⃗} = ⊗ S_{λ_i}`.
    pub fn gram(&self) -> Matrix {
        let mut g = self.factors[0].gram().clone();
        for f in &self.factors[1..] {
            g = g.kron(f.gram());
        }
        g
    }

    /// Total weight of every tensor basis vector.
    pub fn basis_weights(&self) -> Vec<Vec<i64>> {
        let per_site: Vec<Vec<Vec<i64>>> = self.factors.iter().map(HighestWeightModule::basis_weights).collect();
        let r = self.factors[0].rank();
        (0..self.dim)
            .map(|i| {
                let mut w = vec![0; r];
                for (a, site) in per_site.iter().enumerate() {
                    for (x, y) in w.iter_mut().zip(&site[self.digit(i, a)]) {
                        *x += y;
                    }
                }
                w
            })
            .collect()
    }

    /// `local` acting on the listed sites (in order), identity elsewhere.
    pub fn embed_local(&self, sites: &[usize], local: &Matrix) -> Matrix {
        let local_dim: usize = sites.iter().map(|&s| self.dims[s]).product();
        assert_eq!(local.rows(), local_dim, "local operator has the wrong size");
        let encode = |index: usize| -> usize {
            sites.iter().fold(0, |acc, &s| acc * self.dims[s] + self.digit(index, s))
        };
        let mut out = Matrix::zeros(self.dim, self.dim);
        let mut column: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); local_dim];
        for (c, col) in column.iter_mut().enumerate() {
            for r in 0..local_dim {
                let v = local.get(r, c);
                if !v.is_zero() {
                    col.push((r, v.clone()));
                }
            }
        }
        for j in 0..self.dim {
            let lc = encode(j);
            let mut base = j;
            for &s in sites {
                base -= self.digit(j, s) * self.strides[s];
            }
            for (lr, v) in &column[lc] {
                let mut i = base;
                let mut rest = *lr;
                for &s in sites.iter().rev() {
                    i += (rest % self.dims[s]) * self.strides[s];
                    rest /= self.dims[s];
                }
                out.set(i, j, v.clone());
            }
        }
        out
    }

    /// `(op)_a`.
    pub fn embed(&self, site: usize, op: &Matrix) -> Matrix {
        self.embed_local(&[site], op)
    }

    /// `(X)_a` for `X` with Chevalley coordinates `x`.
    pub fn site_action(&self, site: usize, x: &[Scalar]) -> Matrix {
        self.embed(site, &self.factors[site].act(x))
    }

    /// `Δ(x) = Σ_a (x)_a`.
    pub fn diagonal(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for a in 0..self.sites() {
            m.add_scaled(&Scalar::from_integer(1.into()), &self.site_action(a, x));
        }
        m
    }

    /// `Δ` of the basis element `idx`.
    pub fn diagonal_basis(&self, idx: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for a in 0..self.sites() {
            m.add_scaled(&Scalar::from_integer(1.into()), &self.embed(a, self.factors[a].action(idx)));
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hw::build_irrep;
    use crate::lie::chevalley::ChevalleyAlgebra;
    use crate::lie::roots::LieType;

    fn sl2_tensor(weights: &[i64]) -> (ChevalleyAlgebra, TensorModule) {
        let alg = ChevalleyAlgebra::build(LieType::A, 1).unwrap();
        let factors = weights.iter().map(|&w| build_irrep(&alg, &[w], 400).unwrap()).collect();
        let t = TensorModule::new(factors, None).unwrap();
        (alg, t)
    }

    #[test]
    fn embeddings_match_kron() {
        let (alg, t) = sl2_tensor(&[1, 2]);
        let e = alg.e(0);
        let (e1, e2) = (t.factor(0).action(e), t.factor(1).action(e));
        assert_eq!(t.embed(0, e1), e1.kron(&Matrix::identity(3)));
        assert_eq!(t.embed(1, e2), Matrix::identity(2).kron(e2));
        let pair = e1.kron(e2);
        assert_eq!(t.embed_local(&[0, 1], &pair), pair);
        // reversed site order swaps the tensor legs
        let swapped = e2.kron(e1);
        assert_eq!(t.embed_local(&[1, 0], &swapped), pair);
    }

    #[test]
    fn sites_commute() {
        let (alg, t) = sl2_tensor(&[1, 1, 2]);
        for x in 0..alg.dim() {
            for y in 0..alg.dim() {
                let a = t.embed(0, t.factor(0).action(x));
                let b = t.embed(2, t.factor(2).action(y));
                assert!(a.commutator(&b).is_zero());
            }
        }
    }

    #[test]
    fn gram_and_weights() {
        let (_, t) = sl2_tensor(&[1, 1]);
        assert_eq!(t.dim(), 4);
        assert_eq!(t.gram(), Matrix::identity(4));
        assert_eq!(t.basis_weights(), vec![vec![2], vec![0], vec![0], vec![-2]]);
        assert!(matches!(
            TensorModule::new(t.factors().to_vec(), Some(3)),
            Err(Error::DimensionCap { dim: 4, cap: 3 })
        ));
    }
}
