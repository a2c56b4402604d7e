//! Subspaces of `ℚⁿ` given by column bases.

use num::Zero;

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A subspace with a fixed, linearly independent column basis and a
/// coordinate map onto it.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivot_rows: Vec<usize>,
    pivot_inverse: Matrix,
}

impl Subspace {
    /// `basis` is `n × k` with independent columns.
    pub fn new(basis: Matrix) -> Result<Self> {
        let k = basis.cols();
        let pivot_rows = basis.transpose().rref().pivots;
        if pivot_rows.len() != k {
            return Err(Error::Invalid(format!(
                "subspace basis has rank {} < {k}",
                pivot_rows.len()
            )));
        }
        let pivot_inverse = basis
            .select_rows(&pivot_rows)
            .inverse()
            .ok_or_else(|| Error::Internal("pivot block not invertible".into()))?;
        Ok(Subspace {
            basis,
            pivot_rows,
            pivot_inverse,
        })
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        Self::new(Matrix::from_columns(ambient, vectors))
    }

    pub fn full(n: usize) -> Self {
        Self::new(Matrix::identity(n)).expect("identity basis")
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Coordinates of `v` in the basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let picked: Vec<Scalar> = self.pivot_rows.iter().map(|&i| v[i].clone()).collect();
        let x = self.pivot_inverse.mul_vec(&picked);
        (self.basis.mul_vec(&x) == v).then_some(x)
    }

    /// Matrix of `op` on this subspace. Fails with the residual size when the
    /// subspace is not `op`-invariant.
    pub fn restrict(&self, op: &Matrix) -> std::result::Result<Matrix, Residual> {
        let image = op.matmul(&self.basis);
        let restricted = self
            .pivot_inverse
            .matmul(&image.select_rows(&self.pivot_rows));
        let residual = &image - &self.basis.matmul(&restricted);
        if residual.is_zero() {
            Ok(restricted)
        } else {
            Err(Residual {
                nonzero_entries: residual.nnz(),
            })
        }
    }

    /// Gram matrix `Bᵀ·G·B` of a bilinear form restricted to the subspace.
    pub fn restrict_form(&self, gram: &Matrix) -> Matrix {
        self.basis.transpose().matmul(&gram.matmul(&self.basis))
    }

    /// Expresses a subspace-local vector in ambient coordinates.
    pub fn embed(&self, local: &[Scalar]) -> Vec<Scalar> {
        self.basis.mul_vec(local)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        intersect(&self.basis, &other.basis)
    }
}

/// A nonzero remainder `op·B − B·R` from a failed restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residual {
    pub nonzero_entries: usize,
}

/// Joint kernel of square operators on `ℚⁿ`.
pub fn joint_kernel(n: usize, ops: &[Matrix]) -> Subspace {
    if ops.is_empty() {
        return Subspace::full(n);
    }
    let stacked = ops
        .iter()
        .skip(1)
        .fold(ops[0].clone(), |acc, op| acc.vstack(op));
    let kernel = stacked.kernel_basis();
    Subspace::from_vectors(n, &kernel).expect("kernel basis is independent")
}

/// Intersection of the column spans of `a` and `b`.
pub fn intersect(a: &Matrix, b: &Matrix) -> Subspace {
    let n = a.rows();
    let combined = a.hstack(&b.scale(&-Scalar::from_integer(1.into())));
    let kernel = combined.kernel_basis();
    let vectors: Vec<Vec<Scalar>> = kernel
        .iter()
        .map(|x| a.mul_vec(&x[..a.cols()]))
        .collect();
    // The images are independent when `a` has independent columns; reduce
    // anyway so callers may pass spanning sets.
    let basis = independent_subset(&vectors);
    Subspace::from_vectors(n, &basis).expect("independent subset")
}

/// Greedy maximal independent subset, preserving order.
pub fn independent_subset(vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut span = EchelonSpan::new();
    vectors
        .iter()
        .filter(|v| span.insert(v))
        .cloned()
        .collect()
}

/// Incrementally grown span used for membership tests.
#[derive(Clone, Debug, Default)]
pub struct EchelonSpan {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (p, w) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(w) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `true` when it was independent of the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        let normalized = r.into_iter().map(|x| x / &lead).collect();
        self.rows.push((p, normalized));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    #[test]
    fn restriction_of_invariant_subspace() {
        // span{e0, e1} is invariant under an upper block-triangular operator.
        let op = Matrix::from_i64(&[&[1, 2, 3], &[0, 4, 5], &[0, 0, 6]]);
        let sub = Subspace::from_vectors(3, &[vec![int(1), int(0), int(0)], vec![int(1), int(1), int(0)]])
            .unwrap();
        let r = sub.restrict(&op).unwrap();
        assert_eq!(sub.basis().matmul(&r), op.matmul(sub.basis()));
        let bad = Subspace::from_vectors(3, &[vec![int(0), int(0), int(1)]]).unwrap();
        assert!(bad.restrict(&op).is_err());
    }

    #[test]
    fn coordinates_and_intersection() {
        let a = Subspace::from_vectors(3, &[vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]])
            .unwrap();
        let b = Subspace::from_vectors(3, &[vec![int(0), int(1), int(1)], vec![int(1), int(1), int(0)]])
            .unwrap();
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        let v = c.basis().column(0);
        assert!(a.coordinates(&v).is_some() && b.coordinates(&v).is_some());
        assert!(a.coordinates(&[int(0), int(0), int(1)]).is_none());
    }

    #[test]
    fn joint_kernel_of_two_ops() {
        let x = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let y = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(joint_kernel(3, &[x, y]).dim(), 1);
        assert_eq!(joint_kernel(3, &[]).dim(), 3);
    }
}
