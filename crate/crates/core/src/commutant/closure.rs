//! Unital matrix algebras generated by a list of operators.

use std::collections::VecDeque;

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::Scalar;
use crate::exact::subspace::{EchelonSpan, Subspace};

/// Basis of the algebra generated by some operators, first element the
/// identity.
#[derive(Clone, Debug)]
pub struct AlgebraImage {
    n: usize,
    basis: Vec<Matrix>,
    /// How each basis element arose: a generator index applied to an
    /// earlier basis element (`None` for the identity).
    provenance: Vec<Option<(usize, usize)>>,
    coords: Subspace,
    noncommuting: Option<(usize, usize)>,
}

/// Span saturation: multiply basis elements by generators until no product
/// leaves the span.
pub fn close_algebra(n: usize, generators: &[Matrix]) -> Result<AlgebraImage> {
    for g in generators {
        if g.rows() != n || g.cols() != n {
            return Err(Error::Shape(format!("generator is {}x{}, expected {n}x{n}", g.rows(), g.cols())));
        }
    }
    let mut noncommuting = None;
    'outer: for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            if !generators[i].commutator(&generators[j]).is_zero() {
                noncommuting = Some((i, j));
                break 'outer;
            }
        }
    }
    let mut span = EchelonSpan::new();
    let mut basis = Vec::new();
    let mut provenance = Vec::new();
    let id = Matrix::identity(n);
    if n > 0 {
        span.insert(&id.flatten());
    }
    basis.push(id);
    provenance.push(None);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(b) = queue.pop_front() {
        for (g, gen) in generators.iter().enumerate() {
            let product = gen.matmul(&basis[b]);
            if span.insert(&product.flatten()) {
                queue.push_back(basis.len());
                basis.push(product);
                provenance.push(Some((g, b)));
            }
        }
    }
    let flat: Vec<Vec<Scalar>> = basis.iter().map(Matrix::flatten).collect();
    let coords = Subspace::from_vectors(n * n, &flat)?;
    Ok(AlgebraImage {
        n,
        basis,
        provenance,
        coords,
        noncommuting,
    })
}

impl AlgebraImage {
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn provenance(&self) -> &[Option<(usize, usize)>] {
        &self.provenance
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting.is_none()
    }

    /// Generator pair with nonzero commutator, if any.
    pub fn noncommuting_witness(&self) -> Option<(usize, usize)> {
        self.noncommuting
    }

    /// Coordinates of `m` in the basis, `None` when outside the algebra.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.coords.coordinates(&m.flatten())
    }

    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                m.add_scaled(c, b);
            }
        }
        m
    }

    /// `c[i][j]` = coordinates of `b_i b_j`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| {
                        self.coordinates(&self.basis[i].matmul(&self.basis[j]))
                            .expect("algebra is closed under products")
                    })
                    .collect()
            })
            .collect()
    }

    /// Number of basis pairs that fail to commute.
    pub fn commutativity_defects(&self) -> usize {
        let d = self.dim();
        let mut bad = 0;
        for i in 0..d {
            for j in i + 1..d {
                if !self.basis[i].commutator(&self.basis[j]).is_zero() {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Images `b·v` of all basis elements, as columns.
    pub fn orbit_matrix(&self, v: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.mul_vec(v)).collect();
        Matrix::from_columns(self.n, &cols)
    }
}
