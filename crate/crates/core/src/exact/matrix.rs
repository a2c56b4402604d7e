//! Dense row-major matrices over [`Scalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn scalar(n: usize, value: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = value.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| scalar::int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `Some(c)` when the matrix equals `c·Id`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            Scalar::zero()
        } else {
            self.get(0, 0).clone()
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expected_zero = i != j;
                let x = self.get(i, j);
                if (expected_zero && !x.is_zero()) || (!expected_zero && *x != c) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| if x.is_zero() { x.clone() } else { x * c })
                .collect(),
        }
    }

    /// `self += c · other`, skipping zero entries.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Product skipping zero entries of both factors.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul shape");
        let (n, m) = (self.rows, other.cols);
        let mut out = Matrix::zeros(n, m);
        // nonzero pattern of `other`, row by row
        let pattern: Vec<Vec<usize>> = (0..other.rows)
            .map(|k| (0..m).filter(|&j| !other.get(k, j).is_zero()).collect())
            .collect();
        for i in 0..n {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() || pattern[k].is_empty() {
                    continue;
                }
                for &j in &pattern[k] {
                    let prod = a * other.get(k, j);
                    out.data[i * m + j] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "mul_vec shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack shape");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack shape");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Reduced row echelon form by fraction-free elimination.
    ///
    /// Rows are cleared to primitive integer vectors, eliminated with
    /// cross-multiplication, and re-primitivised after every update; the
    /// pivot is the first nonzero entry in the column.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r);
            let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
            for row in head.iter_mut().chain(tail.iter_mut()) {
                if row[c].is_zero() {
                    continue;
                }
                let g = pivot_row[c].gcd(&row[c]);
                let mul_self = &pivot_row[c] / &g;
                let mul_pivot = &row[c] / &g;
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    let nx = &*x * &mul_self - y * &mul_pivot;
                    *x = nx;
                }
                make_primitive(row);
            }
            pivots.push(c);
            r += 1;
        }
        let mut reduced = Matrix::zeros(self.rows, self.cols);
        for (k, &c) in pivots.iter().enumerate() {
            let lead = rows[k][c].clone();
            for j in 0..self.cols {
                if !rows[k][j].is_zero() {
                    reduced.set(k, j, Scalar::new(rows[k][j].clone(), lead.clone()));
                }
            }
        }
        Rref {
            reduced,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(k, f).clone();
                }
                v
            })
            .collect()
    }

    /// Determinant by the Bareiss recurrence on the integer-cleared matrix.
    pub fn determinant(&self) -> Result<Scalar> {
        self.require_square()?;
        let n = self.rows;
        let mut scale = Scalar::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let (row, l) = integer_row_with_scale(self.row(i));
                scale *= Scalar::from_integer(l);
                row
            })
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = if n == 0 { BigInt::one() } else { prev };
        let det = Scalar::from_integer(det) / scale;
        Ok(if sign < 0 { -det } else { det })
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let Rref {
            reduced, rank, pivots, ..
        } = self.hstack(&Matrix::identity(n)).rref();
        if rank < n || pivots.iter().take(n).enumerate().any(|(k, &p)| k != p) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    /// Solves `self · X = rhs`; `None` when inconsistent. Free variables are
    /// set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve shape");
        let n = self.cols;
        let Rref {
            reduced, pivots, ..
        } = self.hstack(rhs).rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zeros(n, rhs.cols);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, reduced.get(k, n + j).clone());
            }
        }
        Some(x)
    }

    /// Characteristic polynomial `det(t·I − self)` by the Faddeev–LeVerrier
    /// recurrence (monic, degree `rows`).
    pub fn char_poly(&self) -> Result<Poly> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I
            let mut next = self.matmul(&m);
            let c = &coeffs[n - k + 1];
            for i in 0..n {
                *next.get_mut(i, i) += c;
            }
            let t = self.matmul(&next).trace();
            coeffs[n - k] = -t / scalar::int(k as i64);
            m = next;
        }
        Ok(Poly::new(coeffs))
    }

    /// Evaluates `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> Result<Matrix> {
        self.require_square()?;
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = self.matmul(&acc);
            for i in 0..n {
                *acc.get_mut(i, i) += c;
            }
        }
        Ok(acc)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(scalar::to_f64).collect()
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

/// Scales a rational row to a primitive integer row.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    integer_row_with_scale(row).0
}

/// Returns `(ints, l)` with `ints = l·row` for a positive rational `l`
/// represented by its integer numerator when the row was cleared only by
/// denominators. The content is not removed, so `l` is exact.
fn integer_row_with_scale(row: &[Scalar]) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for x in row {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    let ints = row
        .iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                x.numer() * (&l / x.denom())
            }
        })
        .collect();
    (ints, l)
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

/// `true` when the vectors are linearly independent.
pub fn independent(vectors: &[Vec<Scalar>]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    Matrix::from_rows(vectors.to_vec()).rank() == vectors.len()
}

/// Dot product.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    #[serde(with = "super::scalar::serde_scalar_vec")]
    entries: Vec<Scalar>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(de)?;
        Matrix::from_vec(repr.rows, repr.cols, repr.entries).map_err(serde::de::Error::custom)
    }
}

/// Sign-aware helper used by reports: largest absolute entry.
pub fn max_abs(m: &Matrix) -> Scalar {
    m.entries()
        .iter()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(Scalar::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, ratio};
    use proptest::prelude::*;

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::from_vec(r, c, v.into_iter().map(int).collect()).unwrap()
            })
        })
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(2);
        let r = id.rref();
        assert_eq!((r.reduced, r.rank, r.pivots), (id.clone(), 2, vec![0, 1]));

        let z = Matrix::zeros(2, 2);
        let r = z.rref();
        assert_eq!((r.reduced, r.rank, r.pivots), (z, 0, vec![]));

        // Hand reduction: R2 ← R2 − 2·R1 leaves [[1,2],[0,0]].
        let r = Matrix::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_with_fractions() {
        let m = Matrix::from_rows(vec![
            vec![ratio(1, 2), int(1), int(0)],
            vec![int(3), ratio(-1, 3), int(1)],
        ]);
        let r = m.rref();
        // Solved by hand: x + 2y = 0 row scaled, then eliminate.
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(*r.reduced.get(0, 0), int(1));
        assert_eq!(*r.reduced.get(1, 1), int(1));
        assert_eq!(*r.reduced.get(0, 1), int(0));
        // Row space check: the original rows lie in the span of the reduced rows.
        for i in 0..2 {
            let row = m.row(i);
            let recon: Vec<Scalar> = (0..3)
                .map(|j| &row[0] * r.reduced.get(0, j) + &row[1] * r.reduced.get(1, j))
                .collect();
            assert_eq!(recon, row.to_vec());
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(2, 3).kernel_basis().len(), 3);
        let k = Matrix::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn char_poly_examples() {
        let p = Matrix::from_i64(&[&[5]]).char_poly().unwrap();
        assert_eq!(p.coeffs(), &[int(-5), int(1)]);
        let p = Matrix::from_i64(&[&[1, 0], &[0, 2]]).char_poly().unwrap();
        assert_eq!(p.coeffs(), &[int(2), int(-3), int(1)]);
        // Cofactor expansion of det(tI - [[0,1],[1,0]]) = t^2 - 1.
        let p = Matrix::from_i64(&[&[0, 1], &[1, 0]]).char_poly().unwrap();
        assert_eq!(p.coeffs(), &[int(-1), int(0), int(1)]);
        assert!(Matrix::zeros(2, 3).char_poly().is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_rows(vec![
            vec![ratio(1, 2), int(2)],
            vec![int(3), ratio(-1, 3)],
        ]);
        // 1/2·(−1/3) − 6
        assert_eq!(m.determinant().unwrap(), ratio(-37, 6));
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).determinant().unwrap(), int(0));
        assert_eq!(Matrix::zeros(0, 0).determinant().unwrap(), int(1));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = Matrix::from_i64(&[&[1, 1], &[1, -1]]);
        let b = Matrix::from_i64(&[&[3], &[1]]);
        assert_eq!(a.solve(&b).unwrap(), Matrix::from_i64(&[&[2], &[1]]));
        let a = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        let b = Matrix::from_i64(&[&[1], &[3]]);
        assert!(a.solve(&b).is_none());
    }

    #[test]
    fn json_layout() {
        let m = Matrix::from_rows(vec![vec![ratio(1, 2), int(-3)]]);
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"rows":1,"cols":2,"entries":["1/2","-3"]}"#);
        let back: Matrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Matrix>(r#"{"rows":2,"cols":2,"entries":["1"]}"#).is_err());
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix(5)) {
            let rank = m.rank();
            let kernel = m.kernel_basis();
            prop_assert_eq!(rank + kernel.len(), m.cols());
            for v in &kernel {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            prop_assert!(independent(&kernel));
        }

        #[test]
        fn rref_idempotent(m in small_matrix(5)) {
            let once = m.rref().reduced;
            prop_assert_eq!(once.rref().reduced, once.clone());
        }

        #[test]
        fn determinant_matches_rank(m in small_matrix(4)) {
            if m.is_square() {
                let det = m.determinant().unwrap();
                prop_assert_eq!(det.is_zero(), m.rank() < m.rows());
            }
        }
    }
}
