//! Operator-valued rational functions of the spectral parameter `u` and the
//! realization of current monomials on a tensor product.

use std::collections::BTreeMap;

use num::{One, Zero};

use super::config::GaudinInstance;
use super::tensor::TensorModule;
use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::{self, Scalar};

/// `C + Σ_{(a,m)} C_{a,m} / (u − z_a)^m` in partial-fraction form.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalOperatorFunction {
    dim: usize,
    poles: Vec<Scalar>,
    constant: Matrix,
    /// `(pole index, order) ↦ coefficient`; zero coefficients are dropped.
    terms: BTreeMap<(usize, usize), Matrix>,
}

fn binomial(n: usize, k: usize) -> Scalar {
    let mut acc = Scalar::one();
    for i in 0..k {
        acc = acc * scalar::int((n - i) as i64) / scalar::int((i + 1) as i64);
    }
    acc
}

impl RationalOperatorFunction {
    pub fn zero(dim: usize, poles: Vec<Scalar>) -> Self {
        RationalOperatorFunction {
            dim,
            poles,
            constant: Matrix::zeros(dim, dim),
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn poles(&self) -> &[Scalar] {
        &self.poles
    }

    pub fn constant(&self) -> &Matrix {
        &self.constant
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Matrix> {
        &self.terms
    }

    /// Coefficient of `(u − z_pole)^{−order}`, zero when absent.
    pub fn coefficient(&self, pole: usize, order: usize) -> Matrix {
        self.terms
            .get(&(pole, order))
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim, self.dim))
    }

    pub fn max_order(&self) -> usize {
        self.terms.keys().map(|&(_, m)| m).max().unwrap_or(0)
    }

    pub fn add_constant(&mut self, c: &Scalar, m: &Matrix) {
        self.constant.add_scaled(c, m);
    }

    pub fn add_term(&mut self, pole: usize, order: usize, c: &Scalar, m: &Matrix) {
        if c.is_zero() || m.is_zero() {
            return;
        }
        assert!(order >= 1);
        let entry = self
            .terms
            .entry((pole, order))
            .or_insert_with(|| Matrix::zeros(self.dim, self.dim));
        entry.add_scaled(c, m);
        if entry.is_zero() {
            self.terms.remove(&(pole, order));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant.add_scaled(&Scalar::one(), &other.constant);
        for (&(a, m), c) in &other.terms {
            out.add_term(a, m, &Scalar::one(), c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.dim, self.poles.clone());
        out.constant = self.constant.scale(c);
        for (&(a, m), x) in &self.terms {
            out.add_term(a, m, c, x);
        }
        out
    }

    /// Product `self(u)·other(u)`, matrix order preserved.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim, self.poles.clone());
        let one = Scalar::one();
        out.constant = self.constant.matmul(&other.constant);
        for (&(a, m), x) in &self.terms {
            if !other.constant.is_zero() {
                out.add_term(a, m, &one, &x.matmul(&other.constant));
            }
        }
        if !self.constant.is_zero() {
            for (&(b, n), y) in &other.terms {
                out.add_term(b, n, &one, &self.constant.matmul(y));
            }
        }
        for (&(a, m), x) in &self.terms {
            for (&(b, n), y) in &other.terms {
                let xy = x.matmul(y);
                if xy.is_zero() {
                    continue;
                }
                if a == b {
                    out.add_term(a, m + n, &one, &xy);
                    continue;
                }
                // 1/(w^m (w+d)^n) with w = u − z_a, d = z_a − z_b, and symmetrically at z_b
                let d = &self.poles[a] - &self.poles[b];
                for k in 0..m {
                    let c = binomial(n + k - 1, k) * scalar::pow(&d, -((n + k) as i32));
                    let c = if k % 2 == 1 { -c } else { c };
                    out.add_term(a, m - k, &c, &xy);
                }
                let d = -d;
                for k in 0..n {
                    let c = binomial(m + k - 1, k) * scalar::pow(&d, -((m + k) as i32));
                    let c = if k % 2 == 1 { -c } else { c };
                    out.add_term(b, n - k, &c, &xy);
                }
            }
        }
        out
    }

    pub fn eval(&self, u: &Scalar) -> Result<Matrix> {
        let mut out = self.constant.clone();
        for (&(a, m), x) in &self.terms {
            let d = u - &self.poles[a];
            if d.is_zero() {
                return Err(Error::Invalid(format!("u = {} is a pole", scalar::format(u))));
            }
            out.add_scaled(&scalar::pow(&d, -(m as i32)), x);
        }
        Ok(out)
    }
}

/// `z^s · X` for a single module action.
pub fn evaluation_action(action: &Matrix, z: &Scalar, s: i64) -> Result<Matrix> {
    if z.is_zero() && s < 0 {
        return Err(Error::Invalid("evaluation at z = 0 with a negative mode".into()));
    }
    Ok(action.scale(&scalar::pow(z, s as i32)))
}

/// `φ_{z,μ}(X[s]) = Σ_a z_a^s (X)_a + δ_{s,−1} ⟨μ, X⟩ Id`.
pub fn combined_map(inst: &GaudinInstance, tensor: &TensorModule, x: &[Scalar], s: i64) -> Result<Matrix> {
    let mut m = Matrix::zeros(tensor.dim(), tensor.dim());
    for a in 0..tensor.sites() {
        m.add_scaled(&Scalar::one(), &evaluation_action(&tensor.site_action(a, x), &inst.z[a], s)?);
    }
    if s == -1 {
        let c = inst.form.pairing(&inst.mu, x);
        m.add_scaled(&c, &Matrix::identity(tensor.dim()));
    }
    Ok(m)
}

/// `(1/s!) ∂_u^s X^μ(u)` with `X^μ(u) = ⟨μ,X⟩ + Σ_a (X)_a / (u − z_a)`.
pub fn realize_current(inst: &GaudinInstance, tensor: &TensorModule, x: &[Scalar], s: usize) -> RationalOperatorFunction {
    let n = tensor.dim();
    let mut f = RationalOperatorFunction::zero(n, inst.z.clone());
    if s == 0 {
        f.add_constant(&inst.form.pairing(&inst.mu, x), &Matrix::identity(n));
    }
    let sign = if s % 2 == 1 { -Scalar::one() } else { Scalar::one() };
    for a in 0..tensor.sites() {
        f.add_term(a, s + 1, &sign, &tensor.site_action(a, x));
    }
    f
}

/// `(−1)^k Π_i (1/s_i!) ∂_u^{s_i} X_i^μ(u)` for a monomial of general
/// elements.
pub fn realize_monomial(
    inst: &GaudinInstance,
    tensor: &TensorModule,
    monomial: &[(Vec<Scalar>, usize)],
) -> Result<RationalOperatorFunction> {
    if monomial.is_empty() {
        return Err(Error::Invalid("empty current monomial".into()));
    }
    let mut acc: Option<RationalOperatorFunction> = None;
    for (x, s) in monomial {
        let cur = realize_current(inst, tensor, x, *s);
        acc = Some(match acc {
            None => cur,
            Some(p) => p.mul(&cur),
        });
    }
    let acc = acc.expect("nonempty");
    Ok(if monomial.len() % 2 == 1 {
        acc.scale(&-Scalar::one())
    } else {
        acc
    })
}

/// Monomial given by basis indices and orders.
pub fn realize_current_monomial(
    inst: &GaudinInstance,
    tensor: &TensorModule,
    monomial: &[(usize, usize)],
) -> Result<RationalOperatorFunction> {
    let mono: Vec<(Vec<Scalar>, usize)> = monomial
        .iter()
        .map(|&(idx, s)| (inst.algebra.unit(idx), s))
        .collect();
    realize_monomial(inst, tensor, &mono)
}

/// `Σ_k Y_k(u) Y^k(u)` for the given pairs `(Y_k, Y^k)`.
pub fn realize_quadratic(
    inst: &GaudinInstance,
    tensor: &TensorModule,
    pairs: &[(Vec<Scalar>, Vec<Scalar>)],
) -> RationalOperatorFunction {
    let mut total = RationalOperatorFunction::zero(tensor.dim(), inst.z.clone());
    for (x, y) in pairs {
        let term = realize_current(inst, tensor, x, 0).mul(&realize_current(inst, tensor, y, 0));
        total = total.add(&term);
    }
    total
}

/// Realized `S₁ = Σ_a X_a[−1] X^a[−1]` for the Chevalley basis and its dual.
pub fn realize_segal_sugawara(inst: &GaudinInstance, tensor: &TensorModule) -> RationalOperatorFunction {
    let alg = &inst.algebra;
    let dual = inst.form.dual_bases();
    let pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = (0..alg.dim())
        .map(|a| (alg.unit(a), dual.column(a)))
        .collect();
    realize_quadratic(inst, tensor, &pairs)
}
