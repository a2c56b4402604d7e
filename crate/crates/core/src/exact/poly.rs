//! Univariate and multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// Polynomial in one variable `t`, coefficients in ascending degree.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![Scalar::one()],
        }
    }

    /// `t − root`
    pub fn linear(root: &Scalar) -> Self {
        Poly::new(vec![-root.clone(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * scalar::int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero);
                    let b = other.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let d = divisor.degree();
        let lead = divisor.leading();
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); self.coeffs.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = primitive_rational(&r);
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: monic pairwise-coprime squarefree
    /// factors `f_i` with multiplicities such that `Π f_i^{m_i}` is `self`
    /// up to its leading coefficient.
    pub fn squarefree_split(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        if f.degree() == 0 {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            let next_b = b.div_rem(&a).0;
            let next_c = d.div_rem(&a).0;
            if a.degree() > 0 {
                out.push((a.monic(), i));
            }
            d = next_c.sub(&next_b.derivative());
            b = next_b;
            i += 1;
        }
        Ok(out)
    }

    /// Rational roots, found with the rational root test. Returns `None`
    /// when the candidate divisor search would be too large.
    pub fn rational_roots(&self) -> Option<Vec<Scalar>> {
        if self.is_zero() {
            return None;
        }
        let ints = integer_coeffs(self);
        let mut roots = Vec::new();
        let mut ints = ints;
        // strip the root 0
        while ints.first().is_some_and(Zero::is_zero) {
            if !roots.contains(&Scalar::zero()) {
                roots.push(Scalar::zero());
            }
            ints.remove(0);
        }
        if ints.len() <= 1 {
            return Some(roots);
        }
        let limit = BigInt::from(1_000_000_000_000i64);
        let a0 = ints[0].abs();
        let an = ints.last().expect("nonempty").abs();
        if a0 > limit || an > limit {
            return None;
        }
        let ps = divisors(&a0);
        let qs = divisors(&an);
        // Cauchy bound: |r| ≤ 1 + max |a_i / a_n|
        let bound = ints[..ints.len() - 1]
            .iter()
            .map(|c| Scalar::new(c.abs(), an.clone()))
            .max()
            .unwrap_or_else(Scalar::zero)
            + Scalar::one();
        let vanishes = |p: &BigInt, q: &BigInt| {
            // q^n f(p/q) = Σ a_i p^i q^{n−i}, by Horner in integers
            let mut acc = BigInt::zero();
            let mut qpow = BigInt::one();
            for c in ints.iter().rev() {
                acc = acc * p + c * &qpow;
                qpow *= q;
            }
            acc.is_zero()
        };
        for q in &qs {
            for p in &ps {
                if Scalar::new(p.clone(), q.clone()) > bound || !p.gcd(q).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let num = p * BigInt::from(sign);
                    if vanishes(&num, q) {
                        let r = Scalar::new(num, q.clone());
                        if !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

fn primitive_rational(p: &Poly) -> Poly {
    if p.is_zero() {
        p.clone()
    } else {
        p.monic()
    }
}

fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    use num::ToPrimitive;
    let n = n.to_u64().expect("bounded");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Sparse multivariate polynomial keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable `x_index` among `nvars` variables.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        let mut p = Self::zero();
        p.terms.insert(e, Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(Scalar::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(e.clone()).or_insert_with(Scalar::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * scalar::pow(x, k as i32))
            })
            .sum()
    }

    /// Determinant of a square matrix of polynomials by cofactor expansion
    /// along the first row.
    pub fn determinant(entries: &[Vec<MultiPoly>]) -> MultiPoly {
        let n = entries.len();
        match n {
            0 => {
                let nvars = 0;
                MultiPoly::constant(nvars, Scalar::one())
            }
            1 => entries[0][0].clone(),
            _ => {
                let mut acc = MultiPoly::zero();
                for j in 0..n {
                    if entries[0][j].is_zero() {
                        continue;
                    }
                    let minor: Vec<Vec<MultiPoly>> = entries[1..]
                        .iter()
                        .map(|row| {
                            row.iter()
                                .enumerate()
                                .filter(|&(k, _)| k != j)
                                .map(|(_, x)| x.clone())
                                .collect()
                        })
                        .collect();
                    let term = entries[0][j].mul(&MultiPoly::determinant(&minor));
                    acc = if j % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.add(&term.scale(&-Scalar::one()))
                    };
                }
                acc
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("t{i}") } else { format!("t{i}^{k}") })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn squarefree_examples() {
        let p = Poly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.squarefree_split().unwrap(), vec![(p.clone(), 1)]);
        // (t-1)^2: gcd(p, p') = t - 1
        let p = Poly::from_i64(&[1, -2, 1]);
        assert_eq!(
            p.squarefree_split().unwrap(),
            vec![(Poly::from_i64(&[-1, 1]), 2)]
        );
        let p = Poly::from_i64(&[0, 0, 0, 1]);
        assert_eq!(
            p.squarefree_split().unwrap(),
            vec![(Poly::from_i64(&[0, 1]), 3)]
        );
        assert!(Poly::zero().squarefree_split().is_err());
        assert!(Poly::from_i64(&[5]).squarefree_split().unwrap().is_empty());
    }

    #[test]
    fn mixed_multiplicities() {
        // (t-1)(t+2)^2(t^2+1)^3 scaled by 3
        let p = Poly::from_i64(&[-1, 1])
            .mul(&Poly::from_i64(&[2, 1]).pow(2))
            .mul(&Poly::from_i64(&[1, 0, 1]).pow(3))
            .scale(&int(3));
        let split = p.squarefree_split().unwrap();
        assert_eq!(
            split,
            vec![
                (Poly::from_i64(&[-1, 1]), 1),
                (Poly::from_i64(&[2, 1]), 2),
                (Poly::from_i64(&[1, 0, 1]), 3)
            ]
        );
    }

    #[test]
    fn rational_roots_found() {
        let p = Poly::linear(&ratio(3, 2))
            .mul(&Poly::linear(&int(-2)))
            .mul(&Poly::from_i64(&[-2, 0, 1]));
        assert_eq!(p.rational_roots().unwrap(), vec![int(-2), ratio(3, 2)]);
        assert_eq!(Poly::from_i64(&[0, 0, 1]).rational_roots().unwrap(), vec![int(0)]);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[2, -3, 1]).to_string(), "t^2 - 3t + 2");
        assert_eq!(Poly::linear(&int(4)).to_string(), "t - 4");
    }

    #[test]
    fn symbolic_determinant() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        // det [[x, y], [y, x]] = x^2 - y^2, vanishes at x = y
        let d = MultiPoly::determinant(&[vec![x.clone(), y.clone()], vec![y, x]]);
        assert_eq!(d.num_terms(), 2);
        assert_eq!(d.eval(&[int(3), int(3)]), int(0));
        assert_eq!(d.eval(&[int(3), int(1)]), int(8));
    }

    proptest! {
        #[test]
        fn squarefree_product_recovers_input(
            roots in proptest::collection::vec(-3i64..=3, 1..6),
        ) {
            let p = roots
                .iter()
                .fold(Poly::one(), |acc, &r| acc.mul(&Poly::linear(&int(r))));
            let split = p.squarefree_split().unwrap();
            let back = split.iter().fold(Poly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)));
            prop_assert_eq!(back, p.monic());
            for (f, _) in &split {
                prop_assert_eq!(f.gcd(&f.derivative()), Poly::one());
            }
            for i in 0..split.len() {
                for j in i + 1..split.len() {
                    prop_assert_eq!(split[i].0.gcd(&split[j].0), Poly::one());
                }
            }
        }
    }
}
