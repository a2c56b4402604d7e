//! Exact rational scalars.
//!
//! Every certified quantity in the crate is a [`Scalar`], an arbitrary
//! precision rational held in lowest terms with a positive denominator. The
//! canonical text form is `p/q`, or `p` when the denominator is one.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the canonical `p/q` (or `p`) form; surrounding whitespace is ignored.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational `{text}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational `{text}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    Ok(Scalar::new(num, den))
}

/// Canonical string form.
pub fn format(s: &Scalar) -> String {
    s.to_string()
}

/// Integer power with a possibly negative exponent. `base` must be nonzero
/// when `exp < 0`.
pub fn pow(base: &Scalar, exp: i32) -> Scalar {
    if exp == 0 {
        return Scalar::one();
    }
    let mut acc = Scalar::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Lossy conversion used only by floating-point diagnostics.
pub fn to_f64(s: &Scalar) -> f64 {
    use num::ToPrimitive;
    s.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: scale through the bit lengths.
        let n = s.numer();
        let d = s.denom();
        let shift = n.bits().max(d.bits()).saturating_sub(900) as usize;
        let nf = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let df = (d >> shift).to_f64().unwrap_or(f64::NAN);
        nf / df
    })
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}

/// Serde adapter writing a [`Scalar`] as its canonical string.
pub mod serde_scalar {
    use super::Scalar;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Scalar, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Scalar, D::Error> {
        let text = String::deserialize(de)?;
        super::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Scalar>`.
pub mod serde_scalar_vec {
    use super::Scalar;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[Scalar], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Scalar>, D::Error> {
        let texts = Vec::<String>::deserialize(de)?;
        texts
            .iter()
            .map(|t| super::parse(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serialize-only adapter for `Option<Vec<Scalar>>`.
pub mod serde_scalar_option_vec {
    use super::Scalar;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(values: &Option<Vec<Scalar>>, ser: S) -> Result<S::Ok, S::Error> {
        match values {
            Some(v) => super::serde_scalar_vec::serialize(v, ser),
            None => ser.serialize_none(),
        }
    }
}
