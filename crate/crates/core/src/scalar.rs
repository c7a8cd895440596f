//! Exact rational scalars.
//!
//! Every coordinate, radius and measure in the crate is a [`Scalar`], an
//! arbitrary-precision rational kept in lowest terms with a positive
//! denominator. Floats only appear where a d-th root is unavoidable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

/// `num / den` as an exact scalar. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn half() -> Scalar {
    rat(1, 2)
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. Decimal notation is rejected so that a
/// value like `0.333` can never silently stand in for `1/3`.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let trimmed = text.trim();
    let bad = || Error::BadRational(text.to_string());
    if trimmed.is_empty() {
        return Err(bad());
    }
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text form: `"p/q"`, or `"p"` for integers.
pub fn format_scalar(value: &Scalar) -> String {
    value.to_string()
}

/// Exact ceiling as a machine integer. Values outside `u64` are an error.
pub fn ceil_u64(value: &Scalar) -> Result<u64, Error> {
    let c = value.ceil().to_integer();
    c.to_u64()
        .ok_or_else(|| Error::InvalidDomain(format!("ceiling of {value} does not fit in u64")))
}

pub fn floor_big(value: &Scalar) -> BigInt {
    value.numer().div_floor(value.denom())
}

pub fn to_f64(value: &Scalar) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn abs(value: &Scalar) -> Scalar {
    value.abs()
}

/// Exact non-negative integer power.
pub fn pow(base: &Scalar, exp: u32) -> Scalar {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn min(a: &Scalar, b: &Scalar) -> Scalar {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn max(a: &Scalar, b: &Scalar) -> Scalar {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn midpoint(a: &Scalar, b: &Scalar) -> Scalar {
    (a + b) / int(2)
}

pub(crate) mod serde_text {
    use super::{format_scalar, Scalar};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(value))
    }
}

pub(crate) mod serde_text_vec {
    use super::{format_scalar, Scalar};
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(values: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&format_scalar(v))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_exactly() {
        assert_eq!(parse_scalar("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_scalar("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_scalar("-3/9").unwrap(), rat(-1, 3));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(parse_scalar(" 5 / 10 ").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_non_rationals() {
        for bad in ["0.333", "", "1/0", "a/b", "1/-2", "--1", "1//2", "/3"] {
            assert!(parse_scalar(bad).is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format_scalar(&rat(6, 4)), "3/2");
        assert_eq!(format_scalar(&rat(-4, 2)), "-2");
        assert_eq!(format_scalar(&zero()), "0");
    }

    #[test]
    fn ceiling_is_exact() {
        assert_eq!(ceil_u64(&rat(16, 9)).unwrap(), 2);
        assert_eq!(ceil_u64(&int(2)).unwrap(), 2);
        assert_eq!(ceil_u64(&rat(1048576, 59049)).unwrap(), 18);
    }
}
