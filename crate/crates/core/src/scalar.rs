//! Exact scalar arithmetic over the rationals.
//!
//! Every computation in this crate is carried out over `Q` with
//! arbitrary-precision integers; there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a scalar as `num` or `num/den` with a positive denominator.
pub fn format(s: &Scalar) -> String {
    let (num, den) = (s.numer(), s.denom());
    debug_assert!(den.is_positive(), "BigRational keeps denominators positive");
    if den.is_one() {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

/// Parses `num` or `num/den` (the inverse of [`format`]).
pub fn parse(text: &str) -> Result<Scalar, String> {
    let mk = |s: &str| -> Result<BigInt, String> {
        s.parse::<BigInt>().map_err(|e| format!("bad integer {s:?}: {e}"))
    };
    match text.split_once('/') {
        None => Ok(Scalar::from_integer(mk(text)?)),
        Some((n, d)) => {
            let den = mk(d)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(Scalar::new(mk(n)?, den))
        }
    }
}

/// Exact integer value of a scalar, if it is an integer that fits in `i64`.
pub fn as_i64(s: &Scalar) -> Option<i64> {
    if !s.denom().is_one() {
        return None;
    }
    i64::try_from(s.numer().clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_parse_round_trip() {
        for (n, d) in [(0, 1), (5, 1), (-3, 1), (7, 2), (-9, 4), (10, 5)] {
            let s = ratio(n, d);
            assert_eq!(parse(&format(&s)).unwrap(), s);
        }
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn format_reduces() {
        assert_eq!(format(&ratio(4, 2)), "2");
        assert_eq!(format(&ratio(-4, 6)), "-2/3");
    }
}
