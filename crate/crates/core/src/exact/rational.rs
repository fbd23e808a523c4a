//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator. The helpers here cover the handful of
//! conversions the rest of the crate needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

pub type Rational = num_rational::BigRational;

/// `n/1`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"7"`, `"-3/7"` or `" 9 / 7 "`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::new("rational", text);
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Returns the value as an `i64` when it is an integer that fits.
pub fn to_i64(value: &Rational) -> Option<i64> {
    if !value.is_integer() {
        return None;
    }
    i64::try_from(value.numer()).ok()
}

pub fn is_nonnegative(value: &Rational) -> bool {
    !value.is_negative()
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("9/7").unwrap(), ratio(9, 7));
        assert_eq!(parse_rational(" -6 / 4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(ratio(14, 49).to_string(), "2/7");
        assert_eq!(ratio(6, -3).to_string(), "-2");
    }

    #[test]
    fn denominators_lcm() {
        let vals = [ratio(1, 6), ratio(2, 3), ratio(1, 4)];
        assert_eq!(lcm_of_denominators(&vals), BigInt::from(12));
    }
}
