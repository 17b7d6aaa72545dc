//! Arbitrary-precision rationals and the fractional-part operation.
//!
//! `Rational` is `num_rational::BigRational`, which already keeps the
//! canonical form we need (reduced, positive denominator) on every
//! construction.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rational = num_rational::BigRational;

/// Shorthand constructor from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(Int::from(numer), Int::from(denom))
}

/// Fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// Parses `"a/b"` or a bare integer `"a"` as an exact rational.
pub fn parse_fraction(s: &str) -> Result<Rational> {
    let bad = || Error::BadFraction(s.to_string());
    let mut parts = s.splitn(2, '/');
    let numer: Int = parts
        .next()
        .ok_or_else(bad)?
        .trim()
        .parse()
        .map_err(|_| bad())?;
    let denom: Int = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => Int::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Formats a rational as `"a/b"` (always with an explicit denominator, so
/// the emitted form is canonical and unambiguous).
pub fn fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// True if `x` is a nonnegative integer.
pub fn is_nonneg_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}

/// `10^d` as a big integer.
pub fn pow10(d: u32) -> Int {
    num_traits::pow(Int::from(10), d as usize)
}

/// serde adapter: a rational field as an exact `"a/b"` string.
pub mod fraction_serde {
    use super::{fraction_string, parse_fraction, Rational};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        x: &Rational,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&fraction_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_fraction(&s).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// serde adapter for `Option<Rational>` fraction strings.
pub mod opt_fraction_serde {
    use super::{fraction_string, parse_fraction, Rational};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        x: &Option<Rational>,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(v) => serializer.serialize_some(&fraction_string(v)),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Option<Rational>, D::Error> {
        let s: Option<String> = Option::deserialize(deserializer)?;
        s.map(|s| parse_fraction(&s).map_err(|e| D::Error::custom(e.to_string())))
            .transpose()
    }
}
