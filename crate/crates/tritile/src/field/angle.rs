//! Angles stored exactly as rational multiples of pi.

use super::rational::{fraction_string, parse_fraction, rat, Rational};
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An angle equal to `coefficient * pi` radians.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PiAngle {
    coefficient: Rational,
}

impl PiAngle {
    pub fn new(coefficient: Rational) -> Self {
        PiAngle { coefficient }
    }

    /// `(num/den) * pi`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        PiAngle::new(rat(num, den))
    }

    pub fn zero() -> Self {
        PiAngle::from_ratio(0, 1)
    }

    /// The right angle `pi/2`.
    pub fn right() -> Self {
        PiAngle::from_ratio(1, 2)
    }

    pub fn straight() -> Self {
        PiAngle::from_ratio(1, 1)
    }

    pub fn full_turn() -> Self {
        PiAngle::from_ratio(2, 1)
    }

    /// Interior angle of the regular n-gon, `(n-2)pi/n`.
    pub fn interior_angle(n: u64) -> Self {
        assert!(n >= 3, "interior angle needs n >= 3");
        PiAngle::new(Rational::new((n as i64 - 2).into(), (n as i64).into()))
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn is_positive(&self) -> bool {
        self.coefficient.is_positive()
    }

    /// True for angles strictly between 0 and the right angle; every acute
    /// angle of a right triangle satisfies this.
    pub fn is_acute(&self) -> bool {
        self.coefficient > Rational::zero() && self.coefficient < rat(1, 2)
    }

    pub fn is_right(&self) -> bool {
        self.coefficient == rat(1, 2)
    }

    pub fn scaled(&self, k: &Rational) -> PiAngle {
        PiAngle::new(&self.coefficient * k)
    }
}

impl Add for &PiAngle {
    type Output = PiAngle;
    fn add(self, rhs: &PiAngle) -> PiAngle {
        PiAngle::new(&self.coefficient + &rhs.coefficient)
    }
}

impl Sub for &PiAngle {
    type Output = PiAngle;
    fn sub(self, rhs: &PiAngle) -> PiAngle {
        PiAngle::new(&self.coefficient - &rhs.coefficient)
    }
}

impl Neg for &PiAngle {
    type Output = PiAngle;
    fn neg(self) -> PiAngle {
        PiAngle::new(-&self.coefficient)
    }
}

impl Mul<u64> for &PiAngle {
    type Output = PiAngle;
    fn mul(self, k: u64) -> PiAngle {
        self.scaled(&Rational::from_integer(k.into()))
    }
}

impl Div<&Rational> for &PiAngle {
    type Output = PiAngle;
    fn div(self, k: &Rational) -> PiAngle {
        PiAngle::new(&self.coefficient / k)
    }
}

impl fmt::Display for PiAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*pi", self.coefficient)
    }
}

// On the wire an angle is its pi-coefficient as an exact fraction string.
impl Serialize for PiAngle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&fraction_string(&self.coefficient))
    }
}

impl<'de> Deserialize<'de> for PiAngle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_fraction(&s)
            .map(PiAngle::new)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}
