//! Exact number types: arbitrary-precision rationals, rational multiples
//! of pi, and cyclotomic field elements with a decidable zero test and
//! terminating sign determination.

pub mod angle;
pub mod cyclo;
pub mod eval;
pub mod interval;
pub mod rational;

pub use angle::PiAngle;
pub use cyclo::CycloNum;
pub use eval::{approx, sign_real};
pub use interval::{ComplexBox, RealInterval};
pub use rational::{frac, Rational};

/// Exact sign of a real quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(x: &Rational) -> Sign {
        use num_traits::Zero;
        if x.is_zero() {
            Sign::Zero
        } else if x > &Rational::zero() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}
