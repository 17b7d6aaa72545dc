//! The fractional-part elimination criterion.
//!
//! For the spurious corner candidate with angles `(n-4)pi/(2n)` and
//! `2pi/n`, a necessary condition for tiling is
//! `frac(k(n-4)/2n) + frac(2k/n) + frac(k/2) = 1` for every k coprime to
//! 2n with `frac(k/n) < 1/2`. A single well-chosen k per n violates it.

use crate::error::{Error, Result};
use crate::field::rational::{frac, Int, Rational};
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// The witness exponent from the four-case table, by n mod 4.
pub fn select_k(n: u64) -> Result<u64> {
    if n < 5 || n == 6 {
        return Err(Error::OutOfDomain(n, "select_k"));
    }
    let k = match n % 4 {
        0 => n / 2 - 1,
        1 => n + (n - 1) / 2,
        2 => n / 2 - 2,
        3 => (n - 1) / 2,
        _ => unreachable!(),
    };
    debug_assert!(k % 2 == 1, "k must be odd");
    debug_assert_eq!(k.gcd(&(2 * n)), 1, "k must be coprime to 2n");
    debug_assert!(frac(&Rational::new(k.into(), n.into())) < Rational::new(1.into(), 2.into()));
    Ok(k)
}

/// Exact evaluation of the three fractional parts and their sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eq1Witness {
    pub n: u64,
    pub k: u64,
    #[serde(with = "crate::field::rational::fraction_serde")]
    pub term1: Rational,
    #[serde(with = "crate::field::rational::fraction_serde")]
    pub term2: Rational,
    #[serde(with = "crate::field::rational::fraction_serde")]
    pub term3: Rational,
    #[serde(with = "crate::field::rational::fraction_serde")]
    pub lhs: Rational,
}

impl Eq1Witness {
    /// True when the identity holds; the elimination argument needs a k
    /// for which it does NOT.
    pub fn identity_holds(&self) -> bool {
        self.lhs == Rational::one()
    }
}

/// Evaluates the criterion at (n, k); the preconditions gcd(k, 2n) = 1 and
/// frac(k/n) < 1/2 are checked and reported individually.
pub fn eq1_evaluate(n: u64, k: u64) -> Result<Eq1Witness> {
    if k.gcd(&(2 * n)) != 1 {
        return Err(Error::Eq1NotCoprime { n, k });
    }
    let half = Rational::new(Int::one(), Int::from(2));
    if frac(&Rational::new(k.into(), n.into())) >= half {
        return Err(Error::Eq1FracTooLarge { n, k });
    }
    let k_int = Int::from(k);
    let term1 = frac(&Rational::new(
        &k_int * (Int::from(n) - Int::from(4)),
        Int::from(2 * n),
    ));
    let term2 = frac(&Rational::new(Int::from(2) * &k_int, Int::from(n)));
    let term3 = frac(&Rational::new(k_int, Int::from(2)));
    let lhs = &(&term1 + &term2) + &term3;
    Ok(Eq1Witness {
        n,
        k,
        term1,
        term2,
        term3,
        lhs,
    })
}

/// `frac(2k/n)` for the table's k; the caller asserts the result exceeds
/// 1/2.
pub fn check_2k_over_n(n: u64, k: u64) -> Result<Rational> {
    let expected = select_k(n)?;
    debug_assert_eq!(k, expected, "k must come from select_k");
    let _ = expected;
    Ok(frac(&Rational::new(Int::from(2 * k), Int::from(n))))
}
