//! Triangle angle pairs, vertex equations, and complete packing
//! enumeration.

use crate::error::{Error, Result};
use crate::field::rational::{rat, Int, Rational};
use crate::field::PiAngle;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The unordered pair of acute angles of a right triangle, stored with
/// `alpha <= beta`. The right angle `gamma = pi/2` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrianglePair {
    alpha: PiAngle,
    beta: PiAngle,
}

impl TrianglePair {
    /// Builds the pair from the two acute angles (in either order); they
    /// must be acute and sum to a right angle.
    pub fn new(a: PiAngle, b: PiAngle) -> Result<Self> {
        if &a + &b != PiAngle::right() {
            return Err(Error::InvalidPair(format!(
                "{} + {} is not a right angle",
                a, b
            )));
        }
        if !a.is_acute() || !b.is_acute() {
            return Err(Error::InvalidPair(format!(
                "angles {} and {} must lie strictly between 0 and pi/2",
                a, b
            )));
        }
        let (alpha, beta) = if a <= b { (a, b) } else { (b, a) };
        Ok(TrianglePair { alpha, beta })
    }

    /// Pair determined by one acute angle.
    pub fn from_alpha(alpha: PiAngle) -> Result<Self> {
        let beta = &PiAngle::right() - &alpha;
        TrianglePair::new(alpha, beta)
    }

    /// The tile shape of the canonical dissection of the regular n-gon:
    /// acute angles `pi/n` and `(n-2)pi/(2n)`.
    pub fn canonical_for(n: u64) -> Self {
        assert!(n >= 3);
        TrianglePair::from_alpha(PiAngle::new(Rational::new(Int::from(1), Int::from(n))))
            .expect("pi/n is acute for n >= 3")
    }

    pub fn alpha(&self) -> &PiAngle {
        &self.alpha
    }

    pub fn beta(&self) -> &PiAngle {
        &self.beta
    }

    pub fn is_isosceles(&self) -> bool {
        self.alpha == self.beta
    }

    pub fn contains(&self, angle: &PiAngle) -> bool {
        &self.alpha == angle || &self.beta == angle
    }
}

impl fmt::Display for TrianglePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// `p*alpha + q*beta + r*gamma = sigma`: the tile-angle count at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEquation {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub sigma: PiAngle,
}

impl VertexEquation {
    pub fn new(p: u64, q: u64, r: u64, sigma: PiAngle) -> Self {
        VertexEquation { p, q, r, sigma }
    }

    pub fn tiles(&self) -> u64 {
        self.p + self.q + self.r
    }

    /// Left-hand side for a concrete pair.
    pub fn angle_sum(&self, pair: &TrianglePair) -> PiAngle {
        let a = pair.alpha().scaled(&Rational::from_integer(self.p.into()));
        let b = pair.beta().scaled(&Rational::from_integer(self.q.into()));
        let g = PiAngle::right().scaled(&Rational::from_integer(self.r.into()));
        &(&a + &b) + &g
    }

    pub fn holds_for(&self, pair: &TrianglePair) -> bool {
        self.angle_sum(pair) == self.sigma
    }
}

impl fmt::Display for VertexEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}a + {}b + {}g = {}",
            self.p, self.q, self.r, self.sigma
        )
    }
}

/// Every `(p, q, r)` with `p*alpha + q*beta + r*gamma = sigma` exactly and
/// `1 <= p + q + r <= max_tiles` (`None` = unbounded). Complete and
/// duplicate-free; lexicographically ordered in `(p, q)`.
pub fn enumerate_packings(
    pair: &TrianglePair,
    sigma: &PiAngle,
    max_tiles: Option<u64>,
) -> Vec<VertexEquation> {
    assert!(sigma.is_positive(), "packing target must be positive");
    // Clear denominators: p*a + q*b + r*g = s over the integers.
    let denoms = [
        pair.alpha().coefficient().denom().clone(),
        pair.beta().coefficient().denom().clone(),
        Int::from(2),
        sigma.coefficient().denom().clone(),
    ];
    let scale = denoms.iter().fold(Int::from(1), |acc, d| acc.lcm(d));
    let to_int = |x: &Rational| -> Int {
        let v = x * Rational::from_integer(scale.clone());
        debug_assert!(v.is_integer());
        v.to_integer()
    };
    let a = to_int(pair.alpha().coefficient());
    let b = to_int(pair.beta().coefficient());
    let g = to_int(&rat(1, 2));
    let s = to_int(sigma.coefficient());

    let cap = max_tiles.unwrap_or(u64::MAX);
    let mut out = Vec::new();
    let p_max = (&s / &a).to_u64().expect("packing bound fits u64").min(cap);
    for p in 0..=p_max {
        let rem_p = &s - &a * Int::from(p);
        debug_assert!(!rem_p.is_negative());
        let q_max = (&rem_p / &b)
            .to_u64()
            .expect("packing bound fits u64")
            .min(cap - p);
        for q in 0..=q_max {
            let rem = &rem_p - &b * Int::from(q);
            let (r_int, leftover) = rem.div_rem(&g);
            if !leftover.is_zero() {
                continue;
            }
            let r = r_int.to_u64().expect("packing bound fits u64");
            let total = p + q + r;
            if total >= 1 && total <= cap {
                out.push(VertexEquation::new(p, q, r, sigma.clone()));
            }
        }
    }
    out
}

/// Solves `p*alpha + q*(pi/2 - alpha) + r*pi/2 = delta_n` for alpha.
/// The result can land outside `(0, pi/2)`; the caller filters.
pub fn solve_corner_equation(p: u64, q: u64, r: u64, n: u64) -> Result<PiAngle> {
    if n < 3 || n == 4 {
        return Err(Error::OutOfDomain(n, "solve_corner_equation"));
    }
    if p == q {
        return Err(Error::DegenerateCornerEquation);
    }
    let delta = PiAngle::interior_angle(n);
    let half_turns = Rational::new(Int::from(q + r), Int::from(2));
    let rhs = delta.coefficient() - half_turns;
    let divisor = Rational::from_integer(Int::from(p as i64 - q as i64));
    Ok(PiAngle::new(rhs / divisor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn angle(n: i64, d: i64) -> PiAngle {
        PiAngle::from_ratio(n, d)
    }

    #[test]
    fn pair_is_sorted_and_unordered() {
        let p1 = TrianglePair::new(angle(1, 3), angle(1, 6)).unwrap();
        let p2 = TrianglePair::new(angle(1, 6), angle(1, 3)).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(p1.alpha(), &angle(1, 6));
        assert_eq!(p1.beta(), &angle(1, 3));
    }

    #[test]
    fn pair_rejects_bad_angles() {
        assert!(TrianglePair::new(angle(1, 3), angle(1, 3)).is_err());
        assert!(TrianglePair::from_alpha(angle(1, 2)).is_err());
        assert!(TrianglePair::from_alpha(angle(0, 1)).is_err());
        assert!(TrianglePair::from_alpha(angle(-1, 6)).is_err());
    }

    #[test]
    fn canonical_pairs() {
        let p = TrianglePair::canonical_for(5);
        assert_eq!(p.alpha(), &angle(1, 5));
        assert_eq!(p.beta(), &angle(3, 10));
        let p3 = TrianglePair::canonical_for(3);
        assert_eq!(p3.alpha(), &angle(1, 6));
        assert_eq!(p3.beta(), &angle(1, 3));
    }

    #[test]
    fn quarter_angle_packings() {
        // alpha = beta = pi/4, sigma = pi/2, at most two tiles
        let pair = TrianglePair::from_alpha(angle(1, 4)).unwrap();
        let out = enumerate_packings(&pair, &PiAngle::right(), Some(2));
        let triples: Vec<(u64, u64, u64)> = out.iter().map(|e| (e.p, e.q, e.r)).collect();
        assert_eq!(triples, vec![(0, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 0)]);
    }

    #[test]
    fn packings_all_satisfy_their_equation() {
        let pair = TrianglePair::new(angle(1, 6), angle(1, 3)).unwrap();
        let sigma = angle(2, 3);
        for eq in enumerate_packings(&pair, &sigma, Some(2)) {
            assert!(eq.holds_for(&pair));
            assert!(eq.tiles() >= 1 && eq.tiles() <= 2);
        }
    }

    #[test]
    fn corner_equation_solutions() {
        for n in [3, 5, 7, 8, 12, 30] {
            // 2*alpha = delta_n
            let a = solve_corner_equation(2, 0, 0, n).unwrap();
            assert_eq!(
                a.coefficient(),
                &(Rational::new(Int::from(n as i64 - 2), Int::from(2 * n as i64)))
            );
            // alpha + gamma = delta_n
            let b = solve_corner_equation(1, 0, 1, n).unwrap();
            assert_eq!(
                b.coefficient(),
                &(Rational::new(Int::from(n as i64 - 4), Int::from(2 * n as i64)))
            );
        }
        assert_eq!(solve_corner_equation(1, 0, 0, 3).unwrap(), angle(1, 3));
        assert!(matches!(
            solve_corner_equation(1, 1, 0, 5),
            Err(Error::DegenerateCornerEquation)
        ));
        assert!(matches!(
            solve_corner_equation(2, 0, 0, 4),
            Err(Error::OutOfDomain(4, _))
        ));
    }

    #[test]
    fn round_trip_identity() {
        // p*alpha + q*(pi/2 - alpha) + r*pi/2 = delta_n for the solved alpha
        for (p, q, r, n) in [(2, 0, 0, 5u64), (1, 0, 1, 8), (3, 1, 0, 7), (0, 2, 1, 9)] {
            let alpha = solve_corner_equation(p, q, r, n).unwrap();
            let beta = &PiAngle::right() - &alpha;
            let sum = &(&alpha.scaled(&rat(p as i64, 1)) + &beta.scaled(&rat(q as i64, 1)))
                + &PiAngle::right().scaled(&rat(r as i64, 1));
            assert_eq!(sum, PiAngle::interior_angle(n));
        }
    }
}
