//! The n = 6 case analysis.
//!
//! Writing `b = 2*beta/pi` (so `1/2 <= b < 1`), a corner equation
//! `p0*alpha + q0*beta + r0*gamma = 2pi/3` becomes
//! `p0*(1-b) + q0*b + r0 = 4/3`. The branches below are derived
//! mechanically and every surviving one forces `b = 2/3`, i.e. the pair
//! `(pi/6, pi/3)`.

use crate::field::rational::{rat, Rational};
use crate::field::PiAngle;
use crate::vertex::TrianglePair;
use num_traits::One;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum N6Branch {
    #[serde(rename = "corner-s2")]
    CornerS2,
    #[serde(rename = "interior-s3-u2")]
    InteriorS3U2,
    #[serde(rename = "interior-s6-u3")]
    InteriorS6U3,
    #[serde(rename = "interior-s6-u4")]
    InteriorS6U4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum N6Verdict {
    #[serde(rename = "forces-b-2/3")]
    ForcesBTwoThirds,
    #[serde(rename = "contradiction")]
    Contradiction,
}

/// One branch of the analysis; `b` is present exactly when the branch
/// pins it down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct N6CaseRecord {
    pub branch: N6Branch,
    pub s: u64,
    pub u: Option<u64>,
    #[serde(with = "crate::field::rational::opt_fraction_serde")]
    pub b: Option<Rational>,
    pub verdict: N6Verdict,
    pub note: String,
}

fn b_in_range(b: &Rational) -> bool {
    &rat(1, 2) <= b && b < &Rational::one()
}

/// Runs the whole analysis and returns its four branch records in a fixed
/// order: corner, then the interior/edge branches by (s, u).
pub fn n6_case_analysis() -> Vec<N6CaseRecord> {
    let four_thirds = rat(4, 3);
    let mut records = Vec::with_capacity(4);

    // Corner branch, p0 <= q0: with s = q0 - p0 and t = p0 + r0 we get
    // s*b = 4/3 - t. Nonnegativity of s*b leaves t in {0, 1}, so
    // s*b in {4/3, 1/3}; scan the integer s values compatible with
    // 1/2 <= b < 1.
    let mut corner_hits: Vec<(u64, Rational)> = Vec::new();
    for t in 0..=1i64 {
        let sb = &four_thirds - rat(t, 1);
        for s in 1..=4u64 {
            let b = &sb / rat(s as i64, 1);
            if b_in_range(&b) {
                corner_hits.push((s, b));
            }
        }
    }
    assert_eq!(corner_hits.len(), 1, "corner branch must be unique");
    let (s, b) = corner_hits.pop().unwrap();
    assert_eq!((s, &b), (2, &rat(2, 3)));
    records.push(N6CaseRecord {
        branch: N6Branch::CornerS2,
        s,
        u: None,
        b: Some(b),
        verdict: N6Verdict::ForcesBTwoThirds,
        note: "corner with p0 <= q0: s*b = 4/3 or 1/3; 1/2 <= b < 1 admits only s = 2, s*b = 4/3"
            .to_string(),
    });

    // Interior/edge branch: some vertex off the corners has p < q, and its
    // target is pi or 2pi, so s*b = u for an integer u in 1..=4 (the target
    // divided by gamma, minus p + r). From 1/2 <= b < 1: u < s <= 2u,
    // hence 2 <= s <= 8. With b = u/s the corner equation's left side is
    // v/s for an integer v, and v/s = 4/3 forces 3 | s.
    let s_values: Vec<u64> = (2..=8).filter(|s| (4 * s) % 3 == 0).collect();
    assert_eq!(s_values, vec![3, 6]);
    for s in s_values {
        for u in 1..=4u64 {
            let b = rat(u as i64, s as i64);
            if !b_in_range(&b) {
                continue;
            }
            let branch = match (s, u) {
                (3, 2) => N6Branch::InteriorS3U2,
                (6, 3) => N6Branch::InteriorS6U3,
                (6, 4) => N6Branch::InteriorS6U4,
                other => panic!("unexpected interior branch {:?}", other),
            };
            if b == rat(2, 3) {
                records.push(N6CaseRecord {
                    branch,
                    s,
                    u: Some(u),
                    b: Some(b),
                    verdict: N6Verdict::ForcesBTwoThirds,
                    note: format!("s = {}, u = {} gives b = 2/3 directly", s, u),
                });
            } else {
                // b = 1/2 makes every corner-equation value a half-integer
                // w/2; check mechanically that 4/3 is not one.
                assert_eq!(b, rat(1, 2));
                let doubled = &four_thirds * rat(2, 1);
                assert!(!doubled.is_integer());
                records.push(N6CaseRecord {
                    branch,
                    s,
                    u: Some(u),
                    b: None,
                    verdict: N6Verdict::Contradiction,
                    note: format!(
                        "s = {}, u = {} would give b = 1/2, making the corner value w/2 \
                         for an integer w; 2*(4/3) = {} is not an integer",
                        s, u, doubled
                    ),
                });
            }
        }
    }

    assert_eq!(records.len(), 4);
    records
}

/// The pair every surviving branch forces: `(pi/6, pi/3)`.
pub fn n6_unique_pair() -> TrianglePair {
    TrianglePair::from_alpha(PiAngle::from_ratio(1, 6)).unwrap()
}
