//! Similarity classes of right triangles and the exact similarity test.
//!
//! With the right angle at vertex `a`, the complex ratio
//! `(c - a)/(b - a)` of a right triangle equals `i * tan(angle at b)`
//! up to sign, and for an acute angle `theta = t*pi` the value
//! `i*tan(theta) = (w - 1)/(w + 1)` with `w = exp(2*i*theta)` lies in
//! Q(zeta_m) whenever w does. Similarity (reflections included) is then
//! exact cross-multiplied equality of the ratio against one of the four
//! reference values.

use crate::error::{Error, Result};
use crate::field::cyclo::CycloNum;
use crate::field::eval::eval_fbox;
use crate::field::interval::FBox;
use crate::field::rational::Rational;
use crate::field::PiAngle;
use crate::tiling::predicates::EvalPt;
use crate::tiling::Triangle;
use crate::vertex::TrianglePair;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Chirality of a matched tile relative to the reference triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Direct,
    Mirrored,
}

/// A similarity class of right triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeClass {
    /// Acute angles as exact fractions of pi.
    Angles(TrianglePair),
    /// Right triangle with legs `1` and `1/ratio` (equivalently `ratio`
    /// and `1`); covers shapes whose angles are not rational in pi.
    LegRatio(Rational),
}

/// One reference ratio as an exact fraction `num/den` of field elements.
pub(crate) struct RatioRef {
    num: CycloNum,
    den: CycloNum,
    num_bx: FBox,
    den_bx: FBox,
}

impl RatioRef {
    fn new(num: CycloNum, den: CycloNum) -> Self {
        let num_bx = eval_fbox(&num);
        let den_bx = eval_fbox(&den);
        RatioRef {
            num,
            den,
            num_bx,
            den_bx,
        }
    }
}

/// `exp(2*i*theta)` as a field element, when representable. The roots of
/// unity inside Q(zeta_m) have order m for even m but 2m for odd m (where
/// `-zeta_m^((m+1)/2)` is a primitive 2m-th root), so both cases are
/// honored before reporting the field as too small.
fn turn(theta: &PiAngle, order: u64) -> Result<CycloNum> {
    let c = theta.coefficient();
    let too_small = || Error::FieldTooSmall {
        order,
        angle: c.to_string(),
    };
    let den = c.denom().to_u64().ok_or_else(too_small)?;
    let num = c.numer().to_i64().ok_or_else(too_small)?;
    let num = num.rem_euclid(den as i64) as u64;
    if den != 0 && order.is_multiple_of(den) {
        // exp(2*pi*i * num/den) = zeta_order^(num * order/den)
        return Ok(CycloNum::root_power(order, ((order / den) * num) as i64));
    }
    if den != 0 && order % 2 == 1 && (2 * order).is_multiple_of(den) {
        // express as zeta_(2*order)^e = (-1)^e * zeta_order^(e(order+1)/2)
        let e = (2 * order / den) as u128 * num as u128 % (2 * order as u128);
        let half = order.div_ceil(2) as u128;
        let exp = (e % order as u128) * half % order as u128;
        let value = CycloNum::root_power(order, exp as i64);
        return Ok(if e % 2 == 1 { -&value } else { value });
    }
    Err(too_small())
}

impl ShapeClass {
    pub fn from_pair(pair: TrianglePair) -> Self {
        ShapeClass::Angles(pair)
    }

    /// Leg-ratio class; the ratio must be positive.
    pub fn from_leg_ratio(ratio: Rational) -> Result<Self> {
        if !ratio.is_positive() {
            return Err(Error::InvalidPair(format!(
                "leg ratio must be positive, got {}",
                ratio
            )));
        }
        Ok(ShapeClass::LegRatio(ratio))
    }

    /// The two reference ratios `[alpha-family, beta-family]` in
    /// Q(zeta_order).
    pub(crate) fn reference_ratios(&self, order: u64) -> Result<[RatioRef; 2]> {
        match self {
            ShapeClass::Angles(pair) => {
                let one = CycloNum::one(order);
                let w_alpha = turn(pair.alpha(), order)?;
                let w_beta = turn(pair.beta(), order)?;
                Ok([
                    RatioRef::new(w_alpha.try_sub(&one)?, w_alpha.try_add(&one)?),
                    RatioRef::new(w_beta.try_sub(&one)?, w_beta.try_add(&one)?),
                ])
            }
            ShapeClass::LegRatio(r) => {
                if !order.is_multiple_of(4) {
                    return Err(Error::FieldTooSmall {
                        order,
                        angle: format!("arctan({})/pi", r),
                    });
                }
                let i = CycloNum::root_power(order, (order / 4) as i64);
                let one = CycloNum::one(order);
                // i*r and i/r = i * (1/r); cross-multiplied as i*1/(1*r)
                Ok([
                    RatioRef::new(i.scale(r), one),
                    RatioRef::new(i, CycloNum::from_rational(order, r.clone())),
                ])
            }
        }
    }
}

/// Outcome of matching one triangle against a shape class.
pub(crate) fn classify(
    pts: [&EvalPt; 3],
    refs: &[RatioRef; 2],
) -> Result<Option<Handedness>> {
    for rot in 0..3 {
        let (a, b, c) = (pts[rot], pts[(rot + 1) % 3], pts[(rot + 2) % 3]);
        // fast right-angle filter on Re(conj(u) v)
        let u_bx = b.bx.sub(&a.bx);
        let v_bx = c.bx.sub(&a.bx);
        if u_bx.conj_mul(&v_bx).re.excludes_zero() {
            continue;
        }
        let u = b.z.try_sub(a.z)?;
        let v = c.z.try_sub(a.z)?;
        if u.is_zero() || v.is_zero() {
            return Ok(None);
        }
        if !CycloNum::dot_form(&u, &v).is_zero() {
            continue; // not the right-angle vertex
        }
        // Right angle at `a` (unique in a nondegenerate triangle). Match
        // v/u against each reference by cross-multiplication; the matched
        // sign also tells the stored orientation.
        for (family, r) in refs.iter().enumerate() {
            let lhs_bx = v_bx.mul(&r.den_bx);
            let rhs_bx = u_bx.mul(&r.num_bx);
            let plus_possible = !lhs_bx.disjoint_from(&rhs_bx);
            let minus_possible = !lhs_bx.disjoint_from(&FBox::zero().sub(&rhs_bx));
            if !plus_possible && !minus_possible {
                continue;
            }
            let lhs = v.try_mul(&r.den)?;
            let rhs = u.try_mul(&r.num)?;
            // counterclockwise iff the matched ratio has positive imaginary
            // part, i.e. iff the sign is +
            let positive = if plus_possible && lhs == rhs {
                Some(true)
            } else if minus_possible && lhs == -&rhs {
                Some(false)
            } else {
                None
            };
            if let Some(positive) = positive {
                let direct = positive == (family == 0);
                return Ok(Some(if direct {
                    Handedness::Direct
                } else {
                    Handedness::Mirrored
                }));
            }
        }
        return Ok(None);
    }
    Ok(None)
}

/// Exact similarity of a triangle to the right triangle with the given
/// acute angles; reflections count as similar.
pub fn similar_to(t: &Triangle, pair: &TrianglePair) -> Result<bool> {
    let order = t.a.z.order();
    let refs = ShapeClass::Angles(pair.clone()).reference_ratios(order)?;
    let pts = [
        EvalPt::new(&t.a.z),
        EvalPt::new(&t.b.z),
        EvalPt::new(&t.c.z),
    ];
    Ok(classify([&pts[0], &pts[1], &pts[2]], &refs)?.is_some())
}
