//! Exact geometric predicates with a floating filter.
//!
//! Every predicate first tries a rigorous f64 interval evaluation of
//! cached point enclosures; only when that interval straddles zero does it
//! fall back to the exact cyclotomic computation (canonical zero test,
//! then escalating dyadic refinement). The filter can only ever say
//! "definitely positive/negative", never lie.

use crate::error::Result;
use crate::field::cyclo::CycloNum;
use crate::field::eval::{eval_fbox, sign_imag_antireal};
use crate::field::interval::FBox;
use crate::field::Sign;

/// A point plus its cached f64 enclosure.
#[derive(Debug, Clone)]
pub(crate) struct EvalPt<'a> {
    pub z: &'a CycloNum,
    pub bx: FBox,
}

impl<'a> EvalPt<'a> {
    pub fn new(z: &'a CycloNum) -> Self {
        EvalPt {
            z,
            bx: eval_fbox(z),
        }
    }
}

/// Orientation of the triple `(a, b, c)`: the sign of
/// `Im(conj(b - a) * (c - a))`. Positive means counterclockwise.
pub(crate) fn orient(a: &EvalPt, b: &EvalPt, c: &EvalPt) -> Result<Sign> {
    let u = b.bx.sub(&a.bx);
    let v = c.bx.sub(&a.bx);
    if let Some(sign) = u.conj_mul(&v).im.sign() {
        return Ok(sign);
    }
    // repeated points (common: tiles sharing a vertex) degenerate to zero;
    // box equality screens before the exact vector comparison
    if same_point(a, b) || same_point(a, c) || same_point(b, c) {
        return Ok(Sign::Zero);
    }
    let uz = b.z.try_sub(a.z)?;
    let vz = c.z.try_sub(a.z)?;
    // 2i * Im(conj(u) v): purely imaginary, same imaginary-part sign
    sign_imag_antireal(&CycloNum::cross_form(&uz, &vz))
}

fn same_point(x: &EvalPt, y: &EvalPt) -> bool {
    x.bx == y.bx && x.z == y.z
}
