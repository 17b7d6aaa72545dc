//! Rigorous numeric evaluation of cyclotomic numbers.
//!
//! Sign determination is a two-stage affair: the exact zero test is a
//! canonical-form comparison, and a provably nonzero value gets an interval
//! enclosure at escalating precision (64 bits, doubling, hard cap 2^16)
//! until the enclosure excludes zero. The cap turns a would-be hang into a
//! loud error; it is unreachable for genuine field elements.

use super::cyclo::{euler_phi, CycloNum};
use super::interval::{ComplexBox, FBox, RealInterval};
use super::rational::{Int, Rational};
use super::Sign;
use crate::error::{Error, Result};
use num_integer::Integer;
use num_traits::One;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Starting precision of the refinement ladder.
pub const START_BITS: u32 = 64;
/// Hard cap; exceeding it is reported as an internal-limit error.
pub const MAX_BITS: u32 = 1 << 16;

fn pi_cache() -> &'static Mutex<HashMap<u32, RealInterval>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, RealInterval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `arctan(1/x)` by its alternating series, with the tail absorbed into
/// the enclosure.
fn arctan_recip(x: u64, bits: u32) -> RealInterval {
    let one = Int::one() << bits;
    let x2 = Int::from(x) * Int::from(x);
    let mut sum = RealInterval::zero(bits);
    let mut power = Int::from(x);
    let mut k: u64 = 0;
    loop {
        let d = &power * Int::from(2 * k + 1);
        let lo = one.div_floor(&d);
        let hi = one.div_ceil(&d);
        let term = RealInterval::new(lo, hi.clone(), bits);
        sum = if k.is_multiple_of(2) {
            sum.add(&term)
        } else {
            sum.sub(&term)
        };
        if hi <= Int::one() {
            // alternating, decreasing: remaining tail is below this term
            return sum.widen(&Int::from(2));
        }
        power *= &x2;
        k += 1;
    }
}

/// Enclosure of pi (Machin's formula).
pub(crate) fn pi_enclosure(bits: u32) -> RealInterval {
    if let Some(p) = pi_cache().lock().unwrap().get(&bits) {
        return p.clone();
    }
    let wb = bits + 16;
    let a = arctan_recip(5, wb).mul_rational(&Rational::from_integer(16.into()));
    let b = arctan_recip(239, wb).mul_rational(&Rational::from_integer(4.into()));
    let pi = a.sub(&b).rescale(bits);
    pi_cache().lock().unwrap().insert(bits, pi.clone());
    pi
}

/// Taylor enclosures of cos and sin over a (narrow) interval argument.
/// Valid for |theta| <= 8.
fn cos_sin(theta: &RealInterval) -> (RealInterval, RealInterval) {
    let bits = theta.bits();
    let (lo, hi) = theta.endpoints();
    let mid: Int = (lo + hi) >> 1;
    let above: Int = hi - &mid;
    let below: Int = &mid - lo;
    let dev = above.max(below);
    let x = RealInterval::new(mid.clone(), mid, bits);
    let x2 = x.mul(&x);
    let x2_hi = x2.abs_hi();

    // Successive term ratio: cos divides by (2k-1)(2k), sin by (2k)(2k+1);
    // `offset` selects between the two.
    let taylor = |mut term: RealInterval, offset: u64| -> RealInterval {
        let mut sum = term.clone();
        let mut k: u64 = 1;
        loop {
            let step = Rational::new(
                -Int::one(),
                Int::from(2 * k - 1 + offset) * Int::from(2 * k + offset),
            );
            term = term.mul(&x2).mul_rational(&step);
            sum = sum.add(&term);
            // Once the term ratio falls below 1/2 the tail is bounded by
            // twice the next term.
            let scaled_denom =
                (Int::from(2 * k + 1 + offset) * Int::from(2 * k + 2 + offset)) << bits;
            let ratio_ok = &x2_hi * Int::from(2) <= scaled_denom;
            let next_mag = (term.abs_hi() * &x2_hi).div_ceil(&scaled_denom);
            if ratio_ok && next_mag <= Int::from(4) {
                return sum.widen(&(next_mag * Int::from(2) + Int::from(2)));
            }
            k += 1;
        }
    };

    let cos = taylor(RealInterval::point_int(1, bits), 0);
    let sin = taylor(x.clone(), 1);
    // |cos'|, |sin'| <= 1: widen by the half-width of the argument
    (cos.widen(&dev), sin.widen(&dev))
}

type RootKey = (u64, u32);

fn root_cache() -> &'static Mutex<HashMap<RootKey, Arc<Vec<ComplexBox>>>> {
    static CACHE: OnceLock<Mutex<HashMap<RootKey, Arc<Vec<ComplexBox>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Enclosures of `zeta_m^j` for the canonical basis exponents `j < phi(m)`.
pub(crate) fn root_table(order: u64, bits: u32) -> Arc<Vec<ComplexBox>> {
    if let Some(t) = root_cache().lock().unwrap().get(&(order, bits)) {
        return t.clone();
    }
    let wb = bits + 8;
    let pi = pi_enclosure(wb);
    let phi = euler_phi(order) as usize;
    let mut roots = Vec::with_capacity(phi);
    for j in 0..phi {
        let theta = pi.mul_rational(&Rational::new(Int::from(2 * j as u64), Int::from(order)));
        let (cos, sin) = cos_sin(&theta);
        roots.push(ComplexBox::new(cos.rescale(bits), sin.rescale(bits)));
    }
    let arc = Arc::new(roots);
    root_cache()
        .lock()
        .unwrap()
        .entry((order, bits))
        .or_insert_with(|| arc.clone());
    arc
}

fn froot_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<FBox>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<FBox>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// f64 filter enclosures of the basis roots, derived from the 64-bit
/// dyadic table so they stay rigorous.
pub(crate) fn froot_table(order: u64) -> Arc<Vec<FBox>> {
    if let Some(t) = froot_cache().lock().unwrap().get(&order) {
        return t.clone();
    }
    let dyadic = root_table(order, START_BITS);
    let arc = Arc::new(dyadic.iter().map(ComplexBox::to_fbox).collect::<Vec<_>>());
    froot_cache()
        .lock()
        .unwrap()
        .entry(order)
        .or_insert_with(|| arc.clone());
    arc
}

/// Interval enclosure of the complex value at the given dyadic precision.
pub(crate) fn eval_box(a: &CycloNum, bits: u32) -> ComplexBox {
    let table = root_table(a.order(), bits);
    let mut acc = ComplexBox::zero(bits);
    for (j, c) in a.nonzero_terms() {
        acc = acc.add(&table[j].mul_rational(c));
    }
    acc
}

/// Cheap f64 enclosure used by the geometric filters.
pub(crate) fn eval_fbox(a: &CycloNum) -> FBox {
    let table = froot_table(a.order());
    let mut acc = FBox::zero();
    for (j, c) in a.nonzero_terms() {
        let ci = RealInterval::from_rational(c, 53).to_f64_interval();
        acc = acc.add(&table[j].scale(&ci));
    }
    acc
}

enum Component {
    Re,
    Im,
}

fn refine_sign(a: &CycloNum, component: Component) -> Result<Sign> {
    let mut bits = START_BITS;
    loop {
        let enclosure = eval_box(a, bits);
        let interval = match component {
            Component::Re => &enclosure.re,
            Component::Im => &enclosure.im,
        };
        if let Some(sign) = interval.sign() {
            return Ok(sign);
        }
        if bits >= MAX_BITS {
            return Err(Error::PrecisionCap(MAX_BITS));
        }
        bits *= 2;
    }
}

/// Sign of a conjugation-fixed (real) element. Exact zero test first, then
/// interval refinement; errors if the element is not real.
pub fn sign_real(a: &CycloNum) -> Result<Sign> {
    if a.is_zero() {
        return Ok(Sign::Zero);
    }
    if !a.is_real() {
        return Err(Error::NotReal);
    }
    refine_sign(a, Component::Re)
}

/// Sign of the imaginary part of an arbitrary element; zero is decided
/// exactly via `a == conj(a)`.
pub fn sign_imag(a: &CycloNum) -> Result<Sign> {
    if a.is_zero() || a.is_real() {
        return Ok(Sign::Zero);
    }
    refine_sign(a, Component::Im)
}

/// Sign of the imaginary part of an element already known to satisfy
/// `conj(a) = -a` (purely imaginary); skips the conjugation test, since
/// such an element is zero iff its canonical form is.
pub(crate) fn sign_imag_antireal(a: &CycloNum) -> Result<Sign> {
    if a.is_zero() {
        return Ok(Sign::Zero);
    }
    debug_assert!(a.try_add(&a.conj()).map(|s| s.is_zero()).unwrap_or(false));
    refine_sign(a, Component::Im)
}

/// A complex interval box of width at most `10^-digits` in each component.
pub fn approx(a: &CycloNum, digits: u32) -> ComplexBox {
    assert!(digits >= 1, "approx needs at least one digit");
    let mut bits = START_BITS.max(digits * 4 + 16);
    loop {
        let b = eval_box(a, bits);
        if b.re.width_at_most_pow10(digits) && b.im.width_at_most_pow10(digits) {
            return b;
        }
        bits *= 2;
        assert!(bits <= 1 << 26, "approx failed to converge (bug)");
    }
}
