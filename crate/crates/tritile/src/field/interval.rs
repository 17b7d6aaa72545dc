//! Interval arithmetic in two flavors.
//!
//! `RealInterval`/`ComplexBox` are dyadic fixed-point intervals with
//! arbitrary precision: endpoints are big integers scaled by `2^-bits`,
//! every operation rounds outward. They are the ground truth for numeric
//! enclosures.
//!
//! `FInterval`/`FBox` are hardware-float intervals used as a fast filter
//! in front of the exact predicates; they widen by one ulp after every
//! operation and degrade to a whole-line interval rather than lie.

use super::rational::{Int, Rational};
use super::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `[lo, hi] * 2^-bits` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealInterval {
    lo: Int,
    hi: Int,
    bits: u32,
}

fn pow2(bits: u32) -> Int {
    Int::one() << bits
}

fn shr_floor(x: &Int, bits: u32) -> Int {
    x.div_floor(&pow2(bits))
}

fn shr_ceil(x: &Int, bits: u32) -> Int {
    x.div_ceil(&pow2(bits))
}

impl RealInterval {
    pub fn new(lo: Int, hi: Int, bits: u32) -> Self {
        debug_assert!(lo <= hi);
        RealInterval { lo, hi, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub(crate) fn endpoints(&self) -> (&Int, &Int) {
        (&self.lo, &self.hi)
    }

    pub fn point_int(value: i64, bits: u32) -> Self {
        let v = Int::from(value) << bits;
        RealInterval::new(v.clone(), v, bits)
    }

    pub fn zero(bits: u32) -> Self {
        RealInterval::point_int(0, bits)
    }

    /// The tightest enclosure of a rational at this precision.
    pub fn from_rational(q: &Rational, bits: u32) -> Self {
        let scaled_num = q.numer() << bits;
        let lo = scaled_num.div_floor(q.denom());
        let hi = scaled_num.div_ceil(q.denom());
        RealInterval::new(lo, hi, bits)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        RealInterval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi, self.bits)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        RealInterval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo, self.bits)
    }

    pub fn neg(&self) -> Self {
        RealInterval::new(-&self.hi, -&self.lo, self.bits)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().unwrap();
        let hi = products.iter().max().unwrap();
        RealInterval::new(shr_floor(lo, self.bits), shr_ceil(hi, self.bits), self.bits)
    }

    /// Multiplication by an exact rational scalar.
    pub fn mul_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return RealInterval::zero(self.bits);
        }
        let (n, d) = (q.numer(), q.denom());
        let a = (&self.lo * n).div_floor(d);
        let b = (&self.hi * n).div_ceil(d);
        if q.is_positive() {
            RealInterval::new(a, b, self.bits)
        } else {
            let a2 = (&self.hi * n).div_floor(d);
            let b2 = (&self.lo * n).div_ceil(d);
            RealInterval::new(a2, b2, self.bits)
        }
    }

    /// Widens both endpoints by `slack` units of `2^-bits`.
    pub fn widen(&self, slack: &Int) -> Self {
        debug_assert!(!slack.is_negative());
        RealInterval::new(&self.lo - slack, &self.hi + slack, self.bits)
    }

    /// Rounds outward to a (usually coarser) precision.
    pub fn rescale(&self, bits: u32) -> Self {
        if bits == self.bits {
            return self.clone();
        }
        if bits > self.bits {
            let shift = bits - self.bits;
            RealInterval::new(&self.lo << shift, &self.hi << shift, bits)
        } else {
            let shift = self.bits - bits;
            RealInterval::new(shr_floor(&self.lo, shift), shr_ceil(&self.hi, shift), bits)
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, q: &Rational) -> bool {
        let scaled = q * Rational::from_integer(pow2(self.bits));
        let lo = Rational::from_integer(self.lo.clone());
        let hi = Rational::from_integer(self.hi.clone());
        lo <= scaled && scaled <= hi
    }

    pub fn lo_rational(&self) -> Rational {
        Rational::new(self.lo.clone(), pow2(self.bits))
    }

    pub fn hi_rational(&self) -> Rational {
        Rational::new(self.hi.clone(), pow2(self.bits))
    }

    /// True if the interval width is at most `10^-digits`.
    pub fn width_at_most_pow10(&self, digits: u32) -> bool {
        let width = &self.hi - &self.lo;
        width * super::rational::pow10(digits) <= pow2(self.bits)
    }

    pub fn abs_hi(&self) -> Int {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn lo_f64(&self) -> f64 {
        dyadic_to_f64(&self.lo, self.bits, RoundDir::Down)
    }

    pub fn hi_f64(&self) -> f64 {
        dyadic_to_f64(&self.hi, self.bits, RoundDir::Up)
    }

    pub fn mid_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) >> 1;
        dyadic_to_f64(&mid, self.bits, RoundDir::Nearest)
    }

    pub fn to_f64_interval(&self) -> FInterval {
        FInterval::new(self.lo_f64(), self.hi_f64())
    }
}

enum RoundDir {
    Down,
    Up,
    Nearest,
}

/// Converts `x * 2^-bits` to f64 with a guaranteed rounding direction.
fn dyadic_to_f64(x: &Int, bits: u32, dir: RoundDir) -> f64 {
    // Reduce to at most 64 significant bits first so the i128/f64 path is
    // exact enough and cheap.
    let nbits = x.bits();
    let (mant, extra_shift, inexact) = if nbits > 63 {
        let s = (nbits - 63) as u32;
        let shifted = x >> s;
        let inexact = (&shifted << s) != *x;
        (shifted, s as i64, inexact)
    } else {
        (x.clone(), 0i64, false)
    };
    let m = mant.to_i64().expect("reduced mantissa fits in i64") as f64;
    let exp = extra_shift - bits as i64;
    let f = m * (exp as f64).exp2();
    if f == 0.0 && !x.is_zero() {
        // exp2 underflowed; |true value| < 2^-1012, so 1e-300 is a safe bound
        return match dir {
            RoundDir::Nearest => 0.0,
            RoundDir::Down => {
                if x.is_negative() {
                    -1e-300
                } else {
                    0.0
                }
            }
            RoundDir::Up => {
                if x.is_negative() {
                    0.0
                } else {
                    1e-300
                }
            }
        };
    }
    // The arithmetic-shift truncation only ever rounds toward -inf and is
    // far below one f64 ulp; the nearest conversions cost at most half an
    // ulp each. One step in the requested direction absorbs both.
    match dir {
        RoundDir::Nearest => f,
        RoundDir::Down => f.next_down(),
        RoundDir::Up => {
            let f = if inexact { f.next_up() } else { f };
            f.next_up()
        }
    }
}

/// A rectangle `re + i*im` enclosing a complex value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexBox {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexBox { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        ComplexBox::new(RealInterval::zero(bits), RealInterval::zero(bits))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ComplexBox::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        ComplexBox::new(re, im)
    }

    pub fn conj(&self) -> Self {
        ComplexBox::new(self.re.clone(), self.im.neg())
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        ComplexBox::new(self.re.mul_rational(q), self.im.mul_rational(q))
    }

    pub fn mid_f64(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }

    pub fn to_fbox(&self) -> FBox {
        FBox {
            re: self.re.to_f64_interval(),
            im: self.im.to_f64_interval(),
        }
    }
}

/// Hardware-float interval with outward widening; a filter, not a proof.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FInterval {
    pub lo: f64,
    pub hi: f64,
}

impl FInterval {
    pub const WHOLE: FInterval = FInterval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub fn new(lo: f64, hi: f64) -> Self {
        if lo.is_nan() || hi.is_nan() {
            return FInterval::WHOLE;
        }
        debug_assert!(lo <= hi);
        FInterval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        FInterval::new(x, x)
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    fn is_exact_zero(&self) -> bool {
        self.lo == 0.0 && self.hi == 0.0
    }

    pub fn add(&self, rhs: &Self) -> Self {
        // x + 0 and 0 + x are exact; so is any sum that lands on 0
        if rhs.is_exact_zero() {
            return *self;
        }
        if self.is_exact_zero() {
            return *rhs;
        }
        let (lo, hi) = (self.lo + rhs.lo, self.hi + rhs.hi);
        if lo == 0.0 && hi == 0.0 && self.lo == self.hi && rhs.lo == rhs.hi {
            return FInterval::point(0.0);
        }
        FInterval::new(lo.next_down(), hi.next_up())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        if rhs.is_exact_zero() {
            return *self;
        }
        // a - b is exact whenever it is 0 (only equal values cancel)
        let (lo, hi) = (self.lo - rhs.hi, self.hi - rhs.lo);
        if lo == 0.0 && hi == 0.0 {
            return FInterval::point(0.0);
        }
        if self.is_exact_zero() {
            return rhs.neg();
        }
        FInterval::new(lo.next_down(), hi.next_up())
    }

    pub fn neg(&self) -> Self {
        FInterval::new(-self.hi, -self.lo)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // 0 * finite = 0 exactly
        if (self.is_exact_zero() && rhs.is_finite()) || (rhs.is_exact_zero() && self.is_finite()) {
            return FInterval::point(0.0);
        }
        if !self.is_finite() || !rhs.is_finite() {
            return FInterval::WHOLE;
        }
        let ps = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let mut lo = ps[0];
        let mut hi = ps[0];
        for p in &ps[1..] {
            if *p < lo {
                lo = *p;
            }
            if *p > hi {
                hi = *p;
            }
        }
        FInterval::new(lo.next_down(), hi.next_up())
    }

    pub fn sign(&self) -> Option<Sign> {
        if self.lo > 0.0 {
            Some(Sign::Positive)
        } else if self.hi < 0.0 {
            Some(Sign::Negative)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn excludes_zero(&self) -> bool {
        self.lo > 0.0 || self.hi < 0.0
    }
}

/// Complex f64 box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FBox {
    pub re: FInterval,
    pub im: FInterval,
}

impl FBox {
    pub fn zero() -> Self {
        FBox {
            re: FInterval::point(0.0),
            im: FInterval::point(0.0),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        FBox {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        FBox {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        FBox {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }

    pub fn conj(&self) -> Self {
        FBox {
            re: self.re,
            im: self.im.neg(),
        }
    }

    /// `conj(self) * rhs`, the workhorse of the orientation filter.
    pub fn conj_mul(&self, rhs: &Self) -> Self {
        self.conj().mul(rhs)
    }

    pub fn scale(&self, k: &FInterval) -> Self {
        FBox {
            re: self.re.mul(k),
            im: self.im.mul(k),
        }
    }

    /// True if the two boxes cannot describe the same complex number.
    pub fn disjoint_from(&self, rhs: &Self) -> bool {
        self.re.sub(&rhs.re).excludes_zero() || self.im.sub(&rhs.im).excludes_zero()
    }
}
