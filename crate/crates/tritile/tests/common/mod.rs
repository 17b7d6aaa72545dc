//! Shared helpers for the integration suites: an independent numeric
//! oracle, an independent packing scan, and tiling mutations.
//!
//! The numeric oracle evaluates real parts of cyclotomic numbers in
//! decimal fixed-point interval arithmetic built directly on big
//! integers: base 10 (not the library's base 2), pi from Euler's
//! arctan(1/2) + arctan(1/3) (not Machin), and its own Taylor loop. It
//! shares no code with the library's enclosure machinery.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::Rng;
use std::collections::BTreeSet;
use tritile::field::rational::rat;
use tritile::field::{CycloNum, PiAngle, Rational, Sign};
use tritile::tiling::{Tiling, Triangle};
use tritile::vertex::TrianglePair;

/// `[lo, hi] * 10^-scale`
#[derive(Debug, Clone)]
pub struct DecInterval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub scale: u32,
}

fn p10(scale: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), scale as usize)
}

impl DecInterval {
    fn point(v: BigInt, scale: u32) -> Self {
        DecInterval {
            lo: v.clone(),
            hi: v,
            scale,
        }
    }

    fn zero(scale: u32) -> Self {
        DecInterval::point(BigInt::zero(), scale)
    }

    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.scale, other.scale);
        DecInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            scale: self.scale,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.scale, other.scale);
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let d = p10(self.scale);
        DecInterval {
            lo: cands.iter().min().unwrap().div_floor(&d),
            hi: cands.iter().max().unwrap().div_ceil(&d),
            scale: self.scale,
        }
    }

    fn mul_rational(&self, q: &Rational) -> Self {
        let (n, d) = (q.numer(), q.denom());
        let (a, b) = if q.is_negative() {
            (&self.hi * n, &self.lo * n)
        } else {
            (&self.lo * n, &self.hi * n)
        };
        DecInterval {
            lo: a.div_floor(d),
            hi: b.div_ceil(d),
            scale: self.scale,
        }
    }

    fn div_int(&self, k: i64) -> Self {
        self.mul_rational(&Rational::new(BigInt::from(1), BigInt::from(k)))
    }

    fn widen(&self, units: &BigInt) -> Self {
        DecInterval {
            lo: &self.lo - units,
            hi: &self.hi + units,
            scale: self.scale,
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        let scaled = q * Rational::from_integer(p10(self.scale));
        Rational::from_integer(self.lo.clone()) <= scaled
            && scaled <= Rational::from_integer(self.hi.clone())
    }
}

fn arctan_recip(x: i64, scale: u32) -> DecInterval {
    let unit = p10(scale);
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = BigInt::from(x);
    let mut sum = DecInterval::zero(scale);
    let mut k: i64 = 0;
    loop {
        let denom = &power * BigInt::from(2 * k + 1);
        let term = DecInterval {
            lo: unit.div_floor(&denom),
            hi: unit.div_ceil(&denom),
            scale,
        };
        let term_hi = term.hi.clone();
        sum = if k % 2 == 0 {
            sum.add(&term)
        } else {
            sum.add(&DecInterval {
                lo: -term.hi,
                hi: -term.lo,
                scale,
            })
        };
        if term_hi <= BigInt::from(1) {
            return sum.widen(&BigInt::from(2));
        }
        power *= &x2;
        k += 1;
    }
}

/// pi = 4 (arctan(1/2) + arctan(1/3))
pub fn pi_dec(scale: u32) -> DecInterval {
    let s = arctan_recip(2, scale + 5).add(&arctan_recip(3, scale + 5));
    let four = s.mul_rational(&Rational::from_integer(BigInt::from(4)));
    DecInterval {
        lo: four.lo.div_floor(&p10(5)),
        hi: four.hi.div_ceil(&p10(5)),
        scale,
    }
}

/// cos over an interval argument (|theta| bounded by ~7).
fn cos_dec(theta: &DecInterval) -> DecInterval {
    let scale = theta.scale;
    let mid: BigInt = (&theta.lo + &theta.hi).div_floor(&BigInt::from(2));
    let dev = (&theta.hi - &mid).max(&mid - &theta.lo);
    let x = DecInterval::point(mid, scale);
    let x2 = x.mul(&x);
    let mut term = DecInterval::point(p10(scale), scale); // 1
    let mut sum = term.clone();
    let mut k: i64 = 1;
    loop {
        term = term.mul(&x2).div_int(-(2 * k - 1) * (2 * k));
        sum = sum.add(&term);
        let mag = term.lo.abs().max(term.hi.abs());
        // ratio below 1/2 beyond k ~ 4 for |x| <= 7; then the tail is
        // bounded by twice the next term
        if k >= 5 && mag <= BigInt::from(2) {
            break;
        }
        k += 1;
    }
    sum.widen(&(BigInt::from(6) + dev))
}

/// Interval enclosure of `Re(a)` with roughly `digits` correct decimals.
pub fn oracle_real_enclosure(a: &CycloNum, digits: u32) -> DecInterval {
    let scale = digits + 20;
    let pi = pi_dec(scale);
    let m = a.order();
    let mut acc = DecInterval::zero(scale);
    for (j, c) in a
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
    {
        // Re(c * zeta^j) = c * cos(2*pi*j/m)
        let theta = pi.mul_rational(&Rational::new(BigInt::from(2 * j as u64), BigInt::from(m)));
        acc = acc.add(&cos_dec(&theta).mul_rational(c));
    }
    acc
}

/// Sign of `Re(a)` if the 200-digit evaluation separates it from zero.
pub fn oracle_real_sign(a: &CycloNum) -> Option<Sign> {
    oracle_real_enclosure(a, 200).sign()
}

/// Independent packing enumeration: a full scan of the (p, q, r) box
/// checking the angle equation at every point, instead of the library's
/// bounded loops with a divisibility solve.
pub fn brute_force_packings(pair: &TrianglePair, sigma: &PiAngle) -> BTreeSet<(u64, u64, u64)> {
    let alpha = pair.alpha().coefficient();
    let beta = pair.beta().coefficient();
    let gamma = rat(1, 2);
    let s = sigma.coefficient();
    let min_angle = alpha.min(&gamma).clone();
    let bound = (s / &min_angle).ceil().to_integer().to_u64().unwrap();

    let scale: i128 = [alpha, beta, &gamma, s]
        .iter()
        .map(|x| x.denom().to_i128().unwrap())
        .fold(1, num_integer::lcm);
    let to_int = |x: &Rational| -> i128 {
        x.numer().to_i128().unwrap() * (scale / x.denom().to_i128().unwrap())
    };
    let (a, b, g, target) = (to_int(alpha), to_int(beta), to_int(&gamma), to_int(s));

    let mut out = BTreeSet::new();
    for p in 0..=bound {
        for q in 0..=bound {
            for r in 0..=bound {
                if p + q + r == 0 {
                    continue;
                }
                if a * p as i128 + b * q as i128 + g * r as i128 == target {
                    out.insert((p, q, r));
                }
            }
        }
    }
    out
}

pub fn random_triangle_pair(rng: &mut StdRng) -> TrianglePair {
    let den = rng.gen_range(3i64..=48);
    let num = rng.gen_range(1i64..=((den - 1) / 2).max(1));
    TrianglePair::from_alpha(PiAngle::new(rat(num, den))).unwrap()
}

pub fn random_sigma(rng: &mut StdRng) -> PiAngle {
    match rng.gen_range(0u8..3) {
        0 => PiAngle::interior_angle(rng.gen_range(3u64..=50)),
        1 => PiAngle::straight(),
        _ => PiAngle::full_turn(),
    }
}

pub enum Mutation {
    Delete,
    Duplicate,
    Translate,
}

pub fn translate_triangle(tri: &Triangle, offset: &CycloNum) -> Triangle {
    Triangle::new(
        tri.a.z.try_add(offset).unwrap(),
        tri.b.z.try_add(offset).unwrap(),
        tri.c.z.try_add(offset).unwrap(),
    )
}

pub fn random_offset(rng: &mut StdRng, order: u64) -> CycloNum {
    loop {
        let dx = rat(rng.gen_range(-3i64..=3), 100);
        let dy = rat(rng.gen_range(-3i64..=3), 100);
        let re = CycloNum::from_rational(order, dx);
        let dir = if order % 4 == 0 {
            CycloNum::root_power(order, (order / 4) as i64)
        } else {
            CycloNum::root_power(order, 1)
        };
        let offset = re.try_add(&dir.scale(&dy)).unwrap();
        if !offset.is_zero() {
            return offset;
        }
    }
}

pub fn mutate_tiling(t: &Tiling, which: &Mutation, idx: usize, rng: &mut StdRng) -> Tiling {
    let mut out = t.clone();
    match which {
        Mutation::Delete => {
            out.tiles.remove(idx);
        }
        Mutation::Duplicate => {
            let copy = out.tiles[idx].clone();
            out.tiles.push(copy);
        }
        Mutation::Translate => {
            let offset = random_offset(rng, t.field_order);
            out.tiles[idx] = translate_triangle(&out.tiles[idx], &offset);
        }
    }
    out
}
