//! Elements of the cyclotomic field Q(zeta_m), reduced to a canonical
//! coordinate vector modulo the m-th cyclotomic polynomial.
//!
//! The basis is `1, z, ..., z^(phi(m)-1)` where `z = exp(2*pi*i/m)` and
//! `phi` is Euler's totient. Canonical form is unique, so equality and the
//! zero test are plain vector comparisons.

use super::rational::{fraction_string, parse_fraction, Int, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1);
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            phi -= phi / p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn proper_divisors(m: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=m / 2).filter(|d| m.is_multiple_of(*d)).collect();
    ds.sort_unstable();
    ds
}

/// Exact division of integer polynomials; `den` must be monic and divide
/// `num` exactly.
fn poly_div_exact(num: &[Int], den: &[Int]) -> Vec<Int> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    assert!(dn >= dd);
    let mut rem: Vec<Int> = num.to_vec();
    let mut quo = vec![Int::zero(); dn - dd + 1];
    for i in (0..quo.len()).rev() {
        let c = std::mem::replace(&mut rem[i + dd], Int::zero());
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate().take(dd) {
            rem[i + j] -= &c * dj;
        }
        quo[i] = c;
    }
    assert!(rem.iter().all(Int::is_zero), "inexact polynomial division");
    quo
}

fn cyclo_poly_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<Int>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<Int>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<Int>> {
    if let Some(p) = cyclo_poly_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        vec![-Int::one(), Int::one()]
    } else {
        // (x^m - 1) / prod of cyclotomic polynomials of the proper divisors
        let mut poly = vec![Int::zero(); m as usize + 1];
        poly[0] = -Int::one();
        poly[m as usize] = Int::one();
        for d in proper_divisors(m) {
            let phi_d = cyclotomic_polynomial(d);
            poly = poly_div_exact(&poly, &phi_d);
        }
        poly
    };
    let arc = Arc::new(poly);
    cyclo_poly_cache()
        .lock()
        .unwrap()
        .entry(m)
        .or_insert_with(|| arc.clone());
    arc
}

/// Per-order reduction data: the minimal polynomial and an incrementally
/// grown table of `x^(phi+j) mod Phi_m` rows.
pub(crate) struct FieldTable {
    pub phi: usize,
    min_poly: Arc<Vec<Int>>,
    rows: Mutex<Vec<Arc<Vec<Int>>>>,
}

impl FieldTable {
    pub(crate) fn get(order: u64) -> Arc<FieldTable> {
        static TABLES: OnceLock<Mutex<HashMap<u64, Arc<FieldTable>>>> = OnceLock::new();
        let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().unwrap().get(&order) {
            return t.clone();
        }
        let min_poly = cyclotomic_polynomial(order);
        let table = Arc::new(FieldTable {
            phi: min_poly.len() - 1,
            min_poly,
            rows: Mutex::new(Vec::new()),
        });
        cache
            .lock()
            .unwrap()
            .entry(order)
            .or_insert_with(|| table.clone())
            .clone()
    }

    /// Coefficients of `x^(phi + j)` modulo the minimal polynomial.
    fn row(&self, j: usize) -> Arc<Vec<Int>> {
        let mut rows = self.rows.lock().unwrap();
        while rows.len() <= j {
            let next = match rows.last() {
                None => {
                    // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
                    self.min_poly[..self.phi].iter().map(|c| -c).collect()
                }
                Some(prev) => {
                    let lead = prev[self.phi - 1].clone();
                    let mut next = vec![Int::zero(); self.phi];
                    for i in 1..self.phi {
                        next[i] = prev[i - 1].clone();
                    }
                    if !lead.is_zero() {
                        let base = &rows[0];
                        for i in 0..self.phi {
                            next[i] += &lead * &base[i];
                        }
                    }
                    next
                }
            };
            rows.push(Arc::new(next));
        }
        rows[j].clone()
    }

    /// Reduces a raw coefficient vector (any length) to the canonical
    /// length-phi vector.
    fn reduce(&self, mut raw: Vec<Rational>) -> Vec<Rational> {
        for j in (self.phi..raw.len()).rev() {
            let c = std::mem::replace(&mut raw[j], Rational::zero());
            if c.is_zero() {
                continue;
            }
            let row = self.row(j - self.phi);
            for i in 0..self.phi {
                if !row[i].is_zero() {
                    raw[i] += &c * Rational::from_integer(row[i].clone());
                }
            }
        }
        raw.truncate(self.phi);
        raw.resize(self.phi, Rational::zero());
        raw
    }
}

/// An element of Q(zeta_m) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    fn from_canonical(order: u64, coeffs: Vec<Rational>) -> Self {
        CycloNum { order, coeffs }
    }

    fn reduce_raw(order: u64, raw: Vec<Rational>) -> Self {
        let table = FieldTable::get(order);
        CycloNum::from_canonical(order, table.reduce(raw))
    }

    pub fn zero(order: u64) -> Self {
        let phi = euler_phi(order) as usize;
        CycloNum::from_canonical(order, vec![Rational::zero(); phi])
    }

    pub fn one(order: u64) -> Self {
        CycloNum::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u64, value: Rational) -> Self {
        let mut z = CycloNum::zero(order);
        z.coeffs[0] = value;
        z
    }

    pub fn from_integer(order: u64, value: i64) -> Self {
        CycloNum::from_rational(order, Rational::from_integer(value.into()))
    }

    /// `zeta_m^exp`, with any integer exponent.
    pub fn root_power(order: u64, exp: i64) -> Self {
        let m = order as i64;
        let e = exp.rem_euclid(m) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        CycloNum::reduce_raw(order, raw)
    }

    /// Builds an element from coefficients of `1, z, z^2, ...`; the vector
    /// may be any length up to the order.
    pub fn from_poly_coeffs(order: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTiling("field order must be >= 1".into()));
        }
        if coeffs.len() as u64 > order {
            return Err(Error::MalformedTiling(format!(
                "coefficient vector longer than the field order ({} > {})",
                coeffs.len(),
                order
            )));
        }
        Ok(CycloNum::reduce_raw(order, coeffs))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Canonical coordinates in the power basis, length `phi(order)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Returns the value as a rational if it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub(crate) fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order == rhs.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, rhs.order))
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloNum::from_canonical(self.order, coeffs))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloNum::from_canonical(self.order, coeffs))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(CycloNum::zero(self.order));
        }
        let phi = self.coeffs.len();
        let mut raw = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.nonzero_terms() {
            for (j, b) in rhs.nonzero_terms() {
                raw[i + j] += a * b;
            }
        }
        Ok(CycloNum::reduce_raw(self.order, raw))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return CycloNum::zero(self.order);
        }
        let coeffs = self.coeffs.iter().map(|c| c * k).collect();
        CycloNum::from_canonical(self.order, coeffs)
    }

    /// The Galois automorphism `zeta -> zeta^k`; requires gcd(k, order) = 1
    /// to be a field map, which the callers guarantee.
    pub(crate) fn galois(&self, k: u64) -> Self {
        let m = self.order;
        let mut raw = vec![Rational::zero(); m as usize];
        for (j, c) in self.nonzero_terms() {
            let e = ((j as u64) * k % m) as usize;
            raw[e] += c;
        }
        CycloNum::reduce_raw(m, raw)
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        self.galois(self.order - 1)
    }

    /// `(a + conj(a)) / 2`, a conjugation-fixed element.
    pub fn real_part(&self) -> Self {
        self.try_add(&self.conj())
            .expect("conjugate has the same order")
            .scale(&Rational::new(Int::one(), Int::from(2)))
    }

    /// True iff conjugation fixes the element.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(CycloNum::from_rational(self.order, q.recip()));
        }
        let table = FieldTable::get(self.order);
        let modulus: Vec<Rational> = table
            .min_poly
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let inv = poly_mod_inverse(&self.coeffs, &modulus)
            .expect("cyclotomic polynomials are irreducible over Q");
        Some(CycloNum::reduce_raw(self.order, inv))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycloNum::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).unwrap();
            }
        }
        acc
    }

    /// `conj(a)*b - a*conj(b)`, i.e. `2i * Im(conj(a) * b)`: four times
    /// `i` times the planar cross product of a and b. Computed in the
    /// group ring (conjugation is an exponent permutation there) with a
    /// single reduction at the end, which keeps sparse inputs sparse.
    pub(crate) fn cross_form(a: &CycloNum, b: &CycloNum) -> CycloNum {
        debug_assert_eq!(a.order, b.order);
        let m = a.order;
        let mu = m as usize;
        let mut raw = vec![Rational::zero(); mu];
        for (i, ca) in a.nonzero_terms() {
            for (j, cb) in b.nonzero_terms() {
                let p = ca * cb;
                let e1 = (j + mu - i) % mu; // conj(a)*b term
                let e2 = (i + mu - j) % mu; // a*conj(b) term
                raw[e1] += &p;
                raw[e2] -= p;
            }
        }
        CycloNum::reduce_raw(m, raw)
    }

    /// `conj(a)*b + a*conj(b)`, i.e. `2 * Re(conj(a) * b)`: twice the
    /// planar dot product of a and b. Conjugation-fixed by construction.
    pub(crate) fn dot_form(a: &CycloNum, b: &CycloNum) -> CycloNum {
        debug_assert_eq!(a.order, b.order);
        let m = a.order;
        let mu = m as usize;
        let mut raw = vec![Rational::zero(); mu];
        for (i, ca) in a.nonzero_terms() {
            for (j, cb) in b.nonzero_terms() {
                let p = ca * cb;
                let e1 = (j + mu - i) % mu;
                let e2 = (i + mu - j) % mu;
                raw[e1] += &p;
                raw[e2] += p;
            }
        }
        CycloNum::reduce_raw(m, raw)
    }

    /// Re-expresses the element in Q(zeta_new) where `order | new_order`.
    pub fn embed(&self, new_order: u64) -> Result<Self> {
        if new_order == self.order {
            return Ok(self.clone());
        }
        if new_order == 0 || !new_order.is_multiple_of(self.order) {
            return Err(Error::BadEmbedding {
                old: self.order,
                new: new_order,
            });
        }
        let f = (new_order / self.order) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * f + 1];
        for (j, c) in self.nonzero_terms() {
            raw[j * f] = c.clone();
        }
        Ok(CycloNum::reduce_raw(new_order, raw))
    }
}

fn poly_trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = den.len() - 1;
    let lead = &den[dd];
    assert!(!lead.is_zero());
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![Rational::zero()], rem);
    }
    let mut quo = vec![Rational::zero(); rem.len() - dd];
    for i in (0..quo.len()).rev() {
        let c = &rem[i + dd] / lead;
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            let delta = &c * dj;
            rem[i + j] -= delta;
        }
        quo[i] = c;
    }
    rem.truncate(dd);
    if rem.is_empty() {
        rem.push(Rational::zero());
    }
    poly_trim(&mut rem);
    (quo, rem)
}

/// Inverse of `a` modulo `modulus` in Q[x]; `None` if the gcd is not
/// constant (never happens for irreducible moduli and nonzero `a`).
fn poly_mod_inverse(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    poly_trim(&mut r1);
    let mut t0 = vec![Rational::zero()];
    let mut t1 = vec![Rational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, rem) = poly_divmod(&r0, &r1);
        // t2 = t0 - q * t1
        let mut t2 = vec![Rational::zero(); q.len() + t1.len() - 1];
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, tj) in t1.iter().enumerate() {
                t2[i + j] -= qi * tj;
            }
        }
        for (i, ti) in t0.iter().enumerate() {
            if t2.len() <= i {
                t2.resize(i + 1, Rational::zero());
            }
            t2[i] += ti;
        }
        poly_trim(&mut t2);
        r0 = r1;
        r1 = rem;
        poly_trim(&mut r1);
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return None;
    }
    let g = r0[0].clone();
    Some(t0.iter().map(|c| c / &g).collect())
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.try_add(rhs).expect("order mismatch in +")
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.try_sub(rhs).expect("order mismatch in -")
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.try_mul(rhs).expect("order mismatch in *")
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::from_canonical(self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.nonzero_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", c)?;
            } else if j == 1 {
                write!(f, "({})*z", c)?;
            } else {
                write!(f, "({})*z^{}", c, j)?;
            }
        }
        write!(f, " [order {}]", self.order)
    }
}

#[derive(Serialize, Deserialize)]
struct CycloNumWire {
    order: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycloNumWire {
            order: self.order,
            coeffs: self.coeffs.iter().map(fraction_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = CycloNumWire::deserialize(deserializer)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| parse_fraction(s))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        CycloNum::from_poly_coeffs(wire.order, coeffs).map_err(|e| D::Error::custom(e.to_string()))
    }
}
