//! The base ring O = Z[π]/(E(π)) for an Eisenstein polynomial E, its fraction
//! side K, and the π-adic valuation.
//!
//! Elements are coefficient vectors in the basis 1, π, …, π^{e−1}. Division by
//! π uses the cofactor u with π·u = E(0), which is why E(0) must be ±p: then
//! (π) is prime in Z[π] and v_π(x) ≥ k exactly when π^k divides x.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// π-adic valuation; `Infinity` for zero. Variant order makes `Finite(_) < Infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn add(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OElement(pub SmallVec<[BigInt; 2]>);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KElement(pub SmallVec<[BigRational; 2]>);

thread_local! {
    static SCRATCH: std::cell::RefCell<BigInt> = std::cell::RefCell::new(BigInt::zero());
}

#[derive(Debug)]
pub struct Base {
    p: u64,
    e: usize,
    eisenstein: Vec<i64>,
    // E(T) = T^e + low[e-1] T^{e-1} + ... + low[0]
    low: Vec<BigInt>,
    c0: BigInt,
    // π · cofactor = c0
    cofactor: OElement,
    // Coordinates of π^k for k = e, …, 2e−2.
    high: Vec<Vec<BigInt>>,
    high_small: Vec<Vec<i64>>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Build the base from p, e and E given leading coefficient first,
/// e.g. `[1, 0, -5]` for T² − 5.
pub fn make_base(p: u64, e: usize, eisenstein: &[i64]) -> Result<Arc<Base>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let bad = |reason: &str| Error::NotEisenstein { p, reason: reason.to_string() };
    if e == 0 {
        return Err(bad("degree must be at least 1"));
    }
    if eisenstein.len() != e + 1 {
        return Err(bad(&format!("expected {} coefficients, got {}", e + 1, eisenstein.len())));
    }
    if eisenstein[0] != 1 {
        return Err(bad("not monic"));
    }
    let pi = p as i64;
    for &c in &eisenstein[1..] {
        if c % pi != 0 {
            return Err(bad("a lower coefficient is not divisible by p"));
        }
    }
    let c0 = eisenstein[e];
    if c0 % (pi * pi) == 0 {
        return Err(bad("constant term divisible by p^2"));
    }
    if c0.abs() != pi {
        return Err(Error::UnsupportedBase(format!(
            "constant term {c0} is not ±p; (π) would not be prime in Z[π]"
        )));
    }
    let mut low = vec![BigInt::zero(); e];
    for i in 0..e {
        low[i] = BigInt::from(eisenstein[e - i]);
    }
    // π^e + c_{e-1}π^{e-1} + ... + c_1 π = -c0, so π·u = c0 with
    // u = -(π^{e-1} + c_{e-1}π^{e-2} + ... + c_1).
    let mut u: SmallVec<[BigInt; 2]> = SmallVec::new();
    for i in 0..e {
        let c = if i + 1 == e { BigInt::one() } else { low[i + 1].clone() };
        u.push(-c);
    }
    let mut high: Vec<Vec<BigInt>> = Vec::new();
    let mut cur: Vec<BigInt> = low.iter().map(|c| -c).collect();
    for _ in e..(2 * e - 1) {
        high.push(cur.clone());
        // multiply by π and reduce
        let top = cur.pop().unwrap();
        cur.insert(0, BigInt::zero());
        for i in 0..e {
            cur[i] -= &top * &low[i];
        }
    }
    Ok(Arc::new(Base {
        p,
        e,
        eisenstein: eisenstein.to_vec(),
        high_small: high.iter().map(|h| h.iter().map(|c| c.to_i64().unwrap_or(i64::MAX)).collect()).collect(),
        high,
        low,
        c0: BigInt::from(c0),
        cofactor: OElement(u),
    }))
}

fn vp_int(p: u64, n: &BigInt) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

impl Base {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Residue field size; equal to p here.
    pub fn q(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn eisenstein(&self) -> &[i64] {
        &self.eisenstein
    }

    /// Key identifying the base up to equality.
    pub fn key(&self) -> (u64, Vec<i64>) {
        (self.p, self.eisenstein.clone())
    }

    pub fn zero(&self) -> OElement {
        OElement((0..self.e).map(|_| BigInt::zero()).collect())
    }

    pub fn one(&self) -> OElement {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> OElement {
        self.big(BigInt::from(n))
    }

    pub fn big(&self, n: BigInt) -> OElement {
        let mut v = self.zero();
        v.0[0] = n;
        v
    }

    pub fn pi(&self) -> OElement {
        self.pi_pow(1)
    }

    pub fn pi_pow(&self, k: u32) -> OElement {
        if self.e == 1 {
            return self.big(num_traits::pow(-&self.c0, k as usize));
        }
        if (k as usize) < self.e {
            let mut v = self.zero();
            v.0[k as usize] = BigInt::one();
            v
        } else {
            let pi = self.pi_pow(1);
            self.pow(&pi, k as u64)
        }
    }

    /// Build from basis coefficients (padded with zeros).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> OElement {
        let mut v = self.zero();
        for (i, c) in coeffs.iter().enumerate().take(self.e) {
            v.0[i] = BigInt::from(*c);
        }
        v
    }

    pub fn is_zero(&self, a: &OElement) -> bool {
        a.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &OElement, b: &OElement) -> OElement {
        OElement(a.0.iter().zip(b.0.iter()).map(|(x, y)| x + y).collect())
    }

    pub fn add_assign(&self, a: &mut OElement, b: &OElement) {
        for (x, y) in a.0.iter_mut().zip(b.0.iter()) {
            *x += y;
        }
    }

    pub fn sub(&self, a: &OElement, b: &OElement) -> OElement {
        OElement(a.0.iter().zip(b.0.iter()).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &OElement) -> OElement {
        OElement(a.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &OElement, n: &BigInt) -> OElement {
        OElement(a.0.iter().map(|x| x * n).collect())
    }

    pub fn mul(&self, a: &OElement, b: &OElement) -> OElement {
        if self.e == 1 {
            return OElement(smallvec::smallvec![&a.0[0] * &b.0[0]]);
        }
        let mut acc = self.zero();
        self.mul_add_assign(&mut acc, a, b);
        acc
    }

    /// acc += a·b without building the product separately.
    pub fn mul_add_assign(&self, acc: &mut OElement, a: &OElement, b: &OElement) {
        let e = self.e;
        if e == 1 {
            acc.0[0] += &a.0[0] * &b.0[0];
            return;
        }
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                if i + j < e {
                    acc.0[i + j] += t;
                } else {
                    let k = i + j - e;
                    for (l, h) in self.high[k].iter().enumerate() {
                        match self.high_small[k][l] {
                            0 => {}
                            1 => acc.0[l] += &t,
                            -1 => acc.0[l] -= &t,
                            i64::MAX => acc.0[l] += &t * h,
                            c => acc.0[l] += &t * c,
                        }
                    }
                }
            }
        }
    }

    /// acc += a·b in the unreduced basis 1, π, …, π^{2e−2}; pair with `settle`.
    pub fn mul_add_unreduced(&self, acc: &mut OElement, a: &OElement, b: &OElement) {
        let need = a.0.len() + b.0.len() - 1;
        if acc.0.len() < need {
            acc.0.resize(need, BigInt::zero());
        }
        SCRATCH.with(|s| {
            let mut scratch = s.borrow_mut();
            for (i, x) in a.0.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                // Word-sized factors multiply into a reused buffer rather than a fresh product.
                let small = if x.bits() < 64 { x.to_i64() } else { None };
                for (j, y) in b.0.iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    match small {
                        Some(c) => {
                            scratch.clone_from(y);
                            *scratch *= c;
                            acc.0[i + j] += &*scratch;
                        }
                        None => acc.0[i + j] += x * y,
                    }
                }
            }
        });
    }

    /// Reduce an unreduced coefficient vector back to length e.
    pub fn settle(&self, acc: &mut OElement) {
        while acc.0.len() > self.e {
            let t = acc.0.pop().unwrap();
            if t.is_zero() {
                continue;
            }
            let k = acc.0.len() - self.e;
            for (l, h) in self.high[k].iter().enumerate() {
                match self.high_small[k][l] {
                    0 => {}
                    1 => acc.0[l] += &t,
                    -1 => acc.0[l] -= &t,
                    i64::MAX => acc.0[l] += &t * h,
                    c => acc.0[l] += &t * c,
                }
            }
        }
    }

    pub fn pow(&self, a: &OElement, mut k: u64) -> OElement {
        let mut result = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    pub fn valuation(&self, a: &OElement) -> Valuation {
        let mut best = Valuation::Infinity;
        for (i, c) in a.0.iter().enumerate() {
            if let Some(v) = vp_int(self.p, c) {
                best = best.min(Valuation::Finite(self.e as i64 * v as i64 + i as i64));
            }
        }
        best
    }

    fn pi_divide_once(&self, a: &OElement) -> Option<OElement> {
        if self.e == 1 {
            // π = -c0
            let pi = -&self.c0;
            let (q, r) = a.0[0].div_rem(&pi);
            return r.is_zero().then(|| OElement(smallvec::smallvec![q]));
        }
        let t = self.mul(a, &self.cofactor);
        let mut out = SmallVec::new();
        for c in t.0.iter() {
            let (q, r) = c.div_rem(&self.c0);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(OElement(out))
    }

    /// Exact division by π^k.
    pub fn pi_divide(&self, a: &OElement, k: u32) -> Result<OElement> {
        let fail = || Error::NotDivisible { have: self.valuation(a).to_string(), want: k };
        if self.e == 1 && k > 0 {
            let pi = -&self.c0;
            let d = num_traits::pow(pi, k as usize);
            let (q, r) = a.0[0].div_rem(&d);
            return if r.is_zero() { Ok(OElement(smallvec::smallvec![q])) } else { Err(fail()) };
        }
        let mut x = a.clone();
        for _ in 0..k {
            x = self.pi_divide_once(&x).ok_or_else(fail)?;
        }
        Ok(x)
    }

    /// δ(r) = (r − r^q)/π for r ∈ O, where φ is the identity on O.
    pub fn delta(&self, r: &OElement) -> OElement {
        let d = self.sub(r, &self.pow(r, self.q()));
        self.pi_divide(&d, 1).expect("r^q ≡ r mod π")
    }

    pub fn to_k(&self, a: &OElement) -> KElement {
        KElement(a.0.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    // ---- K side ----

    pub fn k_zero(&self) -> KElement {
        KElement((0..self.e).map(|_| BigRational::zero()).collect())
    }

    pub fn k_one(&self) -> KElement {
        self.k_rational(BigRational::one())
    }

    pub fn k_rational(&self, r: BigRational) -> KElement {
        let mut v = self.k_zero();
        v.0[0] = r;
        v
    }

    pub fn k_int(&self, n: i64) -> KElement {
        self.k_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn k_from_coeffs(&self, coeffs: &[BigRational]) -> KElement {
        let mut v = self.k_zero();
        for (i, c) in coeffs.iter().enumerate().take(self.e) {
            v.0[i] = c.clone();
        }
        v
    }

    pub fn k_is_zero(&self, a: &KElement) -> bool {
        a.0.iter().all(|c| c.is_zero())
    }

    pub fn k_add(&self, a: &KElement, b: &KElement) -> KElement {
        KElement(a.0.iter().zip(b.0.iter()).map(|(x, y)| x + y).collect())
    }

    pub fn k_sub(&self, a: &KElement, b: &KElement) -> KElement {
        KElement(a.0.iter().zip(b.0.iter()).map(|(x, y)| x - y).collect())
    }

    pub fn k_neg(&self, a: &KElement) -> KElement {
        KElement(a.0.iter().map(|x| -x).collect())
    }

    pub fn k_scale(&self, a: &KElement, r: &BigRational) -> KElement {
        KElement(a.0.iter().map(|x| x * r).collect())
    }

    pub fn k_mul(&self, a: &KElement, b: &KElement) -> KElement {
        let e = self.e;
        let mut acc = vec![BigRational::zero(); 2 * e - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        for k in (e..acc.len()).rev() {
            let t = std::mem::take(&mut acc[k]);
            if t.is_zero() {
                continue;
            }
            for i in 0..e {
                if !self.low[i].is_zero() {
                    acc[k - e + i] -= &t * BigRational::from_integer(self.low[i].clone());
                }
            }
        }
        acc.truncate(e);
        KElement(acc.into_iter().collect())
    }

    pub fn k_pow(&self, a: &KElement, mut k: u64) -> KElement {
        let mut result = self.k_one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = self.k_mul(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.k_mul(&base, &base);
            }
        }
        result
    }

    /// Division by π in K (always possible).
    pub fn k_pi_divide(&self, a: &KElement, k: u32) -> KElement {
        let mut x = a.clone();
        let c0 = BigRational::from_integer(self.c0.clone());
        let u = self.to_k(&self.cofactor);
        for _ in 0..k {
            x = self.k_scale(&self.k_mul(&x, &u), &c0.recip());
        }
        x
    }

    /// v_π(Σ a_i π^i) = min_i (e·v_p(a_i) + i).
    pub fn k_valuation(&self, a: &KElement) -> Valuation {
        let mut best = Valuation::Infinity;
        for (i, c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let vn = vp_int(self.p, c.numer()).unwrap() as i64;
            let vd = vp_int(self.p, c.denom()).unwrap() as i64;
            best = best.min(Valuation::Finite(self.e as i64 * (vn - vd) + i as i64));
        }
        best
    }

    pub fn k_is_integral(&self, a: &KElement) -> bool {
        self.k_valuation(a) >= Valuation::Finite(0)
    }

    /// Exact conversion when all coordinates are integers.
    pub fn k_to_o(&self, a: &KElement) -> Option<OElement> {
        let mut out = SmallVec::new();
        for c in a.0.iter() {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(OElement(out))
    }

    /// An element of O congruent to the integral `a` modulo p^k, inverting
    /// the p-prime denominators mod p^k. None when `a` is not integral.
    pub fn k_reduce(&self, a: &KElement, k: u32) -> Option<OElement> {
        if !self.k_is_integral(a) {
            return None;
        }
        let m = BigInt::from(self.p).pow(k);
        let mut out = SmallVec::new();
        for c in a.0.iter() {
            let d = c.denom().modinv(&m)?;
            out.push((c.numer() * d).mod_floor(&m));
        }
        Some(OElement(out))
    }

    pub fn fmt_o(&self, a: &OElement) -> String {
        fmt_coeffs(a.0.iter().map(|c| c.to_string()).collect())
    }

    pub fn fmt_k(&self, a: &KElement) -> String {
        fmt_coeffs(a.0.iter().map(|c| c.to_string()).collect())
    }
}

fn fmt_coeffs(cs: Vec<String>) -> String {
    let mut parts = Vec::new();
    for (i, c) in cs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let c = if c.contains('/') || (i > 0 && c.starts_with('-')) { format!("({c})") } else { c.clone() };
        parts.push(match i {
            0 => c,
            1 if c == "1" => "pi".to_string(),
            1 => format!("{c}*pi"),
            _ if c == "1" => format!("pi^{i}"),
            _ => format!("{c}*pi^{i}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// p-adic digit sum s_p(j).
pub fn digit_sum(p: u64, mut j: u64) -> u64 {
    let mut s = 0;
    while j > 0 {
        s += j % p;
        j /= p;
    }
    s
}

/// v_p(j) for a positive integer.
pub fn vp_u64(p: u64, mut j: u64) -> u64 {
    let mut v = 0;
    while j > 0 && j % p == 0 {
        j /= p;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn base_validation() {
        assert!(make_base(3, 1, &[1, -3]).is_ok());
        assert!(make_base(5, 2, &[1, 0, -5]).is_ok());
        assert_eq!(make_base(4, 1, &[1, -4]).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(make_base(3, 1, &[1, -9]), Err(Error::NotEisenstein { .. })));
        assert!(matches!(make_base(3, 2, &[1, 1, -3]), Err(Error::NotEisenstein { .. })));
        assert!(matches!(make_base(3, 2, &[1, 0, -6]), Err(Error::UnsupportedBase(_))));
    }

    #[test]
    fn pi_relation() {
        let b = make_base(5, 2, &[1, 0, -5]).unwrap();
        let pi = b.pi();
        assert_eq!(b.mul(&pi, &pi), b.int(5));
        let b = make_base(3, 2, &[1, -3, -3]).unwrap();
        let pi = b.pi();
        // π² = 3π + 3
        assert_eq!(b.mul(&pi, &pi), b.from_coeffs(&[3, 3]));
    }

    #[test]
    fn division_examples() {
        let b3 = make_base(3, 1, &[1, -3]).unwrap();
        assert_eq!(b3.pi_divide(&b3.int(18), 2).unwrap(), b3.int(2));
        let b5 = make_base(5, 2, &[1, 0, -5]).unwrap();
        assert_eq!(b5.pi_divide(&b5.int(5), 2).unwrap(), b5.int(1));
        assert!(matches!(b5.pi_divide(&b5.pi(), 2), Err(Error::NotDivisible { .. })));
        let x = b5.from_coeffs(&[10, 5]);
        assert_eq!(b5.pi_divide(&x, 2).unwrap(), b5.from_coeffs(&[2, 1]));
        assert_eq!(b5.pi_divide(&b5.from_coeffs(&[0, 5]), 3).unwrap(), b5.int(1));
    }

    #[test]
    fn valuation_examples() {
        let b3 = make_base(3, 1, &[1, -3]).unwrap();
        assert_eq!(b3.k_valuation(&b3.k_rational(q(9, 2))), Valuation::Finite(2));
        let b5 = make_base(5, 2, &[1, 0, -5]).unwrap();
        let x = b5.k_from_coeffs(&[q(10, 1), q(1, 1)]);
        assert_eq!(b5.k_valuation(&x), Valuation::Finite(1));
        // a_9 = (-3)^8 / 9
        let a9 = b3.k_rational(q(6561, 9));
        assert_eq!(b3.k_valuation(&a9), Valuation::Finite(6));
        assert_eq!(b3.k_valuation(&b3.k_zero()), Valuation::Infinity);
    }

    #[test]
    fn delta_on_constants() {
        let b3 = make_base(3, 1, &[1, -3]).unwrap();
        assert_eq!(b3.delta(&b3.int(2)), b3.int(-2));
    }

    #[test]
    fn k_pi_divide_matches_o() {
        let b = make_base(3, 2, &[1, -3, -3]).unwrap();
        let x = b.from_coeffs(&[6, -9]);
        let exact = b.to_k(&b.pi_divide(&x, 1).unwrap());
        assert_eq!(b.k_pi_divide(&b.to_k(&x), 1), exact);
    }
}
