//! One-dimensional commutative formal group laws, truncated at total degree D.
//!
//! A law is a polynomial in the letters x and y over a coefficient ring; all
//! identities are asserted modulo degree > D.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::jets::{prolong, restrict_to_kernel};
use crate::padic::{digit_sum, Base, KElement, OElement, Valuation};
use crate::poly::{o_poly_ring, Monomial, Poly, PolyRing, Var};
use crate::report::Report;
use crate::ring::{FracField, IntRing, Ring};

pub fn var_x() -> Var {
    Var::letter('x')
}
pub fn var_y() -> Var {
    Var::letter('y')
}
pub fn var_z() -> Var {
    Var::letter('z')
}

#[derive(Clone, Debug)]
pub struct FormalGroupLaw<R: Ring> {
    pub ring: PolyRing<R>,
    pub series: Poly<R::Elem>,
    pub d: u32,
}

pub type KLaw = FormalGroupLaw<FracField>;
pub type OLaw = FormalGroupLaw<IntRing>;

fn xy(a: u32, b: u32) -> Monomial {
    let mut pairs = Vec::new();
    if a > 0 {
        pairs.push((var_x(), a));
    }
    if b > 0 {
        pairs.push((var_y(), b));
    }
    Monomial::from_pairs(&pairs)
}

impl<R: Ring + Clone> FormalGroupLaw<R> {
    pub fn new(coeffs: R, series: Poly<R::Elem>, d: u32) -> Self {
        let ring = PolyRing::new(coeffs);
        let series = ring.truncate(&series, d);
        FormalGroupLaw { ring, series, d }
    }

    /// Build from (α, β, a_{α,β}) triples.
    pub fn from_coefficients(coeffs: R, terms: Vec<(u32, u32, R::Elem)>, d: u32) -> Self {
        let ring = PolyRing::new(coeffs);
        let series = ring.from_terms(terms.into_iter().map(|(a, b, c)| (xy(a, b), c)));
        FormalGroupLaw::new(ring.coeffs.clone(), series, d)
    }

    /// x + y.
    pub fn additive(coeffs: R, d: u32) -> Self {
        let one = coeffs.one();
        FormalGroupLaw::from_coefficients(coeffs, vec![(1, 0, one.clone()), (0, 1, one)], d)
    }

    /// x + y + xy.
    pub fn multiplicative(coeffs: R, d: u32) -> Self {
        let one = coeffs.one();
        FormalGroupLaw::from_coefficients(coeffs, vec![(1, 0, one.clone()), (0, 1, one.clone()), (1, 1, one)], d)
    }

    pub fn coefficient(&self, a: u32, b: u32) -> R::Elem {
        self.series.coeff(&xy(a, b)).cloned().unwrap_or_else(|| self.ring.coeffs.zero())
    }

    /// (α, β, a_{α,β}) triples in graded order.
    pub fn terms(&self) -> Vec<(u32, u32, R::Elem)> {
        self.series
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| (m.exponent(var_x()), m.exponent(var_y()), c.clone()))
            .collect()
    }

    /// F(u, v) for series u, v without constant term.
    pub fn compose(&self, u: &Poly<R::Elem>, v: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.ring.compose_trunc(&self.series, |w| if w == var_x() { u.clone() } else { v.clone() }, self.d)
    }

    /// Evaluates F at two elements of a ring in which the result is a
    /// finite sum, mapping coefficients through `coeff`.
    pub fn eval_in<S: Ring>(&self, target: &S, coeff: &impl Fn(&R::Elem) -> S::Elem, a: &S::Elem, b: &S::Elem) -> S::Elem {
        self.ring.eval(&self.series, target, coeff, |v| if v == var_x() { a.clone() } else { b.clone() })
    }

    pub fn map_coeffs<S: Ring + Clone>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> FormalGroupLaw<S> {
        let ring = PolyRing::new(target.clone());
        let series = self.ring.map_coeffs(&self.series, &ring, f);
        FormalGroupLaw::new(target, series, self.d)
    }
}

/// Unit, commutativity and associativity modulo degree > D.
pub fn validate_law<R: Ring + Clone>(law: &FormalGroupLaw<R>) -> Report {
    let r = &law.ring;
    let (x, y, z) = (r.var(var_x()), r.var(var_y()), r.var(var_z()));
    let mut rep = Report::new(format!("law D={}", law.d));
    let zero = r.zero();
    let fx0 = law.compose(&x, &zero);
    let f0y = law.compose(&zero, &y);
    rep.check("F(x,0) = x", fx0 == x, "exact", || format!("{} terms differ", r.sub(&fx0, &x).len()));
    rep.check("F(0,y) = y", f0y == y, "exact", || format!("{} terms differ", r.sub(&f0y, &y).len()));
    let swapped = law.compose(&y, &x);
    rep.check("F(x,y) = F(y,x)", swapped == law.series, "exact", || "not symmetric".into());
    let fxy = law.series.clone();
    let fyz = law.compose(&y, &z);
    let left = law.ring.compose_trunc(&law.series, |w| if w == var_x() { fxy.clone() } else { z.clone() }, law.d);
    let right = law.ring.compose_trunc(&law.series, |w| if w == var_x() { x.clone() } else { fyz.clone() }, law.d);
    rep.check("F(F(x,y),z) = F(x,F(y,z))", left == right, "exact", || {
        let diff = r.sub(&left, &right);
        let lowest = diff.sorted_terms().first().map(|(m, _)| m.to_string()).unwrap_or_default();
        format!("first difference at {lowest}")
    });
    rep
}

/// F{n} = π^{−n}F(π^n x, π^n y): a_{α,β} ↦ π^{n(α+β−1)}a_{α,β}.
pub fn scale_law<R: Ring + Clone>(law: &FormalGroupLaw<R>, n: u32) -> FormalGroupLaw<R> {
    let base = law.ring.coeffs.base().clone();
    let terms = law
        .terms()
        .into_iter()
        .map(|(a, b, c)| {
            let k = n * (a + b - 1);
            (a, b, law.ring.coeffs.mul(&law.ring.coeffs.from_o(&base.pi_pow(k)), &c))
        })
        .collect();
    FormalGroupLaw::from_coefficients(law.ring.coeffs.clone(), terms, law.d)
}

/// F^φ: φ applied to each coefficient.
pub fn twist_phi<R: Ring + Clone>(law: &FormalGroupLaw<R>, phi: impl Fn(&R::Elem) -> R::Elem) -> FormalGroupLaw<R> {
    let terms = law.terms().into_iter().map(|(a, b, c)| (a, b, phi(&c))).collect();
    FormalGroupLaw::from_coefficients(law.ring.coeffs.clone(), terms, law.d)
}

/// The identity on coefficients fixed by φ (O and K here).
pub fn twist_identity<R: Ring + Clone>(law: &FormalGroupLaw<R>) -> FormalGroupLaw<R> {
    twist_phi(law, |c| c.clone())
}

/// The law on the kernel of J¹G → G: δ(F(x, y)) with δx = x′, δy = y′,
/// evaluated at x = y = 0 and read in the letters x′ ↦ x, y′ ↦ y.
pub fn kernel_law(law: &OLaw) -> Result<OLaw> {
    let base = law.ring.coeffs.base().clone();
    let ring = o_poly_ring(&base);
    let (jx, jy) = (Var::jet(0, 0), Var::jet(1, 0));
    let f = ring.from_terms(law.series.terms.iter().map(|(m, c)| {
        let pairs: Vec<(Var, u32)> =
            m.0.iter().map(|&(v, e)| (if v == var_x() { jx } else { jy }, e)).collect();
        (Monomial::from_pairs(&pairs), c.clone())
    }));
    let d = prolong(&ring, &f)?;
    let at_zero = restrict_to_kernel(&ring, &d);
    let series = ring.from_terms(at_zero.terms.iter().map(|(m, c)| {
        let pairs: Vec<(Var, u32)> = m
            .0
            .iter()
            .map(|&(v, e)| (if v.block() == 0 { var_x() } else { var_y() }, e))
            .collect();
        (Monomial::from_pairs(&pairs), c.clone())
    }));
    Ok(FormalGroupLaw::new(law.ring.coeffs.clone(), series, law.d))
}

pub fn to_k(law: &OLaw) -> KLaw {
    let base = law.ring.coeffs.base().clone();
    let b = base.clone();
    law.map_coeffs(FracField::new(&base), move |c| b.to_k(c))
}

/// Integral K-law back to O; None if some coefficient is not in Z[π].
pub fn to_o(law: &KLaw) -> Option<OLaw> {
    let base = law.ring.coeffs.base().clone();
    let mut terms = Vec::new();
    for (a, b, c) in law.terms() {
        terms.push((a, b, base.k_to_o(&c)?));
    }
    Some(FormalGroupLaw::from_coefficients(IntRing::new(&base), terms, law.d))
}

/// Univariate series c_1 T + c_2 T² + ⋯ + c_D T^D; `coeffs[j]` is c_j and
/// `coeffs[0]` is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub coeffs: Vec<KElement>,
}

impl Series {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn valuations(&self, base: &Base) -> Vec<Valuation> {
        self.coeffs.iter().map(|c| base.k_valuation(c)).collect()
    }

    /// First j ≥ 1 with a non-integral coefficient.
    pub fn first_non_integral(&self, base: &Base) -> Option<usize> {
        (1..self.coeffs.len()).find(|&j| !base.k_is_integral(&self.coeffs[j]))
    }

    /// self ∘ other, truncated at the common degree.
    pub fn compose(&self, base: &Base, other: &Series) -> Series {
        let d = self.degree().min(other.degree());
        let mut out = vec![base.k_zero(); d + 1];
        let mut pw = vec![base.k_zero(); d + 1];
        pw[0] = base.k_one();
        for j in 1..=d {
            pw = mul_series(base, &pw, &other.coeffs, d);
            for k in 0..=d {
                if !base.k_is_zero(&pw[k]) && !base.k_is_zero(&self.coeffs[j]) {
                    out[k] = base.k_add(&out[k], &base.k_mul(&self.coeffs[j], &pw[k]));
                }
            }
        }
        Series { coeffs: out }
    }
}

fn mul_series(base: &Base, a: &[KElement], b: &[KElement], d: usize) -> Vec<KElement> {
    let mut out = vec![base.k_zero(); d + 1];
    for (i, x) in a.iter().enumerate().take(d + 1) {
        if base.k_is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(d + 1 - i) {
            if !base.k_is_zero(y) {
                out[i + j] = base.k_add(&out[i + j], &base.k_mul(x, y));
            }
        }
    }
    out
}

/// g(T) = ∂F/∂x(0, T) up to T^{d}.
fn invariant_denominator(law: &KLaw, d: usize) -> Vec<KElement> {
    let base = law.ring.coeffs.base().clone();
    let mut g = vec![base.k_zero(); d + 1];
    for (a, b, c) in law.terms() {
        if a == 1 && (b as usize) <= d {
            g[b as usize] = c;
        }
    }
    g
}

/// L = ∫ ω with ω = g(T)^{−1} dT, to degree `d`. Needs d ≤ D.
pub fn logarithm(law: &KLaw, d: usize) -> Series {
    let base = law.ring.coeffs.base().clone();
    let g = invariant_denominator(law, d);
    // ω = 1/g with g_0 = 1.
    let mut w = vec![base.k_zero(); d];
    if d > 0 {
        w[0] = base.k_one();
    }
    for k in 1..d {
        let mut s = base.k_zero();
        for i in 1..=k {
            if !base.k_is_zero(&g[i]) {
                s = base.k_add(&s, &base.k_mul(&g[i], &w[k - i]));
            }
        }
        w[k] = base.k_neg(&s);
    }
    let mut coeffs = vec![base.k_zero(); d + 1];
    for j in 1..=d {
        coeffs[j] = base.k_scale(&w[j - 1], &BigRational::new(BigInt::one(), BigInt::from(j as u64)));
    }
    Series { coeffs }
}

/// E with E(L(T)) = T, from the differential equation E′ = g(E), solved
/// one coefficient at a time.
pub fn exponential(law: &KLaw, d: usize) -> Series {
    let base = law.ring.coeffs.base().clone();
    let g = invariant_denominator(law, d);
    let top = (0..=d).rev().find(|&m| !base.k_is_zero(&g[m])).unwrap_or(0);
    let mut e = vec![base.k_zero(); d + 1];
    // pw[m][k] = [T^k] E^m for 1 ≤ m ≤ top.
    let mut pw: Vec<Vec<KElement>> = vec![vec![base.k_zero(); d + 1]; top + 1];
    if d == 0 {
        return Series { coeffs: e };
    }
    e[1] = base.k_one();
    for k in 1..d {
        // Fill [T^k]E^m for m = 1..top from e_1..e_k.
        for m in 1..=top.min(k) {
            pw[m][k] = if m == 1 {
                e[k].clone()
            } else {
                let mut s = base.k_zero();
                for i in 1..=(k + 1 - m) {
                    if !base.k_is_zero(&e[i]) && !base.k_is_zero(&pw[m - 1][k - i]) {
                        s = base.k_add(&s, &base.k_mul(&e[i], &pw[m - 1][k - i]));
                    }
                }
                s
            };
        }
        let mut s = base.k_zero();
        for m in 1..=top.min(k) {
            if !base.k_is_zero(&g[m]) {
                s = base.k_add(&s, &base.k_mul(&g[m], &pw[m][k]));
            }
        }
        e[k + 1] = base.k_scale(&s, &BigRational::new(BigInt::one(), BigInt::from(k as u64 + 1)));
    }
    Series { coeffs: e }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub log: Series,
    pub exp: Series,
    pub d: usize,
    /// Minimum of v_π(c_j) over the blocks (D/8, D/4], (D/4, D/2], (D/2, D], for log and exp.
    pub log_envelope: [i64; 3],
    pub exp_envelope: [i64; 3],
}

fn envelope(base: &Base, s: &Series, d: usize) -> [i64; 3] {
    let cuts = [d / 8, d / 4, d / 2, d];
    let mut out = [i64::MAX; 3];
    for b in 0..3 {
        for j in (cuts[b] + 1)..=cuts[b + 1] {
            if let Valuation::Finite(v) = base.k_valuation(&s.coeffs[j]) {
                out[b] = out[b].min(v);
            }
        }
    }
    out
}

/// An isomorphism to Ĝ_a certified to degree D: log and exp integral up to
/// D, with block minima of the coefficient valuations strictly increasing
/// and positive on the last block. Nothing is claimed past degree D.
pub fn certify_additive_iso(law: &KLaw, d: usize) -> Result<Certificate> {
    let base = law.ring.coeffs.base().clone();
    if d < 8 {
        return Err(Error::CertificateMissing(format!("degree {d} too small for a trend check")));
    }
    let log = logarithm(law, d);
    let exp = exponential(law, d);
    for (name, s) in [("log", &log), ("exp", &exp)] {
        if let Some(j) = s.first_non_integral(&base) {
            return Err(Error::CertificateMissing(format!(
                "{name} coefficient c_{j} = {} has valuation {}",
                base.fmt_k(&s.coeffs[j]),
                base.k_valuation(&s.coeffs[j])
            )));
        }
    }
    let log_envelope = envelope(&base, &log, d);
    let exp_envelope = envelope(&base, &exp, d);
    for (name, env) in [("log", log_envelope), ("exp", exp_envelope)] {
        if !(env[0] < env[1] && env[1] < env[2] && env[2] > 0) {
            return Err(Error::CertificateMissing(format!(
                "{name} valuations do not grow: block minima {env:?} over (D/8, D/4], (D/4, D/2], (D/2, D]"
            )));
        }
    }
    Ok(Certificate { log, exp, d, log_envelope, exp_envelope })
}

/// Ĝ_m{n}: x + y + π^n xy.
pub fn gm_scaled<R: Ring + Clone>(coeffs: R, n: u32, d: u32) -> FormalGroupLaw<R> {
    scale_law(&FormalGroupLaw::multiplicative(coeffs, d), n)
}

/// v_π(π^j/j!) = (j(p−1−e) + e·s_p(j))/(p−1), an integer.
pub fn exp_valuation_formula(base: &Base, j: u64) -> i64 {
    let (p, e) = (base.p() as i64, base.e() as i64);
    (j as i64 * (p - 1 - e) + e * digit_sum(base.p(), j) as i64) / (p - 1)
}

/// The formal group of y² = x³ + ax + b in the parameter t = −x/y, from the
/// chord construction: F = t_1 + t_2 + (2aλν + 3bλ²ν)/(1 + aλ² + bλ³).
pub fn elliptic_law(base: &Arc<Base>, a: i64, b: i64, d: u32) -> OLaw {
    let o = IntRing::new(base);
    let r = PolyRing::new(o.clone());
    let t = Var::letter('t');
    let (ca, cb) = (base.int(a), base.int(b));
    // w(t) = t³ + a t w² + b w³, to degree d + 3.
    let top = d + 3;
    let tt = r.var(t);
    let t3 = r.monomial(Monomial::var(t, 3), base.one());
    let mut w = t3.clone();
    for _ in 0..top {
        let w2 = r.mul_trunc(&w, &w, top);
        let w3 = r.mul_trunc(&w2, &w, top);
        let next = r.add(&t3, &r.add(&r.scale(&r.mul_trunc(&tt, &w2, top), &ca), &r.scale(&w3, &cb)));
        if next == w {
            break;
        }
        w = next;
    }
    let (x, y) = (var_x(), var_y());
    // λ = Σ_n A_n (t_2^n − t_1^n)/(t_2 − t_1), ν = w(t_1) − λ t_1.
    let mut lambda = r.zero();
    let mut w1 = r.zero();
    for (m, c) in &w.terms {
        let n = m.exponent(t);
        for k in 0..n {
            let mono = xy_mono(x, k, y, n - 1 - k);
            if mono.degree() <= d {
                r.add_term(&mut lambda, mono, c);
            }
        }
        if n <= d + 1 {
            r.add_term(&mut w1, Monomial::var(x, n), c);
        }
    }
    let dd = d + 1;
    let nu = r.sub(&w1, &r.mul_trunc(&lambda, &r.var(x), dd));
    let l2 = r.mul_trunc(&lambda, &lambda, dd);
    let l3 = r.mul_trunc(&l2, &lambda, dd);
    let num = r.add(
        &r.scale(&r.mul_trunc(&lambda, &nu, dd), &base.int(2 * a)),
        &r.scale(&r.mul_trunc(&l2, &nu, dd), &base.int(3 * b)),
    );
    let den_tail = r.add(&r.scale(&l2, &ca), &r.scale(&l3, &cb));
    // 1/(1 + u) = Σ (−u)^k.
    let mut inv = r.one();
    let mut pw = r.one();
    let neg_u = r.neg(&den_tail);
    for _ in 0..dd {
        pw = r.mul_trunc(&pw, &neg_u, dd);
        if pw.is_empty() {
            break;
        }
        inv = r.add(&inv, &pw);
    }
    let series = r.add(&r.add(&r.var(x), &r.var(y)), &r.mul_trunc(&num, &inv, d));
    FormalGroupLaw::new(o, series, d)
}

fn xy_mono(x: Var, a: u32, y: Var, b: u32) -> Monomial {
    let mut pairs = Vec::new();
    if a > 0 {
        pairs.push((x, a));
    }
    if b > 0 {
        pairs.push((y, b));
    }
    Monomial::from_pairs(&pairs)
}

/// F = E(L(x) + L(y)) for a random integral L = T + l_2T² + ⋯ + l_kT^k; E
/// is the compositional inverse, integral since L′(0) = 1. Returns the law
/// and L.
pub fn random_integral_law(base: &Arc<Base>, rng: &mut impl rand::Rng, k: u32, d: u32) -> (OLaw, Vec<OElement>) {
    let o = IntRing::new(base);
    let r = PolyRing::new(o.clone());
    let t = Var::letter('t');
    let mut l = vec![base.zero(), base.one()];
    for _ in 2..=k {
        l.push(base.from_coeffs(&(0..base.e()).map(|_| rng.gen_range(-3i64..=3)).collect::<Vec<_>>()));
    }
    let big_l = r.from_terms(l.iter().enumerate().skip(1).map(|(j, c)| (Monomial::var(t, j as u32), c.clone())));
    // E = T − Σ_{j≥2} l_j E^j, iterated to a fixed point.
    let tail = r.sub(&big_l, &r.var(t));
    let mut e = r.var(t);
    for _ in 0..=d {
        let next = r.sub(&r.var(t), &r.compose_trunc(&tail, |_| e.clone(), d));
        if next == e {
            break;
        }
        e = next;
    }
    let lx = r.compose_trunc(&big_l, |_| r.var(var_x()), d);
    let ly = r.compose_trunc(&big_l, |_| r.var(var_y()), d);
    let s = r.add(&lx, &ly);
    let series = r.compose_trunc(&e, |_| s.clone(), d);
    (FormalGroupLaw::new(o, series, d), l)
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Config(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_coeff(base: &Base, v: &Value) -> Result<KElement> {
    let parts: Vec<String> = match v {
        Value::Array(xs) => xs
            .iter()
            .map(|x| match x {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(Error::Config("coefficient entries must be strings or integers".into())),
            })
            .collect::<Result<_>>()?,
        Value::String(s) => {
            let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
            inner.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
        }
        Value::Number(n) => vec![n.to_string()],
        _ => return Err(Error::Config("coefficient must be a list of rationals".into())),
    };
    if parts.len() > base.e() {
        return Err(Error::Config(format!("coefficient has {} entries but e = {}", parts.len(), base.e())));
    }
    let rs: Vec<BigRational> = parts.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
    Ok(base.k_from_coeffs(&rs))
}

/// Reads {"D": 64, "monomials": [[α, β, coeff], …]} where coeff lists the
/// rational coordinates in 1, π, …, π^{e−1}.
pub fn law_from_json(base: &Arc<Base>, text: &str) -> Result<KLaw> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Config(format!("law file: {e}")))?;
    let obj = v.as_object().ok_or_else(|| Error::Config("law file must be an object".into()))?;
    for k in obj.keys() {
        if k != "D" && k != "monomials" {
            return Err(Error::Config(format!("unknown key {k:?} in law file")));
        }
    }
    let d = obj.get("D").and_then(Value::as_u64).ok_or_else(|| Error::Config("law file needs integer D".into()))?;
    let mons = obj.get("monomials").and_then(Value::as_array).ok_or_else(|| Error::Config("law file needs monomials".into()))?;
    let mut terms = Vec::new();
    for m in mons {
        let t = m.as_array().filter(|t| t.len() == 3).ok_or_else(|| Error::Config("monomial must be [α, β, coeff]".into()))?;
        let a = t[0].as_u64().ok_or_else(|| Error::Config("α must be a non-negative integer".into()))? as u32;
        let b = t[1].as_u64().ok_or_else(|| Error::Config("β must be a non-negative integer".into()))? as u32;
        if a + b == 0 {
            return Err(Error::Config("constant term not allowed".into()));
        }
        terms.push((a, b, parse_coeff(base, &t[2])?));
    }
    Ok(FormalGroupLaw::from_coefficients(FracField::new(base), terms, d as u32))
}

pub fn law_to_json(law: &KLaw) -> Value {
    let mons: Vec<Value> = law
        .terms()
        .into_iter()
        .map(|(a, b, c)| {
            let cs: Vec<Value> = c.0.iter().map(|r| Value::String(r.to_string())).collect();
            Value::Array(vec![Value::from(a), Value::from(b), Value::Array(cs)])
        })
        .collect();
    serde_json::json!({ "D": law.d, "monomials": mons })
}

/// The letters x, y only appear; K-valued coefficient as a display string.
pub fn fmt_law(law: &KLaw) -> String {
    let base = law.ring.coeffs.base().clone();
    law.ring.fmt_with(&law.series, |c| base.fmt_k(c))
}
