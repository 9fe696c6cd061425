//! Sparse multivariate polynomials over an arbitrary coefficient ring.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::padic::{Base, OElement};
use crate::ring::{PiDivide, Ring};

/// A variable: family, block and index packed into one word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(pub u32);

pub mod family {
    pub const WITT_X: u8 = 0;
    pub const WITT_Y: u8 = 1;
    pub const JET: u8 = 2;
    pub const TAIL: u8 = 3;
    pub const KERNEL: u8 = 4;
    pub const HEAD: u8 = 5;
    pub const LETTER: u8 = 6;
    pub const APPENDIX: u8 = 7;
}

impl Var {
    pub const fn new(family: u8, block: u8, index: u16) -> Var {
        Var(((family as u32) << 24) | ((block as u32) << 16) | index as u32)
    }
    pub fn family(self) -> u8 {
        (self.0 >> 24) as u8
    }
    pub fn block(self) -> u8 {
        (self.0 >> 16) as u8
    }
    pub fn index(self) -> u16 {
        self.0 as u16
    }

    /// x_i of the first Witt argument.
    pub fn x(i: usize) -> Var {
        Var::new(family::WITT_X, 0, i as u16)
    }
    /// y_i of the second Witt argument.
    pub fn y(i: usize) -> Var {
        Var::new(family::WITT_Y, 0, i as u16)
    }
    /// The jet variable x_block^{(order)}.
    pub fn jet(block: usize, order: usize) -> Var {
        Var::new(family::JET, block as u8, order as u16)
    }
    /// Tail entry b_i of a shifted Witt vector.
    pub fn tail(i: usize) -> Var {
        Var::new(family::TAIL, 0, i as u16)
    }
    /// Kernel coordinate p_i⁺ of the given block.
    pub fn kernel(block: usize, i: usize) -> Var {
        Var::new(family::KERNEL, block as u8, i as u16)
    }
    /// Head images: 0 is ρ(r), 1 is ρ(δr).
    pub fn head(i: usize) -> Var {
        Var::new(family::HEAD, 0, i as u16)
    }
    /// Generator x_i of the prolongation sequence B_*.
    pub fn appendix(i: usize) -> Var {
        Var::new(family::APPENDIX, 0, i as u16)
    }
    /// A plain named letter; `Var::letter('x')`.
    pub fn letter(c: char) -> Var {
        Var::new(family::LETTER, 0, c as u16)
    }
}

const BLOCK_LETTERS: [char; 6] = ['x', 'y', 'z', 'u', 'v', 'w'];

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.index();
        let b = self.block() as usize;
        match self.family() {
            family::WITT_X => write!(f, "x{i}"),
            family::WITT_Y => write!(f, "y{i}"),
            family::JET => {
                let c = BLOCK_LETTERS.get(b).copied().unwrap_or('x');
                match i {
                    0 => write!(f, "{c}"),
                    1..=3 => write!(f, "{c}{}", "'".repeat(i as usize)),
                    _ => write!(f, "{c}^({i})"),
                }
            }
            family::TAIL => write!(f, "b{i}"),
            family::KERNEL => write!(f, "P{i}"),
            family::HEAD => write!(f, "{}", if i == 0 { "r" } else { "d" }),
            family::LETTER => write!(f, "{}", char::from_u32(i as u32).unwrap_or('?')),
            family::APPENDIX => write!(f, "x_{i}"),
            _ => write!(f, "v{}", self.0),
        }
    }
}

/// Sorted list of (variable, exponent) pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub SmallVec<[(Var, u32); 8]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(smallvec::smallvec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Monomial {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map(|&(_, e)| e).unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Remove variables matching the predicate, returning the removed part.
    pub fn split(&self, pred: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let mut keep = SmallVec::new();
        let mut gone = SmallVec::new();
        for &(v, e) in &self.0 {
            if pred(v) {
                gone.push((v, e));
            } else {
                keep.push((v, e));
            }
        }
        (Monomial(keep), Monomial(gone))
    }

    /// Graded lexicographic comparison, smaller variables weighing more.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for k in 0..a.len().max(b.len()) {
                match (a.get(k), b.get(k)) {
                    (Some(x), Some(y)) => {
                        if x.0 != y.0 {
                            return y.0.cmp(&x.0);
                        }
                        if x.1 != y.1 {
                            return x.1.cmp(&y.1);
                        }
                    }
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (None, None) => break,
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<E> {
    pub terms: FxHashMap<Monomial, E>,
}

impl<E> Poly<E> {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&E> {
        self.terms.get(m)
    }

    /// Terms in descending graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &E)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| b.0.grlex_cmp(a.0));
        ts
    }
}

/// Polynomials over the ring `R`.
#[derive(Clone, Debug)]
pub struct PolyRing<R: Ring> {
    pub coeffs: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(coeffs: R) -> Self {
        PolyRing { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        let mut terms = FxHashMap::default();
        if !self.coeffs.is_zero(&c) {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn var(&self, v: Var) -> Poly<R::Elem> {
        self.monomial(Monomial::var(v, 1), self.coeffs.one())
    }

    pub fn monomial(&self, m: Monomial, c: R::Elem) -> Poly<R::Elem> {
        let mut terms = FxHashMap::default();
        if !self.coeffs.is_zero(&c) {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(&self, it: impl IntoIterator<Item = (Monomial, R::Elem)>) -> Poly<R::Elem> {
        let mut p = Poly { terms: FxHashMap::default() };
        for (m, c) in it {
            self.add_term(&mut p, m, &c);
        }
        p
    }

    pub fn add_term(&self, p: &mut Poly<R::Elem>, m: Monomial, c: &R::Elem) {
        if self.coeffs.is_zero(c) {
            return;
        }
        match p.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                self.coeffs.add_assign(o.get_mut(), c);
                if self.coeffs.is_zero(o.get()) {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn scale(&self, a: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        let mut out = Poly { terms: FxHashMap::default() };
        for (m, x) in &a.terms {
            let y = self.coeffs.mul(x, c);
            if !self.coeffs.is_zero(&y) {
                out.terms.insert(m.clone(), y);
            }
        }
        out
    }

    pub fn mul_monomial(&self, a: &Poly<R::Elem>, m: &Monomial) -> Poly<R::Elem> {
        Poly { terms: a.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Product keeping only monomials of total degree ≤ `max_deg`.
    pub fn mul_trunc(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>, max_deg: u32) -> Poly<R::Elem> {
        if let Some(p) = self.mul_packed(a, b, max_deg) {
            return p;
        }
        let mut acc: FxHashMap<Monomial, R::Elem> = FxHashMap::default();
        acc.reserve(a.len().saturating_mul(b.len()).min(1 << 16));
        for (ma, ca) in &a.terms {
            let da = ma.degree();
            if da > max_deg {
                continue;
            }
            for (mb, cb) in &b.terms {
                if da + mb.degree() > max_deg {
                    continue;
                }
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut o) => self.coeffs.mul_add_assign(o.get_mut(), ca, cb),
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(self.coeffs.mul(ca, cb));
                    }
                }
            }
        }
        acc.retain(|_, c| !self.coeffs.is_zero(c));
        Poly { terms: acc }
    }

    // Exponent vectors packed into one u128, each variable in a field wide
    // enough for the largest exponent the product can reach, so adding keys
    // multiplies monomials without carries. None when the fields do not fit.
    fn mul_packed(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>, max_deg: u32) -> Option<Poly<R::Elem>> {
        let mut maxes: Vec<(Var, u32, u32)> = Vec::new();
        for (side, p) in [a, b].into_iter().enumerate() {
            for m in p.terms.keys() {
                for &(v, e) in &m.0 {
                    match maxes.iter_mut().find(|t| t.0 == v) {
                        Some(t) => {
                            if side == 0 {
                                t.1 = t.1.max(e)
                            } else {
                                t.2 = t.2.max(e)
                            }
                        }
                        None => maxes.push(if side == 0 { (v, e, 0) } else { (v, 0, e) }),
                    }
                }
            }
        }
        maxes.sort_unstable_by_key(|t| t.0);
        let mut shifts = Vec::with_capacity(maxes.len());
        let mut widths = Vec::with_capacity(maxes.len());
        let mut total = 0u32;
        for &(_, x, y) in &maxes {
            let w = (64 - (x as u64 + y as u64).leading_zeros()).max(1);
            shifts.push(total);
            widths.push(w);
            total += w;
            if total > 128 {
                return None;
            }
        }
        let pack = |m: &Monomial| -> u128 {
            let mut k = 0u128;
            let mut idx = 0;
            for &(v, e) in &m.0 {
                while maxes[idx].0 != v {
                    idx += 1;
                }
                k |= (e as u128) << shifts[idx];
            }
            k
        };
        let pa: Vec<(u128, u32, &R::Elem)> = a.terms.iter().map(|(m, c)| (pack(m), m.degree(), c)).collect();
        let pb: Vec<(u128, u32, &R::Elem)> = b.terms.iter().map(|(m, c)| (pack(m), m.degree(), c)).collect();
        let mut acc: FxHashMap<u128, R::Elem> = FxHashMap::default();
        acc.reserve(a.len().saturating_mul(b.len()).min(1 << 16));
        // Squaring visits each unordered pair once, with the cross terms doubled.
        let square = std::ptr::eq(a, b);
        let doubled: Vec<R::Elem> = if square { pa.iter().map(|t| self.coeffs.add(t.2, t.2)).collect() } else { Vec::new() };
        for (i, &(ka, da, ca)) in pa.iter().enumerate() {
            if da > max_deg {
                continue;
            }
            let others = if square { &pb[i..] } else { &pb[..] };
            for (j, &(kb, db, cb)) in others.iter().enumerate() {
                if da + db > max_deg {
                    continue;
                }
                let ca = if square && j > 0 { &doubled[i] } else { ca };
                self.coeffs.mul_add_lazy(acc.entry(ka + kb).or_insert_with(|| self.coeffs.zero()), ca, cb);
            }
        }
        let mut out = Poly { terms: FxHashMap::default() };
        out.terms.reserve(acc.len());
        for (k, mut c) in acc {
            self.coeffs.settle(&mut c);
            if self.coeffs.is_zero(&c) {
                continue;
            }
            let mut m = SmallVec::new();
            for (i, &(v, _, _)) in maxes.iter().enumerate() {
                let e = ((k >> shifts[i]) & ((1u128 << widths[i]) - 1)) as u32;
                if e > 0 {
                    m.push((v, e));
                }
            }
            out.terms.insert(Monomial(m), c);
        }
        Some(out)
    }

    pub fn truncate(&self, a: &Poly<R::Elem>, max_deg: u32) -> Poly<R::Elem> {
        Poly { terms: a.terms.iter().filter(|(m, _)| m.degree() <= max_deg).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn pow_trunc(&self, a: &Poly<R::Elem>, mut k: u64, max_deg: u32) -> Poly<R::Elem> {
        let mut result = self.one();
        let mut b = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul_trunc(&result, &b, max_deg);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul_trunc(&b, &b, max_deg);
            }
        }
        result
    }

    /// Substitute polynomials without constant term for variables, keeping
    /// total degree ≤ `max_deg` throughout.
    pub fn compose_trunc(&self, a: &Poly<R::Elem>, assign: impl Fn(Var) -> Poly<R::Elem>, max_deg: u32) -> Poly<R::Elem> {
        let mut needed: HashMap<Var, u32> = HashMap::new();
        for m in a.terms.keys() {
            for &(v, e) in &m.0 {
                let t = needed.entry(v).or_default();
                *t = (*t).max(e);
            }
        }
        let mut powers: HashMap<Var, Vec<Poly<R::Elem>>> = HashMap::new();
        for (v, top) in needed {
            let x = assign(v);
            let mut ps = vec![self.one(), x.clone()];
            for _ in 2..=top {
                let next = self.mul_trunc(ps.last().unwrap(), &x, max_deg);
                ps.push(next);
            }
            powers.insert(v, ps);
        }
        let mut acc = self.zero();
        for (m, c) in &a.terms {
            let mut t = self.constant(c.clone());
            for &(v, e) in &m.0 {
                t = self.mul_trunc(&t, &powers[&v][e as usize], max_deg);
            }
            self.add_assign(&mut acc, &t);
        }
        acc
    }

    pub fn derivative(&self, a: &Poly<R::Elem>, v: Var) -> Poly<R::Elem> {
        let mut out = Poly { terms: FxHashMap::default() };
        for (m, c) in &a.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let (rest, _) = m.split(|w| w == v);
            let m2 = rest.mul(&Monomial::var(v, e - 1));
            let c2 = self.coeffs.mul(c, &self.coeffs.from_int(e as i64));
            self.add_term(&mut out, m2, &c2);
        }
        out
    }

    /// Coefficient map into another coefficient ring.
    pub fn map_coeffs<S: Ring>(&self, a: &Poly<R::Elem>, target: &PolyRing<S>, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S::Elem> {
        target.from_terms(a.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Evaluate in `target`, sending coefficients through `coeff` and
    /// variables through `assign`.
    pub fn eval<S: Ring>(
        &self,
        a: &Poly<R::Elem>,
        target: &S,
        coeff: impl Fn(&R::Elem) -> S::Elem,
        assign: impl Fn(Var) -> S::Elem,
    ) -> S::Elem {
        // Collect the needed exponents per variable.
        let mut needed: HashMap<Var, Vec<u32>> = HashMap::new();
        for m in a.terms.keys() {
            for &(v, e) in &m.0 {
                needed.entry(v).or_default().push(e);
            }
        }
        let mut powers: HashMap<(Var, u32), S::Elem> = HashMap::new();
        for (v, mut es) in needed {
            es.sort_unstable();
            es.dedup();
            let x = assign(v);
            let mut cur_e = 0u32;
            let mut cur = target.one();
            for e in es {
                let step = target.pow(&x, (e - cur_e) as u64);
                cur = target.mul(&cur, &step);
                cur_e = e;
                powers.insert((v, e), cur.clone());
            }
        }
        let mut acc = target.zero();
        for (m, c) in &a.terms {
            let mut t = coeff(c);
            for &(v, e) in &m.0 {
                t = target.mul(&t, &powers[&(v, e)]);
            }
            target.add_assign(&mut acc, &t);
        }
        acc
    }

    /// Substitute polynomials for variables; unlisted variables stay.
    pub fn subst(&self, a: &Poly<R::Elem>, map: &HashMap<Var, Poly<R::Elem>>) -> Poly<R::Elem> {
        self.eval(a, self, |c| self.constant(c.clone()), |v| map.get(&v).cloned().unwrap_or_else(|| self.var(v)))
    }

    pub fn fmt_with(&self, a: &Poly<R::Elem>, fc: impl Fn(&R::Elem) -> String) -> String {
        if a.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in a.sorted_terms().into_iter().enumerate() {
            let cs = fc(c);
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let body = if body.contains(' ') { format!("({body})") } else { body };
            let term = if m.is_one() {
                body
            } else if body == "1" {
                m.to_string()
            } else {
                format!("{body}*{m}")
            };
            if k == 0 {
                out.push_str(if neg { "-" } else { "" });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn base(&self) -> &Arc<Base> {
        self.coeffs.base()
    }
    fn zero(&self) -> Poly<R::Elem> {
        Poly { terms: FxHashMap::default() }
    }
    fn one(&self) -> Poly<R::Elem> {
        self.constant(self.coeffs.one())
    }
    fn add(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = big.clone();
        self.add_assign(&mut out, small);
        out
    }
    fn add_assign(&self, a: &mut Poly<R::Elem>, b: &Poly<R::Elem>) {
        for (m, c) in &b.terms {
            self.add_term(a, m.clone(), c);
        }
    }
    fn neg(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.coeffs.neg(c))).collect() }
    }
    fn mul(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        if a.is_empty() || b.is_empty() {
            return self.zero();
        }
        if a.len() == 1 || b.len() == 1 {
            let (single, other) = if a.len() == 1 { (a, b) } else { (b, a) };
            let (m, c) = single.terms.iter().next().unwrap();
            let mut out = Poly { terms: FxHashMap::default() };
            out.terms.reserve(other.len());
            for (k, x) in &other.terms {
                let y = self.coeffs.mul(x, c);
                if !self.coeffs.is_zero(&y) {
                    out.terms.insert(k.mul(m), y);
                }
            }
            return out;
        }
        self.mul_trunc(a, b, u32::MAX)
    }
    fn is_zero(&self, a: &Poly<R::Elem>) -> bool {
        a.is_empty()
    }
    fn from_o(&self, c: &OElement) -> Poly<R::Elem> {
        self.constant(self.coeffs.from_o(c))
    }
}

impl<R: PiDivide> PiDivide for PolyRing<R> {
    fn pi_divide(&self, a: &Poly<R::Elem>, k: u32) -> Option<Poly<R::Elem>> {
        let mut out = Poly { terms: FxHashMap::default() };
        out.terms.reserve(a.len());
        for (m, c) in &a.terms {
            out.terms.insert(m.clone(), self.coeffs.pi_divide(c, k)?);
        }
        Some(out)
    }
}

/// Polynomials over O, the workhorse of all symbolic checks.
pub type OPoly = Poly<OElement>;
pub type OPolyRing = PolyRing<crate::ring::IntRing>;

pub fn o_poly_ring(base: &Arc<Base>) -> OPolyRing {
    PolyRing::new(crate::ring::IntRing::new(base))
}

impl OPolyRing {
    pub fn fmt(&self, a: &OPoly) -> String {
        let b = self.coeffs.base().clone();
        self.fmt_with(a, |c| b.fmt_o(c))
    }

    /// Build a polynomial from integer-coefficient terms.
    pub fn from_int_terms(&self, terms: &[(i64, &[(Var, u32)])]) -> OPoly {
        let b = self.coeffs.base().clone();
        self.from_terms(terms.iter().map(|(c, m)| (Monomial::from_pairs(m), b.int(*c))))
    }
}
