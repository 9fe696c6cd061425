//! π-typical Witt vectors of length n+1 over any coefficient ring.
//!
//! Ring operations are universal polynomials obtained once per (base, n) by
//! ghost inversion over Z[π][x, y]/(E) and cached. Evaluating them never
//! divides, so the same code runs over rings with π-torsion.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::eval::{Compiled, Slot};
use crate::padic::{Base, OElement};
use crate::poly::{o_poly_ring, OPoly, Var};
use crate::ring::{IntRing, PiDivide, Ring};

/// Components (a_0, …, a_n). `twist` records that slot i lives in the
/// φ^{twist}-twisted algebra; with φ = id on O it is bookkeeping only.
#[derive(Clone, Debug, PartialEq)]
pub struct WittVector<E> {
    pub comps: Vec<E>,
    pub twist: i32,
}

/// Ghost components (w_0, …, w_n); slot i carries twist `twist + i`.
#[derive(Clone, Debug, PartialEq)]
pub struct GhostVector<E> {
    pub comps: Vec<E>,
    pub twist: i32,
}

impl<E> WittVector<E> {
    pub fn new(comps: Vec<E>) -> Self {
        WittVector { comps, twist: 0 }
    }
    pub fn len(&self) -> usize {
        self.comps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }
}

/// w_i = Σ_{j ≤ i} π^j a_j^{q^{i−j}} for all i.
pub fn ghost<R: Ring>(ring: &R, v: &[R::Elem]) -> Vec<R::Elem> {
    let base = ring.base().clone();
    let q = base.q();
    let mut pw: Vec<R::Elem> = Vec::with_capacity(v.len());
    let mut out = Vec::with_capacity(v.len());
    for (i, a) in v.iter().enumerate() {
        pw.push(a.clone());
        let mut w = ring.zero();
        for (j, x) in pw.iter().enumerate() {
            let t = if j == 0 { x.clone() } else { ring.mul(&ring.from_o(&base.pi_pow(j as u32)), x) };
            ring.add_assign(&mut w, &t);
        }
        out.push(w);
        if i + 1 < v.len() {
            for x in pw.iter_mut() {
                *x = ring.pow(x, q);
            }
        }
    }
    out
}

/// Solve a_i = (w_i − Σ_{j<i} π^j a_j^{q^{i−j}})/π^i.
pub fn ghost_inverse<R: PiDivide>(ring: &R, g: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let base = ring.base().clone();
    let q = base.q();
    let mut pw: Vec<R::Elem> = Vec::with_capacity(g.len());
    let mut out = Vec::with_capacity(g.len());
    for (i, w) in g.iter().enumerate() {
        let mut rest = w.clone();
        for (j, x) in pw.iter().enumerate() {
            let t = if j == 0 { x.clone() } else { ring.mul(&ring.from_o(&base.pi_pow(j as u32)), x) };
            rest = ring.sub(&rest, &t);
        }
        let a = ring.pi_divide(&rest, i as u32).ok_or(Error::NotInImage(i))?;
        out.push(a.clone());
        pw.push(a);
        if i + 1 < g.len() {
            for x in pw.iter_mut() {
                *x = ring.pow(x, q);
            }
        }
    }
    Ok(out)
}

pub fn ghost_vector<R: Ring>(ring: &R, v: &WittVector<R::Elem>) -> GhostVector<R::Elem> {
    GhostVector { comps: ghost(ring, &v.comps), twist: v.twist }
}

pub fn ghost_inverse_vector<R: PiDivide>(ring: &R, g: &GhostVector<R::Elem>) -> Result<WittVector<R::Elem>> {
    Ok(WittVector { comps: ghost_inverse(ring, &g.comps)?, twist: g.twist })
}

/// exp_δ(r): the Witt vector with ghost (r, φ(r), …, φ^n(r)).
pub fn exp_delta<R: PiDivide>(ring: &R, r: &R::Elem, n: usize, phi: impl Fn(&R::Elem) -> R::Elem) -> Result<Vec<R::Elem>> {
    let mut g = Vec::with_capacity(n + 1);
    g.push(r.clone());
    for i in 0..n {
        let next = phi(&g[i]);
        g.push(next);
    }
    ghost_inverse(ring, &g)
}

/// Ghost-side description of an operation.
#[derive(Clone, Debug)]
pub enum WittOp {
    Add,
    Mul,
    Neg,
    /// F: W_n → W_{n−1}, ghost left shift.
    Frobenius,
    /// Componentwise polynomial map on ghost vectors, in letters `s` (first
    /// argument) and `t` (second argument).
    Ghostwise { name: String, poly: OPoly },
    /// Lateral Frobenius on shifted vectors with tail length n: drops ghost
    /// slot 1. Inputs are u = ρ(r), d = ρ(δr) and b_1..b_n; the new head
    /// image is u^q + πd.
    Lateral,
}

impl WittOp {
    fn key(&self) -> String {
        match self {
            WittOp::Add => "add".into(),
            WittOp::Mul => "mul".into(),
            WittOp::Neg => "neg".into(),
            WittOp::Frobenius => "frobenius".into(),
            WittOp::Ghostwise { name, .. } => format!("ghostwise:{name}"),
            WittOp::Lateral => "lateral".into(),
        }
    }

    /// Number of components produced for W_n inputs.
    pub fn output_len(&self, n: usize) -> usize {
        match self {
            WittOp::Frobenius => n,
            WittOp::Lateral => n.saturating_sub(1),
            _ => n + 1,
        }
    }
}

pub fn ghost_letter_s() -> Var {
    Var::letter('s')
}
pub fn ghost_letter_t() -> Var {
    Var::letter('t')
}

type CacheKey = (u64, Vec<i64>, String);

fn cache() -> &'static Mutex<HashMap<CacheKey, Vec<Arc<OPoly>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Vec<Arc<OPoly>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn compute_universal(base: &Arc<Base>, op: &WittOp, n: usize) -> Result<Vec<OPoly>> {
    let ring = o_poly_ring(base);
    if let WittOp::Lateral = op {
        return lateral_universal(base, n);
    }
    let len = n + 1;
    let xs: Vec<OPoly> = (0..len).map(|i| ring.var(Var::x(i))).collect();
    let ys: Vec<OPoly> = (0..len).map(|i| ring.var(Var::y(i))).collect();
    let wx = ghost(&ring, &xs);
    let targets: Vec<OPoly> = match op {
        WittOp::Add => {
            let wy = ghost(&ring, &ys);
            wx.iter().zip(&wy).map(|(a, b)| ring.add(a, b)).collect()
        }
        WittOp::Mul => {
            let wy = ghost(&ring, &ys);
            wx.iter().zip(&wy).map(|(a, b)| ring.mul(a, b)).collect()
        }
        WittOp::Neg => wx.iter().map(|a| ring.neg(a)).collect(),
        WittOp::Frobenius => wx[1..].to_vec(),
        WittOp::Lateral => unreachable!(),
        WittOp::Ghostwise { poly, .. } => {
            let uses_t = poly.vars().contains(&ghost_letter_t());
            let wy = if uses_t { ghost(&ring, &ys) } else { Vec::new() };
            (0..len)
                .map(|i| {
                    ring.eval(poly, &ring, |c| ring.constant(c.clone()), |v| {
                        if v == ghost_letter_s() {
                            wx[i].clone()
                        } else if v == ghost_letter_t() {
                            wy[i].clone()
                        } else {
                            ring.var(v)
                        }
                    })
                })
                .collect()
        }
    };
    ghost_inverse(&ring, &targets)
}

fn lateral_universal(base: &Arc<Base>, n: usize) -> Result<Vec<OPoly>> {
    let ring = o_poly_ring(base);
    if n == 0 {
        return Ok(Vec::new());
    }
    let u = ring.var(Var::head(0));
    let d = ring.var(Var::head(1));
    let mut full = vec![u.clone()];
    full.extend((1..=n).map(|i| ring.var(Var::tail(i))));
    let w = ghost(&ring, &full);
    let h = ring.add(&ring.pow(&u, base.q()), &ring.mul(&ring.from_o(&base.pi()), &d));
    let mut targets = vec![h];
    targets.extend(w[2..].iter().cloned());
    let inv = ghost_inverse(&ring, &targets)?;
    Ok(inv[1..].to_vec())
}

/// The universal component polynomials of `op` on W_n, in x_i (and y_i).
pub fn universal(base: &Arc<Base>, op: &WittOp, n: usize) -> Result<Vec<Arc<OPoly>>> {
    let key = (base.p(), base.eisenstein().to_vec(), op.key());
    let want = op.output_len(n);
    if let Some(v) = cache().lock().unwrap().get(&key) {
        if v.len() >= want {
            return Ok(v[..want].to_vec());
        }
    }
    let polys: Vec<Arc<OPoly>> = compute_universal(base, op, n)?.into_iter().map(Arc::new).collect();
    let mut guard = cache().lock().unwrap();
    let entry = guard.entry(key).or_default();
    if entry.len() < polys.len() {
        *entry = polys.clone();
    }
    Ok(polys[..want].to_vec())
}

/// W_n(S) as a ring, with operations compiled against S.
pub struct WittRing<S: Ring> {
    pub ring: S,
    pub n: usize,
    add: Compiled<S>,
    mul: Compiled<S>,
    neg: Compiled<S>,
    frob: Option<Compiled<S>>,
}

fn binary_slot<E>(n: usize) -> impl Fn(Var) -> Slot<E> {
    move |v| {
        if v.family() == Var::x(0).family() {
            Slot::Input(v.index() as usize)
        } else {
            Slot::Input(n + 1 + v.index() as usize)
        }
    }
}

impl<S: Ring> WittRing<S> {
    pub fn new(ring: S, n: usize) -> Result<Self> {
        let base = ring.base().clone();
        let compile = |op: &WittOp| -> Result<Compiled<S>> {
            let ps = universal(&base, op, n)?;
            let refs: Vec<&OPoly> = ps.iter().map(|p| p.as_ref()).collect();
            Ok(Compiled::new(&refs, &ring, 2 * (n + 1), binary_slot(n)))
        };
        let add = compile(&WittOp::Add)?;
        let mul = compile(&WittOp::Mul)?;
        let neg = compile(&WittOp::Neg)?;
        let frob = if n >= 1 { Some(compile(&WittOp::Frobenius)?) } else { None };
        Ok(WittRing { ring, n, add, mul, neg, frob })
    }

    /// Compile a further ghost-side operation for use with `apply`.
    pub fn compile(&self, op: &WittOp, fixed: &[(Var, S::Elem)]) -> Result<Compiled<S>> {
        let ps = universal(self.ring.base(), op, self.n)?;
        let refs: Vec<&OPoly> = ps.iter().map(|p| p.as_ref()).collect();
        let slot = binary_slot::<S::Elem>(self.n);
        Ok(Compiled::new(&refs, &self.ring, 2 * (self.n + 1), |v| {
            match fixed.iter().find(|(w, _)| *w == v) {
                Some((_, c)) => Slot::Const(c.clone()),
                None => slot(v),
            }
        }))
    }

    pub fn apply(&self, op: &Compiled<S>, u: &[S::Elem], v: Option<&[S::Elem]>) -> Vec<S::Elem> {
        let mut inputs = Vec::with_capacity(2 * (self.n + 1));
        inputs.extend_from_slice(u);
        match v {
            Some(v) => inputs.extend_from_slice(v),
            None => inputs.extend((0..=self.n).map(|_| self.ring.zero())),
        }
        op.eval(&self.ring, &inputs)
    }

    fn check(&self, u: &[S::Elem]) {
        assert_eq!(u.len(), self.n + 1, "Witt vector length mismatch");
    }

    pub fn frobenius(&self, u: &[S::Elem]) -> Vec<S::Elem> {
        self.check(u);
        match &self.frob {
            Some(f) => self.apply(f, u, None),
            None => Vec::new(),
        }
    }

    /// V(v) = (0, v_0, …, v_{n−1}), the result truncated to length n+1.
    pub fn verschiebung(&self, u: &[S::Elem]) -> Vec<S::Elem> {
        let mut out = Vec::with_capacity(self.n + 1);
        out.push(self.ring.zero());
        out.extend_from_slice(&u[..self.n.min(u.len())]);
        while out.len() < self.n + 1 {
            out.push(self.ring.zero());
        }
        out
    }

    pub fn teichmuller(&self, b: &S::Elem) -> Vec<S::Elem> {
        let mut out = vec![self.ring.zero(); self.n + 1];
        out[0] = b.clone();
        out
    }

    pub fn scalar(&self, r: &OElement, u: &[S::Elem]) -> Vec<S::Elem> {
        self.mul(&self.from_o(r), &u.to_vec())
    }
}

/// V on full vectors: length grows by one.
pub fn verschiebung<E: Clone>(zero: E, v: &[E]) -> Vec<E> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(zero);
    out.extend_from_slice(v);
    out
}

pub fn teichmuller<R: Ring>(ring: &R, b: &R::Elem, n: usize) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); n + 1];
    out[0] = b.clone();
    out
}

impl<S: Ring> Ring for WittRing<S> {
    type Elem = Vec<S::Elem>;

    fn base(&self) -> &Arc<Base> {
        self.ring.base()
    }
    fn zero(&self) -> Vec<S::Elem> {
        vec![self.ring.zero(); self.n + 1]
    }
    fn one(&self) -> Vec<S::Elem> {
        self.teichmuller(&self.ring.one())
    }
    fn add(&self, a: &Vec<S::Elem>, b: &Vec<S::Elem>) -> Vec<S::Elem> {
        self.check(a);
        self.check(b);
        self.apply(&self.add, a, Some(b))
    }
    fn neg(&self, a: &Vec<S::Elem>) -> Vec<S::Elem> {
        self.check(a);
        self.apply(&self.neg, a, None)
    }
    fn mul(&self, a: &Vec<S::Elem>, b: &Vec<S::Elem>) -> Vec<S::Elem> {
        self.check(a);
        self.check(b);
        self.apply(&self.mul, a, Some(b))
    }
    fn is_zero(&self, a: &Vec<S::Elem>) -> bool {
        a.iter().all(|x| self.ring.is_zero(x))
    }
    fn from_o(&self, c: &OElement) -> Vec<S::Elem> {
        let o = IntRing::new(self.ring.base());
        let w = exp_delta(&o, c, self.n, |x| x.clone()).expect("φ = id is a Frobenius lift on O");
        w.iter().map(|x| self.ring.from_o(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::make_base;
    use crate::poly::Monomial;

    #[test]
    fn ghost_examples() {
        let b = make_base(3, 1, &[1, -3]).unwrap();
        let o = IntRing::new(&b);
        let v = vec![b.int(5), b.int(-40), b.int(-195680)];
        assert_eq!(ghost(&o, &v), vec![b.int(5); 3]);
        assert_eq!(ghost_inverse(&o, &[b.int(5), b.int(5), b.int(5)]).unwrap(), v);
        assert_eq!(ghost_inverse(&o, &[b.int(0), b.int(1)]), Err(Error::NotInImage(1)));
        assert_eq!(exp_delta(&o, &b.int(2), 1, |x| x.clone()).unwrap(), vec![b.int(2), b.int(-2)]);
    }

    #[test]
    fn s1_at_three() {
        let b = make_base(3, 1, &[1, -3]).unwrap();
        let r = o_poly_ring(&b);
        let s = universal(&b, &WittOp::Add, 1).unwrap();
        let want = r.from_int_terms(&[
            (1, &[(Var::x(1), 1)]),
            (1, &[(Var::y(1), 1)]),
            (-1, &[(Var::x(0), 2), (Var::y(0), 1)]),
            (-1, &[(Var::x(0), 1), (Var::y(0), 2)]),
        ]);
        assert_eq!(*s[1], want);
        let m = universal(&b, &WittOp::Mul, 0).unwrap();
        assert_eq!(m[0].terms.len(), 1);
        assert!(m[0].terms.contains_key(&Monomial::from_pairs(&[(Var::x(0), 1), (Var::y(0), 1)])));
    }
}
