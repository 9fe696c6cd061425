//! Shifted Witt vectors W_n⁺(B) = R ×_B W_n(B), stored as a head in R and a
//! tail (b_1, …, b_n) in B. The 0-slot of the underlying Witt vector is
//! always ρ(head), so the fibre-product condition holds by construction.

use std::sync::Arc;

use crate::error::Result;
use crate::eval::{Compiled, Slot};
use crate::padic::{Base, OElement};
use crate::poly::{family, OPoly, Var};
use crate::ring::{IntRing, Ring};
use crate::witt::{ghost, universal, WittOp, WittRing};

#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedWittVector<H, E> {
    pub head: H,
    pub tail: Vec<E>,
    /// Number of lateral Frobenius steps applied; bookkeeping for ^φB.
    pub twist: i32,
}

impl<H, E> ShiftedWittVector<H, E> {
    pub fn new(head: H, tail: Vec<E>) -> Self {
        ShiftedWittVector { head, tail, twist: 0 }
    }
}

type HeadMap<R, S> = Box<dyn Fn(&<R as Ring>::Elem) -> <S as Ring>::Elem>;
type HeadDelta<R> = Box<dyn Fn(&<R as Ring>::Elem) -> <R as Ring>::Elem>;

/// W_n⁺(B) for a structure map ρ: R → B, where R carries a π-derivation δ
/// (needed only by the lateral Frobenius).
pub struct ShiftedRing<R: Ring, S: Ring> {
    pub heads: R,
    pub witt: WittRing<S>,
    rho: HeadMap<R, S>,
    delta: HeadDelta<R>,
    lateral: Option<Compiled<S>>,
}

impl<S: Ring + Clone + 'static> ShiftedRing<IntRing, S> {
    /// R = O with ρ the structure map of B and δ(r) = (r − r^q)/π.
    pub fn over_o(tails: S, n: usize) -> Result<Self> {
        let base = tails.base().clone();
        let structure = tails.clone();
        let witt = WittRing::new(tails, n)?;
        let rho: HeadMap<IntRing, S> = Box::new(move |r: &OElement| structure.from_o(r));
        ShiftedRing::assemble(IntRing::new(&base), witt, rho, Box::new(move |r: &OElement| base.delta(r)))
    }
}

impl<R: Ring, S: Ring> ShiftedRing<R, S> {
    pub fn new(
        heads: R,
        tails: S,
        n: usize,
        rho: impl Fn(&R::Elem) -> S::Elem + 'static,
        delta: impl Fn(&R::Elem) -> R::Elem + 'static,
    ) -> Result<Self> {
        let witt = WittRing::new(tails, n)?;
        ShiftedRing::assemble(heads, witt, Box::new(rho), Box::new(delta))
    }

    fn assemble(heads: R, witt: WittRing<S>, rho: HeadMap<R, S>, delta: HeadDelta<R>) -> Result<Self> {
        let n = witt.n;
        let lateral = if n >= 1 {
            let ps = universal(witt.ring.base(), &WittOp::Lateral, n)?;
            let refs: Vec<&OPoly> = ps.iter().map(|p| p.as_ref()).collect();
            Some(Compiled::new(&refs, &witt.ring, n + 2, lateral_slot))
        } else {
            None
        };
        Ok(ShiftedRing { heads, witt, rho, delta, lateral })
    }

    pub fn n(&self) -> usize {
        self.witt.n
    }

    pub fn rho(&self, r: &R::Elem) -> S::Elem {
        (self.rho)(r)
    }

    pub fn vector(&self, head: R::Elem, tail: Vec<S::Elem>) -> ShiftedWittVector<R::Elem, S::Elem> {
        assert_eq!(tail.len(), self.n(), "tail length mismatch");
        ShiftedWittVector::new(head, tail)
    }

    /// The image (ρ(r), b_1, …, b_n) in W_n(B).
    pub fn to_witt(&self, v: &ShiftedWittVector<R::Elem, S::Elem>) -> Vec<S::Elem> {
        let mut out = Vec::with_capacity(self.n() + 1);
        out.push(self.rho(&v.head));
        out.extend_from_slice(&v.tail);
        out
    }

    fn from_witt(&self, head: R::Elem, full: Vec<S::Elem>, twist: i32) -> ShiftedWittVector<R::Elem, S::Elem> {
        ShiftedWittVector { head, tail: full[1..].to_vec(), twist }
    }

    /// (r, w_1(ρr, b), …, w_n(ρr, b)); the first slot stays in R.
    pub fn shifted_ghost(&self, v: &ShiftedWittVector<R::Elem, S::Elem>) -> (R::Elem, Vec<S::Elem>) {
        let w = ghost(&self.witt.ring, &self.to_witt(v));
        (v.head.clone(), w[1..].to_vec())
    }

    pub fn augmentation(&self, v: &ShiftedWittVector<R::Elem, S::Elem>) -> R::Elem {
        v.head.clone()
    }

    pub fn shifted_add(
        &self,
        a: &ShiftedWittVector<R::Elem, S::Elem>,
        b: &ShiftedWittVector<R::Elem, S::Elem>,
    ) -> ShiftedWittVector<R::Elem, S::Elem> {
        let full = self.witt.add(&self.to_witt(a), &self.to_witt(b));
        self.from_witt(self.heads.add(&a.head, &b.head), full, a.twist)
    }

    pub fn shifted_mul(
        &self,
        a: &ShiftedWittVector<R::Elem, S::Elem>,
        b: &ShiftedWittVector<R::Elem, S::Elem>,
    ) -> ShiftedWittVector<R::Elem, S::Elem> {
        let full = self.witt.mul(&self.to_witt(a), &self.to_witt(b));
        self.from_witt(self.heads.mul(&a.head, &b.head), full, a.twist)
    }

    pub fn shifted_neg(&self, a: &ShiftedWittVector<R::Elem, S::Elem>) -> ShiftedWittVector<R::Elem, S::Elem> {
        let full = self.witt.neg(&self.to_witt(a));
        self.from_witt(self.heads.neg(&a.head), full, a.twist)
    }

    /// F⁺: W_n⁺(B) → W_{n−1}⁺(^φB). On ghost components it keeps the head
    /// and drops slot 1; with head 0 the tail map is the Witt Frobenius.
    pub fn lateral_frobenius(&self, v: &ShiftedWittVector<R::Elem, S::Elem>) -> ShiftedWittVector<R::Elem, S::Elem> {
        let plan = self.lateral.as_ref().expect("lateral Frobenius needs n >= 1");
        let mut inputs = Vec::with_capacity(self.n() + 2);
        inputs.push(self.rho(&v.head));
        inputs.push(self.rho(&(self.delta)(&v.head)));
        inputs.extend_from_slice(&v.tail);
        let tail = plan.eval(&self.witt.ring, &inputs);
        ShiftedWittVector { head: v.head.clone(), tail, twist: v.twist + 1 }
    }

    /// The ghost-side F_w⁺ of the lateral Frobenius: drop slot 1.
    pub fn ghost_lateral(ghost: &(R::Elem, Vec<S::Elem>)) -> (R::Elem, Vec<S::Elem>) {
        (ghost.0.clone(), ghost.1.iter().skip(1).cloned().collect())
    }
}

/// The lateral Frobenius tail map on explicit inputs u = ρ(r), d = ρ(δr)
/// and b_1..b_n, compiled on the fly.
pub fn lateral_tail<S: Ring>(ring: &S, u: &S::Elem, d: &S::Elem, tail: &[S::Elem]) -> Result<Vec<S::Elem>> {
    let n = tail.len();
    let ps = universal(ring.base(), &WittOp::Lateral, n)?;
    let refs: Vec<&OPoly> = ps.iter().map(|p| p.as_ref()).collect();
    let plan = Compiled::new(&refs, ring, n + 2, lateral_slot);
    let mut inputs = vec![u.clone(), d.clone()];
    inputs.extend_from_slice(tail);
    Ok(plan.eval(ring, &inputs))
}

fn lateral_slot<E>(v: Var) -> Slot<E> {
    match v.family() {
        family::HEAD => Slot::Input(v.index() as usize),
        family::TAIL => Slot::Input(1 + v.index() as usize),
        _ => unreachable!("lateral polynomials use r, d and tail variables only"),
    }
}

impl<R: Ring, S: Ring> Ring for ShiftedRing<R, S> {
    type Elem = ShiftedWittVector<R::Elem, S::Elem>;

    fn base(&self) -> &Arc<Base> {
        self.witt.ring.base()
    }
    fn zero(&self) -> Self::Elem {
        ShiftedWittVector::new(self.heads.zero(), vec![self.witt.ring.zero(); self.n()])
    }
    fn one(&self) -> Self::Elem {
        ShiftedWittVector::new(self.heads.one(), vec![self.witt.ring.zero(); self.n()])
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.shifted_add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.shifted_neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.shifted_mul(a, b)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.heads.is_zero(&a.head) && a.tail.iter().all(|x| self.witt.ring.is_zero(x))
    }
    fn from_o(&self, c: &OElement) -> Self::Elem {
        let full = self.witt.from_o(c);
        ShiftedWittVector::new(self.heads.from_o(c), full[1..].to_vec())
    }
}
