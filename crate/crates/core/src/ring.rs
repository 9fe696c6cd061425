//! A minimal ring abstraction: ring objects perform the arithmetic, elements are plain data.

use std::fmt::Debug;
use std::sync::Arc;

use crate::padic::{Base, KElement, OElement};

pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn base(&self) -> &Arc<Base>;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Structure map O → ring.
    fn from_o(&self, c: &OElement) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let t = self.mul(a, b);
        self.add_assign(acc, &t);
    }

    /// acc += a·b, allowed to leave acc in a working form until `settle`.
    fn mul_add_lazy(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        self.mul_add_assign(acc, a, b);
    }

    fn settle(&self, _acc: &mut Self::Elem) {}

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_o(&self.base().int(n))
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut result: Option<Self::Elem> = None;
        let mut b = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = Some(match result {
                    None => b.clone(),
                    Some(r) => self.mul(&r, &b),
                });
            }
            k >>= 1;
            if k > 0 {
                b = self.mul(&b, &b);
            }
        }
        result.unwrap_or_else(|| self.one())
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for x in items {
            acc = self.add(&acc, x);
        }
        acc
    }
}

/// Rings with an exact division-by-π test; these carry ghost inversion.
pub trait PiDivide: Ring {
    fn pi_divide(&self, a: &Self::Elem, k: u32) -> Option<Self::Elem>;
}

/// The ring of integers O.
#[derive(Clone, Debug)]
pub struct IntRing {
    base: Arc<Base>,
}

impl IntRing {
    pub fn new(base: &Arc<Base>) -> Self {
        IntRing { base: base.clone() }
    }
}

impl Ring for IntRing {
    type Elem = OElement;

    fn base(&self) -> &Arc<Base> {
        &self.base
    }
    fn zero(&self) -> OElement {
        self.base.zero()
    }
    fn one(&self) -> OElement {
        self.base.one()
    }
    fn add(&self, a: &OElement, b: &OElement) -> OElement {
        self.base.add(a, b)
    }
    fn add_assign(&self, a: &mut OElement, b: &OElement) {
        self.base.add_assign(a, b)
    }
    fn neg(&self, a: &OElement) -> OElement {
        self.base.neg(a)
    }
    fn sub(&self, a: &OElement, b: &OElement) -> OElement {
        self.base.sub(a, b)
    }
    fn mul(&self, a: &OElement, b: &OElement) -> OElement {
        self.base.mul(a, b)
    }
    fn mul_add_assign(&self, acc: &mut OElement, a: &OElement, b: &OElement) {
        self.base.mul_add_assign(acc, a, b)
    }
    fn mul_add_lazy(&self, acc: &mut OElement, a: &OElement, b: &OElement) {
        if self.base.e() == 1 {
            self.base.mul_add_assign(acc, a, b)
        } else {
            self.base.mul_add_unreduced(acc, a, b)
        }
    }
    fn settle(&self, acc: &mut OElement) {
        self.base.settle(acc)
    }
    fn is_zero(&self, a: &OElement) -> bool {
        self.base.is_zero(a)
    }
    fn from_o(&self, c: &OElement) -> OElement {
        c.clone()
    }
}

impl PiDivide for IntRing {
    fn pi_divide(&self, a: &OElement, k: u32) -> Option<OElement> {
        self.base.pi_divide(a, k).ok()
    }
}

/// The fraction field K.
#[derive(Clone, Debug)]
pub struct FracField {
    base: Arc<Base>,
}

impl FracField {
    pub fn new(base: &Arc<Base>) -> Self {
        FracField { base: base.clone() }
    }
}

impl Ring for FracField {
    type Elem = KElement;

    fn base(&self) -> &Arc<Base> {
        &self.base
    }
    fn zero(&self) -> KElement {
        self.base.k_zero()
    }
    fn one(&self) -> KElement {
        self.base.k_one()
    }
    fn add(&self, a: &KElement, b: &KElement) -> KElement {
        self.base.k_add(a, b)
    }
    fn neg(&self, a: &KElement) -> KElement {
        self.base.k_neg(a)
    }
    fn sub(&self, a: &KElement, b: &KElement) -> KElement {
        self.base.k_sub(a, b)
    }
    fn mul(&self, a: &KElement, b: &KElement) -> KElement {
        self.base.k_mul(a, b)
    }
    fn is_zero(&self, a: &KElement) -> bool {
        self.base.k_is_zero(a)
    }
    fn from_o(&self, c: &OElement) -> KElement {
        self.base.to_k(c)
    }
}

impl PiDivide for FracField {
    fn pi_divide(&self, a: &KElement, k: u32) -> Option<KElement> {
        Some(self.base.k_pi_divide(a, k))
    }
}
