//! Frobenius lifts and π-derivations on polynomial rings over O.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::{Monomial, OPoly, OPolyRing, Var};
use crate::ring::{PiDivide, Ring};

/// Declared φ-images of variables. φ is the identity on O.
#[derive(Clone, Debug, Default)]
pub struct FrobeniusLift {
    images: HashMap<Var, OPoly>,
    // Variables mapped to their q-th power without an explicit image.
    power: Vec<Var>,
    power_all: bool,
}

impl FrobeniusLift {
    /// φ(x) = x^q for every variable.
    pub fn standard() -> Self {
        FrobeniusLift { power_all: true, ..Default::default() }
    }

    /// φ(x) = x^q for the listed variables only.
    pub fn power_map(vars: &[Var]) -> Self {
        FrobeniusLift { power: vars.to_vec(), ..Default::default() }
    }

    pub fn with_image(mut self, v: Var, image: OPoly) -> Self {
        self.images.insert(v, image);
        self
    }

    fn image(&self, ring: &OPolyRing, v: Var) -> Option<OPoly> {
        if let Some(p) = self.images.get(&v) {
            return Some(p.clone());
        }
        if self.power_all || self.power.contains(&v) {
            let q = ring.base().q() as u32;
            return Some(ring.monomial(Monomial::var(v, q), ring.coeffs.one()));
        }
        None
    }

    fn is_plain_power(&self, v: Var) -> bool {
        !self.images.contains_key(&v) && (self.power_all || self.power.contains(&v))
    }

    /// The ring endomorphism φ applied to f.
    pub fn apply(&self, ring: &OPolyRing, f: &OPoly) -> Result<OPoly> {
        let vars = f.vars();
        if let Some(v) = vars.iter().find(|&&v| self.image(ring, v).is_none()) {
            return Err(Error::UndeclaredVariable(v.to_string()));
        }
        if vars.iter().all(|&v| self.is_plain_power(v)) {
            let q = ring.base().q() as u32;
            return Ok(ring.from_terms(f.terms.iter().map(|(m, c)| {
                (Monomial(m.0.iter().map(|&(v, e)| (v, e * q)).collect()), c.clone())
            })));
        }
        let images: HashMap<Var, OPoly> = vars.iter().map(|&v| (v, self.image(ring, v).unwrap())).collect();
        Ok(ring.subst(f, &images))
    }
}

pub fn frobenius_lift(ring: &OPolyRing, f: &OPoly, lift: &FrobeniusLift) -> Result<OPoly> {
    lift.apply(ring, f)
}

/// δ(f) = (φ(f) − f^q)/π.
pub fn pi_derivation(ring: &OPolyRing, f: &OPoly, lift: &FrobeniusLift) -> Result<OPoly> {
    let phi = lift.apply(ring, f)?;
    let fq = ring.pow(f, ring.base().q());
    let diff = ring.sub(&phi, &fq);
    ring.pi_divide(&diff, 1).ok_or_else(|| Error::NotDivisible { have: "0".into(), want: 1 })
}
