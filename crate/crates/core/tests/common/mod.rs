//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's ghost map, coordinate builders or group machinery; only
//! the base arithmetic of O and the polynomial container are reused.
#![allow(dead_code)]

use std::sync::Arc;

use jetspace::nilp::{NElem, NilpAlgebra};
use jetspace::padic::{make_base, Base, OElement};
use jetspace::poly::{o_poly_ring, Monomial, OPoly, OPolyRing, Var};
use jetspace::ring::Ring;
use jetspace::witt::WittRing;
use rand::Rng;

/// O = Z[π]/(π^e − p).
pub fn base(p: u64, e: usize) -> Arc<Base> {
    let mut eis = vec![0i64; e + 1];
    eis[0] = 1;
    eis[e] = -(p as i64);
    make_base(p, e, &eis).unwrap()
}

pub fn random_o(base: &Base, rng: &mut impl Rng, bound: i64) -> OElement {
    let cs: Vec<i64> = (0..base.e()).map(|_| rng.gen_range(-bound..=bound)).collect();
    base.from_coeffs(&cs)
}

pub fn random_vec(base: &Base, rng: &mut impl Rng, len: usize, bound: i64) -> Vec<OElement> {
    (0..len).map(|_| random_o(base, rng, bound)).collect()
}

/// w_i = Σ_{k ≤ i} π^k x_k^{q^{i−k}}, written out directly.
pub fn ghost_oracle(base: &Base, v: &[OElement]) -> Vec<OElement> {
    let q = base.q();
    let n = v.len();
    // pows[k][j] = x_k^{q^j}
    let pows: Vec<Vec<OElement>> = v
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let mut row = vec![x.clone()];
            for _ in k + 1..n {
                let next = base.pow(row.last().unwrap(), q);
                row.push(next);
            }
            row
        })
        .collect();
    (0..n)
        .map(|i| {
            let mut acc = base.zero();
            for (k, row) in pows.iter().enumerate().take(i + 1) {
                let t = base.mul(&base.pi_pow(k as u32), &row[i - k]);
                acc = base.add(&acc, &t);
            }
            acc
        })
        .collect()
}

/// The same over polynomials.
pub fn ghost_poly(ring: &OPolyRing, v: &[OPoly]) -> Vec<OPoly> {
    let base = ring.coeffs.base().clone();
    let q = base.q();
    (0..v.len())
        .map(|i| {
            let mut acc = ring.zero();
            for (k, x) in v.iter().enumerate().take(i + 1) {
                let t = ring.mul(&ring.constant(base.pi_pow(k as u32)), &ring.pow(x, q.pow((i - k) as u32)));
                acc = ring.add(&acc, &t);
            }
            acc
        })
        .collect()
}

/// Divide every coefficient by π^k; panics if some coefficient is not divisible.
pub fn divide_pi(ring: &OPolyRing, f: &OPoly, k: u32) -> OPoly {
    let base = ring.coeffs.base().clone();
    ring.from_terms(f.terms.iter().map(|(m, c)| (m.clone(), base.pi_divide(c, k).unwrap())))
}

/// Σ_{j=1}^{m} π^{j−1} v_j^{q^{m−j}}, the m-th ghost component of (0, v_1, …) over π.
pub fn first_entry_oracle(ring: &OPolyRing, var: impl Fn(usize) -> Var, m: usize) -> OPoly {
    let mut v = vec![ring.zero()];
    v.extend((1..=m).map(|j| ring.var(var(j))));
    let w = ghost_poly(ring, &v).pop().unwrap();
    divide_pi(ring, &w, 1)
}

/// The jet Frobenius x^{(i)} ↦ (x^{(i)})^q + π x^{(i+1)} on O[x, x′, …].
pub fn jet_frobenius(ring: &OPolyRing, f: &OPoly) -> OPoly {
    let base = ring.coeffs.base().clone();
    let q = base.q();
    let pi = ring.constant(base.pi());
    ring.eval(f, ring, |c| ring.constant(c.clone()), |v| {
        let i = v.index() as usize;
        ring.add(&ring.pow(&ring.var(v), q), &ring.mul(&pi, &ring.var(Var::jet(0, i + 1))))
    })
}

pub fn mono(ring: &OPolyRing, c: i64, vars: &[(Var, u32)]) -> OPoly {
    let base = ring.coeffs.base().clone();
    ring.monomial(Monomial::from_pairs(vars), base.int(c))
}

pub fn poly_ring(base: &Arc<Base>) -> OPolyRing {
    o_poly_ring(base)
}

/// Order of g in a finite group given by `mul` and `one`, up to `limit`.
pub fn order_of<E: PartialEq + Clone>(g: &E, one: &E, mul: impl Fn(&E, &E) -> E, limit: u64) -> Option<u64> {
    let mut acc = g.clone();
    for k in 1..=limit {
        if acc == *one {
            return Some(k);
        }
        acc = mul(&acc, g);
    }
    None
}

pub fn is_power_of(p: u64, mut k: u64) -> bool {
    while k % p == 0 {
        k /= p;
    }
    k == 1
}

/// All vectors of length `len` over C.
pub fn all_vectors(c: &NilpAlgebra, len: usize) -> Vec<Vec<NElem>> {
    let mut out: Vec<Vec<NElem>> = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v| c.elements().map(move |x| {
            let mut w = v.clone();
            w.push(x);
            w
        })).collect();
    }
    out
}

/// W_n(C) for enumeration oracles.
pub fn witt_over(c: &NilpAlgebra, n: usize) -> WittRing<NilpAlgebra> {
    WittRing::new(c.clone(), n).unwrap()
}

/// v_p(j!) by Legendre's formula.
pub fn vp_factorial(p: u64, j: u64) -> u64 {
    let mut s = 0;
    let mut pk = p;
    while pk <= j {
        s += j / pk;
        pk *= p;
    }
    s
}
