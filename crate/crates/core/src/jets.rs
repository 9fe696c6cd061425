//! Jet algebras J_nA for A = O[x_1..x_r] in Buium–Joyal coordinates x^{(i)},
//! their Witt coordinates p_i, the kernel algebras N_nA = O[p_1⁺, …, p_n⁺],
//! the lateral pullback f*, and the prolongation sequence B_* of the
//! coordinate theorem.
//!
//! Variable blocks are independent: block j carries x_j, x_j′, x_j″, ….

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::frobenius::{pi_derivation, FrobeniusLift};
use crate::padic::Base;
use crate::poly::{family, o_poly_ring, Monomial, OPoly, OPolyRing, Var};
use crate::report::Report;
use crate::ring::{PiDivide, Ring};
use crate::shifted::lateral_tail;
use crate::witt::ghost;

/// Φ(x^{(i)}) = (x^{(i)})^q + πx^{(i+1)} on every jet variable of `vars`.
pub fn jet_lift(ring: &OPolyRing, vars: &[Var]) -> Result<FrobeniusLift> {
    let base = ring.base().clone();
    let pi = ring.from_o(&base.pi());
    let mut lift = FrobeniusLift::default();
    for &v in vars {
        if v.family() != family::JET {
            return Err(Error::UndeclaredVariable(v.to_string()));
        }
        let next = Var::jet(v.block() as usize, v.index() as usize + 1);
        let img = ring.add(&ring.pow(&ring.var(v), base.q()), &ring.mul(&pi, &ring.var(next)));
        lift = lift.with_image(v, img);
    }
    Ok(lift)
}

/// The Frobenius lift Φ: J_n → J_{n+1}.
pub fn jet_phi(ring: &OPolyRing, f: &OPoly) -> Result<OPoly> {
    jet_lift(ring, &f.vars())?.apply(ring, f)
}

/// δ: J_n → J_{n+1}, δ(x^{(i)}) = x^{(i+1)}, as (Φ(f) − f^q)/π.
pub fn prolong(ring: &OPolyRing, f: &OPoly) -> Result<OPoly> {
    pi_derivation(ring, f, &jet_lift(ring, &f.vars())?)
}

/// C_π(x, y) = (x^q + y^q − (x + y)^q)/π.
pub fn carry_poly(ring: &OPolyRing, x: &OPoly, y: &OPoly) -> OPoly {
    let q = ring.base().q();
    let s = ring.sub(&ring.add(&ring.pow(x, q), &ring.pow(y, q)), &ring.pow(&ring.add(x, y), q));
    ring.pi_divide(&s, 1).expect("x^q + y^q ≡ (x + y)^q mod π")
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// H̄_n = π^{−n}·Σ_{i ≤ n−2} Σ_{1 ≤ j ≤ q^{n−1−i}} π^{i+j} C(q^{n−1−i}, j) x_i^{q(q^{n−1−i} − j)} y_i^j,
/// in the variables x_i = `Var::x(i)` and y_i = `Var::y(i)`.
pub fn h_bar_polynomial(base: &Arc<Base>, n: usize) -> Result<OPoly> {
    let ring = o_poly_ring(base);
    let q = base.q();
    let mut out = ring.zero();
    for i in 0..n.saturating_sub(1) {
        let big_q = q.pow((n - 1 - i) as u32);
        for j in 1..=big_q {
            let c = base.big(binomial(big_q, j));
            let k = i as u32 + j as u32;
            let coeff = if k >= n as u32 {
                base.mul(&base.pi_pow(k - n as u32), &c)
            } else {
                let t = base.mul(&base.pi_pow(k), &c);
                base.pi_divide(&t, n as u32).map_err(|_| {
                    Error::IntegralityFailure(format!("H_{n}: term i={i}, j={j} has valuation below {n}"))
                })?
            };
            let m = Monomial::from_pairs(&[(Var::x(i), (q * (big_q - j)) as u32), (Var::y(i), j as u32)]);
            ring.add_term(&mut out, m, &coeff);
        }
    }
    Ok(out)
}

type CoordKey = (u64, Vec<i64>, usize);

fn coord_cache() -> &'static Mutex<HashMap<CoordKey, Arc<Vec<OPoly>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CoordKey, Arc<Vec<OPoly>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn rename_block(ring: &OPolyRing, f: &OPoly, block: usize) -> OPoly {
    if block == 0 {
        return f.clone();
    }
    ring.from_terms(f.terms.iter().map(|(m, c)| {
        let m2 = Monomial::from_pairs(
            &m.0.iter().map(|&(v, e)| (Var::jet(block, v.index() as usize), e)).collect::<Vec<_>>(),
        );
        (m2, c.clone())
    }))
}

/// Witt coordinates (p_0, …, p_n) of J_nA for the given variable block, by
/// p_k = δp_{k−1} + H̄_k(p_0, …, p_{k−2}; δp_0, …, δp_{k−2}).
pub fn witt_coordinates(base: &Arc<Base>, n: usize, block: usize) -> Result<Vec<OPoly>> {
    let ring = o_poly_ring(base);
    let key = (base.p(), base.eisenstein().to_vec(), block);
    if let Some(v) = coord_cache().lock().unwrap().get(&key) {
        if v.len() > n {
            return Ok(v[..=n].to_vec());
        }
    }
    let block0 = if block == 0 { None } else { Some(witt_coordinates(base, n, 0)?) };
    let ps = match block0 {
        Some(ps) => ps.iter().map(|p| rename_block(&ring, p, block)).collect(),
        None => {
            let mut ps = vec![ring.var(Var::jet(0, 0))];
            let mut dps: Vec<OPoly> = Vec::new();
            for k in 1..=n {
                dps.push(prolong(&ring, &ps[k - 1])?);
                let h = h_bar_polynomial(base, k)?;
                let hv = ring.eval(&h, &ring, |c| ring.constant(c.clone()), |v| {
                    if v.family() == family::WITT_X {
                        ps[v.index() as usize].clone()
                    } else {
                        dps[v.index() as usize].clone()
                    }
                });
                ps.push(ring.add(&dps[k - 1], &hv));
            }
            ps
        }
    };
    let mut guard = coord_cache().lock().unwrap();
    let entry = guard.entry(key).or_insert_with(|| Arc::new(Vec::new()));
    if entry.len() < ps.len() {
        *entry = Arc::new(ps.clone());
    }
    Ok(ps)
}

/// Φ^n(x) for the block-0 variable, via Φ^n(x) = (Φ^{n−1}x)^q + π·(Φ^{n−1}x with orders shifted).
pub fn phi_iterate(base: &Arc<Base>, n: usize) -> OPoly {
    let ring = o_poly_ring(base);
    let pi = ring.from_o(&base.pi());
    let mut f = ring.var(Var::jet(0, 0));
    for _ in 0..n {
        let shifted = ring.from_terms(f.terms.iter().map(|(m, c)| {
            let m2 = Monomial::from_pairs(
                &m.0.iter().map(|&(v, e)| (Var::jet(v.block() as usize, v.index() as usize + 1), e)).collect::<Vec<_>>(),
            );
            (m2, c.clone())
        }));
        f = ring.add(&ring.pow(&f, base.q()), &ring.mul(&pi, &shifted));
    }
    f
}

/// Checks Φ^n(x) = Σ_i π^i p_i^{q^{n−i}}.
pub fn ghost_identity_holds(base: &Arc<Base>, n: usize) -> Result<bool> {
    let ring = o_poly_ring(base);
    let ps = witt_coordinates(base, n, 0)?;
    let rhs = ghost(&ring, &ps).pop().unwrap();
    Ok(rhs == phi_iterate(base, n))
}

/// u*: J_nA → N_nA, setting x^{(0)} of every block to 0.
pub fn restrict_to_kernel(ring: &OPolyRing, f: &OPoly) -> OPoly {
    ring.from_terms(
        f.terms
            .iter()
            .filter(|(m, _)| !m.0.iter().any(|&(v, _)| v.family() == family::JET && v.index() == 0))
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// p_1⁺, …, p_n⁺ in the jet coordinates x′, …, x^{(n)} of block 0.
pub fn kernel_coordinates(base: &Arc<Base>, n: usize) -> Result<Vec<OPoly>> {
    let ring = o_poly_ring(base);
    let ps = witt_coordinates(base, n, 0)?;
    Ok(ps[1..].iter().map(|p| restrict_to_kernel(&ring, p)).collect())
}

/// Inverts the triangular change p_j⁺ = x^{(j)} + (lower terms): returns
/// x^{(1)}, …, x^{(n)} as polynomials in the generators P_j = `Var::kernel(0, j)`.
pub fn jets_in_kernel_generators(base: &Arc<Base>, n: usize) -> Result<Vec<OPoly>> {
    let ring = o_poly_ring(base);
    let pp = kernel_coordinates(base, n)?;
    let mut xs: Vec<OPoly> = Vec::with_capacity(n);
    for (j, p) in pp.iter().enumerate() {
        let lead = Var::jet(0, j + 1);
        let lower = ring.sub(p, &ring.var(lead));
        if lower.degree_in(lead) > 0 {
            return Err(Error::InvalidAlgebra(format!("p_{}+ is not triangular in x^({})", j + 1, j + 1)));
        }
        let lower_p = ring.eval(&lower, &ring, |c| ring.constant(c.clone()), |v| {
            if v.family() == family::JET && v.block() == 0 && v.index() >= 1 {
                xs[v.index() as usize - 1].clone()
            } else {
                ring.var(v)
            }
        });
        xs.push(ring.sub(&ring.var(Var::kernel(0, j + 1)), &lower_p));
    }
    Ok(xs)
}

/// Replace P_j by `images[j − 1]`.
fn subst_kernel(ring: &OPolyRing, f: &OPoly, images: &[OPoly]) -> OPoly {
    ring.eval(f, ring, |c| ring.constant(c.clone()), |v| {
        if v.family() == family::KERNEL {
            images[v.index() as usize - 1].clone()
        } else {
            ring.var(v)
        }
    })
}

/// Replace x^{(j)} (j ≥ 1, block 0) by `images[j − 1]`.
fn subst_jets(ring: &OPolyRing, f: &OPoly, images: &[OPoly]) -> OPoly {
    ring.eval(f, ring, |c| ring.constant(c.clone()), |v| {
        if v.family() == family::JET && v.block() == 0 && v.index() >= 1 {
            images[v.index() as usize - 1].clone()
        } else {
            ring.var(v)
        }
    })
}

/// (f^i)*: N_{n−i}A → N_nA on generators, read off the adjunction square:
/// the identity of N_nA corresponds under Θ⁺ to (0, P_1, …, P_n), and
/// (F⁺)^i of it is (0, c_1, …, c_{n−i}); then (f^i)*(P_j) = c_j.
/// Requires i ≤ n; i = 0 gives the identity.
pub fn lateral_pullback(base: &Arc<Base>, i: usize, n: usize) -> Result<Vec<OPoly>> {
    if i > n {
        return Err(Error::LengthMismatch(i, n));
    }
    let ring = o_poly_ring(base);
    let mut tail: Vec<OPoly> = (1..=n).map(|j| ring.var(Var::kernel(0, j))).collect();
    for _ in 0..i {
        tail = lateral_tail(&ring, &ring.zero(), &ring.zero(), &tail)?;
    }
    Ok(tail)
}

/// The closed form displayed for (f^i)*(p_1⁺):
/// (P_1)^{q^{i−1}} + π(P_2)^{q^{i−2}} + ⋯ + π^{i−1}P_i.
pub fn lemma_display(base: &Arc<Base>, i: usize) -> OPoly {
    let ring = o_poly_ring(base);
    let q = base.q();
    let mut out = ring.zero();
    for k in 0..i {
        let m = Monomial::var(Var::kernel(0, k + 1), q.pow((i - 1 - k) as u32) as u32);
        ring.add_term(&mut out, m, &base.pi_pow(k as u32));
    }
    out
}

/// The first tail entry b_1^{q^i} + πb_2^{q^{i−1}} + ⋯ + π^i b_{i+1} of (F⁺)^i(0, b).
pub fn iterate_first_entry(base: &Arc<Base>, i: usize) -> OPoly {
    let ring = o_poly_ring(base);
    let q = base.q();
    let mut out = ring.zero();
    for k in 0..=i {
        let m = Monomial::var(Var::tail(k + 1), q.pow((i - k) as u32) as u32);
        ring.add_term(&mut out, m, &base.pi_pow(k as u32));
    }
    out
}

/// The literal display b_1^{q^i} + πb_2^{q^{i−1}} + ⋯ with final term π^i b_i.
pub fn iterate_display(base: &Arc<Base>, i: usize) -> OPoly {
    let ring = o_poly_ring(base);
    let q = base.q();
    let mut out = ring.zero();
    for k in 0..i {
        let m = Monomial::var(Var::tail(k + 1), q.pow((i - k) as u32) as u32);
        ring.add_term(&mut out, m, &base.pi_pow(k as u32));
    }
    if i >= 1 {
        ring.add_term(&mut out, Monomial::var(Var::tail(i), 1), &base.pi_pow(i as u32));
    }
    out
}

/// (F⁺)^i(0, b_1, …, b_n) computed symbolically; returns the tail.
pub fn lateral_iterate(base: &Arc<Base>, i: usize, n: usize) -> Result<Vec<OPoly>> {
    let ring = o_poly_ring(base);
    let mut tail: Vec<OPoly> = (1..=n).map(|j| ring.var(Var::tail(j))).collect();
    for _ in 0..i.min(n) {
        tail = lateral_tail(&ring, &ring.zero(), &ring.zero(), &tail)?;
    }
    Ok(tail)
}

/// f*: N_mA → N_{m+1}A on an element written in jet coordinates x′, …, x^{(m)}.
pub fn f_star(base: &Arc<Base>, m: usize, g: &OPoly) -> Result<OPoly> {
    let ring = o_poly_ring(base);
    let xs = jets_in_kernel_generators(base, m)?;
    let cs = lateral_pullback(base, 1, m + 1)?;
    let pp = kernel_coordinates(base, m + 1)?;
    let cs_x: Vec<OPoly> = cs.iter().map(|c| subst_kernel(&ring, c, &pp)).collect();
    let xs_img: Vec<OPoly> = xs.iter().map(|x| subst_kernel(&ring, x, &cs_x)).collect();
    Ok(subst_jets(&ring, g, &xs_img))
}

/// Δ(P_j) := (f*(P_j) − P_j^q)/π on the generators of N_mA, in P-coordinates
/// of N_{m+1}A. Recorded, not asserted to be the π-derivation Δ of the kernel sequence.
pub fn lateral_delta(base: &Arc<Base>, m: usize) -> Result<Vec<OPoly>> {
    let ring = o_poly_ring(base);
    let cs = lateral_pullback(base, 1, m + 1)?;
    cs.iter()
        .enumerate()
        .map(|(j, c)| {
            let d = ring.sub(c, &ring.pow(&ring.var(Var::kernel(0, j + 1)), base.q()));
            ring.pi_divide(&d, 1).ok_or(Error::NotDivisible { have: "0".into(), want: 1 })
        })
        .collect()
}

/// Checks u*∘Φ∘Φ = f*∘u*∘Φ on the generators x, x′, …, x^{(n−2)} of J_{n−2}A.
pub fn verify_phi_phi_u(base: &Arc<Base>, n: usize) -> Result<Report> {
    let ring = o_poly_ring(base);
    let mut rep = Report::new(format!("phi-phi-u p={} e={} n={n}", base.p(), base.e()));
    for k in 0..=n.saturating_sub(2) {
        let a = ring.var(Var::jet(0, k));
        let phi_a = jet_phi(&ring, &a)?;
        let lhs = restrict_to_kernel(&ring, &jet_phi(&ring, &phi_a)?);
        let rhs = f_star(base, n - 1, &restrict_to_kernel(&ring, &phi_a))?;
        rep.check(format!("generator x^({k})"), lhs == rhs, format!("{} terms", lhs.len()), || {
            format!("lhs {} vs rhs {}", ring.fmt(&lhs), ring.fmt(&rhs))
        });
    }
    Ok(rep)
}

/// The coordinate theorem on B_* = O[x_0, x_1, …]: ∂x_{i−1} := x_i − H̄_i(x_.; ∂x_.),
/// Ψ = (·)^q + π∂, and h_n(x^{(i)}) = ∂^i x_0. Checks h_n(z_i) = x_i for
/// i ≤ n and Ψ^n(x_0) = Σ π^i x_i^{q^{n−i}}.
pub fn verify_coordinate_theorem(base: &Arc<Base>, n: usize) -> Result<Report> {
    let ring = o_poly_ring(base);
    let q = base.q();
    let pi = ring.from_o(&base.pi());
    let mut rep = Report::new(format!("appendix p={} e={} n={n}", base.p(), base.e()));
    let mut dx: Vec<OPoly> = Vec::new();
    for i in 0..n {
        let h = h_bar_polynomial(base, i + 1)?;
        let hv = ring.eval(&h, &ring, |c| ring.constant(c.clone()), |v| {
            if v.family() == family::WITT_X {
                ring.var(Var::appendix(v.index() as usize))
            } else {
                dx[v.index() as usize].clone()
            }
        });
        dx.push(ring.sub(&ring.var(Var::appendix(i + 1)), &hv));
    }
    let mut psi = FrobeniusLift::default();
    for (i, d) in dx.iter().enumerate() {
        let x = ring.var(Var::appendix(i));
        psi = psi.with_image(Var::appendix(i), ring.add(&ring.pow(&x, q), &ring.mul(&pi, d)));
    }
    let mut dpow = vec![ring.var(Var::appendix(0))];
    for k in 1..=n {
        let next = pi_derivation(&ring, &dpow[k - 1], &psi)?;
        dpow.push(next);
    }
    let zs = witt_coordinates(base, n, 0)?;
    for (i, z) in zs.iter().enumerate() {
        let img = ring.eval(z, &ring, |c| ring.constant(c.clone()), |v| dpow[v.index() as usize].clone());
        let want = ring.var(Var::appendix(i));
        rep.check(format!("h_n(z_{i}) = x_{i}"), img == want, "exact", || ring.fmt(&img));
    }
    let mut lhs = ring.var(Var::appendix(0));
    for _ in 0..n {
        lhs = psi.apply(&ring, &lhs)?;
    }
    let xs: Vec<OPoly> = (0..=n).map(|i| ring.var(Var::appendix(i))).collect();
    let rhs = ghost(&ring, &xs).pop().unwrap();
    rep.check("Psi^n(x_0) ghost identity", lhs == rhs, format!("{} terms", rhs.len()), || {
        ring.fmt(&ring.sub(&lhs, &rhs))
    });
    Ok(rep)
}

/// Θ: a C-point of J_nA given by values of x, x′, …, x^{(n)} goes to
/// (g(p_0), …, g(p_n)) ∈ W_n(C).
pub fn theta<S: Ring>(base: &Arc<Base>, target: &S, jet_values: &[S::Elem]) -> Result<Vec<S::Elem>> {
    let ring = o_poly_ring(base);
    let n = jet_values.len() - 1;
    let ps = witt_coordinates(base, n, 0)?;
    Ok(ps
        .iter()
        .map(|p| ring.eval(p, target, |c| target.from_o(c), |v| jet_values[v.index() as usize].clone()))
        .collect())
}

/// Θ⁺ on a C-point of N_nA given by the values of p_1⁺, …, p_n⁺: the
/// shifted vector (0, c_1, …, c_n), returned as its tail.
pub fn theta_plus<E: Clone>(values: &[E]) -> Vec<E> {
    values.to_vec()
}

/// The co-addition on J_1 of Ĝ_a: x′ ↦ δ(x ⊗ 1 + 1 ⊗ x), with the two
/// tensor factors as blocks 0 and 1.
pub fn ga_coaddition(base: &Arc<Base>) -> Result<OPoly> {
    let ring = o_poly_ring(base);
    let s = ring.add(&ring.var(Var::jet(0, 0)), &ring.var(Var::jet(1, 0)));
    prolong(&ring, &s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::make_base;
    use num_integer::Integer;
    use num_traits::Zero;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(9, 3), BigInt::from(84));
        assert!(binomial(5, 0).is_one());
        assert!(!binomial(4, 2).is_zero());
        assert_eq!(binomial(27, 9).mod_floor(&BigInt::from(3)), BigInt::zero());
    }

    #[test]
    fn p2_at_three() {
        let b = make_base(3, 1, &[1, -3]).unwrap();
        let r = o_poly_ring(&b);
        let ps = witt_coordinates(&b, 2, 0).unwrap();
        let (x, x1, x2) = (Var::jet(0, 0), Var::jet(0, 1), Var::jet(0, 2));
        let want = r.from_int_terms(&[(1, &[(x2, 1)]), (1, &[(x, 6), (x1, 1)]), (3, &[(x, 3), (x1, 2)]), (3, &[(x1, 3)])]);
        assert_eq!(ps[2], want);
    }
}
