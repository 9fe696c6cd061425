//! Small worked values, checked by hand or by enumeration.

mod common;

use common::*;
use jetspace::error::Error;
use jetspace::fgl::{certify_additive_iso, gm_scaled, to_k, FormalGroupLaw};
use jetspace::nilp::{truncated, zp, NilpAlgebra};
use jetspace::padic::make_base;
use jetspace::ring::{IntRing, Ring};
use jetspace::torsion::{
    invariants, jet_points, kernel_points, points, verify_main_theorem, verify_njet_for_gm, GroupKind,
};
use jetspace::witt::{exp_delta, ghost_inverse, WittRing};

#[test]
fn ghost_inverse_over_z() {
    let b = base(3, 1);
    let o = IntRing::new(&b);
    let g = vec![b.int(5), b.int(5), b.int(5)];
    assert_eq!(ghost_inverse(&o, &g).unwrap(), vec![b.int(5), b.int(-40), b.int(-195680)]);
    // (1, 2) is not a ghost vector: a_1 = (2 − 1)/3.
    assert!(ghost_inverse(&o, &[b.int(1), b.int(2)]).is_err());
}

#[test]
fn exp_delta_of_two() {
    let b = base(3, 1);
    let o = IntRing::new(&b);
    assert_eq!(exp_delta(&o, &b.int(2), 1, |r| r.clone()).unwrap(), vec![b.int(2), b.int(-2)]);
}

#[test]
fn frobenius_of_verschiebung() {
    let b = base(3, 1);
    let w = WittRing::new(IntRing::new(&b), 1).unwrap();
    assert_eq!(w.frobenius(&[b.zero(), b.int(7)]), vec![b.int(21)]);
}

#[test]
fn base_validation() {
    assert!(matches!(make_base(4, 1, &[1, -4]), Err(Error::NotPrime(4))));
    assert!(matches!(make_base(3, 2, &[1, 0, -9]), Err(Error::NotEisenstein { .. })));
    assert!(matches!(make_base(3, 2, &[1, 0, 6]), Err(Error::UnsupportedBase(_))));
    assert!(make_base(3, 2, &[1, 3, 3]).is_ok());
}

#[test]
fn certificates_follow_p_at_least_e_plus_two() {
    for (p, e, ok) in [(3u64, 1usize, true), (5, 2, true), (5, 3, true), (3, 2, false), (2, 1, false)] {
        let b = base(p, e);
        let law = to_k(&gm_scaled(IntRing::new(&b), 1, 96));
        assert_eq!(certify_additive_iso(&law, 96).is_ok(), ok, "p={p} e={e}");
    }
    // Unscaled G_m has log coefficient 1/3 at degree 3.
    let b = base(3, 1);
    assert!(certify_additive_iso(&to_k(&FormalGroupLaw::multiplicative(IntRing::new(&b), 32)), 32).is_err());
}

#[test]
fn kernel_orders_by_enumeration() {
    let b = base(3, 1);
    let c = NilpAlgebra::new(&b, zp(2)).unwrap();
    // N^2 G_m(Z/9) = {(1, a, b)}: 81 elements, all of 3-power order.
    let k = kernel_points(&GroupKind::Multiplicative, 2, &c).unwrap();
    assert_eq!(k.order(), 81);
    assert!(k.is_p_group());
    let w = witt_over(&c, 2);
    let ones: Vec<_> = all_vectors(&c, 2).into_iter().map(|t| vec![c.one(), t[0], t[1]]).collect();
    let max = ones.iter().map(|u| order_of(u, &w.one(), |a, b| w.mul(a, b), 10_000).unwrap()).max().unwrap();
    let inv = invariants(&k).unwrap();
    assert_eq!(inv.factors()[0] as u64, max);
    assert_eq!(inv.order(), 81);
}

#[test]
fn jet_points_of_units() {
    let b = base(3, 1);
    let c = NilpAlgebra::new(&b, truncated(1, 3)).unwrap();
    // F_3[t]/(t^3)^×: 2·9 = 18 units; J^1: 18·27.
    assert_eq!(points(&GroupKind::Multiplicative, &c).unwrap().order(), 18);
    assert_eq!(jet_points(&GroupKind::Multiplicative, 1, &c).unwrap().order(), 18 * 27);
}

#[test]
fn main_theorem_small_cases() {
    let b = base(3, 1);
    let z27 = NilpAlgebra::new(&b, zp(3)).unwrap();
    assert!(verify_main_theorem(&z27, 2, 1).unwrap().is_green());
    let f3 = NilpAlgebra::new(&b, truncated(1, 3)).unwrap();
    for n in 1..=2 {
        assert!(verify_main_theorem(&f3, n, 1).unwrap().is_green());
    }
    let two = base(2, 1);
    let z4 = NilpAlgebra::new(&two, zp(2)).unwrap();
    assert!(verify_njet_for_gm(&z4, 1, 1).unwrap().is_green());
    assert!(!verify_main_theorem(&z4, 1, 1).unwrap().is_green());
}

#[test]
fn ramified_algebras() {
    let b = base(5, 2);
    let c = NilpAlgebra::new(&b, zp(3)).unwrap();
    // O/π^3 with π^2 = 5: basis 1, π with moduli 25 and 5.
    assert_eq!(c.size(), 125);
    assert_eq!(c.name(), "O/pi^3");
    let pi = c.from_o(&b.pi());
    assert_eq!(c.mul(&pi, &c.mul(&pi, &pi)), c.zero());
    assert_ne!(c.mul(&pi, &pi), c.zero());
}
