mod common;

use common::*;
use jetspace::group::cyclic_product;
use jetspace::nilp::{truncated, zp, NilpAlgebra};
use jetspace::padic::OElement;
use jetspace::ring::{IntRing, Ring};
use jetspace::shifted::{ShiftedRing, ShiftedWittVector};
use jetspace::witt::{ghost_inverse, WittRing};
use proptest::prelude::*;

fn o_vec(e: usize, len: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-40i64..=40, e), len)
}

fn to_o(b: &jetspace::padic::Base, v: &[Vec<i64>]) -> Vec<OElement> {
    v.iter().map(|c| b.from_coeffs(c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ghost_inverse_undoes_ghost(v in o_vec(2, 4)) {
        let b = base(5, 2);
        let x = to_o(&b, &v);
        let back = ghost_inverse(&IntRing::new(&b), &ghost_oracle(&b, &x)).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn witt_ops_are_ghostwise(u in o_vec(1, 3), v in o_vec(1, 3)) {
        let b = base(3, 1);
        let w = WittRing::new(IntRing::new(&b), 2).unwrap();
        let (x, y) = (to_o(&b, &u), to_o(&b, &v));
        let (gx, gy) = (ghost_oracle(&b, &x), ghost_oracle(&b, &y));
        let gs = ghost_oracle(&b, &w.add(&x, &y));
        let gp = ghost_oracle(&b, &w.mul(&x, &y));
        let gn = ghost_oracle(&b, &w.neg(&x));
        for i in 0..3 {
            prop_assert_eq!(&gs[i], &b.add(&gx[i], &gy[i]));
            prop_assert_eq!(&gp[i], &b.mul(&gx[i], &gy[i]));
            prop_assert_eq!(&gn[i], &b.neg(&gx[i]));
        }
    }

    /// Reduction O → C commutes with the Witt operations (universality of the polynomials).
    #[test]
    fn witt_over_torsion_rings_is_reduction(u in o_vec(1, 3), v in o_vec(1, 3)) {
        let b = base(3, 1);
        let c = NilpAlgebra::new(&b, zp(2)).unwrap();
        let wo = WittRing::new(IntRing::new(&b), 2).unwrap();
        let wc = witt_over(&c, 2);
        let (x, y) = (to_o(&b, &u), to_o(&b, &v));
        let red = |z: &[OElement]| z.iter().map(|a| c.from_o(a)).collect::<Vec<_>>();
        prop_assert_eq!(red(&wo.add(&x, &y)), wc.add(&red(&x), &red(&y)));
        prop_assert_eq!(red(&wo.mul(&x, &y)), wc.mul(&red(&x), &red(&y)));
        prop_assert_eq!(red(&wo.frobenius(&x)), wc.frobenius(&red(&x)));
    }

    #[test]
    fn frobenius_is_a_ring_map(u in o_vec(2, 3), v in o_vec(2, 3)) {
        let b = base(5, 2);
        let long = WittRing::new(IntRing::new(&b), 2).unwrap();
        let short = WittRing::new(IntRing::new(&b), 1).unwrap();
        let (x, y) = (to_o(&b, &u), to_o(&b, &v));
        prop_assert_eq!(long.frobenius(&long.add(&x, &y)), short.add(&long.frobenius(&x), &long.frobenius(&y)));
        prop_assert_eq!(long.frobenius(&long.mul(&x, &y)), short.mul(&long.frobenius(&x), &long.frobenius(&y)));
    }

    #[test]
    fn verschiebung_is_additive(u in o_vec(1, 3), v in o_vec(1, 3)) {
        let b = base(3, 1);
        let w = WittRing::new(IntRing::new(&b), 2).unwrap();
        let (x, y) = (to_o(&b, &u), to_o(&b, &v));
        prop_assert_eq!(w.verschiebung(&w.add(&x, &y)), w.add(&w.verschiebung(&x), &w.verschiebung(&y)));
    }

    #[test]
    fn lateral_frobenius_is_a_ring_map(h in (-30i64..30, -30i64..30), u in o_vec(1, 3), v in o_vec(1, 3)) {
        let b = base(3, 1);
        let big = ShiftedRing::over_o(IntRing::new(&b), 3).unwrap();
        let small = ShiftedRing::over_o(IntRing::new(&b), 2).unwrap();
        let x = ShiftedWittVector::new(b.int(h.0), to_o(&b, &u));
        let y = ShiftedWittVector::new(b.int(h.1), to_o(&b, &v));
        let s = big.lateral_frobenius(&big.add(&x, &y));
        let t = small.add(&big.lateral_frobenius(&x), &big.lateral_frobenius(&y));
        prop_assert_eq!((s.head, s.tail), (t.head, t.tail));
        let s = big.lateral_frobenius(&big.mul(&x, &y));
        let t = small.mul(&big.lateral_frobenius(&x), &big.lateral_frobenius(&y));
        prop_assert_eq!((s.head, s.tail), (t.head, t.tail));
    }

    #[test]
    fn nilpotent_algebra_is_a_ring(a in 0u64..81, bb in 0u64..81, cc in 0u64..81) {
        let b = base(3, 1);
        let c = NilpAlgebra::new(&b, truncated(2, 2)).unwrap();
        let (x, y, z) = (c.decode(a), c.decode(bb), c.decode(cc));
        prop_assert_eq!(c.mul(&c.mul(&x, &y), &z), c.mul(&x, &c.mul(&y, &z)));
        prop_assert_eq!(c.mul(&x, &c.add(&y, &z)), c.add(&c.mul(&x, &y), &c.mul(&x, &z)));
        prop_assert_eq!(c.mul(&x, &y), c.mul(&y, &x));
        prop_assert_eq!(c.add(&x, &c.neg(&x)), c.zero());
        if c.is_unit(&x) {
            prop_assert_eq!(c.mul(&x, &c.inverse(&x).unwrap()), c.one());
        }
    }

    #[test]
    fn invariants_recover_cyclic_products(mut exps in prop::collection::vec(1u32..=3, 1..=3)) {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        let g = cyclic_product(2, &exps);
        prop_assert_eq!(g.invariants().unwrap().exponents, exps);
    }
}
