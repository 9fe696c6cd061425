//! Ramified Witt vectors over O = Z_5[π]/(π² − 5): ghost components,
//! ring operations, Frobenius and Verschiebung.

use jetspace::padic::make_base;
use jetspace::ring::{IntRing, Ring};
use jetspace::witt::{ghost, ghost_inverse, WittRing};

fn main() -> jetspace::Result<()> {
    let base = make_base(5, 2, &[1, 0, -5])?;
    let o = IntRing::new(&base);
    let w = WittRing::new(o.clone(), 2)?;

    let a = vec![base.from_coeffs(&[1, 2]), base.int(3), base.pi()];
    let b = vec![base.int(-2), base.from_coeffs(&[0, 1]), base.int(4)];
    let show = |v: &[_]| v.iter().map(|x| base.fmt_o(x)).collect::<Vec<_>>().join(", ");

    println!("a        = ({})", show(&a));
    println!("ghost a  = ({})", show(&ghost(&o, &a)));
    println!("a + b    = ({})", show(&w.add(&a, &b)));
    println!("a * b    = ({})", show(&w.mul(&a, &b)));
    println!("F a      = ({})", show(&w.frobenius(&a)));
    println!("V a      = ({})", show(&w.verschiebung(&a)));

    // Ghost vectors of a product are products of ghost vectors.
    let g: Vec<_> = ghost(&o, &a).iter().zip(ghost(&o, &b)).map(|(x, y)| o.mul(x, &y)).collect();
    assert_eq!(ghost_inverse(&o, &g)?, w.mul(&a, &b));
    println!("ghost_inverse(ghost a * ghost b) = a * b");
    Ok(())
}
