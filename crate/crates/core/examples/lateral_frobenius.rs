//! Shifted Witt vectors and the lateral Frobenius F⁺, numerically and on a
//! symbolic tail.

use jetspace::jets::lateral_iterate;
use jetspace::padic::make_base;
use jetspace::poly::o_poly_ring;
use jetspace::ring::IntRing;
use jetspace::shifted::ShiftedRing;

fn main() -> jetspace::Result<()> {
    let base = make_base(3, 1, &[1, -3])?;
    let o = IntRing::new(&base);
    let big = ShiftedRing::over_o(o.clone(), 3)?;
    let small = ShiftedRing::over_o(o, 2)?;

    let v = big.vector(base.int(2), vec![base.int(1), base.int(-1), base.int(5)]);
    let f = big.lateral_frobenius(&v);
    println!("F+(2; 1, -1, 5) = ({}; {:?})", base.fmt_o(&f.head), f.tail.iter().map(|x| base.fmt_o(x)).collect::<Vec<_>>());
    let square = small.shifted_ghost(&f) == ShiftedRing::<IntRing, IntRing>::ghost_lateral(&big.shifted_ghost(&v));
    println!("ghost square commutes: {square}");

    let ring = o_poly_ring(&base);
    for i in 1..=3 {
        println!("(F+)^{i}(0, b) first entry: {}", ring.fmt(&lateral_iterate(&base, i, 4)?[0]));
    }
    Ok(())
}
