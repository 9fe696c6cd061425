//! The universal sum, product and Frobenius polynomials at p = 3.

use jetspace::padic::make_base;
use jetspace::poly::o_poly_ring;
use jetspace::witt::{universal, WittOp};

fn main() -> jetspace::Result<()> {
    let base = make_base(3, 1, &[1, -3])?;
    let ring = o_poly_ring(&base);
    for (name, op) in [("S", WittOp::Add), ("P", WittOp::Mul), ("F", WittOp::Frobenius)] {
        for (i, p) in universal(&base, &op, 1)?.iter().enumerate() {
            println!("{name}_{i} = {}", ring.fmt(p));
        }
    }
    Ok(())
}
