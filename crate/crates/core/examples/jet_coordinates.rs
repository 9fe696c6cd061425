//! Witt coordinates p_i of the jet algebra of the affine line, the kernel
//! coordinates p_i⁺ and the correction polynomials H̄_n.

use jetspace::jets::{ghost_identity_holds, h_bar_polynomial, kernel_coordinates, witt_coordinates};
use jetspace::padic::make_base;
use jetspace::poly::o_poly_ring;

fn main() -> jetspace::Result<()> {
    let base = make_base(3, 1, &[1, -3])?;
    let ring = o_poly_ring(&base);
    for (i, p) in witt_coordinates(&base, 3, 0)?.iter().enumerate() {
        println!("p_{i} = {}", ring.fmt(p));
    }
    for (i, p) in kernel_coordinates(&base, 2)?.iter().enumerate() {
        println!("p_{}+ = {}", i + 1, ring.fmt(p));
    }
    println!("Hbar_2 = {}", ring.fmt(&h_bar_polynomial(&base, 2)?));
    for n in 0..=4 {
        println!("n = {n}: Phi^n(x) = sum pi^i p_i^(q^(n-i)): {}", ghost_identity_holds(&base, n)?);
    }
    Ok(())
}
