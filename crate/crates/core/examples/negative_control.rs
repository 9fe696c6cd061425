//! At p = 2, e = 1 the hypothesis p ≥ e + 2 fails and so does the kernel
//! isomorphism: N¹Ĝ_m(Z/4) has invariants [2, 2] while Z/4 has [4].

use jetspace::nilp::{zp, NilpAlgebra};
use jetspace::padic::make_base;
use jetspace::torsion::{explicit_kernel_iso, invariants, kernel_points, witt_additive_group, GroupKind};

fn main() -> jetspace::Result<()> {
    let base = make_base(2, 1, &[1, -2])?;
    let c = NilpAlgebra::new(&base, zp(2))?;
    let k = invariants(&kernel_points(&GroupKind::Multiplicative, 1, &c)?)?;
    let w = invariants(&witt_additive_group(&c, 1)?)?;
    println!("kernel {k}, W_0(Z/4) {w}");
    match explicit_kernel_iso(&c, 1, 0) {
        Ok(_) => println!("unexpected certificate"),
        Err(e) => println!("explicit iso refused: {e}"),
    }
    Ok(())
}
