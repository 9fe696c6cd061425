//! The exact sequence 0 → Ŵ_{n−1} → J^nĜ_m[p^∞] → Ĝ_m[p^∞] → 0 checked on
//! Z/9 and F_3[t]/(t^3), with the explicit kernel isomorphism.

use jetspace::nilp::{truncated, zp, NilpAlgebra};
use jetspace::padic::make_base;
use jetspace::torsion::{invariants, kernel_iso, kernel_points, verify_main_theorem, GroupKind};

fn main() -> jetspace::Result<()> {
    let base = make_base(3, 1, &[1, -3])?;
    for spec in [zp(2), truncated(1, 3)] {
        let c = NilpAlgebra::new(&base, spec)?;
        for n in 1..=2 {
            print!("{}", verify_main_theorem(&c, n, 7)?.to_text());
        }
    }
    let c = NilpAlgebra::new(&base, zp(2))?;
    let iso = kernel_iso(&c, 2)?;
    println!("N^2 G_m(Z/9) = {}", invariants(&kernel_points(&GroupKind::Multiplicative, 2, &c)?)?);
    for a in [1u64, 9, 10] {
        println!("psi({}) = {}", iso.fmt_source(a), iso.fmt_target(iso.psi_code(a)));
    }
    Ok(())
}
