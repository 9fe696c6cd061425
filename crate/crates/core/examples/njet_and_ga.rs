//! N^nĜ_m ≅ J^{n−1}(N¹Ĝ_m) through μ(w) = 1 + V(w), and N¹Ĝ_a[p^ν] ≅ Ĝ_a[p^ν].
//! Neither needs p ≥ e + 2, so p = 2 is included.

use jetspace::nilp::{zp, NilpAlgebra};
use jetspace::padic::make_base;
use jetspace::torsion::{verify_ga_torsion, verify_njet_for_gm};

fn main() -> jetspace::Result<()> {
    for (p, eis) in [(3, [1, -3]), (2, [1, -2])] {
        let base = make_base(p, 1, &eis)?;
        let c = NilpAlgebra::new(&base, zp(2))?;
        print!("{}", verify_njet_for_gm(&c, 2, 1)?.to_text());
        for nu in 1..=2 {
            print!("{}", verify_ga_torsion(&c, nu, 1)?.to_text());
        }
    }
    Ok(())
}
