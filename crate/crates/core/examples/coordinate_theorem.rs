//! The coordinate-change theorem on O[x_0, x_1, …] for two bases.

use jetspace::jets::verify_coordinate_theorem;
use jetspace::padic::make_base;

fn main() -> jetspace::Result<()> {
    for (p, e, eis) in [(3, 1, vec![1, -3]), (5, 2, vec![1, 0, -5])] {
        let base = make_base(p, e, &eis)?;
        for n in 1..=3 {
            print!("{}", verify_coordinate_theorem(&base, n)?.to_text());
        }
    }
    Ok(())
}
