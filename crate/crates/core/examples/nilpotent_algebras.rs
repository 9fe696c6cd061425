//! Finite test algebras O/π^m and (O/π^m)[t_1, …]/(t_i^{k_i}).

use jetspace::nilp::{catalog, default_catalog, AlgebraSpec, NilpAlgebra};
use jetspace::padic::make_base;
use jetspace::ring::Ring;

fn main() -> jetspace::Result<()> {
    let base = make_base(3, 1, &[1, -3])?;
    for c in catalog(&base, &default_catalog())? {
        let units = c.elements().filter(|x| c.is_unit(x)).count();
        println!("{:<16} |C| = {:<4} units {:<4} nilpotency {}", c.name(), c.size(), units, c.nilpotency_index());
    }
    let ramified = make_base(5, 2, &[1, 0, -5])?;
    let c = NilpAlgebra::new(&ramified, AlgebraSpec { name: None, m: 3, t: vec![2] })?;
    let x = c.add(&c.from_o(&ramified.pi()), &c.generator(0));
    println!("{}: (pi + t)^2 = {}, (pi + t)^4 = {}", c.name(), c.fmt(&c.mul(&x, &x)), c.fmt(&c.pow(&x, 4)));
    Ok(())
}
