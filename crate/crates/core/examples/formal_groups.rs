//! Formal group laws: validation, the kernel law, logarithm and exponential
//! valuations, and the additive certificate.

use jetspace::fgl::{
    certify_additive_iso, elliptic_law, exponential, fmt_law, gm_scaled, kernel_law, logarithm, to_k, validate_law,
};
use jetspace::padic::make_base;
use jetspace::ring::IntRing;

fn main() -> jetspace::Result<()> {
    let base = make_base(3, 1, &[1, -3])?;
    let o = IntRing::new(&base);

    let e = elliptic_law(&base, -1, 1, 5);
    println!("elliptic y^2 = x^3 - x + 1: F = {}", fmt_law(&to_k(&e)));
    print!("{}", validate_law(&e).to_text());
    println!("kernel law: {}", fmt_law(&to_k(&kernel_law(&e)?)));

    let gm1 = to_k(&gm_scaled(o, 1, 40));
    let log = logarithm(&gm1, 40);
    let exp = exponential(&gm1, 40);
    let show = |vs: Vec<jetspace::padic::Valuation>| vs[1..].iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    println!("v(log_j), j = 1..40: {}", show(log.valuations(&base)));
    println!("v(exp_j), j = 1..40: {}", show(exp.valuations(&base)));
    match certify_additive_iso(&gm1, 40) {
        Ok(c) => println!("G_m{{1}} ~ G_a to degree 40; exp block minima {:?}", c.exp_envelope),
        Err(err) => println!("refused: {err}"),
    }

    let ramified = make_base(3, 2, &[1, 0, -3])?;
    let gm1 = to_k(&gm_scaled(IntRing::new(&ramified), 1, 40));
    println!("p = 3, e = 2: {}", certify_additive_iso(&gm1, 40).err().map(|e| e.to_string()).unwrap_or_default());
    Ok(())
}
