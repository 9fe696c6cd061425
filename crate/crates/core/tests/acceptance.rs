//! The thirteen acceptance criteria, one PASS/FAIL line each. Expected
//! values come from the oracles in `common`, from enumeration in this file,
//! or from closed forms typed in by hand.

// Same allocator as the binary, since two criteria carry time budgets.
#[global_allocator]
static GLOBAL: mimalloc::MiMalloc = mimalloc::MiMalloc;

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::*;
use jetspace::error::Error;
use jetspace::fgl::{
    certify_additive_iso, elliptic_law, exponential, gm_scaled, kernel_law, logarithm, random_integral_law, scale_law,
    to_k, FormalGroupLaw, OLaw,
};
use jetspace::jets::{lateral_pullback, verify_coordinate_theorem, witt_coordinates};
use jetspace::nilp::{default_catalog, catalog, zp, NilpAlgebra};
use jetspace::padic::{Base, Valuation};
use jetspace::poly::{Monomial, Var};
use jetspace::ring::{IntRing, Ring};
use jetspace::shifted::{ShiftedRing, ShiftedWittVector};
use jetspace::torsion::{
    explicit_kernel_iso, invariants, jet_points, kernel_points, p_power_torsion, points, verify_ga_torsion,
    verify_main_theorem, verify_njet_for_gm, witt_additive_group, GroupKind, SIZE_GUARD,
};
use jetspace::witt::{exp_delta, universal, WittOp, WittRing};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20261014;
const PAIRS: usize = 200;
const CRIT1_BUDGET: Duration = Duration::from_secs(5);
const CRIT5_BUDGET: Duration = Duration::from_secs(30);
const CRIT10_BUDGET: Duration = Duration::from_secs(60);
/// Every comparison is an exact equality; the only pinned tolerances are the time budgets.
const EXACT: &str = "exact";

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bases() -> Vec<std::sync::Arc<Base>> {
    vec![base(3, 1), base(5, 2)]
}

fn crit1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for b in bases() {
        let o = IntRing::new(&b);
        for n in 0..=3 {
            let w = WittRing::new(o.clone(), n).map_err(|e| e.to_string())?;
            for _ in 0..PAIRS {
                let (x, y) = (random_vec(&b, &mut rng, n + 1, 50), random_vec(&b, &mut rng, n + 1, 50));
                let (gx, gy) = (ghost_oracle(&b, &x), ghost_oracle(&b, &y));
                let gs = ghost_oracle(&b, &w.add(&x, &y));
                let gp = ghost_oracle(&b, &w.mul(&x, &y));
                for i in 0..=n {
                    ensure(gs[i] == b.add(&gx[i], &gy[i]), || format!("p={} n={n}: sum, ghost {i}", b.p()))?;
                    ensure(gp[i] == b.mul(&gx[i], &gy[i]), || format!("p={} n={n}: product, ghost {i}", b.p()))?;
                }
                if n >= 1 {
                    ensure(ghost_oracle(&b, &w.frobenius(&x)) == gx[1..], || format!("p={} n={n}: Frobenius", b.p()))?;
                }
            }
        }
    }
    let t = start.elapsed();
    ensure(t < CRIT1_BUDGET, || format!("took {t:?}, budget {CRIT1_BUDGET:?}"))?;
    Ok(format!("(3,1) and (5,2), n <= 3, {PAIRS} pairs each, {t:.2?}"))
}

fn crit2() -> Outcome {
    let b = base(3, 1);
    let ring = poly_ring(&b);
    let (x0, x1, y0, y1) = (Var::x(0), Var::x(1), Var::y(0), Var::y(1));
    let golden = ring.sum(&[
        mono(&ring, 1, &[(x1, 1)]),
        mono(&ring, 1, &[(y1, 1)]),
        mono(&ring, -1, &[(x0, 2), (y0, 1)]),
        mono(&ring, -1, &[(x0, 1), (y0, 2)]),
    ]);
    // S_1 = (w_1(x) + w_1(y) − (x_0 + y_0)^3)/3.
    let (vx, vy) = (ring.var(x0), ring.var(y0));
    let w1 = |a: &_, c: Var| ring.add(&ring.pow(a, 3), &ring.mul(&ring.from_int(3), &ring.var(c)));
    let num = ring.sub(&ring.add(&w1(&vx, x1), &w1(&vy, y1)), &ring.pow(&ring.add(&vx, &vy), 3));
    let by_hand = divide_pi(&ring, &num, 1);
    ensure(by_hand == golden, || "hand ghost inversion disagrees with the golden S_1".into())?;
    let s = universal(&b, &WittOp::Add, 1).map_err(|e| e.to_string())?;
    ensure(*s[1] == golden, || format!("S_1 = {}", ring.fmt(&s[1])))?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for bb in bases() {
        let o = IntRing::new(&bb);
        for n in 1..=3 {
            let long = WittRing::new(o.clone(), n).map_err(|e| e.to_string())?;
            let short = WittRing::new(o.clone(), n - 1).map_err(|e| e.to_string())?;
            for _ in 0..PAIRS {
                let v = random_vec(&bb, &mut rng, n, 50);
                let vv = long.verschiebung(&{
                    let mut t = v.clone();
                    t.push(bb.zero());
                    t
                });
                let mut want = vec![bb.zero()];
                want.extend(ghost_oracle(&bb, &v).iter().map(|g| bb.mul(&bb.pi(), g)));
                ensure(ghost_oracle(&bb, &vv) == want, || format!("ghost(V b) at p={} n={n}", bb.p()))?;
                let fv = long.frobenius(&vv);
                let piv: Vec<_> = ghost_oracle(&bb, &v).iter().map(|g| bb.mul(&bb.pi(), g)).collect();
                ensure(ghost_oracle(&bb, &fv) == piv, || format!("F V at p={} n={n}", bb.p()))?;
                ensure(fv == short.scalar(&bb.pi(), &v), || format!("F V = pi at p={} n={n}", bb.p()))?;
            }
        }
    }
    Ok(format!("S_1 = {}; FV = pi and ghost(V b) = (0, pi w(b)) on {PAIRS} vectors per (base, n)", ring.fmt(&golden)))
}

fn crit3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut count = 0;
    for b in bases() {
        let ring = poly_ring(&b);
        let t = Var::letter('x');
        let phi = |f: &jetspace::poly::OPoly| ring.eval(f, &ring, |c| ring.constant(c.clone()), |v| ring.pow(&ring.var(v), b.q()));
        for n in 0..=3 {
            for _ in 0..100 {
                let deg = rand::Rng::gen_range(&mut rng, 0..=3u32);
                let r = ring.from_terms((0..=deg).map(|k| (Monomial::var(t, k), random_o(&b, &mut rng, 9))));
                let e = exp_delta(&ring, &r, n, phi).map_err(|e| e.to_string())?;
                let g = ghost_poly(&ring, &e);
                let mut want = r.clone();
                for (i, gi) in g.iter().enumerate() {
                    ensure(*gi == want, || format!("p={} n={n}: component {i} for r = {}", b.p(), ring.fmt(&r)))?;
                    want = phi(&want);
                }
                if n >= 1 {
                    let delta = divide_pi(&ring, &ring.sub(&phi(&r), &ring.pow(&r, b.q())), 1);
                    ensure(e[1] == delta, || format!("exp_delta(r)_1 is not delta r for r = {}", ring.fmt(&r)))?;
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} polynomials of O[x], n <= 3, both bases; component 1 equals delta r"))
}

fn crit4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let mut notes = Vec::new();
    for b in bases() {
        let o = IntRing::new(&b);
        let tor = NilpAlgebra::new(&b, zp(2)).map_err(|e| e.to_string())?;
        for n in 1..=3 {
            let big = ShiftedRing::over_o(o.clone(), n).map_err(|e| e.to_string())?;
            let small = ShiftedRing::over_o(o.clone(), n - 1).map_err(|e| e.to_string())?;
            let tbig = ShiftedRing::over_o(tor.clone(), n).map_err(|e| e.to_string())?;
            let tsmall = ShiftedRing::over_o(tor.clone(), n - 1).map_err(|e| e.to_string())?;
            for _ in 0..PAIRS {
                let a = ShiftedWittVector::new(random_o(&b, &mut rng, 30), random_vec(&b, &mut rng, n, 30));
                let c = ShiftedWittVector::new(random_o(&b, &mut rng, 30), random_vec(&b, &mut rng, n, 30));
                let f = |v: &ShiftedWittVector<jetspace::padic::OElement, jetspace::padic::OElement>| big.lateral_frobenius(v);
                let (s, m) = (f(&big.add(&a, &c)), f(&big.mul(&a, &c)));
                let (fs, fm) = (small.add(&f(&a), &f(&c)), small.mul(&f(&a), &f(&c)));
                ensure(s.head == fs.head && s.tail == fs.tail, || format!("additivity over O, p={} n={n}", b.p()))?;
                ensure(m.head == fm.head && m.tail == fm.tail, || format!("multiplicativity over O, p={} n={n}", b.p()))?;
                let red = |v: &ShiftedWittVector<jetspace::padic::OElement, jetspace::padic::OElement>| {
                    ShiftedWittVector::new(v.head.clone(), v.tail.iter().map(|x| tor.from_o(x)).collect::<Vec<_>>())
                };
                let (ta, tc) = (red(&a), red(&c));
                let g = |v: &ShiftedWittVector<jetspace::padic::OElement, jetspace::nilp::NElem>| tbig.lateral_frobenius(v);
                let (s, m) = (g(&tbig.add(&ta, &tc)), g(&tbig.mul(&ta, &tc)));
                let (fs, fm) = (tsmall.add(&g(&ta), &g(&tc)), tsmall.mul(&g(&ta), &g(&tc)));
                ensure(s.tail == fs.tail && m.tail == fm.tail, || format!("hom over O/pi^2, p={} n={n}", b.p()))?;
                // Diagram: ghost of the image drops slot 1 of the ghost.
                let mut full = vec![b.zero()];
                full.extend(a.tail.iter().cloned());
                full[0] = a.head.clone();
                let gw = ghost_oracle(&b, &full);
                let fa = f(&a);
                let mut img = vec![fa.head.clone()];
                img.extend(fa.tail.iter().cloned());
                let mut want = vec![gw[0].clone()];
                want.extend(gw[2..].iter().cloned());
                ensure(ghost_oracle(&b, &img) == want, || format!("ghost square, p={} n={n}", b.p()))?;
            }
        }
        let ring = poly_ring(&b);
        let n = 4;
        let c1 = jetspace::jets::lateral_iterate(&b, 1, n).map_err(|e| e.to_string())?[0].clone();
        let q = b.q() as u32;
        let hand = ring.add(
            &ring.pow(&ring.var(Var::tail(1)), q as u64),
            &ring.mul(&ring.constant(b.pi()), &ring.var(Var::tail(2))),
        );
        ensure(c1 == hand, || format!("c_1 = {}", ring.fmt(&c1)))?;
        for i in 1..n {
            let got = jetspace::jets::lateral_iterate(&b, i, n).map_err(|e| e.to_string())?[0].clone();
            let truth = first_entry_oracle(&ring, Var::tail, i + 1);
            ensure(got == truth, || format!("(F+)^{i} first entry {}", ring.fmt(&got)))?;
            // The display whose last term is π^i b_i.
            let mut display = ring.zero();
            for k in 0..i {
                display = ring.add(
                    &display,
                    &ring.mul(&ring.constant(b.pi_pow(k as u32)), &ring.pow(&ring.var(Var::tail(k + 1)), b.q().pow((i - k) as u32))),
                );
            }
            display = ring.add(&display, &ring.mul(&ring.constant(b.pi_pow(i as u32)), &ring.var(Var::tail(i))));
            if display != truth && b.p() == 3 && i == 2 {
                notes.push(format!(
                    "display ending in pi^i b_i disagrees with the ghost oracle (i=2: truth {})",
                    ring.fmt(&truth)
                ));
            }
        }
    }
    Ok(format!("hom over O and O/pi^2, ghost square, c_1 = b_1^q + pi b_2; {}", notes.join("; ")))
}

fn crit5() -> Outcome {
    let start = Instant::now();
    for b in bases() {
        let ring = poly_ring(&b);
        for n in 0..=4 {
            let ps = witt_coordinates(&b, n, 0).map_err(|e| e.to_string())?;
            let mut phi = ring.var(Var::jet(0, 0));
            for _ in 0..n {
                phi = jet_frobenius(&ring, &phi);
            }
            let g = ghost_poly(&ring, &ps).pop().unwrap();
            ensure(g == phi, || format!("ghost identity fails at p={} n={n}", b.p()))?;
        }
    }
    let b = base(3, 1);
    let ring = poly_ring(&b);
    let (x, x1, x2) = (Var::jet(0, 0), Var::jet(0, 1), Var::jet(0, 2));
    let p2 = ring.sum(&[
        mono(&ring, 1, &[(x2, 1)]),
        mono(&ring, 1, &[(x, 6), (x1, 1)]),
        mono(&ring, 3, &[(x, 3), (x1, 2)]),
        mono(&ring, 3, &[(x1, 3)]),
    ]);
    let got = witt_coordinates(&b, 2, 0).map_err(|e| e.to_string())?[2].clone();
    ensure(got == p2, || format!("p_2 = {}", ring.fmt(&got)))?;
    let t = start.elapsed();
    ensure(t < CRIT5_BUDGET, || format!("took {t:?}, budget {CRIT5_BUDGET:?}"))?;
    Ok(format!("n <= 4 at (3,1) and (5,2); p_2 = {}; {t:.2?}", ring.fmt(&p2)))
}

fn crit6() -> Outcome {
    let mut literal_note = String::new();
    for b in bases() {
        let ring = poly_ring(&b);
        let kv = |j: usize| Var::kernel(0, j);
        for n in 1..=4 {
            for i in 1..=n {
                let display = {
                    let mut d = ring.zero();
                    for k in 0..i {
                        let t = ring.pow(&ring.var(kv(k + 1)), b.q().pow((i - 1 - k) as u32));
                        d = ring.add(&d, &ring.mul(&ring.constant(b.pi_pow(k as u32)), &t));
                    }
                    d
                };
                // Θ⁺ square: the first tail entry of (F⁺)^m on (0, p_1⁺, …, p_n⁺).
                let oracle = |m: usize| first_entry_oracle(&ring, kv, m + 1);
                let pulled = lateral_pullback(&b, i - 1, n).map_err(|e| e.to_string())?[0].clone();
                ensure(pulled == oracle(i - 1), || format!("pullback disagrees with the ghost oracle at i={i} n={n}"))?;
                ensure(pulled == display, || format!("display fails at p={} i={i} n={n}", b.p()))?;
                if i < n {
                    let literal = lateral_pullback(&b, i, n).map_err(|e| e.to_string())?[0].clone();
                    ensure(literal == oracle(i), || format!("i-fold pullback disagrees with the ghost oracle at i={i}"))?;
                    if literal != display && literal_note.is_empty() {
                        literal_note = format!("the {i}-fold pullback itself is {}", ring.fmt(&literal));
                    }
                }
            }
        }
    }
    Ok(format!(
        "the display for i equals the (i-1)-fold pullback for all i <= n <= 4; {literal_note}"
    ))
}

fn crit7() -> Outcome {
    let mut checks = 0;
    for b in bases() {
        for n in 1..=3 {
            let rep = verify_coordinate_theorem(&b, n).map_err(|e| e.to_string())?;
            ensure(rep.is_green(), || format!("{:?}", rep.first_red()))?;
            checks += rep.checks.len();
        }
    }
    Ok(format!("h_n(z_i) = x_i and the Psi ghost identity, {checks} symbolic checks"))
}

fn crit8() -> Outcome {
    let mut names = Vec::new();
    for b in bases() {
        let o = IntRing::new(&b);
        let d = 6;
        let mut laws: Vec<(String, OLaw)> = vec![
            ("G_a".into(), FormalGroupLaw::additive(o.clone(), d)),
            ("G_m".into(), FormalGroupLaw::multiplicative(o.clone(), d)),
            ("elliptic".into(), elliptic_law(&b, -1, 1, d)),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
        for k in 0..5 {
            laws.push((format!("random {k}"), random_integral_law(&b, &mut rng, 3, d).0));
        }
        for (name, law) in &laws {
            let got = kernel_law(law).map_err(|e| e.to_string())?;
            // F^φ{1} with φ = id on O: π^{-1}F(πx, πy), coefficient a_{αβ} π^{α+β−1}.
            let want: Vec<_> = law
                .terms()
                .into_iter()
                .map(|(a, c, v)| (a, c, b.mul(&v, &b.pi_pow(a + c - 1))))
                .collect();
            let want = FormalGroupLaw::from_coefficients(o.clone(), want, d);
            ensure(got.series == want.series, || format!("{name} at p={}", b.p()))?;
            ensure(scale_law(law, 1).series == want.series, || format!("scale_law differs for {name}"))?;
        }
        names.push(format!("p={}: {} laws", b.p(), laws.len()));
    }
    Ok(format!("G_a, G_m, y^2 = x^3 - x + 1 and 5 random laws to degree 6 ({})", names.join(", ")))
}

fn crit9() -> Outcome {
    let d = 200usize;
    let b = base(3, 1);
    let (p, e) = (3u64, 1u64);
    let gm1 = to_k(&gm_scaled(IntRing::new(&b), 1, d as u32));
    let log = logarithm(&gm1, d);
    let exp = exponential(&gm1, d);
    for j in 1..=d {
        // log = π^{-1} log(1 + πx): coefficient (−1)^{j+1} π^{j−1}/j.
        let sign = if j % 2 == 1 { 1 } else { -1 };
        let want = b.k_mul(&b.k_rational(BigRational::new(BigInt::from(sign), BigInt::from(j))), &b.to_k(&b.pi_pow(j as u32 - 1)));
        ensure(log.coeffs[j] == want, || format!("log coefficient {j}"))?;
        ensure(b.k_is_integral(&log.coeffs[j]), || format!("log coefficient {j} not integral"))?;
        // exp: π^{j−1}/j!.
        let fact: BigInt = (1..=j as u64).map(BigInt::from).product();
        let want = b.k_mul(&b.k_rational(BigRational::new(BigInt::one(), fact)), &b.to_k(&b.pi_pow(j as u32 - 1)));
        ensure(exp.coeffs[j] == want, || format!("exp coefficient {j}"))?;
        let v = b.k_valuation(&b.k_mul(&b.to_k(&b.pi()), &exp.coeffs[j]));
        let formula = (j as u64 * (p - 1 - e) + e * digit_sum(p, j as u64)) as i64 / (p - 1) as i64;
        ensure(v == Valuation::Finite(formula), || format!("exp valuation at j={j}: {v} vs {formula}"))?;
        ensure(v == Valuation::Finite(j as i64 - (e * vp_factorial(p, j as u64)) as i64), || format!("Legendre at {j}"))?;
    }
    for r in 0..=4u32 {
        let j = p.pow(r) as usize;
        let v = b.k_valuation(&log.coeffs[j]);
        ensure(v == Valuation::Finite((p.pow(r) - 1 - e * r as u64) as i64), || format!("v(a_(3^{r})) = {v}"))?;
    }
    ensure(certify_additive_iso(&gm1, d).is_ok(), || "no certificate at (3,1)".into())?;
    let b2 = base(3, 2);
    let gm1 = to_k(&gm_scaled(IntRing::new(&b2), 1, d as u32));
    let exp2 = exponential(&gm1, d);
    for j in [3usize, 9, 27] {
        let v = b2.k_valuation(&b2.k_mul(&b2.to_k(&b2.pi()), &exp2.coeffs[j]));
        ensure(v == Valuation::Finite(1), || format!("(3,2): v(pi c_{j}) = {v}"))?;
    }
    let refused = matches!(certify_additive_iso(&gm1, d), Err(Error::CertificateMissing(_)));
    ensure(refused, || "(3,2) was certified".into())?;
    Ok(format!("log and exp exact to D = {d} at (3,1); v(a_(3^r)) = 3^r - 1 - r for r <= 4; (3,2): v(pi c_j) = 1 at 3, 9, 27 and refused"))
}

fn digit_sum(p: u64, mut j: u64) -> u64 {
    let mut s = 0;
    while j > 0 {
        s += j % p;
        j /= p;
    }
    s
}

fn crit10() -> Outcome {
    let start = Instant::now();
    let b = base(3, 1);
    let algebras = catalog(&b, &default_catalog()).map_err(|e| e.to_string())?;
    let names: Vec<&str> = algebras.iter().map(|c| c.name()).collect();
    ensure(names == ["Z/9", "Z/27", "F_3[t]/(t^3)", "(Z/9)[t]/(t^2)"], || format!("catalog {names:?}"))?;
    let mut ran = 0;
    for c in &algebras {
        for n in 1..=3 {
            if (c.size() as u128).pow(n as u32) > SIZE_GUARD {
                continue;
            }
            let rep = verify_main_theorem(c, n, SEED).map_err(|e| e.to_string())?;
            ensure(rep.is_green(), || format!("{} n={n}: {:?}", c.name(), rep.first_red()))?;
            for tag in ["(a)", "(b)", "(c)", "(d)", "(e)"] {
                ensure(rep.checks.iter().any(|k| k.name.starts_with(tag)), || format!("{} n={n}: no {tag}", c.name()))?;
            }
            ran += 1;
        }
    }
    // Z/9, n = 1, by enumerating W_1(Z/9) directly.
    let c = &algebras[0];
    let w = witt_over(c, 1);
    let one = w.one();
    let units: Vec<_> = all_vectors(c, 2).into_iter().filter(|v| c.is_unit(&v[0])).collect();
    let mul = |a: &Vec<_>, b: &Vec<_>| w.mul(a, b);
    let torsion: Vec<_> = units.iter().filter(|u| is_power_of(3, order_of(*u, &one, mul, 1000).unwrap())).collect();
    let kernel: Vec<_> = torsion.iter().filter(|u| u[0] == c.one()).collect();
    let max_kernel_order = kernel.iter().map(|u| order_of(**u, &one, mul, 1000).unwrap()).max().unwrap();
    let mut image: Vec<u64> = torsion.iter().map(|u| c.encode(&u[0])).collect();
    image.sort_unstable();
    image.dedup();
    ensure(torsion.len() == 27, || format!("|T| = {}", torsion.len()))?;
    ensure(kernel.len() == 9 && max_kernel_order == 9, || "kernel is not cyclic of order 9".into())?;
    ensure(image.len() == 3, || format!("image of order {}", image.len()))?;
    // The library agrees.
    let t = p_power_torsion(&jet_points(&GroupKind::Multiplicative, 1, c).map_err(|e| e.to_string())?);
    let k = invariants(&kernel_points(&GroupKind::Multiplicative, 1, c).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let im = invariants(&p_power_torsion(&points(&GroupKind::Multiplicative, c).map_err(|e| e.to_string())?)).map_err(|e| e.to_string())?;
    ensure(t.order() == 27 && k.factors() == [9] && im.factors() == [3], || format!("library: {} {k} {im}", t.order()))?;
    let elapsed = start.elapsed();
    ensure(elapsed < CRIT10_BUDGET, || format!("took {elapsed:?}, budget {CRIT10_BUDGET:?}"))?;
    Ok(format!("{ran} (C, n) cases green; Z/9 n=1: |T| = 27, kernel [9], image [3]; {elapsed:.2?}"))
}

fn crit11() -> Outcome {
    let b = base(2, 1);
    let c = NilpAlgebra::new(&b, zp(2)).map_err(|e| e.to_string())?;
    // Oracle: in W_1(Z/4), (1, a)^2 = (1, 2a + 2a^2) = (1, 0), so the kernel has exponent 2.
    let w = witt_over(&c, 1);
    let kernel: Vec<_> = c.elements().map(|a| vec![c.one(), a]).collect();
    let all_square_to_one = kernel.iter().all(|u| w.mul(u, u) == w.one());
    ensure(kernel.len() == 4 && all_square_to_one, || "kernel of W_1(Z/4)^x is not of exponent 2".into())?;
    let k = invariants(&kernel_points(&GroupKind::Multiplicative, 1, &c).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let a = invariants(&witt_additive_group(&c, 1).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(k.factors() == [2, 2] && a.factors() == [4], || format!("{k} vs {a}"))?;
    let refusal = explicit_kernel_iso(&c, 1, SEED);
    ensure(matches!(refusal, Err(Error::CertificateMissing(_))), || format!("{refusal:?}"))?;
    Ok(format!("kernel {k} vs W_0(Z/4)_+ {a}; explicit iso refused: {}", refusal.unwrap_err()))
}

fn crit12() -> Outcome {
    let mut ran = 0;
    for p in [3u64, 2] {
        let b = base(p, 1);
        for c in catalog(&b, &default_catalog()).map_err(|e| e.to_string())? {
            for n in 1..=3 {
                if (c.size() as u128).pow(n as u32) > SIZE_GUARD {
                    continue;
                }
                let rep = verify_njet_for_gm(&c, n, SEED).map_err(|e| e.to_string())?;
                ensure(rep.is_green(), || format!("p={p} {} n={n}: {:?}", c.name(), rep.first_red()))?;
                ran += 1;
            }
        }
    }
    // V(a)V(b) = V(πab) in W_1(Z/4), by hand: (0, a)(0, b) = (0, 2ab).
    let b = base(2, 1);
    let c = NilpAlgebra::new(&b, zp(2)).map_err(|e| e.to_string())?;
    let w = witt_over(&c, 1);
    for x in c.elements() {
        for y in c.elements() {
            let lhs = w.mul(&vec![c.zero(), x], &vec![c.zero(), y]);
            let rhs = vec![c.zero(), c.mul(&c.from_i64(2), &c.mul(&x, &y))];
            ensure(lhs == rhs, || "V(a)V(b) = V(pi ab) fails in W_1(Z/4)".into())?;
        }
    }
    Ok(format!("{ran} (p, C, n) cases green including p = 2"))
}

fn crit13() -> Outcome {
    let b = base(3, 1);
    let c = NilpAlgebra::new(&b, zp(2)).map_err(|e| e.to_string())?;
    let w = witt_over(&c, 1);
    for nu in 1..=2u32 {
        let rep = verify_ga_torsion(&c, nu, SEED).map_err(|e| e.to_string())?;
        ensure(rep.is_green(), || format!("nu={nu}: {:?}", rep.first_red()))?;
        let pnu = 3i64.pow(nu);
        let kill = |v: &Vec<_>| {
            let mut acc = w.zero();
            for _ in 0..pnu {
                acc = w.add(&acc, v);
            }
            acc == w.zero()
        };
        let kernel: Vec<_> = c.elements().map(|x| vec![c.zero(), x]).filter(kill).collect();
        let ga: Vec<_> = c.elements().filter(|x| c.mul(&c.from_i64(pnu), x) == c.zero()).collect();
        ensure(kernel.len() == ga.len() && kernel.len() == pnu as usize, || format!("nu={nu}: {} vs {}", kernel.len(), ga.len()))?;
    }
    Ok("Z/9, nu = 1, 2: both sides of orders 3 and 9".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("ghost-oracle equivalence", crit1),
        ("universal polynomial golden values", crit2),
        ("exp_delta section", crit3),
        ("lateral Frobenius", crit4),
        ("Witt coordinates", crit5),
        ("pullback of p_1+ under lateral Frobenius iterates", crit6),
        ("coordinate theorem", crit7),
        ("kernel law", crit8),
        ("valuation formulas", crit9),
        ("main theorem at desk scale", crit10),
        ("negative control at p = 2", crit11),
        ("N^n G_m = J^(n-1) N^1 G_m pointwise", crit12),
        ("N^1 G_a[p^nu] = G_a[p^nu]", crit13),
    ];
    // Written to the raw stdout handle so the lines survive libtest's capture.
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let line = match f() {
            Ok(note) => format!("criterion {:>2} PASS {name} [{EXACT}]: {note}\n", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {:>2} FAIL {name}: {why}\n", i + 1)
            }
        };
        out.write_all(line.as_bytes()).unwrap();
        out.flush().unwrap();
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
