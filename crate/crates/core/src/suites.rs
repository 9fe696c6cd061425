//! Verification suites behind `jetspace verify`: each returns reports built
//! from seeded samples and exact symbolic comparisons.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fgl::{
    certify_additive_iso, elliptic_law, exp_valuation_formula, gm_scaled, kernel_law, logarithm, random_integral_law,
    scale_law, to_k, twist_identity, validate_law, FormalGroupLaw, OLaw,
};
use crate::jets::{
    ghost_identity_holds, iterate_display, iterate_first_entry, lateral_iterate, lateral_pullback, lemma_display,
    verify_coordinate_theorem, verify_phi_phi_u,
};
use crate::nilp::{zp, NilpAlgebra};
use crate::padic::{Base, OElement, Valuation};
use crate::poly::{o_poly_ring, Monomial, Var};
use crate::report::Report;
use crate::ring::{IntRing, Ring};
use crate::shifted::{ShiftedRing, ShiftedWittVector};
use crate::torsion::{verify_ga_torsion, verify_main_theorem, verify_njet_for_gm, SIZE_GUARD};
use crate::witt::{exp_delta, ghost, verschiebung, WittRing};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random element of O with coordinates in [−bound, bound].
pub fn sample_o(base: &Base, rng: &mut impl Rng, bound: i64) -> OElement {
    let cs: Vec<i64> = (0..base.e()).map(|_| rng.gen_range(-bound..=bound)).collect();
    base.from_coeffs(&cs)
}

pub fn sample_vector(base: &Base, rng: &mut impl Rng, len: usize, bound: i64) -> Vec<OElement> {
    (0..len).map(|_| sample_o(base, rng, bound)).collect()
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, ok: impl Fn(&T) -> bool) -> Option<T> {
    items.into_iter().find(|t| !ok(t))
}

fn fmt_vec(base: &Base, v: &[OElement]) -> String {
    let parts: Vec<String> = v.iter().map(|x| base.fmt_o(x)).collect();
    format!("({})", parts.join(", "))
}

fn case(base: &Base, what: &str, n: usize) -> String {
    format!("{what} p={} e={} n={n}", base.p(), base.e())
}

/// Witt arithmetic against the ghost map, F, V and exp_δ over O.
pub fn witt_suite(base: &Arc<Base>, n: usize, samples: usize, seed: u64) -> Result<Report> {
    let o = IntRing::new(base);
    let w = WittRing::new(o.clone(), n)?;
    let mut rng = rng(seed);
    let mut rep = Report::new(case(base, "witt", n));
    let pairs: Vec<(Vec<OElement>, Vec<OElement>)> =
        (0..samples).map(|_| (sample_vector(base, &mut rng, n + 1, 9), sample_vector(base, &mut rng, n + 1, 9))).collect();
    let gh = |v: &Vec<OElement>| ghost(&o, v);
    let bad = first_failure(pairs.iter(), |(a, b)| {
        gh(&w.add(a, b)).iter().zip(gh(a).iter().zip(gh(b).iter())).all(|(s, (x, y))| *s == o.add(x, y))
    });
    rep.check("ghost(a + b) = ghost a + ghost b", bad.is_none(), format!("{samples} seeded pairs"), || {
        format!("a = {}, b = {}", fmt_vec(base, &bad.unwrap().0), fmt_vec(base, &bad.unwrap().1))
    });
    let bad = first_failure(pairs.iter(), |(a, b)| {
        gh(&w.mul(a, b)).iter().zip(gh(a).iter().zip(gh(b).iter())).all(|(s, (x, y))| *s == o.mul(x, y))
    });
    rep.check("ghost(a * b) = ghost a * ghost b", bad.is_none(), format!("{samples} seeded pairs"), || {
        format!("a = {}, b = {}", fmt_vec(base, &bad.unwrap().0), fmt_vec(base, &bad.unwrap().1))
    });
    let bad = first_failure(pairs.iter(), |(a, _)| gh(&w.neg(a)).iter().zip(gh(a)).all(|(s, x)| *s == o.neg(&x)));
    rep.check("ghost(-a) = -ghost a", bad.is_none(), format!("{samples} seeded vectors"), || fmt_vec(base, &bad.unwrap().0));
    if n >= 1 {
        let bad = first_failure(pairs.iter(), |(a, _)| gh(&w.frobenius(a)) == gh(a)[1..].to_vec());
        rep.check("ghost(F a) = left shift of ghost a", bad.is_none(), format!("{samples} seeded vectors"), || {
            fmt_vec(base, &bad.unwrap().0)
        });
        // V: W_{n−1} → W_n and F: W_n → W_{n−1}.
        let short = WittRing::new(o.clone(), n - 1)?;
        let pi = short.from_o(&base.pi());
        let bad = first_failure(pairs.iter(), |(a, _)| {
            let b = a[..n].to_vec();
            w.frobenius(&verschiebung(o.zero(), &b)) == short.mul(&pi, &b)
        });
        rep.check("F V = pi", bad.is_none(), format!("{samples} seeded vectors"), || fmt_vec(base, &bad.unwrap().0[..n]));
        let bad = first_failure(pairs.iter(), |(a, _)| {
            let b = a[..n].to_vec();
            let lhs = gh(&verschiebung(o.zero(), &b));
            let mut rhs = vec![o.zero()];
            rhs.extend(ghost(&o, &b).iter().map(|x| o.mul(&base.pi(), x)));
            lhs == rhs
        });
        rep.check("ghost(V b) = (0, pi w_0(b), ..., pi w_{n-1}(b))", bad.is_none(), format!("{samples} seeded vectors"), || {
            fmt_vec(base, &bad.unwrap().0[..n])
        });
    }
    let count = (samples / 2).max(1);
    let ring = o_poly_ring(base);
    let x = Var::letter('x');
    let phi = |f: &crate::poly::OPoly| ring.eval(f, &ring, |c| ring.constant(c.clone()), |v| ring.pow(&ring.var(v), base.q()));
    let mut bad = None;
    for _ in 0..count {
        let deg = rng.gen_range(0..=3u32);
        let r = ring.from_terms((0..=deg).map(|k| (Monomial::var(x, k), sample_o(base, &mut rng, 5))));
        let e = exp_delta(&ring, &r, n, phi)?;
        let g = ghost(&ring, &e);
        let mut want = r.clone();
        let mut ok = true;
        for gi in &g {
            ok &= *gi == want;
            want = phi(&want);
        }
        if !ok {
            bad = Some(r);
            break;
        }
    }
    rep.check("ghost(exp_delta r) = (r, phi r, ..., phi^n r) on O[x]", bad.is_none(), format!("{count} seeded polynomials"), || {
        ring.fmt(bad.as_ref().unwrap())
    });
    Ok(rep)
}

type OShifted = ShiftedWittVector<OElement, OElement>;

/// The lateral Frobenius: ring homomorphism over O and over O/π², the ghost
/// square, and the first tail entry of its iterates.
pub fn shifted_suite(base: &Arc<Base>, n: usize, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new(case(base, "shifted", n));
    if n < 1 {
        rep.green("lateral Frobenius", "needs n >= 1; nothing to check");
        return Ok(rep);
    }
    let mut rng = rng(seed);
    let o = IntRing::new(base);
    let big = ShiftedRing::over_o(o.clone(), n)?;
    let small = ShiftedRing::over_o(o.clone(), n - 1)?;
    let vec = |rng: &mut ChaCha8Rng| -> OShifted { ShiftedWittVector::new(sample_o(base, rng, 9), sample_vector(base, rng, n, 9)) };
    let pairs: Vec<(OShifted, OShifted)> = (0..samples).map(|_| (vec(&mut rng), vec(&mut rng))).collect();
    let same = |a: &OShifted, b: &OShifted| a.head == b.head && a.tail == b.tail;
    let show = |v: &OShifted| format!("head {} tail {}", base.fmt_o(&v.head), fmt_vec(base, &v.tail));
    for (label, is_mul) in [("F+(a + b) = F+a + F+b over O", false), ("F+(a * b) = F+a * F+b over O", true)] {
        let bad = first_failure(pairs.iter(), |(a, b)| {
            let lhs = big.lateral_frobenius(&if is_mul { big.mul(a, b) } else { big.add(a, b) });
            let (fa, fb) = (big.lateral_frobenius(a), big.lateral_frobenius(b));
            let rhs = if is_mul { small.mul(&fa, &fb) } else { small.add(&fa, &fb) };
            same(&lhs, &rhs)
        });
        rep.check(label, bad.is_none(), format!("{samples} seeded pairs"), || {
            let (a, b) = bad.unwrap();
            format!("a = {}, b = {}", show(a), show(b))
        });
    }
    // B = O/π², which has π-torsion; heads stay in O.
    let c = NilpAlgebra::new(base, zp(2))?;
    let tb = ShiftedRing::over_o(c.clone(), n)?;
    let ts = ShiftedRing::over_o(c.clone(), n - 1)?;
    let tpairs: Vec<_> = pairs
        .iter()
        .map(|(a, b)| {
            let f = |v: &OShifted| ShiftedWittVector::new(v.head.clone(), v.tail.iter().map(|x| c.from_o(x)).collect::<Vec<_>>());
            (f(a), f(b))
        })
        .collect();
    for (label, is_mul) in [("F+(a + b) = F+a + F+b over O/pi^2", false), ("F+(a * b) = F+a * F+b over O/pi^2", true)] {
        let bad = first_failure(tpairs.iter(), |(a, b)| {
            let lhs = tb.lateral_frobenius(&if is_mul { tb.mul(a, b) } else { tb.add(a, b) });
            let (fa, fb) = (tb.lateral_frobenius(a), tb.lateral_frobenius(b));
            let rhs = if is_mul { ts.mul(&fa, &fb) } else { ts.add(&fa, &fb) };
            lhs.head == rhs.head && lhs.tail == rhs.tail
        });
        rep.check(label, bad.is_none(), format!("{samples} seeded pairs"), || {
            let (a, b) = bad.unwrap();
            format!("a = {} {:?}, b = {} {:?}", base.fmt_o(&a.head), a.tail, base.fmt_o(&b.head), b.tail)
        });
    }
    let bad = first_failure(pairs.iter(), |(a, _)| {
        let lhs = small.shifted_ghost(&big.lateral_frobenius(a));
        let rhs = ShiftedRing::<IntRing, IntRing>::ghost_lateral(&big.shifted_ghost(a));
        lhs == rhs
    });
    rep.check("ghost(F+ a) = F_w+(ghost a)", bad.is_none(), format!("{samples} seeded vectors"), || show(&bad.unwrap().0));
    if n >= 2 {
        let bad = first_failure(pairs.iter(), |(a, _)| {
            let z = ShiftedWittVector::new(base.zero(), a.tail.clone());
            let c1 = big.lateral_frobenius(&z).tail[0].clone();
            c1 == base.add(&base.pow(&a.tail[0], base.q()), &base.mul(&base.pi(), &a.tail[1]))
        });
        rep.check("first entry of F+(0, b) is b_1^q + pi b_2", bad.is_none(), format!("{samples} seeded tails"), || {
            fmt_vec(base, &bad.unwrap().0.tail)
        });
    }
    let ring = o_poly_ring(base);
    for i in 1..n {
        let got = lateral_iterate(base, i, n)?[0].clone();
        let closed = iterate_first_entry(base, i);
        let display = iterate_display(base, i);
        let note = if display == got {
            "exact; the display ending in pi^i b_i agrees".to_string()
        } else {
            format!(
                "exact; the display ending in pi^i b_i differs: it gives {}",
                ring.fmt(&display)
            )
        };
        rep.check(format!("first entry of (F+)^{i}(0, b) = sum_k pi^k b_(k+1)^(q^({i}-k))"), got == closed, note, || {
            ring.fmt(&got)
        });
    }
    Ok(rep)
}

/// Witt coordinates, the pullback closed form and u*ΦΦ = f*u*Φ.
pub fn jets_suite(base: &Arc<Base>, n: usize) -> Result<Report> {
    let mut rep = Report::new(case(base, "jets", n));
    rep.check(
        "Phi^n(x) = sum_i pi^i p_i^(q^(n-i))",
        ghost_identity_holds(base, n)?,
        "symbolic",
        || "ghost identity fails".into(),
    );
    let ring = o_poly_ring(base);
    for i in 1..=n {
        let shifted = lateral_pullback(base, i - 1, n)?[0].clone();
        let literal = lateral_pullback(base, i, n)?.first().cloned();
        let display = lemma_display(base, i);
        let note = match literal {
            Some(l) if l == display => "the i-fold pullback also matches".to_string(),
            Some(l) => format!("matches the ({})-fold pullback of p_1+; the {i}-fold pullback is {}", i - 1, trim(&ring.fmt(&l))),
            None => format!("matches the ({})-fold pullback of p_1+", i - 1),
        };
        rep.check(
            format!("pullback closed form (P_1)^(q^({i}-1)) + ... + pi^({i}-1) P_{i}"),
            shifted == display,
            note,
            || ring.fmt(&shifted),
        );
    }
    // The φφu square grows quickly with n; it is checked for n = 2, 3.
    if (2..=3).contains(&n) {
        let sub = verify_phi_phi_u(base, n)?;
        for c in sub.checks {
            rep.checks.push(crate::report::Check { name: format!("u* Phi Phi = f* u* Phi at {}", c.name), ..c });
        }
    }
    Ok(rep)
}

fn trim(s: &str) -> String {
    if s.len() > 160 {
        format!("{}...", &s[..s.char_indices().take_while(|(i, _)| *i < 160).last().map(|(i, c)| i + c.len_utf8()).unwrap_or(0)])
    } else {
        s.to_string()
    }
}

pub fn appendix_suite(base: &Arc<Base>, n: usize) -> Result<Report> {
    verify_coordinate_theorem(base, n)
}

fn sample_laws(base: &Arc<Base>, seed: u64, d: u32) -> Vec<(String, OLaw)> {
    let o = IntRing::new(base);
    let mut laws = vec![
        ("G_a".to_string(), FormalGroupLaw::additive(o.clone(), d)),
        ("G_m".to_string(), FormalGroupLaw::multiplicative(o.clone(), d)),
        ("elliptic y^2 = x^3 - x + 1".to_string(), elliptic_law(base, -1, 1, d)),
    ];
    let mut rng = rng(seed);
    for k in 0..5 {
        let (law, _) = random_integral_law(base, &mut rng, 4, d);
        laws.push((format!("random law {}", k + 1), law));
    }
    laws
}

/// Laws, the kernel law, logarithm valuations and the additive certificate.
pub fn fgl_suite(base: &Arc<Base>, d: u32, seed: u64) -> Result<Report> {
    let (p, e) = (base.p(), base.e() as u64);
    let mut rep = Report::new(format!("fgl p={p} e={e} D={d}"));
    for (name, law) in sample_laws(base, seed, 6) {
        let v = validate_law(&law);
        rep.check(format!("{name} is a formal group law"), v.is_green(), "to degree 6", || {
            v.first_red().map(|c| c.name.clone()).unwrap_or_default()
        });
        let k = kernel_law(&law)?;
        let want = twist_identity(&scale_law(&law, 1));
        rep.check(format!("kernel law of {name} = F^phi{{1}}"), k.series == want.series, "to degree 6", || {
            law.ring.fmt(&law.ring.sub(&k.series, &want.series))
        });
    }
    let d = d.max(8) as usize;
    let gm1 = to_k(&gm_scaled(IntRing::new(base), 1, d as u32));
    let log = logarithm(&gm1, d);
    let mut bad = None;
    let mut r = 0u32;
    while p.pow(r) as usize <= d {
        let j = p.pow(r) as usize;
        if base.k_valuation(&log.coeffs[j]) != Valuation::Finite((p.pow(r) - 1 - e * r as u64) as i64) {
            bad = Some(j);
            break;
        }
        r += 1;
    }
    rep.check("v(a_(p^r)) = p^r - 1 - e r for the G_m{1} logarithm", bad.is_none(), format!("p^r <= {d}"), || {
        format!("j = {}: v = {}", bad.unwrap(), base.k_valuation(&log.coeffs[bad.unwrap()]))
    });
    let exp = crate::fgl::exponential(&gm1, d);
    let bad = (1..=d).find(|&j| {
        let v = base.k_valuation(&base.k_mul(&base.to_k(&base.pi()), &exp.coeffs[j]));
        v != Valuation::Finite(exp_valuation_formula(base, j as u64))
    });
    rep.check(
        "v(pi^j/j!) = (j(p-1-e) + e s_p(j))/(p-1) for the G_m{1} exponential",
        bad.is_none(),
        format!("j <= {d}"),
        || format!("j = {}", bad.unwrap()),
    );
    let cert = certify_additive_iso(&gm1, d);
    let expected = p >= e + 2;
    let note = match &cert {
        Ok(c) => format!("certified to degree {d}; exp block minima {:?}", c.exp_envelope),
        Err(err) => format!("refused: {err}"),
    };
    rep.check(
        "G_m{1} is certified isomorphic to G_a exactly when p >= e + 2",
        cert.is_ok() == expected,
        note.clone(),
        || note.clone(),
    );
    Ok(rep)
}

/// The torsion lab on a catalog: main theorem, N^nĜ_m = J^{n−1}N¹Ĝ_m and
/// the Ĝ_a torsion example.
pub fn main_suite(algebras: &[NilpAlgebra], ns: &[usize], seed: u64) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for c in algebras {
        for &n in ns {
            let size = (c.size() as u128).pow(n as u32);
            if size > SIZE_GUARD {
                let mut rep = Report::new(format!("main theorem {} n={n} (pointwise on this C)", c.name()));
                rep.green("size guard", format!("skipped: |C|^n = {size} exceeds {SIZE_GUARD}"));
                out.push(rep);
                continue;
            }
            out.push(verify_main_theorem(c, n, seed)?);
            out.push(verify_njet_for_gm(c, n, seed)?);
        }
        for nu in 1..=2 {
            out.push(verify_ga_torsion(c, nu, seed)?);
        }
    }
    Ok(out)
}

/// Maps config-like errors to exit status 2, everything else to 1.
pub fn is_config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPrime(_)
            | Error::NotEisenstein { .. }
            | Error::UnsupportedBase(_)
            | Error::Config(_)
            | Error::InvalidAlgebra(_)
            | Error::SizeGuard { .. }
    )
}
