//! The `jetspace` command line: configuration, subcommands and report output.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fgl::{
    certify_additive_iso, elliptic_law, exponential, fmt_law, kernel_law, law_from_json, law_to_json, logarithm,
    scale_law, to_k, to_o, twist_identity, validate_law, FormalGroupLaw, KLaw, Series,
};
use crate::jets::{h_bar_polynomial, iterate_first_entry, kernel_coordinates, lateral_iterate, phi_iterate, witt_coordinates};
use crate::nilp::{catalog, default_catalog, AlgebraSpec};
use crate::padic::{make_base, Base, OElement};
use crate::poly::{o_poly_ring, OPoly};
use crate::report::Report;
use crate::ring::IntRing;
use crate::shifted::ShiftedRing;
use crate::suites::{appendix_suite, fgl_suite, is_config_error, jets_suite, main_suite, shifted_suite, witt_suite};
use crate::witt::{ghost, universal, WittOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Witt,
    Shifted,
    Jets,
    Appendix,
    Fgl,
    Main,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyOp {
    Add,
    Mul,
    Neg,
    Frobenius,
    Lateral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoordKind {
    /// Witt coordinates p_0, …, p_n.
    Witt,
    /// p_1⁺, …, p_n⁺ restricted to the kernel.
    Kernel,
    /// H̄_n.
    Hbar,
    /// Φ^n(x).
    Phi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LawOp {
    Validate,
    Scale,
    Twist,
    Kernel,
    Log,
    Exp,
    Certify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    Ga,
    Gm,
    Elliptic,
}

#[derive(Parser, Debug)]
#[command(name = "jetspace", version, about = "Ramified Witt vectors, jet algebras and formal groups over p-adic bases")]
pub struct Cli {
    /// Residue characteristic.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Ramification index.
    #[arg(long, global = true)]
    pub e: Option<usize>,
    /// Eisenstein polynomial, leading coefficient first, e.g. "1,0,-5".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub eisenstein: Option<String>,
    /// Witt length or jet order: "2" or a range "1..3".
    #[arg(long, global = true)]
    pub n: Option<String>,
    /// Truncation degree for series.
    #[arg(long = "D", global = true)]
    pub d: Option<u32>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// JSON run configuration; flags given on the command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Universal polynomials of a Witt operation.
    WittPoly {
        #[arg(long, value_enum, default_value = "add")]
        op: PolyOp,
    },
    /// Ghost components of a Witt vector over O; entries are integers or
    /// coordinate lists such as [1,2] for 1 + 2π.
    Ghost {
        #[arg(required = true, allow_negative_numbers = true)]
        components: Vec<String>,
    },
    /// Lateral Frobenius of a shifted Witt vector over O.
    /// With --iterate i, prints instead the first tail entry of (F⁺)^i on
    /// the symbolic vector (0, b1, …, bn).
    Lateral {
        #[arg(long, default_value = "0", allow_negative_numbers = true)]
        head: String,
        #[arg(long)]
        iterate: Option<usize>,
        #[arg(required_unless_present = "iterate", allow_negative_numbers = true)]
        tail: Vec<String>,
    },
    /// Jet coordinates of the arithmetic jet algebra of the affine line.
    JetCoords {
        #[arg(long, value_enum, default_value = "witt")]
        kind: CoordKind,
    },
    /// Operations on a formal group law.
    GroupLaw {
        #[arg(long, value_enum)]
        op: LawOp,
        /// Law file {"D": .., "monomials": [[α, β, coeff], ..]}.
        #[arg(long)]
        law: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "gm")]
        builtin: Builtin,
        /// Replace F by F{k} before the operation (0 keeps F).
        #[arg(long, default_value_t = 0)]
        scale: u32,
        /// Weierstrass a, b for the elliptic builtin.
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        wa: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        wb: i64,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Test-algebra catalog {"algebras": [{"m": 2, "t": [3]}, ..]}.
        #[arg(long)]
        algebras: Option<PathBuf>,
        /// Random samples per property check.
        #[arg(long)]
        samples: Option<usize>,
    },
}

/// The configuration file; every key is optional and unknown keys are rejected.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub p: Option<u64>,
    pub e: Option<usize>,
    pub eisenstein: Option<Vec<i64>>,
    #[serde(rename = "D")]
    pub d: Option<u32>,
    pub n: Option<NSpec>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub format: Option<Format>,
    pub report: Option<PathBuf>,
    pub algebras: Option<Vec<AlgebraSpec>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NSpec {
    One(usize),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    algebras: Vec<AlgebraSpec>,
}

/// Everything a command needs, validated.
pub struct Resolved {
    pub base: Arc<Base>,
    pub ns: Option<Vec<usize>>,
    pub d: Option<u32>,
    pub seed: u64,
    pub samples: usize,
    pub format: Format,
    pub report: Option<PathBuf>,
    pub algebras: Vec<AlgebraSpec>,
}

fn parse_n(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Config(format!("bad --n {s:?}; use 2 or 1..3"));
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        Ok((a..=b).collect())
    } else {
        Ok(vec![s.trim().parse().map_err(|_| bad())?])
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Config(format!("bad integer list {s:?}"))))
        .collect()
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

pub fn resolve(cli: &Cli, algebras: Option<&PathBuf>, samples: Option<usize>) -> Result<Resolved> {
    let cfg: RunConfig = match &cli.config {
        Some(path) => serde_json::from_str(&read_file(path)?).map_err(|e| Error::Config(format!("config: {e}")))?,
        None => RunConfig::default(),
    };
    let p = cli.p.or(cfg.p).unwrap_or(3);
    let e = cli.e.or(cfg.e).unwrap_or(1);
    let eisenstein = match (&cli.eisenstein, &cfg.eisenstein) {
        (Some(s), _) => parse_ints(s)?,
        (None, Some(v)) => v.clone(),
        (None, None) => {
            let mut v = vec![0i64; e + 1];
            v[0] = 1;
            v[e] = -(p as i64);
            v
        }
    };
    let base = make_base(p, e, &eisenstein)?;
    let ns = match (&cli.n, &cfg.n) {
        (Some(s), _) => Some(parse_n(s)?),
        (None, Some(NSpec::One(k))) => Some(vec![*k]),
        (None, Some(NSpec::Text(s))) => Some(parse_n(s)?),
        (None, None) => None,
    };
    let algebras = match algebras {
        Some(path) => {
            let f: CatalogFile =
                serde_json::from_str(&read_file(path)?).map_err(|e| Error::Config(format!("catalog: {e}")))?;
            f.algebras
        }
        None => cfg.algebras.clone().unwrap_or_else(default_catalog),
    };
    catalog(&base, &algebras)?;
    Ok(Resolved {
        base,
        ns,
        d: cli.d.or(cfg.d),
        seed: cli.seed.or(cfg.seed).unwrap_or(0),
        samples: samples.or(cfg.samples).unwrap_or(200),
        format: cli.format.or(cfg.format).unwrap_or(Format::Text),
        report: cli.report.clone().or(cfg.report.clone()),
        algebras,
    })
}

/// Parses an O element: an integer or a coordinate list [a_0, a_1, …].
pub fn parse_o(base: &Base, s: &str) -> Result<OElement> {
    let cs = parse_ints(s)?;
    if cs.len() > base.e() {
        return Err(Error::Config(format!("{s:?} has more than e = {} coordinates", base.e())));
    }
    Ok(base.from_coeffs(&cs))
}

/// Outcome of one command: reports (for exit status and --report) and
/// free-form output.
struct Outcome {
    reports: Vec<Report>,
    text: String,
    json: Value,
}

impl Outcome {
    fn plain(text: String, json: Value) -> Self {
        Outcome { reports: Vec::new(), text, json }
    }
}

fn report_json(seed: u64, reports: &[Report]) -> Value {
    json!({ "seed": seed, "reports": reports })
}

fn suite_ns(ns: &Option<Vec<usize>>, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    ns.clone().unwrap_or_else(|| default.collect())
}

fn run_verify(r: &Resolved, suite: Suite) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let base = &r.base;
    let all = suite == Suite::All;
    if all || suite == Suite::Witt {
        for n in suite_ns(&r.ns, 0..=3) {
            out.push(witt_suite(base, n, r.samples, r.seed)?);
        }
    }
    if all || suite == Suite::Shifted {
        for n in suite_ns(&r.ns, 1..=3) {
            out.push(shifted_suite(base, n, r.samples, r.seed)?);
        }
    }
    if all || suite == Suite::Jets {
        for n in suite_ns(&r.ns, 1..=4) {
            out.push(jets_suite(base, n)?);
        }
    }
    if all || suite == Suite::Appendix {
        for n in suite_ns(&r.ns, 1..=3) {
            out.push(appendix_suite(base, n)?);
        }
    }
    if all || suite == Suite::Fgl {
        out.push(fgl_suite(base, r.d.unwrap_or(200), r.seed)?);
    }
    if all || suite == Suite::Main {
        let algebras = catalog(base, &r.algebras)?;
        let ns: Vec<usize> = suite_ns(&r.ns, 1..=3).into_iter().filter(|&n| n >= 1).collect();
        out.extend(main_suite(&algebras, &ns, r.seed)?);
    }
    Ok(out)
}

fn single_n(r: &Resolved, default: usize) -> Result<usize> {
    match &r.ns {
        None => Ok(default),
        Some(v) if v.len() == 1 => Ok(v[0]),
        Some(_) => Err(Error::Config("this command takes a single --n".into())),
    }
}

fn load_law(r: &Resolved, law: &Option<PathBuf>, builtin: Builtin, wa: i64, wb: i64) -> Result<KLaw> {
    let d = r.d.unwrap_or(64);
    match law {
        Some(path) => {
            let mut l = law_from_json(&r.base, &read_file(path)?)?;
            if let Some(d) = r.d {
                l = FormalGroupLaw::new(l.ring.coeffs.clone(), l.series.clone(), d);
            }
            Ok(l)
        }
        None => {
            let o = IntRing::new(&r.base);
            Ok(to_k(&match builtin {
                Builtin::Ga => FormalGroupLaw::additive(o, d),
                Builtin::Gm => FormalGroupLaw::multiplicative(o, d),
                Builtin::Elliptic => elliptic_law(&r.base, wa, wb, d),
            }))
        }
    }
}

/// Terms in descending graded lexicographic order as
/// [{"monomial": {var: exponent}, "coeff": [c_0, …, c_{e−1}]}], the coefficient
/// being its coordinates in the basis 1, π, …, π^{e−1}.
pub fn poly_terms(p: &OPoly) -> Value {
    let int = |c: &BigInt| c.to_i64().map(Value::from).unwrap_or_else(|| Value::from(c.to_string()));
    Value::Array(
        p.sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, Value> = m.0.iter().map(|&(v, e)| (v.to_string(), Value::from(e))).collect();
                json!({ "monomial": mono, "coeff": c.0.iter().map(int).collect::<Vec<_>>() })
            })
            .collect(),
    )
}

fn series_output(base: &Base, name: &str, s: &Series) -> (String, Value) {
    let mut text = String::new();
    let mut rows = Vec::new();
    for j in 1..s.coeffs.len() {
        let c = base.fmt_k(&s.coeffs[j]);
        let v = base.k_valuation(&s.coeffs[j]);
        text.push_str(&format!("{name}_{j} = {c}   v = {v}\n"));
        rows.push(json!({ "j": j, "coeff": c, "valuation": v.to_string() }));
    }
    (text, json!({ "series": name, "coefficients": rows }))
}

fn run_command(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Verify { suite, algebras, samples } => {
            let r = resolve(cli, algebras.as_ref(), *samples)?;
            let reports = run_verify(&r, *suite)?;
            let text = reports.iter().map(|x| x.to_text()).collect::<Vec<_>>().join("");
            let json = report_json(r.seed, &reports);
            Ok(Outcome { reports, text: format!("seed {}\n{text}", r.seed), json })
        }
        Command::WittPoly { op } => {
            let r = resolve(cli, None, None)?;
            let n = single_n(&r, 1)?;
            let (wop, letter) = match op {
                PolyOp::Add => (WittOp::Add, "S"),
                PolyOp::Mul => (WittOp::Mul, "M"),
                PolyOp::Neg => (WittOp::Neg, "N"),
                PolyOp::Frobenius => (WittOp::Frobenius, "F"),
                PolyOp::Lateral => (WittOp::Lateral, "L"),
            };
            let ring = o_poly_ring(&r.base);
            let ps = universal(&r.base, &wop, n)?;
            let first = if *op == PolyOp::Lateral { 1 } else { 0 };
            let lines: Vec<String> = ps.iter().enumerate().map(|(i, p)| format!("{letter}_{} = {}", i + first, ring.fmt(p))).collect();
            let polys: Vec<String> = ps.iter().map(|p| ring.fmt(p)).collect();
            Ok(Outcome::plain(lines.join("\n") + "\n", json!({
                "op": format!("{op:?}").to_lowercase(),
                "n": n,
                "polynomials": polys,
                "terms": ps.iter().map(|p| poly_terms(p)).collect::<Vec<_>>(),
            })))
        }
        Command::Ghost { components } => {
            let r = resolve(cli, None, None)?;
            let v: Vec<OElement> = components.iter().map(|s| parse_o(&r.base, s)).collect::<Result<_>>()?;
            let g = ghost(&IntRing::new(&r.base), &v);
            let shown: Vec<String> = g.iter().map(|x| r.base.fmt_o(x)).collect();
            let text = shown.iter().enumerate().map(|(i, s)| format!("w_{i} = {s}\n")).collect();
            Ok(Outcome::plain(text, json!({ "ghost": shown })))
        }
        Command::Lateral { iterate: Some(i), .. } => {
            let r = resolve(cli, None, None)?;
            let n = single_n(&r, 3)?;
            if *i >= n {
                return Err(Error::Config(format!("--iterate {i} needs --n above {i}")));
            }
            let ring = o_poly_ring(&r.base);
            let entry = lateral_iterate(&r.base, *i, n)?.swap_remove(0);
            let closed = iterate_first_entry(&r.base, *i);
            let mut rep = Report::new(format!("lateral iterate i={i} n={n}"));
            rep.check("first entry = sum_k pi^k b_(k+1)^(q^(i-k))", entry == closed, "exact", || {
                format!("got {}", ring.fmt(&entry))
            });
            Ok(Outcome {
                text: format!("(F+)^{i} first entry = {}\n", ring.fmt(&entry)),
                json: json!({ "iterate": i, "n": n, "first_entry": ring.fmt(&entry), "terms": poly_terms(&entry) }),
                reports: vec![rep],
            })
        }
        Command::Lateral { head, tail, .. } => {
            let r = resolve(cli, None, None)?;
            let h = parse_o(&r.base, head)?;
            let t: Vec<OElement> = tail.iter().map(|s| parse_o(&r.base, s)).collect::<Result<_>>()?;
            let n = t.len();
            let o = IntRing::new(&r.base);
            let big = ShiftedRing::over_o(o.clone(), n)?;
            let small = ShiftedRing::over_o(o, n - 1)?;
            let v = big.vector(h, t);
            let out = big.lateral_frobenius(&v);
            let ok = small.shifted_ghost(&out) == ShiftedRing::<IntRing, IntRing>::ghost_lateral(&big.shifted_ghost(&v));
            let tail_s: Vec<String> = out.tail.iter().map(|x| r.base.fmt_o(x)).collect();
            let text = format!(
                "F+ = (head {}; {})\nghost square: {}\n",
                r.base.fmt_o(&out.head),
                tail_s.join(", "),
                if ok { "commutes" } else { "FAILS" }
            );
            let mut outcome = Outcome::plain(text, json!({ "head": r.base.fmt_o(&out.head), "tail": tail_s, "ghost_square": ok }));
            let mut rep = Report::new("lateral");
            rep.check("ghost(F+ v) = F_w+(ghost v)", ok, "exact", || "ghost square fails".into());
            outcome.reports.push(rep);
            Ok(outcome)
        }
        Command::JetCoords { kind } => {
            let r = resolve(cli, None, None)?;
            let n = single_n(&r, 2)?;
            let ring = o_poly_ring(&r.base);
            let (names, polys) = match kind {
                CoordKind::Witt => {
                    let ps = witt_coordinates(&r.base, n, 0)?;
                    ((0..ps.len()).map(|i| format!("p_{i}")).collect::<Vec<_>>(), ps)
                }
                CoordKind::Kernel => {
                    let ps = kernel_coordinates(&r.base, n)?;
                    ((1..=ps.len()).map(|i| format!("p_{i}+")).collect(), ps)
                }
                CoordKind::Hbar => (vec![format!("Hbar_{n}")], vec![h_bar_polynomial(&r.base, n)?]),
                CoordKind::Phi => (vec![format!("Phi^{n}(x)")], vec![phi_iterate(&r.base, n)]),
            };
            let shown: Vec<String> = polys.iter().map(|p| ring.fmt(p)).collect();
            let text = names.iter().zip(&shown).map(|(a, b)| format!("{a} = {b}\n")).collect();
            Ok(Outcome::plain(text, json!({ "n": n, "names": names, "polynomials": shown, "terms": polys.iter().map(poly_terms).collect::<Vec<_>>() })))
        }
        Command::GroupLaw { op, law, builtin, scale, wa, wb } => {
            let r = resolve(cli, None, None)?;
            let mut f = load_law(&r, law, *builtin, *wa, *wb)?;
            if *scale > 0 && *op != LawOp::Scale {
                f = scale_law(&f, *scale);
            }
            let base = r.base.clone();
            let law_out = |l: &KLaw| Outcome::plain(fmt_law(l) + "\n", law_to_json(l));
            match op {
                LawOp::Validate => {
                    let rep = validate_law(&f);
                    Ok(Outcome { text: rep.to_text(), json: report_json(r.seed, std::slice::from_ref(&rep)), reports: vec![rep] })
                }
                LawOp::Scale => Ok(law_out(&scale_law(&f, (*scale).max(1)))),
                LawOp::Twist => Ok(law_out(&twist_identity(&f))),
                LawOp::Kernel => {
                    let o = to_o(&f).ok_or_else(|| Error::Config("kernel law needs an integral law".into()))?;
                    Ok(law_out(&to_k(&kernel_law(&o)?)))
                }
                LawOp::Log | LawOp::Exp => {
                    let s = if *op == LawOp::Log { logarithm(&f, f.d as usize) } else { exponential(&f, f.d as usize) };
                    let (text, json) = series_output(&base, if *op == LawOp::Log { "log" } else { "exp" }, &s);
                    Ok(Outcome::plain(text, json))
                }
                LawOp::Certify => {
                    let mut rep = Report::new(format!("certify D={}", f.d));
                    match certify_additive_iso(&f, f.d as usize) {
                        Ok(c) => rep.green(
                            "isomorphic to G_a to degree D",
                            format!("log block minima {:?}, exp block minima {:?}", c.log_envelope, c.exp_envelope),
                        ),
                        Err(e) => rep.red("isomorphic to G_a to degree D", e.to_string()),
                    }
                    Ok(Outcome { text: rep.to_text(), json: report_json(r.seed, std::slice::from_ref(&rep)), reports: vec![rep] })
                }
            }
        }
    }
}

fn emit(cli: &Cli, outcome: &Outcome, out: &mut dyn Write) -> Result<()> {
    let cfg_format = cli
        .config
        .as_ref()
        .and_then(|p| std::fs::read_to_string(p).ok())
        .and_then(|s| serde_json::from_str::<RunConfig>(&s).ok())
        .and_then(|c| c.format);
    let format = cli.format.or(cfg_format).unwrap_or(Format::Text);
    let res = match format {
        Format::Text => write!(out, "{}", outcome.text),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&outcome.json).unwrap()),
    };
    res.map_err(|e| Error::Config(format!("output: {e}")))
}

/// Runs the CLI on `args` (program name first), writing to `out` and `err`.
/// Returns the exit status: 0 ok, 1 red check or failed computation, 2
/// configuration error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let outcome = match run_command(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if is_config_error(&e) { 2 } else { 1 };
        }
    };
    let report_path = cli.report.clone().or_else(|| {
        cli.config
            .as_ref()
            .and_then(|p| std::fs::read_to_string(p).ok())
            .and_then(|s| serde_json::from_str::<RunConfig>(&s).ok())
            .and_then(|c| c.report)
    });
    if let Some(path) = report_path {
        let seed = match &outcome.json {
            Value::Object(m) => m.get("seed").and_then(Value::as_u64).unwrap_or(0),
            _ => 0,
        };
        let body = serde_json::to_string_pretty(&report_json(seed, &outcome.reports)).unwrap();
        if let Err(e) = std::fs::write(&path, body + "\n") {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return 2;
        }
    }
    if let Err(e) = emit(&cli, &outcome, out) {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    if outcome.reports.iter().all(Report::is_green) {
        0
    } else {
        1
    }
}
