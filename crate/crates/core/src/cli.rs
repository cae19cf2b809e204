//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cellcomplex::{ComplexJson, RelativeComplex};
use crate::constructions::{by_name, ScenarioJson};
use crate::error::{Error, Result};
use crate::eulerian::{colored_eulerian, colored_eulerian_by_descents, hstar_by_interpolation, HalfOpenBox};
use crate::lineshell::{
    cube_polytope, facet_region_steps, is_stable_line_shelling, parse_vector, quadrilateral,
    random_line_search, simplex_polytope, strong_stability_steps, suggest_direction, LineQuery,
    PolytopeHV, PolytopeJson, FM_BUDGET,
};
use crate::polyreal::{interlaces, is_interlacing_sequence, is_real_rooted, IntPolynomial};
use crate::shelling::{shelling_report, ShellingOrder};
use crate::subdivision::{subdivide, Subdivision};
use crate::verify::{run_all, run_suite, Settings, SuiteReport};

#[derive(Parser, Debug)]
#[command(name = "stableshell", version, about = "Exact h-polynomials of subdivided shellable complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Enumeration budget for brute-force oracles.
    #[arg(long, default_value_t = crate::eulerian::DEFAULT_BUDGET, global = true)]
    pub budget: u64,
    /// Seed for random line sampling.
    #[arg(long, default_value_t = 2024, global = true)]
    pub seed: u64,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named complex: cube D, pile A1 A2 .., pile-nonstable, cuboid D L, capped D L, stacked D K.
    Construct { name: String, params: Vec<usize> },
    /// Face counts of a (relative) complex.
    Faces(ComplexArg),
    /// f- and h-polynomial of a (relative) complex.
    Hpoly(ComplexArg),
    /// Subdivide a (relative) complex.
    Subdivide {
        #[command(flatten)]
        input: ComplexArg,
        #[command(flatten)]
        sub: SubArg,
    },
    /// Check a shelling order for stability and interlacing after subdivision.
    Shelling {
        #[command(flatten)]
        input: ComplexArg,
        /// `lex`, `reverse` or a comma-separated permutation; defaults to the scenario order.
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        sub: SubArg,
    },
    /// Colored l-Eulerian polynomial A_{d,l}^{(r)}.
    Eulerian {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value_t = EulerianMethod::Formula)]
        method: EulerianMethod,
    },
    /// Decide p ≺ q, or whether a sequence is interlacing. Polynomials are coefficient lists like `1,6,1`.
    Interlace {
        /// Polynomials in sequence order.
        polys: Vec<String>,
    },
    /// Line shelling of a polytope (`cube:D`, `simplex:D`, `quad`, a file or inline JSON).
    Lineshell {
        #[arg(long)]
        polytope: String,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        dir: Option<String>,
        /// Sample this many random lines instead of a single line.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Run a verification suite or `all`.
    Verify { suite: String },
}

#[derive(Args, Debug)]
pub struct ComplexArg {
    /// Complex or scenario JSON, as a file path or inline.
    #[arg(long)]
    pub complex: String,
}

#[derive(Args, Debug)]
pub struct SubArg {
    #[arg(long = "subdivision", value_enum, default_value_t = SubKind::Barycentric)]
    pub kind: SubKind,
    /// Edgewise parameter.
    #[arg(long, default_value_t = 2)]
    pub r: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SubKind {
    Trivial,
    Barycentric,
    Edgewise,
}

impl SubArg {
    fn subdivision(&self) -> Subdivision {
        match self.kind {
            SubKind::Trivial => Subdivision::Trivial,
            SubKind::Barycentric => Subdivision::Barycentric,
            SubKind::Edgewise => Subdivision::Edgewise(self.r),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EulerianMethod {
    Formula,
    Descents,
    Lattice,
}

/// A command outcome: JSON payload, text rendering and whether expectations held.
struct Outcome {
    json: Value,
    text: String,
    ok: bool,
}

fn read_input(s: &str) -> Result<String> {
    let t = s.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(s.to_string());
    }
    std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("cannot read {s}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// A complex from scenario or plain complex JSON, with the scenario order if present.
fn load_complex(arg: &str) -> Result<(ComplexJson, Option<Vec<usize>>)> {
    let text = read_input(arg)?;
    if let Ok(s) = serde_json::from_str::<ScenarioJson>(&text) {
        return Ok((s.complex, Some(s.order)));
    }
    Ok((parse_json::<ComplexJson>(&text)?, None))
}

fn load_relative(arg: &str) -> Result<RelativeComplex> {
    load_complex(arg)?.0.to_relative()
}

fn load_polytope(arg: &str) -> Result<PolytopeHV> {
    let dim = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension in {arg}")));
    if let Some(d) = arg.strip_prefix("cube:") {
        return cube_polytope(dim(d)?);
    }
    if let Some(d) = arg.strip_prefix("simplex:") {
        return simplex_polytope(dim(d)?);
    }
    if arg == "quad" {
        return Ok(quadrilateral());
    }
    parse_json::<PolytopeJson>(&read_input(arg)?)?.to_polytope()
}

fn parse_poly(s: &str) -> Result<IntPolynomial> {
    let coeffs = s
        .split(',')
        .map(|c| c.trim().parse::<num_bigint::BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {c:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn counts_text(counts: &[usize]) -> String {
    counts.iter().enumerate().map(|(k, n)| format!("dim {}: {n}", k as isize - 1)).collect::<Vec<_>>().join("\n")
}

fn relative_counts(rc: &RelativeComplex) -> Vec<usize> {
    let mut counts = vec![0usize; rc.dim() + 2];
    for (_, d) in rc.present_faces() {
        counts[(d + 1) as usize] += 1;
    }
    counts
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let settings = Settings { seed: cli.seed, budget: cli.budget };
    match &cli.command {
        Command::Construct { name, params } => {
            let s = by_name(name, params)?;
            let json = to_value(&s.to_json());
            Ok(Outcome { text: serde_json::to_string(&json).expect("json"), json, ok: true })
        }
        Command::Faces(arg) => {
            let rc = load_relative(&arg.complex)?;
            let counts = relative_counts(&rc);
            Ok(Outcome {
                text: counts_text(&counts),
                json: json!({ "dim": rc.dim(), "face_counts": counts, "euler_characteristic": rc.euler_characteristic() }),
                ok: true,
            })
        }
        Command::Hpoly(arg) => {
            let rc = load_relative(&arg.complex)?;
            let (f, h) = (rc.f_polynomial(), rc.h_polynomial());
            Ok(Outcome {
                text: format!("f = {f}\nh = {h}\nreal-rooted: {}", is_real_rooted(&h)),
                json: json!({ "f": f, "h": h, "h_text": h.to_string(), "real_rooted": is_real_rooted(&h) }),
                ok: true,
            })
        }
        Command::Subdivide { input, sub } => {
            let (cj, _) = load_complex(&input.complex)?;
            let rc = cj.to_relative()?;
            let s = subdivide(rc.ambient(), sub.subdivision())?;
            let rel = s.relative(&rc)?;
            let h = rel.h_polynomial();
            let mut out = s.complex.to_json();
            let mut removed: Vec<Vec<u32>> = rel.removed().iter().map(|f| f.iter().map(|v| v.0).collect()).collect();
            removed.sort();
            out.removed = (!removed.is_empty()).then_some(removed);
            let labels: serde_json::Map<String, Value> =
                s.labels.iter().map(|(v, l)| (v.0.to_string(), Value::String(l.clone()))).collect();
            Ok(Outcome {
                text: format!("{} maximal simplices\nh = {h}", s.complex.len()),
                json: json!({ "complex": out, "labels": labels, "h": h, "h_text": h.to_string() }),
                ok: true,
            })
        }
        Command::Shelling { input, order, sub } => {
            let (cj, scenario_order) = load_complex(&input.complex)?;
            let c = cj.to_complex()?;
            let so = match order.as_deref() {
                None => scenario_order.map_or_else(
                    || Ok(ShellingOrder::identity(c.len())),
                    |o| ShellingOrder::new(o, c.len()),
                )?,
                Some("lex") => ShellingOrder::identity(c.len()),
                Some("reverse") => ShellingOrder::identity(c.len()).reversed(),
                Some(list) => ShellingOrder::new(
                    list.split(',')
                        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad order entry {x:?}"))))
                        .collect::<Result<_>>()?,
                    c.len(),
                )?,
            };
            let report = shelling_report(&c, &so, sub.subdivision())?;
            let mut text = String::new();
            for (i, s) in report.steps.iter().enumerate() {
                text += &format!(
                    "step {}: cell {} removed {:?} shelling {} stable {} h = {}\n",
                    i + 1,
                    s.cell,
                    s.removed_facets,
                    s.shelling_step,
                    s.stable,
                    s.h_coeffs
                );
            }
            text += &format!(
                "is_shelling: {}\nis_stable: {}\nh_total = {}\nreal_rooted: {}\ninterlacing_order: {:?}",
                report.is_shelling.ok, report.is_stable.ok, report.h_total, report.real_rooted, report.interlacing_order
            );
            Ok(Outcome { json: to_value(&report), text, ok: true })
        }
        Command::Eulerian { d, l, r, method } => {
            let p = match method {
                EulerianMethod::Formula => colored_eulerian(*d, *l, *r)?,
                EulerianMethod::Descents => colored_eulerian_by_descents(*d, *l, *r, cli.budget)?,
                EulerianMethod::Lattice => hstar_by_interpolation(&HalfOpenBox::new(*d, *r, *l)?, cli.budget)?.hstar,
            };
            Ok(Outcome {
                text: p.to_string(),
                json: json!({ "d": d, "l": l, "r": r, "coeffs": p, "text": p.to_string() }),
                ok: true,
            })
        }
        Command::Interlace { polys } => {
            let ps = polys.iter().map(|s| parse_poly(s)).collect::<Result<Vec<_>>>()?;
            if ps.len() < 2 {
                return Err(Error::Parse("give at least two polynomials".into()));
            }
            let rr: Vec<bool> = ps.iter().map(is_real_rooted).collect();
            let (label, value) = if ps.len() == 2 {
                ("interlaces", interlaces(&ps[0], &ps[1])?)
            } else {
                ("interlacing_sequence", is_interlacing_sequence(&ps)?)
            };
            Ok(Outcome {
                text: format!("{label}: {value}\nreal-rooted: {rr:?}"),
                json: json!({ label: value, "real_rooted": rr }),
                ok: true,
            })
        }
        Command::Lineshell { polytope, point, dir, trials } => {
            let p = load_polytope(polytope)?;
            if let Some(n) = trials {
                let st = random_line_search(&p, *n, cli.seed, FM_BUDGET)?;
                return Ok(Outcome {
                    text: format!("{st:#?}"),
                    ok: st.chain_violations == 0,
                    json: to_value(&st),
                });
            }
            let (Some(pt), Some(v)) = (point, dir) else {
                return Err(Error::Parse("lineshell needs --point and --dir, or --trials".into()));
            };
            let l = LineQuery::new(parse_vector(pt)?, parse_vector(v)?)?;
            let stab = match is_stable_line_shelling(&p, &l) {
                Err(Error::Genericity(msg)) => {
                    let hint = suggest_direction(&p, &l)
                        .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
                    return Err(Error::Genericity(match hint {
                        Some(h) => format!("{msg}; try --dir {h}"),
                        None => msg,
                    }));
                }
                other => other?,
            };
            let strong = strong_stability_steps(&p, &l, FM_BUDGET)?;
            let region = facet_region_steps(&p, &l, FM_BUDGET)?;
            let text = format!(
                "order: {:?} (before infinity: {})\nshelling: {}\nstable: {}\nstrongly stable: {}\nfacet-region condition: {}",
                stab.result.order,
                stab.result.before_infinity,
                stab.shelling.ok,
                stab.stable.ok,
                strong.iter().all(|&b| b),
                region.iter().all(|&b| b)
            );
            Ok(Outcome {
                json: json!({
                    "line": to_value(&stab),
                    "strong_steps": strong,
                    "facet_region_steps": region,
                    "seed": cli.seed,
                }),
                text,
                ok: true,
            })
        }
        Command::Verify { suite } => {
            let reports: Vec<SuiteReport> = if suite == "all" {
                run_all(settings)?
            } else {
                vec![run_suite(suite, settings)?]
            };
            let ok = reports.iter().all(|r| r.passed);
            let mut text = String::new();
            for r in &reports {
                text += &format!("{} {} ({} checks, {} ms)\n", if r.passed { "PASS" } else { "FAIL" }, r.id, r.checks.len(), r.wall_ms);
                for c in r.checks.iter().filter(|c| !c.passed) {
                    text += &format!("    failed: {} ({})\n", c.name, c.detail);
                }
            }
            Ok(Outcome {
                json: json!({ "seed": cli.seed, "budget": cli.budget, "passed": ok, "suites": reports }),
                text: text.trim_end().to_string(),
                ok,
            })
        }
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, format!("{body}\n")),
        None => writeln!(std::io::stdout(), "{body}"),
    }
}

/// Runs the CLI; returns 0 on success, 1 on a verification mismatch and 2 on bad input.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json"),
                Format::Text => o.text,
            };
            if let Err(e) = emit(&cli, &body) {
                eprintln!("error: {e}");
                return 2;
            }
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
