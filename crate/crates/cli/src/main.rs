//! `supertrop`: parse tropical polynomials in any of the three semiring
//! modes and run the kernel's operations on them from the shell.
//!
//! Exit codes: 0 on success (including verified certificates), 1 on domain
//! errors (syntax, mode violations, bad inputs), 2 when an operation ran but
//! its verification failed (an unverified division certificate, an
//! unfactored result), 3 on command-line usage errors.

mod output;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::*;
use serde_json::{json, Value};
use supertrop::factor::{
    exchange_step, factor_univariate_full, l_divide, permanent_relation, principal_generator,
    Relation,
};
use supertrop::geometry::{
    components_univariate, corner_roots_univariate, corner_support, ghost_locus_univariate,
    is_corner_root, is_covered_univariate, is_ghost_root, layering_map,
};
use supertrop::lattice::{factor_binomial, half_ghost_reduce, is_generated, normalize, GenStatus};
use supertrop::parse::{parse_poly, parse_scalar, print_poly, print_scalar};
use supertrop::puiseux::{monomial_eliminate, tropicalize_poly};
use supertrop::record::{classical_from_record, ClassicalPolyRecord};
use supertrop::scalar::{LayeredScalar, SemiringMode};
use supertrop::{ExponentMode, Rat, TropPoly};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Maxplus,
    Supertropical,
    Layered,
}

impl ModeArg {
    fn mode(self) -> SemiringMode {
        match self {
            ModeArg::Maxplus => SemiringMode::MaxPlus,
            ModeArg::Supertropical => SemiringMode::Supertropical,
            ModeArg::Layered => SemiringMode::Layered,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EmodeArg {
    Poly,
    Laurent,
    Rational,
}

impl EmodeArg {
    fn emode(self) -> ExponentMode {
        match self {
            EmodeArg::Poly => ExponentMode::Polynomial,
            EmodeArg::Laurent => ExponentMode::Laurent,
            EmodeArg::Rational => ExponentMode::Rational,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

/// Flags shared by every subcommand.
#[derive(Args, Clone)]
struct Opts {
    /// Semiring mode the inputs live in.
    #[arg(long, value_enum, default_value_t = ModeArg::Supertropical, global = true)]
    mode: ModeArg,

    /// Exponent discipline: nonnegative integers, integers, or rationals.
    #[arg(long = "exponents", value_enum, default_value_t = EmodeArg::Poly, global = true)]
    exponents: EmodeArg,

    /// Variable count; inferred from the inputs when omitted.
    #[arg(long, global = true)]
    vars: Option<usize>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    /// Seed for sampled function comparisons.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Sample count for sampled function comparisons.
    #[arg(long, default_value_t = 200, global = true)]
    samples: usize,
}

#[derive(Parser)]
#[command(
    name = "supertrop",
    version,
    about = "Exact tropical polynomial algebra with layers"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a polynomial at a point, or echo its canonical form.
    Eval {
        poly: String,
        /// Evaluation point: comma-separated scalars, e.g. "3, 1v".
        #[arg(long)]
        at: Option<String>,
    },
    /// Essential part and essential support.
    Essential { poly: String },
    /// Corner roots of a univariate polynomial, ascending.
    Roots { poly: String },
    /// Monomials attaining the maximum at a point, and whether it is a
    /// corner root.
    Csupp {
        poly: String,
        #[arg(long)]
        at: String,
    },
    /// Ghost locus of a univariate polynomial, or the layering value at a
    /// point.
    Ghost {
        poly: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Cell decomposition of the line induced by a univariate polynomial.
    Components { poly: String },
    /// Whether some generator's layering stays at or below the target's on
    /// every component cell.
    Covered {
        poly: String,
        #[arg(required = true, num_args = 1..)]
        gens: Vec<String>,
    },
    /// Factor a univariate polynomial into linear and ghost-interval pieces.
    Factor { poly: String },
    /// Split a binomial into monomial * primitive-binomial^multiplicity.
    FactorBinomial { poly: String },
    /// Reduce binomials to an echelon generator set.
    ReduceBinomials {
        #[arg(required = true, num_args = 1..)]
        polys: Vec<String>,
    },
    /// Decide whether a binomial lies in the span of a generator set.
    Member {
        probe: String,
        #[arg(required = true, num_args = 1..)]
        gens: Vec<String>,
    },
    /// Divide by residuation and verify the certificate.
    Divide {
        dividend: String,
        /// Literal word "by".
        #[arg(value_parser = ["by"])]
        by: String,
        divisor: String,
    },
    /// Pick the minimal tangibly spanned generator and certify division of
    /// the rest.
    Principal {
        #[arg(required = true, num_args = 1..)]
        gens: Vec<String>,
    },
    /// Compare a product of sums against its subset-sum expansion.
    Identity {
        /// Check the pairwise-sum product identity.
        #[arg(long, required = true)]
        perm: bool,
        #[arg(required = true, num_args = 2..)]
        polys: Vec<String>,
    },
    /// Exchange the non-common parts of two polynomials sharing a block.
    Exchange { p: String, q: String },
    /// Tropicalize a classical polynomial given as a JSON record.
    Tropicalize { record: String },
    /// Eliminate a common monomial of two classical polynomials and
    /// tropicalize the split.
    Eliminate {
        fbar: String,
        gbar: String,
        /// The common monomial, e.g. "x" or "x1^2*x2".
        #[arg(long)]
        at: String,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(3);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

fn core(e: supertrop::Error) -> String {
    e.to_string()
}

/// Parses several expressions against one shared variable count: the flag
/// when given, otherwise the largest count any input infers on its own.
fn parse_polys(texts: &[&str], opts: &Opts) -> Result<Vec<TropPoly>, String> {
    let emode = opts.exponents.emode();
    let mode = opts.mode.mode();
    if let Some(n) = opts.vars {
        return texts
            .iter()
            .map(|t| parse_poly(t, Some(n), emode, mode).map_err(core))
            .collect();
    }
    let first: Vec<TropPoly> = texts
        .iter()
        .map(|t| parse_poly(t, None, emode, mode).map_err(core))
        .collect::<Result<_, _>>()?;
    let n = first.iter().map(|f| f.vars()).max().unwrap_or(0);
    if first.iter().all(|f| f.vars() == n) {
        return Ok(first);
    }
    texts
        .iter()
        .map(|t| parse_poly(t, Some(n), emode, mode).map_err(core))
        .collect()
}

fn parse_one(text: &str, opts: &Opts) -> Result<TropPoly, String> {
    Ok(parse_polys(&[text], opts)?.pop().expect("one input"))
}

/// Parses a polynomial that will be evaluated at `point`: a missing --vars
/// widens the inferred count to the point's dimension so constants and
/// lower-index expressions evaluate without a flag.
fn parse_for_point(text: &str, point: &[LayeredScalar], opts: &Opts) -> Result<TropPoly, String> {
    let f = parse_one(text, opts)?;
    if opts.vars.is_none() && f.vars() < point.len() {
        return parse_poly(
            text,
            Some(point.len()),
            opts.exponents.emode(),
            opts.mode.mode(),
        )
        .map_err(core);
    }
    Ok(f)
}

fn parse_point(text: &str, mode: SemiringMode) -> Result<Vec<LayeredScalar>, String> {
    text.split(',')
        .map(|s| parse_scalar(s.trim(), mode).map_err(core))
        .collect()
}

/// Parses the `--at` monomial of `eliminate` into an integer exponent
/// vector.
fn parse_monomial(text: &str, vars: usize, mode: SemiringMode) -> Result<Vec<i64>, String> {
    let f = parse_poly(text, Some(vars), ExponentMode::Laurent, mode).map_err(core)?;
    if f.len() != 1 {
        return Err(format!("--at '{text}': expected a single monomial"));
    }
    let (e, c) = f.leading();
    if !c.is_tangible() || c.value() != Some(&supertrop::rat(0)) {
        return Err(format!("--at '{text}': the monomial must carry the unit coefficient"));
    }
    e.iter()
        .map(|q| {
            if !q.is_integer() {
                return Err(format!("--at '{text}': exponents must be integers"));
            }
            i64::try_from(q.numer()).map_err(|_| format!("--at '{text}': exponent too large"))
        })
        .collect()
}

fn classical_input(text: &str, which: &str) -> Result<supertrop::puiseux::ClassicalPoly, String> {
    let rec: ClassicalPolyRecord = serde_json::from_str(text)
        .map_err(|e| format!("{which}: invalid classical polynomial record: {e}"))?;
    classical_from_record(&rec).map_err(core)
}

/// One rendered command outcome.
struct Report {
    text: Vec<String>,
    json: Value,
    exit: i32,
}

impl Report {
    fn ok(text: Vec<String>, json: Value) -> Report {
        Report { text, json, exit: 0 }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    let opts = &cli.opts;
    let mode = opts.mode.mode();
    let report = dispatch(&cli.cmd, opts)?;
    match opts.format {
        FormatArg::Text => {
            for line in &report.text {
                println!("{line}");
            }
        }
        FormatArg::Structured => {
            let _ = mode; // structured output is mode-tagged by the records
            println!("{}", serde_json::to_string(&report.json).expect("valid JSON"));
        }
    }
    Ok(report.exit)
}

fn dispatch(cmd: &Cmd, opts: &Opts) -> Result<Report, String> {
    let mode = opts.mode.mode();
    match cmd {
        Cmd::Eval { poly, at } => match at {
            Some(at) => {
                let point = parse_point(at, mode)?;
                let f = parse_for_point(poly, &point, opts)?;
                let value = f.evaluate(&point).map_err(core)?;
                Ok(Report::ok(
                    vec![print_scalar(&value, mode)],
                    json!({ "value": scalar_json(&value) }),
                ))
            }
            None => {
                let f = parse_one(poly, opts)?;
                Ok(Report::ok(
                    vec![print_poly(&f)],
                    json!({ "poly": poly_json(&f) }),
                ))
            }
        },

        Cmd::Essential { poly } => {
            let f = parse_one(poly, opts)?;
            let part = f.essential_part();
            let support = f.essential_support();
            let shown: Vec<String> = support.iter().map(|e| point_str(e)).collect();
            Ok(Report::ok(
                vec![
                    format!("part: {}", print_poly(&part)),
                    format!("support: {}", shown.join(" ")),
                ],
                json!({ "part": poly_json(&part), "support": exps_json(&support) }),
            ))
        }

        Cmd::Roots { poly } => {
            let f = parse_one(poly, opts)?;
            let roots = corner_roots_univariate(&f).map_err(core)?;
            Ok(Report::ok(
                roots.iter().map(rat_str).collect(),
                json!({ "roots": point_json(&roots) }),
            ))
        }

        Cmd::Csupp { poly, at } => {
            let point = parse_point(at, mode)?;
            let f = parse_for_point(poly, &point, opts)?;
            let support = corner_support(&f, &point).map_err(core)?;
            let root = is_corner_root(&f, &point).map_err(core)?;
            let shown: Vec<String> = support.iter().map(|e| point_str(e)).collect();
            Ok(Report::ok(
                vec![
                    format!("support: {}", shown.join(" ")),
                    format!("corner root: {root}"),
                ],
                json!({ "support": exps_json(&support), "corner_root": root }),
            ))
        }

        Cmd::Ghost { poly, at } => match at {
            Some(at) => {
                let point = parse_point(at, mode)?;
                let f = parse_for_point(poly, &point, opts)?;
                let layer = layering_map(&f, &point).map_err(core)?;
                let ghost = is_ghost_root(&f, &point).map_err(core)?;
                Ok(Report::ok(
                    vec![format!("layer: {}", layer_str(&layer)), format!("ghost: {ghost}")],
                    json!({ "layer": layer_json(&layer), "ghost": ghost }),
                ))
            }
            None => {
                let f = parse_one(poly, opts)?;
                let comps = ghost_locus_univariate(&f).map_err(core)?;
                Ok(Report::ok(
                    comps.iter().map(ghost_component_str).collect(),
                    json!({
                        "components": comps
                            .iter()
                            .map(ghost_component_json)
                            .collect::<Vec<_>>()
                    }),
                ))
            }
        },

        Cmd::Components { poly } => {
            let f = parse_one(poly, opts)?;
            let desc = components_univariate(&f).map_err(core)?;
            let bks: Vec<String> = desc.breakpoints.iter().map(rat_str).collect();
            let mut text = vec![format!(
                "breakpoints: {}",
                if bks.is_empty() { "(none)".to_string() } else { bks.join(", ") }
            )];
            for cell in &desc.cells {
                text.push(format!(
                    "cell {}: dominant exponent {}, layer {}",
                    range_str(&cell.lo, &cell.hi),
                    cell.dominant,
                    layer_str(&cell.interior_layer),
                ));
            }
            Ok(Report::ok(
                text,
                json!({
                    "breakpoints": point_json(&desc.breakpoints),
                    "cells": desc.cells.iter().map(cell_json).collect::<Vec<_>>(),
                }),
            ))
        }

        Cmd::Covered { poly, gens } => {
            let mut texts: Vec<&str> = vec![poly.as_str()];
            texts.extend(gens.iter().map(String::as_str));
            let mut all = parse_polys(&texts, opts)?;
            let f = all.remove(0);
            let report = is_covered_univariate(&f, &all).map_err(core)?;
            let mut text = vec![format!("covered: {}", report.covered)];
            for c in &report.cells {
                let range = range_str(&c.cell.lo, &c.cell.hi);
                match c.covering_gen {
                    Some(gi) => {
                        text.push(format!("cell {range}: covered by {}", print_poly(&all[gi])))
                    }
                    None => {
                        let fails: Vec<String> = c
                            .failures
                            .iter()
                            .map(|(gi, x)| format!("{} exceeds at {x}", print_poly(&all[*gi])))
                            .collect();
                        text.push(format!("cell {range}: uncovered ({})", fails.join("; ")));
                    }
                }
            }
            Ok(Report::ok(text, cover_json(&report, &all)))
        }

        Cmd::Factor { poly } => {
            let f = parse_one(poly, opts)?;
            let res = factor_univariate_full(&f).map_err(core)?;
            let mut text = vec![format!("unit: {}", print_scalar(&res.unit, mode))];
            for (g, m) in &res.factors {
                text.push(format!("factor: {} (multiplicity {m})", print_poly(g)));
            }
            text.push(format!("relation: {}", res.relation.name()));
            if let Some(w) = &res.witness {
                text.push(format!("witness: {}", point_str(w)));
            }
            let exit = if res.relation == Relation::Unfactored { 2 } else { 0 };
            Ok(Report {
                text,
                json: json!({
                    "unit": scalar_json(&res.unit),
                    "factors": res
                        .factors
                        .iter()
                        .map(|(g, m)| json!({ "poly": poly_json(g), "multiplicity": m }))
                        .collect::<Vec<_>>(),
                    "relation": res.relation.name(),
                    "witness": opt_point_json(&res.witness),
                }),
                exit,
            })
        }

        Cmd::FactorBinomial { poly } => {
            let f = parse_one(poly, opts)?;
            let (h, g, k) = factor_binomial(&f).map_err(core)?;
            let gp = g.to_poly();
            Ok(Report::ok(
                vec![
                    format!("monomial: {}", print_poly(&h)),
                    format!("binomial: {}", print_poly(&gp)),
                    format!("multiplicity: {k}"),
                ],
                json!({
                    "monomial": poly_json(&h),
                    "binomial": poly_json(&gp),
                    "multiplicity": k,
                }),
            ))
        }

        Cmd::ReduceBinomials { polys } => {
            let texts: Vec<&str> = polys.iter().map(String::as_str).collect();
            let inputs = parse_polys(&texts, opts)?;
            let gens = half_ghost_reduce(&inputs).map_err(core)?;
            let status = match gens.status {
                GenStatus::Proper => "proper",
                GenStatus::Improper => "improper",
            };
            let mut text = vec![format!("status: {status}")];
            for g in &gens.generators {
                text.push(format!("generator: {g}"));
            }
            Ok(Report::ok(
                text,
                json!({
                    "status": status,
                    "generators": gens
                        .generators
                        .iter()
                        .map(|g| poly_json(&g.to_poly()))
                        .collect::<Vec<_>>(),
                }),
            ))
        }

        Cmd::Member { probe, gens } => {
            let mut texts: Vec<&str> = vec![probe.as_str()];
            texts.extend(gens.iter().map(String::as_str));
            let mut all = parse_polys(&texts, opts)?;
            let probe = normalize(&all.remove(0)).map_err(core)?;
            let set = half_ghost_reduce(&all).map_err(core)?;
            let generated = is_generated(&probe, &set);
            Ok(Report::ok(
                vec![format!("generated: {generated}")],
                json!({ "generated": generated }),
            ))
        }

        Cmd::Divide { dividend, by: _, divisor } => {
            let pair = parse_polys(&[dividend.as_str(), divisor.as_str()], opts)?;
            let res = l_divide(&pair[0], &pair[1]).map_err(core)?;
            let mut text = vec![
                format!("quotient: {}", print_poly(&res.quotient)),
                format!("verified: {}", res.verified),
            ];
            if let Some(w) = &res.witness {
                text.push(format!("witness: {}", point_str(w)));
            }
            Ok(Report {
                text,
                json: json!({
                    "quotient": poly_json(&res.quotient),
                    "verified": res.verified,
                    "witness": opt_point_json(&res.witness),
                }),
                exit: if res.verified { 0 } else { 2 },
            })
        }

        Cmd::Principal { gens } => {
            let texts: Vec<&str> = gens.iter().map(String::as_str).collect();
            let inputs = parse_polys(&texts, opts)?;
            let (winner, certs) = principal_generator(&inputs).map_err(core)?;
            let mut text = vec![format!("candidate: {}", print_poly(&winner))];
            let mut all_verified = true;
            for (g, cert) in inputs.iter().zip(&certs) {
                let mut line = format!(
                    "generator {}: quotient {}, {}",
                    print_poly(g),
                    print_poly(&cert.quotient),
                    if cert.verified { "verified" } else { "unverified" }
                );
                if let Some(w) = &cert.witness {
                    line.push_str(&format!(", witness {}", point_str(w)));
                }
                all_verified &= cert.verified;
                text.push(line);
            }
            Ok(Report {
                text,
                json: json!({
                    "candidate": poly_json(&winner),
                    "certificates": inputs
                        .iter()
                        .zip(&certs)
                        .map(|(g, c)| json!({
                            "generator": poly_json(g),
                            "quotient": poly_json(&c.quotient),
                            "verified": c.verified,
                            "witness": opt_point_json(&c.witness),
                        }))
                        .collect::<Vec<_>>(),
                }),
                exit: if all_verified { 0 } else { 2 },
            })
        }

        Cmd::Identity { perm: _, polys } => {
            let texts: Vec<&str> = polys.iter().map(String::as_str).collect();
            let inputs = parse_polys(&texts, opts)?;
            let (rel, witness) =
                permanent_relation(&inputs, mode, opts.seed, opts.samples).map_err(core)?;
            let mut text = vec![rel.name().to_string()];
            if let Some(w) = &witness {
                text.push(format!("witness: {}", point_str(w)));
            }
            Ok(Report::ok(
                text,
                json!({ "relation": rel.name(), "witness": opt_point_json(&witness) }),
            ))
        }

        Cmd::Exchange { p, q } => {
            let pair = parse_polys(&[p.as_str(), q.as_str()], opts)?;
            let step = exchange_step(&pair[0], &pair[1]).map_err(core)?;
            Ok(Report::ok(
                vec![
                    format!("common (left): {}", print_poly(&step.common_p)),
                    format!("common (right): {}", print_poly(&step.common_q)),
                    format!("exchanged: {}", print_poly(&step.exchanged)),
                ],
                json!({
                    "common_left": poly_json(&step.common_p),
                    "common_right": poly_json(&step.common_q),
                    "exchanged": poly_json(&step.exchanged),
                }),
            ))
        }

        Cmd::Tropicalize { record } => {
            let f = classical_input(record, "input")?;
            let t = tropicalize_poly(&f, mode).map_err(core)?;
            Ok(Report::ok(
                vec![print_poly(&t)],
                json!({ "poly": poly_json(&t) }),
            ))
        }

        Cmd::Eliminate { fbar, gbar, at } => {
            let f = classical_input(fbar, "first input")?;
            let g = classical_input(gbar, "second input")?;
            let h = parse_monomial(at, f.vars(), mode)?;
            let elim = monomial_eliminate(&f, &g, &h, mode).map_err(core)?;
            let alpha_kind = if elim.alpha_exact { "exact" } else { "leading-term" };
            let text = vec![
                format!("p: {}", print_poly(&elim.p)),
                match &elim.q {
                    Some(q) => format!("q: {}", print_poly(q)),
                    None => "q: (none)".to_string(),
                },
                format!("alpha: {} ({alpha_kind})", elim.alpha),
            ];
            Ok(Report::ok(
                text,
                json!({
                    "p": poly_json(&elim.p),
                    "q": elim.q.as_ref().map(poly_json).unwrap_or(Value::Null),
                    "pbar": classical_json(&elim.pbar),
                    "qbar": classical_json(&elim.qbar),
                    "dbar": classical_json(&elim.dbar),
                    "alpha": puiseux_json(&elim.alpha),
                    "alpha_exact": elim.alpha_exact,
                }),
            ))
        }
    }
}

fn rat_str(q: &Rat) -> String {
    q.to_string()
}
