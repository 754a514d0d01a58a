//! Command-line surface. Every command prints a single JSON document to
//! standard output; diagnostics go to standard error.
//!
//! Exit codes: `0` success, `1` usage error, `2` input parse/validation
//! error, `3` engine error (violated precondition), `4` catalog or suite
//! failures (the JSON report still lands on standard output).

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::basechange::{bc_class, BaseChangeClass};
use crate::catalog::{verify_catalog, EntryResult};
use crate::distinction::{
    induced_distinction, ladder_distinction, DistinctionError, DistinctionTag, DistinctionVerdict,
    InducedVerdict, Obstruction,
};
use crate::dsl::{
    format_multisegment, format_rep, parse_multisegment, parse_rep_detailed, parse_universe,
    DslError,
};
use crate::enumerate::{EnumSpec, LatticeMode};
use crate::involution::{mw_dual, MwTrace};
use crate::model::{HalfInt, MultiSegment, RepSpec, Universe};
use crate::suites::{run_suite, SuiteName, SuiteReport};

const USAGE: &str = "\
multiseg — multisegment combinatorics for GL(n) over a quadratic extension

Usage: multiseg <command> [options]

Commands:
  dual -u <universe.json> \"<mseg>\" [--trace]
      Zelevinsky involution, optionally with the round-by-round trace.
  bc-class -u <universe.json> \"<mseg>\"
      Stable/unstable base-change image membership.
  ladder-dist -u <universe.json> \"<mseg>\"
      Distinction verdict for a ladder multisegment.
  induced-dist -u <universe.json> \"<rep>\" [--twist 0|1]
      Distinction for a product of mutually unlinked proper ladders.
  parse \"<expr>\" [-u <universe.json>]
      Canonical form and AST of an expression.
  catalog verify
      Replay the built-in catalog; exit 0 iff all entries pass.
  check --suite <name> --max-size <N> --range <LO..HI> [--jobs <J>]
        [-u <universe.json>]
      Run a property suite over an exhaustive enumeration (both lattices).
      Without -u, a single self-dual line `one` (deg 1, eta0 +1, a 0) is
      used.

Suites: involution, commutation, parity, chi-swap, t-even, rf-cases,
induced-hereditary, roundtrip.

Expressions use segments like \"[-1/2,3/2]@line\" joined by \"+\" or \",\",
point segments like \"[0]@line\", an optional trailing \"@@line\" default, and
\"empty\". Products wrap factors in parentheses joined by \"*\".
";

enum CliError {
    Usage(String),
    Input(String),
    Engine(String),
}

impl From<DslError> for CliError {
    fn from(e: DslError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<crate::model::ModelError> for CliError {
    fn from(e: crate::model::ModelError) -> Self {
        CliError::Engine(e.to_string())
    }
}

impl From<DistinctionError> for CliError {
    fn from(e: DistinctionError) -> Self {
        CliError::Engine(e.to_string())
    }
}

impl From<crate::enumerate::EnumError> for CliError {
    fn from(e: crate::enumerate::EnumError) -> Self {
        CliError::Engine(e.to_string())
    }
}

/// Runs the CLI against standard output and returns the exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let mut stdout = std::io::stdout();
    run_with_output(args, &mut stdout)
}

/// Same as [`run`], but writing the JSON document to the given writer.
pub fn run_with_output<I, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = String>,
    W: Write,
{
    let args: Vec<String> = args.into_iter().collect();
    if matches!(
        args.first().map(String::as_str),
        Some("help" | "--help" | "-h")
    ) {
        writeln!(out, "{USAGE}").ok();
        return 0;
    }
    match dispatch(&args) {
        Ok((value, exit)) => {
            let rendered = serde_json::to_string_pretty(&value).expect("valid JSON value");
            writeln!(out, "{rendered}").ok();
            exit
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            1
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Engine(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    }
}

fn dispatch(args: &[String]) -> Result<(Value, i32), CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::Usage("missing command".to_string()));
    };
    let rest = &args[1..];
    match command.as_str() {
        "dual" => cmd_dual(rest),
        "bc-class" => cmd_bc_class(rest),
        "ladder-dist" => cmd_ladder_dist(rest),
        "induced-dist" => cmd_induced_dist(rest),
        "parse" => cmd_parse(rest),
        "catalog" => cmd_catalog(rest),
        "check" => cmd_check(rest),
        other => Err(CliError::Usage(format!("unknown command `{other}`"))),
    }
}

/// Common flag scaffold: flags with values, boolean flags, positionals.
struct Parsed {
    universe: Option<String>,
    trace: bool,
    twist: u8,
    suite: Option<String>,
    max_size: Option<String>,
    range: Option<String>,
    jobs: Option<String>,
    positional: Vec<String>,
}

fn parse_flags(args: &[String]) -> Result<Parsed, CliError> {
    let mut parsed = Parsed {
        universe: None,
        trace: false,
        twist: 0,
        suite: None,
        max_size: None,
        range: None,
        jobs: None,
        positional: Vec::new(),
    };
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        let mut value_of = |name: &str| {
            iter.next()
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("{name} expects a value")))
        };
        match arg.as_str() {
            "-u" | "--universe" => parsed.universe = Some(value_of("-u")?),
            "--trace" => parsed.trace = true,
            "--twist" => {
                parsed.twist = match value_of("--twist")?.as_str() {
                    "0" => 0,
                    "1" => 1,
                    other => {
                        return Err(CliError::Usage(format!(
                            "--twist expects 0 or 1, got `{other}`"
                        )))
                    }
                }
            }
            "--suite" => parsed.suite = Some(value_of("--suite")?),
            "--max-size" => parsed.max_size = Some(value_of("--max-size")?),
            "--range" => parsed.range = Some(value_of("--range")?),
            "--jobs" => parsed.jobs = Some(value_of("--jobs")?),
            other if other.starts_with('-') && other.len() > 1 => {
                return Err(CliError::Usage(format!("unknown flag `{other}`")));
            }
            _ => parsed.positional.push(arg.clone()),
        }
    }
    Ok(parsed)
}

fn load_universe(path: &str) -> Result<Universe, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read universe file `{path}`: {e}")))?;
    Ok(parse_universe(&text)?)
}

fn required_universe(parsed: &Parsed) -> Result<Universe, CliError> {
    let Some(path) = &parsed.universe else {
        return Err(CliError::Usage(
            "-u <universe.json> is required".to_string(),
        ));
    };
    load_universe(path)
}

fn one_positional(parsed: &Parsed, what: &str) -> Result<String, CliError> {
    match parsed.positional.as_slice() {
        [one] => Ok(one.clone()),
        [] => Err(CliError::Usage(format!("missing {what}"))),
        _ => Err(CliError::Usage(format!("expected exactly one {what}"))),
    }
}

fn cmd_dual(args: &[String]) -> Result<(Value, i32), CliError> {
    let parsed = parse_flags(args)?;
    let universe = required_universe(&parsed)?;
    let text = one_positional(&parsed, "multisegment expression")?;
    let m = parse_multisegment(&text, &universe)?;
    let (dual, trace) = mw_dual(&m);
    let mut doc = Map::new();
    doc.insert("input".to_string(), json!(format_multisegment(&m)));
    doc.insert("dual".to_string(), json!(format_multisegment(&dual)));
    if parsed.trace {
        doc.insert("trace".to_string(), trace_json(&trace));
    }
    Ok((Value::Object(doc), 0))
}

fn cmd_bc_class(args: &[String]) -> Result<(Value, i32), CliError> {
    let parsed = parse_flags(args)?;
    let universe = required_universe(&parsed)?;
    let text = one_positional(&parsed, "multisegment expression")?;
    let m = parse_multisegment(&text, &universe)?;
    let class = bc_class(&m, &universe)?;
    Ok((bc_json(&class), 0))
}

fn cmd_ladder_dist(args: &[String]) -> Result<(Value, i32), CliError> {
    let parsed = parse_flags(args)?;
    let universe = required_universe(&parsed)?;
    let text = one_positional(&parsed, "multisegment expression")?;
    let m = parse_multisegment(&text, &universe)?;
    let verdict = ladder_distinction(&m, &universe)?;
    Ok((ladder_json(&verdict), 0))
}

fn cmd_induced_dist(args: &[String]) -> Result<(Value, i32), CliError> {
    let parsed = parse_flags(args)?;
    let universe = required_universe(&parsed)?;
    let text = one_positional(&parsed, "product expression")?;
    let (rep, _) = parse_rep_detailed(&text, Some(&universe))?;
    let verdict = induced_distinction(&rep, &universe, parsed.twist == 1)?;
    Ok((induced_json(&verdict), 0))
}

fn cmd_parse(args: &[String]) -> Result<(Value, i32), CliError> {
    let parsed = parse_flags(args)?;
    let universe = match &parsed.universe {
        Some(path) => Some(load_universe(path)?),
        None => None,
    };
    let text = one_positional(&parsed, "expression")?;
    let (rep, parenthesized) = parse_rep_detailed(&text, universe.as_ref())?;
    let doc = if parenthesized || rep.factors().len() > 1 {
        json!({
            "canonical": format_rep(&rep),
            "ast": rep_ast(&rep),
        })
    } else {
        let m = &rep.factors()[0];
        json!({
            "canonical": format_multisegment(m),
            "ast": mseg_ast(m),
        })
    };
    Ok((doc, 0))
}

fn cmd_catalog(args: &[String]) -> Result<(Value, i32), CliError> {
    let parsed = parse_flags(args)?;
    let action = one_positional(&parsed, "catalog action (`verify`)")?;
    if action != "verify" {
        return Err(CliError::Usage(format!(
            "unknown catalog action `{action}` (expected `verify`)"
        )));
    }
    let results = verify_catalog();
    let all_pass = results.iter().all(|r| r.pass);
    let doc = json!({
        "pass": all_pass,
        "entries": results.iter().map(entry_json).collect::<Vec<_>>(),
    });
    if all_pass {
        Ok((doc, 0))
    } else {
        let failed = results.iter().filter(|r| !r.pass).count();
        eprintln!("{failed} catalog entr(y/ies) failed");
        Ok((doc, 4))
    }
}

fn cmd_check(args: &[String]) -> Result<(Value, i32), CliError> {
    let parsed = parse_flags(args)?;
    if !parsed.positional.is_empty() {
        return Err(CliError::Usage(
            "check takes no positional arguments".to_string(),
        ));
    }
    let suite: SuiteName = parsed
        .suite
        .as_deref()
        .ok_or_else(|| CliError::Usage("--suite <name> is required".to_string()))?
        .parse()
        .map_err(CliError::Usage)?;
    let max_size: usize = parsed
        .max_size
        .as_deref()
        .ok_or_else(|| CliError::Usage("--max-size <N> is required".to_string()))?
        .parse()
        .map_err(|_| CliError::Usage("--max-size expects a non-negative integer".to_string()))?;
    let range = parsed
        .range
        .as_deref()
        .ok_or_else(|| CliError::Usage("--range <LO..HI> is required".to_string()))?;
    let (lo, hi) = parse_range(range)?;
    let jobs: usize = match parsed.jobs.as_deref() {
        Some(j) => j
            .parse()
            .ok()
            .filter(|&j| j >= 1)
            .ok_or_else(|| CliError::Usage("--jobs expects a positive integer".to_string()))?,
        None => 1,
    };
    let universe = match &parsed.universe {
        Some(path) => load_universe(path)?,
        None => Universe::single_self_line("one", 1, crate::model::Sign::Plus, 0),
    };
    let spec = EnumSpec::new(universe, lo, hi, max_size, LatticeMode::Both);
    let report = run_suite(suite, &spec, jobs)?;
    let failed = report.failures_total > 0;
    if failed {
        eprintln!(
            "suite {} reported {} failure(s)",
            suite, report.failures_total
        );
    }
    Ok((report_json(&report, jobs), if failed { 4 } else { 0 }))
}

fn parse_range(text: &str) -> Result<(HalfInt, HalfInt), CliError> {
    let Some((lo, hi)) = text.split_once("..") else {
        return Err(CliError::Usage(format!(
            "--range expects LO..HI, got `{text}`"
        )));
    };
    let parse = |s: &str| {
        s.parse::<HalfInt>()
            .map_err(|e| CliError::Usage(format!("bad range endpoint: {e}")))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(CliError::Usage(format!("empty range `{text}`")));
    }
    Ok((lo, hi))
}

// ---------------------------------------------------------------------------
// JSON rendering
// ---------------------------------------------------------------------------

fn trace_json(trace: &MwTrace) -> Value {
    Value::Array(
        trace
            .rounds
            .iter()
            .map(|round| {
                json!({
                    "chain": round.chain.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "produced": round.produced.to_string(),
                    "residue": round.residue.to_string(),
                })
            })
            .collect(),
    )
}

fn bc_json(class: &BaseChangeClass) -> Value {
    json!({
        "tag": class.tag.to_string(),
        "n": class.n,
        "parity_set": class.parity_set.iter().rev().map(|s| s.to_i8()).collect::<Vec<_>>(),
        "s": class.s,
    })
}

fn ladder_json(verdict: &DistinctionVerdict) -> Value {
    let mut doc = Map::new();
    let tag = match verdict.tag {
        DistinctionTag::NotConjSelfDual => "NotConjSelfDual",
        DistinctionTag::BothExponents => "BothExponents",
        DistinctionTag::OnlyExponent(_) => "OnlyExponent",
    };
    doc.insert("tag".to_string(), json!(tag));
    if let DistinctionTag::OnlyExponent(e) = verdict.tag {
        doc.insert("exponent".to_string(), json!(e));
    }
    doc.insert("k".to_string(), json!(verdict.k));
    doc.insert("t".to_string(), json!(verdict.t));
    doc.insert("gamma".to_string(), json!(verdict.gamma));
    Value::Object(doc)
}

fn induced_json(verdict: &InducedVerdict) -> Value {
    match verdict {
        InducedVerdict::Distinguished { witness } => json!({
            // Factor indices are 1-based in the JSON, matching w ∈ S_k.
            "distinguished": true,
            "witness": witness.iter().map(|w| w + 1).collect::<Vec<_>>(),
        }),
        InducedVerdict::NotDistinguished { obstruction } => {
            let ob = match obstruction {
                Obstruction::NotConjSelfDual { factor } => json!({
                    "code": obstruction.code(),
                    "factor": factor + 1,
                }),
                Obstruction::UnpairedFixedFactorNotHDistinguished { factor, verdict } => json!({
                    "code": obstruction.code(),
                    "factor": factor + 1,
                    "factor_verdict": ladder_json(verdict),
                }),
            };
            json!({
                "distinguished": false,
                "obstruction": ob,
            })
        }
    }
}

fn mseg_ast(m: &MultiSegment) -> Value {
    json!({
        "kind": "multisegment",
        "segments": m.segments().iter().map(|s| {
            json!({
                "line": s.line().to_string(),
                "b": s.begin().to_string(),
                "e": s.end().to_string(),
                "length": s.len(),
                "lattice": s.lattice().to_string(),
            })
        }).collect::<Vec<_>>(),
    })
}

fn rep_ast(rep: &RepSpec) -> Value {
    json!({
        "kind": "rep",
        "factors": rep.factors().iter().map(mseg_ast).collect::<Vec<_>>(),
    })
}

fn entry_json(result: &EntryResult) -> Value {
    json!({
        "id": result.id,
        "pass": result.pass,
        "checks": result.checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "expected": c.expected,
            "got": c.got,
        })).collect::<Vec<_>>(),
    })
}

fn report_json(report: &SuiteReport, jobs: usize) -> Value {
    json!({
        "suite": report.suite.to_string(),
        "cases": report.cases,
        "failures": report.failures.iter().map(|f| json!({
            "case": f.case,
            "detail": f.detail,
        })).collect::<Vec<_>>(),
        "failures_total": report.failures_total,
        "wall_ms": report.wall_ms,
        "seed": report.seed,
        "jobs": jobs,
    })
}
