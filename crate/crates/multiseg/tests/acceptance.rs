//! Acceptance suite: every release-gating property in one target, one
//! printed pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//! The enumerated criteria all run over the same window: one self-dual line,
//! exponents in [-3, 3] on both lattices, at most 5 segments per case
//! (3,162,510 cases). All checks are exact; the only tolerance anywhere is
//! the wall-clock target of criterion 1.

use std::fmt::Write as _;
use std::time::Instant;

use multiseg::basechange::{bc_class, BcTag};
use multiseg::catalog::verify_catalog;
use multiseg::distinction::{induced_distinction, is_ladder};
use multiseg::dsl::{parse_multisegment, parse_rep};
use multiseg::enumerate::{EnumSpec, LatticeMode};
use multiseg::involution::zelevinsky_dual;
use multiseg::model::{HalfInt, MultiSegment, Sign, Universe};
use multiseg::suites::{run_suite, SuiteName, SuiteReport, HEREDITARY_CASES};

fn acceptance_spec() -> EnumSpec {
    EnumSpec::new(
        Universe::single_self_line("one", 1, Sign::Plus, 0),
        HalfInt::whole(-3),
        HalfInt::whole(3),
        5,
        LatticeMode::Both,
    )
}

fn suite_line(report: &SuiteReport) -> String {
    format!(
        "{} over {} cases in {} ms",
        report.suite, report.cases, report.wall_ms
    )
}

fn expect_clean(report: &SuiteReport) -> Result<String, String> {
    if report.failures_total == 0 {
        Ok(suite_line(report))
    } else {
        let mut msg = format!(
            "{} failures in suite {}; smallest cases:",
            report.failures_total, report.suite
        );
        for failure in report.failures.iter().take(3) {
            let _ = write!(msg, " [{} | {}]", failure.case, failure.detail);
        }
        Err(msg)
    }
}

fn parse(u: &Universe, text: &str) -> MultiSegment {
    parse_multisegment(text, u).expect("acceptance input parses")
}

fn criterion_1_involution(spec: &EnumSpec) -> Result<String, String> {
    // The involution suite covers the double dual, support preservation,
    // and commutation with the conjugate dual and the twist.
    let start = Instant::now();
    let involution = run_suite(SuiteName::Involution, spec, 1).map_err(|e| e.to_string())?;
    let wall = start.elapsed();
    let line = expect_clean(&involution)?;
    if wall.as_secs_f64() >= 30.0 {
        return Err(format!(
            "involution suite took {:.1}s, target is < 30s single-threaded",
            wall.as_secs_f64()
        ));
    }
    Ok(format!("{line}; {:.1}s < 30s", wall.as_secs_f64()))
}

fn criterion_2_ground_truth(u: &Universe) -> Result<String, String> {
    let cases = [
        ("[0,2]@one", "[2]@one+[1]@one+[0]@one"),
        ("[0,1]@one+[1,2]@one", "[1,2]@one+[0,1]@one"),
        ("[0,2]@one+[1]@one", "[2]@one+[1]@one+[1]@one+[0]@one"),
    ];
    for (input, expected) in cases {
        let m = parse(u, input);
        let dual = zelevinsky_dual(&m);
        let want = parse(u, expected);
        if dual != want {
            return Err(format!("dual of {input} is {dual}, expected {expected}"));
        }
        if zelevinsky_dual(&dual) != m {
            return Err(format!("double dual of {input} is not the identity"));
        }
    }
    Ok("3 pinned duals reproduce exactly".to_string())
}

fn criterion_5_single_image_checkpoints(
    parity: &Result<SuiteReport, String>,
    u: &Universe,
) -> Result<String, String> {
    let report = parity.as_ref().map_err(Clone::clone)?;
    let a = expect_clean(report)?;

    // The checkpoint pair: two points lie in both images, the length-two
    // segment (their dual) only in the stable image.
    let points = parse(u, "[-1/2]@one+[1/2]@one");
    let class = bc_class(&points, u).map_err(|e| e.to_string())?;
    if class.tag != BcTag::Both {
        return Err(format!(
            "point pair classified {}, expected Both",
            class.tag
        ));
    }
    let segment = parse(u, "[-1/2,1/2]@one");
    let class = bc_class(&segment, u).map_err(|e| e.to_string())?;
    if class.tag != BcTag::StableOnly {
        return Err(format!(
            "length-2 segment classified {}, expected StableOnly",
            class.tag
        ));
    }
    if zelevinsky_dual(&points) != segment {
        return Err("checkpoint pair is not a dual pair".to_string());
    }
    Ok(format!("{a}; checkpoint pair reproduces exactly"))
}

fn criterion_8_hereditary(spec: &EnumSpec) -> Result<String, String> {
    let report = run_suite(SuiteName::InducedHereditary, spec, 1).map_err(|e| e.to_string())?;
    if report.cases != HEREDITARY_CASES {
        return Err(format!(
            "expected {HEREDITARY_CASES} constructed cases, ran {}",
            report.cases
        ));
    }
    let line = expect_clean(&report)?;
    Ok(format!(
        "{line} (seed {:#x})",
        report.seed.expect("hereditary suite reports its seed")
    ))
}

fn criterion_9_catalog() -> Result<String, String> {
    let results = verify_catalog();
    if results.len() != 4 {
        return Err(format!(
            "expected 4 catalog entries, found {}",
            results.len()
        ));
    }
    for entry in &results {
        if !entry.pass {
            let failed: Vec<_> = entry
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.got))
                .collect();
            return Err(format!("entry {} failed: {}", entry.id, failed.join("; ")));
        }
    }

    // The headline facts, asserted directly on top of the table.
    let u = Universe::single_self_line("one", 1, Sign::Plus, 0);
    let rep =
        parse_rep("([-1/2]@one+[1/2]@one)*([-1/2,1/2]@one)", &u).map_err(|e| e.to_string())?;
    if !rep
        .concatenation()
        .is_conj_self_dual(&u)
        .map_err(|e| e.to_string())?
    {
        return Err("product counterexample is not conjugate self-dual".to_string());
    }
    for twist in [false, true] {
        let verdict = induced_distinction(&rep, &u, twist).map_err(|e| e.to_string())?;
        if verdict.is_distinguished() {
            return Err(format!(
                "product counterexample distinguished at twist {twist}"
            ));
        }
    }

    let su = Universe::single_self_line("sigma", 2, Sign::Plus, 0);
    let theta = parse(
        &su,
        "[1/2,3/2]@sigma+[-1/2,7/2]@sigma+[-3/2,-1/2]@sigma+[-5/2,5/2]@sigma+[-7/2,1/2]@sigma",
    );
    if !theta.is_conj_self_dual(&su).map_err(|e| e.to_string())? {
        return Err("five-segment example is not conjugate self-dual".to_string());
    }
    if is_ladder(&theta) {
        return Err("five-segment example should not be a ladder".to_string());
    }
    let class = bc_class(&theta, &su).map_err(|e| e.to_string())?;
    if !matches!(class.tag, BcTag::StableOnly | BcTag::UnstableOnly) {
        return Err(format!(
            "five-segment example classified {}, expected exactly one image",
            class.tag
        ));
    }
    Ok("4 catalog entries verify; headline facts hold".to_string())
}

fn criterion_10_roundtrip(spec: &EnumSpec, u: &Universe) -> Result<String, String> {
    let report = run_suite(SuiteName::Roundtrip, spec, 1).map_err(|e| e.to_string())?;
    if report.cases == 0 || report.cases > 100_000 {
        return Err(format!(
            "sampled {} cases, expected 1..=100000",
            report.cases
        ));
    }
    let line = expect_clean(&report)?;

    // Malformed inputs fail with spans covering the offending token.
    let corpus: &[(&str, &str)] = &[
        ("[1/2,-1/2]@one", "[1/2,-1/2]@one"),
        ("[0,1/2]@one", "[0,1/2]@one"),
        ("[1/3]@one", "/3"),
        ("[0]@nope", "[0]@nope"),
        ("[0]@one [1]@one", "[1]@one"),
        ("[0]@one + [1]", "[1]"),
        ("[0", ""),
    ];
    for &(input, expected_slice) in corpus {
        match parse_multisegment(input, u) {
            Ok(m) => return Err(format!("malformed `{input}` parsed as {m}")),
            Err(err) => {
                let Some(span) = err.span() else {
                    return Err(format!("error for `{input}` carries no span: {err}"));
                };
                let got = &input[span.start.min(input.len())..span.end.min(input.len())];
                if got != expected_slice {
                    return Err(format!(
                        "span for `{input}` covers `{got}`, expected `{expected_slice}`"
                    ));
                }
            }
        }
    }
    Ok(format!(
        "{line}; {} malformed inputs span-checked",
        corpus.len()
    ))
}

#[test]
fn acceptance() {
    let spec = acceptance_spec();
    let u = spec.universe.clone();

    let run_clean = |name: SuiteName| -> Result<SuiteReport, String> {
        run_suite(name, &spec, 1).map_err(|e| e.to_string())
    };

    // Shared suite runs referenced by more than one criterion.
    let parity = run_clean(SuiteName::Parity);
    let chi_swap = run_clean(SuiteName::ChiSwap);

    let results: Vec<(&str, Result<String, String>)> = vec![
        (
            "01 involution and commutation",
            criterion_1_involution(&spec),
        ),
        ("02 dual ground truth", criterion_2_ground_truth(&u)),
        (
            "03 parity classification",
            parity.as_ref().map_err(Clone::clone).and_then(expect_clean),
        ),
        (
            "04 twist swaps the single images",
            chi_swap
                .as_ref()
                .map_err(Clone::clone)
                .and_then(expect_clean),
        ),
        (
            "05 dual keeps single images",
            criterion_5_single_image_checkpoints(&parity, &u),
        ),
        (
            "06 both images iff t even",
            run_clean(SuiteName::TEven).and_then(|r| expect_clean(&r)),
        ),
        (
            "07 ladder verdicts cohere with base change",
            run_clean(SuiteName::RfCases).and_then(|r| expect_clean(&r)),
        ),
        (
            "08 hereditary pairing (incl. exponent flip in 04)",
            criterion_8_hereditary(&spec),
        ),
        ("09 catalog", criterion_9_catalog()),
        (
            "10 DSL round-trip and spans",
            criterion_10_roundtrip(&spec, &u),
        ),
    ];

    let mut failed = Vec::new();
    for (name, result) in &results {
        match result {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                println!("criterion {name}: FAIL ({detail})");
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
