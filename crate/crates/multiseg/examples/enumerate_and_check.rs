//! Run the exhaustive property suites at desk scale.
//!
//! Run with: `cargo run --example enumerate_and_check`

use multiseg::enumerate::{enumerate_multisegments, EnumSpec, LatticeMode};
use multiseg::model::{HalfInt, Sign, Universe};
use multiseg::suites::{run_suite, SuiteName};

fn main() {
    let spec = EnumSpec::new(
        Universe::single_self_line("one", 1, Sign::Plus, 0),
        HalfInt::whole(-2),
        HalfInt::whole(2),
        4,
        LatticeMode::Both,
    );

    println!(
        "window [-2,2], both lattices, up to 4 segments: {} segments in the pool, {} cases",
        spec.segment_pool().len(),
        spec.case_count()
    );
    let first: Vec<String> = enumerate_multisegments(&spec)
        .expect("within bounds")
        .take(6)
        .map(|m| m.to_string())
        .collect();
    println!("first cases: {}\n", first.join(" | "));

    for name in SuiteName::ALL {
        let report = run_suite(name, &spec, 2).expect("within bounds");
        println!(
            "suite {:<20} cases {:>8}  failures {}  ({} ms{})",
            report.suite.to_string(),
            report.cases,
            report.failures_total,
            report.wall_ms,
            report
                .seed
                .map(|s| format!(", seed {s:#x}"))
                .unwrap_or_default()
        );
        for failure in report.failures.iter().take(3) {
            println!("    {} | {}", failure.case, failure.detail);
        }
    }
}
