//! Distinction verdicts for ladder multisegments, cross-checked against
//! their base-change classes.
//!
//! Run with: `cargo run --example ladder_distinction`

use multiseg::distinction::{ladder_distinction, rf_case};
use multiseg::dsl::parse_multisegment;
use multiseg::model::{LineSpec, Sign, Universe};

fn main() {
    // One line per distinction exponent, to show how gamma enters.
    let universe = Universe::new(vec![
        LineSpec::self_dual("s0", 1, Sign::Plus, 0),
        LineSpec::self_dual("s1", 1, Sign::Plus, 1),
    ])
    .expect("example universe");

    for text in [
        "[-1/2]@s0+[1/2]@s0",
        "[-1/2,1/2]@s0",
        "[-1/2,1/2]@s1",
        "[0]@s0",
        "[0]@s1",
        "[-1]@s0+[0]@s0+[1]@s0",
        "[-1/2,3/2]@s0+[-3/2,1/2]@s0",
        "[1,2]@s0+[-2,-1]@s0",
        "[0,1]@s0",
    ] {
        let m = parse_multisegment(text, &universe).expect("example input parses");
        let verdict = ladder_distinction(&m, &universe).expect("ladder");
        print!(
            "{:<32} k={} t={} gamma={:?}  -> {}",
            m.to_string(),
            verdict.k,
            verdict.t,
            verdict.gamma,
            verdict.tag
        );
        match rf_case(&m, &universe) {
            Ok(case) => println!("  [base change: {}]", case.bc.tag),
            Err(err) => println!("  [base change: {err}]"),
        }
    }
}
