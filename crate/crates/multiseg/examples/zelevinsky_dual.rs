//! Compute Zelevinsky involutions with their round-by-round traces.
//!
//! Run with: `cargo run --example zelevinsky_dual`

use multiseg::dsl::parse_multisegment;
use multiseg::involution::{mw_dual, zelevinsky_dual};
use multiseg::model::{Sign, Universe};

fn main() {
    let universe = Universe::single_self_line("one", 1, Sign::Plus, 0);

    for text in [
        "[0,2]@one",
        "[0,1]@one+[1,2]@one",
        "[0,2]@one+[1]@one",
        "[2,3]@one+[1,2]@one+[0,1]@one",
    ] {
        let m = parse_multisegment(text, &universe).expect("example input parses");
        let (dual, trace) = mw_dual(&m);
        println!("m   = {m}");
        println!("m^t = {dual}");
        for (i, round) in trace.rounds.iter().enumerate() {
            let chain: Vec<String> = round.chain.iter().map(|s| s.to_string()).collect();
            println!(
                "  round {}: chain {} -> produced {}, residue {}",
                i + 1,
                chain.join(" > "),
                round.produced,
                round.residue
            );
        }
        assert_eq!(zelevinsky_dual(&dual), m, "the dual is an involution");
        println!("  (m^t)^t = m  ok\n");
    }
}
