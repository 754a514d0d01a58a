//! The expression language and the universe file format.
//!
//! Run with: `cargo run --example dsl_tour`

use multiseg::dsl::{
    format_multisegment, format_rep, parse_multisegment, parse_rep, parse_universe,
};

const UNIVERSE: &str = r#"{
  "lines": [
    {"id": "one",  "deg": 1, "conj_dual": "self", "eta0": 1, "dist_a": 0},
    {"id": "pi3",  "deg": 3, "conj_dual": {"partner": "pi3b"}},
    {"id": "pi3b", "deg": 3, "conj_dual": {"partner": "pi3"}}
  ]
}"#;

fn main() {
    let universe = parse_universe(UNIVERSE).expect("valid universe file");

    // Whitespace-insensitive, "+" or "," separators, point segments, a
    // trailing default line, and twisted lines.
    for text in [
        "[1/2,3/2]@one + [-3/2,-1/2]@one",
        "[0]@pi3 , [0]@pi3b",
        "[1] + [-1] + [0] @@one",
        "[0]@one!chi",
        "empty",
    ] {
        let m = parse_multisegment(text, &universe).expect("parses");
        println!("{text:<34} => {}", format_multisegment(&m));
    }

    // Products wrap factors in parentheses.
    let rep = parse_rep("([1,2]@one)*([-2,-1]@one)", &universe).expect("parses");
    println!("product => {}", format_rep(&rep));
    println!("concatenation => {}", rep.concatenation());

    // Errors carry byte spans pointing at the offending token.
    println!();
    for bad in ["[1/2,-1/2]@one", "[1/3]@one", "[0]@mystery", "[0,1/2]@one"] {
        let err = parse_multisegment(bad, &universe).unwrap_err();
        match err.span() {
            Some(span) => println!(
                "{bad:<18} error at {}..{} (`{}`): {err}",
                span.start,
                span.end,
                &bad[span.start..span.end]
            ),
            None => println!("{bad:<18} error: {err}"),
        }
    }
}
