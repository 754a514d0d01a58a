//! Decide distinction for products of mutually unlinked proper ladders,
//! with pairing witnesses and obstructions.
//!
//! Run with: `cargo run --example induced_products`

use multiseg::distinction::{induced_distinction, InducedVerdict};
use multiseg::dsl::parse_rep;
use multiseg::model::{LineSpec, Sign, Universe};

fn main() {
    let universe = Universe::new(vec![
        LineSpec::self_dual("one", 1, Sign::Plus, 0),
        LineSpec::self_dual("rho2", 2, Sign::Plus, 0),
    ])
    .expect("example universe");

    let cases = [
        // The simplest conjugate self-dual product distinguished for
        // neither twist: its factors demand opposite exponents.
        "([-1/2]@one+[1/2]@one)*([-1/2,1/2]@one)",
        // A GL(3)-shaped product of the trivial character with a twisted
        // distinguished cuspidal: conjugate self-dual, never distinguished.
        "([0]@one)*([0]@rho2!chi)",
        // A factor paired with its conjugate dual, plus a distinguished
        // fixed factor on a different line.
        "([1,2]@one)*([-2,-1]@one)*([0]@rho2)",
        // Pure pairing across a twist.
        "([3/2,5/2]@rho2)*([-5/2,-3/2]@rho2)",
    ];

    for text in cases {
        let rep = parse_rep(text, &universe).expect("example input parses");
        println!("pi = {rep}");
        for twist in [false, true] {
            let label = if twist { "(H,omega)" } else { "H        " };
            match induced_distinction(&rep, &universe, twist).expect("hypotheses hold") {
                InducedVerdict::Distinguished { witness } => {
                    let w: Vec<String> = witness.iter().map(|i| (i + 1).to_string()).collect();
                    println!("  {label} distinguished, w = ({})", w.join(" "));
                }
                InducedVerdict::NotDistinguished { obstruction } => {
                    println!("  {label} not distinguished: {}", obstruction.code());
                }
            }
        }
        println!();
    }
}
