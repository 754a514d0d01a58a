//! Classify membership in the stable and unstable base-change images.
//!
//! Run with: `cargo run --example base_change`

use multiseg::basechange::{bc_class, param_factors};
use multiseg::dsl::parse_multisegment;
use multiseg::model::{Sign, Universe};

fn main() {
    let universe = Universe::single_self_line("one", 1, Sign::Plus, 0);

    println!("{:<34} {:>3}  class", "multisegment", "n");
    for text in [
        "[-1/2]@one+[1/2]@one",
        "[-1/2,1/2]@one",
        "[-1]@one+[0]@one+[1]@one",
        "[-1,1]@one",
        "[0]@one",
        "[0]@one+[0]@one",
        "[0,1]@one",
        "[-3/2,3/2]@one+[-1/2,1/2]@one",
        "[0]@one!chi",
    ] {
        let m = parse_multisegment(text, &universe).expect("example input parses");
        let class = bc_class(&m, &universe).expect("nonempty");
        println!("{:<34} {:>3}  {}", m.to_string(), class.n, class.tag);
    }

    // The parameter shadow behind the classification.
    println!();
    let m = parse_multisegment("[-3/2,3/2]@one+[-1/2,1/2]@one", &universe).unwrap();
    println!("factors of {m}:");
    for factor in param_factors(&m) {
        println!("  {factor}");
    }
    let class = bc_class(&m, &universe).unwrap();
    println!(
        "odd-multiplicity self-dual factor types: s = {}, parities {:?} -> {}",
        class.s,
        class
            .parity_set
            .iter()
            .map(|p| p.to_i8())
            .collect::<Vec<_>>(),
        class.tag
    );
}
