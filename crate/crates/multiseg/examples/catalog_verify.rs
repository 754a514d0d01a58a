//! Replay the built-in catalog of worked counterexamples.
//!
//! Run with: `cargo run --example catalog_verify`

use multiseg::catalog::{catalog, verify_catalog};

fn main() {
    for entry in catalog() {
        println!("{}", entry.id);
        println!("  input: {:?}", entry.input);
        println!("  {}", entry.provenance);
        println!();
    }

    let mut all_pass = true;
    for result in verify_catalog() {
        for check in &result.checks {
            println!(
                "{:<36} {:<28} expected {:<10} got {:<10} {}",
                result.id,
                check.name,
                check.expected,
                check.got,
                if check.pass { "ok" } else { "MISMATCH" }
            );
            all_pass &= check.pass;
        }
    }
    println!();
    println!(
        "catalog: {}",
        if all_pass {
            "all entries verify"
        } else {
            "FAILED"
        }
    );
    assert!(all_pass);
}
