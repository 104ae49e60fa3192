//! Extract a gracious strategy from a solve result, verify it on the product with its
//! memory, and round-trip it through the text format.

use std::fmt::Write as _;

use oblige::io::fixture;
use oblige::solver::{solve, SolveOptions};
use oblige::strategy::{extract, verify, Strategy};

pub fn run() -> String {
    let mut out = String::new();
    let game = fixture("ex1").unwrap();
    let result = solve(&game, &SolveOptions::default()).unwrap();
    let extracted = extract(&game, &result).unwrap();
    let report = verify(&game, &extracted.strategy).unwrap();
    writeln!(
        out,
        "memory states: {} (occurrence-compressed {})",
        extracted.memory_count(),
        extracted.occurrence_memory(&result)
    )
    .unwrap();
    writeln!(
        out,
        "product states: {}, strong: {}, gracious: {}",
        report.product_states, report.strong_ok, report.gracious_ok
    )
    .unwrap();
    let text = extracted.strategy.to_text(&game);
    let back = Strategy::from_text(&game, &text).unwrap();
    writeln!(out, "text form: {} lines, round trip exact: {}", text.lines().count(), back == extracted.strategy)
        .unwrap();
    for line in text.lines().take(6) {
        writeln!(out, "  {line}").unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
