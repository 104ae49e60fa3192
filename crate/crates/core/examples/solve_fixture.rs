//! Solve the bundled example games and print who wins where, with one certificate per
//! won node.

use std::fmt::Write as _;

use oblige::io::{fixture, FIXTURE_NAMES};
use oblige::solver::{solve, SolveOptions};

pub fn run() -> String {
    let mut out = String::new();
    for name in FIXTURE_NAMES {
        let game = fixture(name).unwrap();
        let result = solve(&game, &SolveOptions::default()).unwrap();
        let won: Vec<&str> = result.winning_nodes().into_iter().map(|v| game.arena().name(v)).collect();
        writeln!(out, "{name}: exists wins at {}", won.join(" ")).unwrap();
        // permutation 0 is the initial (identity) one
        for v in result.winning_nodes() {
            if let Some(cert) = result.certificate(v, 0) {
                writeln!(out, "  {:>4}  {}", game.arena().name(v), cert.display(&game)).unwrap();
            }
        }
        writeln!(
            out,
            "  {} real nodes, {} attractor calls",
            result.stats.real_nodes, result.stats.attractor_calls
        )
        .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
