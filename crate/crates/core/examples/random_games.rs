//! Seeded random games: generation, the text format, and a JSON solve report.

use std::fmt::Write as _;

use oblige::io::{parse_game, random_game, serialize_game, ObjectiveClass};
use oblige::solver::report::Report;
use oblige::solver::{solve, SolveOptions};

pub fn run() -> String {
    let mut out = String::new();
    let game = random_game(7, 4, 3, 0.5, ObjectiveClass::Streett, ObjectiveClass::GenBuchi).unwrap();
    let text = serialize_game(&game);
    assert_eq!(text, serialize_game(&random_game(7, 4, 3, 0.5, ObjectiveClass::Streett, ObjectiveClass::GenBuchi).unwrap()));
    out.push_str(&text);
    writeln!(out, "parses back to the same game: {}", parse_game(&text).unwrap() == game).unwrap();
    let result = solve(&game, &SolveOptions::default()).unwrap();
    let mut report = Report::from_solve(&game, &result);
    // timings differ run to run
    report.stats = None;
    out.push_str(&report.to_json());
    out.push('\n');
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
