//! A strategy that alternates at v4 is gracious on the ex1 fixture, but once the edge
//! v5 -> v4 exists the environment can avoid color b forever.

use std::fmt::Write as _;

use oblige::game::ObligingGame;
use oblige::io::fixture;
use oblige::strategy::{verify, Strategy};

const ALTERNATING: &str = "\
strategy 1
memory: 2
mem 0 to-v5
mem 1 to-v1
init v1 0
init v2 0
init v3 0
init v4 0
init v5 0
move v1 0 v2
move v1 1 v2
move v4 0 v5
move v4 1 v1
";

fn alternating(game: &ObligingGame) -> Strategy {
    let mut s = Strategy::from_text(game, ALTERNATING).unwrap();
    let v4 = game.arena().node_index("v4").unwrap();
    for (src, dst, _) in game.arena().edges() {
        for m in 0..2 {
            s.set_update(m, src, dst, if src == v4 { 1 - m } else { m });
        }
    }
    s
}

pub fn run() -> String {
    let mut out = String::new();
    for name in ["ex1", "ex1-dashed"] {
        let game = fixture(name).unwrap();
        let report = verify(&game, &alternating(&game)).unwrap();
        write!(out, "{name}: strong {} gracious {}", report.strong_ok, report.gracious_ok).unwrap();
        match &report.counterexample {
            Some(c) => writeln!(out, "\n  {}", c.display(&game)).unwrap(),
            None => writeln!(out).unwrap(),
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
