//! The certificate-game solver next to the two oracle solvers on a handful of seeded
//! random games.

use std::fmt::Write as _;

use oblige::suite::{agreement, corpus_game};

fn show(region: &[bool]) -> String {
    region.iter().map(|&b| if b { 'E' } else { '.' }).collect()
}

pub fn run() -> String {
    let mut out = String::new();
    writeln!(out, "seed  n  cert   prior  explicit").unwrap();
    for seed in [3, 17, 42, 77, 128, 199] {
        let game = corpus_game(seed);
        let a = agreement(&game).unwrap();
        let explicit = a.explicit.as_deref().map_or("-".to_string(), show);
        writeln!(
            out,
            "{seed:>4} {:>2}  {:<6} {:<6} {:<8} {}",
            game.n(),
            show(&a.main),
            show(&a.prior),
            explicit,
            if a.agrees() { "agree" } else { "DISAGREE" }
        )
        .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
