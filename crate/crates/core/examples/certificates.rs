//! Certificate validity on the ex1 fixture and bounded certificate extraction on the
//! three-node ex10 fixture.

use std::fmt::Write as _;

use oblige::certificate::{extract_certificate, fingerprints_correspond, loop_bound, stem_bound, Certificate};
use oblige::game::{Lasso, ObligingGame};
use oblige::io::fixture;

fn ids(game: &ObligingGame, names: &str) -> Vec<usize> {
    names.split_whitespace().map(|s| game.arena().node_index(s).unwrap()).collect()
}

pub fn run() -> String {
    let mut out = String::new();

    let ex1 = fixture("ex1").unwrap();
    // (v1 v2 v4 v5)^w never sees c; (v1 v2 v3 v4 v1 v2 v4 v5)^w sees every color
    let short = Certificate::new(ids(&ex1, "v1"), ids(&ex1, "v2 v4 v5 v1"));
    let long = Certificate::new(ids(&ex1, "v1"), ids(&ex1, "v2 v3 v4 v1 v2 v4 v5 v1"));
    for cert in [&short, &long] {
        let inf = ex1.lasso_infinity_set(&cert.as_lasso()).unwrap();
        writeln!(
            out,
            "{}  recurring {}  valid: {}",
            cert.display(&ex1),
            ex1.format_colors(inf),
            cert.is_valid(&ex1).unwrap()
        )
        .unwrap();
    }

    let ex10 = fixture("ex10").unwrap();
    let witness = Lasso::new(ids(&ex10, "x y y z"), ids(&ex10, "y z z"));
    let cert = extract_certificate(&witness, &ex10).unwrap();
    writeln!(out, "witness x y y z ~ y z z").unwrap();
    writeln!(out, "extracted {}  valid: {}", cert.display(&ex10), cert.is_valid(&ex10).unwrap()).unwrap();
    writeln!(
        out,
        "stem {} <= {}, loop {} <= {}, fingerprints correspond: {}",
        cert.stem.len(),
        stem_bound(ex10.n(), ex10.d()),
        cert.cycle.len(),
        loop_bound(ex10.n(), ex10.d(), ex10.k()),
        fingerprints_correspond(&cert, &witness, &ex10)
    )
    .unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
