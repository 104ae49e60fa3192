//! Lazy later-appearance-record paritization of an Emerson-Lei game and Zielonka's
//! algorithm on the result, once per initial permutation.

use std::fmt::Write as _;

use oblige::game::{ElFormula, Owner};
use oblige::io::fixture;
use oblige::lar::{paritize, zielonka, Permutation};

pub fn run() -> String {
    let mut out = String::new();
    let g = fixture("ex1").unwrap();
    // the plain Emerson-Lei game strong & weak with the arena's owners: here the
    // environment does not cooperate, so it can skip c forever and wins everywhere
    let phi = ElFormula::and(g.strong().clone(), g.weak().clone());
    let mut first = None;
    for pi in Permutation::all(phi.colors()) {
        let p = paritize(g.arena(), &phi, &pi);
        let solution = zielonka(&p.game);
        let region = p.exists_region(&solution);
        let shown: String = region.iter().map(|&b| if b { 'E' } else { 'A' }).collect();
        let names: Vec<&str> = pi.colors().iter().map(|&c| g.color_names()[c.0].as_str()).collect();
        writeln!(
            out,
            "init [{}]: {} parity nodes, max priority {}, winners {shown}",
            names.join(" "),
            p.game.node_count(),
            p.game.max_priority()
        )
        .unwrap();
        assert!(first.get_or_insert(region.clone()) == &region);
    }
    let exists = (0..g.n()).filter(|&v| g.arena().owner(v) == Owner::Exists).count();
    writeln!(out, "{} nodes, {exists} owned by exists, same winners for every permutation", g.n()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
