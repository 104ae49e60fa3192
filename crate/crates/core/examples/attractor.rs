//! One DAG-attractor step of the certificate game: which (node, permutation) pairs can
//! propose a certificate whose exits all land in a given target.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use oblige::io::fixture;
use oblige::solver::Attractor;

pub fn run() -> String {
    let mut out = String::new();
    let game = fixture("ex1-dashed").unwrap();
    let attr = Attractor::new(&game);
    writeln!(out, "{} permutations, {} real nodes, {} priorities", attr.perms(), attr.real_nodes(), attr.priorities())
        .unwrap();
    let empty = vec![FixedBitSet::with_capacity(attr.real_nodes()); attr.priorities()];
    let mut full = FixedBitSet::with_capacity(attr.real_nodes());
    full.insert_range(..);
    let everything = vec![full; attr.priorities()];
    for (label, vbar) in [("nothing", &empty), ("everything", &everything)] {
        let won = attr.attract(vbar).unwrap();
        writeln!(out, "target {label}: {} of {} real nodes attracted", won.count_ones(..), attr.real_nodes()).unwrap();
    }
    // the certificate the attractor builds for v1 under the first permutation
    let v1 = game.arena().node_index("v1").unwrap();
    if let Some(cert) = attr.certificate(v1, 0, &everything).unwrap() {
        writeln!(out, "v1: {}", cert.display(&game)).unwrap();
        for e in attr.certificate_exits(&cert, 0) {
            writeln!(
                out,
                "  exit at position {} to {} with priority {}",
                e.position,
                game.arena().name(e.target),
                e.priority
            )
            .unwrap();
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
