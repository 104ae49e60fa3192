//! Emptiness of small Emerson-Lei automata with the class-specific checkers, the
//! generic subset enumeration, and an accepting lasso.

use std::fmt::Write as _;

use oblige::emptiness::{classify, ElAutomaton, RabinPair, StreettPair};
use oblige::game::{Color, ColorSet, ElFormula};

fn set(colors: &[usize]) -> ColorSet {
    colors.iter().map(|&c| Color(c)).collect()
}

pub fn run() -> String {
    let mut out = String::new();
    let (a, b, c) = (Color(0), Color(1), Color(2));
    // 0 -a-> 1 -b-> 0, 1 -c-> 1
    let trans = vec![(0, 1, set(&[0])), (1, 0, set(&[1])), (1, 1, set(&[2]))];
    let formulas = [
        ("genBuchi a,b", ElFormula::gen_buchi(&[a, b]).unwrap()),
        ("Streett (a,c)", ElFormula::streett(&[(a, c)]).unwrap()),
        ("Rabin (c,b)", ElFormula::rabin(&[(c, b)]).unwrap()),
        ("Inf a & Fin a", ElFormula::and(ElFormula::Inf(a), ElFormula::Fin(a))),
    ];
    for (label, phi) in formulas {
        let aut = ElAutomaton::new(2, trans.clone(), phi, Some(0));
        let class = format!("{:?}", classify(aut.acceptance()));
        let class = class.split('(').next().unwrap();
        let empty = aut.is_empty().unwrap();
        let generic = aut.is_empty_generic().unwrap();
        write!(out, "{label:<14} as {class:<9} empty {empty} (generic {generic})").unwrap();
        if !empty {
            let lasso = aut.witness_lasso(0).unwrap();
            let (stem, cycle) = lasso.states(&aut);
            write!(out, ", lasso {stem:?} ~ {cycle:?}").unwrap();
        }
        writeln!(out).unwrap();
    }
    let aut = ElAutomaton::new(2, trans, ElFormula::True, Some(0));
    let rabin = [RabinPair { fin: ColorSet::EMPTY, inf: set(&[1]) }];
    let streett = [StreettPair { req: Some(set(&[0])), resp: set(&[2]) }];
    writeln!(out, "Rabin (-,b) and Streett (a,c): empty {}", aut.is_empty_rabin_and_streett(&rabin, &streett))
        .unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
