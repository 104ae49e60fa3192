mod common;

use oblige::emptiness::{classify, AcceptanceClass, ElAutomaton, RabinPair, StreettPair};
use oblige::game::{Color, ColorSet, ElFormula};
use oblige::io::fixture;

fn set(cs: &[usize]) -> ColorSet {
    cs.iter().map(|&c| Color(c)).collect()
}

#[test]
fn specialized_checkers_agree_with_generic() {
    for class in ["genbuchi", "rabin", "streett", "rabin-streett"] {
        for seed in 0..300 {
            common::emptiness_agrees(class, seed).unwrap();
        }
    }
}

#[test]
fn rabin_and_streett_examples() {
    // a single state with a {b} self-loop
    let aut = ElAutomaton::new(1, vec![(0, 0, set(&[1]))], ElFormula::True, None);
    assert!(aut.is_empty_rabin_and_streett(&[], &[]));
    let rabin = [RabinPair { fin: ColorSet::EMPTY, inf: set(&[1]) }];
    let streett = [StreettPair { req: Some(set(&[0])), resp: set(&[2]) }];
    assert!(!aut.is_empty_rabin_and_streett(&rabin, &streett));
}

#[test]
fn ex10_automaton_accepts_from_everywhere() {
    let g = fixture("ex10").unwrap();
    let trans: Vec<_> = g.arena().edges().collect();
    let phi = ElFormula::and(g.strong().clone(), g.weak().clone());
    let aut = ElAutomaton::new(3, trans, phi, None);
    assert_eq!(aut.nonempty_states().unwrap(), vec![true; 3]);
    assert!(!aut.is_empty_generic().unwrap());
    let x = g.arena().node_index("x").unwrap();
    let lasso = aut.witness_lasso(x).unwrap();
    assert!(lasso.is_well_formed(&aut));
    let inf = lasso.infinity_set(&aut);
    assert!(common::colors(&g, "acd").is_subset(inf) && !inf.contains(g.color_index("b").unwrap()));
}

#[test]
fn witness_lassos_satisfy_the_acceptance() {
    for seed in 0..200u64 {
        let g = oblige::suite::corpus_game(seed);
        let trans: Vec<_> = g.arena().edges().collect();
        let aut = ElAutomaton::new(g.n(), trans, ElFormula::and(g.strong().clone(), g.weak().clone()), None);
        let region = aut.nonempty_states().unwrap();
        let bound = (g.color_names().len() + 1) * (g.n() + 1);
        for (q, &nonempty) in region.iter().enumerate() {
            match aut.witness_lasso(q) {
                Ok(l) => {
                    assert!(nonempty);
                    assert!(l.is_well_formed(&aut) && aut.transitions()[l.stem.first().unwrap_or(&l.cycle[0]).to_owned()].0 == q);
                    assert!(aut.acceptance().eval(l.infinity_set(&aut)));
                    assert!(l.cycle.len() <= bound, "seed {seed}: loop {} > {bound}", l.cycle.len());
                }
                Err(_) => assert!(!nonempty),
            }
        }
    }
}

#[test]
fn region_is_backward_closed() {
    for seed in 0..200u64 {
        let g = oblige::suite::corpus_game(seed);
        let trans: Vec<_> = g.arena().edges().collect();
        let aut = ElAutomaton::new(g.n(), trans.clone(), g.strong().clone(), None);
        let region = aut.nonempty_states().unwrap();
        for (s, t, _) in trans {
            assert!(!region[t] || region[s]);
        }
    }
}

#[test]
fn classifier_shapes() {
    let (a, b) = (Color(0), Color(1));
    assert_eq!(classify(&ElFormula::gen_buchi(&[a, b]).unwrap()), AcceptanceClass::GenBuchi(set(&[0, 1])));
    assert!(matches!(classify(&ElFormula::streett(&[(a, b)]).unwrap()), AcceptanceClass::Streett(_)));
    assert!(matches!(classify(&ElFormula::rabin(&[(a, b), (b, a)]).unwrap()), AcceptanceClass::Rabin(_)));
    assert_eq!(classify(&ElFormula::True), AcceptanceClass::Constant(true));
    let aut = ElAutomaton::new(1, vec![(0, 0, set(&[0]))], ElFormula::rabin(&[(a, b), (b, a)]).unwrap(), None);
    assert!(aut.is_empty_gen_buchi().is_err());
}
