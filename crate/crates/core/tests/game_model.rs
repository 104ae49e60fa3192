mod common;

use common::{colors, ids};
use oblige::game::{Arena, Color, ColorSet, ElFormula, Lasso, Owner, PathError};
use oblige::io::fixture;

#[test]
fn ex1_formulas() {
    let g = fixture("ex1").unwrap();
    let abd = colors(&g, "abd");
    assert!(g.strong().eval(abd));
    assert!(!g.weak().eval(abd));
    assert!(ElFormula::Inf(Color(0)).eval(ColorSet::singleton(Color(0))));
}

#[test]
fn lasso_infinity_sets() {
    let g = fixture("ex1").unwrap();
    let l = Lasso::new(vec![], ids(&g, "v1 v2 v4 v5"));
    assert_eq!(g.lasso_infinity_set(&l).unwrap(), colors(&g, "ab"));

    let g = fixture("ex10").unwrap();
    // the loop y z z closes with z -> y
    let l = Lasso::new(ids(&g, "x"), ids(&g, "y z z"));
    assert_eq!(g.lasso_infinity_set(&l).unwrap(), colors(&g, "acd"));
    let broken = Lasso::new(ids(&g, "x"), ids(&g, "z"));
    assert_eq!(g.lasso_infinity_set(&broken), Err(PathError::MissingEdge("x".into(), "z".into())));

    let arena = Arena::unnamed(vec![Owner::Exists], [(0, 0, ColorSet::EMPTY)]).unwrap();
    assert_eq!(Lasso::new(vec![], vec![0]).infinity_set(&arena).unwrap(), ColorSet::EMPTY);
}

#[test]
fn fingerprints_on_the_extraction_example() {
    let g = fixture("ex10").unwrap();
    let s = g.strong_colors();
    assert_eq!(g.fingerprint(&ids(&g, "x"), s).unwrap(), ColorSet::EMPTY);
    assert_eq!(g.fingerprint(&ids(&g, "x y y z"), s).unwrap(), colors(&g, "ab"));
    assert_eq!(g.fingerprint(&ids(&g, "x y y z z"), s).unwrap(), colors(&g, "abc"));
    assert!(g.fingerprint(&ids(&g, "x z"), s).is_err());
}

#[test]
fn objective_colors_and_sizes() {
    let g = fixture("ex10").unwrap();
    assert_eq!((g.n(), g.d(), g.k()), (3, 3, 1));
    assert_eq!(g.strong_colors(), colors(&g, "abc"));
    assert_eq!(g.weak_colors(), colors(&g, "d"));
    let g = fixture("ex1").unwrap();
    assert_eq!((g.d(), g.k()), (4, 2));
}

#[test]
fn negation_is_de_morgan() {
    let (a, b) = (Color(0), Color(1));
    let f = ElFormula::or(ElFormula::Fin(a), ElFormula::Inf(b));
    assert_eq!(f.negate(), ElFormula::and(ElFormula::Inf(a), ElFormula::Fin(b)));
    for s in ColorSet::full(2).subsets() {
        assert_eq!(f.negate().eval(s), !f.eval(s));
    }
}

#[test]
fn parity_encoding() {
    let p: Vec<Color> = (0..3).map(Color).collect();
    let f = ElFormula::parity(&p).unwrap();
    for s in ColorSet::full(3).subsets() {
        let max = s.iter().map(|c| c.0).max();
        assert_eq!(f.eval(s), max.is_some_and(|m| m % 2 == 0), "{s:?}");
    }
    assert!(ElFormula::streett(&[]).is_err());
}
