mod common;

use oblige::game::GameError;
use oblige::io::{fixture, fixture_text, normalize, parse_game, serialize_game, ParseErrorKind, FIXTURE_NAMES};

#[test]
fn fixtures_round_trip() {
    for name in FIXTURE_NAMES {
        let text = fixture_text(name).unwrap();
        let g = parse_game(text).unwrap();
        assert_eq!(normalize(&serialize_game(&g)), normalize(text), "{name}");
        assert_eq!(parse_game(&serialize_game(&g)).unwrap(), g);
    }
}

#[test]
fn dead_end_is_rejected() {
    let text = "oblige 1\nnodes: 2\nowners: EA\ncolors: a\nedge 0 1 {a}\nstrong: Inf(a)\nweak: true\n";
    let e = parse_game(text).unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::Invalid(GameError::NoSuccessor("1".into())));
    assert!(e.to_string().contains("has no successor"));
}

#[test]
fn errors_carry_positions() {
    let e = parse_game("oblige 2\n").unwrap_err();
    assert_eq!((e.line, e.kind), (1, ParseErrorKind::UnsupportedVersion("2".into())));
    let text = "oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {z}\nstrong: true\nweak: true\n";
    let e = parse_game(text).unwrap_err();
    assert_eq!(e.line, 5);
    assert_eq!(e.kind, ParseErrorKind::UnknownColor("z".into()));
    let text = "oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {a}\nstrong: Inf(a) &\nweak: true\n";
    assert_eq!(parse_game(text).unwrap_err().line, 6);
}

#[test]
fn formula_precedence() {
    let text = "oblige 1\nnodes: 1\nowners: E\ncolors: a b c\nedge 0 0 {a}\nstrong: Inf(a) | Inf(b) & Inf(c)\nweak: (Inf(a) | Inf(b)) & Inf(c)\n";
    let g = parse_game(text).unwrap();
    let a = g.color_index("a").unwrap();
    let only_a = [a].into_iter().collect();
    assert!(g.strong().eval(only_a));
    assert!(!g.weak().eval(only_a));
}

#[test]
fn example_one_shape() {
    let g = fixture("ex1").unwrap();
    assert_eq!((g.n(), g.arena().edge_count()), (5, 7));
    let h = fixture("ex1-dashed").unwrap();
    assert_eq!(h.arena().edge_count(), 8);
    let (v5, v4) = (h.arena().node_index("v5").unwrap(), h.arena().node_index("v4").unwrap());
    assert_eq!(h.arena().edge_colors(v5, v4), Some(Default::default()));
}
