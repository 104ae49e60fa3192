use thiserror::Error;

use super::parse_game;
use crate::game::ObligingGame;

pub const FIXTURE_NAMES: [&str; 3] = ["ex1", "ex1-dashed", "ex10"];

#[derive(Debug, Error)]
#[error("unknown fixture `{0}` (known: ex1, ex1-dashed, ex10)")]
pub struct UnknownFixture(pub String);

pub fn fixture_text(name: &str) -> Result<&'static str, UnknownFixture> {
    match name {
        "ex1" => Ok(include_str!("../../fixtures/ex1.oblige")),
        "ex1-dashed" => Ok(include_str!("../../fixtures/ex1-dashed.oblige")),
        "ex10" => Ok(include_str!("../../fixtures/ex10.oblige")),
        other => Err(UnknownFixture(other.to_string())),
    }
}

/// One of the bundled example games.
pub fn fixture(name: &str) -> Result<ObligingGame, UnknownFixture> {
    let text = fixture_text(name)?;
    Ok(parse_game(text).expect("bundled fixture parses"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{ElFormula, Owner};
    use crate::io::{normalize, serialize_game};

    #[test]
    fn ex1_shape() {
        let g = fixture("ex1").unwrap();
        assert_eq!((g.n(), g.arena().edge_count()), (5, 7));
        let exists: Vec<&str> = (0..5)
            .filter(|&v| g.arena().owner(v) == Owner::Exists)
            .map(|v| g.arena().name(v))
            .collect();
        assert_eq!(exists, ["v1", "v4"]);
        let [a, b, c, d] = ["a", "b", "c", "d"].map(|x| g.color_index(x).unwrap());
        assert_eq!(g.strong(), &ElFormula::streett(&[(a, b), (c, d)]).unwrap());
        assert_eq!(g.weak(), &ElFormula::gen_buchi(&[a, c]).unwrap());
    }

    #[test]
    fn ex1_dashed_adds_one_edge() {
        let g = fixture("ex1").unwrap();
        let h = fixture("ex1-dashed").unwrap();
        let mut edges: Vec<_> = g.arena().edges().collect();
        edges.push((4, 3, Default::default()));
        edges.sort();
        assert_eq!(h.arena().edges().collect::<Vec<_>>(), edges);
    }

    #[test]
    fn fixtures_are_canonical() {
        for name in FIXTURE_NAMES {
            let text = fixture_text(name).unwrap();
            assert_eq!(serialize_game(&fixture(name).unwrap()), normalize(text), "{name}");
        }
    }

    #[test]
    fn unknown_name() {
        assert!(fixture("ex2").is_err());
    }
}
