use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{Arena, Color, ColorSet, ElFormula, ObligingGame, Owner, MAX_COLORS};

/// Shape of a randomly drawn objective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectiveClass {
    True,
    Buchi,
    GenBuchi,
    Streett,
    Rabin,
    Parity,
    Gr1,
    /// Arbitrary positive formula of small depth.
    El,
}

impl ObjectiveClass {
    pub const ALL: [ObjectiveClass; 8] = [
        ObjectiveClass::True,
        ObjectiveClass::Buchi,
        ObjectiveClass::GenBuchi,
        ObjectiveClass::Streett,
        ObjectiveClass::Rabin,
        ObjectiveClass::Parity,
        ObjectiveClass::Gr1,
        ObjectiveClass::El,
    ];

    fn name(self) -> &'static str {
        match self {
            ObjectiveClass::True => "true",
            ObjectiveClass::Buchi => "buchi",
            ObjectiveClass::GenBuchi => "genbuchi",
            ObjectiveClass::Streett => "streett",
            ObjectiveClass::Rabin => "rabin",
            ObjectiveClass::Parity => "parity",
            ObjectiveClass::Gr1 => "gr1",
            ObjectiveClass::El => "el",
        }
    }
}

impl fmt::Display for ObjectiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectiveClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ObjectiveClass::ALL
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown objective class `{s}`"))
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum RandomGameError {
    #[error("node count must be positive")]
    NoNodes,
    #[error("edge density must lie in (0, 1], got {0}")]
    Density(f64),
    #[error("color count must be in 1..={MAX_COLORS}, got {0}")]
    Colors(usize),
}

fn color_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("c{i}")
    }
}

/// A reproducible random game. Both objectives range over all `colors` colors; each
/// node gets at least one successor and edge colors are filtered to the colors that
/// actually occur in an objective.
pub fn random_game(
    seed: u64,
    nodes: usize,
    colors: usize,
    density: f64,
    strong: ObjectiveClass,
    weak: ObjectiveClass,
) -> Result<ObligingGame, RandomGameError> {
    if nodes == 0 {
        return Err(RandomGameError::NoNodes);
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(RandomGameError::Density(density));
    }
    if colors == 0 || colors > MAX_COLORS {
        return Err(RandomGameError::Colors(colors));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let owners: Vec<Owner> = (0..nodes)
        .map(|_| if rng.gen_bool(0.5) { Owner::Exists } else { Owner::Forall })
        .collect();
    let strong_f = random_formula(&mut rng, strong, colors);
    let weak_f = random_formula(&mut rng, weak, colors);
    let relevant = strong_f.colors().union(weak_f.colors());

    let mut edges = Vec::new();
    for v in 0..nodes {
        let mut targets: Vec<usize> = (0..nodes).filter(|_| rng.gen_bool(density)).collect();
        if targets.is_empty() {
            targets.push(rng.gen_range(0..nodes));
        }
        for w in targets {
            let cs: ColorSet = (0..colors).map(Color).filter(|_| rng.gen_bool(0.35)).collect();
            edges.push((v, w, cs.intersection(relevant)));
        }
    }
    let arena = Arena::unnamed(owners, edges).expect("generated arena is valid");
    let names = (0..colors).map(color_name).collect();
    Ok(ObligingGame::new(arena, names, strong_f, weak_f).expect("generated game is valid"))
}

fn random_subset(rng: &mut ChaCha8Rng, colors: usize) -> Vec<Color> {
    let mut all: Vec<Color> = (0..colors).map(Color).collect();
    all.shuffle(rng);
    let size = rng.gen_range(1..=colors);
    all.truncate(size);
    all.sort();
    all
}

fn random_pairs(rng: &mut ChaCha8Rng, colors: usize) -> Vec<(Color, Color)> {
    let count = rng.gen_range(1..=colors.div_ceil(2).max(1));
    (0..count)
        .map(|_| {
            let a = Color(rng.gen_range(0..colors));
            let mut b = Color(rng.gen_range(0..colors));
            if colors > 1 {
                while b == a {
                    b = Color(rng.gen_range(0..colors));
                }
            }
            (a, b)
        })
        .collect()
}

fn random_formula(rng: &mut ChaCha8Rng, class: ObjectiveClass, colors: usize) -> ElFormula {
    match class {
        ObjectiveClass::True => ElFormula::True,
        ObjectiveClass::Buchi => ElFormula::buchi(Color(rng.gen_range(0..colors))),
        ObjectiveClass::GenBuchi => ElFormula::gen_buchi(&random_subset(rng, colors)).unwrap(),
        ObjectiveClass::Streett => ElFormula::streett(&random_pairs(rng, colors)).unwrap(),
        ObjectiveClass::Rabin => ElFormula::rabin(&random_pairs(rng, colors)).unwrap(),
        ObjectiveClass::Parity => {
            let mut prio = random_subset(rng, colors);
            prio.shuffle(rng);
            ElFormula::parity(&prio).unwrap()
        }
        ObjectiveClass::Gr1 => {
            ElFormula::gr1(&random_subset(rng, colors), &random_subset(rng, colors)).unwrap()
        }
        ObjectiveClass::El => random_tree(rng, colors, 3),
    }
}

fn random_tree(rng: &mut ChaCha8Rng, colors: usize, depth: u32) -> ElFormula {
    if depth == 0 || rng.gen_bool(0.35) {
        let c = Color(rng.gen_range(0..colors));
        return if rng.gen_bool(0.5) { ElFormula::Inf(c) } else { ElFormula::Fin(c) };
    }
    let a = random_tree(rng, colors, depth - 1);
    let b = random_tree(rng, colors, depth - 1);
    if rng.gen_bool(0.5) {
        ElFormula::and(a, b)
    } else {
        ElFormula::or(a, b)
    }
}
