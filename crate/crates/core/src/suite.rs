//! Seeded game corpora, oracle agreement and timing, shared by `selftest`, `bench` and
//! the test suites.

use std::time::{Duration, Instant};

use crate::game::ObligingGame;
use crate::io::{random_game, ObjectiveClass};
use crate::solver::{
    oracle_explicit_certificate_game, oracle_prior_reduction, solve, ExplicitOptions, SolveError, SolveOptions,
};

/// Strong objectives of the agreement corpus; all of them mention at least one color.
pub const STRONG_CLASSES: [ObjectiveClass; 4] =
    [ObjectiveClass::Streett, ObjectiveClass::Rabin, ObjectiveClass::GenBuchi, ObjectiveClass::El];

/// Largest game for which the explicit certificate game is built in the corpus.
pub const EXPLICIT_MAX_NODES: usize = 3;

/// The `seed`-th corpus game: up to 5 nodes and up to 3 colors, strong objective
/// cycling through [`STRONG_CLASSES`], weak objective through all classes.
pub fn corpus_game(seed: u64) -> ObligingGame {
    let s = seed as usize;
    let nodes = 1 + s % 5;
    let colors = 1 + (s / 5) % 3;
    let strong = STRONG_CLASSES[(s / 15) % STRONG_CLASSES.len()];
    let weak = ObjectiveClass::ALL[(s / 60) % ObjectiveClass::ALL.len()];
    let density = [0.3, 0.5, 0.8][(s / 7) % 3];
    random_game(seed, nodes, colors, density, strong, weak).expect("corpus parameters are valid")
}

/// Regions computed by the three engines on one game.
#[derive(Clone, Debug)]
pub struct Agreement {
    pub main: Vec<bool>,
    pub prior: Vec<bool>,
    pub explicit: Option<Vec<bool>>,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        self.main == self.prior && self.explicit.as_ref().is_none_or(|e| *e == self.main)
    }
}

pub fn agreement(game: &ObligingGame) -> Result<Agreement, SolveError> {
    let main = solve(game, &SolveOptions::default())?.region;
    let prior = oracle_prior_reduction(game)?;
    let explicit = if game.n() <= EXPLICIT_MAX_NODES {
        Some(oracle_explicit_certificate_game(game, &ExplicitOptions::default())?)
    } else {
        None
    };
    Ok(Agreement { main, prior, explicit })
}

#[derive(Clone, Debug, Default)]
pub struct AgreementSummary {
    pub games: usize,
    pub explicit_checked: usize,
    pub won_nodes: usize,
    pub lost_nodes: usize,
    pub disagreements: Vec<u64>,
}

/// Runs [`agreement`] on the corpus games `0..count`.
pub fn agreement_suite(count: u64) -> Result<AgreementSummary, SolveError> {
    let mut sum = AgreementSummary::default();
    for seed in 0..count {
        let g = corpus_game(seed);
        let a = agreement(&g)?;
        sum.games += 1;
        sum.explicit_checked += a.explicit.is_some() as usize;
        let won = a.main.iter().filter(|&&b| b).count();
        sum.won_nodes += won;
        sum.lost_nodes += a.main.len() - won;
        if !a.agrees() {
            sum.disagreements.push(seed);
        }
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Cert,
    Prior,
    Explicit,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Cert, Engine::Prior, Engine::Explicit];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Cert => "cert",
            Engine::Prior => "prior",
            Engine::Explicit => "explicit",
        }
    }

    pub fn region(self, game: &ObligingGame) -> Result<Vec<bool>, SolveError> {
        match self {
            Engine::Cert => Ok(solve(game, &SolveOptions::default())?.region),
            Engine::Prior => oracle_prior_reduction(game),
            Engine::Explicit => oracle_explicit_certificate_game(game, &ExplicitOptions::default()),
        }
    }
}

/// Timing of one engine on the bench games of one size.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub nodes: usize,
    pub engine: Engine,
    pub games: usize,
    pub total: Duration,
    pub max: Duration,
    /// Total fixpoint iterations (main solver only).
    pub iterations: u64,
}

/// The `seed`-th bench game with `nodes` nodes: three colors, strong objective from
/// [`STRONG_CLASSES`], generalized Büchi weak objective.
pub fn bench_game(nodes: usize, seed: u64) -> ObligingGame {
    let strong = STRONG_CLASSES[seed as usize % STRONG_CLASSES.len()];
    random_game(seed, nodes, 3, 0.5, strong, ObjectiveClass::GenBuchi).expect("bench parameters are valid")
}

pub fn bench(sizes: &[usize], seeds: u64, engines: &[Engine]) -> Result<Vec<BenchRow>, SolveError> {
    let mut rows = Vec::new();
    for &n in sizes {
        for &engine in engines {
            let mut row = BenchRow { nodes: n, engine, games: 0, total: Duration::ZERO, max: Duration::ZERO, iterations: 0 };
            for seed in 0..seeds {
                let g = bench_game(n, seed);
                let t = Instant::now();
                if engine == Engine::Cert {
                    row.iterations += solve(&g, &SolveOptions::default())?.stats.iterations.iter().sum::<u64>();
                } else {
                    engine.region(&g)?;
                }
                let dt = t.elapsed();
                row.games += 1;
                row.total += dt;
                row.max = row.max.max(dt);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}
