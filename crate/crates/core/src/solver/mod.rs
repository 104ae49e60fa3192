//! Gracious winning regions via certificates.
//!
//! [`solve`] is the main solver. [`oracle_prior_reduction`] and
//! [`oracle_explicit_certificate_game`] compute the same region along independent
//! routes and exist for cross-checking.

mod attractor;
mod explicit;
mod fixpoint;
mod prior;
pub mod report;

use thiserror::Error;

pub use attractor::{Attractor, Exit};
pub use explicit::{oracle_explicit_certificate_game, ExplicitOptions};
pub use fixpoint::{solve, SolveResult, SolveStats};
pub use prior::{oracle_prior_reduction, PRIOR_WEAK_LIMIT};

use crate::emptiness::EmptinessError;

/// Default bound on the number of permutations of the strong colors (`d ≤ 4`).
pub const DEFAULT_MAX_PERMS: usize = 24;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub max_perms: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { max_perms: DEFAULT_MAX_PERMS }
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("{perms} permutations of {d} strong colors exceed the limit of {limit}")]
    TooManyPermutations { d: usize, perms: usize, limit: usize },
    #[error("{k} weak colors exceed the limit of {limit} for the prior reduction")]
    TooManyWeakColors { k: usize, limit: usize },
    #[error("more than {limit} certificate behaviors")]
    CertificateBudget { limit: usize },
    #[error(transparent)]
    Emptiness(#[from] EmptinessError),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// Nodes won by ∃ according to the main solver, as a convenience for callers that only
/// need the region.
pub fn winning_region(game: &crate::game::ObligingGame) -> Result<Vec<bool>, SolveError> {
    Ok(solve(game, &SolveOptions::default())?.region)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{fixture, random_game, ObjectiveClass};

    #[test]
    fn fixtures_are_won_everywhere() {
        for name in ["ex1", "ex1-dashed"] {
            let g = fixture(name).unwrap();
            let r = solve(&g, &SolveOptions::default()).unwrap();
            assert_eq!(r.region, vec![true; 5], "{name}");
        }
    }

    #[test]
    fn ex10_oracles_agree() {
        let g = fixture("ex10").unwrap();
        let main = solve(&g, &SolveOptions::default()).unwrap().region;
        assert_eq!(main, oracle_prior_reduction(&g).unwrap());
        assert_eq!(main, oracle_explicit_certificate_game(&g, &ExplicitOptions::default()).unwrap());
    }

    #[test]
    fn oracles_agree_on_random_games() {
        let classes = ObjectiveClass::ALL;
        for seed in 0..60u64 {
            let n = 1 + (seed as usize % 4);
            let s = classes[seed as usize % classes.len()];
            let w = classes[(seed as usize / 3) % classes.len()];
            let g = random_game(seed, n, 3, 0.5, s, w).unwrap();
            let main = solve(&g, &SolveOptions::default()).unwrap();
            let prior = oracle_prior_reduction(&g).unwrap();
            assert_eq!(main.region, prior, "seed {seed}\n{}", crate::io::serialize_game(&g));
            if n <= 3 {
                let explicit = oracle_explicit_certificate_game(&g, &ExplicitOptions::default()).unwrap();
                assert_eq!(main.region, explicit, "seed {seed}\n{}", crate::io::serialize_game(&g));
            }
        }
    }
}
