//! Oracle: reduction of gracious strategies to an ordinary Emerson-Lei game.
//!
//! ∃ proposes every move, including those of ∀, together with a step of a
//! nondeterministic Büchi automaton for the weak objective. ∀ either accepts the proposal
//! or deviates; a deviation emits a fresh color `f` and restarts the automaton. Accepting
//! automaton steps emit `f` as well, so ∃ must satisfy `strong ∧ Inf f`: either ∀
//! deviates forever, or the play eventually cooperates and meets the weak objective.

use std::collections::HashMap;

use super::SolveError;
use crate::game::{Arena, Color, ColorSet, ElFormula, ObligingGame, Owner, MAX_COLORS};
use crate::lar::{paritize, zielonka, Permutation};

/// The automaton has up to `1 + k·2^k` states.
pub const PRIOR_WEAK_LIMIT: usize = 8;

/// Guess-and-verify Büchi automaton: wait, then commit to an infinity set `I` satisfying
/// the weak objective and cycle through its colors.
struct WeakAutomaton {
    /// `(I, j)` for each state; state 0 waits.
    states: Vec<(ColorSet, usize)>,
}

impl WeakAutomaton {
    fn new(game: &ObligingGame) -> WeakAutomaton {
        let mut states = vec![(ColorSet::EMPTY, 0)];
        for i in game.weak_colors().subsets() {
            if game.weak().eval(i) {
                for j in 0..i.len().max(1) {
                    states.push((i, j));
                }
            }
        }
        WeakAutomaton { states }
    }

    fn index(&self, set: ColorSet, j: usize) -> usize {
        self.states.iter().position(|&s| s == (set, j)).unwrap()
    }

    /// Successor states on reading `a`, with whether the step is accepting.
    fn step(&self, q: usize, a: ColorSet) -> Vec<(usize, bool)> {
        if q == 0 {
            let mut out = vec![(0, false)];
            out.extend((1..self.states.len()).filter(|&s| self.states[s].1 == 0).map(|s| (s, false)));
            return out;
        }
        let (set, j) = self.states[q];
        if !a.is_subset(set) {
            return Vec::new();
        }
        let Some(c) = set.iter().nth(j) else {
            return vec![(q, true)];
        };
        if a.contains(c) {
            let next = (j + 1) % set.len();
            vec![(self.index(set, next), next == 0)]
        } else {
            vec![(q, false)]
        }
    }
}

/// Gracious winning region computed through the proposal game.
pub fn oracle_prior_reduction(game: &ObligingGame) -> Result<Vec<bool>, SolveError> {
    if game.k() > PRIOR_WEAK_LIMIT {
        return Err(SolveError::TooManyWeakColors { k: game.k(), limit: PRIOR_WEAK_LIMIT });
    }
    let fresh_id = game.color_names().len();
    if fresh_id >= MAX_COLORS {
        return Err(SolveError::Internal("no color left for the deviation marker".into()));
    }
    let fresh = ColorSet::singleton(Color(fresh_id));
    let arena = game.arena();
    let aut = WeakAutomaton::new(game);
    let (strong, weak) = (game.strong_colors(), game.weak_colors());

    let mut owners = Vec::new();
    let mut edges = Vec::new();
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut todo = Vec::new();
    let mut node = |v: usize, q: usize, owners: &mut Vec<Owner>, todo: &mut Vec<(usize, usize, usize)>| {
        *index.entry((v, q)).or_insert_with(|| {
            owners.push(Owner::Exists);
            todo.push((v, q, owners.len() - 1));
            owners.len() - 1
        })
    };
    let starts: Vec<usize> = (0..game.n()).map(|v| node(v, 0, &mut owners, &mut todo)).collect();
    while let Some((v, q, x)) = todo.pop() {
        for &(w, cs) in arena.successors(v) {
            for (q2, acc) in aut.step(q, cs.intersection(weak)) {
                let colors = cs.intersection(strong).union(if acc { fresh } else { ColorSet::EMPTY });
                let y = node(w, q2, &mut owners, &mut todo);
                if arena.owner(v) == Owner::Exists {
                    edges.push((x, y, colors));
                    continue;
                }
                // ∀ answers the proposal (w, q2)
                owners.push(Owner::Forall);
                let p = owners.len() - 1;
                edges.push((x, p, ColorSet::EMPTY));
                edges.push((p, y, colors));
                for &(w2, cs2) in arena.successors(v) {
                    if w2 != w {
                        let z = node(w2, 0, &mut owners, &mut todo);
                        edges.push((p, z, cs2.intersection(strong).union(fresh)));
                    }
                }
            }
        }
    }
    // nodes without any automaton move lose: give them a losing self-loop
    let mut has_out = vec![false; owners.len()];
    for &(s, _, _) in &edges {
        has_out[s] = true;
    }
    let sink_needed: Vec<usize> = (0..owners.len()).filter(|&s| !has_out[s]).collect();
    for s in sink_needed {
        edges.push((s, s, ColorSet::EMPTY));
    }
    let product = Arena::unnamed(owners, edges).map_err(|e| SolveError::Internal(e.to_string()))?;
    let phi = ElFormula::and(game.strong().clone(), ElFormula::Inf(Color(fresh_id)));
    let p = paritize(&product, &phi, &Permutation::identity(phi.colors()));
    let won = p.exists_region(&zielonka(&p.game));
    Ok(starts.into_iter().map(|s| won[s]).collect())
}
