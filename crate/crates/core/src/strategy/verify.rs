//! Checking a strategy on the product of the arena with its memory.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use super::Strategy;
use crate::emptiness::{ElAutomaton, EmptinessError};
use crate::game::{ColorSet, ElFormula, Lasso, ObligingGame, Owner};

/// Why a strategy fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// A reachable product state has no move or no memory update; `path` leads there.
    Incomplete { path: Vec<usize>, memory: usize, missing: String },
    /// A compatible play violating the strong objective.
    Strong(Lasso),
    /// After `path` no compatible continuation satisfies the weak objective.
    Stuck { path: Vec<usize>, memory: usize },
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub strong_ok: bool,
    pub gracious_ok: bool,
    /// Memory states occurring in reachable product states.
    pub reachable_memory: usize,
    pub product_states: usize,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.strong_ok && self.gracious_ok
    }
}

impl Counterexample {
    pub fn display<'a>(&'a self, game: &'a ObligingGame) -> impl fmt::Display + 'a {
        CounterexampleDisplay { cex: self, game }
    }
}

struct CounterexampleDisplay<'a> {
    cex: &'a Counterexample,
    game: &'a ObligingGame,
}

impl fmt::Display for CounterexampleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.game;
        match self.cex {
            Counterexample::Incomplete { path, memory, missing } => {
                write!(f, "strategy undefined after {} in memory {memory}: {missing}", g.format_path(path))
            }
            Counterexample::Strong(l) => write!(
                f,
                "play {} ~ {} violates the strong objective (recurring colors {})",
                g.format_path(&l.stem),
                g.format_path(&l.cycle),
                g.format_colors(g.lasso_infinity_set(l).unwrap_or_default())
            ),
            Counterexample::Stuck { path, memory } => write!(
                f,
                "after {} in memory {memory} the weak objective can no longer be met",
                g.format_path(path)
            ),
        }
    }
}

struct Product {
    /// `(node, memory)` per state.
    states: Vec<(usize, usize)>,
    trans: Vec<(usize, usize, ColorSet)>,
    parent: Vec<Option<usize>>,
}

impl Product {
    fn path_to(&self, mut s: usize) -> Vec<usize> {
        let mut out = vec![s];
        while let Some(p) = self.parent[s] {
            out.push(p);
            s = p;
        }
        out.reverse();
        out
    }

    fn nodes(&self, states: &[usize]) -> Vec<usize> {
        states.iter().map(|&s| self.states[s].0).collect()
    }

    fn incomplete(&self, s: usize, missing: String) -> Counterexample {
        Counterexample::Incomplete { path: self.nodes(&self.path_to(s)), memory: self.states[s].1, missing }
    }

    fn automaton(&self, acceptance: ElFormula) -> ElAutomaton {
        ElAutomaton::new(self.states.len(), self.trans.clone(), acceptance, None)
    }
}

fn build(game: &ObligingGame, strategy: &Strategy) -> Result<Product, Counterexample> {
    let arena = game.arena();
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut p = Product { states: Vec::new(), trans: Vec::new(), parent: Vec::new() };
    let mut queue = VecDeque::new();
    for (v, m) in strategy.initial_nodes() {
        if let std::collections::hash_map::Entry::Vacant(e) = index.entry((v, m)) {
            e.insert(p.states.len());
            p.states.push((v, m));
            p.parent.push(None);
            queue.push_back(p.states.len() - 1);
        }
    }
    while let Some(s) = queue.pop_front() {
        let (v, m) = p.states[s];
        let succs: Vec<(usize, ColorSet)> = if arena.owner(v) == Owner::Exists {
            let Some(w) = strategy.next_move(v, m) else {
                return Err(p.incomplete(s, format!("no move at {}", arena.name(v))));
            };
            match arena.edge_colors(v, w) {
                Some(cs) => vec![(w, cs)],
                None => return Err(p.incomplete(s, format!("move {} -> {} is not an edge", arena.name(v), arena.name(w)))),
            }
        } else {
            arena.successors(v).to_vec()
        };
        for (w, cs) in succs {
            let Some(m2) = strategy.update(m, v, w) else {
                return Err(p.incomplete(s, format!("no update on {} -> {}", arena.name(v), arena.name(w))));
            };
            if m2 >= strategy.memory_count() {
                return Err(p.incomplete(s, format!("update to undeclared memory {m2}")));
            }
            let t = *index.entry((w, m2)).or_insert_with(|| {
                p.states.push((w, m2));
                p.parent.push(Some(s));
                queue.push_back(p.states.len() - 1);
                p.states.len() - 1
            });
            p.trans.push((s, t, cs));
        }
    }
    Ok(p)
}

fn strong_in(game: &ObligingGame, p: &Product) -> Result<Option<Counterexample>, EmptinessError> {
    let aut = p.automaton(game.strong().negate());
    let bad = aut.nonempty_states()?;
    let Some(s) = (0..p.states.len()).find(|&s| bad[s]) else {
        return Ok(None);
    };
    let lasso = aut.witness_lasso(s)?;
    let (stem, cycle) = lasso.states(&aut);
    let mut prefix = p.path_to(s);
    prefix.pop();
    prefix.extend(stem);
    let (prefix, cycle) = (p.nodes(&prefix), p.nodes(&cycle));
    let lasso = if prefix.is_empty() {
        let mut cycle = cycle;
        let first = cycle[0];
        cycle.rotate_left(1);
        Lasso::new(vec![first], cycle)
    } else {
        Lasso::new(prefix, cycle)
    };
    Ok(Some(Counterexample::Strong(lasso)))
}

fn gracious_in(game: &ObligingGame, p: &Product) -> Result<Option<Counterexample>, EmptinessError> {
    let live = p.automaton(game.weak().clone()).nonempty_states()?;
    Ok((0..p.states.len()).find(|&s| !live[s]).map(|s| Counterexample::Stuck {
        path: p.nodes(&p.path_to(s)),
        memory: p.states[s].1,
    }))
}

/// `Ok(())` iff every play compatible with the strategy satisfies the strong objective.
pub fn verify_strong(game: &ObligingGame, strategy: &Strategy) -> Result<Result<(), Counterexample>, EmptinessError> {
    let p = match build(game, strategy) {
        Ok(p) => p,
        Err(c) => return Ok(Err(c)),
    };
    Ok(strong_in(game, &p)?.map_or(Ok(()), Err))
}

/// `Ok(())` iff every compatible prefix extends to a compatible play satisfying the weak
/// objective.
pub fn verify_gracious(game: &ObligingGame, strategy: &Strategy) -> Result<Result<(), Counterexample>, EmptinessError> {
    let p = match build(game, strategy) {
        Ok(p) => p,
        Err(c) => return Ok(Err(c)),
    };
    Ok(gracious_in(game, &p)?.map_or(Ok(()), Err))
}

/// Both checks on one product.
pub fn verify(game: &ObligingGame, strategy: &Strategy) -> Result<VerificationReport, EmptinessError> {
    let p = match build(game, strategy) {
        Ok(p) => p,
        Err(c) => {
            return Ok(VerificationReport {
                strong_ok: false,
                gracious_ok: false,
                reachable_memory: 0,
                product_states: 0,
                counterexample: Some(c),
            })
        }
    };
    let strong = strong_in(game, &p)?;
    let gracious = gracious_in(game, &p)?;
    let memory: HashSet<usize> = p.states.iter().map(|&(_, m)| m).collect();
    Ok(VerificationReport {
        strong_ok: strong.is_none(),
        gracious_ok: gracious.is_none(),
        reachable_memory: memory.len(),
        product_states: p.states.len(),
        counterexample: strong.or(gracious),
    })
}
