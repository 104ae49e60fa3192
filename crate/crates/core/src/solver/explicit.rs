//! Oracle: the certificate game built explicitly.
//!
//! Every node offers ∃ a choice among certificates, represented by what they let ∀ do:
//! the set of exits `(w, D)`, meaning ∀ may leave to `w` after the strong colors `D` have
//! been seen. ∀ either stays on the certificate forever (a loop emitting `c_⊤`) or takes
//! an exit. Nodes without certificates fall into a sink emitting `c_⊥`. The resulting
//! Emerson-Lei game is solved by paritization with objective
//! `Inf c_⊤ ∨ (strong ∧ Fin c_⊥)`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use super::SolveError;
use crate::game::{Arena, Color, ColorSet, ElFormula, ObligingGame, Owner, MAX_COLORS};
use crate::lar::{paritize, zielonka, Permutation};

#[derive(Clone, Debug)]
pub struct ExplicitOptions {
    /// Bound on the abstract certificate states explored per node.
    pub budget: usize,
}

impl Default for ExplicitOptions {
    fn default() -> Self {
        ExplicitOptions { budget: 100_000 }
    }
}

type Exits = BTreeSet<(usize, ColorSet)>;

/// Partial certificate: current node and strong fingerprint, exits so far, and for the
/// loop part its first node, colors and ∀ nodes.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Partial {
    at: usize,
    fp: ColorSet,
    exits: Exits,
    lasso: Option<(usize, ColorSet, BTreeSet<usize>)>,
}

fn exits_at(game: &ObligingGame, v: usize, fp: ColorSet, into: &mut Exits) {
    if game.arena().owner(v) == Owner::Forall {
        for &(w, cs) in game.arena().successors(v) {
            into.insert((w, fp.union(cs.intersection(game.strong_colors()))));
        }
    }
}

/// The ⊆-minimal exit sets over all certificates from `v`. Exits are collected on the
/// stem and on every pass through the loop.
fn behaviors(game: &ObligingGame, v: usize, budget: usize) -> Result<Vec<Exits>, SolveError> {
    let arena = game.arena();
    let strong = game.strong_colors();
    let phi = ElFormula::and(game.strong().clone(), game.weak().clone());
    let mut start = Partial { at: v, fp: ColorSet::EMPTY, exits: Exits::new(), lasso: None };
    exits_at(game, v, ColorSet::EMPTY, &mut start.exits);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut done: HashSet<Exits> = HashSet::new();
    let push = |s: Partial, seen: &mut HashSet<Partial>, queue: &mut VecDeque<Partial>| {
        if seen.insert(s.clone()) {
            queue.push_back(s);
        }
    };
    while let Some(s) = queue.pop_front() {
        if seen.len() > budget {
            return Err(SolveError::CertificateBudget { limit: budget });
        }
        if s.lasso.is_none() {
            let mut nodes = BTreeSet::new();
            nodes.insert(s.at);
            let opened = Partial { lasso: Some((s.at, ColorSet::EMPTY, nodes)), ..s.clone() };
            push(opened, &mut seen, &mut queue);
        }
        for &(w, cs) in arena.successors(s.at) {
            let fp = s.fp.union(cs.intersection(strong));
            match &s.lasso {
                None => {
                    let mut exits = s.exits.clone();
                    exits_at(game, w, fp, &mut exits);
                    push(Partial { at: w, fp, exits, lasso: None }, &mut seen, &mut queue);
                }
                Some((first, colors, nodes)) => {
                    let colors = colors.union(cs);
                    if w == *first && phi.eval(colors) {
                        // later passes see the full fingerprint everywhere on the loop
                        let mut exits = s.exits.clone();
                        for &u in nodes {
                            exits_at(game, u, fp, &mut exits);
                        }
                        done.insert(exits);
                    }
                    let mut exits = s.exits.clone();
                    exits_at(game, w, fp, &mut exits);
                    let mut nodes = nodes.clone();
                    nodes.insert(w);
                    push(Partial { at: w, fp, exits, lasso: Some((*first, colors, nodes)) }, &mut seen, &mut queue);
                }
            }
        }
    }
    let mut all: Vec<Exits> = done.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut minimal: Vec<Exits> = Vec::new();
    for e in all {
        if !minimal.iter().any(|m| m.is_subset(&e)) {
            minimal.push(e);
        }
    }
    Ok(minimal)
}

/// Gracious winning region computed on the explicit certificate game.
pub fn oracle_explicit_certificate_game(game: &ObligingGame, opts: &ExplicitOptions) -> Result<Vec<bool>, SolveError> {
    let base = game.color_names().len();
    if base + 2 > MAX_COLORS {
        return Err(SolveError::Internal("no colors left for the certificate game".into()));
    }
    let (top, bottom) = (Color(base), Color(base + 1));
    let n = game.n();
    let mut owners = vec![Owner::Exists; n];
    let mut edges = Vec::new();
    let sink = n;
    owners.push(Owner::Exists);
    edges.push((sink, sink, ColorSet::singleton(bottom)));
    let mut relay: HashMap<(usize, ColorSet), usize> = HashMap::new();
    for v in 0..n {
        let options = behaviors(game, v, opts.budget)?;
        if options.is_empty() {
            edges.push((v, sink, ColorSet::singleton(bottom)));
        }
        for exits in options {
            owners.push(Owner::Forall);
            let b = owners.len() - 1;
            edges.push((v, b, ColorSet::EMPTY));
            edges.push((b, b, ColorSet::singleton(top)));
            for (w, fp) in exits {
                let m = *relay.entry((w, fp)).or_insert_with(|| {
                    owners.push(Owner::Exists);
                    edges.push((owners.len() - 1, w, ColorSet::EMPTY));
                    owners.len() - 1
                });
                edges.push((b, m, fp));
            }
        }
    }
    let arena = Arena::unnamed(owners, edges).map_err(|e| SolveError::Internal(e.to_string()))?;
    let phi = ElFormula::or(
        ElFormula::Inf(top),
        ElFormula::and(game.strong().clone(), ElFormula::Fin(bottom)),
    );
    let p = paritize(&arena, &phi, &Permutation::identity(phi.colors()));
    let won = p.exists_region(&zielonka(&p.game));
    Ok(won[..n].to_vec())
}
