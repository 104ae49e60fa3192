//! Later-appearance-record reduction from Emerson-Lei games to parity games.

mod parity;
mod permutation;
mod zielonka;

use std::collections::HashMap;

pub use parity::{ParityGame, ParitySolution};
pub use permutation::{Permutation, PermutationTable};
pub use zielonka::{brute_force, zielonka};

use crate::game::{Arena, ElFormula, Owner};

/// A paritized game together with the meaning of its nodes.
#[derive(Clone, Debug)]
pub struct Paritized {
    pub game: ParityGame,
    /// `(arena node, permutation)` for each parity-game node.
    pub nodes: Vec<(usize, Permutation)>,
    /// Parity-game node of `(v, initial permutation)` for every arena node `v`.
    pub initial: Vec<usize>,
}

/// Product of `arena` with permutations of the colors of `phi`, restricted to the part
/// reachable from `(v, init)` for all `v`. The edge `(v, π) → (w, π@γ(v,w))` gets
/// priority `2p` or `2p+1` from the rightmost position `p` of `π` hit by `γ(v,w)`.
pub fn paritize(arena: &Arena, phi: &ElFormula, init: &Permutation) -> Paritized {
    assert_eq!(init.support(), phi.colors(), "initial permutation must range over the formula's colors");
    let mut index: HashMap<(usize, Permutation), usize> = HashMap::new();
    let mut nodes: Vec<(usize, Permutation)> = Vec::new();
    let mut game = ParityGame::new(Vec::new());
    let mut priority_cache: HashMap<(Permutation, usize), u32> = HashMap::new();

    let mut intern = |v: usize, pi: Permutation, nodes: &mut Vec<(usize, Permutation)>, game: &mut ParityGame| {
        *index.entry((v, pi.clone())).or_insert_with(|| {
            nodes.push((v, pi));
            game.add_node(arena.owner(v))
        })
    };
    let initial: Vec<usize> =
        (0..arena.node_count()).map(|v| intern(v, init.clone(), &mut nodes, &mut game)).collect();
    let mut next = 0;
    while next < nodes.len() {
        let (v, pi) = nodes[next].clone();
        for &(w, colors) in arena.successors(v) {
            let p = pi.rightmost(colors);
            let prio = *priority_cache
                .entry((pi.clone(), p))
                .or_insert_with(|| pi.priority_at(p, phi));
            let target = intern(w, pi.shift_position(p), &mut nodes, &mut game);
            game.add_edge(next, target, prio);
        }
        next += 1;
    }
    Paritized { game, nodes, initial }
}

impl Paritized {
    /// Arena nodes whose initial product node is won by player ∃.
    pub fn exists_region(&self, solution: &ParitySolution) -> Vec<bool> {
        self.initial.iter().map(|&i| solution.winner[i] == Owner::Exists).collect()
    }
}

/// Winning region of player ∃ in the Emerson-Lei game `(arena, phi)`.
pub fn solve_el_game(arena: &Arena, phi: &ElFormula) -> Vec<bool> {
    let p = paritize(arena, phi, &Permutation::identity(phi.colors()));
    p.exists_region(&zielonka(&p.game))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{Color, ColorSet};
    use crate::io::fixture;

    #[test]
    fn single_node_true_on_empty() {
        let arena = Arena::unnamed(vec![Owner::Exists], [(0, 0, ColorSet::EMPTY)]).unwrap();
        let phi = ElFormula::Fin(Color(0));
        let p = paritize(&arena, &phi, &Permutation::identity(phi.colors()));
        assert_eq!(p.game.node_count(), 1);
        assert_eq!(p.game.successors(0), &[(0, 0)]);
    }

    #[test]
    fn ex10_product_size() {
        let g = fixture("ex10").unwrap();
        let p = paritize(g.arena(), g.strong(), &Permutation::identity(g.strong_colors()));
        assert!(p.game.node_count() <= 3 * 6);
        // frozen from the first run of the construction
        assert_eq!(p.game.node_count(), 7);
    }

    #[test]
    fn ex10_winner_independent_of_initial_permutation() {
        let g = fixture("ex10").unwrap();
        let phi = ElFormula::and(g.strong().clone(), g.weak().clone());
        let arena = g.with_owners(vec![Owner::Exists, Owner::Forall, Owner::Forall]).unwrap();
        let mut regions = Permutation::all(phi.colors()).into_iter().map(|pi| {
            let p = paritize(arena.arena(), &phi, &pi);
            p.exists_region(&zielonka(&p.game))
        });
        let first = regions.next().unwrap();
        assert!(regions.all(|r| r == first));
    }
}
