//! Strategy extraction: play the certificate of the current real node and restart on a
//! fresh certificate whenever ∀ leaves it.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use super::Strategy;
use crate::certificate::Certificate;
use crate::game::{ObligingGame, Owner};
use crate::solver::{Attractor, SolveResult};

/// Memory state: following the certificate of `(anchor, perm)` at position `pos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub anchor: usize,
    pub perm: usize,
    pub pos: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrategyError {
    #[error("no certificate for node {node} under permutation {perm}")]
    MissingCertificate { node: usize, perm: usize },
}

/// An extracted strategy together with the meaning of its memory states.
#[derive(Clone, Debug)]
pub struct Extracted {
    pub strategy: Strategy,
    pub cells: Vec<Cell>,
}

impl Extracted {
    pub fn memory_count(&self) -> usize {
        self.cells.len()
    }

    /// Memory needed when a position is stored as "the `i`-th occurrence of the current
    /// node" instead of an index: distinct `(anchor, perm, i)` over the reachable cells.
    pub fn occurrence_memory(&self, result: &SolveResult) -> usize {
        let mut seen = HashSet::new();
        for c in &self.cells {
            let cert = &result.certificates[&(c.anchor, c.perm)];
            let node = cert.at(c.pos);
            let occ = (0..c.pos).filter(|&i| cert.at(i) == node).count();
            seen.insert((c.anchor, c.perm, occ));
        }
        seen.len()
    }

    /// Largest number of occurrences of a single node in a certificate in use.
    pub fn max_occurrences(&self, result: &SolveResult) -> usize {
        let anchors: HashSet<(usize, usize)> = self.cells.iter().map(|c| (c.anchor, c.perm)).collect();
        anchors
            .into_iter()
            .map(|key| {
                let cert = &result.certificates[&key];
                let mut count: HashMap<usize, usize> = HashMap::new();
                for i in 0..cert.len() {
                    *count.entry(cert.at(i)).or_default() += 1;
                }
                count.into_values().max().unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// Whether every certificate in use came out of the certificate extractor.
    pub fn uses_only_extracted(&self, result: &SolveResult) -> bool {
        self.cells.iter().all(|c| result.extracted.contains(&(c.anchor, c.perm)))
    }
}

/// Builds the strategy reachable from the won nodes under the initial permutation.
pub fn extract(game: &ObligingGame, result: &SolveResult) -> Result<Extracted, StrategyError> {
    let attr = Attractor::new(game);
    let arena = game.arena();
    let init_perm = attr.table().initial();
    let cert_of = |node: usize, perm: usize| -> Result<&Certificate, StrategyError> {
        result.certificate(node, perm).ok_or(StrategyError::MissingCertificate { node, perm })
    };
    let mut levels: HashMap<(usize, usize), Vec<usize>> = HashMap::new();

    let mut strategy = Strategy::new();
    let mut cells = Vec::new();
    let mut index: HashMap<Cell, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut intern = |c: Cell, strategy: &mut Strategy, cells: &mut Vec<Cell>, queue: &mut VecDeque<(Cell, usize)>| {
        *index.entry(c).or_insert_with(|| {
            let m = strategy.add_memory(format!("{}/p{}/{}", arena.name(c.anchor), c.perm, c.pos));
            cells.push(c);
            queue.push_back((c, m));
            m
        })
    };
    for v in result.winning_nodes() {
        cert_of(v, init_perm)?;
        let m = intern(Cell { anchor: v, perm: init_perm, pos: 0 }, &mut strategy, &mut cells, &mut queue);
        strategy.set_init(v, m);
    }
    while let Some((c, m)) = queue.pop_front() {
        let cert = cert_of(c.anchor, c.perm)?;
        let here = cert.at(c.pos);
        let next_pos = cert.next_pos(c.pos);
        let ahead = cert.at(next_pos);
        let follow = intern(Cell { pos: next_pos, ..c }, &mut strategy, &mut cells, &mut queue);
        strategy.set_update(m, here, ahead, follow);
        if arena.owner(here) == Owner::Exists {
            strategy.set_move(here, m, ahead);
            continue;
        }
        let lv = levels
            .entry((c.anchor, c.perm))
            .or_insert_with(|| attr.unrolled_levels(cert, c.perm).into_iter().map(|(_, l)| l).collect());
        let level = lv[c.pos];
        for e in attr.exits_at(c.perm, here, level, c.pos) {
            if e.target == ahead {
                continue;
            }
            cert_of(e.target, e.perm)?;
            let fresh = Cell { anchor: e.target, perm: e.perm, pos: 0 };
            let to = intern(fresh, &mut strategy, &mut cells, &mut queue);
            strategy.set_update(m, here, e.target, to);
        }
    }
    Ok(Extracted { strategy, cells })
}
