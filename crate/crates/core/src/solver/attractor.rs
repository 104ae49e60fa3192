//! DAG attraction through certificates, one permutation at a time.
//!
//! For a fixed permutation `π` the certificates starting at a node are paths in the
//! *fingerprint graph* with vertices `(v, p)`, where `p` is the rightmost position of `π`
//! touched by the colors seen so far. A ∀-vertex is safe if every way of leaving it
//! lands in the target set for the priority that leaving produces; a certificate is a
//! path of safe vertices into an accepting loop that stays on one level.

use std::cell::RefCell;
use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::certificate::Certificate;
use crate::emptiness::{ElAutomaton, EmptinessError};
use crate::game::{ColorSet, ElFormula, ObligingGame, Owner};
use crate::lar::PermutationTable;

/// Shared, precomputed data for attractor computations on one game.
/// Nonempty level-loop states keyed by (permutation, level, safe-vertex mask).
type LoopCache = HashMap<(usize, usize, Vec<u64>), FixedBitSet>;

/// Attracted vertices, safe vertices and per-level loop regions of one permutation.
type PermSolution = (Vec<bool>, Vec<bool>, Vec<FixedBitSet>);

pub struct Attractor<'g> {
    pub(crate) game: &'g ObligingGame,
    pub(crate) table: PermutationTable,
    acceptance: ElFormula,
    /// `pos[i][v][k]`: rightmost position of `perms[i]` hit by the strong colors of the
    /// `k`-th edge out of `v`.
    pos: Vec<Vec<Vec<usize>>>,
    cache: RefCell<LoopCache>,
    calls: RefCell<u64>,
}

/// One exit from a certificate position: ∀ leaves to `target` and the play continues at
/// the real node `(target, perm)` with the given priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exit {
    pub position: usize,
    pub target: usize,
    pub level: usize,
    pub perm: usize,
    pub priority: u32,
}

impl<'g> Attractor<'g> {
    pub fn new(game: &'g ObligingGame) -> Attractor<'g> {
        let table = PermutationTable::new(game.strong_colors(), game.strong());
        let strong = game.strong_colors();
        let arena = game.arena();
        let pos = (0..table.len())
            .map(|i| {
                (0..game.n())
                    .map(|v| {
                        arena
                            .successors(v)
                            .iter()
                            .map(|&(_, cs)| table.rightmost(i, cs.intersection(strong)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Attractor {
            game,
            table,
            acceptance: ElFormula::and(game.strong().clone(), game.weak().clone()),
            pos,
            cache: RefCell::new(HashMap::new()),
            calls: RefCell::new(0),
        }
    }

    pub fn game(&self) -> &ObligingGame {
        self.game
    }

    pub fn table(&self) -> &PermutationTable {
        &self.table
    }

    pub fn perms(&self) -> usize {
        self.table.len()
    }

    pub fn real_nodes(&self) -> usize {
        self.game.n() * self.table.len()
    }

    pub fn real(&self, v: usize, perm: usize) -> usize {
        v * self.table.len() + perm
    }

    pub fn unreal(&self, r: usize) -> (usize, usize) {
        (r / self.table.len(), r % self.table.len())
    }

    /// Number of target sets, one per priority `0..=2d+1`.
    pub fn priorities(&self) -> usize {
        2 * self.game.d() + 2
    }

    pub fn calls(&self) -> u64 {
        *self.calls.borrow()
    }

    fn levels(&self) -> usize {
        self.game.d() + 1
    }

    fn vertex(&self, v: usize, p: usize) -> usize {
        v * self.levels() + p
    }

    /// Level and exit data for leaving `v` at level `p` along its `k`-th edge.
    fn step(&self, perm: usize, v: usize, p: usize, k: usize) -> (usize, usize, u32) {
        let level = p.max(self.pos[perm][v][k]);
        (level, self.table.shift(perm, level), self.table.priority(perm, level))
    }

    /// Every way ∀ can leave a play that is at `v` on level `p`.
    pub fn exits_at(&self, perm: usize, v: usize, p: usize, position: usize) -> Vec<Exit> {
        if self.game.arena().owner(v) != Owner::Forall {
            return Vec::new();
        }
        self.game
            .arena()
            .successors(v)
            .iter()
            .enumerate()
            .map(|(k, &(w, _))| {
                let (level, next, priority) = self.step(perm, v, p, k);
                Exit { position, target: w, level, perm: next, priority }
            })
            .collect()
    }

    fn safe_vertices(&self, perm: usize, vbar: &[FixedBitSet]) -> Vec<bool> {
        let n = self.game.n();
        let mut safe = vec![true; n * self.levels()];
        for v in (0..n).filter(|&v| self.game.arena().owner(v) == Owner::Forall) {
            for p in 0..self.levels() {
                safe[self.vertex(v, p)] = self.exits_at(perm, v, p, 0).iter().all(|e| {
                    vbar[e.priority as usize].contains(self.real(e.target, e.perm))
                });
            }
        }
        safe
    }

    /// Level-`p` automaton over the safe vertices; states are arena nodes.
    fn level_automaton(&self, perm: usize, p: usize, safe: &[bool]) -> ElAutomaton {
        let arena = self.game.arena();
        let mut trans = Vec::new();
        for v in 0..self.game.n() {
            if !safe[self.vertex(v, p)] {
                continue;
            }
            for (k, &(w, cs)) in arena.successors(v).iter().enumerate() {
                if self.pos[perm][v][k] <= p && safe[self.vertex(w, p)] {
                    trans.push((v, w, cs));
                }
            }
        }
        ElAutomaton::new(self.game.n(), trans, self.acceptance.clone(), None)
    }

    fn loops(&self, perm: usize, p: usize, safe: &[bool]) -> Result<FixedBitSet, EmptinessError> {
        let n = self.game.n();
        let mut key = vec![0u64; n.div_ceil(64)];
        for v in 0..n {
            if safe[self.vertex(v, p)] {
                key[v / 64] |= 1 << (v % 64);
            }
        }
        let key = (perm, p, key);
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let region = self.level_automaton(perm, p, safe).nonempty_states()?;
        let mut set = FixedBitSet::with_capacity(n);
        for v in (0..n).filter(|&v| region[v]) {
            set.insert(v);
        }
        self.cache.borrow_mut().insert(key, set.clone());
        Ok(set)
    }

    /// Safe vertices that can reach an accepting level loop, and the loop regions.
    fn solve_perm(
        &self,
        perm: usize,
        vbar: &[FixedBitSet],
    ) -> Result<PermSolution, EmptinessError> {
        *self.calls.borrow_mut() += 1;
        let n = self.game.n();
        let safe = self.safe_vertices(perm, vbar);
        let loops: Vec<FixedBitSet> =
            (0..self.levels()).map(|p| self.loops(perm, p, &safe)).collect::<Result<_, _>>()?;
        let total = n * self.levels();
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); total];
        for v in 0..n {
            for p in 0..self.levels() {
                let x = self.vertex(v, p);
                if !safe[x] {
                    continue;
                }
                for (k, &(w, _)) in self.game.arena().successors(v).iter().enumerate() {
                    let y = self.vertex(w, self.step(perm, v, p, k).0);
                    if safe[y] {
                        pred[y].push(x);
                    }
                }
            }
        }
        let mut reach = vec![false; total];
        let mut queue = VecDeque::new();
        for (p, set) in loops.iter().enumerate() {
            for v in set.ones() {
                reach[self.vertex(v, p)] = true;
                queue.push_back(self.vertex(v, p));
            }
        }
        while let Some(y) = queue.pop_front() {
            for &x in &pred[y] {
                if !reach[x] {
                    reach[x] = true;
                    queue.push_back(x);
                }
            }
        }
        Ok((safe, reach, loops))
    }

    /// Nodes `v` such that `(v, perm)` is DAG-attracted to `vbar`.
    pub fn for_permutation(&self, perm: usize, vbar: &[FixedBitSet]) -> Result<Vec<bool>, EmptinessError> {
        let (_, reach, _) = self.solve_perm(perm, vbar)?;
        Ok((0..self.game.n()).map(|v| reach[self.vertex(v, 0)]).collect())
    }

    /// Union over all permutations, as a set of real nodes.
    pub fn attract(&self, vbar: &[FixedBitSet]) -> Result<FixedBitSet, EmptinessError> {
        debug_assert_eq!(vbar.len(), self.priorities());
        let mut out = FixedBitSet::with_capacity(self.real_nodes());
        for perm in 0..self.perms() {
            for (v, won) in self.for_permutation(perm, vbar)?.into_iter().enumerate() {
                if won {
                    out.insert(self.real(v, perm));
                }
            }
        }
        Ok(out)
    }

    /// A certificate for `(v, perm)` whose exits all land in `vbar`, if one exists.
    pub fn certificate(
        &self,
        v: usize,
        perm: usize,
        vbar: &[FixedBitSet],
    ) -> Result<Option<Certificate>, EmptinessError> {
        let (safe, reach, loops) = self.solve_perm(perm, vbar)?;
        let start = self.vertex(v, 0);
        if !reach[start] {
            return Ok(None);
        }
        // shortest path of safe vertices to a vertex with an accepting loop
        let levels = self.levels();
        let total = self.game.n() * levels;
        let mut parent = vec![usize::MAX; total];
        let mut seen = vec![false; total];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut end = None;
        while let Some(x) = queue.pop_front() {
            let (u, p) = (x / levels, x % levels);
            if loops[p].contains(u) {
                end = Some(x);
                break;
            }
            for (k, &(w, _)) in self.game.arena().successors(u).iter().enumerate() {
                let y = self.vertex(w, self.step(perm, u, p, k).0);
                if safe[y] && reach[y] && !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let end = end.expect("reachable vertex leads to a loop");
        let mut path = vec![end];
        while *path.last().unwrap() != start {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        let (u, p) = (end / levels, end % levels);
        let aut = self.level_automaton(perm, p, &safe);
        let lasso = aut.witness_lasso(u)?;
        let (lasso_stem, lasso_loop) = lasso.states(&aut);

        let mut stem: Vec<usize> = path[..path.len() - 1].iter().map(|&x| x / levels).collect();
        stem.extend(lasso_stem);
        let mut cycle = lasso_loop;
        if stem.is_empty() {
            stem.push(cycle[0]);
            cycle.rotate_left(1);
        }
        Ok(Some(Certificate::new(stem, cycle)))
    }

    /// Nodes and levels along the stem followed by two passes through the loop. The
    /// level is the rightmost position of `perm` hit by the strong colors seen so far;
    /// from the second pass on it no longer changes.
    pub fn unrolled_levels(&self, cert: &Certificate, perm: usize) -> Vec<(usize, usize)> {
        let strong = self.game.strong_colors();
        let nodes: Vec<usize> =
            cert.stem.iter().chain(cert.cycle.iter()).chain(cert.cycle.iter()).copied().collect();
        let mut fp = ColorSet::EMPTY;
        let mut out = Vec::with_capacity(nodes.len());
        for (i, &v) in nodes.iter().enumerate() {
            if i > 0 {
                let c = self.game.arena().edge_colors(nodes[i - 1], v).expect("certificate edge");
                fp = fp.union(c.intersection(strong));
            }
            out.push((v, self.table.rightmost(perm, fp)));
        }
        out
    }

    /// Every exit of a certificate played from `(cert.node(), perm)`, with positions
    /// counted along [`Attractor::unrolled_levels`].
    pub fn certificate_exits(&self, cert: &Certificate, perm: usize) -> Vec<Exit> {
        self.unrolled_levels(cert, perm)
            .into_iter()
            .enumerate()
            .flat_map(|(i, (v, p))| self.exits_at(perm, v, p, i))
            .collect()
    }

    /// Whether every loop position has the same level on the first pass as on all later
    /// ones, so that a position index into the certificate determines the level.
    pub fn loop_is_settled(&self, cert: &Certificate, perm: usize) -> bool {
        let levels = self.unrolled_levels(cert, perm);
        let (s, l) = (cert.stem.len(), cert.cycle.len());
        (0..l).all(|i| levels[s + i].1 == levels[s + l + i].1)
    }
}
