//! Recursive (Zielonka) solver and an exhaustive positional-strategy solver.
//!
//! Edge priorities are moved onto fresh intermediate nodes so that the recursion can
//! work with node priorities; original nodes get priority 0, which never decides a play.

use std::collections::VecDeque;

use super::parity::{ParityGame, ParitySolution};
use crate::game::Owner;

struct Expanded {
    owner: Vec<u8>, // 0 = Exists (even), 1 = Forall (odd)
    prio: Vec<u32>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

fn expand(pg: &ParityGame) -> Expanded {
    let n = pg.node_count();
    let total = n + pg.edge_count();
    let mut owner = Vec::with_capacity(total);
    let mut prio = vec![0; n];
    let mut succ = vec![Vec::new(); n];
    for v in 0..n {
        owner.push(if pg.owner(v) == Owner::Exists { 0 } else { 1 });
    }
    for v in 0..n {
        for &(w, p) in pg.successors(v) {
            let e = owner.len();
            owner.push(0);
            prio.push(p);
            succ.push(vec![w]);
            succ[v].push(e);
        }
    }
    let mut pred = vec![Vec::new(); total];
    for (v, out) in succ.iter().enumerate() {
        for &w in out {
            pred[w].push(v);
        }
    }
    Expanded { owner, prio, succ, pred }
}

impl Expanded {
    /// Attractor for `player` to `target` inside `alive`, recording attracting moves.
    fn attractor(&self, player: u8, target: &[bool], alive: &[bool], strat: &mut [usize]) -> Vec<bool> {
        let mut attr = target.to_vec();
        let mut count: Vec<usize> = (0..self.owner.len())
            .map(|v| if alive[v] { self.succ[v].iter().filter(|&&w| alive[w]).count() } else { 0 })
            .collect();
        let mut queue: VecDeque<usize> = (0..attr.len()).filter(|&v| attr[v]).collect();
        while let Some(w) = queue.pop_front() {
            for &v in &self.pred[w] {
                if !alive[v] || attr[v] {
                    continue;
                }
                if self.owner[v] == player {
                    attr[v] = true;
                    strat[v] = w;
                    queue.push_back(v);
                } else {
                    count[v] -= 1;
                    if count[v] == 0 {
                        attr[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        attr
    }

    /// Returns the winner of every alive node and writes winning moves into `strat`.
    fn solve(&self, alive: &[bool], win: &mut [u8], strat: &mut [usize]) {
        let Some(p) = (0..alive.len()).filter(|&v| alive[v]).map(|v| self.prio[v]).max() else {
            return;
        };
        let i = (p % 2) as u8;
        let top: Vec<bool> = (0..alive.len()).map(|v| alive[v] && self.prio[v] == p).collect();
        let a = self.attractor(i, &top, alive, strat);
        let rest: Vec<bool> = (0..alive.len()).map(|v| alive[v] && !a[v]).collect();
        self.solve(&rest, win, strat);
        let opponent_wins: Vec<bool> = (0..alive.len()).map(|v| rest[v] && win[v] != i).collect();
        if !opponent_wins.iter().any(|&b| b) {
            for v in 0..alive.len() {
                if alive[v] {
                    win[v] = i;
                    if top[v] && self.owner[v] == i {
                        strat[v] = *self.succ[v].iter().find(|&&w| alive[w]).unwrap();
                    }
                }
            }
            return;
        }
        let b = self.attractor(1 - i, &opponent_wins, alive, strat);
        for v in 0..alive.len() {
            if b[v] {
                win[v] = 1 - i;
            }
        }
        let remaining: Vec<bool> = (0..alive.len()).map(|v| alive[v] && !b[v]).collect();
        self.solve(&remaining, win, strat);
    }
}

/// Solves a total max-parity game; player ∃ wins plays whose highest recurring priority
/// is even.
pub fn zielonka(pg: &ParityGame) -> ParitySolution {
    assert!(pg.is_total(), "parity game has a dead end");
    let x = expand(pg);
    let total = x.owner.len();
    let solve = move || {
        let mut win = vec![0u8; total];
        let mut strat = vec![usize::MAX; total];
        x.solve(&vec![true; total], &mut win, &mut strat);
        (x, win, strat)
    };
    // recursion depth can grow with the node count
    let (x, win, strat) = if total > 2_000 {
        std::thread::Builder::new()
            .stack_size(1 << 28)
            .spawn(solve)
            .expect("spawn solver thread")
            .join()
            .expect("solver thread panicked")
    } else {
        solve()
    };
    let n = pg.node_count();
    let winner = (0..n).map(|v| if win[v] == 0 { Owner::Exists } else { Owner::Forall }).collect();
    let strategy = (0..n)
        .map(|v| (x.owner[v] == win[v]).then(|| x.succ[strat[v]][0]))
        .collect();
    ParitySolution { winner, strategy }
}

/// Whether player ∀ wins from each node once player ∃ is fixed to `choice`.
fn forall_wins_against(pg: &ParityGame, choice: &[usize]) -> Vec<bool> {
    let n = pg.node_count();
    let edges: Vec<(usize, usize, u32)> = (0..n)
        .flat_map(|v| {
            let out = pg.successors(v);
            let picked: Vec<(usize, u32)> = if pg.owner(v) == Owner::Exists {
                vec![out[choice[v]]]
            } else {
                out.to_vec()
            };
            picked.into_iter().map(move |(w, p)| (v, w, p))
        })
        .collect();
    let endpoints: Vec<(usize, usize)> = edges.iter().map(|&(v, w, _)| (v, w)).collect();
    let mut bad = vec![false; n];
    for q in (1..=pg.max_priority()).step_by(2) {
        let ids: Vec<usize> = (0..edges.len()).filter(|&e| edges[e].2 <= q).collect();
        for comp in crate::emptiness::scc::components(n, &endpoints, &ids) {
            if comp.transitions.iter().any(|&e| edges[e].2 == q) {
                for &v in &comp.states {
                    bad[v] = true;
                }
            }
        }
    }
    // backward closure
    let mut changed = true;
    while changed {
        changed = false;
        for &(v, w, _) in &edges {
            if bad[w] && !bad[v] {
                bad[v] = true;
                changed = true;
            }
        }
    }
    bad
}

/// Exhaustive solver: ∃ wins `v` iff some positional ∃-strategy defeats every ∀ behavior
/// from `v`. Exponential; for testing small games only.
pub fn brute_force(pg: &ParityGame) -> Vec<Owner> {
    let n = pg.node_count();
    let exists: Vec<usize> = (0..n).filter(|&v| pg.owner(v) == Owner::Exists).collect();
    let mut choice = vec![0; n];
    let mut won = vec![false; n];
    loop {
        let lost = forall_wins_against(pg, &choice);
        for v in 0..n {
            won[v] |= !lost[v];
        }
        // odometer over the ∃ choices
        let mut k = 0;
        loop {
            if k == exists.len() {
                return won.into_iter().map(|b| if b { Owner::Exists } else { Owner::Forall }).collect();
            }
            let v = exists[k];
            choice[v] += 1;
            if choice[v] < pg.successors(v).len() {
                break;
            }
            choice[v] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn single(owner: Owner, p: u32) -> ParityGame {
        let mut g = ParityGame::new(vec![owner]);
        g.add_edge(0, 0, p);
        g
    }

    #[test]
    fn trivial_games() {
        assert_eq!(zielonka(&single(Owner::Exists, 0)).winner, vec![Owner::Exists]);
        assert_eq!(zielonka(&single(Owner::Exists, 1)).winner, vec![Owner::Forall]);
        assert_eq!(zielonka(&single(Owner::Forall, 2)).winner, vec![Owner::Exists]);
    }

    pub(crate) fn random_parity(seed: u64, n: usize, max_prio: u32) -> ParityGame {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let owners = (0..n).map(|_| if rng.gen_bool(0.5) { Owner::Exists } else { Owner::Forall }).collect();
        let mut g = ParityGame::new(owners);
        for v in 0..n {
            let k = rng.gen_range(1..=3.min(n));
            let mut targets: Vec<usize> = (0..n).collect();
            for _ in 0..n - k {
                targets.remove(rng.gen_range(0..targets.len()));
            }
            for w in targets {
                g.add_edge(v, w, rng.gen_range(0..=max_prio));
            }
        }
        g
    }

    /// Plays consistent with the winner's strategy stay winning: each player's strategy,
    /// fixed against the free opponent, leaves no losing cycle.
    fn strategies_are_winning(g: &ParityGame, sol: &ParitySolution) {
        let n = g.node_count();
        // ∃ strategy as a choice vector
        let mut choice = vec![0; n];
        for (v, c) in choice.iter_mut().enumerate() {
            if g.owner(v) == Owner::Exists && sol.winner[v] == Owner::Exists {
                let w = sol.strategy[v].unwrap();
                *c = g.successors(v).iter().position(|&(x, _)| x == w).unwrap();
                assert_eq!(sol.winner[w], Owner::Exists);
            }
        }
        let lost = forall_wins_against(g, &choice);
        for (v, lost) in lost.into_iter().enumerate() {
            assert!(sol.winner[v] != Owner::Exists || !lost, "∃ strategy loses from {v}");
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        for seed in 0..500 {
            let n = 1 + (seed as usize % 8);
            let g = random_parity(seed, n, 3);
            let sol = zielonka(&g);
            assert_eq!(sol.winner, brute_force(&g), "seed {seed}\n{}", g.to_text());
            strategies_are_winning(&g, &sol);
        }
    }
}
