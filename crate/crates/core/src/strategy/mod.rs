//! Finite-memory strategies for player ∃: extraction from solve results, a text
//! format, and verification of the strong and gracious conditions.
//!
//! A strategy is a Mealy machine. Each winning node has an initial memory state; at an
//! ∃-node the move table picks the successor, and after every edge the update table
//! picks the next memory state.
//!
//! Text format (`#` starts a comment):
//!
//! ```text
//! strategy 1
//! memory: 2
//! mem 0 even
//! mem 1 odd
//! init v1 0
//! move v4 0 v5
//! update 0 v4 v5 1
//! ```

mod extract;
mod verify;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

pub use extract::{extract, Cell, Extracted, StrategyError};
pub use verify::{verify, verify_gracious, verify_strong, Counterexample, VerificationReport};

use crate::game::ObligingGame;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Strategy {
    labels: Vec<String>,
    init: BTreeMap<usize, usize>,
    moves: BTreeMap<(usize, usize), usize>,
    updates: BTreeMap<(usize, usize, usize), usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct StrategyParseError {
    pub line: usize,
    pub message: String,
}

impl Strategy {
    pub fn new() -> Strategy {
        Strategy::default()
    }

    /// Adds a memory state; labels must not contain whitespace.
    pub fn add_memory(&mut self, label: impl Into<String>) -> usize {
        let label = label.into();
        assert!(!label.is_empty() && !label.contains(char::is_whitespace), "bad memory label `{label}`");
        self.labels.push(label);
        self.labels.len() - 1
    }

    pub fn set_init(&mut self, node: usize, mem: usize) {
        self.init.insert(node, mem);
    }

    pub fn set_move(&mut self, node: usize, mem: usize, succ: usize) {
        self.moves.insert((node, mem), succ);
    }

    pub fn set_update(&mut self, mem: usize, src: usize, dst: usize, next: usize) {
        self.updates.insert((mem, src, dst), next);
    }

    pub fn memory_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, mem: usize) -> &str {
        &self.labels[mem]
    }

    pub fn init(&self, node: usize) -> Option<usize> {
        self.init.get(&node).copied()
    }

    /// Nodes with an initial memory state, in increasing order.
    pub fn initial_nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.init.iter().map(|(&v, &m)| (v, m))
    }

    pub fn next_move(&self, node: usize, mem: usize) -> Option<usize> {
        self.moves.get(&(node, mem)).copied()
    }

    pub fn update(&self, mem: usize, src: usize, dst: usize) -> Option<usize> {
        self.updates.get(&(mem, src, dst)).copied()
    }

    pub fn to_text(&self, game: &ObligingGame) -> String {
        let name = |v: usize| game.arena().name(v);
        let mut out = String::from("strategy 1\n");
        writeln!(out, "memory: {}", self.labels.len()).unwrap();
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(out, "mem {i} {l}").unwrap();
        }
        for (&v, &m) in &self.init {
            writeln!(out, "init {} {m}", name(v)).unwrap();
        }
        for (&(v, m), &w) in &self.moves {
            writeln!(out, "move {} {m} {}", name(v), name(w)).unwrap();
        }
        for (&(m, s, t), &m2) in &self.updates {
            writeln!(out, "update {m} {} {} {m2}", name(s), name(t)).unwrap();
        }
        out
    }

    pub fn from_text(game: &ObligingGame, text: &str) -> Result<Strategy, StrategyParseError> {
        let arena = game.arena();
        let mut strategy = Strategy::new();
        let mut declared = None;
        let mut header = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| StrategyParseError { line: i + 1, message };
            let parts: Vec<&str> = line.split_whitespace().collect();
            if !header {
                match parts[..] {
                    ["strategy", "1"] => {
                        header = true;
                        continue;
                    }
                    ["strategy", v] => return Err(err(format!("unsupported strategy version `{v}`"))),
                    _ => return Err(err("expected header `strategy 1`".into())),
                }
            }
            let node = |s: &str| arena.node_index(s).ok_or_else(|| err(format!("unknown node `{s}`")));
            let mem = |s: &str| -> Result<usize, StrategyParseError> {
                let m: usize = s.parse().map_err(|_| err(format!("bad memory id `{s}`")))?;
                if declared.is_some_and(|d| m >= d) {
                    return Err(err(format!("memory id {m} out of range")));
                }
                Ok(m)
            };
            match parts[..] {
                ["memory:", count] => {
                    declared = Some(count.parse().map_err(|_| err(format!("bad memory count `{count}`")))?);
                }
                ["mem", id, label] => {
                    if mem(id)? != strategy.labels.len() {
                        return Err(err("memory ids must be consecutive".into()));
                    }
                    strategy.labels.push(label.to_string());
                }
                ["init", v, m] => strategy.set_init(node(v)?, mem(m)?),
                ["move", v, m, w] => {
                    let (v, w) = (node(v)?, node(w)?);
                    if arena.edge_colors(v, w).is_none() {
                        return Err(err(format!("no edge {} -> {}", arena.name(v), arena.name(w))));
                    }
                    strategy.set_move(v, mem(m)?, w);
                }
                ["update", m, s, t, m2] => strategy.set_update(mem(m)?, node(s)?, node(t)?, mem(m2)?),
                _ => return Err(err(format!("cannot parse `{line}`"))),
            }
        }
        if !header {
            return Err(StrategyParseError { line: 0, message: "empty strategy file".into() });
        }
        match declared {
            Some(d) if d == strategy.labels.len() => Ok(strategy),
            Some(d) => Err(StrategyParseError {
                line: 0,
                message: format!("declared {d} memory states, listed {}", strategy.labels.len()),
            }),
            None => Err(StrategyParseError { line: 0, message: "missing `memory:` line".into() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Owner;
    use crate::io::fixture;

    /// ∃ alternates at v4 between v5 and v1, starting with v5.
    pub(crate) fn alternating(game: &ObligingGame) -> Strategy {
        let a = game.arena();
        let v4 = a.node_index("v4").unwrap();
        let mut s = Strategy::new();
        let first = s.add_memory("to-v5");
        let second = s.add_memory("to-v1");
        for v in 0..a.node_count() {
            s.set_init(v, first);
        }
        s.set_move(v4, first, a.node_index("v5").unwrap());
        s.set_move(v4, second, a.node_index("v1").unwrap());
        s.set_move(a.node_index("v1").unwrap(), first, a.node_index("v2").unwrap());
        s.set_move(a.node_index("v1").unwrap(), second, a.node_index("v2").unwrap());
        for (src, dst, _) in a.edges() {
            for m in [first, second] {
                let next = if src == v4 { 1 - m } else { m };
                s.set_update(m, src, dst, next);
            }
        }
        s
    }

    #[test]
    fn alternating_strategy_on_ex1() {
        let g = fixture("ex1").unwrap();
        let r = verify(&g, &alternating(&g)).unwrap();
        assert!(r.strong_ok && r.gracious_ok, "{:?}", r.counterexample);
        assert_eq!(r.reachable_memory, 2);
    }

    #[test]
    fn alternating_strategy_fails_with_dashed_edge() {
        let g = fixture("ex1-dashed").unwrap();
        let s = alternating(&g);
        let Err(Counterexample::Strong(lasso)) = verify_strong(&g, &s).unwrap() else {
            panic!("expected a strong counterexample");
        };
        let b = g.color_index("b").unwrap();
        assert!(!g.lasso_infinity_set(&lasso).unwrap().contains(b));
    }

    #[test]
    fn avoiding_c_is_not_gracious() {
        let g = fixture("ex1").unwrap();
        let mut owners = g.arena().owners().to_vec();
        let a = g.arena();
        let (v2, v4) = (a.node_index("v2").unwrap(), a.node_index("v4").unwrap());
        owners[v2] = Owner::Exists;
        let g = g.with_owners(owners).unwrap();
        let mut s = alternating(&g);
        s.set_move(v2, 0, v4);
        s.set_move(v2, 1, v4);
        assert_eq!(verify_strong(&g, &s).unwrap(), Ok(()));
        assert!(matches!(verify_gracious(&g, &s).unwrap(), Err(Counterexample::Stuck { .. })));
    }

    #[test]
    fn extracted_strategies_verify() {
        for name in crate::io::FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            let r = crate::solver::solve(&g, &Default::default()).unwrap();
            let x = extract(&g, &r).unwrap();
            let report = verify(&g, &x.strategy).unwrap();
            assert!(report.ok(), "{name}: {}", report.counterexample.unwrap().display(&g));
            assert_eq!(x.strategy, extract(&g, &r).unwrap().strategy);
        }
    }

    #[test]
    fn text_round_trip() {
        let g = fixture("ex1").unwrap();
        let s = alternating(&g);
        assert_eq!(Strategy::from_text(&g, &s.to_text(&g)).unwrap(), s);
    }

    #[test]
    fn parse_errors() {
        let g = fixture("ex1").unwrap();
        let e = Strategy::from_text(&g, "strategy 2\n").unwrap_err();
        assert!(e.message.contains("version"));
        let e = Strategy::from_text(&g, "strategy 1\nmemory: 1\nmem 0 x\ninit v9 0\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("unknown node"));
        let e = Strategy::from_text(&g, "strategy 1\nmemory: 2\nmem 0 x\n").unwrap_err();
        assert!(e.message.contains("declared 2"));
    }
}
