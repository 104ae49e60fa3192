//! Max-parity games with priorities on edges.

use std::fmt::Write as _;

use crate::game::Owner;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityGame {
    owners: Vec<Owner>,
    succ: Vec<Vec<(usize, u32)>>,
}

/// Winning regions and positional strategies; `strategy[v]` is the successor chosen by
/// the owner of `v` when `v` lies in its own winning region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParitySolution {
    pub winner: Vec<Owner>,
    pub strategy: Vec<Option<usize>>,
}

impl ParitySolution {
    pub fn won_by_exists(&self, v: usize) -> bool {
        self.winner[v] == Owner::Exists
    }
}

impl ParityGame {
    pub fn new(owners: Vec<Owner>) -> ParityGame {
        let n = owners.len();
        ParityGame { owners, succ: vec![Vec::new(); n] }
    }

    pub fn add_node(&mut self, owner: Owner) -> usize {
        self.owners.push(owner);
        self.succ.push(Vec::new());
        self.owners.len() - 1
    }

    pub fn add_edge(&mut self, v: usize, w: usize, priority: u32) {
        self.succ[v].push((w, priority));
    }

    pub fn node_count(&self) -> usize {
        self.owners.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn owner(&self, v: usize) -> Owner {
        self.owners[v]
    }

    pub fn successors(&self, v: usize) -> &[(usize, u32)] {
        &self.succ[v]
    }

    pub fn max_priority(&self) -> u32 {
        self.succ.iter().flatten().map(|&(_, p)| p).max().unwrap_or(0)
    }

    pub fn is_total(&self) -> bool {
        self.succ.iter().all(|s| !s.is_empty())
    }

    /// `parity 1`, then one `node <id> <E|A>` and one `edge <src> <dst> <priority>` per line.
    pub fn to_text(&self) -> String {
        let mut out = String::from("parity 1\n");
        for (v, o) in self.owners.iter().enumerate() {
            writeln!(out, "node {v} {}", if *o == Owner::Exists { 'E' } else { 'A' }).unwrap();
        }
        for (v, out_edges) in self.succ.iter().enumerate() {
            for &(w, p) in out_edges {
                writeln!(out, "edge {v} {w} {p}").unwrap();
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ParityGame, String> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        if lines.next() != Some("parity 1") {
            return Err("expected header `parity 1`".into());
        }
        let mut game = ParityGame::new(Vec::new());
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| format!("bad number `{s}`"));
            match parts[..] {
                ["node", id, o] => {
                    if num(id)? != game.node_count() {
                        return Err(format!("node ids must be consecutive at `{line}`"));
                    }
                    game.add_node(match o {
                        "E" => Owner::Exists,
                        "A" => Owner::Forall,
                        _ => return Err(format!("bad owner `{o}`")),
                    });
                }
                ["edge", v, w, p] => {
                    let (v, w, p) = (num(v)?, num(w)?, num(p)? as u32);
                    if v >= game.node_count() || w >= game.node_count() {
                        return Err(format!("unknown node in `{line}`"));
                    }
                    game.add_edge(v, w, p);
                }
                _ => return Err(format!("cannot parse `{line}`")),
            }
        }
        Ok(game)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let mut g = ParityGame::new(vec![Owner::Exists, Owner::Forall]);
        g.add_edge(0, 1, 3);
        g.add_edge(1, 0, 0);
        g.add_edge(1, 1, 2);
        assert_eq!(ParityGame::from_text(&g.to_text()).unwrap(), g);
        assert!(ParityGame::from_text("parity 2\n").is_err());
    }
}
