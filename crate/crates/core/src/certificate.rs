//! Finite lasso certificates and their extraction from accepting witnesses.

use std::collections::VecDeque;

use thiserror::Error;

use crate::game::{ColorSet, Lasso, ObligingGame, PathError};

/// A lasso `stem · cycle^ω` whose stem starts at the certified node.
///
/// Positions `0..stem.len()` index the stem, positions `stem.len()..len()` the loop; the
/// successor of the last position wraps to `stem.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub stem: Vec<usize>,
    pub cycle: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate stem is empty")]
    EmptyStem,
    #[error("malformed certificate: {0}")]
    Structure(#[from] PathError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtractError {
    #[error("witness is not a lasso in the arena: {0}")]
    Structure(#[from] PathError),
    #[error("witness violates the {0} objective")]
    NotAccepting(&'static str),
}

impl Certificate {
    pub fn new(stem: Vec<usize>, cycle: Vec<usize>) -> Certificate {
        Certificate { stem, cycle }
    }

    /// The certified node.
    pub fn node(&self) -> usize {
        self.stem[0]
    }

    pub fn len(&self) -> usize {
        self.stem.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn at(&self, pos: usize) -> usize {
        if pos < self.stem.len() {
            self.stem[pos]
        } else {
            self.cycle[pos - self.stem.len()]
        }
    }

    pub fn next_pos(&self, pos: usize) -> usize {
        if pos + 1 < self.len() {
            pos + 1
        } else {
            self.stem.len()
        }
    }

    /// The same play with the loop starting as early as possible: while the stem has
    /// more than one node and ends with the loop's last node, that node moves into the
    /// loop.
    pub fn fold_stem(&self) -> Certificate {
        let mut out = self.clone();
        while out.stem.len() > 1 && out.stem.last() == out.cycle.last() {
            out.stem.pop();
            out.cycle.rotate_right(1);
        }
        out
    }

    pub fn as_lasso(&self) -> Lasso {
        Lasso::new(self.stem.clone(), self.cycle.clone())
    }

    pub fn check_structure(&self, game: &ObligingGame) -> Result<(), CertificateError> {
        if self.stem.is_empty() {
            return Err(CertificateError::EmptyStem);
        }
        self.as_lasso().validate(game.arena())?;
        Ok(())
    }

    /// Whether the induced play satisfies both objectives. Structural defects are errors.
    pub fn is_valid(&self, game: &ObligingGame) -> Result<bool, CertificateError> {
        self.check_structure(game)?;
        let inf = self.as_lasso().infinity_set(game.arena())?;
        Ok(game.strong().eval(inf) && game.weak().eval(inf))
    }

    /// `stem ~ loop` with node names.
    pub fn display(&self, game: &ObligingGame) -> String {
        format!("{} ~ {}", game.format_path(&self.stem), game.format_path(&self.cycle))
    }

    /// S-fingerprint of the prefix ending at each of the first `steps` positions.
    pub fn prefix_fingerprints(&self, game: &ObligingGame, steps: usize) -> Vec<(usize, ColorSet)> {
        prefix_fingerprints(game, |i| if i < self.stem.len() { self.stem[i] } else {
            self.cycle[(i - self.stem.len()) % self.cycle.len()]
        }, steps)
    }
}

fn prefix_fingerprints(
    game: &ObligingGame,
    node_at: impl Fn(usize) -> usize,
    steps: usize,
) -> Vec<(usize, ColorSet)> {
    let s = game.strong_colors();
    let mut out = Vec::with_capacity(steps);
    let mut fp = ColorSet::EMPTY;
    for i in 0..steps {
        if i > 0 {
            let c = game.arena().edge_colors(node_at(i - 1), node_at(i)).expect("path edge");
            fp = fp.union(c.intersection(s));
        }
        out.push((node_at(i), fp));
    }
    out
}

/// `n·d + (d+k+1)·(n+1)`.
pub fn cert_len(n: usize, d: usize, k: usize) -> usize {
    n * d + (d + k + 1) * (n + 1)
}

pub fn game_cert_len(game: &ObligingGame) -> usize {
    cert_len(game.n(), game.d(), game.k())
}

/// Largest stem produced by [`extract_certificate`]: one node per distinct
/// `(node, fingerprint)` pair along a growing fingerprint chain.
pub fn stem_bound(n: usize, d: usize) -> usize {
    n * (d + 1)
}

pub fn loop_bound(n: usize, d: usize, k: usize) -> usize {
    (d + k + 1) * (n + 1)
}

/// Shrinks an accepting lasso into a certificate for its first node.
///
/// The stem is the witness prefix up to the first position where the S-fingerprint is
/// complete and only loop nodes follow, with fingerprint-neutral detours cut out. The
/// loop walks the witness loop's edges, collecting each recurring color in declaration
/// order along shortest paths, and returns to the end of the stem.
pub fn extract_certificate(witness: &Lasso, game: &ObligingGame) -> Result<Certificate, ExtractError> {
    let arena = game.arena();
    let inf = witness.infinity_set(arena)?;
    if !game.strong().eval(inf) {
        return Err(ExtractError::NotAccepting("strong"));
    }
    if !game.weak().eval(inf) {
        return Err(ExtractError::NotAccepting("weak"));
    }

    // stem
    let horizon = witness.stem.len() + witness.cycle.len() + 1;
    let rho = prefix_fingerprints(game, |i| witness.node_at(i), horizon);
    let full = rho[horizon - 1].1;
    let mut on_loop = vec![false; arena.node_count()];
    for &v in &witness.cycle {
        on_loop[v] = true;
    }
    let settled = witness.stem.iter().rposition(|&v| !on_loop[v]).map_or(0, |i| i + 1);
    let complete = rho.iter().position(|&(_, fp)| fp == full).unwrap();
    let j = settled.max(complete);
    let mut seq: Vec<(usize, ColorSet)> = rho[..=j].to_vec();
    loop {
        let repeat = (0..seq.len()).find_map(|p| {
            (p + 1..seq.len()).rev().find(|&q| seq[q] == seq[p]).map(|q| (p, q))
        });
        match repeat {
            Some((p, q)) => {
                seq.drain(p + 1..=q);
            }
            None => break,
        }
    }
    debug_assert_eq!(seq.last().unwrap().1, full);
    let stem: Vec<usize> = seq.iter().map(|&(v, _)| v).collect();
    let anchor = *stem.last().unwrap();

    // loop over the recurring edges
    let m = witness.cycle.len();
    let mut edges: Vec<(usize, usize, ColorSet)> = (0..m)
        .map(|i| {
            let (v, w) = (witness.cycle[i], witness.cycle[(i + 1) % m]);
            (v, w, arena.edge_colors(v, w).unwrap())
        })
        .collect();
    edges.sort_by_key(|&(v, w, _)| (v, w));
    edges.dedup();
    let walk = |from: usize, hit: &dyn Fn(&(usize, usize, ColorSet)) -> bool| -> Vec<usize> {
        let (dist, parent) = bfs(arena.node_count(), &edges, from);
        let (_, t, s) = edges
            .iter()
            .filter(|e| hit(e) && dist[e.0] != usize::MAX)
            .map(|&(s, t, _)| (dist[s] + 1, t, s))
            .min()
            .expect("recurring edges are strongly connected");
        let mut path = vec![t];
        let mut cur = s;
        while cur != from {
            path.push(cur);
            cur = parent[cur];
        }
        path.reverse();
        path
    };
    let mut cycle = Vec::new();
    let mut cur = anchor;
    for c in inf.iter() {
        let seg = walk(cur, &|e| e.2.contains(c));
        cur = *seg.last().unwrap();
        cycle.extend(seg);
    }
    if cur != anchor || cycle.is_empty() {
        cycle.extend(walk(cur, &|e| e.1 == anchor));
    }

    let cert = Certificate { stem, cycle };
    debug_assert_eq!(cert.is_valid(game), Ok(true));
    Ok(cert)
}

/// BFS over the edge list; neighbors in ascending order, so parents are deterministic.
fn bfs(n: usize, edges: &[(usize, usize, ColorSet)], from: usize) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &(_, w, _) in edges.iter().filter(|e| e.0 == v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// Every certificate position up to two loop passes is matched by some witness position
/// with the same node and the same S-fingerprint.
pub fn fingerprints_correspond(cert: &Certificate, witness: &Lasso, game: &ObligingGame) -> bool {
    let cert_steps = cert.stem.len() + 2 * cert.cycle.len();
    let wit_steps = witness.stem.len() + 2 * witness.cycle.len() + 1;
    let seen: std::collections::HashSet<(usize, ColorSet)> =
        prefix_fingerprints(game, |i| witness.node_at(i), wit_steps).into_iter().collect();
    cert.prefix_fingerprints(game, cert_steps).iter().all(|p| seen.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixture;

    fn ids(game: &ObligingGame, names: &str) -> Vec<usize> {
        names.split_whitespace().map(|s| game.arena().node_index(s).unwrap()).collect()
    }

    #[test]
    fn cert_len_arithmetic() {
        assert_eq!(cert_len(3, 4, 4), 48);
        assert_eq!(cert_len(1, 0, 0), 2);
        assert_eq!(cert_len(5, 4, 2), 62);
    }

    #[test]
    fn known_witness_gives_known_certificate() {
        let g = fixture("ex10").unwrap();
        let witness = Lasso::new(ids(&g, "x y y z"), ids(&g, "y z z"));
        let cert = extract_certificate(&witness, &g).unwrap();
        assert_eq!(cert.display(&g), "x y y z z ~ y z z y z");
        assert!(fingerprints_correspond(&cert, &witness, &g));
    }

    #[test]
    fn self_loop_is_already_minimal() {
        let g = fixture("ex10").unwrap();
        let z = ids(&g, "z");
        let err = extract_certificate(&Lasso::new(vec![], z.clone()), &g).unwrap_err();
        assert_eq!(err, ExtractError::NotAccepting("weak"));
        // the only color is weak, so the fingerprint is complete at position 0
        let text = "oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {a}\nstrong: true\nweak: Inf(a)\n";
        let g = crate::io::parse_game(text).unwrap();
        let cert = extract_certificate(&Lasso::new(vec![], vec![0]), &g).unwrap();
        assert_eq!(cert, Certificate::new(vec![0], vec![0]));
        // a strong color is only collected by the first edge, so the stem takes it
        let text = "oblige 1\nnodes: 1\nowners: E\ncolors: a\nedge 0 0 {a}\nstrong: Inf(a)\nweak: true\n";
        let g = crate::io::parse_game(text).unwrap();
        let cert = extract_certificate(&Lasso::new(vec![], vec![0]), &g).unwrap();
        assert_eq!(cert, Certificate::new(vec![0, 0], vec![0]));
    }

    #[test]
    fn structural_errors_are_distinct() {
        let g = fixture("ex10").unwrap();
        let short = Certificate::new(ids(&g, "x"), ids(&g, "y z z"));
        // closing edge z -> y exists, junction x -> y exists: structurally fine
        assert_eq!(short.is_valid(&g), Ok(true));
        let broken = Certificate::new(ids(&g, "x z"), ids(&g, "z"));
        assert!(matches!(broken.is_valid(&g), Err(CertificateError::Structure(_))));
        assert_eq!(Certificate::new(vec![], ids(&g, "y")).is_valid(&g), Err(CertificateError::EmptyStem));
    }
}
