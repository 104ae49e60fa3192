//! Arenas, colorings and obliging games.

mod color;
mod formula;
mod lasso;

pub use color::{Color, ColorSet, MAX_COLORS};
pub use formula::{ElFormula, FormulaDisplay, FormulaError};
pub use lasso::{fingerprint, Lasso, PathError};

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Owner {
    Exists,
    Forall,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("arena has no nodes")]
    NoNodes,
    #[error("expected {expected} owners, got {got}")]
    OwnerCount { expected: usize, got: usize },
    #[error("expected {expected} node names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("duplicate node name `{0}`")]
    DuplicateNode(String),
    #[error("duplicate color name `{0}`")]
    DuplicateColor(String),
    #[error("edge ({0}, {1}) refers to a node out of range")]
    NodeOutOfRange(usize, usize),
    #[error("node `{0}` has no successor")]
    NoSuccessor(String),
    #[error("too many colors ({0}, at most {MAX_COLORS})")]
    TooManyColors(usize),
    #[error("formula uses undeclared color id {0}")]
    UnknownColor(usize),
    #[error("edge `{0}` -> `{1}` carries color `{2}` that occurs in neither objective")]
    StrayEdgeColor(String, String, String),
}

/// Directed graph with owners; each node keeps its successors sorted by target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arena {
    names: Vec<String>,
    owners: Vec<Owner>,
    succ: Vec<Vec<(usize, ColorSet)>>,
    pred: Vec<Vec<usize>>,
}

impl Arena {
    /// Builds an arena, merging parallel edges by color union.
    pub fn new(
        names: Vec<String>,
        owners: Vec<Owner>,
        edges: impl IntoIterator<Item = (usize, usize, ColorSet)>,
    ) -> Result<Arena, GameError> {
        let n = owners.len();
        if n == 0 {
            return Err(GameError::NoNodes);
        }
        if names.len() != n {
            return Err(GameError::NameCount { expected: n, got: names.len() });
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(GameError::DuplicateNode(name.clone()));
            }
        }
        let mut succ: Vec<Vec<(usize, ColorSet)>> = vec![Vec::new(); n];
        for (s, t, cs) in edges {
            if s >= n || t >= n {
                return Err(GameError::NodeOutOfRange(s, t));
            }
            match succ[s].iter_mut().find(|(w, _)| *w == t) {
                Some((_, existing)) => *existing = existing.union(cs),
                None => succ[s].push((t, cs)),
            }
        }
        let mut pred = vec![Vec::new(); n];
        for (v, out) in succ.iter_mut().enumerate() {
            if out.is_empty() {
                return Err(GameError::NoSuccessor(names[v].clone()));
            }
            out.sort_by_key(|&(w, _)| w);
            for &(w, _) in out.iter() {
                pred[w].push(v);
            }
        }
        Ok(Arena { names, owners, succ, pred })
    }

    /// Arena with nodes named `0`, `1`, ...
    pub fn unnamed(
        owners: Vec<Owner>,
        edges: impl IntoIterator<Item = (usize, usize, ColorSet)>,
    ) -> Result<Arena, GameError> {
        let names = (0..owners.len()).map(|i| i.to_string()).collect();
        Arena::new(names, owners, edges)
    }

    pub fn node_count(&self) -> usize {
        self.owners.len()
    }

    pub fn owner(&self, v: usize) -> Owner {
        self.owners[v]
    }

    pub fn owners(&self) -> &[Owner] {
        &self.owners
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn successors(&self, v: usize) -> &[(usize, ColorSet)] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn edge_colors(&self, v: usize, w: usize) -> Option<ColorSet> {
        self.succ[v]
            .binary_search_by_key(&w, |&(t, _)| t)
            .ok()
            .map(|i| self.succ[v][i].1)
    }

    /// All edges as `(source, target, colors)`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, ColorSet)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(v, out)| out.iter().map(move |&(w, c)| (v, w, c)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn with_owners(&self, owners: Vec<Owner>) -> Result<Arena, GameError> {
        Arena::new(self.names.clone(), owners, self.edges())
    }
}

/// An obliging game: an arena plus strong and weak Emerson-Lei objectives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObligingGame {
    arena: Arena,
    color_names: Vec<String>,
    strong: ElFormula,
    weak: ElFormula,
}

impl ObligingGame {
    pub fn new(
        arena: Arena,
        color_names: Vec<String>,
        strong: ElFormula,
        weak: ElFormula,
    ) -> Result<ObligingGame, GameError> {
        if color_names.len() > MAX_COLORS {
            return Err(GameError::TooManyColors(color_names.len()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &color_names {
            if !seen.insert(name.as_str()) {
                return Err(GameError::DuplicateColor(name.clone()));
            }
        }
        let universe = ColorSet::full(color_names.len());
        for f in [&strong, &weak] {
            if let Some(c) = f.colors().difference(universe).iter().next() {
                return Err(GameError::UnknownColor(c.0));
            }
        }
        let relevant = strong.colors().union(weak.colors());
        for (v, w, cs) in arena.edges() {
            if let Some(c) = cs.difference(relevant).iter().next() {
                let cname = color_names.get(c.0).cloned().unwrap_or_else(|| format!("#{}", c.0));
                return Err(GameError::StrayEdgeColor(
                    arena.name(v).to_string(),
                    arena.name(w).to_string(),
                    cname,
                ));
            }
        }
        Ok(ObligingGame { arena, color_names, strong, weak })
    }

    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    pub fn color_names(&self) -> &[String] {
        &self.color_names
    }

    pub fn color_index(&self, name: &str) -> Option<Color> {
        self.color_names.iter().position(|x| x == name).map(Color)
    }

    pub fn strong(&self) -> &ElFormula {
        &self.strong
    }

    pub fn weak(&self) -> &ElFormula {
        &self.weak
    }

    /// The strong color set S.
    pub fn strong_colors(&self) -> ColorSet {
        self.strong.colors()
    }

    /// The weak color set W.
    pub fn weak_colors(&self) -> ColorSet {
        self.weak.colors()
    }

    pub fn n(&self) -> usize {
        self.arena.node_count()
    }

    pub fn d(&self) -> usize {
        self.strong_colors().len()
    }

    pub fn k(&self) -> usize {
        self.weak_colors().len()
    }

    /// Same game with replaced owners.
    pub fn with_owners(&self, owners: Vec<Owner>) -> Result<ObligingGame, GameError> {
        ObligingGame::new(
            self.arena.with_owners(owners)?,
            self.color_names.clone(),
            self.strong.clone(),
            self.weak.clone(),
        )
    }

    /// Formats a color set with color names, e.g. `{a,c}`.
    pub fn format_colors(&self, cs: ColorSet) -> String {
        let names: Vec<&str> = cs.iter().map(|c| self.color_names[c.0].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Fingerprint of a finite play restricted to `restrict`.
    pub fn fingerprint(&self, path: &[usize], restrict: ColorSet) -> Result<ColorSet, PathError> {
        fingerprint(&self.arena, path, restrict)
    }

    pub fn lasso_infinity_set(&self, lasso: &Lasso) -> Result<ColorSet, PathError> {
        lasso.infinity_set(&self.arena)
    }

    pub fn format_path(&self, path: &[usize]) -> String {
        path.iter().map(|&v| self.arena.name(v)).collect::<Vec<_>>().join(" ")
    }
}
