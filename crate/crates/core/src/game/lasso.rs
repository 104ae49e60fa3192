use thiserror::Error;

use super::{Arena, ColorSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("empty path")]
    Empty,
    #[error("lasso loop is empty")]
    EmptyLoop,
    #[error("node {0} out of range")]
    NodeOutOfRange(usize),
    #[error("no edge from `{0}` to `{1}`")]
    MissingEdge(String, String),
}

/// Ultimately periodic path `stem · cycle^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lasso {
    pub stem: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl Lasso {
    pub fn new(stem: Vec<usize>, cycle: Vec<usize>) -> Lasso {
        Lasso { stem, cycle }
    }

    pub fn first(&self) -> usize {
        self.stem.first().copied().unwrap_or(self.cycle[0])
    }

    /// Node at position `i` of the infinite path.
    pub fn node_at(&self, i: usize) -> usize {
        if i < self.stem.len() {
            self.stem[i]
        } else {
            self.cycle[(i - self.stem.len()) % self.cycle.len()]
        }
    }

    /// First `len` nodes of the infinite path.
    pub fn unroll(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.node_at(i)).collect()
    }

    /// Checks every consecutive pair, the stem/loop junction and the closing edge.
    pub fn validate(&self, arena: &Arena) -> Result<(), PathError> {
        if self.cycle.is_empty() {
            return Err(PathError::EmptyLoop);
        }
        let mut path = self.stem.clone();
        path.extend(&self.cycle);
        path.push(self.cycle[0]);
        check_path(arena, &path)
    }

    /// Colors seen infinitely often, i.e. the colors on the loop edges including the closing edge.
    pub fn infinity_set(&self, arena: &Arena) -> Result<ColorSet, PathError> {
        self.validate(arena)?;
        let m = self.cycle.len();
        Ok((0..m).fold(ColorSet::EMPTY, |acc, i| {
            let c = arena.edge_colors(self.cycle[i], self.cycle[(i + 1) % m]).unwrap();
            acc.union(c)
        }))
    }
}

fn check_path(arena: &Arena, path: &[usize]) -> Result<(), PathError> {
    let n = arena.node_count();
    if let Some(&bad) = path.iter().find(|&&v| v >= n) {
        return Err(PathError::NodeOutOfRange(bad));
    }
    for pair in path.windows(2) {
        if arena.edge_colors(pair[0], pair[1]).is_none() {
            return Err(PathError::MissingEdge(
                arena.name(pair[0]).to_string(),
                arena.name(pair[1]).to_string(),
            ));
        }
    }
    Ok(())
}

/// Union of the edge colors along `path`, intersected with `restrict`.
pub fn fingerprint(arena: &Arena, path: &[usize], restrict: ColorSet) -> Result<ColorSet, PathError> {
    if path.is_empty() {
        return Err(PathError::Empty);
    }
    check_path(arena, path)?;
    Ok(path
        .windows(2)
        .fold(ColorSet::EMPTY, |acc, p| acc.union(arena.edge_colors(p[0], p[1]).unwrap()))
        .intersection(restrict))
}
