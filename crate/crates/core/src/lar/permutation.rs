use std::fmt;

use crate::game::{Color, ColorSet, ElFormula};

/// Later-appearance-record memory: an ordering of the colors of a set `C`.
/// Positions are 1-based; position 0 denotes "no color".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<Color>);

impl Permutation {
    /// The colors of `set` in declaration order.
    pub fn identity(set: ColorSet) -> Permutation {
        Permutation(set.iter().collect())
    }

    pub fn from_colors(colors: Vec<Color>) -> Permutation {
        let set: ColorSet = colors.iter().copied().collect();
        assert_eq!(set.len(), colors.len(), "permutation repeats a color");
        Permutation(colors)
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> ColorSet {
        self.0.iter().copied().collect()
    }

    /// Rightmost position holding a color of `d`, or 0 if none does.
    pub fn rightmost(&self, d: ColorSet) -> usize {
        self.0.iter().rposition(|&c| d.contains(c)).map_or(0, |i| i + 1)
    }

    /// Moves the color at `pos` (1-based) to the front; position 0 is the identity.
    pub fn shift_position(&self, pos: usize) -> Permutation {
        let mut next = self.0.clone();
        if pos > 0 {
            next[..pos].rotate_right(1);
        }
        Permutation(next)
    }

    /// `π@D`: moves the rightmost color of `D` to the front. Colors outside `π` are ignored.
    pub fn shift(&self, d: ColorSet) -> Permutation {
        self.shift_position(self.rightmost(d))
    }

    /// `π[i]`: the colors at the first `i` positions.
    pub fn prefix_set(&self, i: usize) -> ColorSet {
        self.0[..i].iter().copied().collect()
    }

    /// Priority `2p` or `2p+1` where `p` is the rightmost position hit by `d`.
    pub fn priority(&self, d: ColorSet, phi: &ElFormula) -> u32 {
        self.priority_at(self.rightmost(d), phi)
    }

    pub fn priority_at(&self, p: usize, phi: &ElFormula) -> u32 {
        let base = 2 * p as u32;
        if phi.eval(self.prefix_set(p)) {
            base
        } else {
            base + 1
        }
    }

    /// All orderings of `set`, starting with the identity, in lexicographic order of
    /// color ids.
    pub fn all(set: ColorSet) -> Vec<Permutation> {
        let mut cur: Vec<Color> = set.iter().collect();
        let mut out = vec![Permutation(cur.clone())];
        // next lexicographic permutation
        loop {
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation(cur.clone()));
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("π").field(&self.0.iter().map(|c| c.0).collect::<Vec<_>>()).finish()
    }
}

/// Every permutation of a color set with precomputed shifts and priorities.
#[derive(Clone, Debug)]
pub struct PermutationTable {
    perms: Vec<Permutation>,
    /// `shift[i][p]`: index of `perms[i]` with position `p` moved to the front.
    shift: Vec<Vec<usize>>,
    /// `priority[i][p]`: priority for rightmost position `p` under `perms[i]`.
    priority: Vec<Vec<u32>>,
}

impl PermutationTable {
    pub fn new(set: ColorSet, phi: &ElFormula) -> PermutationTable {
        let perms = Permutation::all(set);
        let index: std::collections::HashMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let d = set.len();
        let shift = perms
            .iter()
            .map(|p| (0..=d).map(|pos| index[&p.shift_position(pos)]).collect())
            .collect();
        let priority = perms
            .iter()
            .map(|p| (0..=d).map(|pos| p.priority_at(pos, phi)).collect())
            .collect();
        PermutationTable { perms, shift, priority }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.perms[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.perms.iter().position(|q| q == p)
    }

    /// Index of the declaration-order permutation.
    pub fn initial(&self) -> usize {
        0
    }

    pub fn rightmost(&self, i: usize, d: ColorSet) -> usize {
        self.perms[i].rightmost(d)
    }

    pub fn shift(&self, i: usize, pos: usize) -> usize {
        self.shift[i][pos]
    }

    pub fn priority(&self, i: usize, pos: usize) -> u32 {
        self.priority[i][pos]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Color = Color(0);
    const B: Color = Color(1);
    const C: Color = Color(2);
    const D: Color = Color(3);

    fn set(cs: &[Color]) -> ColorSet {
        cs.iter().copied().collect()
    }

    #[test]
    fn shift_examples() {
        let pi = Permutation::from_colors(vec![A, D, C, B]);
        let moved = Permutation::from_colors(vec![D, A, C, B]);
        assert_eq!(pi.shift(set(&[A, D])), moved);
        assert_eq!(pi.shift(set(&[D])), moved);
        assert_eq!(moved.shift(set(&[A, D])), pi);
        assert_eq!(pi.shift(ColorSet::EMPTY), pi);
    }

    #[test]
    fn prefix_sets() {
        let pi = Permutation::from_colors(vec![A, D, C, B]);
        assert_eq!(pi.prefix_set(2), set(&[A, D]));
        assert_eq!(pi.prefix_set(0), ColorSet::EMPTY);
        assert_eq!(pi.prefix_set(4), set(&[A, B, C, D]));
    }

    #[test]
    fn priorities() {
        let pi = Permutation::from_colors(vec![A, D, C, B]);
        let streett = ElFormula::streett(&[(A, B), (C, D)]).unwrap();
        assert_eq!(pi.priority(set(&[C]), &streett), 7);
        assert_eq!(pi.priority(ColorSet::EMPTY, &streett), 0);
        let single = Permutation::identity(set(&[A]));
        assert_eq!(single.priority(set(&[A]), &ElFormula::Inf(A)), 2);
    }

    #[test]
    fn all_permutations() {
        let perms = Permutation::all(set(&[A, B, C, D]));
        assert_eq!(perms.len(), 24);
        assert_eq!(perms[0], Permutation::identity(set(&[A, B, C, D])));
        let unique: std::collections::HashSet<_> = perms.iter().collect();
        assert_eq!(unique.len(), 24);
        assert_eq!(Permutation::all(ColorSet::EMPTY).len(), 1);
    }

    #[test]
    fn at_most_d_successors() {
        let s = set(&[A, B, C]);
        for pi in Permutation::all(s) {
            let outs: std::collections::HashSet<_> = s.subsets().map(|d| pi.shift(d)).collect();
            assert!(outs.len() <= 3);
        }
    }

    #[test]
    fn shift_rotates_a_prefix() {
        let s = set(&[A, B, C, D]);
        for pi in Permutation::all(s) {
            for d in s.subsets() {
                let p = pi.rightmost(d);
                let out = pi.shift(d);
                assert_eq!(out.colors()[p.max(1)..], pi.colors()[p.max(1)..]);
                assert_eq!(out.support(), s);
            }
        }
    }

    #[test]
    fn table_matches_direct_computation() {
        let s = set(&[A, B, C]);
        let phi = ElFormula::rabin(&[(A, B), (B, C)]).unwrap();
        let table = PermutationTable::new(s, &phi);
        for i in 0..table.len() {
            for pos in 0..=3 {
                assert_eq!(table.get(table.shift(i, pos)), &table.get(i).shift_position(pos));
                assert_eq!(table.priority(i, pos), table.get(i).priority_at(pos, &phi));
            }
        }
    }
}
