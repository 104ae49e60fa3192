use std::fmt;

/// Maximum number of distinct colors a game may declare.
pub const MAX_COLORS: usize = 64;

/// Dense color id, assigned in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub usize);

/// A set of colors backed by a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(c: Color) -> Self {
        debug_assert!(c.0 < MAX_COLORS);
        ColorSet(1 << c.0)
    }

    /// The set `{0, .., count-1}`.
    pub fn full(count: usize) -> Self {
        if count >= 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << count) - 1)
        }
    }

    pub fn contains(self, c: Color) -> bool {
        c.0 < MAX_COLORS && self.0 & (1 << c.0) != 0
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c.0;
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c.0);
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: ColorSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Colors in increasing id order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(Color(c))
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = ColorSet> {
        // standard submask enumeration, descending
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(ColorSet(cur))
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<T: IntoIterator<Item = Color>>(iter: T) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s: ColorSet = [Color(0), Color(2), Color(5)].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(ColorSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn iter_is_ordered() {
        let s: ColorSet = [Color(3), Color(1)].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![Color(1), Color(3)]);
        assert_eq!(s.len(), 2);
    }
}
