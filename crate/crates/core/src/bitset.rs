//! Fixed-universe vertex sets stored as arrays of machine words.
//!
//! Element `i` lives in word `i >> 6`, bit `i & 63`. Bits at positions at or
//! beyond the universe size are always zero, so word-wise operations never
//! need masking except where a complement is involved.

use std::fmt;

type Word = u64;
const WORD_BITS: usize = Word::BITS as usize;
const SHIFT: u32 = WORD_BITS.trailing_zeros();
const MASK: usize = WORD_BITS - 1;

#[inline(always)]
fn word_index(i: usize) -> usize {
    i >> SHIFT
}

#[inline(always)]
fn bit_mask(i: usize) -> Word {
    1 << (i & MASK)
}

/// Outcome of counting a set's overlap with another, stopping at two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overlap {
    None,
    Single(usize),
    Many,
}

/// A subset of `[0, universe)` with value semantics.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    universe: usize,
    words: Vec<Word>,
}

impl BitSet {
    /// Empty set over `[0, universe)`.
    pub fn new(universe: usize) -> Self {
        BitSet {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    /// Set containing every element of `[0, universe)`.
    pub fn full(universe: usize) -> Self {
        let mut set = BitSet {
            universe,
            words: vec![Word::MAX; universe.div_ceil(WORD_BITS)],
        };
        set.clear_padding();
        set
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(universe: usize, elements: I) -> Self {
        let mut set = BitSet::new(universe);
        for v in elements {
            set.add(v);
        }
        set
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [Word] {
        &mut self.words
    }

    fn clear_padding(&mut self) {
        let tail = self.universe & MASK;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1 << tail) - 1;
            }
        }
    }

    #[inline]
    pub fn add(&mut self, v: usize) {
        debug_assert!(v < self.universe, "element {v} outside universe {}", self.universe);
        self.words[word_index(v)] |= bit_mask(v);
    }

    #[inline]
    pub fn rem(&mut self, v: usize) {
        debug_assert!(v < self.universe, "element {v} outside universe {}", self.universe);
        self.words[word_index(v)] &= !bit_mask(v);
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[word_index(v)] & bit_mask(v) != 0
    }

    /// Smallest element `>= from`, or `None` when there is none.
    #[inline]
    pub fn fsb(&self, from: usize) -> Option<usize> {
        if from >= self.universe {
            return None;
        }
        let mut w = word_index(from);
        let mut word = self.words[w] & (Word::MAX << (from & MASK));
        loop {
            if word != 0 {
                return Some((w << SHIFT) + word.trailing_zeros() as usize);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    /// Smallest element of the set.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.fsb(0)
    }

    /// Greatest element of the set.
    #[inline]
    pub fn gsb(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| (i << SHIFT) + (WORD_BITS - 1 - w.leading_zeros() as usize))
    }

    pub fn inter(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn diff(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    #[inline]
    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    #[inline]
    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    /// Overwrites `self` with `a ∩ b` without reallocating.
    #[inline]
    pub fn assign_inter(&mut self, a: &BitSet, b: &BitSet) {
        debug_assert_eq!(a.universe, b.universe);
        self.reset_to(a.universe);
        for ((o, x), y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            *o = x & y;
        }
    }

    /// Overwrites `self` with a copy of `other`, reusing the allocation.
    #[inline]
    pub fn copy_from(&mut self, other: &BitSet) {
        if self.words.len() == other.words.len() {
            self.words.copy_from_slice(&other.words);
        } else {
            self.words.clear();
            self.words.extend_from_slice(&other.words);
        }
        self.universe = other.universe;
    }

    /// Empties the set and resizes it to `universe`.
    pub fn reset_to(&mut self, universe: usize) {
        let len = universe.div_ceil(WORD_BITS);
        if self.words.len() == len {
            self.words.fill(0);
        } else {
            self.words.clear();
            self.words.resize(len, 0);
        }
        self.universe = universe;
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Classifies `|self ∩ other|` as zero, one (with the element), or more.
    pub fn overlap(&self, other: &BitSet) -> Overlap {
        let mut found = None;
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let w = a & b;
            if w == 0 {
                continue;
            }
            if found.is_some() || w.count_ones() > 1 {
                return Overlap::Many;
            }
            found = Some((i << SHIFT) + w.trailing_zeros() as usize);
        }
        found.map_or(Overlap::None, Overlap::Single)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[cfg(test)]
    fn padding_is_clear(&self) -> bool {
        let tail = self.universe & MASK;
        match self.words.last() {
            Some(&last) if tail != 0 => last >> tail == 0,
            _ => true,
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [Word],
    index: usize,
    current: Word,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some((self.index << SHIFT) + bit)
    }
}

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn set(n: usize, xs: &[usize]) -> BitSet {
        BitSet::from_elements(n, xs.iter().copied())
    }

    #[test]
    fn new_sets_are_empty() {
        let b = BitSet::new(8);
        assert!(b.is_empty());
        assert_eq!(b.cardinality(), 0);

        let z = BitSet::new(0);
        assert!(z.is_empty());
        assert_eq!(z.fsb(0), None);
        assert_eq!(z.gsb(), None);

        let wide = BitSet::new(130);
        assert_eq!(wide.words().len(), 3);
        assert!(wide.words().iter().all(|&w| w == 0));
    }

    #[test]
    fn add_produces_expected_bit_pattern() {
        let mut b = BitSet::new(8);
        b.add(1);
        b.add(3);
        b.add(6);
        let pattern: String = (0..8).map(|i| if b.contains(i) { '1' } else { '0' }).collect();
        assert_eq!(pattern, "01010010");

        let once = b.clone();
        b.add(3);
        assert_eq!(b, once);

        let mut all = BitSet::new(77);
        (0..77).for_each(|v| all.add(v));
        assert_eq!(all.cardinality(), 77);
        assert_eq!(all, BitSet::full(77));
    }

    #[test]
    fn rem_cases() {
        let mut b = set(8, &[1, 3, 6]);
        b.rem(3);
        assert_eq!(b, set(8, &[1, 6]));

        let mut e = BitSet::new(8);
        e.rem(0);
        assert!(e.is_empty());

        let mut f = BitSet::full(70);
        (0..70).for_each(|v| f.rem(v));
        assert!(f.is_empty());
    }

    #[test]
    fn fsb_and_gsb() {
        let b = set(8, &[1, 3, 6]);
        assert_eq!(b.fsb(0), Some(1));
        assert_eq!(b.fsb(2), Some(3));
        assert_eq!(b.fsb(7), None);
        assert_eq!(b.fsb(8), None);
        assert_eq!(BitSet::new(8).fsb(0), None);

        assert_eq!(b.gsb(), Some(6));
        assert_eq!(BitSet::new(8).gsb(), None);
        assert_eq!(set(8, &[0]).gsb(), Some(0));
        assert_eq!(set(200, &[3, 64, 199]).gsb(), Some(199));
        assert_eq!(set(200, &[3, 64, 199]).fsb(65), Some(199));
    }

    #[test]
    fn inter_and_diff() {
        let a = set(8, &[1, 3, 6]);
        assert_eq!(a.inter(&set(8, &[3, 6, 7])), set(8, &[3, 6]));
        assert!(a.inter(&BitSet::new(8)).is_empty());
        assert_eq!(a.inter(&a), a);

        assert_eq!(a.diff(&set(8, &[3, 7])), set(8, &[1, 6]));
        assert_eq!(a.diff(&BitSet::new(8)), a);
        assert!(a.diff(&a).is_empty());
    }

    #[test]
    fn copy_is_a_snapshot() {
        let a = set(8, &[1, 3, 6]);
        let mut c = a.clone();
        c.add(0);
        c.rem(6);
        assert_eq!(a, set(8, &[1, 3, 6]));
        assert_eq!(a.cardinality(), 3);
        assert!(BitSet::new(8).is_empty());
    }

    #[test]
    fn overlap_classification() {
        let a = set(130, &[2, 70, 129]);
        assert_eq!(a.overlap(&set(130, &[1, 5])), Overlap::None);
        assert_eq!(a.overlap(&set(130, &[70, 71])), Overlap::Single(70));
        assert_eq!(a.overlap(&set(130, &[2, 129])), Overlap::Many);
        assert_eq!(a.overlap(&set(130, &[128, 129, 2])), Overlap::Many);
    }

    #[derive(Debug, Clone)]
    enum Op {
        Add(usize),
        Rem(usize),
    }

    fn ops(n: usize) -> impl Strategy<Value = Vec<Op>> {
        prop::collection::vec(
            prop_oneof![(0..n).prop_map(Op::Add), (0..n).prop_map(Op::Rem)],
            0..200,
        )
    }

    fn universe_and_ops() -> impl Strategy<Value = (usize, Vec<Op>)> {
        (1usize..=1024).prop_flat_map(|n| (Just(n), ops(n)))
    }

    fn universe_and_pair() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
        (1usize..=300).prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(0..n, 0..n.min(80)),
                prop::collection::vec(0..n, 0..n.min(80)),
            )
        })
    }

    proptest! {
        #[test]
        fn add_rem_match_reference((n, ops) in universe_and_ops()) {
            let mut b = BitSet::new(n);
            let mut reference = BTreeSet::new();
            for op in ops {
                match op {
                    Op::Add(v) => { b.add(v); reference.insert(v); }
                    Op::Rem(v) => { b.rem(v); reference.remove(&v); }
                }
                prop_assert!(b.padding_is_clear());
            }
            prop_assert_eq!(b.to_vec(), reference.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(b.cardinality(), reference.len());
            for i in 0..=n {
                prop_assert_eq!(b.fsb(i), reference.range(i..).next().copied());
            }
            prop_assert_eq!(b.gsb(), reference.iter().next_back().copied());
        }

        #[test]
        fn set_algebra_matches_reference((n, xs, ys) in universe_and_pair()) {
            let a = BitSet::from_elements(n, xs.iter().copied());
            let b = BitSet::from_elements(n, ys.iter().copied());
            let ra: BTreeSet<usize> = xs.into_iter().collect();
            let rb: BTreeSet<usize> = ys.into_iter().collect();

            let i = a.inter(&b);
            let d = a.diff(&b);
            let u = a.union(&b);
            prop_assert_eq!(i.to_vec(), ra.intersection(&rb).copied().collect::<Vec<_>>());
            prop_assert_eq!(d.to_vec(), ra.difference(&rb).copied().collect::<Vec<_>>());
            prop_assert_eq!(u.to_vec(), ra.union(&rb).copied().collect::<Vec<_>>());
            prop_assert!(i.padding_is_clear() && d.padding_is_clear() && u.padding_is_clear());

            let complement = BitSet::full(n).diff(&a);
            prop_assert!(complement.padding_is_clear());
            prop_assert_eq!(complement.cardinality(), n - ra.len());

            // fsb(v + 1) enumeration visits members in increasing order
            let mut seen = Vec::new();
            let mut cursor = a.fsb(0);
            while let Some(v) = cursor {
                seen.push(v);
                cursor = a.fsb(v + 1);
            }
            prop_assert_eq!(seen, ra.iter().copied().collect::<Vec<_>>());
        }
    }
}
