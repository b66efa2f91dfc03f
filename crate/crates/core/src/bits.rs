//! Fixed-capacity bitsets backed by `u64` words.
//!
//! Adjacency rows, zero-divisor sets, vertex subsets and search candidate
//! sets are all stored as [`Bitset`]s so that intersections, unions and
//! emptiness tests run word-parallel instead of element by element.

const WORD_BITS: usize = 64;

/// A set over `0..capacity` stored as packed `u64` words.
///
/// Bits at positions `>= capacity` are kept zero at all times; `Eq` and
/// `count()` rely on that invariant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    words: Vec<u64>,
    capacity: usize,
}

impl Bitset {
    /// Empty set over `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        Bitset {
            words: vec![0; capacity.div_ceil(WORD_BITS)],
            capacity,
        }
    }

    /// Set over `0..capacity` with every position present.
    pub fn full(capacity: usize) -> Self {
        let mut s = Bitset::new(capacity);
        for w in &mut s.words {
            *w = !0;
        }
        s.clear_tail();
        s
    }

    /// Collects positions from an iterator.
    pub fn from_indices<I: IntoIterator<Item = usize>>(capacity: usize, indices: I) -> Self {
        let mut s = Bitset::new(capacity);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Number of positions the set ranges over (not the number of members).
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.capacity,
            "bit index {i} out of range {}",
            self.capacity
        );
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(
            i < self.capacity,
            "bit index {i} out of range {}",
            self.capacity
        );
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn contains(&self, i: usize) -> bool {
        assert!(
            i < self.capacity,
            "bit index {i} out of range {}",
            self.capacity
        );
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// True when the two sets share no member.
    pub fn is_disjoint(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// True when every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Removes every member of `other` from `self`.
    pub fn difference_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    /// Removes every member `<= i`.
    pub fn retain_above(&mut self, i: usize) {
        let cutoff_word = (i / WORD_BITS).min(self.words.len());
        for w in self.words.iter_mut().take(cutoff_word) {
            *w = 0;
        }
        if cutoff_word < self.words.len() {
            let keep_mask = (!0u64).checked_shl((i % WORD_BITS) as u32 + 1).unwrap_or(0);
            self.words[cutoff_word] &= keep_mask;
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Members collected into a sorted vector.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn clear_tail(&mut self) {
        let used = self.capacity % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1 << used) - 1;
            }
        }
    }
}

impl std::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    set: &'a Bitset,
    word_index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * WORD_BITS + bit)
    }
}
