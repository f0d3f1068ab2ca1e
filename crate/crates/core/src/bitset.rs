//! Fixed-universe bitsets over `u64` words.
//!
//! Backs adjacency rows and candidate sets. Every binary operation expects
//! both operands to share the same universe size; mismatches are debug
//! assertions, not runtime errors.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

/// Set of vertex ids drawn from a fixed universe `0..universe`.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    /// Empty set over `0..universe`.
    pub fn new(universe: usize) -> Self {
        Self {
            words: vec![0; word_count(universe)],
            universe,
        }
    }

    /// Set containing every vertex of the universe.
    pub fn full(universe: usize) -> Self {
        let mut set = Self {
            words: vec![!0u64; word_count(universe)],
            universe,
        };
        set.mask_tail();
        set
    }

    /// Clears any bits beyond `universe` in the last word.
    fn mask_tail(&mut self) {
        let used = self.universe % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        debug_assert!((v as usize) < self.universe);
        self.words[v as usize / WORD_BITS] >> (v as usize % WORD_BITS) & 1 != 0
    }

    /// Adds `v`; returns true if it was not already present.
    #[inline]
    pub fn insert(&mut self, v: u32) -> bool {
        debug_assert!((v as usize) < self.universe);
        let word = &mut self.words[v as usize / WORD_BITS];
        let bit = 1u64 << (v as usize % WORD_BITS);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    /// Removes `v`; returns true if it was present.
    #[inline]
    pub fn remove(&mut self, v: u32) -> bool {
        debug_assert!((v as usize) < self.universe);
        let word = &mut self.words[v as usize / WORD_BITS];
        let bit = 1u64 << (v as usize % WORD_BITS);
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `|self ∩ other|`.
    pub fn intersection_count(&self, other: &Self) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self ∩ other \ excluded|`.
    pub fn intersection_count_excluding(&self, other: &Self, excluded: &Self) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        debug_assert_eq!(self.universe, excluded.universe);
        self.words
            .iter()
            .zip(&other.words)
            .zip(&excluded.words)
            .map(|((a, b), e)| (a & b & !e).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// True when every member of `self` is also in `other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// `self |= a ∩ b`.
    pub fn union_with_intersection(&mut self, a: &Self, b: &Self) {
        debug_assert_eq!(self.universe, a.universe);
        debug_assert_eq!(self.universe, b.universe);
        for ((dst, x), y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            *dst |= x & y;
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<u32> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((i * WORD_BITS + w.trailing_zeros() as usize) as u32);
            }
        }
        None
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Calls `f` for every id of the universe that is NOT in the set,
    /// in ascending order.
    pub fn for_each_absent(&self, mut f: impl FnMut(u32)) {
        let full_words = self.universe / WORD_BITS;
        let tail = self.universe % WORD_BITS;
        for (i, &w) in self.words.iter().enumerate() {
            let mut inv = !w;
            if i == full_words {
                // last, partial word
                if tail == 0 {
                    break;
                }
                inv &= (1u64 << tail) - 1;
            }
            while inv != 0 {
                let b = inv.trailing_zeros() as usize;
                f((i * WORD_BITS + b) as u32);
                inv &= inv - 1;
            }
        }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = u32;
    type IntoIter = Ones<'a>;

    fn into_iter(self) -> Ones<'a> {
        self.iter()
    }
}

/// Iterator over set members in ascending order.
pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some((self.word_idx * WORD_BITS + bit) as u32)
    }
}
