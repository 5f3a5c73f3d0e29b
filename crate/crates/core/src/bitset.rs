//! Fixed-width packed bit rows.

use alloc::vec;
use alloc::vec::Vec;

const WORD: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `self ⊊ other`.
    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// Backing words; bits past `len` are always zero.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_queries_across_words() {
        let mut a = BitRow::new(130);
        let mut b = BitRow::new(130);
        a.set(3, true);
        a.set(129, true);
        b.set(3, true);
        assert!(!a.is_subset(&b));
        b.set(129, true);
        assert!(a.is_subset(&b) && !a.is_proper_subset(&b));
        b.set(64, true);
        assert!(a.is_proper_subset(&b));
        assert_eq!(b.count_ones(), 3);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![3, 64, 129]);
        b.set(64, false);
        assert!(!b.get(64));
    }
}
