//! Growable bit masks used as search-state keys.
//!
//! States in the backtracking searches are subsets of a fixed indexed family
//! (circuits of a base clutter, generators of an ideal, facets of a complex).
//! Families of up to 128 members stay inline.

use smallvec::{smallvec, SmallVec};

#[derive(Clone, Default)]
pub struct BitMask {
    words: SmallVec<[u64; 2]>,
}

// Equality and hashing ignore trailing zero words, so masks built with
// different capacities compare equal when they hold the same members.
impl PartialEq for BitMask {
    fn eq(&self, other: &Self) -> bool {
        self.significant() == other.significant()
    }
}

impl Eq for BitMask {}

impl std::hash::Hash for BitMask {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.significant().hash(state);
    }
}

impl BitMask {
    fn significant(&self) -> &[u64] {
        let end = self
            .words
            .iter()
            .rposition(|&w| w != 0)
            .map_or(0, |p| p + 1);
        &self.words[..end]
    }

    pub fn new(len: usize) -> Self {
        BitMask {
            words: smallvec![0; len.div_ceil(64).max(1)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut m = Self::new(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1u64 << (i % 64)) != 0)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / 64) {
            *w &= !(1u64 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + t)
            })
        })
    }

    pub fn and(&self, other: &BitMask) -> BitMask {
        let len = self.words.len().min(other.words.len());
        let mut words: SmallVec<[u64; 2]> = smallvec![0; self.words.len().max(other.words.len())];
        for i in 0..len {
            words[i] = self.words[i] & other.words[i];
        }
        BitMask { words }
    }

    pub fn and_not(&self, other: &BitMask) -> BitMask {
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        out
    }

    pub fn or(&self, other: &BitMask) -> BitMask {
        let mut out = if self.words.len() >= other.words.len() {
            self.clone()
        } else {
            other.clone()
        };
        let short = if self.words.len() >= other.words.len() {
            other
        } else {
            self
        };
        for (w, o) in out.words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        out
    }

    pub fn intersects(&self, other: &BitMask) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &BitMask) -> bool {
        self.words.iter().enumerate().all(|(i, &w)| {
            let o = other.words.get(i).copied().unwrap_or(0);
            w & !o == 0
        })
    }
}

impl std::fmt::Debug for BitMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for BitMask {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut m = BitMask::new(1);
        for i in iter {
            m.insert(i);
        }
        m
    }
}
