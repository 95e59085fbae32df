//! Subsets of the ground set `[n] = {1, ..., n}` packed into a machine word.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices drawn from `[n]`, vertex `v` stored at bit `v - 1`.
///
/// The universe size is carried by the containing object (clutter, complex,
/// ideal); a bare `VertexSet` only knows which vertices it holds. The total
/// order is lexicographic on the ascending member lists, so
/// `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "universe size {n} exceeds {MAX_VERTICES}");
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: u32) -> Self {
        assert!((1..=MAX_VERTICES as u32).contains(&v), "vertex {v} out of range");
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from 1-based vertices, checking each lies in `[n]`.
    /// Repeated vertices are rejected.
    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        if n > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(n));
        }
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v as usize > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let bit = 1u64 << (v - 1);
            if bits & bit != 0 {
                return Err(Error::InvalidArgument(format!("vertex {v} repeated")));
            }
            bits |= bit;
        }
        Ok(VertexSet(bits))
    }

    /// Panicking shorthand for literals in tests and examples.
    pub fn of(vertices: &[u32]) -> Self {
        vertices
            .iter()
            .fold(VertexSet::EMPTY, |s, &v| s.with(v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: u32) -> bool {
        v >= 1 && v as usize <= MAX_VERTICES && self.0 & (1u64 << (v - 1)) != 0
    }

    #[inline]
    pub fn with(self, v: u32) -> Self {
        self | VertexSet::singleton(v)
    }

    #[inline]
    pub fn without(self, v: u32) -> Self {
        self - VertexSet::singleton(v)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// `[n] \ self`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet::full(n) - self
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Largest vertex index, 0 for the empty set.
    pub fn max_vertex(self) -> usize {
        self.max().unwrap_or(0) as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All `k`-element subsets, in ascending order of their bit patterns.
    pub fn subsets_of_size(self, k: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, k)
    }

    /// All subsets (including the empty set and `self`).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut sub = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = VertexSet(sub);
            sub = sub.wrapping_sub(mask) & mask;
            if sub == 0 {
                done = true;
            }
            Some(out)
        })
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // The sorted lists agree up to the smallest vertex in the symmetric
        // difference; whoever holds it is smaller unless the other list ends there.
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        if self.0 & low != 0 {
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<u32>::deserialize(deserializer)?;
        VertexSet::from_vertices(MAX_VERTICES, raw).map_err(serde::de::Error::custom)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(t + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Fixed-size subsets of a [`VertexSet`] via Gosper's hack on the rank space.
pub struct SubsetsOfSize {
    members: Vec<u32>,
    current: Option<u64>,
    k: usize,
}

impl SubsetsOfSize {
    fn new(set: VertexSet, k: usize) -> Self {
        let members = set.to_vec();
        let current = if k > members.len() {
            None
        } else if k == 0 {
            Some(0)
        } else if k == 64 {
            Some(u64::MAX)
        } else {
            Some((1u64 << k) - 1)
        };
        SubsetsOfSize { members, current, k }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.current?;
        let mut out = VertexSet::EMPTY;
        let mut bits = cur;
        while bits != 0 {
            let t = bits.trailing_zeros() as usize;
            out = out.with(self.members[t]);
            bits &= bits - 1;
        }
        self.current = if self.k == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let next = (((r ^ cur) >> 2) / c) | r;
            let m = self.members.len();
            if m < 64 && next >> m != 0 || r == 0 {
                None
            } else {
                Some(next)
            }
        };
        Some(out)
    }
}

/// Binomial coefficient; saturates at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lexicographic_order_on_sorted_lists() {
        let mut sets = vec![
            VertexSet::of(&[2]),
            VertexSet::of(&[1, 3]),
            VertexSet::of(&[1, 2, 3]),
            VertexSet::of(&[1, 2]),
            VertexSet::EMPTY,
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                VertexSet::EMPTY,
                VertexSet::of(&[1, 2]),
                VertexSet::of(&[1, 2, 3]),
                VertexSet::of(&[1, 3]),
                VertexSet::of(&[2]),
            ]
        );
    }

    #[test]
    fn range_checks() {
        assert!(VertexSet::from_vertices(3, [1, 2, 3]).is_ok());
        assert_eq!(
            VertexSet::from_vertices(3, [4]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert!(VertexSet::from_vertices(3, [0]).is_err());
        assert!(VertexSet::from_vertices(3, [1, 1]).is_err());
        assert!(VertexSet::from_vertices(65, [1]).is_err());
    }

    #[test]
    fn complement_and_set_ops() {
        let a = VertexSet::of(&[1, 3]);
        assert_eq!(a.complement(4), VertexSet::of(&[2, 4]));
        assert_eq!(a | VertexSet::of(&[2]), VertexSet::of(&[1, 2, 3]));
        assert_eq!(a & VertexSet::of(&[3, 4]), VertexSet::of(&[3]));
        assert_eq!(a - VertexSet::of(&[3]), VertexSet::of(&[1]));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(a.min(), Some(1));
        assert_eq!(a.max(), Some(3));
    }

    #[test]
    fn fixed_size_subsets() {
        let s = VertexSet::full(5);
        let triples: Vec<_> = s.subsets_of_size(3).collect();
        assert_eq!(triples.len(), 10);
        assert!(triples.iter().all(|t| t.len() == 3));
        assert_eq!(s.subsets_of_size(0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
        assert_eq!(s.subsets_of_size(5).count(), 1);
        assert_eq!(s.subsets_of_size(6).count(), 0);
        assert_eq!(VertexSet::full(64).subsets_of_size(63).count(), 64);
        assert_eq!(VertexSet::of(&[2, 7]).subsets().count(), 4);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(6, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(64, 32), 1832624140942590534);
    }

    proptest! {
        #[test]
        fn order_matches_sorted_list_comparison(a in any::<u64>(), b in any::<u64>()) {
            let (x, y) = (VertexSet(a), VertexSet(b));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }

        #[test]
        fn subsets_of_size_are_distinct_and_complete(bits in 0u64..(1 << 12), k in 0usize..7) {
            let s = VertexSet(bits);
            let subs: Vec<_> = s.subsets_of_size(k).collect();
            prop_assert_eq!(subs.len() as u64, binomial(s.len(), k));
            let mut dedup = subs.clone();
            dedup.sort();
            dedup.dedup();
            prop_assert_eq!(dedup.len(), subs.len());
            prop_assert!(subs.iter().all(|t| t.len() == k && t.is_subset(s)));
        }
    }
}
