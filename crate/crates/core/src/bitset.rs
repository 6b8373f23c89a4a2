//! Fixed-universe vertex sets backed by a single machine word.

use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use alloc::vec::Vec;

/// Largest supported graph order.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices drawn from `0..64`.
///
/// The set does not know the order of the graph it belongs to; callers
/// that complement a set must intersect with [`VertexSet::full`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member.
    #[inline]
    pub const fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Maps the `i`-th smallest member of `self` to bit `i` when it is in
    /// `subset`, i.e. re-indexes `subset` relative to `self`.
    pub fn compress(self, subset: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (i, v) in self.iter().enumerate() {
            if subset.contains(v) {
                out |= 1 << i;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`compress`](Self::compress): bit `i` of `packed` selects
    /// the `i`-th smallest member of `self`.
    pub fn expand(self, packed: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (i, v) in self.iter().enumerate() {
            if packed.contains(i) {
                out |= 1 << v;
            }
        }
        VertexSet(out)
    }

    /// Lexicographic comparison of the ascending member lists.
    pub fn cmp_lex(self, other: VertexSet) -> core::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        self.0 &= !rhs.0;
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterates the `k`-element subsets of `within` in lexicographic order of
/// their ascending member lists.
pub fn k_subsets(within: VertexSet, k: usize) -> KSubsets {
    let members: Vec<usize> = within.to_vec();
    let done = k > members.len();
    KSubsets {
        members,
        idx: (0..k).collect(),
        done,
    }
}

pub struct KSubsets {
    members: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let set: VertexSet = self.idx.iter().map(|&i| self.members[i]).collect();
        let m = self.members.len();
        let k = self.idx.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < m - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(2));
        assert!(!a.contains(1));
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.last(), Some(5));
        assert_eq!((a - VertexSet::singleton(2)).to_vec(), [0, 5]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(alloc::format!("{a}"), "{0,2,5}");
    }

    #[test]
    fn compress_expand_inverse() {
        let within: VertexSet = [1, 4, 6, 9].into_iter().collect();
        let sub: VertexSet = [4, 9].into_iter().collect();
        let packed = within.compress(sub);
        assert_eq!(packed.to_vec(), [1, 3]);
        assert_eq!(within.expand(packed), sub);
    }

    #[test]
    fn k_subsets_counts_and_order() {
        let within = VertexSet::full(5);
        let all: Vec<_> = k_subsets(within, 2).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0].to_vec(), [0, 1]);
        assert_eq!(all[1].to_vec(), [0, 2]);
        assert_eq!(all[9].to_vec(), [3, 4]);
        for w in all.windows(2) {
            assert!(w[0].cmp_lex(w[1]).is_lt());
        }
        assert_eq!(k_subsets(within, 0).count(), 1);
        assert_eq!(k_subsets(within, 6).count(), 0);
        let sparse: VertexSet = [3, 7, 8].into_iter().collect();
        assert_eq!(k_subsets(sparse, 3).collect::<Vec<_>>(), [sparse]);
    }
}
