//! Vertex subsets as machine-word bitmasks.
//!
//! A set `S` of vertices `v_i` is identified with the integer `sum(2^i)` over
//! its members. That integer doubles as an index into subset-indexed tables,
//! and for `S ⊂ T` it always holds that `S.bits() < T.bits()`, so ascending
//! integer order visits every proper subset before its supersets.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// Number of vertices a [`VertexSet`] can address.
pub const WORD_BITS: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
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

    /// Table index of this set.
    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < WORD_BITS, "vertex {v} out of word range");
        VertexSet(1u64 << v)
    }

    /// The set `{v_0, ..., v_{n-1}}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= WORD_BITS);
        if n >= WORD_BITS {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < WORD_BITS && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        self - VertexSet::singleton(v)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        *self = self.with(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        *self = self.without(v);
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    #[inline]
    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest-index member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing index order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// 1-based, space-separated member list, as used in CLI output.
    pub fn to_one_based_string(self) -> String {
        self.iter()
            .map(|v| (v + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[derive(Clone, Debug)]
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
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

/// Set difference.
impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
