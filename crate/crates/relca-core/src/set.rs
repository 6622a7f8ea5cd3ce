//! Object and attribute sets.

use core::cmp::Ordering;

pub use fixedbitset::FixedBitSet;

/// A set of object indices of one context.
pub type ObjSet = FixedBitSet;

/// Builds a set of capacity `len` holding `items`.
pub fn set_of(len: usize, items: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(len);
    for i in items {
        s.insert(i);
    }
    s
}

/// The full set `{0, .., len-1}`.
pub fn full(len: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(len);
    s.insert_range(..);
    s
}

/// Canonical extent order: larger sets first, then lexicographic on the
/// ascending index lists.
pub fn extent_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    b.count_ones(..)
        .cmp(&a.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}
