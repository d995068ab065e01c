//! Small integer sets backed by a single `u128`.
//!
//! Everything in this crate — vertex neighborhoods, label sets, variable
//! sets — is a subset of `{0, .., 127}`, so one machine word (well, two)
//! covers all of it. Elements are 0-based internally; the 1-based forms
//! used in JSON and display output are produced at the I/O boundary.

use std::fmt;

/// Maximum number of distinct elements a [`SmallSet`] can hold.
pub const CAPACITY: usize = 128;

/// A set of integers in `0..128`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SmallSet(u128);

impl SmallSet {
    pub const EMPTY: SmallSet = SmallSet(0);

    #[inline]
    pub fn singleton(e: usize) -> SmallSet {
        debug_assert!(e < CAPACITY);
        SmallSet(1u128 << e)
    }

    /// The full set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> SmallSet {
        debug_assert!(n <= CAPACITY);
        if n == CAPACITY {
            SmallSet(u128::MAX)
        } else {
            SmallSet((1u128 << n) - 1)
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> SmallSet {
        let mut s = SmallSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        debug_assert!(e < CAPACITY);
        self.0 |= 1u128 << e;
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        debug_assert!(e < CAPACITY);
        self.0 &= !(1u128 << e);
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < CAPACITY && (self.0 >> e) & 1 == 1
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
    pub fn union(self, other: SmallSet) -> SmallSet {
        SmallSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: SmallSet) -> SmallSet {
        SmallSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: SmallSet) -> SmallSet {
        SmallSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: SmallSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: SmallSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest element, if any.
    #[inline]
    pub fn max_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based element list, for JSON and human-readable output.
    pub fn to_one_based(self) -> Vec<u32> {
        self.iter().map(|e| e as u32 + 1).collect()
    }

    /// Orders sets by cardinality first, then by ascending element list.
    /// This is the canonical order for generator and prime lists.
    pub fn canonical_cmp(&self, other: &SmallSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn from_bits(bits: u128) -> SmallSet {
        SmallSet(bits)
    }
}

impl fmt::Debug for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
