//! Subsets of a finite universe `0..n`, stored as bitmasks.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest universe an [`ElemSet`] can describe.
pub const MAX_ORDER: usize = 64;

/// A subset of the universe `0..order`.
///
/// Equality is extensional. The derived ordering compares the universe order
/// first and then the bitmask, which is the "ascending bitmask" order used for
/// every family listing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    order: u8,
    bits: u64,
}

impl ElemSet {
    pub fn empty(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        ElemSet { order: order as u8, bits: 0 }
    }

    pub fn full(order: usize) -> Self {
        ElemSet { order: order as u8, bits: full_mask(order) }
    }

    pub fn singleton(order: usize, element: usize) -> Self {
        debug_assert!(element < order);
        ElemSet { order: order as u8, bits: 1 << element }
    }

    /// Builds a set from a raw bitmask; bits at or above `order` are rejected.
    pub fn from_bits(order: usize, bits: u64) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        if bits & !full_mask(order) != 0 {
            let element = 63 - (bits & !full_mask(order)).leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, order });
        }
        Ok(ElemSet { order: order as u8, bits })
    }

    pub(crate) fn from_bits_unchecked(order: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !full_mask(order), 0);
        ElemSet { order: order as u8, bits }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(order: usize, elements: I) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        let mut bits = 0u64;
        for e in elements {
            if e >= order {
                return Err(Error::ElementOutOfRange { element: e, order });
            }
            bits |= 1 << e;
        }
        Ok(ElemSet { order: order as u8, bits })
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.order())
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.order() && self.bits >> element & 1 == 1
    }

    pub fn insert(&mut self, element: usize) {
        debug_assert!(element < self.order());
        self.bits |= 1 << element;
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet { order: self.order, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet { order: self.order, bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        ElemSet { order: self.order, bits: self.bits & !other.bits }
    }

    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn check_universe(&self, order: usize) -> Result<()> {
        if self.order() != order {
            return Err(Error::UniverseMismatch { expected: order, found: self.order() });
        }
        Ok(())
    }
}

pub(crate) fn full_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// Ascending iterator over the members of an [`ElemSet`].
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let e = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for &ElemSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An ordered collection of subsets, ascending by bitmask unless built otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SubsetFamily {
    members: Vec<ElemSet>,
}

impl SubsetFamily {
    pub fn new(mut members: Vec<ElemSet>) -> Self {
        members.sort();
        members.dedup();
        SubsetFamily { members }
    }

    pub fn members(&self) -> &[ElemSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &ElemSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ElemSet> {
        self.members.iter()
    }

    /// The smallest member containing `set`, when the family has a least one.
    pub fn least_containing(&self, set: &ElemSet) -> Option<ElemSet> {
        let supersets: Vec<&ElemSet> = self.members.iter().filter(|m| set.is_subset(m)).collect();
        supersets.iter().find(|candidate| supersets.iter().all(|other| candidate.is_subset(other))).map(|s| **s)
    }
}

impl<'a> IntoIterator for &'a SubsetFamily {
    type Item = &'a ElemSet;
    type IntoIter = std::slice::Iter<'a, ElemSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl FromIterator<ElemSet> for SubsetFamily {
    fn from_iter<I: IntoIterator<Item = ElemSet>>(iter: I) -> Self {
        SubsetFamily::new(iter.into_iter().collect())
    }
}
