use std::ops::Deref;

use crate::axioms::{check_anti_rectangular, check_left_invertive, find_zero, left_identities};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::table::AgTable;

/// Default order cap for algorithms that scan all `2^n` subsets.
pub const DEFAULT_SUBSET_CAP: usize = 16;
/// The cap can be raised up to this value and no further.
pub const HARD_SUBSET_CAP: usize = 20;

/// A table that has passed the left invertive check, with cached structure.
///
/// Ideal and topology operations only accept this type.
#[derive(Clone, Debug)]
pub struct AgGroupoid {
    table: AgTable,
    left_identities: ElemSet,
    zero: Option<usize>,
    anti_rectangular: bool,
    // x·S and S·x
    row_images: Vec<ElemSet>,
    column_images: Vec<ElemSet>,
    subset_cap: usize,
}

impl AgGroupoid {
    pub fn new(table: AgTable) -> Result<Self> {
        let report = check_left_invertive(&table);
        if let Some(w) = report.witness {
            return Err(Error::NotLeftInvertive { a: w[0], b: w[1], c: w[2] });
        }
        let n = table.order();
        let row_images = (0..n).map(|x| ElemSet::from_elements(n, (0..n).map(|s| table.mul(x, s))).unwrap()).collect();
        let column_images =
            (0..n).map(|x| ElemSet::from_elements(n, (0..n).map(|s| table.mul(s, x))).unwrap()).collect();
        Ok(AgGroupoid {
            left_identities: left_identities(&table),
            zero: find_zero(&table),
            anti_rectangular: check_anti_rectangular(&table).holds,
            row_images,
            column_images,
            subset_cap: DEFAULT_SUBSET_CAP,
            table,
        })
    }

    /// Sets the subset-enumeration cap, clamped to [`HARD_SUBSET_CAP`].
    pub fn with_subset_cap(mut self, cap: usize) -> Self {
        self.subset_cap = cap.min(HARD_SUBSET_CAP);
        self
    }

    pub fn subset_cap(&self) -> usize {
        self.subset_cap
    }

    pub fn table(&self) -> &AgTable {
        &self.table
    }

    pub fn into_table(self) -> AgTable {
        self.table
    }

    pub fn left_identities(&self) -> ElemSet {
        self.left_identities
    }

    /// The smallest left identity.
    pub fn left_identity(&self) -> Option<usize> {
        self.left_identities.iter().next()
    }

    pub fn has_left_identity(&self) -> bool {
        !self.left_identities.is_empty()
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn is_anti_rectangular(&self) -> bool {
        self.anti_rectangular
    }

    /// `x·S`
    pub fn row_image(&self, x: usize) -> ElemSet {
        self.row_images[x]
    }

    /// `S·x`
    pub fn column_image(&self, x: usize) -> ElemSet {
        self.column_images[x]
    }

    pub(crate) fn check_cap(&self) -> Result<()> {
        let order = self.table.order();
        if order > self.subset_cap {
            return Err(Error::CapExceeded { order, cap: self.subset_cap });
        }
        Ok(())
    }
}

impl Deref for AgGroupoid {
    type Target = AgTable;

    fn deref(&self) -> &AgTable {
        &self.table
    }
}

impl TryFrom<AgTable> for AgGroupoid {
    type Error = Error;

    fn try_from(table: AgTable) -> Result<Self> {
        AgGroupoid::new(table)
    }
}
