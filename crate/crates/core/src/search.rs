//! Exhaustive generation of AG-groupoids of small order.
//!
//! Cells are filled in row-major order with values tried in ascending order,
//! so tables come out in lexicographic order of their flattened cells. After
//! each assignment every left invertive triple that the new cell can complete
//! is checked, which prunes the tree as soon as some `(a·b)·c` and `(c·b)·a`
//! are both determined and differ.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::axioms::{check_anti_rectangular, check_associative, find_zero, left_identities};
use crate::error::{Error, Result};
use crate::table::AgTable;

/// Largest order the search accepts.
pub const SEARCH_MAX_ORDER: usize = 5;

const UNSET: u8 = u8::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchSpec {
    pub order: usize,
    pub require_left_identity: bool,
    pub require_zero: bool,
    pub require_anti_rectangular: bool,
    pub up_to_isomorphism: bool,
    pub limit: Option<usize>,
}

impl SearchSpec {
    pub fn new(order: usize) -> Self {
        SearchSpec {
            order,
            require_left_identity: false,
            require_zero: false,
            require_anti_rectangular: false,
            up_to_isomorphism: false,
            limit: None,
        }
    }

    pub fn left_identity(mut self) -> Self {
        self.require_left_identity = true;
        self
    }

    pub fn zero(mut self) -> Self {
        self.require_zero = true;
        self
    }

    pub fn anti_rectangular(mut self) -> Self {
        self.require_anti_rectangular = true;
        self
    }

    pub fn up_to_isomorphism(mut self) -> Self {
        self.up_to_isomorphism = true;
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::InvalidSearch("order must be at least 1".into()));
        }
        if self.order > SEARCH_MAX_ORDER {
            return Err(Error::CapExceeded { order: self.order, cap: SEARCH_MAX_ORDER });
        }
        if self.limit == Some(0) {
            return Err(Error::InvalidSearch("limit must be at least 1".into()));
        }
        Ok(())
    }

    fn accepts(&self, t: &AgTable) -> bool {
        (!self.require_left_identity || !left_identities(t).is_empty())
            && (!self.require_zero || find_zero(t).is_some())
            && (!self.require_anti_rectangular || check_anti_rectangular(t).holds)
            && (!self.up_to_isomorphism || t.is_canonical().expect("order within canonical cap"))
    }
}

struct Search<'a, F> {
    n: usize,
    cells: Vec<u8>,
    spec: &'a SearchSpec,
    emitted: usize,
    visit: F,
}

impl<F: FnMut(AgTable) -> ControlFlow<()>> Search<'_, F> {
    #[inline]
    fn get(&self, a: usize, b: usize) -> u8 {
        self.cells[a * self.n + b]
    }

    /// `(a·b)·c` if determined.
    #[inline]
    fn left_side(&self, a: usize, b: usize, c: usize) -> Option<u8> {
        let ab = self.get(a, b);
        if ab == UNSET {
            return None;
        }
        let v = self.get(ab as usize, c);
        (v != UNSET).then_some(v)
    }

    #[inline]
    fn triple_ok(&self, a: usize, b: usize, c: usize) -> bool {
        match (self.left_side(a, b, c), self.left_side(c, b, a)) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        }
    }

    /// Checks every triple that reads cell `(p, q)`.
    fn consistent_at(&self, p: usize, q: usize) -> bool {
        let n = self.n;
        for x in 0..n {
            // (p·q)·x vs (x·q)·p, covering both (a,b) = (p,q) and (c,b) = (p,q)
            if !self.triple_ok(p, q, x) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.get(a, b) as usize == p && !self.triple_ok(a, b, q) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize) -> ControlFlow<()> {
        let n = self.n;
        if k == n * n {
            let t = AgTable::from_cells(n, self.cells.clone()).expect("complete table");
            if self.spec.accepts(&t) {
                self.emitted += 1;
                (self.visit)(t)?;
                if self.spec.limit.is_some_and(|l| self.emitted >= l) {
                    return ControlFlow::Break(());
                }
            }
            return ControlFlow::Continue(());
        }
        let (p, q) = (k / n, k % n);
        for v in 0..n as u8 {
            self.cells[k] = v;
            if self.consistent_at(p, q) {
                self.run(k + 1)?;
            }
        }
        self.cells[k] = UNSET;
        ControlFlow::Continue(())
    }
}

/// Streams every AG-groupoid matching `spec` to `visit`, in lexicographic order.
pub fn for_each_ag_groupoid(spec: &SearchSpec, visit: impl FnMut(AgTable) -> ControlFlow<()>) -> Result<()> {
    spec.validate()?;
    let n = spec.order;
    let mut search = Search { n, cells: vec![UNSET; n * n], spec, emitted: 0, visit };
    let _ = search.run(0);
    Ok(())
}

pub fn enumerate_ag_groupoids(spec: &SearchSpec) -> Result<Vec<AgTable>> {
    let mut out = Vec::new();
    for_each_ag_groupoid(spec, |t| {
        out.push(t);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Census {
    pub total: usize,
    pub with_left_identity: usize,
    pub with_zero: usize,
    pub anti_rectangular: usize,
    pub associative: usize,
    pub non_associative: usize,
}

impl Census {
    pub fn record(&mut self, t: &AgTable) {
        self.total += 1;
        self.with_left_identity += usize::from(!left_identities(t).is_empty());
        self.with_zero += usize::from(find_zero(t).is_some());
        self.anti_rectangular += usize::from(check_anti_rectangular(t).holds);
        if check_associative(t).holds {
            self.associative += 1;
        } else {
            self.non_associative += 1;
        }
    }
}

pub fn census_counts(spec: &SearchSpec) -> Result<Census> {
    let mut census = Census::default();
    for_each_ag_groupoid(spec, |t| {
        census.record(&t);
        ControlFlow::Continue(())
    })?;
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_left_invertive;

    #[test]
    fn order_one() {
        let all = enumerate_ag_groupoids(&SearchSpec::new(1)).unwrap();
        assert_eq!(all.len(), 1);
        let c = census_counts(&SearchSpec::new(1)).unwrap();
        assert_eq!((c.total, c.associative, c.non_associative), (1, 1, 0));
    }

    #[test]
    fn order_two_matches_brute_force() {
        let mut expected = Vec::new();
        for code in 0u8..16 {
            let cells: Vec<u8> = (0..4).map(|i| (code >> (3 - i)) & 1).collect();
            let t = AgTable::from_cells(2, cells).unwrap();
            if check_left_invertive(&t).holds {
                expected.push(t);
            }
        }
        assert_eq!(enumerate_ag_groupoids(&SearchSpec::new(2)).unwrap(), expected);
    }

    #[test]
    fn order_three_contains_difference_table() {
        let z3 = AgTable::from_fn(3, |a, b| (b + 3 - a) % 3).unwrap();
        let all = enumerate_ag_groupoids(&SearchSpec::new(3).left_identity()).unwrap();
        assert!(all.contains(&z3));
        let canon = z3.canonical_form().unwrap();
        let iso = enumerate_ag_groupoids(&SearchSpec::new(3).left_identity().up_to_isomorphism()).unwrap();
        assert!(iso.contains(&canon));
    }

    #[test]
    fn limit_and_caps() {
        assert_eq!(enumerate_ag_groupoids(&SearchSpec::new(3).limit(4)).unwrap().len(), 4);
        assert_eq!(
            enumerate_ag_groupoids(&SearchSpec::new(6)),
            Err(Error::CapExceeded { order: 6, cap: SEARCH_MAX_ORDER })
        );
        assert!(SearchSpec::new(2).limit(0).validate().is_err());
        assert!(SearchSpec::new(0).validate().is_err());
    }
}
