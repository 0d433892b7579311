//! Setwise products, ideal and bi-ideal predicates, enumeration and closures.
//!
//! Ideals and bi-ideals are nonempty: every predicate rejects the empty set
//! with [`Error::EmptySubset`].

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::elemset::{ElemSet, SubsetFamily};
use crate::error::{Error, Result};
use crate::groupoid::AgGroupoid;
use crate::table::AgTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    LeftIdeal,
    RightIdeal,
    TwoSidedIdeal,
    SubGroupoid,
    BiIdeal,
}

impl IdealKind {
    pub const ALL: [IdealKind; 5] = [
        IdealKind::LeftIdeal,
        IdealKind::RightIdeal,
        IdealKind::TwoSidedIdeal,
        IdealKind::SubGroupoid,
        IdealKind::BiIdeal,
    ];
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::LeftIdeal => "left ideal",
            IdealKind::RightIdeal => "right ideal",
            IdealKind::TwoSidedIdeal => "two-sided ideal",
            IdealKind::SubGroupoid => "sub-groupoid",
            IdealKind::BiIdeal => "bi-ideal",
        })
    }
}

impl FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(IdealKind::LeftIdeal),
            "right" => Ok(IdealKind::RightIdeal),
            "two-sided" | "ideal" => Ok(IdealKind::TwoSidedIdeal),
            "sub" | "subgroupoid" => Ok(IdealKind::SubGroupoid),
            "bi" => Ok(IdealKind::BiIdeal),
            other => Err(format!("unknown kind {other:?} (expected left, right, two-sided, sub or bi)")),
        }
    }
}

/// A verdict with an optional counterexample, present exactly when `holds` is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn from_counterexample(witness: Option<W>) -> Self {
        Verdict { holds: witness.is_none(), witness }
    }
}

/// A product that escapes the candidate subset, with the factors that produced it.
///
/// Factors are `[s, x]` for a left-ideal failure, `[x, s]` for right-ideal,
/// `[x, y]` for closure and `[x, s, y]` for a `(X·S)·X` failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealWitness {
    pub product: usize,
    pub factors: Vec<usize>,
}

/// `{a·b : a ∈ A, b ∈ B}`
pub fn set_product(t: &AgTable, a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
    a.check_universe(t.order())?;
    b.check_universe(t.order())?;
    Ok(product(t, a, b))
}

pub(crate) fn product(t: &AgTable, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut bits = 0u64;
    for x in a {
        for y in b {
            bits |= 1 << t.mul(x, y);
        }
    }
    ElemSet::from_bits_unchecked(t.order(), bits)
}

/// `X·S`
pub(crate) fn times_universe(g: &AgGroupoid, x: &ElemSet) -> ElemSet {
    x.iter().fold(ElemSet::empty(g.order()), |acc, e| acc.union(&g.row_image(e)))
}

/// `S·X`
pub(crate) fn universe_times(g: &AgGroupoid, x: &ElemSet) -> ElemSet {
    x.iter().fold(ElemSet::empty(g.order()), |acc, e| acc.union(&g.column_image(e)))
}

/// Fast predicate without witness; `x` must be nonempty and over `g`'s universe.
pub(crate) fn satisfies(g: &AgGroupoid, x: &ElemSet, kind: IdealKind) -> bool {
    match kind {
        IdealKind::LeftIdeal => universe_times(g, x).is_subset(x),
        IdealKind::RightIdeal => times_universe(g, x).is_subset(x),
        IdealKind::TwoSidedIdeal => universe_times(g, x).is_subset(x) && times_universe(g, x).is_subset(x),
        IdealKind::SubGroupoid => product(g, x, x).is_subset(x),
        IdealKind::BiIdeal => product(g, x, x).is_subset(x) && product(g, &times_universe(g, x), x).is_subset(x),
    }
}

pub(crate) fn check_subset(g: &AgGroupoid, x: &ElemSet) -> Result<()> {
    x.check_universe(g.order())?;
    if x.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(())
}

pub fn is_ideal_kind(g: &AgGroupoid, x: &ElemSet, kind: IdealKind) -> Result<Verdict<IdealWitness>> {
    check_subset(g, x)?;
    let n = g.order();
    let escape = |product: usize, factors: Vec<usize>| Some(IdealWitness { product, factors });
    let left = || {
        (0..n)
            .flat_map(|s| x.iter().map(move |e| (s, e)))
            .find(|&(s, e)| !x.contains(g.mul(s, e)))
            .and_then(|(s, e)| escape(g.mul(s, e), vec![s, e]))
    };
    let right = || {
        x.iter()
            .flat_map(|e| (0..n).map(move |s| (e, s)))
            .find(|&(e, s)| !x.contains(g.mul(e, s)))
            .and_then(|(e, s)| escape(g.mul(e, s), vec![e, s]))
    };
    let closed = || {
        x.iter()
            .flat_map(|a| x.iter().map(move |b| (a, b)))
            .find(|&(a, b)| !x.contains(g.mul(a, b)))
            .and_then(|(a, b)| escape(g.mul(a, b), vec![a, b]))
    };
    let sandwich = || {
        for a in x {
            for s in 0..n {
                for b in x {
                    let p = g.mul(g.mul(a, s), b);
                    if !x.contains(p) {
                        return escape(p, vec![a, s, b]);
                    }
                }
            }
        }
        None
    };
    let witness = match kind {
        IdealKind::LeftIdeal => left(),
        IdealKind::RightIdeal => right(),
        IdealKind::TwoSidedIdeal => left().or_else(right),
        IdealKind::SubGroupoid => closed(),
        IdealKind::BiIdeal => closed().or_else(sandwich),
    };
    Ok(Verdict::from_counterexample(witness))
}

/// All nonempty subsets of the given kind, ascending by bitmask.
pub fn enumerate_subsets_of_kind(g: &AgGroupoid, kind: IdealKind) -> Result<SubsetFamily> {
    g.check_cap()?;
    let n = g.order();
    let keep = |bits: u64| {
        let x = ElemSet::from_bits_unchecked(n, bits);
        satisfies(g, &x, kind).then_some(x)
    };
    let members: Vec<ElemSet> = if n >= 12 {
        (1u64..1 << n).into_par_iter().filter_map(keep).collect()
    } else {
        (1u64..1 << n).filter_map(keep).collect()
    };
    Ok(SubsetFamily::new(members))
}

/// All nonempty subsets `X` with `X·X = X`.
pub fn enumerate_idempotent_subsets(g: &AgGroupoid) -> Result<SubsetFamily> {
    g.check_cap()?;
    let n = g.order();
    Ok((1u64..1 << n).map(|bits| ElemSet::from_bits_unchecked(n, bits)).filter(|x| product(g, x, x) == *x).collect())
}

/// The smallest superset of `x` of the given kind.
pub fn generated_closure(g: &AgGroupoid, x: &ElemSet, kind: IdealKind) -> Result<ElemSet> {
    check_subset(g, x)?;
    g.check_cap()?;
    Ok(closure(g, x, kind))
}

pub(crate) fn closure(g: &AgGroupoid, x: &ElemSet, kind: IdealKind) -> ElemSet {
    let mut y = *x;
    loop {
        let grown = match kind {
            IdealKind::LeftIdeal => y.union(&universe_times(g, &y)),
            IdealKind::RightIdeal => y.union(&times_universe(g, &y)),
            IdealKind::TwoSidedIdeal => y.union(&universe_times(g, &y)).union(&times_universe(g, &y)),
            IdealKind::SubGroupoid => y.union(&product(g, &y, &y)),
            IdealKind::BiIdeal => y.union(&product(g, &y, &y)).union(&product(g, &times_universe(g, &y), &y)),
        };
        if grown == y {
            return y;
        }
        y = grown;
    }
}

/// `X·X = X`
pub fn is_idempotent_subset(t: &AgTable, x: &ElemSet) -> Result<bool> {
    x.check_universe(t.order())?;
    if x.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(product(t, x, x) == *x)
}

/// `{x : (x·a)·x = a}`
pub fn h_set(t: &AgTable, a: usize) -> Result<ElemSet> {
    sandwich_solutions(t, a, |_| a)
}

/// `{x : (x·a)·x = x}`, an alternative form of [`h_set`].
pub fn h_set_fixed_variant(t: &AgTable, a: usize) -> Result<ElemSet> {
    sandwich_solutions(t, a, |x| x)
}

/// `{x : (x·a)·x = e}` for a chosen target `e`, usually a left identity.
pub fn sandwich_preimage(t: &AgTable, a: usize, e: usize) -> Result<ElemSet> {
    if e >= t.order() {
        return Err(Error::ElementOutOfRange { element: e, order: t.order() });
    }
    sandwich_solutions(t, a, |_| e)
}

fn sandwich_solutions(t: &AgTable, a: usize, target: impl Fn(usize) -> usize) -> Result<ElemSet> {
    let n = t.order();
    if a >= n {
        return Err(Error::ElementOutOfRange { element: a, order: n });
    }
    let mut out = ElemSet::empty(n);
    for x in 0..n {
        if t.mul(t.mul(x, a), x) == target(x) {
            out.insert(x);
        }
    }
    Ok(out)
}
