//! Finite spectral topologies.
//!
//! Two spaces are built over an AG-groupoid with zero:
//!
//! * `Ω`, the strongly irreducible proper bi-ideals, with opens
//!   `O_B = {J ∈ Ω : B ⊄ J}` for every bi-ideal `B`;
//! * `P_S`, the proper prime ideals containing the zero, with opens
//!   `Θ_I = {J ∈ P_S : I ⊄ J}` for every two-sided ideal `I`.
//!
//! Points are kept in family (ascending bitmask) order. Opens are point-index
//! lists sorted lexicographically, each carrying every generating label.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::claim::{ClaimResult, Witness};
use crate::elemset::{ElemSet, SubsetFamily};
use crate::error::{Error, Result};
use crate::groupoid::AgGroupoid;
use crate::ideals::{closure, enumerate_subsets_of_kind, IdealKind};
use crate::primality::{prime_counterexample, strongly_irreducible_counterexample};

/// Sub-collections are checked exhaustively up to this family size.
pub const EXHAUSTIVE_UNION_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Space {
    /// Strongly irreducible proper bi-ideals.
    BiIdeal,
    /// Proper prime ideals containing the zero.
    PrimeSpectrum,
}

impl Space {
    pub fn generating_kind(self) -> IdealKind {
        match self {
            Space::BiIdeal => IdealKind::BiIdeal,
            Space::PrimeSpectrum => IdealKind::TwoSidedIdeal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Open {
    pub members: Vec<usize>,
    pub labels: Vec<ElemSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteTopology {
    pub points: Vec<ElemSet>,
    pub opens: Vec<Open>,
}

impl FiniteTopology {
    /// Builds the topology whose opens are `{j : label ⊄ points[j]}` for each label.
    pub fn from_labels(points: Vec<ElemSet>, labels: impl IntoIterator<Item = ElemSet>) -> Self {
        let mut grouped: BTreeMap<Vec<usize>, Vec<ElemSet>> = BTreeMap::new();
        for label in labels {
            grouped.entry(open_of(&points, &label)).or_default().push(label);
        }
        let opens = grouped
            .into_iter()
            .map(|(members, mut labels)| {
                labels.sort();
                labels.dedup();
                Open { members, labels }
            })
            .collect();
        FiniteTopology { points, opens }
    }

    /// A topology given directly by its opens, without labels.
    pub fn from_opens(points: Vec<ElemSet>, opens: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let set: BTreeSet<Vec<usize>> = opens
            .into_iter()
            .map(|mut o| {
                o.sort_unstable();
                o.dedup();
                o
            })
            .collect();
        let opens = set.into_iter().map(|members| Open { members, labels: Vec::new() }).collect();
        FiniteTopology { points, opens }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("topology serializes")
    }

    /// Specialization preorder: `J → K` when every open containing `J` contains `K`.
    pub fn specialization_edges(&self) -> Vec<(usize, usize)> {
        let n = self.points.len();
        let mut edges = Vec::new();
        for j in 0..n {
            for k in 0..n {
                if j != k && self.opens.iter().all(|o| !o.members.contains(&j) || o.members.contains(&k)) {
                    edges.push((j, k));
                }
            }
        }
        edges
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph specialization {\n");
        for (i, p) in self.points.iter().enumerate() {
            let _ = writeln!(out, "  p{i} [label=\"{p}\"];");
        }
        for (j, k) in self.specialization_edges() {
            let _ = writeln!(out, "  p{j} -> p{k};");
        }
        out.push_str("}\n");
        out
    }
}

fn open_of(points: &[ElemSet], label: &ElemSet) -> Vec<usize> {
    points.iter().enumerate().filter(|(_, j)| !label.is_subset(j)).map(|(i, _)| i).collect()
}

fn require_zero(g: &AgGroupoid) -> Result<usize> {
    g.zero().ok_or(Error::NoZero)
}

/// Strongly irreducible proper bi-ideals.
pub fn omega_points(g: &AgGroupoid) -> Result<SubsetFamily> {
    require_zero(g)?;
    let bi = enumerate_subsets_of_kind(g, IdealKind::BiIdeal)?;
    Ok(omega_from(&bi))
}

pub(crate) fn omega_from(bi: &SubsetFamily) -> SubsetFamily {
    bi.iter()
        .filter(|b| !b.is_full() && strongly_irreducible_counterexample(bi.members(), b).is_none())
        .copied()
        .collect()
}

pub fn build_gamma_omega(g: &AgGroupoid) -> Result<FiniteTopology> {
    require_zero(g)?;
    let bi = enumerate_subsets_of_kind(g, IdealKind::BiIdeal)?;
    let points = omega_from(&bi).members().to_vec();
    Ok(FiniteTopology::from_labels(points, bi.iter().copied()))
}

/// Proper prime ideals containing the zero.
pub fn spectrum_points(g: &AgGroupoid) -> Result<SubsetFamily> {
    let zero = require_zero(g)?;
    let ideals = enumerate_subsets_of_kind(g, IdealKind::TwoSidedIdeal)?;
    Ok(spectrum_from(g, &ideals, zero))
}

pub(crate) fn spectrum_from(g: &AgGroupoid, ideals: &SubsetFamily, zero: usize) -> SubsetFamily {
    ideals
        .iter()
        .filter(|j| !j.is_full() && j.contains(zero) && prime_counterexample(g, ideals.members(), j).is_none())
        .copied()
        .collect()
}

pub fn build_gamma_ps(g: &AgGroupoid) -> Result<FiniteTopology> {
    let zero = require_zero(g)?;
    let ideals = enumerate_subsets_of_kind(g, IdealKind::TwoSidedIdeal)?;
    let points = spectrum_from(g, &ideals, zero).members().to_vec();
    Ok(FiniteTopology::from_labels(points, ideals.iter().copied()))
}

pub fn build_space(g: &AgGroupoid, space: Space) -> Result<FiniteTopology> {
    match space {
        Space::BiIdeal => build_gamma_omega(g),
        Space::PrimeSpectrum => build_gamma_ps(g),
    }
}

pub const TOPOLOGY_AXIOMS: &str = "topology-axioms";

/// Checks that `∅` and the whole point set are open, that opens are closed
/// under pairwise intersection and union, and that every label regenerates
/// its open.
pub fn verify_topology(top: &FiniteTopology) -> ClaimResult {
    let opens: BTreeSet<&Vec<usize>> = top.opens.iter().map(|o| &o.members).collect();
    let full: Vec<usize> = (0..top.points.len()).collect();
    if !opens.contains(&Vec::new()) {
        return ClaimResult::violated(TOPOLOGY_AXIOMS, Witness::opens(vec![Vec::new()]), "empty set is not open");
    }
    if !opens.contains(&full) {
        return ClaimResult::violated(TOPOLOGY_AXIOMS, Witness::opens(vec![full]), "whole space is not open");
    }
    for (i, a) in top.opens.iter().enumerate() {
        for b in &top.opens[i + 1..] {
            let meet = intersect(&a.members, &b.members);
            if !opens.contains(&meet) {
                let w = Witness::opens(vec![a.members.clone(), b.members.clone(), meet]);
                return ClaimResult::violated(TOPOLOGY_AXIOMS, w, "intersection of two opens is not open");
            }
            let join = unite(&a.members, &b.members);
            if !opens.contains(&join) {
                let w = Witness::opens(vec![a.members.clone(), b.members.clone(), join]);
                return ClaimResult::violated(TOPOLOGY_AXIOMS, w, "union of two opens is not open");
            }
        }
    }
    for o in &top.opens {
        if let Some(label) = o.labels.iter().find(|l| open_of(&top.points, l) != o.members) {
            let w = Witness { subsets: vec![*label], opens: vec![o.members.clone()], ..Default::default() };
            return ClaimResult::violated(TOPOLOGY_AXIOMS, w, "label does not regenerate its open");
        }
    }
    ClaimResult::holds(TOPOLOGY_AXIOMS)
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|x| b.contains(x)).copied().collect()
}

fn unite(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub const PRESERVATION: &str = "open-map-preservation";

/// Inputs shared by the preservation check and its witness re-check.
pub(crate) struct PreservationSetup {
    pub(crate) kind: IdealKind,
    pub(crate) family: SubsetFamily,
    pub(crate) points: Vec<ElemSet>,
}

impl PreservationSetup {
    pub(crate) fn new(g: &AgGroupoid, space: Space) -> Result<Self> {
        let zero = require_zero(g)?;
        let kind = space.generating_kind();
        let family = enumerate_subsets_of_kind(g, kind)?;
        let points = match space {
            Space::BiIdeal => omega_from(&family),
            Space::PrimeSpectrum => spectrum_from(g, &family, zero),
        };
        Ok(PreservationSetup { kind, family, points: points.members().to_vec() })
    }

    fn open(&self, label: &ElemSet) -> Vec<usize> {
        open_of(&self.points, label)
    }

    /// `O(A ∩ B) = O(A) ∩ O(B)`, for a pair with nonempty intersection.
    pub(crate) fn intersection_fails(&self, a: &ElemSet, b: &ElemSet) -> bool {
        let meet = a.intersection(b);
        !meet.is_empty() && self.open(&meet) != intersect(&self.open(a), &self.open(b))
    }

    /// `O(<∪ B_α>) = ∪ O(B_α)`
    pub(crate) fn union_fails(&self, g: &AgGroupoid, collection: &[ElemSet]) -> bool {
        let Some(first) = collection.first() else {
            return false;
        };
        let joined = collection.iter().fold(*first, |acc, b| acc.union(b));
        let generated = closure(g, &joined, self.kind);
        let rhs = collection.iter().fold(Vec::new(), |acc, b| unite(&acc, &self.open(b)));
        self.open(&generated) != rhs
    }
}

/// Checks that `B ↦ O_B` (or `I ↦ Θ_I`) turns intersections of pairs into
/// intersections of opens and unions of sub-collections into unions of opens.
///
/// Every nonempty sub-collection is tried when the generating family has at
/// most [`EXHAUSTIVE_UNION_LIMIT`] members; otherwise all pairs plus the full
/// family.
pub fn verify_phi_preservation(g: &AgGroupoid, space: Space) -> Result<ClaimResult> {
    let setup = PreservationSetup::new(g, space)?;
    let fam = setup.family.members();
    for (i, a) in fam.iter().enumerate() {
        for b in &fam[i..] {
            if setup.intersection_fails(a, b) {
                return Ok(ClaimResult::violated(
                    PRESERVATION,
                    Witness::subsets(vec![*a, *b]),
                    "open of the intersection differs from the intersection of opens",
                ));
            }
        }
    }
    let exhaustive = fam.len() <= EXHAUSTIVE_UNION_LIMIT;
    let collections: Box<dyn Iterator<Item = Vec<ElemSet>>> = if exhaustive {
        Box::new(
            (1u64..1 << fam.len())
                .map(|mask| fam.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, b)| *b).collect()),
        )
    } else {
        let pairs = (0..fam.len()).flat_map(move |i| (i + 1..fam.len()).map(move |j| vec![fam[i], fam[j]]));
        Box::new(pairs.chain(std::iter::once(fam.to_vec())))
    };
    for c in collections {
        if setup.union_fails(g, &c) {
            return Ok(ClaimResult::violated(
                PRESERVATION,
                Witness::subsets(c),
                "open of the generated union differs from the union of opens",
            ));
        }
    }
    let note = if exhaustive {
        format!("all {} sub-collections checked", (1u64 << fam.len()) - 1)
    } else {
        "checked pairs + full only".to_string()
    };
    Ok(ClaimResult::holds(PRESERVATION).with_note(note))
}

/// Re-evaluates a preservation witness; true when it still exhibits a failure.
pub fn preservation_witness_fails(g: &AgGroupoid, space: Space, witness: &Witness) -> bool {
    let Ok(setup) = PreservationSetup::new(g, space) else {
        return false;
    };
    let s = &witness.subsets;
    (s.len() == 2 && setup.intersection_fails(&s[0], &s[1])) || setup.union_fails(g, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claim::Status;
    use crate::table::AgTable;

    fn z6() -> AgGroupoid {
        AgGroupoid::new(AgTable::from_fn(6, |a, b| a * b % 6).unwrap()).unwrap()
    }

    fn set(e: &[usize]) -> ElemSet {
        ElemSet::from_elements(6, e.iter().copied()).unwrap()
    }

    #[test]
    fn spectrum_of_z6() {
        let g = z6();
        let pts: Vec<Vec<usize>> = spectrum_points(&g).unwrap().iter().map(|s| s.to_vec()).collect();
        assert_eq!(pts, vec![vec![0, 3], vec![0, 2, 4], vec![0, 2, 3, 4]]);
        let top = build_gamma_ps(&g).unwrap();
        assert_eq!(verify_topology(&top).status, Status::Holds);
        let theta = |label: ElemSet| top.opens.iter().find(|o| o.labels.contains(&label)).unwrap().members.clone();
        assert_eq!(theta(set(&[0])), Vec::<usize>::new());
        assert_eq!(theta(g.universe()), vec![0, 1, 2]);
        // {0,2,4} ⊄ {0,3} only
        assert_eq!(theta(set(&[0, 2, 4])), vec![0]);
    }

    #[test]
    fn omega_of_z6_verifies() {
        let g = z6();
        let top = build_gamma_omega(&g).unwrap();
        assert_eq!(verify_topology(&top).status, Status::Holds);
        assert_eq!(top.points, omega_points(&g).unwrap().members());
        let least = top.opens.iter().find(|o| o.labels.contains(&set(&[0]))).unwrap();
        assert!(least.members.is_empty());
    }

    #[test]
    fn degenerate_spaces() {
        let trivial = AgGroupoid::new(AgTable::parse("1\n0").unwrap()).unwrap();
        assert!(omega_points(&trivial).unwrap().is_empty());
        assert!(spectrum_points(&trivial).unwrap().is_empty());
        let top = build_gamma_omega(&trivial).unwrap();
        assert_eq!(top.opens.len(), 1);
        assert!(top.opens[0].members.is_empty());
        assert_eq!(verify_topology(&top).status, Status::Holds);
        let z3 = AgGroupoid::new(AgTable::from_fn(3, |a, b| (b + 3 - a) % 3).unwrap()).unwrap();
        assert_eq!(omega_points(&z3), Err(Error::NoZero));
        assert_eq!(build_gamma_ps(&z3), Err(Error::NoZero));
    }

    #[test]
    fn verifier_catches_broken_families() {
        let pts = vec![set(&[0]), set(&[0, 1])];
        let missing_full = FiniteTopology::from_opens(pts.clone(), [vec![], vec![0]]);
        let r = verify_topology(&missing_full);
        assert_eq!(r.status, Status::Violated);
        assert_eq!(r.witness.unwrap().opens, vec![vec![0, 1]]);
        let no_union = FiniteTopology::from_opens(
            vec![set(&[0]), set(&[1]), set(&[2])],
            [vec![], vec![0], vec![1], vec![0, 1, 2]],
        );
        assert_eq!(verify_topology(&no_union).status, Status::Violated);
        let empty = FiniteTopology::from_opens(vec![], [vec![]]);
        assert_eq!(verify_topology(&empty).status, Status::Holds);
    }

    #[test]
    fn preservation_on_z6() {
        let g = z6();
        let r = verify_phi_preservation(&g, Space::PrimeSpectrum).unwrap();
        assert_eq!(r.status, Status::Holds);
        assert_eq!(r.note, "all 31 sub-collections checked");
        let r = verify_phi_preservation(&g, Space::BiIdeal).unwrap();
        assert_eq!(r.status, Status::Holds, "{r}");
    }

    #[test]
    fn dot_lists_specialization_edges() {
        let top = build_gamma_ps(&z6()).unwrap();
        let dot = top.to_dot();
        assert!(dot.starts_with("digraph specialization {\n"));
        assert!(dot.contains("p0 [label=\"{0,3}\"];"));
        // {0,2,3,4} lies in the closure of both other points
        assert_eq!(top.specialization_edges(), vec![(2, 0), (2, 1)]);
    }
}
