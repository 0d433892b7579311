//! Prime, semiprime, strongly irreducible and quasi-prime members of an
//! enumerated family, plus family-level structure queries.
//!
//! Every quantifier ranges over the full enumerated family, including `S`
//! and the candidate itself. Pairs are scanned in family order, so the
//! reported witness is the first failing pair.

use serde::Serialize;

use crate::elemset::{ElemSet, SubsetFamily};
use crate::error::{Error, Result};
use crate::groupoid::AgGroupoid;
use crate::ideals::{check_subset, enumerate_subsets_of_kind, product, IdealKind, Verdict};

fn family_with_member(g: &AgGroupoid, p: &ElemSet, kind: IdealKind) -> Result<SubsetFamily> {
    check_subset(g, p)?;
    let family = enumerate_subsets_of_kind(g, kind)?;
    if !family.contains(p) {
        return Err(Error::NotOfKind { kind });
    }
    Ok(family)
}

/// First pair `(A, B)` with `A·B ⊆ P` but neither `A ⊆ P` nor `B ⊆ P`.
pub fn prime_counterexample(g: &AgGroupoid, family: &[ElemSet], p: &ElemSet) -> Option<(ElemSet, ElemSet)> {
    let outside: Vec<&ElemSet> = family.iter().filter(|a| !a.is_subset(p)).collect();
    for a in &outside {
        for b in &outside {
            if product(g, a, b).is_subset(p) {
                return Some((**a, **b));
            }
        }
    }
    None
}

/// First `C` with `C·C ⊆ P` but `C ⊄ P`.
pub fn semiprime_counterexample(g: &AgGroupoid, family: &[ElemSet], p: &ElemSet) -> Option<ElemSet> {
    family.iter().find(|c| !c.is_subset(p) && product(g, c, c).is_subset(p)).copied()
}

/// First pair `(A, B)` with `A ∩ B ⊆ P` but neither `A ⊆ P` nor `B ⊆ P`.
pub fn strongly_irreducible_counterexample(family: &[ElemSet], p: &ElemSet) -> Option<(ElemSet, ElemSet)> {
    let outside: Vec<&ElemSet> = family.iter().filter(|a| !a.is_subset(p)).collect();
    for a in &outside {
        for b in &outside {
            if a.intersection(b).is_subset(p) {
                return Some((**a, **b));
            }
        }
    }
    None
}

pub fn is_prime_member(g: &AgGroupoid, p: &ElemSet, kind: IdealKind) -> Result<Verdict<(ElemSet, ElemSet)>> {
    let family = family_with_member(g, p, kind)?;
    Ok(Verdict::from_counterexample(prime_counterexample(g, family.members(), p)))
}

pub fn is_semiprime_member(g: &AgGroupoid, p: &ElemSet, kind: IdealKind) -> Result<Verdict<ElemSet>> {
    let family = family_with_member(g, p, kind)?;
    Ok(Verdict::from_counterexample(semiprime_counterexample(g, family.members(), p)))
}

pub fn is_strongly_irreducible(g: &AgGroupoid, p: &ElemSet, kind: IdealKind) -> Result<Verdict<(ElemSet, ElemSet)>> {
    let family = family_with_member(g, p, kind)?;
    Ok(Verdict::from_counterexample(strongly_irreducible_counterexample(family.members(), p)))
}

/// Prime condition restricted to pairs of left ideals; `p` must be a left ideal.
pub fn is_quasi_prime(g: &AgGroupoid, p: &ElemSet) -> Result<Verdict<(ElemSet, ElemSet)>> {
    is_prime_member(g, p, IdealKind::LeftIdeal)
}

/// For every pair `(a, b)`: `(S·a)·b ⊆ P` forces `a ∈ P` or `b ∈ P`.
///
/// Requires a left identity; `p` must be a left ideal.
pub fn theorem4_criterion(g: &AgGroupoid, p: &ElemSet) -> Result<Verdict<(usize, usize)>> {
    check_subset(g, p)?;
    if !g.has_left_identity() {
        return Err(Error::NoLeftIdentity);
    }
    if !crate::ideals::satisfies(g, p, IdealKind::LeftIdeal) {
        return Err(Error::NotOfKind { kind: IdealKind::LeftIdeal });
    }
    Ok(Verdict::from_counterexample(criterion_counterexample(g, p)))
}

pub(crate) fn criterion_counterexample(g: &AgGroupoid, p: &ElemSet) -> Option<(usize, usize)> {
    let n = g.order();
    for a in (0..n).filter(|&a| !p.contains(a)) {
        for b in (0..n).filter(|&b| !p.contains(b)) {
            if criterion_pair_fails(g, p, a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Whether `(a, b)` breaks the criterion: `(S·a)·b ⊆ P` with `a, b ∉ P`.
pub fn criterion_pair_fails(g: &AgGroupoid, p: &ElemSet, a: usize, b: usize) -> bool {
    let n = g.order();
    a < n
        && b < n
        && !p.contains(a)
        && !p.contains(b)
        && product(g, &g.column_image(a), &ElemSet::singleton(n, b)).is_subset(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilyProperties {
    pub all_idempotent: bool,
    pub totally_ordered: bool,
    pub intersection_closed: bool,
    pub semilattice_under_product: bool,
}

pub fn family_properties(g: &AgGroupoid, kind: IdealKind) -> Result<FamilyProperties> {
    let family = enumerate_subsets_of_kind(g, kind)?;
    Ok(properties_of(g, family.members()))
}

pub fn properties_of(g: &AgGroupoid, members: &[ElemSet]) -> FamilyProperties {
    let idempotent: Vec<ElemSet> = members.iter().filter(|x| product(g, x, x) == **x).copied().collect();
    FamilyProperties {
        all_idempotent: idempotent.len() == members.len(),
        totally_ordered: incomparable_pair(members).is_none(),
        intersection_closed: intersection_escape(members).is_none(),
        semilattice_under_product: semilattice_failure(g, &idempotent).is_none(),
    }
}

/// First non-idempotent member.
pub fn non_idempotent_member(g: &AgGroupoid, members: &[ElemSet]) -> Option<ElemSet> {
    members.iter().find(|x| product(g, x, x) != **x).copied()
}

/// First pair of ⊆-incomparable members.
pub fn incomparable_pair(members: &[ElemSet]) -> Option<(ElemSet, ElemSet)> {
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if !a.is_subset(b) && !b.is_subset(a) {
                return Some((*a, *b));
            }
        }
    }
    None
}

/// First pair whose nonempty intersection is not a member.
pub fn intersection_escape(members: &[ElemSet]) -> Option<(ElemSet, ElemSet)> {
    let mut sorted = members.to_vec();
    sorted.sort();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let c = a.intersection(b);
            if !c.is_empty() && sorted.binary_search(&c).is_err() {
                return Some((*a, *b));
            }
        }
    }
    None
}

/// First pair with `A ∩ B ≠ A·B`.
pub fn meet_product_mismatch(g: &AgGroupoid, members: &[ElemSet]) -> Option<(ElemSet, ElemSet)> {
    for a in members {
        for b in members {
            if a.intersection(b) != product(g, a, b) {
                return Some((*a, *b));
            }
        }
    }
    None
}

/// Why `members` fail to be a semilattice under the setwise product: the
/// offending one, two or three members. A semilattice here means the product
/// maps the collection into itself and is idempotent, commutative and associative.
pub fn semilattice_failure(g: &AgGroupoid, members: &[ElemSet]) -> Option<Vec<ElemSet>> {
    let mut sorted = members.to_vec();
    sorted.sort();
    let inside = |x: &ElemSet| sorted.binary_search(x).is_ok();
    for a in members {
        if product(g, a, a) != *a {
            return Some(vec![*a]);
        }
    }
    for a in members {
        for b in members {
            let ab = product(g, a, b);
            if !inside(&ab) || ab != product(g, b, a) {
                return Some(vec![*a, *b]);
            }
        }
    }
    for a in members {
        for b in members {
            let ab = product(g, a, b);
            for c in members {
                if product(g, &ab, c) != product(g, a, &product(g, b, c)) {
                    return Some(vec![*a, *b, *c]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::AgTable;

    fn z6() -> AgGroupoid {
        AgGroupoid::new(AgTable::from_fn(6, |a, b| a * b % 6).unwrap()).unwrap()
    }

    fn z3() -> AgGroupoid {
        AgGroupoid::new(AgTable::from_fn(3, |a, b| (b + 3 - a) % 3).unwrap()).unwrap()
    }

    fn set(e: &[usize]) -> ElemSet {
        ElemSet::from_elements(6, e.iter().copied()).unwrap()
    }

    const IDEAL: IdealKind = IdealKind::TwoSidedIdeal;

    // Brute-force oracle over the five ideals of (Z6, ×), written out by hand:
    // {0}, {0,3}, {0,2,4}, {0,2,3,4}, S.
    fn z6_ideals() -> Vec<Vec<usize>> {
        vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 2, 3, 4], (0..6).collect()]
    }

    fn oracle_prime(p: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
        let sub = |a: &[usize]| a.iter().all(|x| p.contains(x));
        for a in z6_ideals() {
            for b in z6_ideals() {
                let prod_in = a.iter().all(|x| b.iter().all(|y| p.contains(&(x * y % 6))));
                if prod_in && !sub(&a) && !sub(&b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    #[test]
    fn prime_examples_match_oracle() {
        let g = z6();
        let v = is_prime_member(&g, &set(&[0]), IDEAL).unwrap();
        assert!(!v.holds);
        let (a, b) = v.witness.unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), oracle_prime(&[0]).unwrap());
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 3], vec![0, 2, 4]));
        assert!(is_prime_member(&g, &set(&[0, 2, 4]), IDEAL).unwrap().holds);
        assert!(oracle_prime(&[0, 2, 4]).is_none());
        assert!(is_prime_member(&g, &g.universe(), IDEAL).unwrap().holds);
        assert!(is_prime_member(&g, &g.universe(), IdealKind::BiIdeal).unwrap().holds);
    }

    #[test]
    fn prime_rejects_non_members() {
        let g = z6();
        assert_eq!(is_prime_member(&g, &set(&[2]), IDEAL), Err(Error::NotOfKind { kind: IDEAL }));
        assert_eq!(is_prime_member(&g, &ElemSet::empty(6), IDEAL), Err(Error::EmptySubset));
    }

    #[test]
    fn semiprime_examples() {
        let g = z6();
        let fam = enumerate_subsets_of_kind(&g, IDEAL).unwrap();
        for p in fam.iter() {
            if is_prime_member(&g, p, IDEAL).unwrap().holds {
                assert!(is_semiprime_member(&g, p, IDEAL).unwrap().holds);
            }
        }
        // oracle: C·C ⊆ {0} with C ⊄ {0}: {0,3}² = {0,3}, {0,2,4}² = {0,2,4}, ... none
        let v = is_semiprime_member(&g, &set(&[0]), IDEAL).unwrap();
        assert!(v.holds);
        let primes: Vec<ElemSet> =
            fam.iter().filter(|p| !p.is_full() && is_prime_member(&g, p, IDEAL).unwrap().holds).copied().collect();
        for a in &primes {
            for b in &primes {
                assert!(is_semiprime_member(&g, &a.intersection(b), IDEAL).unwrap().holds);
            }
        }
    }

    #[test]
    fn strongly_irreducible_examples() {
        let g = z6();
        // oracle scan over the hand-listed ideals
        let fam = z6_ideals();
        let p = [0usize, 3];
        let sub = |a: &[usize]| a.iter().all(|x| p.contains(x));
        let mut expect = None;
        'outer: for a in &fam {
            for b in &fam {
                let meet: Vec<usize> = a.iter().filter(|x| b.contains(x)).copied().collect();
                if sub(&meet) && !sub(a) && !sub(b) {
                    expect = Some((a.clone(), b.clone()));
                    break 'outer;
                }
            }
        }
        let v = is_strongly_irreducible(&g, &set(&p), IDEAL).unwrap();
        assert_eq!(v.holds, expect.is_none());
        assert!(is_strongly_irreducible(&g, &g.universe(), IDEAL).unwrap().holds);
        let trivial = AgGroupoid::new(AgTable::parse("1\n0").unwrap()).unwrap();
        assert!(is_strongly_irreducible(&trivial, &trivial.universe(), IdealKind::BiIdeal).unwrap().holds);
    }

    #[test]
    fn quasi_prime_examples() {
        let g = z6();
        // commutative: left ideals are the ideals, so quasi-prime = prime
        for p in enumerate_subsets_of_kind(&g, IDEAL).unwrap().iter() {
            assert_eq!(is_quasi_prime(&g, p).unwrap().holds, is_prime_member(&g, p, IDEAL).unwrap().holds);
        }
        let g = z3();
        assert_eq!(enumerate_subsets_of_kind(&g, IdealKind::LeftIdeal).unwrap().len(), 1);
        assert!(is_quasi_prime(&g, &g.universe()).unwrap().holds);
    }

    #[test]
    fn criterion_examples() {
        let g = z6();
        assert!(theorem4_criterion(&g, &set(&[0, 2, 4])).unwrap().holds);
        assert!(theorem4_criterion(&g, &g.universe()).unwrap().holds);
        // oracle: (S·a)·b ⊆ {0} with a, b ∉ {0}; scanning a then b, a = 1 needs
        // S·b = {0} (never for b ≠ 0), a = 2 gives {0,2,4}·b ⊆ {0} at b = 3.
        let v = theorem4_criterion(&g, &set(&[0])).unwrap();
        assert_eq!(v.witness, Some((2, 3)));
        assert!(criterion_pair_fails(&g, &set(&[0]), 3, 2));
        assert_eq!(theorem4_criterion(&g, &set(&[2])), Err(Error::NotOfKind { kind: IdealKind::LeftIdeal }));
    }

    #[test]
    fn family_property_examples() {
        let g = z6();
        let props = family_properties(&g, IDEAL).unwrap();
        assert!(!props.totally_ordered);
        assert!(props.intersection_closed);
        assert_eq!(
            incomparable_pair(enumerate_subsets_of_kind(&g, IDEAL).unwrap().members()),
            Some((set(&[0, 3]), set(&[0, 2, 4])))
        );
        let trivial = AgGroupoid::new(AgTable::parse("1\n0").unwrap()).unwrap();
        for kind in IdealKind::ALL {
            let p = family_properties(&trivial, kind).unwrap();
            assert!(p.all_idempotent && p.totally_ordered && p.intersection_closed && p.semilattice_under_product);
        }
    }
}
