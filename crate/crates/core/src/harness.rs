//! Registry of structural claims about AG-groupoids and a corpus runner.
//!
//! Each claim is a predicate over one validated instance. Claims with a
//! hypothesis (left identity, zero, anti-rectangular) report
//! [`Status::NotApplicable`] when it is unmet; claims whose quantifier domain
//! is empty report [`Status::Vacuous`].
//!
//! Claims marked [`ClaimId::is_asserted`] follow from the left invertive law
//! (and a left identity where stated) alone; a violation there is a bug. The
//! rest are reported as counterexample artifacts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::axioms::{
    check_medial, check_paramedial3, check_permutation_identity, check_permutation_power, medial_fails,
    paramedial3_fails, permutation_identity_fails, permutation_power_fails,
};
use crate::claim::{ClaimResult, Status, Witness};
use crate::elemset::{ElemSet, SubsetFamily};
use crate::error::{Error, Result};
use crate::groupoid::AgGroupoid;
use crate::ideals::{
    enumerate_subsets_of_kind, h_set, h_set_fixed_variant, product, satisfies, times_universe, universe_times,
    IdealKind,
};
use crate::primality::{
    criterion_counterexample, incomparable_pair, meet_product_mismatch, non_idempotent_member, prime_counterexample,
    semilattice_failure, semiprime_counterexample,
};
use crate::principal::PrincipalIdentity;
use crate::table::AgTable;
use crate::topology::{
    build_gamma_omega, build_gamma_ps, preservation_witness_fails, verify_phi_preservation, verify_topology, Space,
};

/// Largest exponent tried by the permutation identity claim.
pub const PERMUTATION_MAX_EXP: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClaimId(u8);

impl ClaimId {
    pub const COUNT: u8 = 26;

    pub fn new(number: u8) -> Option<Self> {
        (1..=Self::COUNT).contains(&number).then_some(ClaimId(number))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = ClaimId> {
        (1..=Self::COUNT).map(ClaimId)
    }

    /// Claims whose violation indicates a bug rather than an edge case.
    pub fn is_asserted(self) -> bool {
        matches!(self.0, 1 | 2 | 5 | 6 | 7 | 8 | 21 | 24)
    }

    pub fn statement(self) -> &'static str {
        match self.0 {
            1 => "medial law (ab)(cd) = (ac)(bd)",
            2 => "with left identity: (ab)(cd) = (db)(ca)",
            3 => "with left identity: (x1^m x2^n)(x3^q x4^r) invariant under permuting variables",
            4 => "zero absorbs: 0s = s0 = 0",
            5 => "with left identity: BT and T^2 B are bi-ideals (B bi-ideal, T left ideal)",
            6 => "with left identity: product of two bi-ideals is a bi-ideal",
            7 => "with left identity: idempotent bi-ideal is an ideal",
            8 => "with left identity e: proper bi-ideal omits e",
            9 => "with left identity: all bi-ideals idempotent <=> A∩B = AB <=> ideals form a product semilattice",
            10 => "with left identity: every bi-ideal prime <=> all idempotent and totally ordered",
            11 => "with zero: opens O_B form a topology on Ω and B -> O_B preserves ∩ and ∪",
            12 => "with zero: opens Θ_I form a topology on P_S and I -> Θ_I preserves ∩ and ∪",
            13 => "with left identity: quasi-prime <=> ((Sa)b ⊆ P => a ∈ P or b ∈ P)",
            14 => "anti-rectangular: product of two ideals is an ideal",
            15 => "anti-rectangular: a subset is a left ideal iff it is a right ideal",
            16 => "anti-rectangular: H(a) ⊆ I for every ideal I and a ∈ I",
            17 => "anti-rectangular: fully idempotent <=> A∩B = AB <=> ideals form a product semilattice",
            18 => "anti-rectangular: every ideal prime <=> all idempotent and totally ordered",
            19 => "with left identity: principal ideal identities",
            20 => "with left identity: idempotent bi-ideals form a product semilattice and (CS)C stays inside",
            21 => "every right ideal is a bi-ideal",
            22 => "intersection of bi-ideals is empty or a bi-ideal",
            23 => "intersection of prime bi-ideals is a semiprime bi-ideal",
            24 => "with left identity: B^2 is a bi-ideal and B^2 ⊆ SB^2 = B^2 S",
            25 => "anti-rectangular: S = S^2, SI = IS, quasi-prime ideals are prime",
            26 => "left ideal I: I^2 is an ideal",
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.strip_prefix('C')
            .and_then(|d| d.parse::<u8>().ok())
            .and_then(ClaimId::new)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

const FAMILY_SLOTS: usize = 5;

/// One validated instance with lazily enumerated families.
pub struct Instance {
    g: AgGroupoid,
    families: [OnceLock<Result<SubsetFamily>>; FAMILY_SLOTS],
}

fn slot(kind: IdealKind) -> usize {
    match kind {
        IdealKind::LeftIdeal => 0,
        IdealKind::RightIdeal => 1,
        IdealKind::TwoSidedIdeal => 2,
        IdealKind::SubGroupoid => 3,
        IdealKind::BiIdeal => 4,
    }
}

const LEFT: IdealKind = IdealKind::LeftIdeal;
const RIGHT: IdealKind = IdealKind::RightIdeal;
const IDEAL: IdealKind = IdealKind::TwoSidedIdeal;
const BI: IdealKind = IdealKind::BiIdeal;

impl Instance {
    pub fn new(g: AgGroupoid) -> Self {
        Instance { g, families: Default::default() }
    }

    pub fn groupoid(&self) -> &AgGroupoid {
        &self.g
    }

    pub fn family(&self, kind: IdealKind) -> Result<&SubsetFamily> {
        self.families[slot(kind)]
            .get_or_init(|| enumerate_subsets_of_kind(&self.g, kind))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn is(&self, kind: IdealKind, x: &ElemSet) -> bool {
        !x.is_empty() && satisfies(&self.g, x, kind)
    }

    fn idempotent(&self, x: &ElemSet) -> bool {
        product(&self.g, x, x) == *x
    }

    fn mul(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        product(&self.g, a, b)
    }

    pub fn run(&self, id: ClaimId) -> ClaimResult {
        let tag = id.to_string();
        let mut result = match self.evaluate(id) {
            Ok(r) => r,
            Err(Error::CapExceeded { order, cap }) => {
                ClaimResult::not_applicable(&tag, format!("order {order} above enumeration cap {cap}"))
            }
            Err(e) => ClaimResult::not_applicable(&tag, e.to_string()),
        };
        result.id = tag;
        result
    }

    fn needs_left_identity(&self) -> Option<ClaimResult> {
        (!self.g.has_left_identity()).then(|| ClaimResult::not_applicable("", "no left identity"))
    }

    fn needs_zero(&self) -> Option<ClaimResult> {
        self.g.zero().is_none().then(|| ClaimResult::not_applicable("", "no zero"))
    }

    fn needs_anti_rectangular(&self) -> Option<ClaimResult> {
        (!self.g.is_anti_rectangular()).then(|| ClaimResult::not_applicable("", "not anti-rectangular"))
    }

    fn evaluate(&self, id: ClaimId) -> Result<ClaimResult> {
        let gate = match id.0 {
            2 | 3 | 5..=10 | 13 | 19 | 20 | 24 => self.needs_left_identity(),
            4 | 11 | 12 => self.needs_zero(),
            14..=18 | 25 => self.needs_anti_rectangular(),
            _ => None,
        };
        if let Some(na) = gate {
            return Ok(na);
        }
        match id.0 {
            1 => Ok(axiom_result(check_medial(&self.g).witness)),
            2 => Ok(axiom_result(check_paramedial3(&self.g).witness)),
            3 => self.permutation_identity(),
            4 => Ok(self.zero_absorbs()),
            9 => self.semilattice_equivalence(BI, IDEAL),
            10 => self.prime_equivalence(BI),
            11 => self.topology_claim(Space::BiIdeal),
            12 => self.topology_claim(Space::PrimeSpectrum),
            13 => self.quasi_prime_criterion(),
            17 => self.semilattice_equivalence(IDEAL, IDEAL),
            18 => self.prime_equivalence(IDEAL),
            19 => Ok(self.principal_battery()),
            23 => self.prime_intersection(),
            _ => self.scan_subsets(id),
        }
    }

    /// Re-evaluates a witness; true when it still exhibits the violation.
    pub fn recheck(&self, id: ClaimId, w: &Witness) -> bool {
        let e = &w.elements;
        match id.0 {
            1 => e.len() == 4 && e.iter().all(|&x| x < self.g.order()) && medial_fails(&self.g, e[0], e[1], e[2], e[3]),
            2 => {
                e.len() == 4
                    && e.iter().all(|&x| x < self.g.order())
                    && paramedial3_fails(&self.g, e[0], e[1], e[2], e[3])
            }
            3 => permutation_identity_fails(&self.g, e) || permutation_power_fails(&self.g, e),
            4 => match (self.g.zero(), e.as_slice()) {
                (Some(z), [s]) => *s < self.g.order() && (self.g.mul(z, *s) != z || self.g.mul(*s, z) != z),
                _ => false,
            },
            9 => self.semilattice_equivalence(BI, IDEAL).is_ok_and(|r| r.is_violated()),
            10 => self.prime_equivalence(BI).is_ok_and(|r| r.is_violated()),
            11 => self.topology_witness_fails(Space::BiIdeal, w),
            12 => self.topology_witness_fails(Space::PrimeSpectrum, w),
            13 => w.subsets.first().is_some_and(|p| self.criterion_disagrees(p)),
            17 => self.semilattice_equivalence(IDEAL, IDEAL).is_ok_and(|r| r.is_violated()),
            18 => self.prime_equivalence(IDEAL).is_ok_and(|r| r.is_violated()),
            19 => self.principal_witness_fails(w),
            23 => self.prime_intersection_fails(&w.subsets),
            _ => self.subset_item_fails(id, &w.subsets, e).unwrap_or(false),
        }
    }

    fn permutation_identity(&self) -> Result<ClaimResult> {
        let note = "exponents stay with positions and powers are left-iterated; \
                    another power convention or exponent binding may be intended";
        let r = check_permutation_identity(&self.g, PERMUTATION_MAX_EXP)?;
        if let Some(w) = r.witness {
            return Ok(ClaimResult::violated("", Witness::elements(w), note));
        }
        let r = check_permutation_power(&self.g, PERMUTATION_MAX_EXP)?;
        if let Some(w) = r.witness {
            return Ok(ClaimResult::violated("", Witness::elements(w), format!("k-th power form; {note}")));
        }
        Ok(ClaimResult::holds(""))
    }

    fn zero_absorbs(&self) -> ClaimResult {
        let z = self.g.zero().expect("gated on zero");
        match (0..self.g.order()).find(|&s| self.g.mul(z, s) != z || self.g.mul(s, z) != z) {
            Some(s) => ClaimResult::violated("", Witness::elements(vec![s]), "zero fails to absorb"),
            None => ClaimResult::holds("").with_note(format!("zero is {z}")),
        }
    }

    /// Claims quantified over tuples of subsets, driven by [`Self::subset_item_fails`].
    fn scan_subsets(&self, id: ClaimId) -> Result<ClaimResult> {
        let g = &self.g;
        let n = g.order();
        let domain: Vec<(Vec<ElemSet>, Vec<usize>)> = match id.0 {
            5 => pairs(self.family(BI)?, self.family(LEFT)?),
            6 => pairs(self.family(BI)?, self.family(BI)?),
            7 => singles(self.family(BI)?.iter().filter(|b| self.idempotent(b))),
            8 => {
                let e: Vec<usize> = g.left_identities().to_vec();
                self.family(BI)?
                    .iter()
                    .filter(|b| !b.is_full())
                    .flat_map(|b| e.iter().map(move |&e| (vec![*b], vec![e])))
                    .collect()
            }
            14 => pairs(self.family(IDEAL)?, self.family(IDEAL)?),
            15 => {
                g.check_cap()?;
                (1u64..1 << n).map(|bits| (vec![ElemSet::from_bits_unchecked(n, bits)], vec![])).collect()
            }
            16 => self.family(IDEAL)?.iter().flat_map(|i| i.iter().map(move |a| (vec![*i], vec![a]))).collect(),
            20 => {
                let e: Vec<ElemSet> = self.family(BI)?.iter().filter(|b| self.idempotent(b)).copied().collect();
                if let Some(bad) = semilattice_failure(g, &e) {
                    return Ok(ClaimResult::violated(
                        "",
                        Witness::subsets(bad),
                        "idempotent bi-ideals are not a semilattice under the product",
                    ));
                }
                singles(e.iter())
            }
            21 => singles(self.family(RIGHT)?.iter()),
            22 => pairs(self.family(BI)?, self.family(BI)?),
            24 => singles(self.family(BI)?.iter()),
            25 => {
                let mut d = vec![(vec![], vec![])];
                d.extend(singles(self.family(IDEAL)?.iter()));
                d
            }
            26 => singles(self.family(LEFT)?.iter()),
            _ => unreachable!("claim {id} is not subset-quantified"),
        };
        if domain.is_empty() {
            return Ok(ClaimResult::vacuous("", "empty quantifier domain"));
        }
        for (subsets, elements) in domain {
            if self.subset_item_fails(id, &subsets, &elements)? {
                let note = failure_note(id, &subsets);
                return Ok(ClaimResult::violated("", Witness { subsets, elements, opens: vec![] }, note));
            }
        }
        Ok(self.annotate(id, ClaimResult::holds("")))
    }

    fn annotate(&self, id: ClaimId, r: ClaimResult) -> ClaimResult {
        if id.0 != 16 {
            return r;
        }
        // the alternative form {x : (xa)x = x}, reported without affecting the verdict
        let Ok(ideals) = self.family(IDEAL) else { return r };
        for i in ideals.iter() {
            for a in i.iter() {
                let variant = h_set_fixed_variant(&self.g, a).expect("a in range");
                if !variant.is_subset(i) {
                    return r.with_note(format!("variant (xa)x=x fails at I={i}, a={a}"));
                }
            }
        }
        r.with_note("variant (xa)x=x also holds")
    }

    /// Whether one domain item violates the claim.
    fn subset_item_fails(&self, id: ClaimId, s: &[ElemSet], e: &[usize]) -> Result<bool> {
        let g = &self.g;
        let n = g.order();
        let wrong_shape = Err(Error::InvalidSearch(format!("malformed witness for {id}")));
        if s.iter().any(|x| x.order() != n) || e.iter().any(|&x| x >= n) {
            return wrong_shape;
        }
        let full = g.universe();
        Ok(match (id.0, s, e) {
            (5, [b, t], []) => !(self.is(BI, &self.mul(b, t)) && self.is(BI, &self.mul(&self.mul(t, t), b))),
            (6, [a, b], []) => !self.is(BI, &self.mul(a, b)),
            (7, [b], []) => self.is(BI, b) && self.idempotent(b) && !self.is(IDEAL, b),
            (8, [b], [e]) => !b.is_full() && b.contains(*e) && g.left_identities().contains(*e),
            (14, [a, b], []) => !self.is(IDEAL, &self.mul(a, b)),
            (15, [x], []) => !x.is_empty() && self.is(LEFT, x) != self.is(RIGHT, x),
            (16, [i], [a]) => i.contains(*a) && !h_set(g, *a).expect("a in range").is_subset(i),
            (20, [c], []) => {
                let e = self.mul(&self.mul(c, &full), c);
                !(self.is(BI, &e) && self.idempotent(&e))
            }
            (21, [x], []) => self.is(RIGHT, x) && !self.is(BI, x),
            (22, [a, b], []) => {
                let m = a.intersection(b);
                !m.is_empty() && !self.is(BI, &m)
            }
            (24, [b], []) => {
                let b2 = self.mul(b, b);
                let sb2 = universe_times(g, &b2);
                !(self.is(BI, &b2) && b2.is_subset(&sb2) && sb2 == times_universe(g, &b2))
            }
            (25, [], []) => self.mul(&full, &full) != full,
            (25, [i], []) => {
                universe_times(g, i) != times_universe(g, i)
                    || (prime_counterexample(g, self.family(LEFT)?.members(), i).is_none()
                        && prime_counterexample(g, self.family(IDEAL)?.members(), i).is_some())
            }
            (26, [i], []) => !self.is(IDEAL, &self.mul(i, i)),
            _ => return wrong_shape,
        })
    }

    /// `(i) all members idempotent ⇔ (ii) A∩B = AB on all pairs ⇔ (iii) the
    /// ideals form a semilattice under the product`.
    fn semilattice_equivalence(&self, kind: IdealKind, lattice_kind: IdealKind) -> Result<ClaimResult> {
        let g = &self.g;
        let fam = self.family(kind)?.members();
        let lattice = self.family(lattice_kind)?.members();
        let idem = non_idempotent_member(g, fam);
        let meet = meet_product_mismatch(g, fam);
        let semi = semilattice_failure(g, lattice);
        let sides = [idem.is_none(), meet.is_none(), semi.is_none()];
        if sides.iter().all(|&s| s == sides[0]) {
            return Ok(ClaimResult::holds("").with_note(format!("all three sides {}", sides[0])));
        }
        let mut subsets: Vec<ElemSet> = idem.into_iter().collect();
        subsets.extend(meet.into_iter().flat_map(|(a, b)| [a, b]));
        subsets.extend(semi.into_iter().flatten());
        let note = format!(
            "all idempotent: {}, meet equals product: {}, product semilattice: {}",
            sides[0], sides[1], sides[2]
        );
        Ok(ClaimResult::violated("", Witness::subsets(subsets), note))
    }

    /// `every member prime ⇔ every member idempotent and the family is a chain`.
    fn prime_equivalence(&self, kind: IdealKind) -> Result<ClaimResult> {
        let g = &self.g;
        let fam = self.family(kind)?.members();
        let not_prime = fam.iter().find(|p| prime_counterexample(g, fam, p).is_some());
        let not_idem = non_idempotent_member(g, fam);
        let incomparable = incomparable_pair(fam);
        let lhs = not_prime.is_none();
        let rhs = not_idem.is_none() && incomparable.is_none();
        if lhs == rhs {
            return Ok(ClaimResult::holds("").with_note(format!("both sides {lhs}")));
        }
        let mut subsets: Vec<ElemSet> = not_prime.into_iter().copied().collect();
        subsets.extend(not_idem);
        subsets.extend(incomparable.into_iter().flat_map(|(a, b)| [a, b]));
        let note = format!(
            "all prime: {lhs}, all idempotent: {}, totally ordered: {}",
            not_idem.is_none(),
            incomparable.is_none()
        );
        Ok(ClaimResult::violated("", Witness::subsets(subsets), note))
    }

    fn topology_claim(&self, space: Space) -> Result<ClaimResult> {
        let g = &self.g;
        if space == Space::PrimeSpectrum {
            // "absorbing 0": every ideal should contain the zero
            let z = g.zero().expect("gated on zero");
            if let Some(i) = self.family(IDEAL)?.iter().find(|i| !i.contains(z)) {
                return Ok(ClaimResult::violated(
                    "",
                    Witness { subsets: vec![*i], elements: vec![z], opens: vec![] },
                    "ideal without the zero: readings of 'absorbing 0' differ",
                ));
            }
        }
        let top = match space {
            Space::BiIdeal => build_gamma_omega(g)?,
            Space::PrimeSpectrum => build_gamma_ps(g)?,
        };
        let axioms = verify_topology(&top);
        if axioms.is_violated() {
            let note = format!("topology: {}", axioms.note);
            return Ok(axioms.with_note(note));
        }
        let pres = verify_phi_preservation(g, space)?;
        if pres.is_violated() {
            let note = format!("preservation: {}", pres.note);
            return Ok(pres.with_note(note));
        }
        Ok(ClaimResult::holds("").with_note(format!(
            "{} points, {} opens; {}",
            top.points.len(),
            top.opens.len(),
            pres.note
        )))
    }

    fn topology_witness_fails(&self, space: Space, w: &Witness) -> bool {
        let g = &self.g;
        if space == Space::PrimeSpectrum {
            if let ([i], [z]) = (w.subsets.as_slice(), w.elements.as_slice()) {
                return self.is(IDEAL, i) && !i.contains(*z);
            }
        }
        if !w.opens.is_empty() {
            let top = match space {
                Space::BiIdeal => build_gamma_omega(g),
                Space::PrimeSpectrum => build_gamma_ps(g),
            };
            return top.is_ok_and(|t| verify_topology(&t).witness.as_ref() == Some(w));
        }
        preservation_witness_fails(g, space, w)
    }

    fn criterion_disagrees(&self, p: &ElemSet) -> bool {
        let Ok(left) = self.family(LEFT) else { return false };
        left.contains(p)
            && prime_counterexample(&self.g, left.members(), p).is_none()
                != criterion_counterexample(&self.g, p).is_none()
    }

    fn quasi_prime_criterion(&self) -> Result<ClaimResult> {
        let left = self.family(LEFT)?;
        for p in left.iter() {
            let quasi = prime_counterexample(&self.g, left.members(), p);
            let crit = criterion_counterexample(&self.g, p);
            if quasi.is_none() != crit.is_none() {
                let mut subsets = vec![*p];
                subsets.extend(quasi.into_iter().flat_map(|(a, b)| [a, b]));
                let elements = crit.map(|(a, b)| vec![a, b]).unwrap_or_default();
                let note = format!("quasi-prime: {}, criterion: {}", quasi.is_none(), crit.is_none());
                return Ok(ClaimResult::violated("", Witness { subsets, elements, opens: vec![] }, note));
            }
        }
        Ok(ClaimResult::holds("").with_note(format!("{} left ideals", left.len())))
    }

    fn principal_battery(&self) -> ClaimResult {
        let mut vacuous = Vec::new();
        for id in PrincipalIdentity::ALL {
            let r = id.check(&self.g);
            match r.status {
                Status::Violated => return r.with_note(format!("identity: {}", id.label())),
                Status::Vacuous => vacuous.push(id.label()),
                _ => {}
            }
        }
        let r = ClaimResult::holds("");
        if vacuous.is_empty() {
            r
        } else {
            r.with_note(format!("vacuous: {}", vacuous.join("; ")))
        }
    }

    /// The witness carries no identity tag, so any identity failing there counts.
    fn principal_witness_fails(&self, w: &Witness) -> bool {
        let e = &w.elements;
        if e.iter().any(|&x| x >= self.g.order()) {
            return false;
        }
        let (a, b) = match e.as_slice() {
            [a] => (*a, *a),
            [a, b] => (*a, *b),
            _ => return false,
        };
        PrincipalIdentity::ALL.iter().any(|id| id.fails_at(&self.g, a, b) == Some(true))
    }

    fn prime_intersection(&self) -> Result<ClaimResult> {
        let g = &self.g;
        let bi = self.family(BI)?.members();
        let primes: Vec<ElemSet> = bi.iter().filter(|p| prime_counterexample(g, bi, p).is_none()).copied().collect();
        if primes.is_empty() {
            return Ok(ClaimResult::vacuous("", "no prime bi-ideals"));
        }
        let mut collections: Vec<Vec<ElemSet>> = Vec::new();
        for (i, a) in primes.iter().enumerate() {
            for b in &primes[i + 1..] {
                collections.push(vec![*a, *b]);
            }
        }
        collections.push(primes.clone());
        for c in collections {
            if self.prime_intersection_fails(&c) {
                return Ok(ClaimResult::violated("", Witness::subsets(c), "intersection is not a semiprime bi-ideal"));
            }
        }
        Ok(ClaimResult::holds("").with_note(format!("{} prime bi-ideals", primes.len())))
    }

    fn prime_intersection_fails(&self, collection: &[ElemSet]) -> bool {
        let n = self.g.order();
        let Ok(bi) = self.family(BI) else { return false };
        if collection.is_empty() || collection.iter().any(|p| p.order() != n) {
            return false;
        }
        let meet = collection.iter().fold(ElemSet::full(n), |acc, p| acc.intersection(p));
        meet.is_empty() || !bi.contains(&meet) || semiprime_counterexample(&self.g, bi.members(), &meet).is_some()
    }
}

fn axiom_result(witness: Option<Vec<usize>>) -> ClaimResult {
    match witness {
        Some(w) => ClaimResult::violated("", Witness::elements(w), ""),
        None => ClaimResult::holds(""),
    }
}

fn pairs(xs: &SubsetFamily, ys: &SubsetFamily) -> Vec<(Vec<ElemSet>, Vec<usize>)> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| (vec![*x, *y], vec![]))).collect()
}

fn singles<'a>(xs: impl Iterator<Item = &'a ElemSet>) -> Vec<(Vec<ElemSet>, Vec<usize>)> {
    xs.map(|x| (vec![*x], vec![])).collect()
}

fn failure_note(id: ClaimId, s: &[ElemSet]) -> String {
    match (id.0, s) {
        (25, []) => "S·S differs from S".into(),
        (25, [_]) => "SI differs from IS, or a quasi-prime ideal is not prime".into(),
        _ => String::new(),
    }
}

/// Runs one claim on one validated instance.
pub fn run_claim(g: &AgGroupoid, id: ClaimId) -> ClaimResult {
    Instance::new(g.clone()).run(id)
}

/// Per-claim tallies over a corpus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimTally {
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub vacuous: usize,
    pub witnesses: Vec<CounterExample>,
}

impl ClaimTally {
    fn add(&mut self, instance: usize, table: &AgTable, r: ClaimResult) {
        match r.status {
            Status::Holds => self.holds += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::Vacuous => self.vacuous += 1,
            Status::Violated => {
                self.violated += 1;
                self.witnesses.push(CounterExample {
                    instance,
                    table: table.to_agt(),
                    witness: r.witness.unwrap_or_default(),
                    note: r.note,
                });
            }
        }
    }
}

/// A violated claim on one corpus member, as an AGT block plus witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterExample {
    pub instance: usize,
    pub table: String,
    pub witness: Witness,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusReport {
    pub claims: BTreeMap<ClaimId, ClaimTally>,
    pub corpus_size: usize,
}

impl CorpusReport {
    pub fn tally(&self, id: ClaimId) -> Option<&ClaimTally> {
        self.claims.get(&id)
    }

    pub fn any_violated(&self) -> bool {
        self.claims.values().any(|t| t.violated > 0)
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("report serializes")
    }
}

/// Runs the selected claims (all when `filter` is `None`) over every table.
///
/// Tables that fail the left invertive law count as not applicable for every claim.
pub fn run_corpus(corpus: &[AgTable], filter: Option<&[ClaimId]>) -> CorpusReport {
    run_corpus_capped(corpus, filter, crate::groupoid::DEFAULT_SUBSET_CAP)
}

/// [`run_corpus`] with an explicit subset enumeration cap.
pub fn run_corpus_capped(corpus: &[AgTable], filter: Option<&[ClaimId]>, subset_cap: usize) -> CorpusReport {
    let ids: Vec<ClaimId> = match filter {
        Some(f) => {
            let mut f = f.to_vec();
            f.sort();
            f.dedup();
            f
        }
        None => ClaimId::all().collect(),
    };
    let results: Vec<Vec<ClaimResult>> = corpus
        .par_iter()
        .map(|t| match AgGroupoid::new(t.clone()) {
            Ok(g) => {
                let inst = Instance::new(g.with_subset_cap(subset_cap));
                ids.iter().map(|&id| inst.run(id)).collect()
            }
            Err(e) => ids.iter().map(|id| ClaimResult::not_applicable(id.to_string(), e.to_string())).collect(),
        })
        .collect();
    let mut report = CorpusReport { claims: BTreeMap::new(), corpus_size: corpus.len() };
    for &id in &ids {
        report.claims.insert(id, ClaimTally::default());
    }
    for (i, (t, rs)) in corpus.iter().zip(results).enumerate() {
        for (&id, r) in ids.iter().zip(rs) {
            report.claims.get_mut(&id).expect("inserted").add(i, t, r);
        }
    }
    report
}
