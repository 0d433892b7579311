//! Element-level identity checks on a Cayley table.
//!
//! Every check scans its quantified tuples in lexicographic order and reports
//! the first failing tuple, so witnesses are deterministic.

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::table::AgTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Law {
    /// `(ab)c = (cb)a`
    LeftInvertive,
    /// `(ab)(cd) = (ac)(bd)`
    Medial,
    /// `(ab)(cd) = (db)(ca)`
    Paramedial3,
    /// `(x1^m x2^n)(x3^q x4^r)` invariant under permuting the variables
    PermutationIdentity,
    /// `((x1 x2)(x3 x4))^k` invariant under permuting the variables
    PermutationPower,
    /// `a = (ba)b`
    AntiRectangular,
    /// `(ab)c = a(bc)`
    Associative,
}

/// Verdict of one law on one table.
///
/// `witness` is present exactly when the law fails and holds the
/// lexicographically least failing tuple. The tuple layout per law is
/// documented on the corresponding check function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub law: Law,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomReport {
    fn from_witness(law: Law, witness: Option<Vec<usize>>) -> Self {
        AxiomReport { law, holds: witness.is_none(), witness }
    }
}

fn first_triple(n: usize, mut fails: impl FnMut(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if fails(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

fn first_quadruple(n: usize, mut fails: impl FnMut(usize, usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if fails(a, b, c, d) {
                        return Some(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Witness layout: `[a, b, c]`.
pub fn check_left_invertive(t: &AgTable) -> AxiomReport {
    let w = first_triple(t.order(), |a, b, c| left_invertive_fails(t, a, b, c));
    AxiomReport::from_witness(Law::LeftInvertive, w)
}

pub fn left_invertive_fails(t: &AgTable, a: usize, b: usize, c: usize) -> bool {
    t.mul(t.mul(a, b), c) != t.mul(t.mul(c, b), a)
}

/// Witness layout: `[a, b, c, d]`.
pub fn check_medial(t: &AgTable) -> AxiomReport {
    let w = first_quadruple(t.order(), |a, b, c, d| medial_fails(t, a, b, c, d));
    AxiomReport::from_witness(Law::Medial, w)
}

pub fn medial_fails(t: &AgTable, a: usize, b: usize, c: usize, d: usize) -> bool {
    t.mul(t.mul(a, b), t.mul(c, d)) != t.mul(t.mul(a, c), t.mul(b, d))
}

/// Witness layout: `[a, b, c, d]`.
pub fn check_paramedial3(t: &AgTable) -> AxiomReport {
    let w = first_quadruple(t.order(), |a, b, c, d| paramedial3_fails(t, a, b, c, d));
    AxiomReport::from_witness(Law::Paramedial3, w)
}

pub fn paramedial3_fails(t: &AgTable, a: usize, b: usize, c: usize, d: usize) -> bool {
    t.mul(t.mul(a, b), t.mul(c, d)) != t.mul(t.mul(d, b), t.mul(c, a))
}

/// Witness layout: `[a, b]` with `(b·a)·b ≠ a`.
pub fn check_anti_rectangular(t: &AgTable) -> AxiomReport {
    let n = t.order();
    let w = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| t.mul(t.mul(b, a), b) != a)
        .map(|(a, b)| vec![a, b]);
    AxiomReport::from_witness(Law::AntiRectangular, w)
}

/// Witness layout: `[a, b, c]`.
pub fn check_associative(t: &AgTable) -> AxiomReport {
    let w = first_triple(t.order(), |a, b, c| t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)));
    AxiomReport::from_witness(Law::Associative, w)
}

/// All `e` with `e·a = a` for every `a`.
pub fn left_identities(t: &AgTable) -> ElemSet {
    let n = t.order();
    let mut out = ElemSet::empty(n);
    for e in 0..n {
        if (0..n).all(|a| t.mul(e, a) == a) {
            out.insert(e);
        }
    }
    out
}

/// The absorbing element, if any.
pub fn find_zero(t: &AgTable) -> Option<usize> {
    let n = t.order();
    let mut zeros = (0..n).filter(|&z| (0..n).all(|s| t.mul(z, s) == z && t.mul(s, z) == z));
    let zero = zeros.next();
    // z1 = z1·z2 = z2
    assert!(zeros.next().is_none(), "two absorbing elements in one magma");
    zero
}

/// Left-iterated power: `a^1 = a`, `a^(k+1) = a^k · a`.
pub fn power(t: &AgTable, a: usize, k: u32) -> Result<usize> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    if a >= t.order() {
        return Err(Error::ElementOutOfRange { element: a, order: t.order() });
    }
    let mut acc = a;
    for _ in 1..k {
        acc = t.mul(acc, a);
    }
    Ok(acc)
}

const PERMUTATIONS_OF_4: [[usize; 4]; 24] = [
    [0, 1, 2, 3],
    [0, 1, 3, 2],
    [0, 2, 1, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [0, 3, 2, 1],
    [1, 0, 2, 3],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 2, 3, 0],
    [1, 3, 0, 2],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
    [2, 0, 3, 1],
    [2, 1, 0, 3],
    [2, 1, 3, 0],
    [2, 3, 0, 1],
    [2, 3, 1, 0],
    [3, 0, 1, 2],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 1, 2, 0],
    [3, 2, 0, 1],
    [3, 2, 1, 0],
];

/// `powers[k - 1][x] = x^k` for `k` in `1..=max_exp`.
fn power_table(t: &AgTable, max_exp: u32) -> Vec<Vec<usize>> {
    let n = t.order();
    let mut powers = vec![(0..n).collect::<Vec<_>>()];
    for _ in 1..max_exp {
        let prev = powers.last().unwrap();
        let next = (0..n).map(|x| t.mul(prev[x], x)).collect();
        powers.push(next);
    }
    powers
}

/// Checks `(x1^m x2^n)(x3^q x4^r) = (x_p1^m x_p2^n)(x_p3^q x_p4^r)` for all
/// elements, all 24 permutations `p` and all exponents in `2..=max_exp`.
///
/// Exponents belong to positions, not to variables. Requires a left identity.
///
/// Witness layout: `[x1, x2, x3, x4, m, n, q, r, p1, p2, p3, p4]` with the
/// permutation given 0-based.
pub fn check_permutation_identity(t: &AgTable, max_exp: u32) -> Result<AxiomReport> {
    if max_exp < 2 {
        return Err(Error::ExponentRange);
    }
    if left_identities(t).is_empty() {
        return Err(Error::NoLeftIdentity);
    }
    let powers = power_table(t, max_exp);
    let pw = |x: usize, k: u32| powers[k as usize - 1][x];
    let side = |xs: [usize; 4], e: [u32; 4]| {
        t.mul(t.mul(pw(xs[0], e[0]), pw(xs[1], e[1])), t.mul(pw(xs[2], e[2]), pw(xs[3], e[3])))
    };
    let n = t.order();
    let exps: Vec<[u32; 4]> = exponent_tuples(max_exp);
    for x0 in 0..n {
        for x1 in 0..n {
            for x2 in 0..n {
                for x3 in 0..n {
                    let xs = [x0, x1, x2, x3];
                    for &e in &exps {
                        let lhs = side(xs, e);
                        for p in &PERMUTATIONS_OF_4 {
                            let permuted = [xs[p[0]], xs[p[1]], xs[p[2]], xs[p[3]]];
                            if side(permuted, e) != lhs {
                                let mut w = xs.to_vec();
                                w.extend(e.iter().map(|&k| k as usize));
                                w.extend_from_slice(p);
                                return Ok(AxiomReport::from_witness(Law::PermutationIdentity, Some(w)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(AxiomReport::from_witness(Law::PermutationIdentity, None))
}

/// Checks `((x1 x2)(x3 x4))^k = ((x_p1 x_p2)(x_p3 x_p4))^k` for `k` in
/// `2..=max_exp`. Requires a left identity.
///
/// Witness layout: `[x1, x2, x3, x4, k, p1, p2, p3, p4]`.
pub fn check_permutation_power(t: &AgTable, max_exp: u32) -> Result<AxiomReport> {
    if max_exp < 2 {
        return Err(Error::ExponentRange);
    }
    if left_identities(t).is_empty() {
        return Err(Error::NoLeftIdentity);
    }
    let powers = power_table(t, max_exp);
    let word = |xs: [usize; 4]| t.mul(t.mul(xs[0], xs[1]), t.mul(xs[2], xs[3]));
    let n = t.order();
    for x0 in 0..n {
        for x1 in 0..n {
            for x2 in 0..n {
                for x3 in 0..n {
                    let xs = [x0, x1, x2, x3];
                    let base = word(xs);
                    for k in 2..=max_exp {
                        let lhs = powers[k as usize - 1][base];
                        for p in &PERMUTATIONS_OF_4 {
                            let rhs = powers[k as usize - 1][word([xs[p[0]], xs[p[1]], xs[p[2]], xs[p[3]]])];
                            if rhs != lhs {
                                let mut w = xs.to_vec();
                                w.push(k as usize);
                                w.extend_from_slice(p);
                                return Ok(AxiomReport::from_witness(Law::PermutationPower, Some(w)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(AxiomReport::from_witness(Law::PermutationPower, None))
}

/// Re-evaluates one tuple of a [`check_permutation_identity`] witness.
pub fn permutation_identity_fails(t: &AgTable, witness: &[usize]) -> bool {
    if witness.len() != 12 || witness[..4].iter().any(|&x| x >= t.order()) {
        return false;
    }
    let pw = |x: usize, k: usize| power(t, x, k as u32).unwrap_or(usize::MAX);
    let e = &witness[4..8];
    let p = &witness[8..12];
    if e.iter().any(|&k| k < 2) || p.iter().any(|&i| i >= 4) {
        return false;
    }
    let x = &witness[..4];
    let side = |xs: [usize; 4]| t.mul(t.mul(pw(xs[0], e[0]), pw(xs[1], e[1])), t.mul(pw(xs[2], e[2]), pw(xs[3], e[3])));
    side([x[0], x[1], x[2], x[3]]) != side([x[p[0]], x[p[1]], x[p[2]], x[p[3]]])
}

/// Re-evaluates one tuple of a [`check_permutation_power`] witness.
pub fn permutation_power_fails(t: &AgTable, witness: &[usize]) -> bool {
    if witness.len() != 9 || witness[..4].iter().any(|&x| x >= t.order()) || witness[4] < 2 {
        return false;
    }
    let (x, k, p) = (&witness[..4], witness[4] as u32, &witness[5..9]);
    if p.iter().any(|&i| i >= 4) {
        return false;
    }
    let word = |xs: [usize; 4]| t.mul(t.mul(xs[0], xs[1]), t.mul(xs[2], xs[3]));
    let lhs = power(t, word([x[0], x[1], x[2], x[3]]), k);
    let rhs = power(t, word([x[p[0]], x[p[1]], x[p[2]], x[p[3]]]), k);
    lhs != rhs
}

fn exponent_tuples(max_exp: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for m in 2..=max_exp {
        for n in 2..=max_exp {
            for q in 2..=max_exp {
                for r in 2..=max_exp {
                    out.push([m, n, q, r]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_diff() -> AgTable {
        AgTable::from_fn(3, |a, b| (b + 3 - a) % 3).unwrap()
    }

    fn z6_mul() -> AgTable {
        AgTable::from_fn(6, |a, b| a * b % 6).unwrap()
    }

    fn left_zero() -> AgTable {
        AgTable::from_fn(2, |a, _| a).unwrap()
    }

    fn right_zero() -> AgTable {
        AgTable::from_fn(2, |_, b| b).unwrap()
    }

    #[test]
    fn left_invertive_examples() {
        assert!(check_left_invertive(&z3_diff()).holds);
        assert!(check_left_invertive(&z6_mul()).holds);
        let r = check_left_invertive(&left_zero());
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec![0, 0, 1]));
    }

    #[test]
    fn medial_examples() {
        assert!(check_medial(&z3_diff()).holds);
        assert!(check_medial(&z6_mul()).holds);
        assert!(check_medial(&right_zero()).holds);
    }

    #[test]
    fn paramedial_examples() {
        assert!(check_paramedial3(&z3_diff()).holds);
        assert!(check_paramedial3(&z6_mul()).holds);
        let r = check_paramedial3(&left_zero());
        assert!(!r.holds);
        // (0·0)(0·1) = 0 but (1·0)(0·0) = 1
        assert_eq!(r.witness, Some(vec![0, 0, 0, 1]));
    }

    #[test]
    fn identities_and_zero() {
        assert_eq!(left_identities(&z3_diff()).to_vec(), vec![0]);
        assert_eq!(left_identities(&z6_mul()).to_vec(), vec![1]);
        assert!(left_identities(&left_zero()).is_empty());
        assert_eq!(find_zero(&z6_mul()), Some(0));
        assert_eq!(find_zero(&z3_diff()), None);
        assert_eq!(find_zero(&AgTable::parse("1\n0").unwrap()), Some(0));
    }

    #[test]
    fn anti_rectangular_examples() {
        let z2 = AgTable::from_fn(2, |a, b| (a + b) % 2).unwrap();
        assert!(check_anti_rectangular(&z2).holds);
        // (b·a)·b = 2b − a; (a,b) = (0,1) gives 2
        assert_eq!(check_anti_rectangular(&z3_diff()).witness, Some(vec![0, 1]));
        assert_eq!(check_anti_rectangular(&z6_mul()).witness, Some(vec![1, 0]));
    }

    #[test]
    fn powers_are_left_iterated() {
        assert_eq!(power(&z6_mul(), 2, 3), Ok(2));
        assert_eq!(power(&z3_diff(), 1, 2), Ok(0));
        for a in 0..3 {
            assert_eq!(power(&z3_diff(), a, 1), Ok(a));
        }
        assert_eq!(power(&z3_diff(), 1, 0), Err(Error::ZeroExponent));
        // a^3 = a^2·a by construction
        let t = z3_diff();
        for a in 0..3 {
            assert_eq!(power(&t, a, 3).unwrap(), t.mul(power(&t, a, 2).unwrap(), a));
        }
    }

    #[test]
    fn permutation_identity_examples() {
        assert!(check_permutation_identity(&z6_mul(), 2).unwrap().holds);
        // exponents stay with positions, so unequal exponents break even a
        // commutative semigroup: (2^2·1^3)(·) ≠ (1^2·2^3)(·)
        let r = check_permutation_identity(&z6_mul(), 3).unwrap();
        assert!(!r.holds);
        assert!(permutation_identity_fails(&z6_mul(), r.witness.as_ref().unwrap()));
        assert_eq!(check_permutation_identity(&left_zero(), 2), Err(Error::NoLeftIdentity));
        assert_eq!(check_permutation_identity(&z6_mul(), 1), Err(Error::ExponentRange));
    }

    #[test]
    fn z3_permutation_identity_matches_naive_scan() {
        // In (Z3, b−a) every square is x·x = 0, so both sides reduce to
        // (0·0)·(0·0) = 0 for maxExp = 2.
        let t = z3_diff();
        for x in 0..3 {
            assert_eq!(power(&t, x, 2).unwrap(), 0);
        }
        assert!(check_permutation_identity(&t, 2).unwrap().holds);
    }

    #[test]
    fn witnesses_recheck() {
        let t = z3_diff();
        // a left-zero-like table with an identity to exercise a failing case
        let w = check_left_invertive(&left_zero()).witness.unwrap();
        assert!(left_invertive_fails(&left_zero(), w[0], w[1], w[2]));
        assert!(!permutation_identity_fails(&t, &[0, 1, 2, 0, 2, 2, 2, 2, 1, 0, 2, 3]));
    }
}
