//! Principal left, right and two-sided ideals and the identities relating them.

use serde::Serialize;

use crate::claim::{ClaimResult, Witness};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::groupoid::AgGroupoid;
use crate::ideals::{product, satisfies, IdealKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalIdeals {
    pub generator: usize,
    /// `S·a`
    pub left: ElemSet,
    /// `a·S`
    pub right: ElemSet,
    /// `(S·a)·S`
    pub two_sided: ElemSet,
}

/// The three principal sets generated by `a`.
///
/// They are computed on any AG-groupoid; the bi-ideal property of each is
/// only expected when a left identity exists.
pub fn principal_ideals(g: &AgGroupoid, a: usize) -> Result<PrincipalIdeals> {
    if a >= g.order() {
        return Err(Error::ElementOutOfRange { element: a, order: g.order() });
    }
    Ok(principal(g, a))
}

fn principal(g: &AgGroupoid, a: usize) -> PrincipalIdeals {
    let left = g.column_image(a);
    PrincipalIdeals { generator: a, left, right: g.row_image(a), two_sided: product(g, &left, &g.universe()) }
}

/// One identity of the principal-ideal battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrincipalIdentity {
    /// `<ab>_L = <a>_L <b>_L`
    LeftOfProduct,
    /// `<ab>_R = <a>_R <b>_R`
    RightOfProduct,
    /// `<ab>_R = <b>_L <a>_L`
    RightOfProductSwapped,
    /// `<a>_R <b>_R = <b>_L <a>_L`
    RightRightIsLeftLeft,
    /// `<a>_L <b>_L = <b>_R <a>_R`
    LeftLeftIsRightRight,
    /// `<a>_L <b>_R = <b>_L <a>_R`
    MixedExchange,
    /// `<a²>_L = <a>_L²`
    LeftOfSquare,
    /// `<a²>_R = <a>_R²`
    RightOfSquare,
    /// `<a²>_L = <a²>_R`
    SquareLeftIsRight,
    /// `a = a²` implies `<a>_L = <a>_R`
    IdempotentLeftIsRight,
    /// `<a>_R a² = a² <a>_L`
    SquareSandwich,
    /// `S·a` is a bi-ideal
    LeftIsBiIdeal,
    /// `a·S` is a bi-ideal
    RightIsBiIdeal,
    /// `(S·a)·S` is a bi-ideal
    TwoSidedIsBiIdeal,
}

impl PrincipalIdentity {
    pub const ALL: [PrincipalIdentity; 14] = [
        PrincipalIdentity::LeftOfProduct,
        PrincipalIdentity::RightOfProduct,
        PrincipalIdentity::RightOfProductSwapped,
        PrincipalIdentity::RightRightIsLeftLeft,
        PrincipalIdentity::LeftLeftIsRightRight,
        PrincipalIdentity::MixedExchange,
        PrincipalIdentity::LeftOfSquare,
        PrincipalIdentity::RightOfSquare,
        PrincipalIdentity::SquareLeftIsRight,
        PrincipalIdentity::IdempotentLeftIsRight,
        PrincipalIdentity::SquareSandwich,
        PrincipalIdentity::LeftIsBiIdeal,
        PrincipalIdentity::RightIsBiIdeal,
        PrincipalIdentity::TwoSidedIsBiIdeal,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PrincipalIdentity::LeftOfProduct => "<ab>_L = <a>_L<b>_L",
            PrincipalIdentity::RightOfProduct => "<ab>_R = <a>_R<b>_R",
            PrincipalIdentity::RightOfProductSwapped => "<ab>_R = <b>_L<a>_L",
            PrincipalIdentity::RightRightIsLeftLeft => "<a>_R<b>_R = <b>_L<a>_L",
            PrincipalIdentity::LeftLeftIsRightRight => "<a>_L<b>_L = <b>_R<a>_R",
            PrincipalIdentity::MixedExchange => "<a>_L<b>_R = <b>_L<a>_R",
            PrincipalIdentity::LeftOfSquare => "<a^2>_L = <a>_L^2",
            PrincipalIdentity::RightOfSquare => "<a^2>_R = <a>_R^2",
            PrincipalIdentity::SquareLeftIsRight => "<a^2>_L = <a^2>_R",
            PrincipalIdentity::IdempotentLeftIsRight => "a idempotent => <a>_L = <a>_R",
            PrincipalIdentity::SquareSandwich => "<a>_R a^2 = a^2 <a>_L",
            PrincipalIdentity::LeftIsBiIdeal => "Sa is a bi-ideal",
            PrincipalIdentity::RightIsBiIdeal => "aS is a bi-ideal",
            PrincipalIdentity::TwoSidedIsBiIdeal => "(Sa)S is a bi-ideal",
        }
    }

    fn binary(self) -> bool {
        matches!(
            self,
            PrincipalIdentity::LeftOfProduct
                | PrincipalIdentity::RightOfProduct
                | PrincipalIdentity::RightOfProductSwapped
                | PrincipalIdentity::RightRightIsLeftLeft
                | PrincipalIdentity::LeftLeftIsRightRight
                | PrincipalIdentity::MixedExchange
        )
    }

    /// Whether the identity fails at `a` (and `b` for the two-variable ones).
    /// Returns `None` when the instance lies outside the identity's hypothesis.
    pub fn fails_at(self, g: &AgGroupoid, a: usize, b: usize) -> Option<bool> {
        use PrincipalIdentity::*;
        let n = g.order();
        let pa = principal(g, a);
        let pb = principal(g, b);
        let single = |x: usize| ElemSet::singleton(n, x);
        let aa = g.mul(a, a);
        let paa = principal(g, aa);
        let ab = principal(g, g.mul(a, b));
        let holds = match self {
            LeftOfProduct => ab.left == product(g, &pa.left, &pb.left),
            RightOfProduct => ab.right == product(g, &pa.right, &pb.right),
            RightOfProductSwapped => ab.right == product(g, &pb.left, &pa.left),
            RightRightIsLeftLeft => product(g, &pa.right, &pb.right) == product(g, &pb.left, &pa.left),
            LeftLeftIsRightRight => product(g, &pa.left, &pb.left) == product(g, &pb.right, &pa.right),
            MixedExchange => product(g, &pa.left, &pb.right) == product(g, &pb.left, &pa.right),
            LeftOfSquare => paa.left == product(g, &pa.left, &pa.left),
            RightOfSquare => paa.right == product(g, &pa.right, &pa.right),
            SquareLeftIsRight => paa.left == paa.right,
            IdempotentLeftIsRight => {
                if aa != a {
                    return None;
                }
                pa.left == pa.right
            }
            SquareSandwich => product(g, &pa.right, &single(aa)) == product(g, &single(aa), &pa.left),
            LeftIsBiIdeal => satisfies(g, &pa.left, IdealKind::BiIdeal),
            RightIsBiIdeal => satisfies(g, &pa.right, IdealKind::BiIdeal),
            TwoSidedIsBiIdeal => satisfies(g, &pa.two_sided, IdealKind::BiIdeal),
        };
        Some(!holds)
    }

    /// Evaluates the identity over every `a` (and `b`).
    pub fn check(self, g: &AgGroupoid) -> ClaimResult {
        let n = g.order();
        let pairs: Vec<(usize, usize)> = if self.binary() {
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
        } else {
            (0..n).map(|a| (a, a)).collect()
        };
        let mut tested = 0;
        for (a, b) in pairs {
            match self.fails_at(g, a, b) {
                None => continue,
                Some(false) => tested += 1,
                Some(true) => {
                    let w = if self.binary() { vec![a, b] } else { vec![a] };
                    return ClaimResult::violated(self.label(), Witness::elements(w), "");
                }
            }
        }
        if tested == 0 {
            ClaimResult::vacuous(self.label(), "no idempotent element")
        } else {
            ClaimResult::holds(self.label())
        }
    }
}

/// The full principal-ideal battery, one result per identity.
pub fn check_principal_identities(g: &AgGroupoid) -> Result<Vec<ClaimResult>> {
    if !g.has_left_identity() {
        return Err(Error::NoLeftIdentity);
    }
    Ok(PrincipalIdentity::ALL.iter().map(|id| id.check(g)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claim::Status;
    use crate::table::AgTable;

    fn z6() -> AgGroupoid {
        AgGroupoid::new(AgTable::from_fn(6, |a, b| a * b % 6).unwrap()).unwrap()
    }

    #[test]
    fn principal_examples() {
        let g = z6();
        let p = principal_ideals(&g, 2).unwrap();
        assert_eq!(p.left.to_vec(), vec![0, 2, 4]);
        assert_eq!(p.right, p.left);
        assert_eq!(p.two_sided, p.left);
        let p = principal_ideals(&g, 1).unwrap();
        assert!(p.left.is_full() && p.right.is_full() && p.two_sided.is_full());
        let z3 = AgGroupoid::new(AgTable::from_fn(3, |a, b| (b + 3 - a) % 3).unwrap()).unwrap();
        assert!(principal_ideals(&z3, 0).unwrap().left.is_full());
    }

    #[test]
    fn battery_holds_on_z6() {
        let results = check_principal_identities(&z6()).unwrap();
        assert_eq!(results.len(), PrincipalIdentity::ALL.len());
        assert!(results.iter().all(|r| r.status == Status::Holds), "{results:?}");
    }

    #[test]
    fn battery_on_z3_matches_naive_oracle() {
        let g = AgGroupoid::new(AgTable::from_fn(3, |a, b| (b + 3 - a) % 3).unwrap()).unwrap();
        let m = |a: usize, b: usize| (b + 3 - a) % 3;
        let sp = |xs: &[usize], ys: &[usize]| {
            let mut v: Vec<usize> = xs.iter().flat_map(|&x| ys.iter().map(move |&y| m(x, y))).collect();
            v.sort();
            v.dedup();
            v
        };
        let s: Vec<usize> = (0..3).collect();
        let l = |a: usize| sp(&s, &[a]);
        let r = |a: usize| sp(&[a], &s);
        let results = check_principal_identities(&g).unwrap();
        let first = |ok: &dyn Fn(usize, usize) -> bool| {
            (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).find(|&(a, b)| !ok(a, b))
        };
        let expect = [
            first(&|a, b| l(m(a, b)) == sp(&l(a), &l(b))),
            first(&|a, b| r(m(a, b)) == sp(&r(a), &r(b))),
            first(&|a, b| r(m(a, b)) == sp(&l(b), &l(a))),
            first(&|a, b| sp(&r(a), &r(b)) == sp(&l(b), &l(a))),
            first(&|a, b| sp(&l(a), &l(b)) == sp(&r(b), &r(a))),
            first(&|a, b| sp(&l(a), &r(b)) == sp(&l(b), &r(a))),
        ];
        for (res, exp) in results.iter().zip(expect) {
            match exp {
                None => assert_eq!(res.status, Status::Holds, "{res}"),
                Some((a, b)) => assert_eq!(res.witness.as_ref().unwrap().elements, vec![a, b], "{res}"),
            }
        }
        // 0·0 = 0, so the idempotent case is exercised at a = 0
        assert_eq!(results[9].status, Status::Holds);
    }

    #[test]
    fn battery_needs_left_identity() {
        // (x·y) = 0 constant: left invertive, no left identity for n > 1
        let g = AgGroupoid::new(AgTable::from_fn(2, |_, _| 0).unwrap()).unwrap();
        assert_eq!(check_principal_identities(&g), Err(Error::NoLeftIdentity));
    }
}
