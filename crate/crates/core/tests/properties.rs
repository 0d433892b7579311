use agtop_core::ideals::set_product;
use agtop_core::{enumerate_ag_groupoids, AgTable, ElemSet, SearchSpec};
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

fn order3() -> Vec<AgTable> {
    enumerate_ag_groupoids(&SearchSpec::new(3)).unwrap()
}

fn order4_sample() -> Vec<AgTable> {
    enumerate_ag_groupoids(&SearchSpec::new(4)).unwrap().into_iter().step_by(17).collect()
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn subset(n: usize) -> impl Strategy<Value = ElemSet> {
    subsequence((0..n).collect::<Vec<_>>(), 1..=n).prop_map(move |xs| ElemSet::from_elements(n, xs).unwrap())
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant((t, p) in select(order4_sample()).prop_flat_map(|t| (Just(t), perm(4)))) {
        let r = t.relabel(&p).unwrap();
        prop_assert_eq!(r.canonical_form().unwrap(), t.canonical_form().unwrap());
        prop_assert!(t.canonical_form().unwrap().is_canonical().unwrap());
    }

    #[test]
    fn set_product_is_left_invertive(
        (t, a, b, c) in select(order3()).prop_flat_map(|t| (Just(t), subset(3), subset(3), subset(3)))
    ) {
        let ab_c = set_product(&t, &set_product(&t, &a, &b).unwrap(), &c).unwrap();
        let cb_a = set_product(&t, &set_product(&t, &c, &b).unwrap(), &a).unwrap();
        prop_assert_eq!(ab_c, cb_a);
    }

    #[test]
    fn set_product_is_medial(
        (t, a, b, c, d) in select(order3()).prop_flat_map(|t| (Just(t), subset(3), subset(3), subset(3), subset(3)))
    ) {
        let p = |x: &ElemSet, y: &ElemSet| set_product(&t, x, y).unwrap();
        prop_assert_eq!(p(&p(&a, &b), &p(&c, &d)), p(&p(&a, &c), &p(&b, &d)));
    }

    #[test]
    fn parse_emit_round_trip(n in 1usize..7, seed in proptest::collection::vec(0u8..=255, 36)) {
        let cells: Vec<u8> = seed[..n * n].iter().map(|v| v % n as u8).collect();
        let t = AgTable::from_cells(n, cells).unwrap();
        let text = t.to_agt();
        let back = AgTable::parse(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_agt(), text);
    }
}

#[test]
fn isomorphism_class_counts() {
    // published counts of AG-groupoids up to isomorphism
    for (n, expected) in [(1, 1), (2, 3), (3, 20), (4, 331)] {
        let iso = enumerate_ag_groupoids(&SearchSpec::new(n).up_to_isomorphism()).unwrap();
        assert_eq!(iso.len(), expected, "order {n}");
    }
}
