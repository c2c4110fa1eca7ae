mod common;

use proptest::prelude::*;
use proptest::sample::select;

use quandles::classify::{labeled_quandles, InvariantProfile};
use quandles::format::{emit_table, emit_table_json, parse_any, parse_table};
use quandles::{
    affine, are_isomorphic, decompose3, enumerate_phase_rules, product3, validate_rule,
    AbelianGroupSpec, Automorphism, IndexConvention, Magma, Permutation, PhaseRule, Quandle,
};

fn small_quandles() -> Vec<Quandle> {
    let mut out: Vec<Quandle> = (1..=4).flat_map(|n| labeled_quandles(n).unwrap()).collect();
    for n in 5..=9 {
        for g in AbelianGroupSpec::all_of_order(n) {
            for t in Automorphism::enumerate(&g).into_iter().take(4) {
                out.push(affine(&g, &t).unwrap());
            }
        }
    }
    out
}

fn quandle_strategy() -> impl Strategy<Value = Quandle> {
    select(small_quandles())
}

fn relabeling(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_zero_based(v).unwrap())
}

fn quandle_and_relabeling() -> impl Strategy<Value = (Quandle, Permutation)> {
    quandle_strategy().prop_flat_map(|q| {
        let n = q.order();
        (Just(q), relabeling(n))
    })
}

fn arbitrary_magma() -> impl Strategy<Value = Magma> {
    (1usize..=11).prop_flat_map(|n| {
        proptest::collection::vec(1..=n, n * n).prop_map(move |cells| {
            let rows: Vec<Vec<usize>> = cells.chunks(n).map(|c| c.to_vec()).collect();
            Magma::from_rows(&rows).unwrap()
        })
    })
}

fn phase_table() -> impl Strategy<Value = PhaseRule> {
    proptest::array::uniform3(proptest::array::uniform3(0u8..3))
        .prop_map(|t| PhaseRule::new(t, "random").unwrap())
}

fn convention() -> impl Strategy<Value = IndexConvention> {
    prop_oneof![Just(IndexConvention::Xa), Just(IndexConvention::Ax)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn profile_is_relabeling_invariant((q, sigma) in quandle_and_relabeling()) {
        let r = q.relabel(&sigma);
        prop_assert!(r.check_axioms().overall);
        prop_assert_eq!(InvariantProfile::of(&q), InvariantProfile::of(&r));
        let iso = are_isomorphic(&q, &r);
        prop_assert!(iso.is_isomorphic());
        prop_assert!(quandles::classify::is_homomorphism(&q, &r, iso.mapping.as_ref().unwrap()));
    }

    #[test]
    fn dual_inverts_apply(q in quandle_strategy()) {
        let n = q.order();
        for x in 1..=n {
            for y in 1..=n {
                let z = q.apply(x, y).unwrap();
                prop_assert_eq!(q.dual(z, y).unwrap(), x);
                prop_assert_eq!(q.dual_apply(z, y).unwrap(), x);
                prop_assert_eq!(q.apply(q.dual(x, y).unwrap(), y).unwrap(), x);
            }
        }
    }

    #[test]
    fn emit_parse_round_trip(m in arbitrary_magma()) {
        let text = emit_table(&m);
        let back = parse_table(&text).unwrap();
        prop_assert!(back.same_table(&m));
        prop_assert_eq!(emit_table(&back), text);
        prop_assert!(parse_any(&emit_table_json(&m)).unwrap().same_table(&m));
    }

    #[test]
    fn checker_agrees_with_naive_axioms(m in arbitrary_magma()) {
        prop_assert_eq!(m.check_axioms().overall, common::naive_is_quandle(&common::grid(&m)));
        prop_assert_eq!(m.is_quandle(), common::naive_is_quandle(&common::grid(&m)));
    }

    #[test]
    fn decompose_inverts_product(
        base in quandle_strategy(),
        rule in select(enumerate_phase_rules()),
        conv in convention(),
    ) {
        let p = product3(&base, &rule, conv);
        prop_assert!(p.table.check_axioms().overall);
        let (b, r) = decompose3(&p.table, conv).unwrap().unwrap();
        prop_assert!(b.same_table(&base));
        prop_assert!(r.same_rule(&rule));
    }

    #[test]
    fn product_fails_exactly_the_rule_axioms(
        base in quandle_strategy(),
        rule in phase_table(),
        conv in convention(),
    ) {
        let expected = validate_rule(&rule).failed_axioms();
        let p = product3(&base, &rule, conv);
        prop_assert_eq!(p.table.check_axioms().failed_axioms(), expected);
    }
}
