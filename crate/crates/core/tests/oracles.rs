mod common;

use std::collections::BTreeSet;

use quandles::classify::{census, classify_family, labeled_quandles};
use quandles::datasets::base_b;
use quandles::{are_isomorphic, enumerate_phase_rules, product3, IndexConvention, Quandle};

#[test]
fn phase_rules_match_exhaustive_oracle() {
    let oracle: BTreeSet<[[u8; 3]; 3]> = common::phase_rule_oracle().into_iter().collect();
    let found: BTreeSet<[[u8; 3]; 3]> = enumerate_phase_rules().iter().map(|r| r.table()).collect();
    assert_eq!(oracle.len(), 5);
    assert_eq!(found, oracle);
}

#[test]
fn phase_rules_form_three_classes() {
    let rules = enumerate_phase_rules();
    let grids: Vec<common::Grid> = rules.iter().map(|r| common::grid(&r.as_magma())).collect();
    assert_eq!(common::brute_force_class_count(&grids), 3);
    let qs: Vec<Quandle> = rules
        .iter()
        .map(|r| Quandle::new(r.as_magma()).unwrap())
        .collect();
    assert_eq!(classify_family(&qs).len(), 3);
}

#[test]
fn block_base_products_form_three_classes() {
    let qs: Vec<Quandle> = enumerate_phase_rules()
        .iter()
        .map(|r| Quandle::new(product3(&base_b(), r, IndexConvention::Xa).table).unwrap())
        .collect();
    assert_eq!(classify_family(&qs).len(), 3);
}

#[test]
fn labeled_enumeration_matches_oracle() {
    for n in 1..=4 {
        let oracle: BTreeSet<common::Grid> = common::labeled_oracle(n).into_iter().collect();
        let found: BTreeSet<common::Grid> = labeled_quandles(n)
            .unwrap()
            .iter()
            .map(|q| common::grid(q))
            .collect();
        assert_eq!(found, oracle, "order {n}");
    }
}

#[test]
fn census_counts_match_brute_force_partition() {
    for n in 1..=4 {
        let labeled: Vec<common::Grid> = labeled_quandles(n)
            .unwrap()
            .iter()
            .map(|q| common::grid(q))
            .collect();
        assert_eq!(
            census(n).unwrap().len(),
            common::brute_force_class_count(&labeled),
            "order {n}"
        );
    }
}

#[test]
fn census_sizes_through_six() {
    let sizes: Vec<usize> = (1..=6).map(|n| census(n).unwrap().len()).collect();
    assert_eq!(sizes, [1, 1, 3, 7, 22, 73]);
}

#[test]
fn iso_decisions_match_brute_force_on_census_pairs() {
    for n in 1..=4 {
        let reps = census(n).unwrap();
        let labeled = labeled_quandles(n).unwrap();
        let pool: Vec<&Quandle> = reps.iter().chain(labeled.iter()).collect();
        for a in &pool {
            for b in &pool {
                let fast = are_isomorphic(a, b);
                let slow = common::brute_force_isomorphic(&common::grid(a), &common::grid(b));
                assert_eq!(fast.is_isomorphic(), slow);
                if let Some(phi) = &fast.mapping {
                    assert!(quandles::classify::is_homomorphism(a, b, phi));
                }
            }
        }
    }
}
