mod common;

use quandles::classify::{classify_family, InvariantProfile};
use quandles::datasets::{q1, q2, table1};
use quandles::inner::{inn_group, inner_structure, orbits, DEFAULT_MATERIALIZE_CAP};
use quandles::properties::{
    alexander_recognize, centralizer, is_abelian, is_connected, is_cyclic_type,
    is_group_conjugation, is_involutory, is_involutory_by_translation_orders, is_left_distributive,
    lemma_sum_check,
};
use quandles::{
    affine, are_isomorphic, conjugation, dihedral, trivial, AbelianGroupSpec, Automorphism,
    GroupTable, Magma, Quandle,
};

fn z(n: usize) -> AbelianGroupSpec {
    AbelianGroupSpec::cyclic(n).unwrap()
}

fn mult(n: usize, k: usize) -> Automorphism {
    Automorphism::multiplication(&z(n), k).unwrap()
}

fn s3() -> Quandle {
    conjugation(&GroupTable::symmetric(3).unwrap())
}

#[test]
fn table_construction() {
    let one = Magma::from_rows(&[vec![1]]).unwrap();
    assert!(one.check_axioms().overall);
    let bad = Magma::from_rows(&[vec![1, 2], vec![1, 2]]).unwrap();
    assert!(!bad.check_axioms().overall);
    assert!(Quandle::new(bad).is_err());
    assert!(Magma::from_rows(&[vec![1, 3], vec![1, 2]]).is_err());
    assert!(Magma::from_rows(&[vec![1, 2]]).is_err());
}

#[test]
fn lookups() {
    assert_eq!(table1().apply(3, 2).unwrap(), 4);
    let q = Quandle::new(q1()).unwrap();
    assert_eq!(q.dual_apply(10, 4).unwrap(), 7);
    assert_eq!(q.dual(10, 4).unwrap(), 7);
    assert_eq!(trivial(3).unwrap().dual_apply(2, 3).unwrap(), 2);
    for x in 1..=12 {
        assert_eq!(q.apply(x, x).unwrap(), x);
        for y in 1..=12 {
            assert_eq!(q.dual(q.apply(x, y).unwrap(), y).unwrap(), x);
        }
    }
    assert!(q.apply(13, 1).is_err());
}

#[test]
fn trivial_and_dihedral_families() {
    assert_eq!(
        trivial(3).unwrap().rows(),
        [[1, 1, 1], [2, 2, 2], [3, 3, 3]]
    );
    for n in 1..=6 {
        assert!(trivial(n).unwrap().check_axioms().overall);
    }
    assert_eq!(
        dihedral(3).unwrap().rows(),
        [[1, 3, 2], [3, 2, 1], [2, 1, 3]]
    );
    for n in 3..=8 {
        assert!(is_involutory(&dihedral(n).unwrap()));
    }
    assert!(dihedral(0).is_err());
}

#[test]
fn conjugation_family() {
    let c3 = conjugation(&GroupTable::cyclic(3).unwrap());
    assert!(are_isomorphic(&c3, &trivial(3).unwrap()).is_isomorphic());
    let g = GroupTable::symmetric(3).unwrap();
    let q = conjugation(&g);
    assert_eq!(q.order(), 6);
    assert!(q.check_axioms().overall);
    for x in 1..=6 {
        assert_eq!(q.apply(x, g.identity()).unwrap(), x);
    }
}

#[test]
fn affine_family() {
    for n in 1..=6 {
        let q = affine(&z(n), &Automorphism::identity(&z(n))).unwrap();
        assert!(q.same_table(&trivial(n).unwrap()));
    }
    let q = affine(&z(3), &Automorphism::negation(&z(3))).unwrap();
    assert!(q.same_table(&dihedral(3).unwrap()));
    assert!(are_isomorphic(&dihedral(3).unwrap(), &q).is_isomorphic());
    assert!(affine(&z(12), &mult(12, 5)).unwrap().check_axioms().overall);
    assert!(Automorphism::multiplication(&z(12), 4).is_err());
}

#[test]
fn translations() {
    let q = q1();
    assert_eq!(
        q.right_translation(4).unwrap().to_string(),
        "(7 10)(8 11)(9 12)"
    );
    assert!(q.right_translation(1).unwrap().is_identity());
    for y in 1..=4 {
        assert!(trivial(4)
            .unwrap()
            .right_translation(y)
            .unwrap()
            .is_identity());
    }
}

#[test]
fn involutory_and_abelian() {
    assert!(is_involutory(&dihedral(5).unwrap()));
    assert!(is_involutory(&trivial(4).unwrap()));
    assert!(!is_involutory(&s3()));
    assert!(!is_involutory_by_translation_orders(&s3()));
    assert!(is_abelian(&affine(&z(5), &mult(5, 2)).unwrap()));
    assert!(is_abelian(&trivial(4).unwrap()));
    assert!(!is_abelian(&s3()));
}

#[test]
fn left_distributivity_and_connectivity() {
    assert!(is_left_distributive(&dihedral(3).unwrap()));
    assert!(is_left_distributive(&trivial(4).unwrap()));
    assert!(is_connected(&trivial(1).unwrap()));
    assert!(!is_connected(&trivial(2).unwrap()));
    assert!(is_connected(&dihedral(3).unwrap()));
    assert!(is_connected(&dihedral(5).unwrap()));
    assert!(!is_connected(&dihedral(4).unwrap()));
}

#[test]
fn cyclic_type() {
    assert!(is_cyclic_type(&dihedral(3).unwrap()).unwrap());
    assert!(!is_cyclic_type(&trivial(3).unwrap()).unwrap());
    assert!(!is_cyclic_type(&dihedral(5).unwrap()).unwrap());
    let t4 = affine(
        &AbelianGroupSpec::new(vec![2, 2]).unwrap(),
        &Automorphism::enumerate(&AbelianGroupSpec::new(vec![2, 2]).unwrap())
            .into_iter()
            .find(|a| a.as_permutation().order() == 3)
            .unwrap(),
    )
    .unwrap();
    assert!(is_cyclic_type(&t4).unwrap());
    assert!(is_cyclic_type(&trivial(1).unwrap()).is_err());
}

#[test]
fn alexander_recognition() {
    let w = alexander_recognize(&trivial(4).unwrap()).unwrap().unwrap();
    assert!(w.automorphism.as_permutation().is_identity());
    let d3 = dihedral(3).unwrap();
    let w = alexander_recognize(&d3).unwrap().unwrap();
    assert_eq!(w.group.factors(), [3]);
    assert_eq!(
        w.automorphism.as_permutation(),
        Automorphism::negation(&z(3)).as_permutation()
    );
    assert!(w.verify(&d3));
    let q = affine(&z(4), &mult(4, 3)).unwrap();
    assert!(alexander_recognize(&q).unwrap().unwrap().verify(&q));
    assert!(alexander_recognize(&s3()).unwrap().is_none());
    assert!(alexander_recognize(&Quandle::new(q1()).unwrap())
        .unwrap()
        .is_none());
}

#[test]
fn lemma_sum() {
    assert!(lemma_sum_check(&z(12), &mult(12, 5)).unwrap());
    assert!(lemma_sum_check(&z(3), &Automorphism::negation(&z(3))).unwrap());
    assert!(lemma_sum_check(&z(7), &mult(7, 3)).unwrap());
}

#[test]
fn centralizers() {
    for a in 1..=4 {
        assert_eq!(centralizer(&trivial(4).unwrap(), a).unwrap(), vec![a]);
    }
    for a in 1..=3 {
        assert_eq!(
            centralizer(&dihedral(3).unwrap(), a).unwrap(),
            vec![1, 2, 3]
        );
    }
    assert!(centralizer(&dihedral(3).unwrap(), 4).is_err());
}

#[test]
fn group_conjugation_recognition() {
    assert!(is_group_conjugation(&trivial(5).unwrap()).unwrap());
    assert!(is_group_conjugation(&s3()).unwrap());
    let q8 = conjugation(&GroupTable::quaternion().unwrap());
    assert!(is_group_conjugation(&q8).unwrap());
    assert!(!is_group_conjugation(&dihedral(3).unwrap()).unwrap());
    assert!(is_group_conjugation(&trivial(16).unwrap()).unwrap());
    assert!(is_group_conjugation(&dihedral(17).unwrap()).is_err());
}

#[test]
fn inner_structure_and_group() {
    let s = inner_structure(&trivial(5).unwrap()).unwrap();
    assert_eq!(s.count(1), 5);
    assert_eq!(inn_group(&trivial(5).unwrap(), 10).unwrap().order, 1);
    assert_eq!(inn_group(&dihedral(3).unwrap(), 100).unwrap().order, 6);
    let g = inn_group(&q1(), DEFAULT_MATERIALIZE_CAP).unwrap();
    assert_eq!(g.order, g.elements.len());
    assert!(inn_group(&conjugation(&GroupTable::symmetric(4).unwrap()), 3).is_err());
    assert_eq!(orbits(&dihedral(5).unwrap()).unwrap().len(), 1);
    assert_eq!(
        orbits(&trivial(3).unwrap()).unwrap(),
        vec![vec![1], vec![2], vec![3]]
    );
}

#[test]
fn profiles() {
    let p1 = InvariantProfile::of(&Quandle::new(q1()).unwrap());
    assert_eq!(
        p1.spectrum
            .iter()
            .map(|(&k, &v)| (k, v))
            .collect::<Vec<_>>(),
        [(1, 3), (2, 9)]
    );
    let p2 = InvariantProfile::of(&Quandle::new(q2()).unwrap());
    assert_eq!(
        p2.spectrum
            .iter()
            .map(|(&k, &v)| (k, v))
            .collect::<Vec<_>>(),
        [(1, 2), (2, 10)]
    );
    let pt = InvariantProfile::of(&trivial(4).unwrap());
    assert_eq!(pt.orbit_sizes, [1, 1, 1, 1]);
    assert_eq!(pt.centralizer_sizes, [1, 1, 1, 1]);
    assert_eq!(pt.spectrum.get(&1), Some(&4));
}

#[test]
fn isomorphism_and_classification() {
    let a = Quandle::new(q1()).unwrap();
    let b = Quandle::new(q2()).unwrap();
    let r = are_isomorphic(&a, &b);
    assert!(!r.is_isomorphic());
    assert_eq!(
        r.certificate.unwrap().to_string(),
        "generator order spectrum: {1:3,2:9} vs {1:2,2:10}"
    );
    let same = are_isomorphic(&a, &a);
    assert!(same.mapping.unwrap().is_identity());
    assert_eq!(classify_family(&[a.clone(), b]).len(), 2);
    assert_eq!(classify_family(&[a]).len(), 1);
}
