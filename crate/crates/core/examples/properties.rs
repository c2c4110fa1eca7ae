//! Property flags, centralizers and recognition of affine and
//! conjugation quandles.

use quandles::datasets::table1;
use quandles::properties::{
    alexander_recognize, centralizer, is_group_conjugation, lemma_sum_check, PropertyFlags,
};
use quandles::{
    affine, conjugation, dihedral, trivial, AbelianGroupSpec, Automorphism, GroupTable, Quandle,
};

fn describe(label: &str, q: &Quandle) {
    let flags = PropertyFlags::of(q);
    let alex = match alexander_recognize(q) {
        Ok(Some(w)) => format!("affine over Z{:?}", w.group.factors()),
        Ok(None) => "not affine".into(),
        Err(e) => format!("undecided: {e}"),
    };
    let conj = is_group_conjugation(q).map_or("undecided".into(), |b| b.to_string());
    println!("{label:<12} {flags:?}");
    println!("{:<12} {alex}; group conjugation: {conj}", "");
}

fn main() {
    let z22 = AbelianGroupSpec::new(vec![2, 2]).unwrap();
    let t = Automorphism::enumerate(&z22)
        .into_iter()
        .find(|a| a.as_permutation().order() == 3)
        .unwrap();
    let cases = [
        ("trivial(3)", trivial(3).unwrap()),
        ("dihedral(5)", dihedral(5).unwrap()),
        ("dihedral(6)", dihedral(6).unwrap()),
        ("Conj(S3)", conjugation(&GroupTable::symmetric(3).unwrap())),
        ("tetrahedral", affine(&z22, &t).unwrap()),
        ("table1", Quandle::new(table1()).unwrap()),
    ];
    for (label, q) in &cases {
        describe(label, q);
    }

    let d3 = dihedral(3).unwrap();
    println!(
        "\ncentralizer of 1 in dihedral(3): {:?}",
        centralizer(&d3, 1).unwrap()
    );

    let z12 = AbelianGroupSpec::cyclic(12).unwrap();
    let five = Automorphism::multiplication(&z12, 5).unwrap();
    println!(
        "sum identity on (Z12, 5x): {}",
        lemma_sum_check(&z12, &five).unwrap()
    );
}
