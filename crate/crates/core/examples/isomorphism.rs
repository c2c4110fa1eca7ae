//! Isomorphism decisions with mappings or certificates, and partitioning
//! a family into classes.

use quandles::classify::classify_family;
use quandles::datasets::{base_b, q1, q2};
use quandles::{
    are_isomorphic, dihedral, enumerate_phase_rules, product3, IndexConvention, Permutation,
    Quandle,
};

fn main() {
    let a = Quandle::new(q1()).unwrap();
    let b = Quandle::new(q2()).unwrap();
    let r = are_isomorphic(&a, &b);
    println!("q1 vs q2: {:?}, {}", r.verdict, r.certificate.unwrap());

    let d5 = dihedral(5).unwrap();
    let shuffled = d5.relabel(&Permutation::from_images(&[3, 5, 1, 2, 4]).unwrap());
    let r = are_isomorphic(&d5, &shuffled);
    println!(
        "dihedral(5) vs relabeled copy: {:?}, mapping {}",
        r.verdict,
        r.mapping.unwrap()
    );

    let products: Vec<Quandle> = enumerate_phase_rules()
        .iter()
        .map(|rule| Quandle::new(product3(&base_b(), rule, IndexConvention::Xa).table).unwrap())
        .collect();
    let names: Vec<String> = enumerate_phase_rules()
        .iter()
        .map(|r| r.name().to_string())
        .collect();
    for (i, class) in classify_family(&products).iter().enumerate() {
        let members: Vec<&str> = class.members.iter().map(|&m| names[m].as_str()).collect();
        println!("class {}: baseB x {:?}", i + 1, members);
    }
}
