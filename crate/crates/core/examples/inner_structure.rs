//! Right-translation listing, inner automorphism group and orbits.

use quandles::datasets::{q1, q2};
use quandles::inner::{inn_group, inner_structure, orbits, DEFAULT_MATERIALIZE_CAP};
use quandles::{conjugation, GroupTable};

fn main() {
    for (label, m) in [("q1", q1()), ("q2", q2())] {
        let s = inner_structure(&m).unwrap();
        println!("{label}\n{s}spectrum {}", s.spectrum_string());
        let g = inn_group(&m, DEFAULT_MATERIALIZE_CAP).unwrap();
        println!("Inn order {}, orbits {:?}\n", g.order, orbits(&m).unwrap());
    }

    let s4 = conjugation(&GroupTable::symmetric(4).unwrap());
    let g = inn_group(&s4, DEFAULT_MATERIALIZE_CAP).unwrap();
    println!(
        "Conj(S4): Inn order {} (S4 modulo its trivial centre)",
        g.order
    );
    println!("element orders {:?}", g.order_spectrum());
}
