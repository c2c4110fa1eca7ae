//! Builds the order-12 products from the block base and splits them back.

use quandles::datasets::{base_b, q1, q2};
use quandles::format::emit_table;
use quandles::{decompose3, product3, IndexConvention, PhaseRule};

fn main() {
    let base = base_b();
    for rule in [PhaseRule::trivial(), PhaseRule::by_name("swap01").unwrap()] {
        let p = product3(&base, &rule, IndexConvention::Xa);
        println!("baseB x {}:", rule.name());
        print!("{}", emit_table(&p.table));
        println!("axioms hold: {}\n", p.table.check_axioms().overall);
    }

    for (label, m) in [("q1", q1()), ("q2", q2())] {
        match decompose3(&m, IndexConvention::Xa).unwrap() {
            Some((b, r)) => println!(
                "{label} = product of a base (same as baseB: {}) with rule {}",
                b.same_table(&base),
                r.name()
            ),
            None => println!("{label} has no decomposition"),
        }
    }

    let ax = product3(&base, &PhaseRule::dihedral(), IndexConvention::Ax);
    println!(
        "\nax coding, dihedral rule, element 5 = {:?}",
        IndexConvention::Ax.split(4, 5)
    );
    println!("5 ▷ 9 = {}", ax.table.apply(5, 9).unwrap());
}
