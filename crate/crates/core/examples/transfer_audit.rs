//! Evaluates each transferred property on a base and its order-3n product.

use quandles::datasets::base_b;
use quandles::{audit_transfer, dihedral, enumerate_phase_rules, PhaseRule, Quandle};

fn main() {
    let bases = [dihedral(3).unwrap(), Quandle::new(base_b()).unwrap()];
    for base in &bases {
        for rule in enumerate_phase_rules() {
            println!("{}", audit_transfer(base, &rule).unwrap());
        }
    }
    if let Err(e) = audit_transfer(&bases[0], &PhaseRule::literal_rule_a()) {
        println!("thm31: {e}");
    }
}
