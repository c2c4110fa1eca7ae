//! Lists the valid phase rules on Z3 and shows why the two literal
//! case-table rules are rejected.

use quandles::format::emit_phase;
use quandles::{enumerate_phase_rules, validate_rule, PhaseRule};

fn main() {
    for rule in enumerate_phase_rules() {
        print!("{}:\n{}", rule.name(), emit_phase(&rule));
    }
    for rule in [PhaseRule::literal_rule_a(), PhaseRule::literal_rule_b()] {
        print!("\n{}:\n{}", rule.name(), emit_phase(&rule));
        println!("{}", validate_rule(&rule));
    }
}
