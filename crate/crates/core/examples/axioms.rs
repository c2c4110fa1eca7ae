//! Checks the three quandle axioms on a few tables and prints the reports.

use quandles::datasets::table1;
use quandles::{CheckOptions, Magma};

fn main() {
    println!("{}\n", table1().check_axioms());

    // x ▷ y = y: idempotent but every column is constant.
    let projection = Magma::from_fn(3, |_, y| y).unwrap();
    println!(
        "{}\n",
        projection.check_axioms_with(&CheckOptions::capped(2))
    );

    // x ▷ y = x + 1 mod 4 fails idempotency everywhere.
    let shift = Magma::from_fn(4, |x, _| (x + 1) % 4).unwrap();
    let report = shift.check_axioms();
    println!("{report}");
    println!("failed: {:?}", report.failed_axioms());
}
