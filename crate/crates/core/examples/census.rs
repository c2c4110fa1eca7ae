//! Counts quandles of orders 1 to 6 up to isomorphism and prints the
//! order-3 representatives.

use std::time::Instant;

use quandles::classify::{census, labeled_quandles};
use quandles::format::emit_table;

fn main() {
    for n in 1..=6 {
        let start = Instant::now();
        let labeled = labeled_quandles(n).unwrap().len();
        let classes = census(n).unwrap().len();
        println!(
            "order {n}: {labeled:>6} labeled, {classes:>3} classes ({:.0?})",
            start.elapsed()
        );
    }
    println!();
    for q in census(3).unwrap() {
        print!("{}", emit_table(&q));
    }
}
