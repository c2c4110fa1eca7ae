//! Reads and writes the text and JSON table formats.

use quandles::format::{emit_table, emit_table_json, parse_any, parse_table};

fn main() {
    let text = "# dihedral quandle of order 3\nquandle 3\n1 3 2\n3 2 1\n2 1 3\n";
    let m = parse_table(text).unwrap();
    print!("{}", emit_table(&m));
    let json = emit_table_json(&m);
    println!("{json}");
    assert!(parse_any(&json).unwrap().same_table(&m));

    match parse_table("quandle 3\n1 3 2\n3 2 1\n2 1 7\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }
}
