//! Verifies the ten short exact sequences in the registry and prints the
//! JSON export.

use a1kit::paperreg::{export_json, registry, verify_all};

fn main() {
    let report = verify_all();
    for r in &report.entries {
        println!("{:<4} exact={} pairs={:?}", r.id, r.exact, r.exact_pairs);
    }
    println!("{}/{} exact", report.exact_count(), report.entries.len());
    if std::env::args().any(|a| a == "--json") {
        print!("{}", export_json(&registry(), &report.entries));
    }
}
