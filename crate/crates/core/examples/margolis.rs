//! Margolis homology of a few modules. Free modules have none.

use a1kit::cli::load_module;
use a1kit::invariants::{margolis_homology, Margolis};

fn main() {
    for r in ["F2", "A1", "A1/(Sq1,Sq3)", "A1/(Sq1)", "A1/(Sq2)", "S^4 A1/(Sq1,Sq2Sq3)"] {
        let m = load_module(r).unwrap();
        println!(
            "{:<22} Q0: {:<14} Q1: {}",
            r,
            margolis_homology(&m, Margolis::Q0).to_string(),
            margolis_homology(&m, Margolis::Q1)
        );
    }
}
