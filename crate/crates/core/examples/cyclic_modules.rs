//! Cyclic quotients A(1)/(relators), their dimensions and suspensions.

use a1kit::a1algebra::parse_element;
use a1kit::a1modules::{cyclic_quotient, left_ideal};
use a1kit::invariants::poincare_series;

fn main() {
    for rels in [vec![], vec!["Sq1"], vec!["Sq2"], vec!["Sq3"], vec!["Sq1", "Sq3"], vec!["Sq1", "Sq2Sq3"]] {
        let elems: Vec<_> = rels.iter().map(|r| parse_element(r).unwrap()).collect();
        let name = if rels.is_empty() { "A1".to_string() } else { format!("A1/({})", rels.join(",")) };
        let m = cyclic_quotient(&elems, name);
        println!("{:<18} dims {}", m.name(), poincare_series(&m));
    }

    let ideal = left_ideal(&[parse_element("Sq2").unwrap()], "(Sq2)");
    println!("left ideal (Sq2): dims {}", poincare_series(&ideal));
    println!("suspended by 3:   dims {}", poincare_series(&ideal.suspend(3)));
}
