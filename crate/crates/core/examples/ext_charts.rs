//! Ext charts of F2 (the ko pattern) and A1/(Sq1,Sq3) (the ku pattern).

use a1kit::a1algebra::parse_element;
use a1kit::a1modules::{cyclic_quotient, f2};
use a1kit::cli::render::ascii_chart;
use a1kit::resolutions::{ext_chart, minimal_resolution};

fn main() {
    let ko = ext_chart(&minimal_resolution(&f2(), 10, 26));
    println!("F2:\n{}", ascii_chart(&ko));
    for n in 0..12 {
        println!("  stem {n:>2}: {:?}", ko.stem(n).iter().filter(|(_, c)| *c > 0).map(|(s, _)| s).collect::<Vec<_>>());
    }

    let rels = [parse_element("Sq1").unwrap(), parse_element("Sq3").unwrap()];
    let ku = ext_chart(&minimal_resolution(&cyclic_quotient(&rels, "ku"), 8, 24));
    println!("A1/(Sq1,Sq3):\n{}", ascii_chart(&ku));
}
