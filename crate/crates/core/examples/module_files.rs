//! Reads the shipped `.a1m` files, checks HZ against A1/(Sq1) and writes a
//! module back out in the same format.

use a1kit::a1algebra::parse_element;
use a1kit::a1modules::cyclic_quotient;
use a1kit::cli::{parse_module_file, render::ascii_cells, ModuleFile};
use a1kit::morphisms::is_isomorphic;

fn main() {
    let hz = parse_module_file(include_str!("../data/HZ.a1m")).unwrap();
    print!("{}", ascii_cells(&hz));
    let q = cyclic_quotient(&[parse_element("Sq1").unwrap()], "A1/(Sq1)");
    println!("HZ = A1/(Sq1): {}", is_isomorphic(&hz, &q).unwrap().is_some());

    let joker = parse_module_file(include_str!("../data/joker.a1m")).unwrap();
    print!("{}", ascii_cells(&joker));

    println!("A1/(Sq1) as a file:\n{}", ModuleFile::from_module(&q));

    match parse_module_file("name: bad\ngenerators:\na @ 0\nb @ 1\nc @ 2\nsq1:\na -> b\nb -> c\n") {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
}
