//! Builds A(1) from its presentation and prints the basis and a few products.

use a1kit::a1algebra::{a1, parse_element};

fn main() {
    let alg = a1();
    println!("A(1) has dimension {}", alg.dimension());
    for (i, b) in alg.basis().iter().enumerate() {
        println!("  e{i}: {:<8} degree {}", alg.basis_name(i), b.degree);
    }

    let sq2 = parse_element("Sq2").unwrap();
    let sq1 = parse_element("Sq1").unwrap();
    println!("Sq2 * Sq2 = {}", sq2 * sq2);
    println!("Sq1 * Sq2 * Sq1 = {}", sq1 * sq2 * sq1);

    let (q0, q1) = alg.q_operators();
    println!("Q0 = {q0}, Q1 = {q1}");
    println!("Q1 * Q1 = {}", q1 * q1);
}
