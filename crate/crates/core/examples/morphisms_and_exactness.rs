//! Maps between cyclic modules, kernels and cokernels, Hom spaces and a
//! short exact sequence check.

use a1kit::a1algebra::{a1, parse_element};
use a1kit::a1modules::CyclicModule;
use a1kit::invariants::poincare_series;
use a1kit::morphisms::{cokernel, find_exact_pairs, hom_basis, kernel, ModuleMorphism, ShortExactSeq};

fn cyc(rels: &[&str], shift: i32) -> CyclicModule {
    let elems: Vec<_> = rels.iter().map(|r| parse_element(r).unwrap()).collect();
    CyclicModule::new(&elems, format!("A1/({})", rels.join(","))).suspend(shift)
}

fn main() {
    // 0 -> S^2 F2 -> A1/(Sq1,Sq3) -> F2 -> 0
    let sub = cyc(&["Sq1", "Sq2"], 2);
    let mid = cyc(&["Sq1", "Sq3"], 0);
    let quot = cyc(&["Sq1", "Sq2"], 0);

    let f = ModuleMorphism::from_generator_element(&sub, &mid, parse_element("Sq2").unwrap()).unwrap();
    let g = ModuleMorphism::from_generator_element(&mid, &quot, a1().unit()).unwrap();
    let report = ShortExactSeq::new(f, g.clone()).is_short_exact();
    println!("exact: {}", report.is_exact());

    let (k, _) = kernel(&g);
    println!("kernel of the projection: {}", poincare_series(&k));
    let (c, _) = cokernel(&g);
    println!("cokernel of the projection: {}", poincare_series(&c));

    println!("dim Hom(mid, S^2 F2) = {}", hom_basis(mid.module(), sub.module()).len());
    let pairs = find_exact_pairs(sub.module(), mid.module(), quot.module()).unwrap();
    println!("exact pairs found by search: {}", pairs.len());
}
