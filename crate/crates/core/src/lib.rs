//! Exact computations with finite modules over the subalgebra A(1) of the
//! mod-2 Steenrod algebra.

pub mod a1algebra;
pub mod a1modules;
pub mod cli;
pub mod gf2linalg;
pub mod invariants;
pub mod morphisms;
pub mod paperreg;
pub mod resolutions;
