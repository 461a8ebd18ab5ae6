//! Minimal free resolutions over A(1) and the Ext charts they compute.
//!
//! The resolution is built one internal degree at a time. At degree `t`, for
//! each stage `s`, new free generators are added for a basis of
//! `ker(d_{s-1}) / im(d_s)` in degree `t`, so that every generator is
//! indecomposable and `Ext^{s,t}(M, F_2)` is the number of stage-`s`
//! generators in degree `t`.

mod bar;
mod chart;

use std::collections::BTreeMap;

use serde::Serialize;

pub use bar::{bar_ext, BarError, BAR_WORD_LIMIT};
pub use chart::ExtChart;

use crate::a1algebra::{a1, TOP_DEGREE};
use crate::a1modules::{A1Module, FreeModule, GradedA1Module};
use crate::gf2linalg::{BitVec, Gf2Matrix, Subspace};

/// One stage `F_s` of a resolution with the images of its generators.
#[derive(Debug, Clone)]
pub struct Stage {
    free: FreeModule,
    /// Image of each generator in `F_{s-1}` (or in the target for `s = 0`),
    /// as a vector in the generator's degree.
    images: Vec<BitVec>,
}

impl Stage {
    pub fn free_module(&self) -> &FreeModule {
        &self.free
    }

    pub fn generator_degrees(&self) -> &[i32] {
        self.free.gen_degrees()
    }

    pub fn images(&self) -> &[BitVec] {
        &self.images
    }
}

#[derive(Debug, Clone)]
pub struct Resolution {
    target: A1Module,
    stages: Vec<Stage>,
    max_s: usize,
    max_t: i32,
}

/// Outcome of the structural checks on a resolution.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ResolutionReport {
    /// `(s, t)` where `d_{s-1} d_s != 0`.
    pub not_a_complex: Vec<(usize, i32)>,
    /// `(s, t)` where the sequence fails to be exact at `F_s` (or at the
    /// target, reported as `s = -1`).
    pub not_exact: Vec<(i64, i32)>,
    /// `(s, generator)` whose image has a unit coefficient.
    pub not_minimal: Vec<(usize, usize)>,
}

impl ResolutionReport {
    pub fn passed(&self) -> bool {
        self.not_a_complex.is_empty() && self.not_exact.is_empty() && self.not_minimal.is_empty()
    }
}

/// Resolves `m` through filtration `max_s`, internal degree `max_t`.
pub fn minimal_resolution(m: &A1Module, max_s: usize, max_t: i32) -> Resolution {
    let mut res = Resolution {
        target: m.clone(),
        stages: (0..=max_s)
            .map(|_| Stage {
                free: FreeModule::default(),
                images: Vec::new(),
            })
            .collect(),
        max_s,
        max_t,
    };
    let Some(bottom) = m.bottom_degree() else {
        return res;
    };
    for t in bottom..=max_t {
        for s in 0..=max_s {
            let cycles = if s == 0 {
                Subspace::full(m.dim(t))
            } else {
                Subspace::kernel_of(&res.differential(s - 1, t))
            };
            if cycles.dim() == 0 {
                continue;
            }
            let mut boundaries = Subspace::column_space(&res.differential(s, t));
            for v in cycles.basis() {
                if boundaries.contains(v) {
                    continue;
                }
                boundaries = boundaries.join(&Subspace::spanned_by(v.len(), [v.clone()]));
                let stage = &mut res.stages[s];
                stage.free.add_generator(t);
                stage.images.push(v.clone());
            }
        }
    }
    res
}

impl Resolution {
    pub fn target(&self) -> &A1Module {
        &self.target
    }

    pub fn max_s(&self) -> usize {
        self.max_s
    }

    pub fn max_t(&self) -> i32 {
        self.max_t
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn stage(&self, s: usize) -> &Stage {
        &self.stages[s]
    }

    fn codomain(&self, s: usize) -> &dyn GradedA1Module {
        if s == 0 {
            &self.target
        } else {
            &self.stages[s - 1].free
        }
    }

    /// Matrix of `d_s: F_s -> F_{s-1}` (with `F_{-1}` the target) at
    /// internal degree `t`.
    pub fn differential(&self, s: usize, t: i32) -> Gf2Matrix {
        let stage = &self.stages[s];
        let codomain = self.codomain(s);
        let cols: Vec<BitVec> = stage
            .free
            .basis(t)
            .into_iter()
            .map(|(g, b)| codomain.act_basis(b, stage.free.gen_degrees()[g], &stage.images[g]))
            .collect();
        Gf2Matrix::from_columns(codomain.dim(t), &cols)
    }

    /// Largest internal degree at which counts are reported.
    pub fn reliable_max_t(&self) -> i32 {
        self.max_t - TOP_DEGREE
    }

    /// Number of stage-`s` generators by internal degree.
    pub fn generator_counts(&self, s: usize) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for &d in self.stages[s].free.gen_degrees() {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    /// Checks `d d = 0`, exactness through `max_t` and minimality.
    pub fn check(&self) -> ResolutionReport {
        let mut report = ResolutionReport::default();
        let Some(bottom) = self.target.bottom_degree() else {
            return report;
        };
        for t in bottom..=self.max_t {
            if self.differential(0, t).rank() != self.target.dim(t) {
                report.not_exact.push((-1, t));
            }
            for s in 1..=self.max_s {
                let upper = self.differential(s, t);
                let lower = self.differential(s - 1, t);
                if !(&lower * &upper).is_zero() {
                    report.not_a_complex.push((s, t));
                }
                let cycles = lower.cols() - lower.rank();
                if cycles != upper.rank() {
                    report.not_exact.push((s as i64 - 1, t));
                }
            }
        }
        let alg = a1();
        for s in 1..=self.max_s {
            let stage = &self.stages[s];
            let lower = &self.stages[s - 1].free;
            for (g, image) in stage.images.iter().enumerate() {
                let t = stage.free.gen_degrees()[g];
                let basis = lower.basis(t);
                if image.ones().any(|i| alg.basis_degree(basis[i].1) == 0) {
                    report.not_minimal.push((s, g));
                }
            }
        }
        report
    }
}

/// The generator counts of a minimal resolution, restricted to the reliable
/// window `t <= max_t - 6`.
pub fn ext_chart(r: &Resolution) -> ExtChart {
    let mut counts = BTreeMap::new();
    for s in 0..=r.max_s {
        for (t, n) in r.generator_counts(s) {
            counts.insert((s, t), n);
        }
    }
    ExtChart::new(counts, r.max_s, r.reliable_max_t())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::a1algebra::parse_element;
    use crate::a1modules::{cyclic_quotient, f2, free_module};

    #[test]
    fn free_module_resolves_itself() {
        let r = minimal_resolution(&free_module(&[0]), 4, 12);
        assert_eq!(r.generator_counts(0), BTreeMap::from([(0, 1)]));
        for s in 1..=4 {
            assert!(r.generator_counts(s).is_empty());
        }
        assert!(r.check().passed());
        let chart = ext_chart(&r);
        assert_eq!(chart.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
    }

    #[test]
    fn f2_first_stage() {
        let r = minimal_resolution(&f2(), 3, 14);
        assert_eq!(r.stage(1).generator_degrees(), &[1, 2]);
        assert!(r.check().passed());
        let chart = ext_chart(&r);
        assert_eq!(chart.get(1, 1), Some(1));
        assert_eq!(chart.get(1, 2), Some(1));
        assert_eq!(chart.get(1, 3), Some(0));
        assert_eq!(chart.get(1, 13), None);
    }

    #[test]
    fn resolution_is_additive() {
        let sum = f2().direct_sum(&free_module(&[0]));
        let a = minimal_resolution(&sum, 3, 12);
        let b = minimal_resolution(&f2(), 3, 12);
        assert_eq!(a.generator_counts(0), BTreeMap::from([(0, 2)]));
        for s in 1..=3 {
            assert_eq!(a.generator_counts(s), b.generator_counts(s));
        }
    }

    #[test]
    fn ku_chart_closed_form() {
        let ku = cyclic_quotient(
            &[parse_element("Sq1").unwrap(), parse_element("Sq3").unwrap()],
            "ku",
        );
        let r = minimal_resolution(&ku, 5, 18);
        assert!(r.check().passed());
        let chart = ext_chart(&r);
        for s in 0..=5usize {
            for t in 0..=12 {
                let expected = (0..=s as i32).filter(|b| (s as i32 - b) + 3 * b == t).count();
                assert_eq!(chart.get(s, t), Some(expected), "(s, t) = ({s}, {t})");
            }
        }
    }

    #[test]
    fn suspension_shifts_chart() {
        let m = cyclic_quotient(&[parse_element("Sq2").unwrap()], "Q");
        let plain = ext_chart(&minimal_resolution(&m, 3, 15));
        let moved = ext_chart(&minimal_resolution(&m.suspend(2), 3, 17));
        assert_eq!(plain.shift_t(2), moved);
    }

    #[test]
    fn charts_are_stable_under_larger_windows() {
        let small = ext_chart(&minimal_resolution(&f2(), 4, 14));
        let large = ext_chart(&minimal_resolution(&f2(), 6, 20));
        assert_eq!(large.restrict(4, small.reliable_max_t()), small);
    }
}
