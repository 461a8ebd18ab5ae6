//! Margolis homology and dimension-vector invariants.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::a1algebra::Gen;
use crate::a1modules::{A1Module, GradedA1Module};
use crate::gf2linalg::Gf2Matrix;

/// Dimension per degree, zero entries dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GradedDims(BTreeMap<i32, usize>);

impl GradedDims {
    pub fn new(map: BTreeMap<i32, usize>) -> Self {
        Self(map.into_iter().filter(|&(_, n)| n > 0).collect())
    }

    pub fn get(&self, d: i32) -> usize {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn as_map(&self) -> &BTreeMap<i32, usize> {
        &self.0
    }

    pub fn shift(&self, n: i32) -> Self {
        Self(self.0.iter().map(|(&d, &k)| (d + n, k)).collect())
    }

    pub fn sum(&self, other: &GradedDims) -> Self {
        let mut out = self.0.clone();
        for (&d, &k) in &other.0 {
            *out.entry(d).or_insert(0) += k;
        }
        Self(out)
    }

    /// `sum_d (-1)^d dim_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .map(|(&d, &k)| if d.rem_euclid(2) == 0 { k as i64 } else { -(k as i64) })
            .sum()
    }
}

impl<const N: usize> From<[(i32, usize); N]> for GradedDims {
    fn from(pairs: [(i32, usize); N]) -> Self {
        Self::new(pairs.into_iter().collect())
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(d, k)| format!("{d}:{k}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Which Milnor primitive to take homology with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Margolis {
    Q0,
    Q1,
}

impl Margolis {
    pub fn degree(self) -> i32 {
        match self {
            Margolis::Q0 => 1,
            Margolis::Q1 => 3,
        }
    }
}

/// Matrix of `Q0` or `Q1` from degree `d`. `Q1` is the composite
/// `Sq1 Sq2 + Sq2 Sq1`.
pub fn q_matrix(m: &A1Module, which: Margolis, d: i32) -> Gf2Matrix {
    match which {
        Margolis::Q0 => m.sq1(d).into_owned(),
        Margolis::Q1 => {
            let a = m.word_matrix(&[Gen::Sq1, Gen::Sq2], d);
            let b = m.word_matrix(&[Gen::Sq2, Gen::Sq1], d);
            a.add(&b).expect("both composites land in degree d + 3")
        }
    }
}

/// `ker Q / im Q` in each degree.
pub fn margolis_homology(m: &A1Module, which: Margolis) -> GradedDims {
    let k = which.degree();
    let dims = m
        .degrees()
        .map(|d| {
            let out = q_matrix(m, which, d);
            let incoming = q_matrix(m, which, d - k);
            let kernel = m.dim(d) - out.rank();
            (d, kernel - incoming.rank())
        })
        .collect();
    GradedDims::new(dims)
}

pub fn poincare_series(m: &A1Module) -> GradedDims {
    GradedDims::new(m.dims())
}
