//! Ext dimensions from the normalized bar complex.
//!
//! `C_s = Abar^{(x)s} (x) M` with
//! `d[a1|...|as]m = sum_i [..|a_i a_{i+1}|..]m + [a1|...|a_{s-1}] a_s m`.
//! Its homology in internal degree `t` has the same dimension as
//! `Ext^{s,t}(M, F_2)`. It shares no code with the resolution builder, which
//! is the point: the two are used to check each other.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use super::ExtChart;
use crate::a1algebra::a1;
use crate::a1modules::{A1Module, GradedA1Module};
use crate::gf2linalg::{BitVec, Gf2Matrix};

/// Largest chain group the oracle will build in a single bidegree.
pub const BAR_WORD_LIMIT: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BarError {
    #[error("bar complex has {size} words in bidegree ({s}, {t}), limit is {limit}")]
    TooLarge { s: usize, t: i32, size: usize, limit: usize },
}

/// A basis element of `C_s`: algebra indices in the augmentation ideal,
/// then the module degree and position.
type Word = (Vec<u8>, i32, usize);

struct ChainGroup {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

fn chain_group(m: &A1Module, s: usize, t: i32) -> ChainGroup {
    let mut words = Vec::new();
    for d in m.degrees() {
        let n = m.dim(d);
        if n == 0 {
            continue;
        }
        let mut tuples = Vec::new();
        tuples_of_degree(s, t - d, &mut Vec::new(), &mut tuples);
        for tuple in tuples {
            for k in 0..n {
                words.push((tuple.clone(), d, k));
            }
        }
    }
    let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    ChainGroup { words, index }
}

fn tuples_of_degree(
    len: usize,
    degree: i32,
    prefix: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) {
    if len == 0 {
        if degree == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // every remaining factor has degree at least 1
    if degree < len as i32 {
        return;
    }
    let alg = a1();
    for i in 1..alg.dimension() {
        let di = alg.basis_degree(i);
        if di <= degree {
            prefix.push(i as u8);
            tuples_of_degree(len - 1, degree - di, prefix, out);
            prefix.pop();
        }
    }
}

fn boundary(m: &A1Module, source: &ChainGroup, target: &ChainGroup) -> Gf2Matrix {
    let alg = a1();
    let n = target.words.len();
    let cols: Vec<BitVec> = source
        .words
        .iter()
        .map(|(tuple, d, k)| {
            let mut col = BitVec::zeros(n);
            let s = tuple.len();
            for i in 0..s - 1 {
                let product = alg.basis_product(tuple[i] as usize, tuple[i + 1] as usize);
                for p in product.terms() {
                    let mut w = tuple[..i].to_vec();
                    w.push(p as u8);
                    w.extend_from_slice(&tuple[i + 2..]);
                    col.flip(target.index[&(w, *d, *k)]);
                }
            }
            let last = tuple[s - 1] as usize;
            let moved = m.act_basis(last, *d, &BitVec::unit(m.dim(*d), *k));
            let d2 = d + alg.basis_degree(last);
            for j in moved.ones() {
                col.flip(target.index[&(tuple[..s - 1].to_vec(), d2, j)]);
            }
            col
        })
        .collect();
    Gf2Matrix::from_columns(n, &cols)
}

/// Ext dimensions for `s <= max_s`, `t <= max_t` computed from the bar
/// complex. Every entry in the window is exact.
pub fn bar_ext(m: &A1Module, max_s: usize, max_t: i32) -> Result<ExtChart, BarError> {
    let mut counts = BTreeMap::new();
    let Some(bottom) = m.bottom_degree() else {
        return Ok(ExtChart::new(counts, max_s, max_t));
    };
    for t in bottom..=max_t {
        let mut groups = Vec::with_capacity(max_s + 2);
        for s in 0..=max_s + 1 {
            let group = chain_group(m, s, t);
            if group.words.len() > BAR_WORD_LIMIT {
                return Err(BarError::TooLarge {
                    s,
                    t,
                    size: group.words.len(),
                    limit: BAR_WORD_LIMIT,
                });
            }
            groups.push(group);
        }
        // ranks[s] = rank of d_s: C_s -> C_{s-1}
        let mut ranks = vec![0usize; max_s + 2];
        for s in 1..=max_s + 1 {
            ranks[s] = boundary(m, &groups[s], &groups[s - 1]).rank();
        }
        for s in 0..=max_s {
            let h = groups[s].words.len() - ranks[s] - ranks[s + 1];
            counts.insert((s, t), h);
        }
    }
    Ok(ExtChart::new(counts, max_s, max_t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::a1modules::{f2, free_module};

    #[test]
    fn bar_ext_low_degrees_of_f2() {
        let chart = bar_ext(&f2(), 2, 4).unwrap();
        assert_eq!(chart.get(0, 0), Some(1));
        assert_eq!(chart.get(1, 1), Some(1));
        assert_eq!(chart.get(1, 2), Some(1));
        assert_eq!(chart.get(1, 3), Some(0));
        assert_eq!(chart.get(2, 2), Some(1));
    }

    #[test]
    fn bar_ext_of_free_module() {
        let chart = bar_ext(&free_module(&[0]), 3, 8).unwrap();
        assert_eq!(chart.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
    }

    #[test]
    fn bar_guard() {
        let err = bar_ext(&f2(), 12, 40).unwrap_err();
        assert!(matches!(err, BarError::TooLarge { .. }));
    }
}
