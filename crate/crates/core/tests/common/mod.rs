//! Shared oracles for the integration tests: an exhaustive corpus of small
//! modules and brute-force Hom and exact-pair enumeration that use nothing
//! from the library beyond matrix arithmetic.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use a1kit::a1modules::{A1Module, GradedA1Module};
use a1kit::gf2linalg::Gf2Matrix;
use a1kit::morphisms::{is_isomorphic, ModuleMorphism};

/// Blocks of a degreewise linear map, in a comparable form.
pub type MapKey = Vec<(i32, Vec<Vec<u8>>)>;

pub fn key_of_blocks(blocks: &BTreeMap<i32, Gf2Matrix>) -> MapKey {
    blocks
        .iter()
        .filter(|(_, m)| m.rows() * m.cols() > 0)
        .map(|(&d, m)| (d, (0..m.rows()).map(|r| m.row(r).to_bits()).collect()))
        .collect()
}

pub fn key_of(f: &ModuleMorphism) -> MapKey {
    let blocks: BTreeMap<i32, Gf2Matrix> = f.source().degrees().map(|d| (d, f.block(d))).collect();
    key_of_blocks(&blocks)
}

fn matrix_from_mask(rows: usize, cols: usize, mask: u64) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if mask >> (r * cols + c) & 1 == 1 {
                m.set(r, c, true);
            }
        }
    }
    m
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Every A(1)-module of total dimension `1..=max_total` supported in degrees
/// `0..=top`, one per isomorphism class.
pub fn small_modules(max_total: usize, top: i32) -> Vec<A1Module> {
    let parts = (top + 1) as usize;
    let mut out: Vec<A1Module> = Vec::new();
    for total in 1..=max_total {
        for dims_vec in compositions(total, parts) {
            let dims: BTreeMap<i32, usize> = dims_vec.iter().enumerate().map(|(d, &n)| (d as i32, n)).collect();
            let dim = |d: i32| dims.get(&d).copied().unwrap_or(0);
            let slots: Vec<(i32, i32, usize, usize)> = [1, 2]
                .into_iter()
                .flat_map(|step| (0..=top).map(move |d| (step, d)))
                .map(|(step, d)| (step, d, dim(d + step), dim(d)))
                .filter(|s| s.2 * s.3 > 0)
                .collect();
            let bits: usize = slots.iter().map(|s| s.2 * s.3).sum();
            let mut found: Vec<A1Module> = Vec::new();
            for mask in 0u64..(1 << bits) {
                let mut sq1 = BTreeMap::new();
                let mut sq2 = BTreeMap::new();
                let mut shift = 0;
                for &(step, d, r, c) in &slots {
                    let m = matrix_from_mask(r, c, mask >> shift);
                    shift += r * c;
                    if step == 1 { sq1.insert(d, m) } else { sq2.insert(d, m) };
                }
                let m = A1Module::from_parts(format!("M{}", out.len() + found.len()), &dims, &sq1, &sq2).unwrap();
                if !m.verify_action().passed() {
                    continue;
                }
                let mut new = true;
                for other in &found {
                    if is_isomorphic(&m, other).unwrap().is_some() {
                        new = false;
                        break;
                    }
                }
                if new {
                    found.push(m);
                }
            }
            out.extend(found);
        }
    }
    out
}

fn commutes(a: &A1Module, b: &A1Module, blocks: &BTreeMap<i32, Gf2Matrix>) -> bool {
    let block = |d: i32| blocks.get(&d).cloned().unwrap_or_else(|| Gf2Matrix::zeros(b.dim(d), a.dim(d)));
    let lo = a.bottom_degree().unwrap_or(0).min(b.bottom_degree().unwrap_or(0));
    let hi = a.top_degree().unwrap_or(0).max(b.top_degree().unwrap_or(0));
    (lo..=hi).all(|d| {
        (&*b.sq1(d) * &block(d)) == (&block(d + 1) * &*a.sq1(d))
            && (&*b.sq2(d) * &block(d)) == (&block(d + 2) * &*a.sq2(d))
    })
}

/// All A(1)-linear maps `a -> b`, by trying every degreewise linear map.
pub fn brute_hom(a: &A1Module, b: &A1Module) -> Vec<BTreeMap<i32, Gf2Matrix>> {
    let slots: Vec<(i32, usize, usize)> = a
        .degrees()
        .map(|d| (d, b.dim(d), a.dim(d)))
        .filter(|s| s.1 * s.2 > 0)
        .collect();
    let bits: usize = slots.iter().map(|s| s.1 * s.2).sum();
    assert!(bits <= 20, "brute force over {bits} bits");
    let mut out = Vec::new();
    for mask in 0u64..(1 << bits) {
        let mut shift = 0;
        let mut blocks = BTreeMap::new();
        for &(d, r, c) in &slots {
            blocks.insert(d, matrix_from_mask(r, c, mask >> shift));
            shift += r * c;
        }
        if commutes(a, b, &blocks) {
            out.push(blocks);
        }
    }
    out
}

/// Exact pairs `0 -> a -> b -> c -> 0`, by brute force over both Hom sets.
pub fn brute_exact_pairs(a: &A1Module, b: &A1Module, c: &A1Module) -> BTreeSet<(MapKey, MapKey)> {
    let fs = brute_hom(a, b);
    let gs = brute_hom(b, c);
    let degrees: Vec<i32> = {
        let mut ds: BTreeSet<i32> = a.degrees().collect();
        ds.extend(b.degrees());
        ds.extend(c.degrees());
        ds.into_iter().collect()
    };
    let get = |m: &BTreeMap<i32, Gf2Matrix>, d: i32, r: usize, cc: usize| {
        m.get(&d).cloned().unwrap_or_else(|| Gf2Matrix::zeros(r, cc))
    };
    let mut out = BTreeSet::new();
    for f in &fs {
        for g in &gs {
            let ok = degrees.iter().all(|&d| {
                let fd = get(f, d, b.dim(d), a.dim(d));
                let gd = get(g, d, c.dim(d), b.dim(d));
                fd.rank() == a.dim(d)
                    && gd.rank() == c.dim(d)
                    && (&gd * &fd).is_zero()
                    && fd.rank() == b.dim(d) - gd.rank()
            });
            if ok {
                out.insert((key_of_blocks(f), key_of_blocks(g)));
            }
        }
    }
    out
}
