//! Dense, bit-packed linear algebra over the two-element field.
//!
//! Vectors are [`BitVec`]s and matrices are stored row-major as a list of
//! packed rows. Matrices act on column vectors: an `r x c` matrix maps
//! `F_2^c` to `F_2^r`. Zero-sized matrices (`0 x n`, `n x 0`) are legal
//! everywhere and behave as rank zero.
//!
//! Every routine is deterministic. Echelon pivoting scans columns left to
//! right and picks the first eligible row; kernel bases are ordered by free
//! column index.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{op}: dimension mismatch (expected {expected}, found {found})")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },
}

/// A vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from a slice of 0/1 values (any nonzero byte is 1).
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Adds `other` into `self`.
    ///
    /// # Panics
    /// Panics if the lengths differ.
    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor_assign: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let bit = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }

    /// Index of the lowest set bit at or after `start`.
    pub fn first_one_from(&self, start: usize) -> Option<usize> {
        if start >= self.len {
            return None;
        }
        let mut wi = start / WORD_BITS;
        let mut word = self.words[wi] & (!0u64 << (start % WORD_BITS));
        loop {
            if word != 0 {
                return Some(wi * WORD_BITS + word.trailing_zeros() as usize);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            word = self.words[wi];
        }
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot: length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = Self::zeros(self.len + other.len);
        for i in self.ones() {
            v.set(i, true);
        }
        for i in other.ones() {
            v.set(self.len + i, true);
        }
        v
    }

    /// The bits at the given positions, in the given order.
    pub fn select(&self, positions: &[usize]) -> Self {
        let mut v = Self::zeros(positions.len());
        for (i, &p) in positions.iter().enumerate() {
            if self.get(p) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: Gf2Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values.
    ///
    /// # Panics
    /// Panics if the rows are ragged.
    pub fn from_bits(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<BitVec> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                BitVec::from_bits(r)
            })
            .collect();
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Stacks the given vectors as rows.
    ///
    /// # Panics
    /// Panics if some row's length differs from `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        Self {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    #[inline]
    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[BitVec] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.data
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.get(c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.cols {
            if next == m.rows {
                break;
            }
            let Some(p) = (next..m.rows).find(|&r| m.data[r].get(col)) else {
                continue;
            };
            m.data.swap(next, p);
            let pivot_row = m.data[next].clone();
            for r in 0..m.rows {
                if r != next && m.data[r].get(col) {
                    m.data[r].xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Rows of the result form a basis of `{ x : self * x = 0 }`, one vector
    /// per free column, in increasing free-column order. The vector for free
    /// column `f` has a 1 at `f` and zeros at every other free column.
    pub fn kernel_basis(&self) -> Gf2Matrix {
        let ech = self.rref();
        let free = free_columns(self.cols, &ech.pivots);
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = BitVec::unit(self.cols, f);
                for (i, &p) in ech.pivots.iter().enumerate() {
                    if ech.matrix.get(i, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        Gf2Matrix::from_rows(self.cols, rows)
    }

    /// Solves `self * x = b`. The returned solution has zeros in every free
    /// coordinate; `Ok(None)` means the system is inconsistent.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "solve",
                expected: self.rows,
                found: b.len(),
            });
        }
        let augmented = self.hconcat(&Gf2Matrix::from_columns(self.rows, std::slice::from_ref(b)))?;
        let ech = augmented.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(self.cols);
        for (i, &p) in ech.pivots.iter().enumerate() {
            if ech.matrix.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    /// Matrix product `self * other` over GF(2).
    pub fn compose(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "compose",
                expected: self.cols,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVec::zeros(other.cols);
                for k in row.ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn apply(&self, x: &BitVec) -> Result<BitVec, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "apply",
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut y = BitVec::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                y.set(r, true);
            }
        }
        Ok(y)
    }

    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
        Ok(out)
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "hconcat",
                expected: self.rows,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// `self` stacked above `other`.
    pub fn vconcat(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vconcat",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Gf2Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// A square matrix of full rank.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// # Panics
/// Panics on a shape mismatch; use [`Gf2Matrix::compose`] to get an error.
impl Mul for &Gf2Matrix {
    type Output = Gf2Matrix;

    fn mul(self, rhs: &Gf2Matrix) -> Gf2Matrix {
        self.compose(rhs).expect("matrix product shape mismatch")
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix({}x{}", self.rows, self.cols)?;
        for row in &self.data {
            write!(f, " {row:?}")?;
        }
        write!(f, ")")
    }
}

fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

/// A linear subspace of `F_2^n`, held as the nonzero rows of a reduced
/// row-echelon basis.
///
/// Because the basis is reduced, the coordinates of a member vector are just
/// its bits at the pivot columns, and the non-pivot columns index a canonical
/// complement used for quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::spanned_by(ambient, (0..ambient).map(|i| BitVec::unit(ambient, i)))
    }

    pub fn spanned_by(ambient: usize, vectors: impl IntoIterator<Item = BitVec>) -> Self {
        let m = Gf2Matrix::from_rows(ambient, vectors.into_iter().collect());
        let ech = m.rref();
        let rank = ech.rank();
        let mut basis = ech.matrix.into_rows();
        basis.truncate(rank);
        Self {
            ambient,
            basis,
            pivots: ech.pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Gf2Matrix) -> Self {
        Self::spanned_by(m.rows(), m.transpose().into_rows())
    }

    /// Null space of `m`.
    pub fn kernel_of(m: &Gf2Matrix) -> Self {
        Self::spanned_by(m.cols(), m.kernel_basis().into_rows())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot coordinates: a canonical basis of a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        free_columns(self.ambient, &self.pivots)
    }

    /// `v` minus its component along the subspace, i.e. the unique
    /// representative of `v + W` vanishing at every pivot column.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, if `v` is a member.
    pub fn coords(&self, v: &BitVec) -> Option<BitVec> {
        if self.contains(v) {
            Some(v.select(&self.pivots))
        } else {
            None
        }
    }

    /// Image of `v` in the quotient `F_2^n / W`, in complement coordinates.
    pub fn quotient_coords(&self, v: &BitVec) -> BitVec {
        self.reduce(v).select(&self.complement_coords())
    }

    /// Sum of two subspaces.
    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "join: ambient mismatch");
        Subspace::spanned_by(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn as_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(self.ambient, self.basis.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rank as the size of the largest nonsingular square minor, with the
    /// determinant evaluated by cofactor expansion.
    fn minor_rank(m: &Gf2Matrix) -> usize {
        fn det(m: &[Vec<bool>]) -> bool {
            let n = m.len();
            if n == 0 {
                return true;
            }
            let mut acc = false;
            for j in 0..n {
                if m[0][j] {
                    let sub: Vec<Vec<bool>> = m[1..]
                        .iter()
                        .map(|row| {
                            row.iter()
                                .enumerate()
                                .filter(|&(c, _)| c != j)
                                .map(|(_, &b)| b)
                                .collect()
                        })
                        .collect();
                    acc ^= det(&sub);
                }
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..(1 << n))
                .filter(|s| s.count_ones() as usize == k)
                .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
                .collect()
        }
        for k in (1..=m.rows().min(m.cols())).rev() {
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let sub: Vec<Vec<bool>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m.get(r, c)).collect())
                        .collect();
                    if det(&sub) {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rref_identity_and_rank_one() {
        let id = Gf2Matrix::identity(2);
        let e = id.rref();
        assert_eq!(e.matrix, id);
        assert_eq!(e.pivots, vec![0, 1]);

        let m = Gf2Matrix::from_bits(&[&[1, 1], &[1, 1]]);
        let e = m.rref();
        assert_eq!(e.matrix, Gf2Matrix::from_bits(&[&[1, 1], &[0, 0]]));
        assert_eq!(e.pivots, vec![0]);
    }

    #[test]
    fn rank_matches_minor_oracle_on_6x6() {
        // Fixed pseudo-random 6x6 matrices from a linear congruential stream.
        let mut state: u64 = 0x2545_f491_4f6c_dd1d;
        for _ in 0..200 {
            let mut m = Gf2Matrix::zeros(6, 6);
            for r in 0..6 {
                for c in 0..6 {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    m.set(r, c, state >> 63 == 1);
                }
            }
            assert_eq!(m.rank(), minor_rank(&m), "{m:?}");
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Gf2Matrix::identity(4).kernel_basis().rows(), 0);
        assert_eq!(Gf2Matrix::zeros(3, 3).kernel_basis(), Gf2Matrix::identity(3));

        // Enumeration of all 8 vectors of F_2^3 finds exactly one nonzero
        // solution of [[1,1,0],[0,1,1]] x = 0, namely [1,1,1].
        let m = Gf2Matrix::from_bits(&[&[1, 1, 0], &[0, 1, 1]]);
        let nonzero: Vec<BitVec> = (1u8..8)
            .map(|s| BitVec::from_bits(&[s & 1, (s >> 1) & 1, (s >> 2) & 1]))
            .filter(|x| m.apply(x).unwrap().is_zero())
            .collect();
        assert_eq!(nonzero, vec![BitVec::from_bits(&[1, 1, 1])]);
        assert_eq!(m.kernel_basis(), Gf2Matrix::from_bits(&[&[1, 1, 1]]));
    }

    #[test]
    fn solve_examples() {
        let id = Gf2Matrix::identity(2);
        let b = BitVec::from_bits(&[1, 0]);
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));

        assert_eq!(Gf2Matrix::zeros(2, 2).solve(&b).unwrap(), None);

        let m = Gf2Matrix::from_bits(&[&[1, 1], &[0, 1]]);
        let x = m.solve(&BitVec::from_bits(&[0, 1])).unwrap().unwrap();
        assert_eq!(x, BitVec::from_bits(&[1, 1]));
        assert_eq!(m.apply(&x).unwrap(), BitVec::from_bits(&[0, 1]));

        assert!(matches!(
            m.solve(&BitVec::zeros(3)),
            Err(LinalgError::DimensionMismatch { op: "solve", .. })
        ));
    }

    #[test]
    fn solve_zeroes_free_coordinates() {
        let m = Gf2Matrix::from_bits(&[&[1, 1, 0, 1], &[0, 0, 1, 1]]);
        let x = m.solve(&BitVec::from_bits(&[1, 1])).unwrap().unwrap();
        assert_eq!(x, BitVec::from_bits(&[1, 0, 1, 0]));
    }

    #[test]
    fn compose_examples() {
        let m = Gf2Matrix::from_bits(&[&[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(Gf2Matrix::identity(2).compose(&m).unwrap(), m);
        assert_eq!(m.compose(&Gf2Matrix::identity(3)).unwrap(), m);
        let a = Gf2Matrix::from_bits(&[&[1, 1]]);
        let b = Gf2Matrix::from_bits(&[&[1], &[1]]);
        assert_eq!(&a * &b, Gf2Matrix::from_bits(&[&[0]]));
        assert!(m.compose(&m).is_err());
    }

    #[test]
    fn empty_matrices_are_rank_zero() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let m = Gf2Matrix::zeros(r, c);
            assert_eq!(m.rank(), 0);
            assert_eq!(m.kernel_basis().rows(), c);
            assert_eq!(m.transpose().rows(), c);
        }
        let e = Gf2Matrix::zeros(0, 2);
        assert_eq!((&Gf2Matrix::zeros(3, 0) * &e), Gf2Matrix::zeros(3, 2));
    }

    #[test]
    fn subspace_reduce_and_coords() {
        let w = Subspace::spanned_by(
            3,
            [BitVec::from_bits(&[1, 1, 0]), BitVec::from_bits(&[0, 1, 1])],
        );
        assert_eq!(w.dim(), 2);
        assert_eq!(w.complement_coords(), vec![2]);
        assert!(w.contains(&BitVec::from_bits(&[1, 0, 1])));
        assert!(!w.contains(&BitVec::from_bits(&[1, 0, 0])));
        assert_eq!(w.quotient_coords(&BitVec::from_bits(&[1, 0, 0])), BitVec::from_bits(&[1]));
        let c = w.coords(&BitVec::from_bits(&[1, 0, 1])).unwrap();
        let rebuilt = c
            .ones()
            .fold(BitVec::zeros(3), |mut acc, i| {
                acc.xor_assign(&w.basis()[i]);
                acc
            });
        assert_eq!(rebuilt, BitVec::from_bits(&[1, 0, 1]));
    }

    #[test]
    fn bitvec_iteration() {
        let v = BitVec::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(v.first_one_from(1), Some(63));
        assert_eq!(v.first_one_from(65), Some(129));
        assert_eq!(v.count_ones(), 4);
    }
}
