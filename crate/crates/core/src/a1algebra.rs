//! The algebra A(1) generated by `Sq1` and `Sq2`.
//!
//! A(1) is built as a quotient of the free associative algebra on two
//! generators of degrees 1 and 2 by the two-sided ideal generated by
//! `Sq1 Sq1` and `Sq2 Sq2 + Sq1 Sq2 Sq1`. The quotient is computed one degree
//! at a time: in degree `d` the ideal is spanned by the words `u r v` with `r`
//! a relation, and the surviving basis words are the non-pivot columns of its
//! echelon form. Columns are ordered with the lexicographically largest word
//! first, so every basis word is the smallest word of its class not already
//! eliminated.
//!
//! Words are written left to right as products: `Sq1 Sq2 x` means "apply
//! `Sq2`, then `Sq1`". `Sq3` always abbreviates the product `Sq1 Sq2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::OnceLock;

use thiserror::Error;

use crate::gf2linalg::{BitVec, Subspace};

/// Degree of the top class of A(1).
pub const TOP_DEGREE: i32 = 6;
/// Dimension of A(1).
pub const DIMENSION: usize = 8;

/// One of the two algebra generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Sq1,
    Sq2,
}

impl Gen {
    pub fn degree(self) -> i32 {
        match self {
            Gen::Sq1 => 1,
            Gen::Sq2 => 2,
        }
    }
}

pub type Word = Vec<Gen>;

fn word_degree(w: &[Gen]) -> i32 {
    w.iter().map(|g| g.degree()).sum()
}

/// All words of exact degree `d`, in lexicographic order with `Sq1 < Sq2`.
fn words_of_degree(d: i32) -> Vec<Word> {
    if d < 0 {
        return Vec::new();
    }
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for g in [Gen::Sq1, Gen::Sq2] {
        for mut tail in words_of_degree(d - g.degree()) {
            tail.insert(0, g);
            out.push(tail);
        }
    }
    out
}

/// Renders a word, writing each `Sq1 Sq2` as `Sq3`.
pub fn word_name(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        if w[i] == Gen::Sq1 && w.get(i + 1) == Some(&Gen::Sq2) {
            out.push_str("Sq3");
            i += 2;
        } else {
            out.push_str(match w[i] {
                Gen::Sq1 => "Sq1",
                Gen::Sq2 => "Sq2",
            });
            i += 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("A(1) construction inconsistent: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed element at byte {position}: {message}")]
    Malformed { position: usize, message: String },
    #[error("inhomogeneous sum: terms of degrees {0} and {1}")]
    Inhomogeneous(i32, i32),
}

/// An element of A(1) as a bit mask over the eight canonical basis elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct A1Element(u8);

impl A1Element {
    pub const ZERO: A1Element = A1Element(0);

    pub fn basis(index: usize) -> Self {
        assert!(index < DIMENSION, "basis index {index} out of range");
        A1Element(1 << index)
    }

    pub fn from_mask(mask: u8) -> Self {
        A1Element(mask)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    /// Indices of the basis elements present, ascending.
    pub fn terms(self) -> impl Iterator<Item = usize> {
        (0..DIMENSION).filter(move |&i| self.contains(i))
    }

    pub fn to_bitvec(self) -> BitVec {
        BitVec::from_indices(DIMENSION, self.terms())
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(self) -> Option<i32> {
        let alg = a1();
        let mut degrees = self.terms().map(|i| alg.basis_degree(i));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl Add for A1Element {
    type Output = A1Element;
    fn add(self, rhs: A1Element) -> A1Element {
        A1Element(self.0 ^ rhs.0)
    }
}

impl AddAssign for A1Element {
    fn add_assign(&mut self, rhs: A1Element) {
        self.0 ^= rhs.0;
    }
}

impl std::ops::Mul for A1Element {
    type Output = A1Element;
    fn mul(self, rhs: A1Element) -> A1Element {
        a1().multiply(self, rhs)
    }
}

impl fmt::Display for A1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let alg = a1();
        let names: Vec<String> = self.terms().map(|i| alg.basis_name(i)).collect();
        write!(f, "{}", names.join(" + "))
    }
}

impl fmt::Debug for A1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A1Element({self})")
    }
}

/// A canonical basis element: its reduced word and degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub word: Word,
    pub degree: i32,
}

/// Per-degree data of the quotient construction.
#[derive(Debug, Clone)]
struct DegreeQuotient {
    /// Words of this degree, lexicographically ascending.
    words: Vec<Word>,
    /// Ideal in coordinates where column `c` is word `words.len() - 1 - c`.
    ideal: Subspace,
    /// Canonical basis indices of the surviving words, parallel to the
    /// complement coordinates of `ideal`.
    basis_indices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct A1Algebra {
    basis: Vec<BasisElement>,
    table: [[A1Element; DIMENSION]; DIMENSION],
    quotients: Vec<DegreeQuotient>,
}

/// The shared, lazily built copy of A(1).
pub fn a1() -> &'static A1Algebra {
    static ALGEBRA: OnceLock<A1Algebra> = OnceLock::new();
    ALGEBRA.get_or_init(|| build_a1().expect("A(1) construction failed"))
}

/// Constructs A(1) by degreewise linear algebra over the free algebra.
pub fn build_a1() -> Result<A1Algebra, AlgebraError> {
    let relations: [Vec<Word>; 2] = [
        vec![vec![Gen::Sq1, Gen::Sq1]],
        vec![
            vec![Gen::Sq2, Gen::Sq2],
            vec![Gen::Sq1, Gen::Sq2, Gen::Sq1],
        ],
    ];

    // Degrees 7 and 8 must vanish: every longer word has a prefix of degree
    // 7 or 8, so the quotient is then zero in all higher degrees.
    let check_through = TOP_DEGREE + 2;
    let mut basis: Vec<BasisElement> = Vec::new();
    let mut quotients = Vec::new();

    for d in 0..=check_through {
        let words = words_of_degree(d);
        let n = words.len();
        let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let column = |w: &Word| n - 1 - index[w];

        let mut spanning = Vec::new();
        for rel in &relations {
            let rel_deg = word_degree(&rel[0]);
            for left_deg in 0..=(d - rel_deg) {
                for u in words_of_degree(left_deg) {
                    for v in words_of_degree(d - rel_deg - left_deg) {
                        let mut vec = BitVec::zeros(n);
                        for term in rel {
                            let w: Word = u.iter().chain(term).chain(&v).copied().collect();
                            vec.flip(column(&w));
                        }
                        spanning.push(vec);
                    }
                }
            }
        }
        let ideal = Subspace::spanned_by(n, spanning);
        let mut survivors: Vec<usize> = ideal
            .complement_coords()
            .into_iter()
            .map(|c| n - 1 - c)
            .collect();
        survivors.sort_unstable();

        if d > TOP_DEGREE && !survivors.is_empty() {
            return Err(AlgebraError::Inconsistent(format!(
                "degree {d} has {} surviving words",
                survivors.len()
            )));
        }

        // Complement coordinates are ascending in column order, i.e.
        // descending in word order; map each one to its canonical index.
        let first = basis.len();
        let basis_indices: Vec<usize> = ideal
            .complement_coords()
            .into_iter()
            .map(|c| first + survivors.iter().position(|&w| w == n - 1 - c).unwrap())
            .collect();
        for &w in &survivors {
            basis.push(BasisElement {
                word: words[w].clone(),
                degree: d,
            });
        }
        quotients.push(DegreeQuotient {
            words,
            ideal,
            basis_indices,
        });
    }

    if basis.len() != DIMENSION {
        return Err(AlgebraError::Inconsistent(format!(
            "total dimension {} instead of {DIMENSION}",
            basis.len()
        )));
    }

    let mut alg = A1Algebra {
        basis,
        table: [[A1Element::ZERO; DIMENSION]; DIMENSION],
        quotients,
    };
    for i in 0..DIMENSION {
        for j in 0..DIMENSION {
            let w: Word = alg.basis[i].word.iter().chain(&alg.basis[j].word).copied().collect();
            alg.table[i][j] = alg.reduce_word(&w);
        }
    }
    Ok(alg)
}

impl A1Algebra {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn basis_degree(&self, index: usize) -> i32 {
        self.basis[index].degree
    }

    pub fn basis_name(&self, index: usize) -> String {
        word_name(&self.basis[index].word)
    }

    /// Canonical basis indices in degree `d`, ascending.
    pub fn basis_in_degree(&self, d: i32) -> impl Iterator<Item = usize> + '_ {
        (0..self.basis.len()).filter(move |&i| self.basis[i].degree == d)
    }

    /// Dimension of each degree `0..=6`.
    pub fn dim_by_degree(&self) -> BTreeMap<i32, usize> {
        let mut dims = BTreeMap::new();
        for b in &self.basis {
            *dims.entry(b.degree).or_insert(0) += 1;
        }
        dims
    }

    pub fn unit(&self) -> A1Element {
        A1Element::basis(0)
    }

    pub fn generator(&self, g: Gen) -> A1Element {
        self.reduce_word(&[g])
    }

    /// The normal form of a word in the generators.
    pub fn reduce_word(&self, w: &[Gen]) -> A1Element {
        let d = word_degree(w);
        let Some(q) = self.quotients.get(d as usize) else {
            return A1Element::ZERO;
        };
        let n = q.words.len();
        let Some(pos) = q.words.iter().position(|x| x.as_slice() == w) else {
            return A1Element::ZERO;
        };
        let reduced = q.ideal.quotient_coords(&BitVec::unit(n, n - 1 - pos));
        reduced
            .ones()
            .fold(A1Element::ZERO, |acc, k| acc + A1Element::basis(q.basis_indices[k]))
    }

    /// Product of two basis elements.
    pub fn basis_product(&self, i: usize, j: usize) -> A1Element {
        self.table[i][j]
    }

    pub fn multiply(&self, a: A1Element, b: A1Element) -> A1Element {
        let mut acc = A1Element::ZERO;
        for i in a.terms() {
            for j in b.terms() {
                acc += self.table[i][j];
            }
        }
        acc
    }

    /// The Milnor primitives `Q0 = Sq1` and `Q1 = Sq3 + Sq2 Sq1`.
    pub fn q_operators(&self) -> (A1Element, A1Element) {
        let q0 = self.generator(Gen::Sq1);
        let q1 = self.reduce_word(&[Gen::Sq1, Gen::Sq2]) + self.reduce_word(&[Gen::Sq2, Gen::Sq1]);
        (q0, q1)
    }

    /// Parses `"0"` or a `+`-separated sum of products of `Sq1`, `Sq2`, `Sq3`.
    pub fn parse_element(&self, text: &str) -> Result<A1Element, ParseError> {
        parse_terms(text).map(|terms| {
            terms
                .iter()
                .fold(A1Element::ZERO, |acc, w| acc + self.reduce_word(w))
        })
    }
}

/// Splits an element expression into words, checking the grammar and that
/// all terms share one formal degree. `"0"` gives no terms.
pub fn parse_terms(text: &str) -> Result<Vec<Word>, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let malformed = |position: usize, message: &str| ParseError::Malformed {
        position,
        message: message.to_string(),
    };

    skip_ws(&mut pos);
    if bytes.get(pos) == Some(&b'0') {
        pos += 1;
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(malformed(pos, "unexpected input after 0"));
        }
        return Ok(Vec::new());
    }

    let mut terms: Vec<Word> = Vec::new();
    loop {
        let mut word = Word::new();
        loop {
            skip_ws(&mut pos);
            let rest = &text[pos..];
            let token = ["Sq1", "Sq2", "Sq3"].into_iter().find(|t| rest.starts_with(t));
            match token {
                Some("Sq1") => word.push(Gen::Sq1),
                Some("Sq2") => word.push(Gen::Sq2),
                Some(_) => word.extend([Gen::Sq1, Gen::Sq2]),
                None => break,
            }
            pos += 3;
        }
        if word.is_empty() {
            return Err(malformed(pos, "expected Sq1, Sq2 or Sq3"));
        }
        if let Some(first) = terms.first() {
            let (a, b) = (word_degree(first), word_degree(&word));
            if a != b {
                return Err(ParseError::Inhomogeneous(a, b));
            }
        }
        terms.push(word);
        skip_ws(&mut pos);
        match bytes.get(pos) {
            None => break,
            Some(b'+') => pos += 1,
            Some(_) => return Err(malformed(pos, "expected '+' or end of input")),
        }
    }
    Ok(terms)
}

/// Parses an element using the shared algebra.
pub fn parse_element(text: &str) -> Result<A1Element, ParseError> {
    a1().parse_element(text)
}
