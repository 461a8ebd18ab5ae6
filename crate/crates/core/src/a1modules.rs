//! Finite graded modules over A(1).
//!
//! A module is stored as a dimension per degree together with the matrices
//! of `Sq1` and `Sq2`. Because A(1) is presented by `Sq1 Sq1 = 0` and
//! `Sq2 Sq2 = Sq1 Sq2 Sq1`, checking those two identities degreewise is
//! enough for the matrices to define an A(1)-action.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::a1algebra::{a1, A1Element, Gen};
use crate::gf2linalg::{BitVec, Gf2Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("{op} matrix at degree {degree} has shape {found:?}, expected {expected:?}")]
    Shape {
        op: &'static str,
        degree: i32,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("action relations fail: {0}")]
    Action(ActionReport),
}

/// Common surface of [`A1Module`] and [`FreeModule`]: enough to let the
/// algebra act on homogeneous vectors.
pub trait GradedA1Module {
    fn dim(&self, degree: i32) -> usize;

    /// Acts by the canonical basis element `b` of A(1) on a vector of
    /// degree `degree`.
    fn act_basis(&self, b: usize, degree: i32, v: &BitVec) -> BitVec;

    fn act(&self, x: A1Element, degree: i32, v: &BitVec) -> BitVec {
        let d = x.degree().unwrap_or(0);
        let mut out = BitVec::zeros(self.dim(degree + d));
        for b in x.terms() {
            out.xor_assign(&self.act_basis(b, degree, v));
        }
        out
    }
}

/// A finite graded A(1)-module.
#[derive(Clone)]
pub struct A1Module {
    name: String,
    offset: i32,
    dims: Vec<usize>,
    sq1: Vec<Gf2Matrix>,
    sq2: Vec<Gf2Matrix>,
}

/// A relation failing at some degree.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ActionFailure {
    pub degree: i32,
    pub relation: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct ActionReport {
    pub failures: Vec<ActionFailure>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ActionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self
            .failures
            .iter()
            .map(|x| format!("{} != 0 at degree {}", x.relation, x.degree))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl A1Module {
    pub fn zero() -> Self {
        Self {
            name: "0".to_string(),
            offset: 0,
            dims: Vec::new(),
            sq1: Vec::new(),
            sq2: Vec::new(),
        }
    }

    /// Assembles a module from per-degree data. Missing matrices are zero.
    /// Shapes are checked; the action relations are not (see
    /// [`A1Module::verify_action`]).
    pub fn from_parts(
        name: impl Into<String>,
        dims: &BTreeMap<i32, usize>,
        sq1: &BTreeMap<i32, Gf2Matrix>,
        sq2: &BTreeMap<i32, Gf2Matrix>,
    ) -> Result<Self, ModuleError> {
        let support: Vec<i32> = dims.iter().filter(|(_, &n)| n > 0).map(|(&d, _)| d).collect();
        let (Some(&lo), Some(&hi)) = (support.first(), support.last()) else {
            let mut z = Self::zero();
            z.name = name.into();
            return Ok(z);
        };
        let dim = |d: i32| dims.get(&d).copied().unwrap_or(0);
        let mut module = Self {
            name: name.into(),
            offset: lo,
            dims: (lo..=hi).map(dim).collect(),
            sq1: Vec::new(),
            sq2: Vec::new(),
        };
        for (op, table, step) in [("sq1", sq1, 1), ("sq2", sq2, 2)] {
            for (&d, m) in table {
                let expected = (dim(d + step), dim(d));
                if (m.rows(), m.cols()) != expected {
                    return Err(ModuleError::Shape {
                        op,
                        degree: d,
                        expected,
                        found: (m.rows(), m.cols()),
                    });
                }
            }
            let mats: Vec<Gf2Matrix> = (lo..=hi)
                .map(|d| {
                    table
                        .get(&d)
                        .cloned()
                        .unwrap_or_else(|| Gf2Matrix::zeros(dim(d + step), dim(d)))
                })
                .collect();
            if step == 1 {
                module.sq1 = mats;
            } else {
                module.sq2 = mats;
            }
        }
        Ok(module)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn bottom_degree(&self) -> Option<i32> {
        (!self.dims.is_empty()).then_some(self.offset)
    }

    pub fn top_degree(&self) -> Option<i32> {
        (!self.dims.is_empty()).then(|| self.offset + self.dims.len() as i32 - 1)
    }

    /// Degrees from bottom to top (including interior zero degrees).
    pub fn degrees(&self) -> std::ops::Range<i32> {
        self.offset..self.offset + self.dims.len() as i32
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Nonzero dimensions by degree.
    pub fn dims(&self) -> BTreeMap<i32, usize> {
        self.degrees()
            .zip(&self.dims)
            .filter(|(_, &n)| n > 0)
            .map(|(d, &n)| (d, n))
            .collect()
    }

    fn slot(&self, d: i32) -> Option<usize> {
        let i = d - self.offset;
        (i >= 0 && (i as usize) < self.dims.len()).then_some(i as usize)
    }

    /// Matrix of a generator from degree `d` to `d + |g|`.
    pub fn sq(&self, g: Gen, d: i32) -> Cow<'_, Gf2Matrix> {
        let table = match g {
            Gen::Sq1 => &self.sq1,
            Gen::Sq2 => &self.sq2,
        };
        match self.slot(d) {
            Some(i) => Cow::Borrowed(&table[i]),
            None => Cow::Owned(Gf2Matrix::zeros(
                GradedA1Module::dim(self, d + g.degree()),
                GradedA1Module::dim(self, d),
            )),
        }
    }

    pub fn sq1(&self, d: i32) -> Cow<'_, Gf2Matrix> {
        self.sq(Gen::Sq1, d)
    }

    pub fn sq2(&self, d: i32) -> Cow<'_, Gf2Matrix> {
        self.sq(Gen::Sq2, d)
    }

    /// Matrix of a word of generators (rightmost applied first) at degree `d`.
    pub fn word_matrix(&self, word: &[Gen], d: i32) -> Gf2Matrix {
        let mut m = Gf2Matrix::identity(GradedA1Module::dim(self, d));
        let mut deg = d;
        for &g in word.iter().rev() {
            m = &*self.sq(g, deg) * &m;
            deg += g.degree();
        }
        m
    }

    /// Matrix of a homogeneous algebra element at degree `d`.
    pub fn element_matrix(&self, x: A1Element, d: i32) -> Gf2Matrix {
        let deg = x.degree().unwrap_or(0);
        let alg = a1();
        let mut m = Gf2Matrix::zeros(GradedA1Module::dim(self, d + deg), GradedA1Module::dim(self, d));
        for b in x.terms() {
            m = m.add(&self.word_matrix(&alg.basis()[b].word, d)).unwrap();
        }
        m
    }

    /// Checks `Sq1 Sq1 = 0` and `Sq2 Sq2 = Sq1 Sq2 Sq1` in every degree.
    pub fn verify_action(&self) -> ActionReport {
        let mut failures = Vec::new();
        for d in self.degrees() {
            if !(&*self.sq1(d + 1) * &self.sq1(d)).is_zero() {
                failures.push(ActionFailure {
                    degree: d,
                    relation: "Sq1Sq1",
                });
            }
            let lhs = &*self.sq2(d + 2) * &self.sq2(d);
            let rhs = self.word_matrix(&[Gen::Sq1, Gen::Sq2, Gen::Sq1], d);
            if lhs != rhs {
                failures.push(ActionFailure {
                    degree: d,
                    relation: "Sq2Sq2+Sq1Sq2Sq1",
                });
            }
        }
        ActionReport { failures }
    }

    /// Shifts every degree by `n`.
    pub fn suspend(&self, n: i32) -> Self {
        let mut m = self.clone();
        if !m.is_zero() {
            m.offset += n;
        }
        m.name = suspended_name(&self.name, n);
        m
    }

    pub fn direct_sum(&self, other: &A1Module) -> Self {
        let name = format!("{} + {}", self.name, other.name);
        if self.is_zero() {
            return other.clone().with_name(name);
        }
        if other.is_zero() {
            return self.clone().with_name(name);
        }
        let lo = self.offset.min(other.offset);
        let hi = self.top_degree().unwrap().max(other.top_degree().unwrap());
        let mut dims = BTreeMap::new();
        let mut sq1 = BTreeMap::new();
        let mut sq2 = BTreeMap::new();
        for d in lo..=hi {
            dims.insert(d, GradedA1Module::dim(self, d) + GradedA1Module::dim(other, d));
            sq1.insert(d, block_diagonal(&self.sq1(d), &other.sq1(d)));
            sq2.insert(d, block_diagonal(&self.sq2(d), &other.sq2(d)));
        }
        Self::from_parts(name, &dims, &sq1, &sq2).expect("block sums have consistent shapes")
    }

    /// The submodule spanned degreewise by `subspaces`, in their echelon
    /// bases.
    ///
    /// # Panics
    /// Panics if the subspaces are not closed under the action.
    pub fn submodule(&self, name: impl Into<String>, subspaces: &BTreeMap<i32, Subspace>) -> Self {
        let zero = |d: i32| Subspace::zero(GradedA1Module::dim(self, d));
        let get = |d: i32| subspaces.get(&d).cloned().unwrap_or_else(|| zero(d));
        let mut dims = BTreeMap::new();
        let mut sq1 = BTreeMap::new();
        let mut sq2 = BTreeMap::new();
        for d in self.degrees() {
            let w = get(d);
            dims.insert(d, w.dim());
            for (g, table) in [(Gen::Sq1, &mut sq1), (Gen::Sq2, &mut sq2)] {
                let target = get(d + g.degree());
                let cols: Vec<BitVec> = w
                    .basis()
                    .iter()
                    .map(|v| {
                        let image = self.sq(g, d).apply(v).unwrap();
                        target.coords(&image).expect("subspace is not a submodule")
                    })
                    .collect();
                table.insert(d, Gf2Matrix::from_columns(target.dim(), &cols));
            }
        }
        Self::from_parts(name, &dims, &sq1, &sq2).expect("submodule shapes")
    }

    /// The quotient by a submodule given degreewise; the basis of each
    /// quotient degree is the complement (non-pivot) coordinates.
    pub fn quotient(&self, name: impl Into<String>, subspaces: &BTreeMap<i32, Subspace>) -> Self {
        let zero = |d: i32| Subspace::zero(GradedA1Module::dim(self, d));
        let get = |d: i32| subspaces.get(&d).cloned().unwrap_or_else(|| zero(d));
        let mut dims = BTreeMap::new();
        let mut sq1 = BTreeMap::new();
        let mut sq2 = BTreeMap::new();
        for d in self.degrees() {
            let w = get(d);
            let n = GradedA1Module::dim(self, d);
            let reps = w.complement_coords();
            dims.insert(d, reps.len());
            for (g, table) in [(Gen::Sq1, &mut sq1), (Gen::Sq2, &mut sq2)] {
                let target = get(d + g.degree());
                let cols: Vec<BitVec> = reps
                    .iter()
                    .map(|&c| {
                        let image = self.sq(g, d).apply(&BitVec::unit(n, c)).unwrap();
                        target.quotient_coords(&image)
                    })
                    .collect();
                let rows = target.ambient() - target.dim();
                table.insert(d, Gf2Matrix::from_columns(rows, &cols));
            }
        }
        Self::from_parts(name, &dims, &sq1, &sq2).expect("quotient shapes")
    }

    /// Per-degree subspaces of the A(1)-submodule generated by the given
    /// homogeneous vectors.
    pub fn generated_subspaces(&self, generators: &[(i32, BitVec)]) -> BTreeMap<i32, Subspace> {
        let alg = a1();
        let mut spanning: BTreeMap<i32, Vec<BitVec>> = BTreeMap::new();
        for (d, v) in generators {
            for b in 0..alg.dimension() {
                let e = d + alg.basis_degree(b);
                if GradedA1Module::dim(self, e) > 0 {
                    spanning.entry(e).or_default().push(self.act_basis(b, *d, v));
                }
            }
        }
        spanning
            .into_iter()
            .map(|(d, vs)| (d, Subspace::spanned_by(GradedA1Module::dim(self, d), vs)))
            .collect()
    }
}

impl GradedA1Module for A1Module {
    fn dim(&self, d: i32) -> usize {
        self.slot(d).map_or(0, |i| self.dims[i])
    }

    fn act_basis(&self, b: usize, d: i32, v: &BitVec) -> BitVec {
        self.word_matrix(&a1().basis()[b].word, d).apply(v).unwrap()
    }
}

/// Structural equality; the display name is ignored.
impl PartialEq for A1Module {
    fn eq(&self, other: &Self) -> bool {
        self.offset == other.offset
            && self.dims == other.dims
            && self.sq1 == other.sq1
            && self.sq2 == other.sq2
    }
}

impl Eq for A1Module {}

impl fmt::Debug for A1Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("A1Module")
            .field("name", &self.name)
            .field("dims", &self.dims())
            .finish_non_exhaustive()
    }
}

fn block_diagonal(a: &Gf2Matrix, b: &Gf2Matrix) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for r in 0..a.rows() {
        for c in a.row(r).ones() {
            m.set(r, c, true);
        }
    }
    for r in 0..b.rows() {
        for c in b.row(r).ones() {
            m.set(a.rows() + r, a.cols() + c, true);
        }
    }
    m
}

pub(crate) fn suspended_name(name: &str, n: i32) -> String {
    if n == 0 {
        return name.to_string();
    }
    if let Some(rest) = name.strip_prefix("S^") {
        if let Some((k, base)) = rest.split_once(' ') {
            if let Ok(k) = k.parse::<i32>() {
                return if k + n == 0 {
                    base.to_string()
                } else {
                    format!("S^{} {base}", k + n)
                };
            }
        }
    }
    format!("S^{n} {name}")
}

/// A free A(1)-module on generators of the given degrees.
///
/// The basis in degree `t` is the list of pairs `(generator, algebra basis
/// element)` with `deg(generator) + deg(element) = t`, ordered by generator
/// and then by algebra basis index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeModule {
    gen_degrees: Vec<i32>,
}

impl FreeModule {
    pub fn new(gen_degrees: Vec<i32>) -> Self {
        Self { gen_degrees }
    }

    pub fn gen_degrees(&self) -> &[i32] {
        &self.gen_degrees
    }

    pub fn num_gens(&self) -> usize {
        self.gen_degrees.len()
    }

    pub fn add_generator(&mut self, degree: i32) -> usize {
        self.gen_degrees.push(degree);
        self.gen_degrees.len() - 1
    }

    pub fn basis(&self, t: i32) -> Vec<(usize, usize)> {
        let alg = a1();
        self.gen_degrees
            .iter()
            .enumerate()
            .flat_map(|(g, &gd)| alg.basis_in_degree(t - gd).map(move |b| (g, b)))
            .collect()
    }

    /// Position of `(generator, algebra basis element)` in the degree basis.
    pub fn index(&self, t: i32, generator: usize, element: usize) -> Option<usize> {
        let alg = a1();
        if self.gen_degrees.get(generator)? + alg.basis_degree(element) != t {
            return None;
        }
        Some(self.offsets(t)[generator] + position_in_degree(element))
    }

    /// Start of each generator's block in the degree-`t` basis.
    fn offsets(&self, t: i32) -> Vec<usize> {
        let mut acc = 0;
        self.gen_degrees
            .iter()
            .map(|&gd| {
                let start = acc;
                acc += degree_dim(t - gd);
                start
            })
            .collect()
    }

    /// The vector `1 * generator`.
    pub fn generator_vector(&self, generator: usize) -> BitVec {
        let t = self.gen_degrees[generator];
        let i = self.index(t, generator, 0).expect("unit sits in the generator's degree");
        BitVec::unit(self.dim(t), i)
    }

    pub fn to_module(&self, name: impl Into<String>) -> A1Module {
        let (Some(&lo), Some(&hi)) = (self.gen_degrees.iter().min(), self.gen_degrees.iter().max()) else {
            return A1Module::zero().with_name(name);
        };
        let hi = hi + crate::a1algebra::TOP_DEGREE;
        let alg = a1();
        let mut dims = BTreeMap::new();
        let mut sq1 = BTreeMap::new();
        let mut sq2 = BTreeMap::new();
        for t in lo..=hi {
            dims.insert(t, self.dim(t));
            for (g, table) in [(Gen::Sq1, &mut sq1), (Gen::Sq2, &mut sq2)] {
                let x = alg.generator(g);
                let cols: Vec<BitVec> = (0..self.dim(t))
                    .map(|i| self.act(x, t, &BitVec::unit(self.dim(t), i)))
                    .collect();
                table.insert(t, Gf2Matrix::from_columns(self.dim(t + g.degree()), &cols));
            }
        }
        A1Module::from_parts(name, &dims, &sq1, &sq2).expect("free module shapes")
    }
}

impl GradedA1Module for FreeModule {
    fn dim(&self, t: i32) -> usize {
        self.gen_degrees.iter().map(|&gd| degree_dim(t - gd)).sum()
    }

    fn act_basis(&self, b: usize, t: i32, v: &BitVec) -> BitVec {
        let alg = a1();
        let target_t = t + alg.basis_degree(b);
        let source = self.basis(t);
        let offsets = self.offsets(target_t);
        let mut out = BitVec::zeros(self.dim(target_t));
        for i in v.ones() {
            let (g, e) = source[i];
            for k in alg.basis_product(b, e).terms() {
                out.flip(offsets[g] + position_in_degree(k));
            }
        }
        out
    }
}

/// Dimension of A(1) in degree `d`.
fn degree_dim(d: i32) -> usize {
    a1().basis_in_degree(d).count()
}

/// Position of a canonical basis element among those of its degree.
fn position_in_degree(element: usize) -> usize {
    let alg = a1();
    let d = alg.basis_degree(element);
    alg.basis_in_degree(d).position(|k| k == element).unwrap()
}

/// Direct sum of suspended copies of A(1).
pub fn free_module(gen_degrees: &[i32]) -> A1Module {
    let name = match gen_degrees {
        [] => "0".to_string(),
        [d] => suspended_name("A1", *d),
        _ => format!("free{gen_degrees:?}"),
    };
    FreeModule::new(gen_degrees.to_vec()).to_module(name)
}

/// A cyclic module `S^shift A(1)/(relators)` together with, for each basis
/// vector, the algebra basis element that represents it on the generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicModule {
    module: A1Module,
    relators: Vec<A1Element>,
    shift: i32,
    representatives: BTreeMap<i32, Vec<usize>>,
}

impl CyclicModule {
    /// `A(1)` modulo the left ideal generated by `relators`.
    pub fn new(relators: &[A1Element], name: impl Into<String>) -> Self {
        let free = FreeModule::new(vec![0]);
        let module = free.to_module("A1");
        let generators: Vec<(i32, BitVec)> = relators
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| {
                let d = r.degree().expect("relators must be homogeneous");
                (d, free.act(*r, 0, &free.generator_vector(0)))
            })
            .collect();
        let ideal = module.generated_subspaces(&generators);
        let alg = a1();
        let representatives = module
            .degrees()
            .map(|d| {
                let in_degree: Vec<usize> = alg.basis_in_degree(d).collect();
                let reps = match ideal.get(&d) {
                    Some(w) => w.complement_coords().into_iter().map(|c| in_degree[c]).collect(),
                    None => in_degree,
                };
                (d, reps)
            })
            .filter(|(_, reps)| !reps.is_empty())
            .collect();
        Self {
            module: module.quotient(name, &ideal),
            relators: relators.to_vec(),
            shift: 0,
            representatives,
        }
    }

    pub fn module(&self) -> &A1Module {
        &self.module
    }

    pub fn into_module(self) -> A1Module {
        self.module
    }

    pub fn relators(&self) -> &[A1Element] {
        &self.relators
    }

    pub fn generator_degree(&self) -> i32 {
        self.shift
    }

    /// Algebra basis elements representing the basis of degree `d`.
    pub fn representatives(&self, d: i32) -> &[usize] {
        self.representatives
            .get(&(d - self.shift))
            .map_or(&[], Vec::as_slice)
    }

    pub fn suspend(&self, n: i32) -> Self {
        Self {
            module: self.module.suspend(n),
            relators: self.relators.clone(),
            shift: self.shift + n,
            representatives: self.representatives.clone(),
        }
    }

    /// The vector `x * generator`.
    pub fn element(&self, x: A1Element) -> (i32, BitVec) {
        let d = self.shift + x.degree().unwrap_or(0);
        let g = BitVec::unit(self.module.dim(self.shift), 0);
        (d, self.module.act(x, self.shift, &g))
    }
}

/// `A(1)` modulo the left ideal generated by `relators`.
pub fn cyclic_quotient(relators: &[A1Element], name: impl Into<String>) -> A1Module {
    CyclicModule::new(relators, name).into_module()
}

/// The left ideal of A(1) generated by `generators`, as a submodule of A(1).
pub fn left_ideal(generators: &[A1Element], name: impl Into<String>) -> A1Module {
    let free = FreeModule::new(vec![0]);
    let module = free.to_module("A1");
    let vectors: Vec<(i32, BitVec)> = generators
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| (x.degree().expect("homogeneous"), free.act(*x, 0, &free.generator_vector(0))))
        .collect();
    module.submodule(name, &module.generated_subspaces(&vectors))
}

/// `F_2` concentrated in degree 0.
pub fn f2() -> A1Module {
    cyclic_quotient(&[a1().generator(Gen::Sq1), a1().generator(Gen::Sq2)], "F2")
}
