//! Finite-dimensional Lie algebras over the rationals, given by structure
//! constants.
//!
//! Only brackets `[e_i, e_j]` with `i < j` are stored; `[e_j, e_i]` is their
//! negative and `[e_i, e_i]` is zero, so antisymmetry cannot be violated by
//! the data.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{self, LinearMap, Subspace};
use crate::rational::Rational;

/// Largest accepted dimension.
pub const MAX_DIM: usize = 32;

/// `((i, j), [(k, c), ...])`: `[e_i, e_j] = Σ c e_k` with integer `c`.
pub type SparseBracket<'a> = ((usize, usize), &'a [(usize, i64)]);

/// An element of a Lie algebra, in standard coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Rational>,
}

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Self::new(linalg::unit(dim, i))
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coords.iter().map(|x| x * c).collect())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::new(self.coords.iter().map(|a| -a).collect())
    }
}

/// Outcome of [`LieAlgebra::verify_jacobi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobiReport {
    Pass,
    Fail(Vec<JacobiViolation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        matches!(self, JacobiReport::Pass)
    }

    /// Turns the first violation into an error.
    pub fn into_result(self) -> Result<()> {
        match self {
            JacobiReport::Pass => Ok(()),
            JacobiReport::Fail(mut v) => {
                let first = v.swap_remove(0);
                Err(Error::JacobiViolation {
                    triple: first.triple,
                    residual: first.residual,
                })
            }
        }
    }
}

/// A quotient `g / I` with its projection and the coordinate section used to
/// pick quotient basis representatives.
#[derive(Debug, Clone, PartialEq)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `dim g/I x dim g`; a Lie algebra homomorphism.
    pub projection: LinearMap,
    /// `dim g x dim g/I`; sends quotient basis vector `a` to the standard
    /// basis vector it represents.
    pub section: LinearMap,
    /// Standard indices kept as quotient basis (non-pivot columns of `I`).
    pub kept: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    constants: BTreeMap<(usize, usize), Vec<Rational>>,
    basis_names: Vec<String>,
}

impl LieAlgebra {
    /// Builds an algebra from `[e_i, e_j]` for `i < j`. Zero brackets may be
    /// omitted. Does not check the Jacobi identity; see [`Self::checked`].
    pub fn new(
        basis_names: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Rational>)>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
        }
        let mut constants = BTreeMap::new();
        for ((i, j), v) in brackets {
            for idx in [i, j] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i >= j {
                return Err(Error::UnorderedPair { i, j });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if constants.contains_key(&(i, j)) {
                return Err(Error::DuplicatePair { i, j });
            }
            if !linalg::is_zero_vec(&v) {
                constants.insert((i, j), v);
            }
        }
        Ok(Self {
            dim,
            constants,
            basis_names,
        })
    }

    /// [`Self::new`] followed by a Jacobi check.
    pub fn checked(
        basis_names: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Rational>)>,
    ) -> Result<Self> {
        let g = Self::new(basis_names, brackets)?;
        g.verify_jacobi().into_result()?;
        Ok(g)
    }

    /// Integer structure constants given as sparse `(k, c)` lists.
    pub fn from_sparse_i64(names: &[&str], brackets: &[SparseBracket<'_>]) -> Result<Self> {
        let dim = names.len();
        let entries = brackets.iter().map(|&(pair, coeffs)| {
            let mut v = vec![Rational::zero(); dim];
            for &(k, c) in coeffs {
                v[k] += crate::rational::int(c);
            }
            (pair, v)
        });
        Self::checked(names.iter().map(|s| s.to_string()).collect(), entries)
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        Self::new(default_names(dim), std::iter::empty())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Nonzero structure constants, `i < j`, in increasing order.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.constants
    }

    /// `[e_i, e_j]` for any pair of indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => vec![Rational::zero(); self.dim],
            Less => self
                .constants
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![Rational::zero(); self.dim]),
            Greater => self
                .constants
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x).collect())
                .unwrap_or_else(|| vec![Rational::zero(); self.dim]),
        }
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Rational::zero(),
            Less => self.constants.get(&(i, j)).map_or_else(Rational::zero, |v| v[k].clone()),
            Greater => self.constants.get(&(j, i)).map_or_else(Rational::zero, |v| -&v[k]),
        }
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear bracket on coordinate vectors.
    pub fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), v) in &self.constants {
            // x_i y_j - x_j y_i multiplies [e_i, e_j]
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(v) {
                if !a.is_zero() {
                    *o += &c * a;
                }
            }
        }
        Ok(out)
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.bracket_coords(x.coords(), y.coords()).map(Element::new)
    }

    pub fn verify_jacobi(&self) -> JacobiReport {
        self.verify_jacobi_with(Execution::default())
    }

    /// Checks `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` for all
    /// `i < j < k`. Violations are reported in lexicographic order.
    pub fn verify_jacobi_with(&self, exec: Execution) -> JacobiReport {
        let triples = triples(self.dim);
        let violations: Vec<JacobiViolation> = exec
            .map_slice(&triples, |&(i, j, k)| {
                let residual = self.jacobiator(i, j, k);
                (!linalg::is_zero_vec(&residual)).then_some(JacobiViolation {
                    triple: (i, j, k),
                    residual,
                })
            })
            .into_iter()
            .flatten()
            .collect();
        if violations.is_empty() {
            JacobiReport::Pass
        } else {
            JacobiReport::Fail(violations)
        }
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim;
        let ek = linalg::unit(n, k);
        let ei = linalg::unit(n, i);
        let ej = linalg::unit(n, j);
        let a = self.bracket_coords(&self.basis_bracket(i, j), &ek).unwrap();
        let b = self.bracket_coords(&self.basis_bracket(j, k), &ei).unwrap();
        let c = self.bracket_coords(&self.basis_bracket(k, i), &ej).unwrap();
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a + b + c).collect()
    }

    /// Matrix of `ad(x)`: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &Element) -> Result<LinearMap> {
        self.check_len(x.coords())?;
        let cols: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| self.bracket_coords(x.coords(), &linalg::unit(self.dim, j)).unwrap())
            .collect();
        LinearMap::from_columns(&cols, self.dim)
    }

    /// `ad(e_i)` for every basis vector.
    pub fn ad_basis(&self) -> Vec<LinearMap> {
        (0..self.dim).map(|i| self.ad(&Element::basis(self.dim, i)).unwrap()).collect()
    }

    /// Kernel of `x -> ad(x)`, from the `n*n x n` matrix whose rows are
    /// indexed by `(j, c)` and columns by `k`, with entry `C^c_{kj}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut m = LinearMap::zeros(n * n, n);
        for j in 0..n {
            for k in 0..n {
                let v = self.basis_bracket(k, j);
                for (c, x) in v.into_iter().enumerate() {
                    m[(j * n + c, k)] = x;
                }
            }
        }
        Subspace::span(n, &m.null_space()).unwrap()
    }

    /// `[g, g]`, the span of all basis brackets.
    pub fn derived_subalgebra(&self) -> Subspace {
        let vs: Vec<Vec<Rational>> = self.constants.values().cloned().collect();
        Subspace::span(self.dim, &vs).unwrap()
    }

    /// `[I, g]`-closure check. Returns the first `(v, i)` with `[v, e_i] ∉ I`.
    pub fn ideal_witness(&self, ideal: &Subspace) -> Result<Option<(Vec<Rational>, usize)>> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: ideal.ambient_dim(),
            });
        }
        for v in ideal.basis_vectors() {
            for i in 0..self.dim {
                let w = self.bracket_coords(&v, &linalg::unit(self.dim, i))?;
                if !ideal.contains(&w) {
                    return Ok(Some((v, i)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        matches!(self.ideal_witness(s), Ok(None))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        basis.iter().enumerate().all(|(a, x)| {
            basis[a + 1..]
                .iter()
                .all(|y| s.contains(&self.bracket_coords(x, y).unwrap()))
        })
    }

    /// `g / ideal`. Quotient basis vectors are the images of the standard
    /// vectors at the ideal's non-pivot columns.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if let Some((witness, basis_index)) = self.ideal_witness(ideal)? {
            return Err(Error::NotAnIdeal { witness, basis_index });
        }
        let n = self.dim;
        let kept = ideal.non_pivots();
        let m = kept.len();
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = ideal.reduce(v);
            kept.iter().map(|&k| r[k].clone()).collect()
        };
        let proj_cols: Vec<Vec<Rational>> = (0..n).map(|j| project(&linalg::unit(n, j))).collect();
        let projection = LinearMap::from_columns(&proj_cols, m)?;
        let sec_cols: Vec<Vec<Rational>> = kept.iter().map(|&k| linalg::unit(n, k)).collect();
        let section = LinearMap::from_columns(&sec_cols, n)?;
        let mut brackets = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                brackets.push(((a, b), project(&self.basis_bracket(kept[a], kept[b]))));
            }
        }
        let names = kept.iter().map(|&k| self.basis_names[k].clone()).collect();
        let algebra = Self::new(names, brackets)?;
        Ok(Quotient {
            algebra,
            projection,
            section,
            kept,
        })
    }

    /// The subalgebra `s` as an algebra in its own right, with basis the rows
    /// of `s`'s reduced basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Self> {
        let basis = s.basis_vectors();
        let d = basis.len();
        let mut brackets = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let w = self.bracket_coords(&basis[a], &basis[b])?;
                let c = s.coordinates(&w).ok_or(Error::NotASubalgebra)?;
                brackets.push(((a, b), c));
            }
        }
        let names = s
            .pivots()
            .iter()
            .map(|&p| format!("{}'", self.basis_names[p]))
            .collect();
        Self::new(names, brackets)
    }

    /// `self ⊕ other`; cross brackets vanish.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.dim, other.dim);
        let mut brackets = Vec::new();
        for (&(i, j), v) in &self.constants {
            let mut w = v.clone();
            w.resize(n + m, Rational::zero());
            brackets.push(((i, j), w));
        }
        for (&(i, j), v) in &other.constants {
            let mut w = vec![Rational::zero(); n];
            w.extend(v.iter().cloned());
            brackets.push(((n + i, n + j), w));
        }
        let mut names = self.basis_names.clone();
        for name in &other.basis_names {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        Self::new(names, brackets)
    }

    /// Structure constants in a new basis `f_j = Σ_i p[i][j] e_i`
    /// (columns of `p`): `[f_a, f_b] = p^{-1} [p e_a, p e_b]`.
    pub fn change_basis(&self, p: &LinearMap) -> Result<Self> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.rows().max(p.cols()),
            });
        }
        let inv = p.inverse()?;
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| p.column(j)).collect();
        let mut brackets = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let w = self.bracket_coords(&cols[a], &cols[b])?;
                brackets.push(((a, b), inv.apply(&w)?));
            }
        }
        let names = (0..self.dim).map(|i| format!("f{}", i + 1)).collect();
        Self::new(names, brackets)
    }
}

pub fn default_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{}", i + 1)).collect()
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}
