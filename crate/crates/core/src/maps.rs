//! Derivations, automorphisms, exact exponentials of nilpotent adjoints, and
//! the block structure of automorphisms of a centrally split algebra
//! `g = Zg ⊕ g0`.
//!
//! In coordinates adapted to `Zg ⊕ g0` an automorphism reads
//!
//! ```text
//!     | phi11  phi12 |      phi11 : Zg -> Zg     phi12 : g0 -> Zg
//!     | phi21  phi22 |      phi21 : Zg -> g0     phi22 : g0 -> g0
//! ```
//!
//! and for every automorphism `phi21 = 0`, `phi22 ∈ Aut(g0)` and `phi12`
//! vanishes on `[g0, g0]`. [`block_decompose`] reads the blocks and reports
//! each of the three conditions separately.

use num_traits::Zero;

use crate::algebra::{Element, LieAlgebra};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{self, LinearMap, Subspace};
use crate::rational::{self, Rational};

/// Basis of `Der(g)` as `n x n` matrices.
pub fn derivation_space(g: &LieAlgebra) -> Vec<LinearMap> {
    derivation_space_with(g, Execution::default())
}

/// Solves `D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j]` for all `i < j` as a
/// single linear system in the `n²` entries of `D` (unknown `p*n + q` is
/// `D_{pq}`, the `e_p`-coefficient of `D e_q`).
pub fn derivation_space_with(g: &LieAlgebra, exec: Execution) -> Vec<LinearMap> {
    let n = g.dim();
    if n == 0 {
        return Vec::new();
    }
    let system = derivation_constraints(g, exec);
    system
        .null_space()
        .into_iter()
        .map(|v| LinearMap::from_rows(v.chunks(n).map(<[_]>::to_vec).collect(), n).unwrap())
        .collect()
}

/// The constraint matrix; rows indexed by `(pair, c)`, columns by unknowns.
pub fn derivation_constraints(g: &LieAlgebra, exec: Execution) -> LinearMap {
    let n = g.dim();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    let blocks: Vec<Vec<Vec<Rational>>> = exec.map_slice(&pairs, |&(i, j)| {
        let bij = g.basis_bracket(i, j);
        (0..n)
            .map(|c| {
                let mut row = vec![Rational::zero(); n * n];
                for (k, coeff) in bij.iter().enumerate() {
                    if !coeff.is_zero() {
                        row[c * n + k] += coeff;
                    }
                }
                for p in 0..n {
                    let a = g.constant(p, j, c);
                    if !a.is_zero() {
                        row[p * n + i] -= a;
                    }
                    let b = g.constant(i, p, c);
                    if !b.is_zero() {
                        row[p * n + j] -= b;
                    }
                }
                row
            })
            .collect()
    });
    let rows: Vec<Vec<Rational>> = blocks.into_iter().flatten().collect();
    if rows.is_empty() {
        return LinearMap::zeros(0, n * n);
    }
    LinearMap::from_rows(rows, n * n).unwrap()
}

/// `span{ad(e_i)}` inside the `n²`-dimensional space of endomorphisms,
/// flattened row-major.
pub fn inner_derivations(g: &LieAlgebra) -> Subspace {
    let vs: Vec<Vec<Rational>> = g.ad_basis().iter().map(|m| m.entries().to_vec()).collect();
    Subspace::span(g.dim() * g.dim(), &vs).unwrap()
}

/// Whether `d` satisfies the derivation identity on the pair `(x, y)`.
pub fn is_derivation_on(g: &LieAlgebra, d: &LinearMap, x: &[Rational], y: &[Rational]) -> Result<bool> {
    let lhs = d.apply(&g.bracket_coords(x, y)?)?;
    let a = g.bracket_coords(&d.apply(x)?, y)?;
    let b = g.bracket_coords(x, &d.apply(y)?)?;
    Ok(lhs.iter().zip(a.iter().zip(&b)).all(|(l, (a, b))| *l == a + b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismCheck {
    Automorphism,
    NotInvertible,
    /// First pair `i < j` with `phi[e_i, e_j] != [phi e_i, phi e_j]`.
    BracketViolation { i: usize, j: usize },
}

impl AutomorphismCheck {
    pub fn holds(&self) -> bool {
        matches!(self, AutomorphismCheck::Automorphism)
    }
}

pub fn is_automorphism(g: &LieAlgebra, phi: &LinearMap) -> Result<AutomorphismCheck> {
    let n = g.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if phi.rows() != n { phi.rows() } else { phi.cols() },
        });
    }
    if !phi.is_invertible() {
        return Ok(AutomorphismCheck::NotInvertible);
    }
    let images: Vec<Vec<Rational>> = (0..n).map(|j| phi.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi.apply(&g.basis_bracket(i, j))?;
            let rhs = g.bracket_coords(&images[i], &images[j])?;
            if lhs != rhs {
                return Ok(AutomorphismCheck::BracketViolation { i, j });
            }
        }
    }
    Ok(AutomorphismCheck::Automorphism)
}

fn require_automorphism(g: &LieAlgebra, phi: &LinearMap) -> Result<()> {
    match is_automorphism(g, phi)? {
        AutomorphismCheck::Automorphism => Ok(()),
        AutomorphismCheck::NotInvertible => Err(Error::NotAutomorphism("not invertible".into())),
        AutomorphismCheck::BracketViolation { i, j } => Err(Error::NotAutomorphism(format!(
            "bracket not preserved on basis pair ({i}, {j})"
        ))),
    }
}

/// `exp(ad σ) = Σ_{k<n} ad(σ)^k / k!` for nilpotent `ad(σ)`.
///
/// A non-nilpotent adjoint is rejected with the first power from which the
/// ranks of `ad(σ)^k` stop decreasing, together with that (nonzero) rank.
pub fn exp_ad(g: &LieAlgebra, sigma: &Element) -> Result<LinearMap> {
    let ad = g.ad(sigma)?;
    exp_nilpotent(&ad)
}

/// Exact exponential of a nilpotent square matrix.
pub fn exp_nilpotent(a: &LinearMap) -> Result<LinearMap> {
    let n = a.rows();
    let mut sum = LinearMap::identity(n);
    let mut term = LinearMap::identity(n);
    for k in 1..=n {
        term = a.compose(&term)?.scale(&rational::frac(1, k as i64));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = &sum + &term;
    }
    if n == 0 {
        return Ok(sum);
    }
    // a^n != 0, so a is not nilpotent
    let mut power = a.clone();
    let mut rank = power.rank();
    for k in 1..=n {
        let next = a.compose(&power)?;
        let next_rank = next.rank();
        if next_rank == rank {
            return Err(Error::NotNilpotent { power: k, rank });
        }
        power = next;
        rank = next_rank;
    }
    Err(Error::NotNilpotent { power: n, rank })
}

/// `ad(σ)` is nilpotent.
pub fn is_ad_nilpotent(g: &LieAlgebra, sigma: &Element) -> Result<bool> {
    let ad = g.ad(sigma)?;
    Ok(ad.pow(g.dim() as u32)?.is_zero())
}

/// A central splitting `g = Zg ⊕ g0` with `g0` a centerless ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitData {
    algebra: LieAlgebra,
    center_part: Subspace,
    complement_part: Subspace,
    /// Columns: basis of `Zg` then basis of `g0`, in standard coordinates.
    adapted_basis: LinearMap,
    /// Inverse of `adapted_basis`: standard to adapted coordinates.
    change_of_basis: LinearMap,
    /// `g0` in the coordinates of its reduced basis.
    complement_algebra: LieAlgebra,
}

impl SplitData {
    /// Validates every invariant of a central split before returning.
    pub fn new(algebra: LieAlgebra, complement_part: Subspace) -> Result<Self> {
        let n = algebra.dim();
        if complement_part.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: complement_part.ambient_dim(),
            });
        }
        let center_part = algebra.center();
        if center_part.dim() + complement_part.dim() != n
            || center_part.sum(&complement_part)?.dim() != n
        {
            return Err(Error::InvalidSplit("center and complement do not form a direct sum".into()));
        }
        if !algebra.is_subalgebra(&complement_part) {
            return Err(Error::InvalidSplit("complement is not a subalgebra".into()));
        }
        if !algebra.is_ideal(&complement_part) {
            return Err(Error::InvalidSplit("complement is not an ideal".into()));
        }
        let complement_algebra = algebra.subalgebra(&complement_part)?;
        if !complement_algebra.center().is_zero() {
            return Err(Error::InvalidSplit("complement has nonzero center".into()));
        }
        let mut cols = center_part.basis_vectors();
        cols.extend(complement_part.basis_vectors());
        let adapted_basis = LinearMap::from_columns(&cols, n)?;
        let change_of_basis = adapted_basis.inverse()?;
        Ok(Self {
            algebra,
            center_part,
            complement_part,
            adapted_basis,
            change_of_basis,
            complement_algebra,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn center_part(&self) -> &Subspace {
        &self.center_part
    }

    pub fn complement_part(&self) -> &Subspace {
        &self.complement_part
    }

    pub fn adapted_basis(&self) -> &LinearMap {
        &self.adapted_basis
    }

    pub fn change_of_basis(&self) -> &LinearMap {
        &self.change_of_basis
    }

    pub fn complement_algebra(&self) -> &LieAlgebra {
        &self.complement_algebra
    }

    pub fn center_dim(&self) -> usize {
        self.center_part.dim()
    }

    pub fn complement_dim(&self) -> usize {
        self.complement_part.dim()
    }

    /// `change_of_basis * phi * adapted_basis`.
    pub fn to_adapted(&self, phi: &LinearMap) -> Result<LinearMap> {
        self.change_of_basis.compose(&phi.compose(&self.adapted_basis)?)
    }

    pub fn from_adapted(&self, phi: &LinearMap) -> Result<LinearMap> {
        self.adapted_basis.compose(&phi.compose(&self.change_of_basis)?)
    }

    /// Builds the automorphism with the given adapted blocks.
    pub fn assemble(&self, blocks: &BlockDecomposition) -> Result<LinearMap> {
        let (z, m) = (self.center_dim(), self.complement_dim());
        let mut a = LinearMap::zeros(z + m, z + m);
        a.set_block(0, 0, &blocks.phi11);
        a.set_block(0, z, &blocks.phi12);
        a.set_block(z, 0, &blocks.phi21);
        a.set_block(z, z, &blocks.phi22);
        self.from_adapted(&a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub phi11: LinearMap,
    pub phi12: LinearMap,
    pub phi21: LinearMap,
    pub phi22: LinearMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub blocks: BlockDecomposition,
    pub phi21_zero: bool,
    pub phi22_automorphism_of_g0: bool,
    pub phi12_kills_derived: bool,
}

impl BlockReport {
    pub fn all_hold(&self) -> bool {
        self.phi21_zero && self.phi22_automorphism_of_g0 && self.phi12_kills_derived
    }
}

pub fn block_decompose(split: &SplitData, phi: &LinearMap) -> Result<BlockReport> {
    require_automorphism(split.algebra(), phi)?;
    let (z, m) = (split.center_dim(), split.complement_dim());
    let a = split.to_adapted(phi)?;
    let blocks = BlockDecomposition {
        phi11: a.block(0, z, 0, z),
        phi12: a.block(0, z, z, m),
        phi21: a.block(z, m, 0, z),
        phi22: a.block(z, m, z, m),
    };
    let phi21_zero = blocks.phi21.is_zero();
    let phi22_automorphism_of_g0 = is_automorphism(split.complement_algebra(), &blocks.phi22)?.holds();
    let derived = split.complement_algebra().derived_subalgebra();
    let phi12_kills_derived = derived
        .basis_vectors()
        .iter()
        .all(|v| linalg::is_zero_vec(&blocks.phi12.apply(v).unwrap()));
    Ok(BlockReport {
        blocks,
        phi21_zero,
        phi22_automorphism_of_g0,
        phi12_kills_derived,
    })
}

/// The automorphism of `g / Zg` induced by `phi`, in the quotient
/// coordinates of [`LieAlgebra::quotient`].
pub fn induced_quotient_automorphism(g: &LieAlgebra, phi: &LinearMap) -> Result<LinearMap> {
    require_automorphism(g, phi)?;
    let center = g.center();
    if center.image(phi)? != center {
        return Err(Error::Invariant("automorphism does not preserve the center".into()));
    }
    let q = g.quotient(&center)?;
    let induced = q.projection.compose(&phi.compose(&q.section)?)?;
    if !is_automorphism(&q.algebra, &induced)?.holds() {
        return Err(Error::Invariant("induced map is not an automorphism of the quotient".into()));
    }
    Ok(induced)
}

/// Dimension bookkeeping for
///
/// ```text
///   Aut(g)/Inn(g) = | GL(Zg)   Hom(g0/[g0,g0], Zg) |
///                   |   0        Aut(g0)/Inn(g0)   |
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutOutReport {
    pub dim_center: usize,
    pub dim_complement: usize,
    pub dim_gl_center: usize,
    pub dim_hom_block: usize,
    pub derived_codim_in_g0: usize,
}

impl AutOutReport {
    pub const BLOCK_NAMES: [&'static str; 3] =
        ["GL(Zg)", "Hom(g0/[g0,g0], Zg)", "Aut(g0)/Inn(g0)"];
}

pub fn aut_out_description(split: &SplitData) -> AutOutReport {
    let z = split.center_dim();
    let m = split.complement_dim();
    let codim = m - split.complement_algebra().derived_subalgebra().dim();
    AutOutReport {
        dim_center: z,
        dim_complement: m,
        dim_gl_center: z * z,
        dim_hom_block: codim * z,
        derived_codim_in_g0: codim,
    }
}

/// Invertible block on the center, identity on `g0`.
pub fn center_block_automorphism(split: &SplitData, gl: &LinearMap) -> Result<LinearMap> {
    let (z, m) = (split.center_dim(), split.complement_dim());
    split.assemble(&BlockDecomposition {
        phi11: gl.clone(),
        phi12: LinearMap::zeros(z, m),
        phi21: LinearMap::zeros(m, z),
        phi22: LinearMap::identity(m),
    })
}
