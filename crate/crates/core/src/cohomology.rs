//! Chevalley–Eilenberg cochains of a Lie algebra with coefficients in a
//! finite-dimensional module.
//!
//! A `k`-cochain is an alternating map `Λ^k g -> M`. Coordinates: the `k`-subsets
//! `I = (i_1 < ... < i_k)` in lexicographic order, module index fastest, so
//! the coordinate of `(I, m)` is `rank(I) * dim M + m`.
//!
//! The differential is
//!
//! ```text
//! (dω)(x_0, .., x_k) = Σ_i (-1)^i x_i · ω(.., x̂_i, ..)
//!                    + Σ_{i<j} (-1)^{i+j} ω([x_i, x_j], .., x̂_i, .., x̂_j, ..)
//! ```

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{self, LinearMap};
use crate::rational::Rational;

/// A representation of `g` on `Q^module_dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct LieModule {
    algebra: LieAlgebra,
    module_dim: usize,
    action: Vec<LinearMap>,
}

impl LieModule {
    /// Checks `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` for all `i < j`.
    pub fn new(algebra: LieAlgebra, module_dim: usize, action: Vec<LinearMap>) -> Result<Self> {
        let n = algebra.dim();
        if action.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: action.len(),
            });
        }
        for a in &action {
            if a.rows() != module_dim || a.cols() != module_dim {
                return Err(Error::DimensionMismatch {
                    expected: module_dim,
                    found: a.rows().max(a.cols()),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut lhs = LinearMap::zeros(module_dim, module_dim);
                for (k, c) in algebra.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        lhs = &lhs + &action[k].scale(c);
                    }
                }
                let rhs = &(&action[i] * &action[j]) - &(&action[j] * &action[i]);
                if lhs != rhs {
                    return Err(Error::NotARepresentation { i, j });
                }
            }
        }
        Ok(Self {
            algebra,
            module_dim,
            action,
        })
    }

    /// One-dimensional module with zero action.
    pub fn trivial(algebra: LieAlgebra) -> Self {
        let action = vec![LinearMap::zeros(1, 1); algebra.dim()];
        Self {
            algebra,
            module_dim: 1,
            action,
        }
    }

    pub fn adjoint(algebra: LieAlgebra) -> Self {
        let action = algebra.ad_basis();
        let module_dim = algebra.dim();
        Self {
            algebra,
            module_dim,
            action,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn action(&self, i: usize) -> &LinearMap {
        &self.action[i]
    }

    pub fn cochain_dim(&self, k: usize) -> usize {
        binomial(self.algebra.dim(), k) * self.module_dim
    }
}

/// A degree of the complex with its outgoing differential.
#[derive(Debug, Clone, PartialEq)]
pub struct CochainComplexSlice {
    pub degree: usize,
    pub cochain_dim: usize,
    pub differential_out: LinearMap,
}

impl CochainComplexSlice {
    pub fn new(m: &LieModule, k: usize) -> Result<Self> {
        Ok(Self {
            degree: k,
            cochain_dim: m.cochain_dim(k),
            differential_out: ce_differential(m, k)?,
        })
    }
}

pub fn ce_differential(m: &LieModule, k: usize) -> Result<LinearMap> {
    ce_differential_with(m, k, Execution::default())
}

/// `d_k : C^k -> C^{k+1}`. Rows of the matrix are assembled per target
/// multi-index in parallel under [`Execution::Parallel`].
pub fn ce_differential_with(m: &LieModule, k: usize, exec: Execution) -> Result<LinearMap> {
    let n = m.algebra.dim();
    if k > n {
        return Err(Error::DegreeOutOfRange { degree: k, dim: n });
    }
    let d = m.module_dim;
    let sources = subsets(n, k);
    let targets = subsets(n, k + 1);
    let cols = sources.len() * d;
    let row_blocks: Vec<Vec<(usize, usize, Rational)>> = exec.map_slice(&targets, |target| {
        // (row within block, column, value)
        let mut out = Vec::new();
        // action term
        for (i, &xi) in target.iter().enumerate() {
            let rest: Vec<usize> = omit(target, &[i]);
            let src = subset_rank(n, &rest);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let rho = &m.action[xi];
            for p in 0..d {
                for q in 0..d {
                    let a = &rho[(p, q)];
                    if !a.is_zero() {
                        out.push((p, src * d + q, a * Rational::from_integer(sign.into())));
                    }
                }
            }
        }
        // bracket term
        for a in 0..target.len() {
            for b in a + 1..target.len() {
                let rest = omit(target, &[a, b]);
                let bracket = m.algebra.basis_bracket(target[a], target[b]);
                let outer = if (a + b) % 2 == 0 { 1 } else { -1 };
                for (c, coeff) in bracket.iter().enumerate() {
                    if coeff.is_zero() || rest.contains(&c) {
                        continue;
                    }
                    let mut seq = Vec::with_capacity(k);
                    seq.push(c);
                    seq.extend_from_slice(&rest);
                    let inner = sort_sign(&mut seq);
                    let src = subset_rank(n, &seq);
                    let val = coeff * Rational::from_integer((outer * inner).into());
                    for p in 0..d {
                        out.push((p, src * d + p, val.clone()));
                    }
                }
            }
        }
        out
    });
    let mut mat = LinearMap::zeros(targets.len() * d, cols);
    for (t, block) in row_blocks.into_iter().enumerate() {
        for (p, col, val) in block {
            mat[(t * d + p, col)] += val;
        }
    }
    Ok(mat)
}

pub fn cohomology_dim(m: &LieModule, k: usize) -> Result<usize> {
    let n = m.algebra.dim();
    if k > n {
        return Err(Error::DegreeOutOfRange { degree: k, dim: n });
    }
    let dk = ce_differential(m, k)?;
    let kernel = m.cochain_dim(k) - dk.rank();
    let image = if k == 0 { 0 } else { ce_differential(m, k - 1)?.rank() };
    Ok(kernel - image)
}

/// All `dim H^k` for `k = 0..=n`, computing each differential once.
pub fn betti_numbers(m: &LieModule) -> Vec<usize> {
    let n = m.algebra.dim();
    let ranks: Vec<usize> = Execution::default()
        .map_range(n + 1, |k| ce_differential_with(m, k, Execution::Sequential).unwrap().rank());
    (0..=n)
        .map(|k| m.cochain_dim(k) - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect()
}

pub fn is_closed(m: &LieModule, k: usize, cochain: &[Rational]) -> Result<bool> {
    let expected = m.cochain_dim(k);
    if cochain.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: cochain.len(),
        });
    }
    let d = ce_differential(m, k)?;
    Ok(linalg::is_zero_vec(&d.apply(cochain)?))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorted `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Lexicographic rank of a sorted subset among all subsets of the same size.
pub fn subset_rank(n: usize, s: &[usize]) -> usize {
    let k = s.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &v) in s.iter().enumerate() {
        for skipped in prev..v {
            rank += binomial(n - skipped - 1, k - pos - 1);
        }
        prev = v + 1;
    }
    rank
}

fn omit(s: &[usize], drop: &[usize]) -> Vec<usize> {
    s.iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, &v)| v)
        .collect()
}

/// Sorts in place and returns the sign of the permutation. Entries are distinct.
fn sort_sign(v: &mut [usize]) -> i64 {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}
