//! Test-only oracles, written independently of the library's RREF path.
//!
//! Rank is computed by fraction-free (Bareiss) elimination over the integers
//! after clearing denominators row by row, choosing the pivot of smallest
//! magnitude and scanning columns right to left. Algebra-level quantities are
//! assembled from a dense structure tensor rather than from library helpers.

#![allow(dead_code)]

use lieob::{LieAlgebra, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense `t[i][j][k]` = coefficient of `e_k` in `[e_i, e_j]`.
pub fn tensor(g: &LieAlgebra) -> Vec<Vec<Vec<Rational>>> {
    let n = g.dim();
    let mut t = vec![vec![vec![Rational::zero(); n]; n]; n];
    for (&(i, j), v) in g.structure_constants() {
        for k in 0..n {
            t[i][j][k] = v[k].clone();
            t[j][i][k] = -v[k].clone();
        }
    }
    t
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in (0..cols).rev() {
        let pivot = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()));
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn nullity(rows: &[Vec<Rational>], cols: usize) -> usize {
    cols - rank(rows)
}

/// `dim Z(g)`: kernel of `x -> (j -> [x, e_j])`.
pub fn center_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let t = tensor(g);
    let rows: Vec<Vec<Rational>> = (0..n)
        .flat_map(|j| {
            let t = &t;
            (0..n).map(move |c| (0..n).map(|x| t[x][j][c].clone()).collect())
        })
        .collect();
    nullity(&rows, n)
}

pub fn derived_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let t = tensor(g);
    let rows: Vec<Vec<Rational>> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| t[i][j].clone())
        .collect();
    if rows.is_empty() {
        0
    } else {
        rank(&rows)
    }
}

/// `dim Der(g)` by evaluating the derivation defect on each elementary
/// matrix `E_{pq}` and taking the nullity of the resulting linear map.
pub fn derivation_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let t = tensor(g);
    let apply = |p: usize, q: usize, v: &[Rational]| -> Vec<Rational> {
        // E_{pq} v = v_q e_p
        let mut out = vec![Rational::zero(); n];
        out[p] = v[q].clone();
        out
    };
    let bracket = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    out[k] += &x[i] * &y[j] * &t[i][j][k];
                }
            }
        }
        out
    };
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    };
    // columns of the defect map, one per unknown
    let mut columns = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let mut col = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let (ei, ej) = (unit(i), unit(j));
                    let lhs = apply(p, q, &bracket(&ei, &ej));
                    let a = bracket(&apply(p, q, &ei), &ej);
                    let b = bracket(&ei, &apply(p, q, &ej));
                    for k in 0..n {
                        col.push(&lhs[k] - &a[k] - &b[k]);
                    }
                }
            }
            columns.push(col);
        }
    }
    // rank of the map = rank of its transpose
    n * n - rank(&columns)
}

/// `dim span{ad(e_i)}`.
pub fn inner_derivation_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let t = tensor(g);
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .flat_map(|c| t[i].iter().map(move |row| row[c].clone()))
                .collect()
        })
        .collect();
    if rows.is_empty() {
        0
    } else {
        rank(&rows)
    }
}

pub fn q(p: i64) -> Rational {
    lieob::rational::int(p)
}
