//! Built-in example algebras.
//!
//! | name               | basis          | nonzero brackets                          |
//! |--------------------|----------------|-------------------------------------------|
//! | `abelian_<n>`      | e1..en         | none                                      |
//! | `heisenberg3`      | x, y, z        | [x,y] = z                                 |
//! | `sl2`              | e, f, h        | [e,f] = h, [h,e] = 2e, [h,f] = -2f        |
//! | `so3`              | x, y, z        | [x,y] = z, [y,z] = x, [z,x] = y           |
//! | `aff1`             | a, b           | [a,b] = b                                 |
//! | `sum_center_sl2`   | z, e, f, h     | Q ⊕ sl2                                   |
//! | `sum_center2_aff1` | z1, z2, a, b   | Q² ⊕ aff1                                 |

use crate::algebra::{LieAlgebra, MAX_DIM};
use crate::error::{Error, Result};

pub const NAMES: &[&str] = &[
    "abelian_n",
    "heisenberg3",
    "sl2",
    "so3",
    "aff1",
    "sum_center_sl2",
    "sum_center2_aff1",
];

pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_sparse_i64(&["x", "y", "z"], &[((0, 1), &[(2, 1)])]).expect("heisenberg3")
}

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_sparse_i64(
        &["e", "f", "h"],
        &[
            ((0, 1), &[(2, 1)]),
            ((0, 2), &[(0, -2)]),
            ((1, 2), &[(1, 2)]),
        ],
    )
    .expect("sl2")
}

pub fn so3() -> LieAlgebra {
    LieAlgebra::from_sparse_i64(
        &["x", "y", "z"],
        &[
            ((0, 1), &[(2, 1)]),
            ((0, 2), &[(1, -1)]),
            ((1, 2), &[(0, 1)]),
        ],
    )
    .expect("so3")
}

pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_sparse_i64(&["a", "b"], &[((0, 1), &[(1, 1)])]).expect("aff1")
}

pub fn abelian(n: usize) -> Result<LieAlgebra> {
    LieAlgebra::abelian(n)
}

pub fn sum_center_sl2() -> LieAlgebra {
    LieAlgebra::from_sparse_i64(
        &["z", "e", "f", "h"],
        &[
            ((1, 2), &[(3, 1)]),
            ((1, 3), &[(1, -2)]),
            ((2, 3), &[(2, 2)]),
        ],
    )
    .expect("sum_center_sl2")
}

pub fn sum_center2_aff1() -> LieAlgebra {
    LieAlgebra::from_sparse_i64(&["z1", "z2", "a", "b"], &[((2, 3), &[(3, 1)])])
        .expect("sum_center2_aff1")
}

/// Looks up a built-in. `abelian_<n>` and `abelian<n>` accept any `n` up to
/// the dimension cap.
pub fn get(name: &str) -> Result<LieAlgebra> {
    if let Some(rest) = name.strip_prefix("abelian") {
        let digits = rest.strip_prefix('_').unwrap_or(rest);
        let n: usize = digits
            .parse()
            .map_err(|_| Error::UnknownExample(name.to_string()))?;
        if n > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim: n, max: MAX_DIM });
        }
        return abelian(n);
    }
    match name {
        "heisenberg3" | "h3" => Ok(heisenberg3()),
        "sl2" => Ok(sl2()),
        "so3" => Ok(so3()),
        "aff1" => Ok(aff1()),
        "sum_center_sl2" => Ok(sum_center_sl2()),
        "sum_center2_aff1" => Ok(sum_center2_aff1()),
        _ => Err(Error::UnknownExample(name.to_string())),
    }
}

/// The concrete built-ins with `abelian_n` instantiated for `n = 1..=5`.
pub fn all() -> Vec<(String, LieAlgebra)> {
    let mut out: Vec<(String, LieAlgebra)> = (1..=5)
        .map(|n| (format!("abelian_{n}"), abelian(n).unwrap()))
        .collect();
    for name in &NAMES[1..] {
        out.push((name.to_string(), get(name).unwrap()));
    }
    out
}
