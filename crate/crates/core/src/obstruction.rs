//! Triviality classification of the Mackenzie obstruction attached to a Lie
//! algebra `g` (the fiber of a Lie algebra bundle), and the central-split test.
//!
//! The obstruction is known to vanish when
//!
//! * `g` has zero center ([`TrivialReason::Centerless`]),
//! * `g` is abelian ([`TrivialReason::Abelian`]),
//! * `g = Zg ⊕ g0` with `g0` an ideal of zero center ([`TrivialReason::CentralSplit`]).
//!
//! Anything else is reported as [`ObstructionVerdict::Undetermined`] together
//! with the dimensions that decided it. No input is ever declared nontrivial.
//!
//! # When does a central split exist?
//!
//! `g = Zg ⊕ g0` with `g0` a centerless ideal exists iff `Zg ∩ [g,g] = 0`.
//!
//! If the intersection is zero, extend a basis of `[g,g]` to a complement
//! `g0` of `Zg`. Since `[g,g] ⊆ g0`, `g0` is an ideal and a subalgebra. An
//! element of `Z(g0)` commutes with `g0` and with `Zg`, so it lies in
//! `Zg ∩ g0 = 0`. Conversely, in any such split
//! `[g,g] = [g0,g0] ⊆ g0`, so `Zg ∩ [g,g] ⊆ Zg ∩ g0 = 0`.

use std::fmt;

use crate::algebra::{LieAlgebra, Quotient};
use crate::error::Result;
use crate::linalg::{self, Subspace};
use crate::maps::SplitData;

#[derive(Debug, Clone, PartialEq)]
pub enum SplitResult {
    Found(Box<SplitData>),
    /// `witness = Zg ∩ [g,g]`, nonzero.
    NotFound { witness: Subspace },
}

impl SplitResult {
    pub fn found(&self) -> bool {
        matches!(self, SplitResult::Found(_))
    }

    pub fn split(&self) -> Option<&SplitData> {
        match self {
            SplitResult::Found(s) => Some(s),
            SplitResult::NotFound { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Subspace> {
        match self {
            SplitResult::Found(_) => None,
            SplitResult::NotFound { witness } => Some(witness),
        }
    }
}

/// Decides whether `g = Zg ⊕ g0` and, if so, builds `g0` by extending `[g,g]`
/// with standard basis vectors, taken in index order, that are independent of
/// `Zg + (current g0)`.
pub fn split_check(g: &LieAlgebra) -> Result<SplitResult> {
    let n = g.dim();
    let center = g.center();
    let derived = g.derived_subalgebra();
    let meet = center.intersection(&derived)?;
    if !meet.is_zero() {
        return Ok(SplitResult::NotFound { witness: meet });
    }
    let mut complement = derived;
    let mut covered = center.sum(&complement)?;
    for k in 0..n {
        if covered.dim() == n {
            break;
        }
        let e = linalg::unit(n, k);
        if covered.contains(&e) {
            continue;
        }
        let mut vs = complement.basis_vectors();
        vs.push(e.clone());
        complement = Subspace::span(n, &vs)?;
        let mut cv = covered.basis_vectors();
        cv.push(e);
        covered = Subspace::span(n, &cv)?;
    }
    Ok(SplitResult::Found(Box::new(SplitData::new(g.clone(), complement)?)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrivialReason {
    Centerless,
    Abelian,
    CentralSplit,
}

impl fmt::Display for TrivialReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrivialReason::Centerless => "Centerless",
            TrivialReason::Abelian => "Abelian",
            TrivialReason::CentralSplit => "CentralSplit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Diagnostics {
    pub dim_center: usize,
    pub dim_derived: usize,
    pub dim_center_meet_derived: usize,
    /// `dim Zg * (dim g - dim(Zg + [g,g]))`.
    pub dim_hom_block: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionVerdict {
    Trivial(TrivialReason),
    Undetermined(Diagnostics),
}

impl ObstructionVerdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self, ObstructionVerdict::Trivial(_))
    }

    pub fn reason(&self) -> Option<TrivialReason> {
        match self {
            ObstructionVerdict::Trivial(r) => Some(*r),
            ObstructionVerdict::Undetermined(_) => None,
        }
    }
}

impl fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionVerdict::Trivial(r) => write!(f, "Trivial ({r})"),
            ObstructionVerdict::Undetermined(_) => f.write_str("Undetermined"),
        }
    }
}

/// Rules in order: zero center, zero derived algebra, central split.
pub fn classify_obstruction(g: &LieAlgebra) -> Result<ObstructionVerdict> {
    let center = g.center();
    if center.is_zero() {
        return Ok(ObstructionVerdict::Trivial(TrivialReason::Centerless));
    }
    let derived = g.derived_subalgebra();
    if derived.is_zero() {
        return Ok(ObstructionVerdict::Trivial(TrivialReason::Abelian));
    }
    match split_check(g)? {
        SplitResult::Found(_) => Ok(ObstructionVerdict::Trivial(TrivialReason::CentralSplit)),
        SplitResult::NotFound { witness } => {
            let span = center.sum(&derived)?;
            Ok(ObstructionVerdict::Undetermined(Diagnostics {
                dim_center: center.dim(),
                dim_derived: derived.dim(),
                dim_center_meet_derived: witness.dim(),
                dim_hom_block: center.dim() * (g.dim() - span.dim()),
            }))
        }
    }
}

/// What passing to `g / Zg` gives.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionReport {
    pub center_dim: usize,
    pub quotient: Quotient,
    pub quotient_center_dim: usize,
    pub note: &'static str,
}

pub const REDUCTION_NOTE: &str = "every automorphism of g preserves Zg and induces an automorphism of g/Zg, \
sending inner automorphisms to inner ones; a bundle with fiber g/Zg whose structure group \
reduces through Aut(g) -> Aut(g/Zg) has trivial obstruction";

pub fn reduction_report(g: &LieAlgebra) -> Result<ReductionReport> {
    let center = g.center();
    let quotient = g.quotient(&center)?;
    let quotient_center_dim = quotient.algebra.center().dim();
    Ok(ReductionReport {
        center_dim: center.dim(),
        quotient,
        quotient_center_dim,
        note: REDUCTION_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;

    #[test]
    fn heisenberg_does_not_split() {
        let g = registry::heisenberg3();
        let r = split_check(&g).unwrap();
        assert_eq!(r.witness(), Some(&Subspace::coordinate(3, &[2])));
        let v = classify_obstruction(&g).unwrap();
        assert_eq!(
            v,
            ObstructionVerdict::Undetermined(Diagnostics {
                dim_center: 1,
                dim_derived: 1,
                dim_center_meet_derived: 1,
                dim_hom_block: 2,
            })
        );
        assert_eq!(v.to_string(), "Undetermined");
    }

    #[test]
    fn center_plus_sl2_splits() {
        let r = split_check(&registry::sum_center_sl2()).unwrap();
        let s = r.split().unwrap();
        assert_eq!(s.center_part(), &Subspace::coordinate(4, &[0]));
        assert_eq!(s.complement_part(), &Subspace::coordinate(4, &[1, 2, 3]));
    }

    #[test]
    fn sl2_split_is_trivial_center() {
        let r = split_check(&registry::sl2()).unwrap();
        let s = r.split().unwrap();
        assert!(s.center_part().is_zero());
        assert_eq!(s.complement_part(), &Subspace::full(3));
    }

    #[test]
    fn verdicts() {
        assert_eq!(
            classify_obstruction(&registry::sl2()).unwrap().to_string(),
            "Trivial (Centerless)"
        );
        assert_eq!(
            classify_obstruction(&registry::abelian(3).unwrap()).unwrap().reason(),
            Some(TrivialReason::Abelian)
        );
        assert_eq!(
            classify_obstruction(&registry::sum_center2_aff1()).unwrap().reason(),
            Some(TrivialReason::CentralSplit)
        );
    }

    #[test]
    fn reductions() {
        let r = reduction_report(&registry::heisenberg3()).unwrap();
        assert_eq!(r.quotient.algebra.dim(), 2);
        assert_eq!(r.quotient_center_dim, 2);
        let r = reduction_report(&registry::sum_center_sl2()).unwrap();
        assert_eq!(r.quotient.algebra.structure_constants(), registry::sl2().structure_constants());
        assert_eq!(r.quotient_center_dim, 0);
        let r = reduction_report(&registry::so3()).unwrap();
        assert_eq!(r.quotient.algebra, registry::so3());
    }
}
