//! Exact-arithmetic structure theory of finite-dimensional Lie algebras over
//! the rationals: center, derived algebra, quotients, derivations,
//! automorphisms and their block structure over `Zg ⊕ g0`,
//! Chevalley–Eilenberg cohomology, and a classifier deciding when the
//! Mackenzie obstruction of a transitive Lie algebroid with fiber `g` is
//! known to vanish.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is `Send + Sync`. Data-parallel loops go
//! through [`exec::Execution`]; the `parallel` feature (on by default) runs
//! them on rayon.

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod document;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod maps;
pub mod obstruction;
pub mod rational;
pub mod registry;
pub mod sampling;

pub use algebra::{Element, JacobiReport, LieAlgebra, Quotient};
pub use cohomology::{ce_differential, cohomology_dim, is_closed, CochainComplexSlice, LieModule};
pub use document::{parse_algebra, AlgebraDocument};
pub use error::{Error, Result};
pub use exec::Execution;
pub use linalg::{LinearMap, Subspace};
pub use maps::{
    aut_out_description, block_decompose, derivation_space, exp_ad, induced_quotient_automorphism,
    inner_derivations, is_automorphism, AutOutReport, BlockDecomposition, BlockReport, SplitData,
};
pub use obstruction::{
    classify_obstruction, reduction_report, split_check, ObstructionVerdict, SplitResult, TrivialReason,
};
pub use rational::Rational;
