//! Finite permutation groups and the component structure of their cyclic
//! graph Δ(G) and commuting graph Γ(G).
//!
//! Everything here is pure computation over `alloc` collections: groups are
//! fully enumerated from generators, 2-Frobenius and Frobenius structure is
//! detected and then re-verified, and closed-form component counts are
//! checked against brute-force union-find counts. Affine groups over finite
//! fields can also be counted structurally, without enumerating `G`.
#![no_std]

extern crate alloc;

pub mod arith;
mod error;
pub mod field;
pub mod formulas;
pub mod graphs;
pub mod group;
pub mod perm;
pub mod structure;

pub use error::{Error, Result};
pub use field::{AffineGroupSpec, Field, StructuredCounts};
pub use formulas::{CountResult, FormulaName, VerificationReport};
pub use graphs::{ComponentReport, GraphKind, Method, UnionFind};
pub use group::{CosetAction, EnumeratedGroup, Limits, Subgroup};
pub use perm::Permutation;
pub use structure::{CaseLabel, FrobeniusDecomposition, TwoFrobeniusDecomposition};
