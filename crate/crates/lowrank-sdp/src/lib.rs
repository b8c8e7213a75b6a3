//! Rank reduction for semidefinite relaxations of binary quadratic problems.
//!
//! The library solves (or imports) the semidefinite relaxation of
//! `max xᵀAx, x ∈ {−1,1}ⁿ`, rounds it to a binary solution by randomized
//! hyperplanes, and then lowers the rank of the relaxation solution by
//! projection-free gradient descent on a smooth rank surrogate while the
//! objective `tr(AX)` stays inside the corridor between the rounded value
//! and the relaxation value. Rounding the low-rank iterate again can only
//! improve the reported cut.
//!
//! Modules follow the pipeline order:
//! * [`linalg`] — symmetric matrices, the upper-triangular vector
//!   parametrization, eigendecomposition, rank measurement;
//! * [`problem`] — benchmark instance parsing (Gset edge lists, Beasley
//!   0/1 quadratic programs) and the 0/1 ↔ ±1 lift;
//! * [`fetch`] — cached download of public benchmark instances;
//! * [`sdp`] — the initial relaxation solution, either by low-rank
//!   factorization ascent or imported from a solution file;
//! * [`surrogate`] — smooth rank surrogates, their matrix gradients and
//!   the safe step bounds that keep iterates positive semidefinite;
//! * [`descent`] — the projection-free descent loop over the corridor;
//! * [`rounding`] — hyperplane rounding and cut evaluation;
//! * [`oracle`] — brute-force and finite-difference ground truth for tests;
//! * [`pipeline`] — end-to-end runs and benchmark table emission.

pub mod descent;
pub mod error;
pub mod fetch;
pub mod linalg;
pub mod oracle;
pub mod pipeline;
pub mod problem;
pub mod rounding;
pub mod sdp;
pub mod surrogate;

pub use error::{Error, Result};
