//! Exact-arithmetic verification engine for instability certificates of
//! Einstein metrics carrying real Killing spinors.
//!
//! Everything in this crate is computed over arbitrary-precision rationals;
//! there is no floating point anywhere. The crate provides:
//!
//! * [`multilinear`] — forms, symmetric 2-tensors, endomorphisms and exact
//!   linear solving over a model fibre ℝⁿ with a fixed orthonormal basis;
//! * [`clifford`] and [`spin`] — the Clifford algebra Cl(7) and its
//!   8-dimensional real spinor representation;
//! * [`g2`] — the G2 structure (cross product, 3-form φ, 4-form ψ) derived
//!   from a unit spinor, the Λ²/Λ³ projectors and the identity suite;
//! * [`sasaki`] — a single-fibre model of a Sasaki structure and the
//!   curvature-difference identities on Φ-invariant basic tensors;
//! * [`rep`] — character calculus for sp(1) and sp(2): Weyl characters,
//!   plethysms, principal branching and Frobenius multiplicities;
//! * [`stability`] — the eigenvalue bookkeeping that turns the algebra into
//!   machine-readable stability reports (eigenvalue vs. the critical 2E).
//!
//! With the default `parallel` feature the batch verification sweeps fan out
//! over rayon; disabling it falls back to sequential loops with identical
//! results.

pub mod clifford;
pub mod exec;
pub mod g2;
pub mod multilinear;
pub mod rep;
pub mod sampling;
pub mod sasaki;
pub mod scalar;
pub mod spin;
pub mod stability;

pub use scalar::Scalar;
