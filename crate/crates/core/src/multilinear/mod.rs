//! Exact multilinear algebra over a model fibre ℝⁿ with a fixed orthonormal
//! basis: alternating forms, symmetric 2-tensors, endomorphisms, the
//! derivation action of 2-forms on tensors, and exact linear solving.
//!
//! Conventions fixed here and used by every downstream module:
//!
//! * the 2-form `e∧f` acts on vectors as `(e∧f)(v) = g(e,v)f − g(f,v)e`;
//! * a skew endomorphism `A` acts on 2-tensors as
//!   `(A_*h)(X,Y) = h(AX,Y) + h(X,AY)` and on k-forms slotwise;
//! * increasing basis monomials `e_{i₁}∧…∧e_{i_k}` are orthonormal;
//! * the orientation is `e₁∧…∧e_n = +1`.

mod form;
mod mat;

pub use form::{endo_act_form, AltForm};
pub use mat::{
    basis_vector, dot, endo_act_tensor2, kernel_basis, rank, solve_exact, wedge2_as_endo,
    EndoMatrix, Mat, SymTensor2,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultilinearError {
    #[error("fibre dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("linear system is inconsistent: no exact solution")]
    NoSolution,
    #[error("tensor is not symmetric: entries ({row},{col}) and ({col},{row}) differ")]
    NotSymmetric { row: usize, col: usize },
}
