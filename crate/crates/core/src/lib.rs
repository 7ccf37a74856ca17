//! Exact workbench for linear operators that act diagonally on a simple
//! polynomial basis.
//!
//! Any such operator has a unique differential representation
//! sum_k Q_k(x) D^k; this crate derives the Q_k exactly over the rationals,
//! classifies the operator's order from its eigenvalue sequence, and runs
//! the necessary-condition diagnostics for hyperbolicity preservation
//! (Turan inequalities, sign patterns, increasing-eigenvalue and
//! degree-profile checks, seeded counterexample search).
//!
//! All arithmetic is exact; nothing in the crate touches floating point.

pub mod basis;
pub mod classify;
pub mod error;
pub mod hyperbolicity;
pub mod operator;
pub mod polynomial;
pub mod rational;
pub mod sequence;
pub mod sturm;
pub mod transform;

pub use basis::{Basis, BasisSpec};
pub use error::{Error, Result};
pub use operator::{ActionTable, DiagonalSpec, OperatorFile, OperatorMeta, OperatorRep};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use sequence::SequenceSpec;
