//! Exact linear algebra over the rationals and Gaussian rationals.

pub mod echelon;
pub mod matrix;
pub mod realify;
pub mod scalar;
pub mod sparse;

pub use echelon::{nullspace_basis, rank, rank_of_vectors, rref, Rref, SolutionSpace};
pub use matrix::{Mat, MatC, MatR};
pub use realify::{realify, CRow, CVar, ComplexEquation, Factor, RealifyError, Term};
pub use scalar::{fmt_rational, int, parse_rational, rat, Field, GaussianRational, Rational};
pub use sparse::{Columns, Echelon, LinearSystem, SparseRow};
