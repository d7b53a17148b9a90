//! Exact computation of automorphism-algebra dimensions of Siegel domains of
//! the second kind, and the case checks built on top of them.

#![allow(clippy::needless_range_loop)]

pub mod exactlin;
pub mod cones;
pub mod hermitian;
pub mod poly;
pub mod graded;
pub mod bounds;
pub mod report;
pub mod classify;
pub mod cli;
