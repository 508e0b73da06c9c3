//! Exact-arithmetic verification library for multiboson logical operators,
//! Laughlin alternant expansions, and Virasoro character identities.
//!
//! The crate is organized around the objects it checks:
//!
//! - [`rational`], [`qseries`], [`rmatrix`]: the exact substrate (arbitrary
//!   precision rationals, truncated q-series with rational exponents, exact
//!   dense matrices).
//! - [`combinatorics`]: Stirling numbers, symmetric functions, Vandermonde
//!   determinants/solvers, interpolation coefficients, the roots-of-unity
//!   floor formula.
//! - [`multiboson`]: the k-boson ladder on truncated Fock space, qukit
//!   codewords, the logical shift operators and their matrix representation,
//!   and the tower composition law.
//! - [`laughlin`]: alternant/Schur expansions of Vandermonde powers, exact
//!   Gaussian plasma norms and their Monte Carlo oracle.
//! - [`characters`]: minimal-model character series and Wronskians.
//! - [`realizations`]: validators for the Witt algebra, the graded su(1,1)
//!   x Clifford realization, and the free-boson/free-fermion mode algebras.
//! - [`verify`]: named check suites with reproducible seeds and
//!   machine-readable reports (consumed by the `vq` CLI).

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod laughlin;
pub mod multiboson;
pub mod qseries;
pub mod rational;
pub mod realizations;
pub mod rmatrix;
pub mod verify;

pub use error::{Result, VqError};
pub use qseries::QSeries;
pub use rational::Rational;
pub use rmatrix::RationalMatrix;
