//! Operator realizations and their validators: the Witt algebra on Laurent
//! polynomials, the graded su(1,1) x Clifford construction, and the
//! free-boson / free-fermion mode algebras, all in exact arithmetic.

pub mod graded;
pub mod modes;
pub mod svir;
pub mod witt;

pub use graded::{super_bracket, CMatrix, GradedOperator, Parity};
pub use modes::{BosonModes, BosonParams, BosonState, FermionModes, FermionState};
pub use svir::{bundled_reps, closure_residuals, ff_gg_vanish_exact, svir_build, SuRep, SvirOps};
pub use witt::{witt_commutator_defect, witt_gen, witt_su11_defects, LaurentPolynomial, WittGenerator};
