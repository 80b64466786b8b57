//! Certified worst-case convergence bounds for coordinate descent methods.
//!
//! This crate computes upper bounds on the worst-case objective gap of
//! randomized coordinate descent, cyclic coordinate descent and the
//! Gauss-Seidel method by building semidefinite performance-estimation
//! problems and solving them with a built-in operator-splitting SDP solver.
//! Every bound comes with primal/dual residual certificates, and the
//! `empirical` module provides lower-bound simulations that sandwich the
//! SDP values from below.
//!
//! Module map:
//! - [`symmat`]: dense symmetric matrices, eigendecomposition, PSD projection.
//! - [`sdp`]: standard-form SDP solver (one PSD block + free scalars).
//! - [`pep`]: symbolic Gram-basis expressions and constraint generators.
//! - [`rcd`]: randomized coordinate descent performance estimation.
//! - [`ccd`]: cyclic coordinate descent / Gauss-Seidel performance estimation.
//! - [`bounds`]: closed-form reference bounds from the literature.
//! - [`empirical`]: simulators and worst-case instance search.

pub mod bounds;
pub mod ccd;
pub mod empirical;
pub mod error;
pub mod pep;
pub mod rcd;
pub mod sdp;
pub mod symmat;

pub use error::{Error, Result};
