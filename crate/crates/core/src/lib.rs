//! Exact integer-polynomial toolkit for Coxeter polynomials of star quivers,
//! canonical and extended canonical algebras.
//!
//! All decisions (divisibility, identities, root counts on intervals and on
//! the unit circle) are made in exact integer arithmetic. Floating point is
//! confined to [`spectra::numeric`], which only narrows reported brackets
//! and serves as a test oracle.

pub mod chebyshev;
pub mod coxeter;
pub mod cyclotomic;
pub mod error;
pub mod graphs;
pub mod polyring;
pub mod spectra;
pub mod symmetry;
pub mod verify;

pub use coxeter::{CoxeterBundle, WeightType};
pub use error::{Error, Result};
pub use graphs::Multigraph;
pub use num_rational::BigRational;
pub use polyring::{IntPoly, RatPoly};
pub use spectra::RootLocationReport;
