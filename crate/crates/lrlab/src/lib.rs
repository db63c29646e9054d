//! Exact verification of flat connections on rank-4 matrix factorizations
//! of the surface singularities x^m + y^n + z^2.
//!
//! Everything is computed symbolically over the rationals: no floating
//! point, no probabilistic shortcuts. See the book under `book/` for a
//! guided tour.

pub mod connections;
pub mod derivations;
pub mod grobner;
pub mod matfac;
pub mod linsolve;
pub mod monomial;
pub mod poly;
pub mod rational;
pub mod report;
pub mod ring;
pub mod verify;
