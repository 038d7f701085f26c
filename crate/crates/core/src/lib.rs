//! Exact computer algebra for the Knuth–Robinson–Schensted correspondence on
//! determinantal ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`tableaux`] – minors, bitableaux, shapes, the order `≼` and enumeration
//!   of standard bitableaux.
//! * [`polyring`] – sparse polynomials over `ℚ` in the entries of an `m×n`
//!   matrix, multidegrees and the diagonal term order.
//! * [`krs`] – the deletion/insertion bijection between standard bitableaux
//!   and monomials.
//! * [`invariants`] – LIS, Greene's `α_k`, `γ_t`, `w_t`, `γ_δ` and
//!   inc-decompositions.
//! * [`straighten`] – standard representations by exact linear algebra.
//! * [`ideals`] – ideal families with standard bases, initial ideals per
//!   multigraded slice, and the Stanley–Reisner side.
//! * [`suites`] – named verification suites producing [`report::Report`]s.

pub mod error;
pub mod ideals;
pub mod invariants;
pub mod krs;
pub mod linalg;
pub mod polyring;
pub mod report;
pub mod straighten;
pub mod suites;
pub mod tableaux;

pub use error::{Error, Result};
pub use krs::TwoRowArray;
pub use polyring::{Monomial, Multidegree, Polynomial};
pub use tableaux::{Bitableau, GridSize, Minor, Shape};

/// Order-preserving map, parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub(crate) fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}
