//! Exact integer invariants of ordered configuration spaces of surfaces, with
//! an emphasis on the once-punctured torus and the bookkeeping that secondary
//! representation stability requires.
//!
//! Everything here is exact: Betti numbers of `F_n(X)` are polynomials in `n`
//! held in the binomial-coefficient basis with integer coefficients, module
//! dimensions are arbitrary-precision integers, and any quantity that falls
//! outside the tabulated range is reported as such instead of being guessed.
//!
//! The main pipelines:
//!
//! * [`betti_tables`] stores the torus Betti polynomials (Pagaria's closed
//!   form) and derives the once-punctured-torus table from them via an
//!   argument shift and division of the graded Poincaré series by `(1+t)^2`.
//! * [`fi_decomp`] reads FI#-generator dimensions off the punctured-torus
//!   table (a free FI#-module is determined by its Betti polynomial's
//!   binomial-basis coefficients) and exposes the secondary-stability
//!   sequences built from them.
//! * [`fim_plus`] computes dimensions of free FIM+-modules (spanned by
//!   partial matchings) and certifies non-freeness of dimension profiles.
//! * [`partitions`] enumerates partitions, evaluates hook-length dimensions,
//!   and classifies the irreducible constituents of the signed matching
//!   representation of `S_{2n}`.
//! * [`arc_ss`] assembles dimension data for the `E^2` page of the arc
//!   resolution spectral sequence and the vanishing reports used to feed the
//!   secondary-stability arguments.
//!
//! The [`cli`] shim in the companion binary crate renders these answers as
//! JSON, CSV, or aligned tables; [`selfcheck`] re-runs the full battery of
//! internal cross-checks and is wired to the `selfcheck` subcommand.

pub mod arc_ss;
pub mod betti_tables;
pub mod binom_poly;
pub mod combinatorics;
pub mod error;
pub mod fi_decomp;
pub mod fim_plus;
pub mod partitions;
pub mod selfcheck;

pub use error::Error;
