//! Construction and verification of transfer-function realizations for
//! rational inner functions on the polydisk.
//!
//! The crate provides:
//!
//! - sparse multivariate complex polynomials, vector polynomials, and
//!   Laurent polynomials ([`poly`]), over either `f64` complex coefficients
//!   or an exact rational-surd ring ([`scalar`]);
//! - Hermitian forms `m(ζ)* H m(z)` for kernels such as
//!   `p(z)p̄(ζ) − q(z)q̄(ζ)`, with torus restriction and face extraction
//!   ([`form`]);
//! - sums-of-squares certificates: Gram factorization, decomposition
//!   verification, degree-bound checks, and the radial coefficient identity
//!   ([`cert`]);
//! - unitary colligations: the lurking-isometry construction, transfer
//!   function evaluation, and Cramer's-rule recovery of the rational
//!   function ([`realization`]);
//! - minimal-square-count lower bounds for degree-(1,1) face data
//!   ([`facebound`]);
//! - an empirical von Neumann inequality probe over random commuting
//!   strict contractions ([`vn`]).
//!
//! Everything is deterministic given explicit seeds; the crate is
//! `no_std`-compatible (alloc required).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
#[cfg(test)]
pub(crate) mod testutil;

pub mod cert;
pub mod facebound;
pub mod form;
pub mod linalg;
pub mod poly;
pub mod realization;
pub mod rng;
pub mod scalar;
pub mod vn;

pub use cert::{
    check_degree_bounds, gram_factor, radial_check, radial_sides, verify_decomposition,
    DegreeReport, FaceDegreeReport, SosCertificate,
};
pub use error::{Error, Result};
pub use facebound::{
    min_squares, single_square_feasible, size_lower_bound, size_lower_bound_report, FaceData,
    SquareAnsatz,
};
pub use form::{face_extract, gram, mod2_diff, HermitianForm};
pub use linalg::{CMat, C64};
pub use poly::{box_basis, LaurentPoly, MultiIndex, Poly, VecPoly};
pub use realization::{lurking_isometry, stability_min_abs, Realization};
pub use rng::Rng;
pub use scalar::{Coeff, Exact, SurdSum};
pub use vn::{vn_norm, ContractionTuple};
