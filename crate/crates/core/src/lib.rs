//! Exact computer algebra for purely inseparable quotients of the plane in
//! characteristic 2.
//!
//! The pipeline: finite fields GF(2^k) with carry-free arithmetic ([`gf2k`]),
//! sparse multivariate polynomials ([`poly`]), p-closed polynomial vector
//! fields ([`derivation`]), transport between the standard affine charts of
//! the projective plane ([`charts`]), invariant rings presented as double
//! covers Z^2 + f(X, Y) ([`invariants`]), rational double point
//! classification by blowup resolution and Tjurina numbers ([`rdp`]), and the
//! end-to-end classification driver with the exhaustive coefficient survey
//! ([`driver`]).

pub mod error;
pub mod gf2k;
pub mod poly;
pub mod zeros;
pub mod derivation;
pub mod charts;
pub mod invariants;
pub mod rdp;
pub mod driver;

pub use error::{Error, Result};
pub use gf2k::{FieldCtx, FieldElement};
pub use poly::{MultiPoly, Var};
