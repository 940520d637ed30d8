//! Exact symbolic computation for fat point ideals in projective space.
//!
//! The crate constructs ideals of (fat) point schemes and line arrangements
//! over exact coefficient fields, computes Gröbner bases, symbolic powers,
//! and graded invariants (initial degree, Hilbert function, regularity,
//! saturation degree), and decides ideal containments by two independent
//! routes: Gröbner reduction and rank computations on derivative-conditions
//! matrices. Everything is exact - there is no floating point anywhere in
//! the computational core.

pub mod coeffs;
pub mod containment;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod ideal_ops;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod schemes;

pub use coeffs::{CoeffDomain, FieldElement};
pub use error::{Error, Result};
pub use groebner::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial};
pub use schemes::{FatPointScheme, LineArrangement, ProjectivePoint};
