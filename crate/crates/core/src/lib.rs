//! Exact symbolic computation for the Neveu-Schwarz Lie superalgebra.
//!
//! * [`algebra`]: generators, parity, grading, subalgebras and the bracket.
//! * [`pbw`]: canonical PBW monomials in `U(N)` and straightening.
//! * [`grading`]: exponent vectors, weights and the principal total order.
//! * [`module`]: finite-dimensional `b^(t)`-module specs, their extensions,
//!   Whittaker data and degree-truncated induced modules.
//! * [`analysis`]: degree-lowering reductions, simplicity probes and
//!   singular-vector search.

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod grading;
pub mod linalg;
pub mod module;
pub mod pbw;
pub mod rational;

pub use algebra::{antisymmetry_residual, bracket, jacobi_residual, membership, Generator, HalfInt, Kind, Parity, Subalgebra};
pub use error::{Error, ParseError, Result};
pub use pbw::{ad, mul, normal_order, Element, Monomial};
pub use rational::Rational;
