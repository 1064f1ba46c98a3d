//! Exact computational commutative algebra for quadric ideals.
//!
//! The crate computes Groebner bases, minimal graded free resolutions,
//! Betti tables, and Hilbert-series invariants over the rationals and over
//! prime fields, entirely in exact arithmetic. On top of that core it
//! builds the ideal families relevant to Koszul algebras defined by four
//! quadrics of height two (edge ideals, Engheta forms, Northcott linkage
//! ideals, determinantal examples) and a battery of Koszul-property checks:
//! necessary conditions read off Betti tables, G-quadratic witness search
//! by coordinate change, a structure classifier for the height-two
//! multiplicity-two case, and a deterministic sampling harness.

pub mod constructions;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod invariants;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod syzygy;

pub use error::{AlgebraError, Result};
pub use field::{CoefficientField, Scalar};
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::{standard_orders, MonomialOrder};
pub use poly::Polynomial;
pub use resolution::{betti_oracle, betti_table, BettiTable, Resolution};
pub use ring::{LinearChange, PolyRing};
