//! Exact-arithmetic representation theory for compact connected Lie groups.
//!
//! The crate computes weight multiplicities, tensor and branching
//! decompositions, the rational cone spanned by the nonzero branching
//! multiplicities, quasi-polynomial models of stretched multiplicities,
//! and fixed-point / symmetric-algebra index quantities, all over exact
//! integers and rationals.  Groups are described by a product of simple
//! Cartan types and torus factors ("A2", "A1xA1", "B2xT1", ...); weights
//! are integer vectors in fundamental-weight coordinates.
//!
//! Module map:
//! - [`cartan`]: type grammar for products of simple factors and tori
//! - [`roots`]: root systems, Weyl action, dimension formula, centralizers
//! - [`character`]: formal characters and decomposition oracles
//! - [`branching`]: weight-lattice embeddings and branching tables
//! - [`cone`]: exact rational cones via the double description method
//! - [`quasipoly`]: stretched multiplicities and quasi-polynomial fitting
//! - [`localization`]: fixed-point character sums and Sym-algebra indices
//! - [`verify`]: executable consistency suites with machine-readable reports
//!
//! Everything is deterministic: maps are ordered, randomized suites take
//! explicit seeds, and all serialized forms are canonical byte-for-byte.

pub mod branching;
pub mod cartan;
pub mod character;
pub mod cone;
pub mod error;
pub mod linalg;
pub mod localization;
pub mod lp;
pub mod quasipoly;
pub mod roots;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
