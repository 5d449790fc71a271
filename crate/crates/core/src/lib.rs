//! Exact matrix models of strongly compact closed categories with biproducts.
//!
//! Objects are [`Shape`]s, morphisms are dense [`Morphism`] matrices over a
//! [`Scalar`] semiring. On top of that sit structural isomorphisms
//! ([`iso`]), the quantum layer ([`qm`]) and executable checks of the
//! teleportation family of protocols ([`protocols`]). [`laws`] runs seeded
//! randomized checks of the categorical laws.

pub mod error;
pub mod gen;
pub mod iso;
pub mod laws;
pub mod morphism;
pub mod protocols;
pub mod qm;
pub mod scalar;
pub mod shape;

pub use error::{Error, Result};
pub use iso::{structural_iso, IsoKind};
pub use morphism::Morphism;
pub use scalar::{Boolean, ComplexRootTwo, Scalar, SemiringKind};
pub use shape::{BasisPath, Shape, ShapeKind};
