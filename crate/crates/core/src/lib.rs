//! Exact classification engine for compact, positively curved 7-manifolds
//! that carry a cohomogeneity-one action of a compact Lie group.
//!
//! The engine works at the Lie-algebra level: it enumerates the admissible
//! pairs (G, K°) of acting group and principal isotropy, applies the known
//! curvature obstructions case by case, and emits per-case verdicts, the
//! table of surviving candidates and the resulting theorem. A small numeric
//! module checks the Killing-field norm identity used by the rank-two torus
//! case on closed-form surfaces of revolution.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod concavity;
pub mod expr;
pub mod obstructions;
pub mod rep;
pub mod weights;

pub use algebra::{enumerate_algebras, CompactAlgebra, SimpleType};
pub use classify::{run_classification, ClassificationReport};
