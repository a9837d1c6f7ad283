//! Toric quotients of convex polytopes.
//!
//! Given a polytope `Δ = ∩_j { μ : ⟨μ, X_j⟩ ≥ λ_j }` presented by facet
//! normals and offsets with entries in a declared Q-vector space of real
//! constants, together with a quasilattice containing the normals, this
//! crate computes the associated complex quotient as explicit data:
//!
//! * exact face-lattice enumeration with regular/singular classification
//!   ([`polytope`]),
//! * kernel and rank linear algebra for the quasilattice and the torus
//!   subgroup it cuts out ([`quasilattice`]),
//! * admissible supports, closed-orbit classification, stratum models and
//!   the orbit-equivalence decision ([`quotient`]),
//! * the convex moment-map flow that finds closed-orbit representatives
//!   ([`momentflow`]),
//! * link-polytope recursion and the full stratification report
//!   ([`report`]).
//!
//! All combinatorial and algebraic answers are exact over the declared
//! scalar field; only the moment flow is floating point.

pub mod error;
pub mod linalg;
pub mod momentflow;
pub mod polytope;
pub mod quasilattice;
pub mod quotient;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
