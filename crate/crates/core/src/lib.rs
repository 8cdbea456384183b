//! Exact computational toolkit for small finite groups and their central
//! extensions.
//!
//! Every group is carried as an explicit Cayley table ([`GroupTable`]). Tables
//! are produced either from closed-form normal-form product rules
//! ([`group::catalogue`]) or from finite presentations via Todd–Coxeter coset
//! enumeration ([`group::coset`]), and every structural statement is checked
//! by brute force against the table:
//!
//! - [`structure`]: centers, derived subgroups, conjugacy classes, quotients,
//!   homomorphisms and isomorphism testing;
//! - [`cohomology`]: Smith normal forms, `H²(G, ℤ_m)` and the Schur multiplier;
//! - [`extensions`]: efficiency of central extensions, one-step extensions
//!   through commuting pairs, and the exhaustive stairway search;
//! - [`characters`]: exact character tables by Dixon's modular method and the
//!   spin-type partition of a central extension.

pub mod characters;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod group;
pub mod structure;

pub use error::{Error, Result};
pub use group::table::{verify_axioms, AxiomReport, GroupTable};
pub use structure::hom::Homomorphism;
pub use structure::subgroup::Subgroup;
