//! Group construction: Cayley tables, presentations, coset enumeration,
//! normal-form product rules and the named catalogue.

pub mod catalogue;
pub mod coset;
pub mod normal_form;
pub mod presentation;
pub mod products;
pub mod reference;
pub mod table;

pub use catalogue::{
    build_catalogue, build_named, covering_map, product_normal_form, CatalogueGroup, CatalogueKey, NormalFormTuple,
};
pub use coset::todd_coxeter;
pub use presentation::{Presentation, Word};
pub use products::{abelian, cyclic, direct_product, semidirect_product, symmetric, ActionSpec};
pub use reference::{alternating4, dicyclic, dihedral, parse_reference, small_groups};
