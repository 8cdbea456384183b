//! Second cohomology with trivial cyclic coefficients, Schur multipliers and
//! the exact linear algebra behind them.

pub mod cocycle;
pub mod extension;
pub mod intmat;
pub mod modular;

pub use cocycle::{
    bockstein, h2_trivial_coefficients, hom_to_cyclic, multiplier_report, schur_multiplier, AbelianStructure,
    CocycleTable, CohomologyOptions, MultiplierReport, DEFAULT_SIZE_CAP,
};
pub use extension::extension_from_cocycle;
pub use intmat::{cokernel_invariants, smith_normal_form, IntMatrix, Snf};
