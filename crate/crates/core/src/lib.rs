//! Finite quandles: Cayley-table verification, the order-3n product
//! construction over a phase rule, inner-automorphism structure,
//! property predicates and isomorphism classification.
//!
//! Elements are numbered `1..=n` at every public entry point.
//!
//! ```
//! use quandles::{dihedral, product3, IndexConvention, PhaseRule};
//!
//! let base = dihedral(3).unwrap();
//! let p = product3(&base, &PhaseRule::swap(0, 1).unwrap(), IndexConvention::Xa);
//! assert_eq!(p.table.order(), 9);
//! assert!(p.table.check_axioms().overall);
//! ```

pub mod classify;
pub mod cli;
pub mod construct;
pub mod datasets;
pub mod error;
pub mod format;
pub mod inner;
pub mod properties;
pub mod table;

pub use classify::{
    are_isomorphic, census, classify_family, find_isomorphism, IsoClass, IsoResult,
};
pub use construct::{
    audit_transfer, decompose3, enumerate_phase_rules, product3, validate_rule, IndexConvention,
    PhaseRule, Product3,
};
pub use error::{QuandleError, Result};
pub use inner::{inn_group, inner_structure, orbits, InnerStructure, PermGroup};
pub use table::{
    affine, conjugation, dihedral, trivial, AbelianGroupSpec, Automorphism, AxiomReport,
    CheckOptions, GroupTable, Magma, Permutation, Quandle,
};
