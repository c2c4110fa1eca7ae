//! Cayley tables, the axiom checker and the standard families.

mod axioms;
mod families;
mod group;
mod magma;
mod perm;

pub use axioms::{
    Axiom, AxiomReport, CheckOptions, ColumnWitness, DistributivityWitness, IdempotencyWitness,
    Verdict, DEFAULT_WITNESS_CAP,
};
pub use families::{affine, conjugation, dihedral, trivial};
pub use group::{AbelianGroupSpec, Automorphism, GroupTable};
pub use magma::{Magma, Quandle};
pub use perm::Permutation;
