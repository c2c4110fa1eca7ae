//! Invariant profiles, isomorphism search, family classification and the
//! small-order census.

mod census;
mod family;
mod iso;
mod profile;

pub use census::{census, labeled_quandles, CENSUS_MAX_ORDER};
pub use family::{classify_family, IsoClass};
pub use iso::{
    are_isomorphic, find_isomorphism, is_homomorphism, Certificate, IsoResult, IsoVerdict,
};
pub use profile::{InvariantProfile, ProfileDifference};
