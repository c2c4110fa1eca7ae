//! Order-3n products `Q × Z₃` driven by a phase rule, their decomposition,
//! and the property-transfer audit.

mod phase;
mod product;
mod transfer;

pub use phase::{enumerate_phase_rules, validate_rule, PhaseRule};
pub use product::{decompose3, product3, IndexConvention, Product3};
pub use transfer::{audit_transfer, TransferProperty, TransferRecord, TransferReport};
