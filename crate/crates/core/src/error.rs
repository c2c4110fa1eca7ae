use thiserror::Error;

use crate::table::AxiomReport;

/// Errors raised by table construction, the product constructions and the
/// search routines.
#[derive(Debug, Error)]
pub enum QuandleError {
    #[error("table shape mismatch: expected {expected} entries in row {row}, found {found}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table shape mismatch: expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("entry {value} at row {row}, column {column} is outside 1..={order}")]
    EntryOutOfRange {
        row: usize,
        column: usize,
        value: usize,
        order: usize,
    },
    #[error("element {element} is outside 1..={order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("order must be at least {min}, got {order}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("column {column} is not a bijection: rows {first} and {second} both map to {value}")]
    ColumnNotBijective {
        column: usize,
        first: usize,
        second: usize,
        value: usize,
    },
    #[error("table fails the quandle axioms")]
    NotAQuandle(Box<AxiomReport>),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("invalid phase rule: {0}")]
    InvalidPhaseRule(String),
    #[error("order {order} is not divisible by 3")]
    NotDivisibleByThree { order: usize },
    #[error("search budget exceeded: order {order} exceeds limit {limit}")]
    BudgetExceeded { order: usize, limit: usize },
    #[error("group closure exceeded the materialization cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("census order {order} outside supported range 1..=6")]
    CensusOutOfRange { order: usize },
}

pub type Result<T, E = QuandleError> = std::result::Result<T, E>;
