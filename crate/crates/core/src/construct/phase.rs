use std::fmt;

use serde::Serialize;

use crate::error::{QuandleError, Result};
use crate::table::{AxiomReport, CheckOptions, Magma};

/// The second-coordinate rule `f : Z₃ × Z₃ → Z₃` of an order-3n product,
/// `(x,a) ▷ (y,b) = (x ★ y, f(a,b))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PhaseRule {
    /// `table[a][b] = f(a, b)`.
    table: [[u8; 3]; 3],
    name: String,
}

impl PhaseRule {
    pub fn new(table: [[u8; 3]; 3], name: impl Into<String>) -> Result<Self> {
        if let Some(v) = table.iter().flatten().find(|&&v| v > 2) {
            return Err(QuandleError::InvalidPhaseRule(format!(
                "entry {v} is outside 0..=2"
            )));
        }
        Ok(PhaseRule {
            table,
            name: name.into(),
        })
    }

    pub(crate) fn from_fn(name: &str, f: impl Fn(u8, u8) -> u8) -> Self {
        let mut table = [[0u8; 3]; 3];
        for a in 0..3u8 {
            for b in 0..3u8 {
                table[a as usize][b as usize] = f(a, b) % 3;
            }
        }
        PhaseRule {
            table,
            name: name.to_string(),
        }
    }

    /// `f(a, b) = a`.
    pub fn trivial() -> Self {
        Self::from_fn("trivial", |a, _| a)
    }

    /// `f(a, b) = 2b − a`.
    pub fn dihedral() -> Self {
        Self::from_fn("dihedral", |a, b| (2 * b + 3 - a) % 3)
    }

    /// Column `c` (the element other than `i` and `j`) swaps `i` and `j`;
    /// every other column is the identity.
    pub fn swap(i: u8, j: u8) -> Result<Self> {
        if i == j || i > 2 || j > 2 {
            return Err(QuandleError::InvalidPhaseRule(format!(
                "swap needs two distinct elements of Z3, got {i} and {j}"
            )));
        }
        let (i, j) = (i.min(j), i.max(j));
        let c = 3 - i - j;
        let name = format!("swap{i}{j}");
        Ok(Self::from_fn(&name, |a, b| {
            if b != c {
                a
            } else if a == i {
                j
            } else if a == j {
                i
            } else {
                a
            }
        }))
    }

    /// Case-table rule `thm31`, taken literally (mod 3):
    /// `a+b+2` if `a=b=1` or `(a,b)=(0,1)`; `a` if `a=b=2` or `(a,b)=(2,1)`;
    /// `a+b` otherwise.
    pub fn literal_rule_a() -> Self {
        Self::from_fn("thm31", |a, b| match (a, b) {
            (1, 1) | (0, 1) => a + b + 2,
            (2, 2) | (2, 1) => a,
            _ => a + b,
        })
    }

    /// Case-table rule `thm32`, taken literally (mod 3):
    /// `a+b+2` if `(a,b) ∈ {(1,1),(0,1),(2,1)}`; `a+b+1` if
    /// `(a,b) ∈ {(0,2),(1,2)}`; `a+b` otherwise.
    pub fn literal_rule_b() -> Self {
        Self::from_fn("thm32", |a, b| match (a, b) {
            (1, 1) | (0, 1) | (2, 1) => a + b + 2,
            (0, 2) | (1, 2) => a + b + 1,
            _ => a + b,
        })
    }

    /// Names accepted by [`PhaseRule::by_name`].
    pub const BUILTIN_NAMES: [&'static str; 7] = [
        "trivial", "dihedral", "swap01", "swap02", "swap12", "thm31", "thm32",
    ];

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "trivial" => Some(Self::trivial()),
            "dihedral" => Some(Self::dihedral()),
            "swap01" => Self::swap(0, 1).ok(),
            "swap02" => Self::swap(0, 2).ok(),
            "swap12" => Self::swap(1, 2).ok(),
            "thm31" => Some(Self::literal_rule_a()),
            "thm32" => Some(Self::literal_rule_b()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn table(&self) -> [[u8; 3]; 3] {
        self.table
    }

    #[inline]
    pub fn get(&self, a: u8, b: u8) -> u8 {
        self.table[a as usize][b as usize]
    }

    /// `(Z₃, f)` as an order-3 table, `a ↦ a + 1`.
    pub fn as_magma(&self) -> Magma {
        Magma::from_fn(3, |a, b| self.table[a][b] as usize)
            .expect("phase entries are in range")
            .with_name(self.name.clone())
    }

    pub fn is_valid(&self) -> bool {
        self.as_magma().is_quandle()
    }

    /// Same table, ignoring the label.
    pub fn same_rule(&self, other: &PhaseRule) -> bool {
        self.table == other.table
    }

    /// Attaches the built-in name when the table matches one.
    pub(crate) fn named(self) -> Self {
        for name in Self::BUILTIN_NAMES {
            if let Some(b) = Self::by_name(name) {
                if b.table == self.table {
                    return b;
                }
            }
        }
        self
    }
}

impl fmt::Display for PhaseRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::emit_phase(self))
    }
}

/// Runs the axiom checker on `(Z₃, f)`; witnesses use the `{0,1,2}` coding.
pub fn validate_rule(rule: &PhaseRule) -> AxiomReport {
    rule.as_magma()
        .check_axioms_with(&CheckOptions::exhaustive())
        .relabel(|e| e - 1)
}

/// Every `f` for which `(Z₃, f)` is a quandle, ordered lexicographically by
/// table (row-major).
pub fn enumerate_phase_rules() -> Vec<PhaseRule> {
    // Axioms force f(a,a) = a and each column to be a permutation fixing b,
    // so each column is either the identity or the transposition of the
    // other two elements. The remaining self-distributivity check filters.
    let mut out = Vec::new();
    for mask in 0u8..8 {
        let rule = PhaseRule::from_fn("", |a, b| {
            if mask & (1 << b) == 0 || a == b {
                a
            } else {
                3 - a - b
            }
        });
        if rule.is_valid() {
            out.push(rule);
        }
    }
    out.sort();
    out.into_iter()
        .enumerate()
        .map(|(i, r)| r.with_name(format!("rule{}", i + 1)).named())
        .collect()
}
