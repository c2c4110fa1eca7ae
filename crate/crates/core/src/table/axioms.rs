use std::fmt;

use serde::Serialize;

use crate::table::magma::Magma;

pub const DEFAULT_WITNESS_CAP: usize = 10;

/// Controls how many witnesses each axiom verdict keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// `None` keeps every witness.
    pub witness_cap: Option<usize>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            witness_cap: Some(DEFAULT_WITNESS_CAP),
        }
    }
}

impl CheckOptions {
    pub fn exhaustive() -> Self {
        CheckOptions { witness_cap: None }
    }

    pub fn capped(cap: usize) -> Self {
        CheckOptions {
            witness_cap: Some(cap),
        }
    }
}

/// `x ▷ x = value ≠ x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdempotencyWitness {
    pub x: usize,
    pub value: usize,
}

/// Column `column` sends rows `rows.0` and `rows.1` to the same `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColumnWitness {
    pub column: usize,
    pub rows: (usize, usize),
    pub value: usize,
}

/// `(x ▷ y) ▷ z = lhs` but `(x ▷ z) ▷ (y ▷ z) = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistributivityWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict<W> {
    pub passed: bool,
    /// Total number of violations found, independent of the cap.
    pub violations: usize,
    pub witnesses: Vec<W>,
}

impl<W> Verdict<W> {
    fn collect(cap: Option<usize>, all: impl Iterator<Item = W>) -> Self {
        let mut witnesses = Vec::new();
        let mut violations = 0;
        for w in all {
            violations += 1;
            if cap.is_none_or(|c| witnesses.len() < c) {
                witnesses.push(w);
            }
        }
        Verdict {
            passed: violations == 0,
            violations,
            witnesses,
        }
    }

    fn map<V>(&self, f: impl Fn(&W) -> V) -> Verdict<V> {
        Verdict {
            passed: self.passed,
            violations: self.violations,
            witnesses: self.witnesses.iter().map(f).collect(),
        }
    }
}

/// Per-axiom verdicts for a table.
///
/// A failing verdict always carries at least one witness unless the cap is
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub order: usize,
    pub idempotency: Verdict<IdempotencyWitness>,
    pub right_invertibility: Verdict<ColumnWitness>,
    pub self_distributivity: Verdict<DistributivityWitness>,
    pub overall: bool,
}

/// The three axioms, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Idempotency,
    RightInvertibility,
    SelfDistributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Idempotency => "idempotency",
            Axiom::RightInvertibility => "right invertibility",
            Axiom::SelfDistributivity => "self-distributivity",
        })
    }
}

impl AxiomReport {
    pub(crate) fn check(m: &Magma, options: &CheckOptions) -> Self {
        let n = m.order();
        let cap = options.witness_cap;

        let idempotency = Verdict::collect(
            cap,
            (0..n).filter_map(|x| {
                let v = m.op(x, x);
                (v != x).then_some(IdempotencyWitness {
                    x: x + 1,
                    value: v + 1,
                })
            }),
        );

        let right_invertibility = Verdict::collect(
            cap,
            (0..n).filter_map(|y| {
                m.column_collision0(y).map(|(a, b, v)| ColumnWitness {
                    column: y + 1,
                    rows: (a + 1, b + 1),
                    value: v + 1,
                })
            }),
        );

        let triples =
            (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
        let self_distributivity = Verdict::collect(
            cap,
            triples.filter_map(|(x, y, z)| {
                let lhs = m.op(m.op(x, y), z);
                let rhs = m.op(m.op(x, z), m.op(y, z));
                (lhs != rhs).then_some(DistributivityWitness {
                    x: x + 1,
                    y: y + 1,
                    z: z + 1,
                    lhs: lhs + 1,
                    rhs: rhs + 1,
                })
            }),
        );

        let overall =
            idempotency.passed && right_invertibility.passed && self_distributivity.passed;
        AxiomReport {
            order: n,
            idempotency,
            right_invertibility,
            self_distributivity,
            overall,
        }
    }

    /// Axioms that failed, in report order.
    pub fn failed_axioms(&self) -> Vec<Axiom> {
        let mut out = Vec::new();
        if !self.idempotency.passed {
            out.push(Axiom::Idempotency);
        }
        if !self.right_invertibility.passed {
            out.push(Axiom::RightInvertibility);
        }
        if !self.self_distributivity.passed {
            out.push(Axiom::SelfDistributivity);
        }
        out
    }

    /// Rewrites every element in the witnesses through `f`. Used to report
    /// phase-rule checks in `{0,1,2}` coordinates.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> AxiomReport {
        AxiomReport {
            order: self.order,
            idempotency: self.idempotency.map(|w| IdempotencyWitness {
                x: f(w.x),
                value: f(w.value),
            }),
            right_invertibility: self.right_invertibility.map(|w| ColumnWitness {
                column: f(w.column),
                rows: (f(w.rows.0), f(w.rows.1)),
                value: f(w.value),
            }),
            self_distributivity: self.self_distributivity.map(|w| DistributivityWitness {
                x: f(w.x),
                y: f(w.y),
                z: f(w.z),
                lhs: f(w.lhs),
                rhs: f(w.rhs),
            }),
            overall: self.overall,
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn status(passed: bool) -> &'static str {
            if passed {
                "pass"
            } else {
                "FAIL"
            }
        }
        writeln!(f, "order: {}", self.order)?;
        writeln!(
            f,
            "idempotency: {} ({} violations)",
            status(self.idempotency.passed),
            self.idempotency.violations
        )?;
        for w in &self.idempotency.witnesses {
            writeln!(f, "  {} > {} = {}", w.x, w.x, w.value)?;
        }
        writeln!(
            f,
            "right invertibility: {} ({} violations)",
            status(self.right_invertibility.passed),
            self.right_invertibility.violations
        )?;
        for w in &self.right_invertibility.witnesses {
            writeln!(
                f,
                "  column {}: {} > {} = {} > {} = {}",
                w.column, w.rows.0, w.column, w.rows.1, w.column, w.value
            )?;
        }
        writeln!(
            f,
            "self-distributivity: {} ({} violations)",
            status(self.self_distributivity.passed),
            self.self_distributivity.violations
        )?;
        for w in &self.self_distributivity.witnesses {
            writeln!(
                f,
                "  ({x} > {y}) > {z} = {} but ({x} > {z}) > ({y} > {z}) = {}",
                w.lhs,
                w.rhs,
                x = w.x,
                y = w.y,
                z = w.z
            )?;
        }
        write!(f, "overall: {}", status(self.overall))
    }
}
