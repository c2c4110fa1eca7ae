use std::fmt;
use std::ops::Deref;

use crate::error::{QuandleError, Result};
use crate::table::axioms::{AxiomReport, CheckOptions};
use crate::table::perm::Permutation;

/// A finite binary operation given by its Cayley table.
///
/// Row `x`, column `y` holds `x ▷ y`. Elements are `1..=n` at the public
/// surface. No axioms are enforced here; see [`Quandle`] for the checked
/// wrapper.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Magma {
    order: usize,
    cells: Vec<u32>,
    name: Option<String>,
}

impl Magma {
    /// Parses an `order × order` grid of one-based entries.
    pub fn from_table(order: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if order == 0 {
            return Err(QuandleError::OrderTooSmall { order, min: 1 });
        }
        if rows.len() != order {
            return Err(QuandleError::RowCount {
                expected: order,
                found: rows.len(),
            });
        }
        let mut cells = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(QuandleError::RowLength {
                    row: r + 1,
                    expected: order,
                    found: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > order {
                    return Err(QuandleError::EntryOutOfRange {
                        row: r + 1,
                        column: c + 1,
                        value: v,
                        order,
                    });
                }
                cells.push((v - 1) as u32);
            }
        }
        Ok(Magma {
            order,
            cells,
            name: None,
        })
    }

    /// Square grid; the order is taken from the row count.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table(rows.len(), rows)
    }

    /// Builds a table from a zero-based operation.
    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if order == 0 {
            return Err(QuandleError::OrderTooSmall { order, min: 1 });
        }
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = op(x, y);
                if v >= order {
                    return Err(QuandleError::EntryOutOfRange {
                        row: x + 1,
                        column: y + 1,
                        value: v + 1,
                        order,
                    });
                }
                cells.push(v as u32);
            }
        }
        Ok(Magma {
            order,
            cells,
            name: None,
        })
    }

    pub(crate) fn from_cells(order: usize, cells: Vec<u32>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        Magma {
            order,
            cells,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Zero-based `x ▷ y`.
    #[inline]
    pub(crate) fn op(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y] as usize
    }

    pub(crate) fn cells(&self) -> &[u32] {
        &self.cells
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e == 0 || e > self.order {
            Err(QuandleError::ElementOutOfRange {
                element: e,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// `x ▷ y` for one-based elements.
    pub fn apply(&self, x: usize, y: usize) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.op(x - 1, y - 1) + 1)
    }

    /// One-based rows of the table.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize + 1).collect())
            .collect()
    }

    /// First collision in column `y` (zero-based): `(row_a, row_b, value)`.
    pub(crate) fn column_collision0(&self, y: usize) -> Option<(usize, usize, usize)> {
        let mut seen = vec![usize::MAX; self.order];
        for x in 0..self.order {
            let v = self.op(x, y);
            if seen[v] != usize::MAX {
                return Some((seen[v], x, v));
            }
            seen[v] = x;
        }
        None
    }

    /// The column map `x ↦ x ▷ y` as a zero-based permutation.
    pub(crate) fn translation0(&self, y: usize) -> Result<Permutation> {
        if let Some((a, b, v)) = self.column_collision0(y) {
            return Err(QuandleError::ColumnNotBijective {
                column: y + 1,
                first: a + 1,
                second: b + 1,
                value: v + 1,
            });
        }
        Ok(Permutation::from_raw(
            (0..self.order).map(|x| self.op(x, y) as u32).collect(),
        ))
    }

    /// The right translation `R_y : x ↦ x ▷ y`.
    pub fn right_translation(&self, y: usize) -> Result<Permutation> {
        self.check_element(y)?;
        self.translation0(y - 1)
    }

    /// The unique `z` with `z ▷ y = x`.
    pub fn dual_apply(&self, x: usize, y: usize) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        let col = self.translation0(y - 1)?;
        Ok(col.inverse().at(x - 1) + 1)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        AxiomReport::check(self, &CheckOptions::default())
    }

    pub fn check_axioms_with(&self, options: &CheckOptions) -> AxiomReport {
        AxiomReport::check(self, options)
    }

    /// Early-exit axiom test without witness collection.
    pub fn is_quandle(&self) -> bool {
        let n = self.order;
        if (0..n).any(|x| self.op(x, x) != x) {
            return false;
        }
        if (0..n).any(|y| self.column_collision0(y).is_some()) {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(self.op(x, z), self.op(y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Transport of structure along `sigma`: the returned table satisfies
    /// `σ(x) ▷' σ(y) = σ(x ▷ y)`.
    pub fn relabel(&self, sigma: &Permutation) -> Magma {
        assert_eq!(sigma.len(), self.order, "relabeling length mismatch");
        let n = self.order;
        let mut cells = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[sigma.at(x) * n + sigma.at(y)] = sigma.at(self.op(x, y)) as u32;
            }
        }
        Magma {
            order: n,
            cells,
            name: self.name.clone(),
        }
    }

    /// Same operation, name dropped. Equality on tables compares names too.
    pub fn same_table(&self, other: &Magma) -> bool {
        self.order == other.order && self.cells == other.cells
    }
}

impl fmt::Display for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::emit_table(self))
    }
}

/// A table that has passed all three quandle axioms.
///
/// Holds the inverse column maps so the dual operation is a lookup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    table: Magma,
    dual: Vec<u32>,
}

impl Quandle {
    /// Validates `table`; on failure the full report is returned in the error.
    pub fn new(table: Magma) -> Result<Self> {
        let report = table.check_axioms();
        if !report.overall {
            return Err(QuandleError::NotAQuandle(Box::new(report)));
        }
        Ok(Self::assume_valid(table))
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(Magma::from_rows(rows)?)
    }

    /// Families whose axioms hold by construction skip the cubic scan in
    /// release builds.
    pub(crate) fn assume_valid(table: Magma) -> Self {
        debug_assert!(table.is_quandle(), "table is not a quandle");
        let n = table.order;
        let mut dual = vec![0u32; n * n];
        for y in 0..n {
            for x in 0..n {
                dual[table.op(x, y) * n + y] = x as u32;
            }
        }
        Quandle { table, dual }
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        Quandle {
            table: self.table.with_name(name),
            dual: self.dual,
        }
    }

    pub fn as_magma(&self) -> &Magma {
        &self.table
    }

    pub fn into_magma(self) -> Magma {
        self.table
    }

    /// The dual operation `x ▷⁻¹ y`, one-based, by table lookup.
    pub fn dual(&self, x: usize, y: usize) -> Result<usize> {
        self.table.check_element(x)?;
        self.table.check_element(y)?;
        Ok(self.dual[(x - 1) * self.table.order + y - 1] as usize + 1)
    }

    /// `R_y` as a zero-based permutation.
    pub(crate) fn translation(&self, y: usize) -> Permutation {
        Permutation::from_raw(
            (0..self.table.order)
                .map(|x| self.table.op(x, y) as u32)
                .collect(),
        )
    }

    /// All right translations `R_1..R_n`.
    pub fn translations(&self) -> Vec<Permutation> {
        (0..self.order()).map(|y| self.translation(y)).collect()
    }

    /// Relabeling preserves the axioms.
    pub fn relabel(&self, sigma: &Permutation) -> Quandle {
        Quandle::assume_valid(self.table.relabel(sigma))
    }
}

impl Deref for Quandle {
    type Target = Magma;

    fn deref(&self) -> &Magma {
        &self.table
    }
}

impl TryFrom<Magma> for Quandle {
    type Error = QuandleError;

    fn try_from(m: Magma) -> Result<Self> {
        Quandle::new(m)
    }
}

impl From<Quandle> for Magma {
    fn from(q: Quandle) -> Magma {
        q.table
    }
}

impl fmt::Display for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.table.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_errors_report_position() {
        let err = Magma::from_rows(&[vec![1, 2], vec![1]]).unwrap_err();
        assert!(matches!(err, QuandleError::RowLength { row: 2, .. }));
        let err = Magma::from_table(2, &[vec![1, 2], vec![3, 1]]).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::EntryOutOfRange {
                row: 2,
                column: 1,
                value: 3,
                ..
            }
        ));
        let err = Magma::from_table(3, &[vec![1, 2, 3]]).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::RowCount {
                expected: 3,
                found: 1
            }
        ));
    }

    #[test]
    fn singleton_and_row_constant() {
        let one = Magma::from_rows(&[vec![1]]).unwrap();
        assert_eq!(one.order(), 1);
        assert!(one.check_axioms().overall);

        let bad = Magma::from_rows(&[vec![1, 2], vec![1, 2]]).unwrap();
        assert_eq!(bad.order(), 2);
        assert!(!bad.check_axioms().overall);
        assert!(Quandle::new(bad).is_err());
    }

    #[test]
    fn apply_range_checked() {
        let m = Magma::from_rows(&[vec![1, 1], vec![2, 2]]).unwrap();
        assert_eq!(m.apply(2, 1).unwrap(), 2);
        assert!(m.apply(0, 1).is_err());
        assert!(m.apply(1, 3).is_err());
    }

    #[test]
    fn dual_apply_rejects_collision() {
        let m = Magma::from_rows(&[vec![1, 2], vec![1, 2]]).unwrap();
        let err = m.dual_apply(1, 1).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::ColumnNotBijective {
                column: 1,
                first: 1,
                second: 2,
                value: 1
            }
        ));
    }
}
