use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::construct::phase::PhaseRule;
use crate::error::{QuandleError, Result};
use crate::table::Magma;

/// How a pair `(x, a)` with `x ∈ 1..=n`, `a ∈ Z₃` is numbered in `1..=3n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexConvention {
    /// `(x, a) ↦ 3(x − 1) + a + 1`: phase varies fastest.
    #[default]
    Xa,
    /// `(x, a) ↦ n·a + x`: base element varies fastest.
    Ax,
}

impl IndexConvention {
    /// Zero-based pair to zero-based index.
    #[inline]
    pub fn index0(self, n: usize, x: usize, a: usize) -> usize {
        match self {
            IndexConvention::Xa => 3 * x + a,
            IndexConvention::Ax => n * a + x,
        }
    }

    /// Zero-based index to zero-based pair.
    #[inline]
    pub fn split0(self, n: usize, k: usize) -> (usize, usize) {
        match self {
            IndexConvention::Xa => (k / 3, k % 3),
            IndexConvention::Ax => (k % n, k / n),
        }
    }

    /// One-based `x`, phase `a` to one-based index.
    pub fn index(self, n: usize, x: usize, a: u8) -> usize {
        self.index0(n, x - 1, a as usize) + 1
    }

    /// One-based index to one-based `x` and phase.
    pub fn split(self, n: usize, k: usize) -> (usize, u8) {
        let (x, a) = self.split0(n, k - 1);
        (x + 1, a as u8)
    }
}

impl fmt::Display for IndexConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexConvention::Xa => "xa",
            IndexConvention::Ax => "ax",
        })
    }
}

impl FromStr for IndexConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "xa" => Ok(IndexConvention::Xa),
            "ax" => Ok(IndexConvention::Ax),
            other => Err(format!(
                "unknown index convention `{other}` (expected xa or ax)"
            )),
        }
    }
}

/// Result of [`product3`].
#[derive(Debug, Clone)]
pub struct Product3 {
    pub table: Magma,
    /// Set when the base has order below 3, outside the range the
    /// construction is stated for.
    pub small_base: bool,
}

/// `(x, a) ▷ (y, b) = (x ★ y, f(a, b))` on `base × Z₃`. Never validated.
pub fn product3(base: &Magma, rule: &PhaseRule, conv: IndexConvention) -> Product3 {
    let n = base.order();
    let size = 3 * n;
    let mut cells = vec![0u32; size * size];
    for k in 0..size {
        let (x, a) = conv.split0(n, k);
        for l in 0..size {
            let (y, b) = conv.split0(n, l);
            let z = base.op(x, y);
            let c = rule.get(a as u8, b as u8) as usize;
            cells[k * size + l] = conv.index0(n, z, c) as u32;
        }
    }
    let name = match base.name() {
        Some(bn) => format!("{bn} x Z3[{}]", rule.name()),
        None => format!("product3[{}]", rule.name()),
    };
    Product3 {
        table: Magma::from_cells(size, cells).with_name(name),
        small_base: n < 3,
    }
}

/// Splits `q` as `product3(base, rule, conv)` when it factors exactly.
pub fn decompose3(q: &Magma, conv: IndexConvention) -> Result<Option<(Magma, PhaseRule)>> {
    let size = q.order();
    if !size.is_multiple_of(3) {
        return Err(QuandleError::NotDivisibleByThree { order: size });
    }
    let n = size / 3;
    const UNSET: u32 = u32::MAX;
    let mut base = vec![UNSET; n * n];
    let mut phase = [[u8::MAX; 3]; 3];
    for k in 0..size {
        let (x, a) = conv.split0(n, k);
        for l in 0..size {
            let (y, b) = conv.split0(n, l);
            let (z, c) = conv.split0(n, q.op(k, l));
            let cell = &mut base[x * n + y];
            if *cell == UNSET {
                *cell = z as u32;
            } else if *cell != z as u32 {
                return Ok(None);
            }
            let ph = &mut phase[a][b];
            if *ph == u8::MAX {
                *ph = c as u8;
            } else if *ph != c as u8 {
                return Ok(None);
            }
        }
    }
    let rule = PhaseRule::new(phase, "decomposed")?.named();
    let base = Magma::from_cells(n, base);
    Ok(Some((base, rule)))
}
