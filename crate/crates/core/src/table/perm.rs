use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{QuandleError, Result};

/// A bijection on `{1..n}`.
///
/// Stored zero-based; every public accessor speaks the one-based element
/// coding used by the Cayley tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from one-based images: `images[x - 1] = σ(x)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut zero = Vec::with_capacity(n);
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(QuandleError::InvalidPermutation(format!(
                    "image {img} of {} is outside 1..={n}",
                    i + 1
                )));
            }
            zero.push(img - 1);
        }
        Self::from_zero_based(zero)
    }

    /// Builds a permutation from zero-based images.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(QuandleError::InvalidPermutation(format!(
                    "zero-based image {img} out of range for length {n}"
                )));
            }
            if seen[img] {
                return Err(QuandleError::InvalidPermutation(format!(
                    "element {} is hit twice",
                    img + 1
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation {
            map: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Caller guarantees bijectivity.
    pub(crate) fn from_raw(map: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i as u32 == v)
        });
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// One-based image of one-based `x`. Panics when out of range.
    pub fn image(&self, x: usize) -> usize {
        self.map[x - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn at(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    /// One-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation length mismatch");
        Permutation {
            map: self.map.iter().map(|&v| other.map[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { map: inv }
    }

    /// Non-trivial cycles in canonical form: each cycle starts at its least
    /// element and cycles are sorted by that element. One-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.map[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// All cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.map[x] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    /// Renders cycles as `(7,10), (8,11), (9,12)`, identity as `(1)`.
    pub fn to_listing(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "(1)".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|e| e.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Cycle notation `(7 10)(8 11)(9 12)`; identity renders as `(1)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("(1)");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, e) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            images: Vec<usize>,
            cycles: Vec<Vec<usize>>,
            order: u64,
        }
        Repr {
            images: self.images(),
            cycles: self.cycles(),
            order: self.order(),
        }
        .serialize(serializer)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
