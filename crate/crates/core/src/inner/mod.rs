//! Inner automorphism group, orbits and the per-generator listing.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{QuandleError, Result};
use crate::table::{Magma, Permutation};

pub const DEFAULT_MATERIALIZE_CAP: usize = 1_000_000;

/// One right translation with its order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorEntry {
    /// One-based element `y` of `R_y`.
    pub element: usize,
    pub translation: Permutation,
    pub order: u64,
}

/// Cycle decompositions of all right translations `R_1..R_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InnerStructure {
    pub generators: Vec<GeneratorEntry>,
    /// Order of `R_y` for every `y`, sorted ascending.
    pub summary: Vec<u64>,
    pub count_of_order: BTreeMap<u64, usize>,
}

impl InnerStructure {
    pub fn order(&self) -> usize {
        self.generators.len()
    }

    pub fn count(&self, order: u64) -> usize {
        self.count_of_order.get(&order).copied().unwrap_or(0)
    }

    /// `{1:3,2:9}`.
    pub fn spectrum_string(&self) -> String {
        spectrum_string(&self.count_of_order)
    }
}

pub(crate) fn spectrum_string(m: &BTreeMap<u64, usize>) -> String {
    let inner: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", inner.join(","))
}

/// Lines like `R(4) = (7,10), (8,11), (9,12)`.
impl fmt::Display for InnerStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "R({}) = {}", g.element, g.translation.to_listing())?;
        }
        for (order, count) in &self.count_of_order {
            writeln!(f, "order {order}: {count}")?;
        }
        Ok(())
    }
}

/// Requires every column to be a bijection.
pub fn inner_structure(q: &Magma) -> Result<InnerStructure> {
    let mut generators = Vec::with_capacity(q.order());
    let mut count_of_order = BTreeMap::new();
    for y in 0..q.order() {
        let translation = q.translation0(y)?;
        let order = translation.order();
        *count_of_order.entry(order).or_insert(0) += 1;
        generators.push(GeneratorEntry {
            element: y + 1,
            translation,
            order,
        });
    }
    let mut summary: Vec<u64> = generators.iter().map(|g| g.order).collect();
    summary.sort_unstable();
    Ok(InnerStructure {
        generators,
        summary,
        count_of_order,
    })
}

/// A permutation group given by generators, with its element list.
#[derive(Debug, Clone, Serialize)]
pub struct PermGroup {
    pub generators: Vec<Permutation>,
    /// Breadth-first closure order, identity first.
    pub elements: Vec<Permutation>,
    pub order: usize,
}

impl PermGroup {
    /// Closure of `generators` on `degree` points. Fails once more than `cap`
    /// elements have been produced.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = elements[i].then(g);
                if seen.insert(next.clone()) {
                    if elements.len() >= cap {
                        return Err(QuandleError::CapExceeded { cap });
                    }
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let order = elements.len();
        Ok(PermGroup {
            generators: gens,
            elements,
            order,
        })
    }

    /// Element count per element order.
    pub fn order_spectrum(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for e in &self.elements {
            *m.entry(e.order()).or_insert(0) += 1;
        }
        m
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }
}

/// The group generated by all right translations.
pub fn inn_group(q: &Magma, materialize_cap: usize) -> Result<PermGroup> {
    let gens = (0..q.order())
        .map(|y| q.translation0(y))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::generate(q.order(), gens, materialize_cap)
}

/// Orbits of the right-translation group, each sorted, ordered by least
/// element. One-based.
pub fn orbits(q: &Magma) -> Result<Vec<Vec<usize>>> {
    let n = q.order();
    for y in 0..n {
        q.translation0(y)?;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, q.op(x, y)));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        classes.entry(r).or_default().push(x + 1);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort_by_key(|c| c[0]);
    Ok(out)
}
