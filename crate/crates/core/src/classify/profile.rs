use std::collections::BTreeMap;

use serde::Serialize;

use crate::inner::spectrum_string;
use crate::properties::PropertyFlags;
use crate::table::Quandle;

/// Isomorphism-invariant fingerprint. Equal profiles are necessary for
/// isomorphism, never sufficient.
///
/// Field order is the comparison order: order structure of the generators
/// first, then the centralizer pattern, then the finer data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvariantProfile {
    pub order: usize,
    /// Number of right translations of each order.
    pub spectrum: BTreeMap<u64, usize>,
    /// Centralizer sizes, ascending.
    pub centralizer_sizes: Vec<usize>,
    /// Cycle types of the right translations, sorted.
    pub cycle_types: Vec<Vec<usize>>,
    /// Orbit sizes, ascending.
    pub orbit_sizes: Vec<usize>,
    pub flags: PropertyFlags,
}

/// First invariant on which two profiles differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileDifference {
    pub invariant: &'static str,
    pub left: String,
    pub right: String,
}

impl InvariantProfile {
    pub fn of(q: &Quandle) -> Self {
        let n = q.order();
        let translations = q.translations();
        let mut spectrum = BTreeMap::new();
        for t in &translations {
            *spectrum.entry(t.order()).or_insert(0) += 1;
        }
        let mut centralizer_sizes: Vec<usize> = (0..n)
            .map(|a| (0..n).filter(|&x| q.op(x, a) == q.op(a, x)).count())
            .collect();
        centralizer_sizes.sort_unstable();
        let mut cycle_types: Vec<Vec<usize>> =
            translations.iter().map(|t| t.cycle_type()).collect();
        cycle_types.sort();
        let mut orbit_sizes: Vec<usize> = crate::inner::orbits(q)
            .expect("quandle columns are bijective")
            .iter()
            .map(Vec::len)
            .collect();
        orbit_sizes.sort_unstable();
        InvariantProfile {
            order: n,
            spectrum,
            centralizer_sizes,
            cycle_types,
            orbit_sizes,
            flags: PropertyFlags::of(q),
        }
    }

    pub fn first_difference(&self, other: &InvariantProfile) -> Option<ProfileDifference> {
        fn diff<T: PartialEq + std::fmt::Debug>(
            name: &'static str,
            a: &T,
            b: &T,
            render: impl Fn(&T) -> String,
        ) -> Option<ProfileDifference> {
            (a != b).then(|| ProfileDifference {
                invariant: name,
                left: render(a),
                right: render(b),
            })
        }
        let dbg = |v: &dyn std::fmt::Debug| format!("{v:?}");
        diff("order", &self.order, &other.order, |v| v.to_string())
            .or_else(|| {
                diff(
                    "generator order spectrum",
                    &self.spectrum,
                    &other.spectrum,
                    spectrum_string,
                )
            })
            .or_else(|| {
                diff(
                    "centralizer sizes",
                    &self.centralizer_sizes,
                    &other.centralizer_sizes,
                    |v| dbg(v),
                )
            })
            .or_else(|| {
                diff(
                    "generator cycle types",
                    &self.cycle_types,
                    &other.cycle_types,
                    |v| dbg(v),
                )
            })
            .or_else(|| {
                diff("orbit sizes", &self.orbit_sizes, &other.orbit_sizes, |v| {
                    dbg(v)
                })
            })
            .or_else(|| diff("property flags", &self.flags, &other.flags, |v| dbg(v)))
    }
}
