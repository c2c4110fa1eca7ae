use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::classify::profile::InvariantProfile;
use crate::table::{Permutation, Quandle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
}

/// Why two quandles are not isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// Name of the first differing invariant, or `exhausted search`.
    pub invariant: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.left.is_empty() && self.right.is_empty() {
            f.write_str(&self.invariant)
        } else {
            write!(f, "{}: {} vs {}", self.invariant, self.left, self.right)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoResult {
    pub verdict: IsoVerdict,
    /// `mapping.image(x)` is the image in the second quandle of element `x`
    /// of the first.
    pub mapping: Option<Permutation>,
    pub certificate: Option<Certificate>,
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        self.verdict == IsoVerdict::Isomorphic
    }
}

/// Compares invariant profiles first, then runs the backtracking search.
/// Identical tables short-circuit to the identity mapping.
pub fn are_isomorphic(a: &Quandle, b: &Quandle) -> IsoResult {
    if a.same_table(b) {
        return IsoResult {
            verdict: IsoVerdict::Isomorphic,
            mapping: Some(Permutation::identity(a.order())),
            certificate: None,
        };
    }
    let (pa, pb) = (InvariantProfile::of(a), InvariantProfile::of(b));
    if let Some(d) = pa.first_difference(&pb) {
        return IsoResult {
            verdict: IsoVerdict::NotIsomorphic,
            mapping: None,
            certificate: Some(Certificate {
                invariant: d.invariant.to_string(),
                left: d.left,
                right: d.right,
            }),
        };
    }
    match find_isomorphism(a, b) {
        Some(phi) => IsoResult {
            verdict: IsoVerdict::Isomorphic,
            mapping: Some(phi),
            certificate: None,
        },
        None => IsoResult {
            verdict: IsoVerdict::NotIsomorphic,
            mapping: None,
            certificate: Some(Certificate {
                invariant: "exhausted search".to_string(),
                left: String::new(),
                right: String::new(),
            }),
        },
    }
}

/// `φ(x ▷ y) = φ(x) ▷ φ(y)` for every pair.
pub fn is_homomorphism(a: &Quandle, b: &Quandle, phi: &Permutation) -> bool {
    let n = a.order();
    phi.len() == n
        && b.order() == n
        && (0..n).all(|x| (0..n).all(|y| phi.at(a.op(x, y)) == b.op(phi.at(x), phi.at(y))))
}

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct ElementKey {
    cycle_type: Vec<usize>,
    centralizer: usize,
    row_fixed: usize,
    row_fibers: Vec<usize>,
}

fn element_keys(q: &Quandle) -> Vec<ElementKey> {
    let n = q.order();
    (0..n)
        .map(|x| {
            // fiber sizes of the row map y -> x > y
            let mut fibers = vec![0usize; n];
            for y in 0..n {
                fibers[q.op(x, y)] += 1;
            }
            let mut fibers: Vec<usize> = fibers.into_iter().filter(|&c| c > 0).collect();
            fibers.sort_unstable();
            ElementKey {
                cycle_type: q.translation(x).cycle_type(),
                centralizer: (0..n).filter(|&y| q.op(y, x) == q.op(x, y)).count(),
                row_fixed: (0..n).filter(|&y| q.op(x, y) == x).count(),
                row_fibers: fibers,
            }
        })
        .collect()
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    a: &'a Quandle,
    b: &'a Quandle,
    key_a: Vec<usize>,
    key_b: Vec<usize>,
    phi: Vec<usize>,
    inv: Vec<usize>,
    trail: Vec<usize>,
    branch_order: Vec<usize>,
}

impl Search<'_> {
    /// Assigns `x ↦ u` and everything it forces; leaves partial work on the
    /// trail when it fails.
    fn assign(&mut self, x: usize, u: usize) -> bool {
        let mut pending = vec![(x, u)];
        while let Some((x, u)) = pending.pop() {
            if self.phi[x] == u {
                continue;
            }
            if self.phi[x] != UNSET || self.inv[u] != UNSET || self.key_a[x] != self.key_b[u] {
                return false;
            }
            self.phi[x] = u;
            self.inv[u] = x;
            self.trail.push(x);
            for i in 0..self.trail.len() {
                let y = self.trail[i];
                let v = self.phi[y];
                pending.push((self.a.op(x, y), self.b.op(u, v)));
                pending.push((self.a.op(y, x), self.b.op(v, u)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail longer than mark");
            self.inv[self.phi[x]] = UNSET;
            self.phi[x] = UNSET;
        }
    }

    fn solve(&mut self, depth: usize) -> bool {
        let Some(&x) = self.branch_order[depth..]
            .iter()
            .find(|&&x| self.phi[x] == UNSET)
        else {
            return true;
        };
        let next_depth = self.branch_order.iter().position(|&e| e == x).unwrap() + 1;
        let n = self.a.order();
        for u in 0..n {
            if self.inv[u] != UNSET || self.key_b[u] != self.key_a[x] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, u) && self.solve(next_depth) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// Backtracking isomorphism search without the profile filter.
///
/// Elements of `a` are branched on rarest element class first; candidate
/// images are tried in ascending order. Every found mapping is re-verified.
pub fn find_isomorphism(a: &Quandle, b: &Quandle) -> Option<Permutation> {
    let n = a.order();
    if b.order() != n {
        return None;
    }
    let (ka, kb) = (element_keys(a), element_keys(b));
    let mut ids: HashMap<ElementKey, usize> = HashMap::new();
    let mut intern = |k: ElementKey| {
        let next = ids.len();
        *ids.entry(k).or_insert(next)
    };
    let key_a: Vec<usize> = ka.into_iter().map(&mut intern).collect();
    let key_b: Vec<usize> = kb.into_iter().map(&mut intern).collect();
    let mut count_a = vec![0usize; ids.len()];
    let mut count_b = vec![0usize; ids.len()];
    for &k in &key_a {
        count_a[k] += 1;
    }
    for &k in &key_b {
        count_b[k] += 1;
    }
    if count_a != count_b {
        return None;
    }
    let mut branch_order: Vec<usize> = (0..n).collect();
    branch_order.sort_by_key(|&x| (count_a[key_a[x]], x));

    let mut s = Search {
        a,
        b,
        key_a,
        key_b,
        phi: vec![UNSET; n],
        inv: vec![UNSET; n],
        trail: Vec::with_capacity(n),
        branch_order,
    };
    if !s.solve(0) {
        return None;
    }
    let phi = Permutation::from_zero_based(s.phi).ok()?;
    is_homomorphism(a, b, &phi).then_some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{affine, dihedral, trivial, AbelianGroupSpec, Automorphism};

    #[test]
    fn self_isomorphism_is_identity() {
        for q in [dihedral(5).unwrap(), trivial(3).unwrap()] {
            let r = are_isomorphic(&q, &q);
            assert!(r.is_isomorphic());
            assert!(r.mapping.unwrap().is_identity());
        }
    }

    #[test]
    fn dihedral_three_equals_affine_negation() {
        let z3 = AbelianGroupSpec::cyclic(3).unwrap();
        let aff = affine(&z3, &Automorphism::negation(&z3)).unwrap();
        assert!(are_isomorphic(&dihedral(3).unwrap(), &aff).is_isomorphic());
    }

    #[test]
    fn relabeled_copy_found() {
        let q = dihedral(7).unwrap();
        let sigma = Permutation::from_images(&[3, 1, 7, 2, 6, 4, 5]).unwrap();
        let r = q.relabel(&sigma);
        let phi = find_isomorphism(&q, &r).unwrap();
        assert!(is_homomorphism(&q, &r, &phi));
    }

    #[test]
    fn different_orders_differ() {
        let r = are_isomorphic(&trivial(2).unwrap(), &trivial(3).unwrap());
        assert_eq!(r.verdict, IsoVerdict::NotIsomorphic);
        assert_eq!(r.certificate.unwrap().invariant, "order");
    }
}
