use serde::Serialize;

use crate::classify::{find_isomorphism, InvariantProfile};
use crate::error::{QuandleError, Result};
use crate::table::{affine, AbelianGroupSpec, Automorphism, Permutation, Quandle};

pub const DEFAULT_ALEXANDER_BUDGET: usize = 15;

/// Evidence that a quandle is affine: `iso` sends quandle element `x` to
/// group element `iso(x)` (one-based index in the group's mixed-radix
/// coding), and `iso(x ▷ y) = t(iso x) + (1 − t)(iso y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineWitness {
    pub group: AbelianGroupSpec,
    pub automorphism: Automorphism,
    pub iso: Permutation,
}

impl AffineWitness {
    /// Replays the affine operation through `iso` against `q`.
    pub fn verify(&self, q: &Quandle) -> bool {
        let Ok(aff) = affine(&self.group, &self.automorphism) else {
            return false;
        };
        let n = q.order();
        if aff.order() != n || self.iso.len() != n {
            return false;
        }
        (0..n).all(|x| {
            (0..n).all(|y| self.iso.at(q.op(x, y)) == aff.op(self.iso.at(x), self.iso.at(y)))
        })
    }
}

/// [`alexander_recognize_with_budget`] with the default order budget of 15.
pub fn alexander_recognize(q: &Quandle) -> Result<Option<AffineWitness>> {
    alexander_recognize_with_budget(q, DEFAULT_ALEXANDER_BUDGET)
}

/// Tries every abelian group of order `n` and every automorphism, in
/// enumeration order, and returns the first affine quandle isomorphic to
/// `q`.
pub fn alexander_recognize_with_budget(
    q: &Quandle,
    budget: usize,
) -> Result<Option<AffineWitness>> {
    let n = q.order();
    if n > budget {
        return Err(QuandleError::BudgetExceeded {
            order: n,
            limit: budget,
        });
    }
    let profile = InvariantProfile::of(q);
    for group in AbelianGroupSpec::all_of_order(n) {
        let mut tried: Vec<Quandle> = Vec::new();
        for t in Automorphism::enumerate(&group) {
            let candidate = affine(&group, &t)?;
            // many automorphisms give the same table
            if tried.iter().any(|c| c.same_table(&candidate)) {
                continue;
            }
            if InvariantProfile::of(&candidate) == profile {
                if let Some(iso) = find_isomorphism(q, &candidate) {
                    let witness = AffineWitness {
                        group,
                        automorphism: t,
                        iso,
                    };
                    debug_assert!(witness.verify(q));
                    return Ok(Some(witness));
                }
            }
            tried.push(candidate);
        }
    }
    Ok(None)
}

/// `a ▷ b + b ▷ a = a + b` for every pair in the affine quandle on `group`
/// with automorphism `t`.
pub fn lemma_sum_check(group: &AbelianGroupSpec, t: &Automorphism) -> Result<bool> {
    let q = affine(group, t)?;
    let n = group.order();
    Ok((0..n).all(|a| (0..n).all(|b| group.add(q.op(a, b), q.op(b, a)) == group.add(a, b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{conjugation, dihedral, trivial, GroupTable};

    #[test]
    fn trivial_is_affine_with_identity() {
        let w = alexander_recognize(&trivial(4).unwrap()).unwrap().unwrap();
        assert_eq!(w.group.factors(), &[4]);
        assert!(w.automorphism.as_permutation().is_identity());
        assert!(w.verify(&trivial(4).unwrap()));
    }

    #[test]
    fn dihedral_three_is_negation_on_z3() {
        let d3 = dihedral(3).unwrap();
        let w = alexander_recognize(&d3).unwrap().unwrap();
        assert_eq!(w.group.factors(), &[3]);
        assert_eq!(w.automorphism.as_permutation().images(), vec![1, 3, 2]);
        assert!(w.verify(&d3));
    }

    #[test]
    fn round_trip_z4_times_three() {
        let z4 = AbelianGroupSpec::cyclic(4).unwrap();
        let q = affine(&z4, &Automorphism::multiplication(&z4, 3).unwrap()).unwrap();
        assert!(alexander_recognize(&q).unwrap().unwrap().verify(&q));
    }

    #[test]
    fn s3_conjugation_is_not_affine() {
        let q = conjugation(&GroupTable::symmetric(3).unwrap());
        assert!(alexander_recognize(&q).unwrap().is_none());
    }

    #[test]
    fn budget_is_explicit() {
        let q = trivial(16).unwrap();
        assert!(matches!(
            alexander_recognize(&q),
            Err(QuandleError::BudgetExceeded {
                order: 16,
                limit: 15
            })
        ));
        assert!(alexander_recognize_with_budget(&q, 16).unwrap().is_some());
    }

    #[test]
    fn lemma_sum_examples() {
        let z12 = AbelianGroupSpec::cyclic(12).unwrap();
        assert!(lemma_sum_check(&z12, &Automorphism::multiplication(&z12, 5).unwrap()).unwrap());
        let z3 = AbelianGroupSpec::cyclic(3).unwrap();
        assert!(lemma_sum_check(&z3, &Automorphism::negation(&z3)).unwrap());
        let z7 = AbelianGroupSpec::cyclic(7).unwrap();
        assert!(lemma_sum_check(&z7, &Automorphism::multiplication(&z7, 3).unwrap()).unwrap());
    }
}
