use crate::classify::find_isomorphism;
use crate::error::{QuandleError, Result};
use crate::table::{conjugation, GroupTable, Quandle};

/// Largest order for which the group catalogue below is complete.
pub const CONJUGATION_BUDGET: usize = 15;

/// The non-abelian groups of order `n ≤ 15`, up to isomorphism.
pub fn nonabelian_groups_of_order(n: usize) -> Result<Vec<GroupTable>> {
    if n > CONJUGATION_BUDGET {
        return Err(QuandleError::BudgetExceeded {
            order: n,
            limit: CONJUGATION_BUDGET,
        });
    }
    Ok(match n {
        6 => vec![GroupTable::dihedral_group(3)?],
        8 => vec![GroupTable::dihedral_group(4)?, GroupTable::quaternion()?],
        10 => vec![GroupTable::dihedral_group(5)?],
        12 => vec![
            alternating4()?,
            GroupTable::dihedral_group(6)?,
            dicyclic3()?,
        ],
        14 => vec![GroupTable::dihedral_group(7)?],
        _ => vec![],
    })
}

fn alternating4() -> Result<GroupTable> {
    use crate::table::Permutation;
    let a = Permutation::from_images(&[2, 3, 1, 4])?;
    let b = Permutation::from_images(&[2, 1, 4, 3])?;
    GroupTable::generated_by(&[a, b])
}

/// `⟨a, x | a⁶ = 1, x² = a³, x a x⁻¹ = a⁻¹⟩`, element `a^i x^j` coded `2i + j`.
fn dicyclic3() -> Result<GroupTable> {
    GroupTable::from_fn(12, |p, q| {
        let (i, j) = (p / 2, p % 2);
        let (k, l) = (q / 2, q % 2);
        // x^j a^k = a^{±k} x^j
        let k = if j == 1 { (6 - k) % 6 } else { k };
        let mut e = (i + k) % 6;
        let mut f = j + l;
        if f == 2 {
            e = (e + 3) % 6;
            f = 0;
        }
        2 * e + f
    })
}

/// Whether the set of `q` carries a group structure with `x ▷ y = y⁻¹xy`.
///
/// Conjugation in an abelian group is trivial, so only the trivial quandle
/// arises from those; the remaining candidates come from the catalogue of
/// non-abelian groups.
pub fn is_group_conjugation(q: &Quandle) -> Result<bool> {
    let n = q.order();
    let trivial = (0..n).all(|x| (0..n).all(|y| q.op(x, y) == x));
    if trivial {
        return Ok(true);
    }
    for g in nonabelian_groups_of_order(n)? {
        if find_isomorphism(q, &conjugation(&g)).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{dihedral, trivial};

    #[test]
    fn catalogue_groups_are_nonabelian_of_right_order() {
        for n in 1..=15 {
            for g in nonabelian_groups_of_order(n).unwrap() {
                assert_eq!(g.order(), n);
                assert!(!g.is_abelian());
            }
        }
        assert!(nonabelian_groups_of_order(16).is_err());
    }

    #[test]
    fn order_twelve_groups_are_distinct() {
        // element order spectra tell A4, D6 and Dic3 apart
        let spectra: Vec<Vec<usize>> = nonabelian_groups_of_order(12)
            .unwrap()
            .iter()
            .map(|g| {
                let mut orders: Vec<usize> = (1..=12)
                    .map(|a| {
                        let mut x = a;
                        let mut k = 1;
                        while x != g.identity() {
                            x = g.mul(x, a);
                            k += 1;
                        }
                        k
                    })
                    .collect();
                orders.sort();
                orders
            })
            .collect();
        assert_ne!(spectra[0], spectra[1]);
        assert_ne!(spectra[1], spectra[2]);
        assert_ne!(spectra[0], spectra[2]);
    }

    #[test]
    fn recognizes_conjugation_quandles() {
        assert!(is_group_conjugation(&trivial(4).unwrap()).unwrap());
        let s3 = conjugation(&GroupTable::symmetric(3).unwrap());
        assert!(is_group_conjugation(&s3).unwrap());
        // relabeled copy still recognized
        let sigma = crate::table::Permutation::from_images(&[6, 5, 4, 3, 2, 1]).unwrap();
        assert!(is_group_conjugation(&s3.relabel(&sigma)).unwrap());
        assert!(!is_group_conjugation(&dihedral(3).unwrap()).unwrap());
        assert!(!is_group_conjugation(&dihedral(6).unwrap()).unwrap());
    }
}
