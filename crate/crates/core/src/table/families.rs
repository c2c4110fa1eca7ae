//! Standard quandle families.
//!
//! Families on `Z_n` use the coding `k ↦ k + 1`.

use crate::error::{QuandleError, Result};
use crate::table::group::{AbelianGroupSpec, Automorphism, GroupTable};
use crate::table::magma::{Magma, Quandle};

/// `x ▷ y = x`.
pub fn trivial(n: usize) -> Result<Quandle> {
    if n < 1 {
        return Err(QuandleError::OrderTooSmall { order: n, min: 1 });
    }
    let m = Magma::from_fn(n, |x, _| x)?.with_name(format!("trivial({n})"));
    Ok(Quandle::assume_valid(m))
}

/// `a ▷ b = 2b − a (mod n)`.
pub fn dihedral(n: usize) -> Result<Quandle> {
    if n < 1 {
        return Err(QuandleError::OrderTooSmall { order: n, min: 1 });
    }
    let m = Magma::from_fn(n, |a, b| (2 * b + n - a) % n)?.with_name(format!("dihedral({n})"));
    Ok(Quandle::assume_valid(m))
}

/// `x ▷ y = y⁻¹ x y` on the elements of `g`, numbered as in `g`.
pub fn conjugation(g: &GroupTable) -> Quandle {
    let m = Magma::from_fn(g.order(), |x, y| g.mul0(g.mul0(g.inv0(y), x), y))
        .expect("group products stay in range")
        .with_name(format!("conjugation(order {})", g.order()));
    Quandle::assume_valid(m)
}

/// `x ▷ y = t(x) + y − t(y)` on `group`.
pub fn affine(group: &AbelianGroupSpec, t: &Automorphism) -> Result<Quandle> {
    let n = group.order();
    if t.as_permutation().len() != n {
        return Err(QuandleError::InvalidAutomorphism(format!(
            "automorphism acts on {} elements, group has {n}",
            t.as_permutation().len()
        )));
    }
    let add = group.addition_table();
    let m = Magma::from_fn(n, |x, y| {
        let one_minus_t_y = add[y * n + group.neg(t.apply0(y))];
        add[t.apply0(x) * n + one_minus_t_y]
    })?
    .with_name(format!("affine({:?})", group.factors()));
    Ok(Quandle::assume_valid(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_rows() {
        let q = trivial(3).unwrap();
        assert_eq!(q.rows(), vec![vec![1, 1, 1], vec![2, 2, 2], vec![3, 3, 3]]);
        for n in 1..=6 {
            assert!(trivial(n).unwrap().check_axioms().overall);
        }
        assert!(trivial(0).is_err());
    }

    #[test]
    fn dihedral_rows() {
        let q = dihedral(3).unwrap();
        assert_eq!(q.rows(), vec![vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]]);
        for n in 1..=10 {
            assert!(dihedral(n).unwrap().check_axioms().overall, "R_{n}");
        }
        assert!(dihedral(0).is_err());
    }

    #[test]
    fn dual_of_trivial_is_identity_column() {
        let q = trivial(3).unwrap();
        assert_eq!(q.dual_apply(2, 3).unwrap(), 2);
    }

    #[test]
    fn conjugation_of_abelian_group_is_trivial() {
        let q = conjugation(&GroupTable::cyclic(3).unwrap());
        assert!(q.same_table(&trivial(3).unwrap()));
    }

    #[test]
    fn conjugation_fixes_under_identity() {
        let g = GroupTable::symmetric(3).unwrap();
        let q = conjugation(&g);
        assert!(q.check_axioms().overall);
        let e = g.identity();
        for x in 1..=6 {
            assert_eq!(q.apply(x, e).unwrap(), x);
        }
    }

    #[test]
    fn affine_identity_and_negation() {
        for n in 1..=8 {
            let z = AbelianGroupSpec::cyclic(n).unwrap();
            let q = affine(&z, &Automorphism::identity(&z)).unwrap();
            assert!(q.same_table(&trivial(n).unwrap()));
        }
        let z3 = AbelianGroupSpec::cyclic(3).unwrap();
        let q = affine(&z3, &Automorphism::negation(&z3)).unwrap();
        assert!(q.same_table(&dihedral(3).unwrap()));
    }

    #[test]
    fn affine_z12_times_five() {
        let z12 = AbelianGroupSpec::cyclic(12).unwrap();
        let t = Automorphism::multiplication(&z12, 5).unwrap();
        assert!(affine(&z12, &t).unwrap().check_axioms().overall);
    }
}
