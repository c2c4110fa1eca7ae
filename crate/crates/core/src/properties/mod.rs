//! Predicates on checked quandles, centralizers and affine recognition.

mod alexander;
mod conjugation;

pub use alexander::{
    alexander_recognize, alexander_recognize_with_budget, lemma_sum_check, AffineWitness,
    DEFAULT_ALEXANDER_BUDGET,
};
pub use conjugation::{is_group_conjugation, nonabelian_groups_of_order, CONJUGATION_BUDGET};

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{QuandleError, Result};
use crate::table::Quandle;

/// `(x ▷ y) ▷ y = x` for all pairs.
pub fn is_involutory(q: &Quandle) -> bool {
    let n = q.order();
    (0..n).all(|x| (0..n).all(|y| q.op(q.op(x, y), y) == x))
}

/// Every right translation has order at most 2. Agrees with
/// [`is_involutory`] on every quandle.
pub fn is_involutory_by_translation_orders(q: &Quandle) -> bool {
    q.translations().iter().all(|p| p.order() <= 2)
}

/// Medial identity `(w ▷ x) ▷ (y ▷ z) = (w ▷ y) ▷ (x ▷ z)`.
pub fn is_abelian(q: &Quandle) -> bool {
    let n = q.order();
    for w in 0..n {
        for x in 0..n {
            let wx = q.op(w, x);
            for y in 0..n {
                let wy = q.op(w, y);
                for z in 0..n {
                    if q.op(wx, q.op(y, z)) != q.op(wy, q.op(x, z)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `x ▷ (y ▷ z) = (x ▷ y) ▷ (x ▷ z)`.
pub fn is_left_distributive(q: &Quandle) -> bool {
    let n = q.order();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| q.op(x, q.op(y, z)) == q.op(q.op(x, y), q.op(x, z))))
    })
}

/// The right-translation group acts transitively. Breadth-first search
/// from element 1.
pub fn is_connected(q: &Quandle) -> bool {
    let n = q.order();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for y in 0..n {
            // R_y and its inverse generate the same orbits on a finite set
            let z = q.op(x, y);
            if !seen[z] {
                seen[z] = true;
                reached += 1;
                queue.push_back(z);
            }
        }
    }
    reached == n
}

/// Each `R_x` permutes the other `n − 1` elements as one `(n − 1)`-cycle.
/// Order 2 is answered `false`: its translations are identities.
pub fn is_cyclic_type(q: &Quandle) -> Result<bool> {
    let n = q.order();
    if n < 2 {
        return Err(QuandleError::OrderTooSmall { order: n, min: 2 });
    }
    if n == 2 {
        return Ok(false);
    }
    Ok((0..n).all(|x| q.translation(x).cycle_type() == [n - 1, 1]))
}

/// `{ x : x ▷ a = a ▷ x }`, one-based.
pub fn centralizer(q: &Quandle, a: usize) -> Result<Vec<usize>> {
    let n = q.order();
    if a == 0 || a > n {
        return Err(QuandleError::ElementOutOfRange {
            element: a,
            order: n,
        });
    }
    let a0 = a - 1;
    Ok((0..n)
        .filter(|&x| q.op(x, a0) == q.op(a0, x))
        .map(|x| x + 1)
        .collect())
}

/// Property flags shared by profiles and transfer audits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PropertyFlags {
    pub involutory: bool,
    pub abelian: bool,
    pub left_distributive: bool,
    pub connected: bool,
    pub cyclic_type: bool,
}

impl PropertyFlags {
    pub fn of(q: &Quandle) -> Self {
        PropertyFlags {
            involutory: is_involutory(q),
            abelian: is_abelian(q),
            left_distributive: is_left_distributive(q),
            connected: is_connected(q),
            cyclic_type: is_cyclic_type(q).unwrap_or(false),
        }
    }
}
