//! Independent reference implementations used as oracles. Tables are plain
//! zero-based `Vec<Vec<usize>>` so nothing here touches library internals.

#![allow(dead_code)]

use quandles::{Magma, Quandle};

pub type Grid = Vec<Vec<usize>>;

pub fn grid(q: &Magma) -> Grid {
    q.rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v - 1).collect())
        .collect()
}

/// Literal reading of the three axioms.
pub fn naive_is_quandle(t: &Grid) -> bool {
    let n = t.len();
    if (0..n).any(|x| t[x][x] != x) {
        return false;
    }
    for y in 0..n {
        let mut seen = vec![false; n];
        for row in t {
            if std::mem::replace(&mut seen[row[y]], true) {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t[t[x][y]][z] != t[t[x][z]][t[y][z]] {
                    return false;
                }
            }
        }
    }
    true
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Tries every bijection `phi` and tests `phi(x ▷ y) = phi(x) ▷ phi(y)`.
pub fn brute_force_isomorphic(a: &Grid, b: &Grid) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    all_permutations(n)
        .iter()
        .any(|phi| (0..n).all(|x| (0..n).all(|y| phi[a[x][y]] == b[phi[x]][phi[y]])))
}

/// Every 3×3 table over `0..3` (3⁹ of them) that satisfies the axioms.
pub fn phase_rule_oracle() -> Vec<[[u8; 3]; 3]> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(9) {
        let mut c = code;
        let mut t = vec![vec![0usize; 3]; 3];
        for row in t.iter_mut() {
            for cell in row.iter_mut() {
                *cell = c % 3;
                c /= 3;
            }
        }
        if naive_is_quandle(&t) {
            let mut fixed = [[0u8; 3]; 3];
            for a in 0..3 {
                for b in 0..3 {
                    fixed[a][b] = t[a][b] as u8;
                }
            }
            out.push(fixed);
        }
    }
    out
}

/// Labeled quandles on `0..n` with each column chosen as a permutation
/// fixing its own index, filtered by [`naive_is_quandle`].
pub fn labeled_oracle(n: usize) -> Vec<Grid> {
    let perms = all_permutations(n);
    let columns: Vec<Vec<&Vec<usize>>> = (0..n)
        .map(|y| perms.iter().filter(|p| p[y] == y).collect())
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let t: Grid = (0..n)
            .map(|x| (0..n).map(|y| columns[y][choice[y]][x]).collect())
            .collect();
        if naive_is_quandle(&t) {
            out.push(t);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            choice[i] += 1;
            if choice[i] < columns[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Number of classes under a brute-force isomorphism partition.
pub fn brute_force_class_count(tables: &[Grid]) -> usize {
    let mut reps: Vec<&Grid> = Vec::new();
    for t in tables {
        if !reps.iter().any(|r| brute_force_isomorphic(r, t)) {
            reps.push(t);
        }
    }
    reps.len()
}

pub fn quandle(rows: &[&[usize]]) -> Quandle {
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    Quandle::from_rows(&rows).expect("fixture is a quandle")
}
