use crate::classify::family::classify_family;
use crate::error::{QuandleError, Result};
use crate::table::{Magma, Quandle};

pub const CENSUS_MAX_ORDER: usize = 6;

const UNSET: u32 = u32::MAX;

struct Builder {
    n: usize,
    cells: Vec<u32>,
    /// Values already used in each column, as bitmasks.
    used: Vec<u32>,
    /// Cell positions in fill order (column-major, diagonal skipped).
    order: Vec<(usize, usize)>,
    out: Vec<Quandle>,
}

impl Builder {
    #[inline]
    fn get(&self, x: usize, y: usize) -> u32 {
        self.cells[x * self.n + y]
    }

    /// Self-distributivity on every triple whose cells are all filled.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for c in 0..n {
                let ac = self.get(a, c);
                if ac == UNSET {
                    continue;
                }
                for b in 0..n {
                    let ab = self.get(a, b);
                    let bc = self.get(b, c);
                    if ab == UNSET || bc == UNSET {
                        continue;
                    }
                    let lhs = self.get(ab as usize, c);
                    let rhs = self.get(ac as usize, bc as usize);
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) {
        if depth == self.order.len() {
            let m = Magma::from_cells(self.n, self.cells.clone());
            self.out.push(Quandle::assume_valid(m));
            return;
        }
        let (x, y) = self.order[depth];
        for v in 0..self.n {
            // v == y is taken by the diagonal cell
            if self.used[y] & (1 << v) != 0 {
                continue;
            }
            self.cells[x * self.n + y] = v as u32;
            self.used[y] |= 1 << v;
            if self.consistent() {
                self.run(depth + 1);
            }
            self.used[y] &= !(1 << v);
            self.cells[x * self.n + y] = UNSET;
        }
    }
}

/// Every quandle structure on `{1..n}` (labeled), in lexicographic
/// column-major order.
pub fn labeled_quandles(n: usize) -> Result<Vec<Quandle>> {
    if n == 0 || n > CENSUS_MAX_ORDER {
        return Err(QuandleError::CensusOutOfRange { order: n });
    }
    let mut cells = vec![UNSET; n * n];
    let mut used = vec![0u32; n];
    for x in 0..n {
        cells[x * n + x] = x as u32;
        used[x] = 1 << x;
    }
    let order = (0..n)
        .flat_map(|y| (0..n).filter(move |&x| x != y).map(move |x| (x, y)))
        .collect();
    let mut b = Builder {
        n,
        cells,
        used,
        order,
        out: Vec::new(),
    };
    b.run(0);
    Ok(b.out)
}

/// One representative per isomorphism class of order-`n` quandles,
/// `1 ≤ n ≤ 6`, in [`classify_family`] order.
pub fn census(n: usize) -> Result<Vec<Quandle>> {
    let all = labeled_quandles(n)?;
    Ok(classify_family(&all)
        .into_iter()
        .map(|c| c.representative.with_name(format!("census({n})")))
        .collect())
}
