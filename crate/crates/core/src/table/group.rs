use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{QuandleError, Result};
use crate::table::perm::{gcd, Permutation};

/// Cayley table of a finite group, zero-based internally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    cells: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Validates a one-based multiplication table.
    pub fn new(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuandleError::InvalidGroup(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > n) {
                return Err(QuandleError::InvalidGroup(format!(
                    "entry {v} in row {} outside 1..={n}",
                    r + 1
                )));
            }
        }
        Self::from_fn(n, |a, b| rows[a][b] - 1)
    }

    /// Validates a zero-based multiplication `mul(a, b) = a·b`.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if order == 0 {
            return Err(QuandleError::InvalidGroup("empty group".into()));
        }
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = mul(a, b);
                if v >= order {
                    return Err(QuandleError::InvalidGroup(format!(
                        "product of {} and {} out of range",
                        a + 1,
                        b + 1
                    )));
                }
                cells.push(v as u32);
            }
        }
        let at = |a: usize, b: usize| cells[a * order + b] as usize;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(QuandleError::InvalidGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| QuandleError::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| {
                    QuandleError::InvalidGroup(format!("element {} has no inverse", a + 1))
                })?;
            inverses.push(inv);
        }
        Ok(GroupTable {
            order,
            cells,
            identity,
            inverses,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::from_fn(n, |a, b| (a + b) % n.max(1))
    }

    /// Group of the given permutations under composition; the set must be
    /// closed. Elements are numbered in the order given.
    pub fn from_permutations(elements: &[Permutation]) -> Result<Self> {
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        if index.len() != elements.len() {
            return Err(QuandleError::InvalidGroup("duplicate permutations".into()));
        }
        let n = elements.len();
        let mut cells = vec![0usize; n * n];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                // a·b acts as "apply a, then b"
                let prod = pa.then(pb);
                cells[a * n + b] = *index.get(&prod).ok_or_else(|| {
                    QuandleError::InvalidGroup("permutation set not closed".into())
                })?;
            }
        }
        Self::from_fn(n, |a, b| cells[a * n + b])
    }

    /// Closure of `generators` under composition, identity first.
    pub fn generated_by(generators: &[Permutation]) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::len)
            .ok_or_else(|| QuandleError::InvalidGroup("no generators".into()))?;
        let id = Permutation::identity(degree);
        let mut seen = vec![id.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let next = seen[i].then(g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), seen.len());
                    queue.push_back(seen.len());
                    seen.push(next);
                }
            }
        }
        Self::from_permutations(&seen)
    }

    /// Symmetric group on `k` letters, elements in lexicographic image order.
    pub fn symmetric(k: usize) -> Result<Self> {
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        permutations_lex(&mut current, 0, &mut perms);
        perms.sort();
        let perms: Vec<Permutation> = perms
            .into_iter()
            .map(|v| Permutation::from_zero_based(v).expect("valid permutation"))
            .collect();
        Self::from_permutations(&perms)
    }

    /// Dihedral group of order `2m` (symmetries of an m-gon), `m ≥ 3`.
    pub fn dihedral_group(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(QuandleError::InvalidGroup(format!(
                "dihedral group needs m >= 3, got {m}"
            )));
        }
        let rot = Permutation::from_zero_based((0..m).map(|i| (i + 1) % m).collect())?;
        let refl = Permutation::from_zero_based((0..m).map(|i| (m - i) % m).collect())?;
        Self::generated_by(&[rot, refl])
    }

    /// Quaternion group of order 8: elements `±1, ±i, ±j, ±k` coded
    /// `2·unit + sign`.
    pub fn quaternion() -> Result<Self> {
        // unit products: (unit, sign flip)
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        Self::from_fn(8, |a, b| {
            let (ua, sa) = (a / 2, a % 2 == 1);
            let (ub, sb) = (b / 2, b % 2 == 1);
            let (u, flip) = UNIT[ua][ub];
            let neg = sa ^ sb ^ flip;
            2 * u + usize::from(neg)
        })
    }

    pub fn direct_product(&self, other: &GroupTable) -> Result<Self> {
        let m = other.order;
        Self::from_fn(self.order * m, |a, b| {
            self.mul0(a / m, b / m) * m + other.mul0(a % m, b % m)
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// One-based identity.
    pub fn identity(&self) -> usize {
        self.identity + 1
    }

    /// One-based inverses.
    pub fn inverses(&self) -> Vec<usize> {
        self.inverses.iter().map(|&i| i + 1).collect()
    }

    #[inline]
    pub(crate) fn mul0(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b] as usize
    }

    #[inline]
    pub(crate) fn inv0(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul0(a - 1, b - 1) + 1
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul0(a, b) == self.mul0(b, a)))
    }
}

fn permutations_lex(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations_lex(current, k + 1, out);
        current.swap(k, i);
    }
}

/// A finite abelian group `Z_{m1} × … × Z_{mk}`.
///
/// Elements are coded mixed-radix, first factor most significant; the
/// public element index is that code plus one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AbelianGroupSpec {
    cyclic_factors: Vec<usize>,
}

impl AbelianGroupSpec {
    /// An empty factor list is the trivial group.
    pub fn new(cyclic_factors: Vec<usize>) -> Result<Self> {
        if let Some(&m) = cyclic_factors.iter().find(|&&m| m < 2) {
            return Err(QuandleError::InvalidGroup(format!(
                "cyclic factor {m} is smaller than 2"
            )));
        }
        Ok(AbelianGroupSpec { cyclic_factors })
    }

    /// `Z_n`; `n = 1` gives the trivial group.
    pub fn cyclic(n: usize) -> Result<Self> {
        match n {
            0 => Err(QuandleError::InvalidGroup("Z_0 is not finite".into())),
            1 => Ok(AbelianGroupSpec {
                cyclic_factors: vec![],
            }),
            _ => Self::new(vec![n]),
        }
    }

    pub fn factors(&self) -> &[usize] {
        &self.cyclic_factors
    }

    pub fn order(&self) -> usize {
        self.cyclic_factors.iter().product()
    }

    /// Least common multiple of the factors.
    pub fn exponent(&self) -> usize {
        self.cyclic_factors
            .iter()
            .fold(1u64, |acc, &m| super::perm::lcm(acc, m as u64)) as usize
    }

    /// Zero-based index to coordinates.
    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut coords = vec![0; self.cyclic_factors.len()];
        for (c, &m) in coords.iter_mut().zip(&self.cyclic_factors).rev() {
            *c = index % m;
            index /= m;
        }
        coords
    }

    /// Coordinates (reduced modulo each factor) to zero-based index.
    pub fn encode(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.cyclic_factors)
            .fold(0, |acc, (&c, &m)| acc * m + c % m)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let sum: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(&self.cyclic_factors)
            .map(|(&x, &m)| (m - x) % m)
            .collect();
        self.encode(&c)
    }

    /// `k·a` for a zero-based element.
    pub fn scale(&self, k: usize, a: usize) -> usize {
        let c: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(&self.cyclic_factors)
            .map(|(&x, &m)| (x * (k % m)) % m)
            .collect();
        self.encode(&c)
    }

    /// Zero-based index of the i-th standard generator.
    pub fn generator(&self, i: usize) -> usize {
        let mut c = vec![0; self.cyclic_factors.len()];
        c[i] = 1;
        self.encode(&c)
    }

    /// Additive table, zero-based.
    pub(crate) fn addition_table(&self) -> Vec<usize> {
        let n = self.order();
        let mut t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                t.push(self.add(a, b));
            }
        }
        t
    }

    pub fn to_group_table(&self) -> Result<GroupTable> {
        let n = self.order();
        let t = self.addition_table();
        GroupTable::from_fn(n, |a, b| t[a * n + b])
    }

    /// Every abelian group of order `n` up to isomorphism, as invariant
    /// factor lists `m1 | m2 | … | mk`. Cyclic group first, then by factor
    /// count and lexicographically.
    pub fn all_of_order(n: usize) -> Vec<AbelianGroupSpec> {
        fn chains(remaining: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining == 1 {
                out.push(acc.clone());
                return;
            }
            // next factor m must be a multiple of the previous one and divide what is left
            for m in (min.max(2)..=remaining).filter(|&m| remaining.is_multiple_of(m)) {
                if acc.last().is_none_or(|&p| m.is_multiple_of(p)) {
                    acc.push(m);
                    chains(remaining / m, m, acc, out);
                    acc.pop();
                }
            }
        }
        if n == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        chains(n, 2, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.into_iter()
            .map(|cyclic_factors| AbelianGroupSpec { cyclic_factors })
            .collect()
    }
}

/// An automorphism of an [`AbelianGroupSpec`], described by the images of the
/// standard generators. Additivity and bijectivity are verified on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    /// Zero-based images of the standard generators.
    generator_images: Vec<usize>,
    map: Permutation,
}

impl Automorphism {
    /// Images of the standard generators, as coordinate tuples.
    pub fn from_generator_images(group: &AbelianGroupSpec, images: &[Vec<usize>]) -> Result<Self> {
        let idx: Vec<usize> = images.iter().map(|c| group.encode(c)).collect();
        Self::from_generator_indices(group, &idx)
    }

    /// Images of the standard generators, as zero-based element indices.
    pub fn from_generator_indices(group: &AbelianGroupSpec, images: &[usize]) -> Result<Self> {
        let k = group.factors().len();
        if images.len() != k {
            return Err(QuandleError::InvalidAutomorphism(format!(
                "expected {k} generator images, got {}",
                images.len()
            )));
        }
        let n = group.order();
        for (i, (&img, &m)) in images.iter().zip(group.factors()).enumerate() {
            if img >= n {
                return Err(QuandleError::InvalidAutomorphism(format!(
                    "image index {img} out of range"
                )));
            }
            // generator i has order m, so its image must be killed by m
            if group.scale(m, img) != 0 {
                return Err(QuandleError::InvalidAutomorphism(format!(
                    "image of generator {} does not have order dividing {m}",
                    i + 1
                )));
            }
        }
        let map: Vec<usize> = (0..n)
            .map(|x| {
                group
                    .decode(x)
                    .iter()
                    .zip(images)
                    .fold(0, |acc, (&c, &g)| group.add(acc, group.scale(c, g)))
            })
            .collect();
        let map = Permutation::from_zero_based(map).map_err(|_| {
            QuandleError::InvalidAutomorphism("generator images do not give a bijection".into())
        })?;
        Ok(Automorphism {
            generator_images: images.to_vec(),
            map,
        })
    }

    /// Checks that a zero-based element map is additive and bijective.
    pub fn from_permutation(group: &AbelianGroupSpec, map: &Permutation) -> Result<Self> {
        let n = group.order();
        if map.len() != n {
            return Err(QuandleError::InvalidAutomorphism(format!(
                "permutation has length {}, group order is {n}",
                map.len()
            )));
        }
        for a in 0..n {
            for b in 0..n {
                if map.at(group.add(a, b)) != group.add(map.at(a), map.at(b)) {
                    return Err(QuandleError::InvalidAutomorphism(format!(
                        "not additive at elements {} and {}",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        let images = (0..group.factors().len())
            .map(|i| map.at(group.generator(i)))
            .collect();
        Ok(Automorphism {
            generator_images: images,
            map: map.clone(),
        })
    }

    pub fn identity(group: &AbelianGroupSpec) -> Self {
        Self::multiplication(group, 1).expect("identity is an automorphism")
    }

    pub fn negation(group: &AbelianGroupSpec) -> Self {
        let images: Vec<usize> = (0..group.factors().len())
            .map(|i| group.neg(group.generator(i)))
            .collect();
        Self::from_generator_indices(group, &images).expect("negation is an automorphism")
    }

    /// `x ↦ k·x`; an automorphism iff `k` is coprime to the exponent.
    pub fn multiplication(group: &AbelianGroupSpec, k: usize) -> Result<Self> {
        let e = group.exponent() as u64;
        if e > 1 && gcd(k as u64 % e, e) != 1 {
            return Err(QuandleError::InvalidAutomorphism(format!(
                "multiplier {k} is not a unit modulo {e}"
            )));
        }
        let images: Vec<usize> = (0..group.factors().len())
            .map(|i| group.scale(k, group.generator(i)))
            .collect();
        Self::from_generator_indices(group, &images)
    }

    /// Every automorphism, ordered lexicographically by generator images.
    pub fn enumerate(group: &AbelianGroupSpec) -> Vec<Automorphism> {
        let n = group.order();
        let factors = group.factors();
        // candidate images for each generator: elements killed by its order
        let candidates: Vec<Vec<usize>> = factors
            .iter()
            .map(|&m| (0..n).filter(|&g| group.scale(m, g) == 0).collect())
            .collect();
        let mut out = Vec::new();
        let mut choice = Vec::with_capacity(factors.len());
        fn rec(
            group: &AbelianGroupSpec,
            candidates: &[Vec<usize>],
            choice: &mut Vec<usize>,
            out: &mut Vec<Automorphism>,
        ) {
            let i = choice.len();
            if i == candidates.len() {
                if let Ok(a) = Automorphism::from_generator_indices(group, choice) {
                    out.push(a);
                }
                return;
            }
            for &g in &candidates[i] {
                choice.push(g);
                rec(group, candidates, choice, out);
                choice.pop();
            }
        }
        rec(group, &candidates, &mut choice, &mut out);
        out
    }

    /// Zero-based element map.
    pub fn as_permutation(&self) -> &Permutation {
        &self.map
    }

    /// Zero-based generator images.
    pub fn generator_images(&self) -> &[usize] {
        &self.generator_images
    }

    #[inline]
    pub(crate) fn apply0(&self, x: usize) -> usize {
        self.map.at(x)
    }
}

impl Serialize for Automorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.generator_images.serialize(s)
    }
}
