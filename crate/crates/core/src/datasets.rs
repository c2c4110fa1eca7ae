//! Built-in tables.
//!
//! `paper:table1` and `paper:q1` are the order-4 example and the first
//! order-12 product as published. `paper:q2` is the second order-12 product
//! with row 6, columns 10 to 12 read as `9` (source reads `12`, which breaks
//! column bijectivity; the accompanying translation listing has `R(10)` sending
//! 6 to 9). [`Q2_AS_PRINTED`] keeps the printed table. `paper:baseB` is the
//! order-4 base that both products factor over.

use crate::table::Magma;

const TABLE1: [[usize; 4]; 4] = [[1, 1, 2, 2], [2, 2, 1, 1], [4, 4, 3, 3], [3, 3, 4, 4]];

const BASE_B: [[usize; 4]; 4] = [[1, 1, 1, 1], [2, 2, 4, 3], [3, 4, 3, 2], [4, 3, 2, 4]];

const Q1: [[usize; 12]; 12] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    [3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3],
    [4, 4, 4, 4, 4, 4, 10, 10, 10, 7, 7, 7],
    [5, 5, 5, 5, 5, 5, 11, 11, 11, 8, 8, 8],
    [6, 6, 6, 6, 6, 6, 12, 12, 12, 9, 9, 9],
    [7, 7, 7, 10, 10, 10, 7, 7, 7, 4, 4, 4],
    [8, 8, 8, 11, 11, 11, 8, 8, 8, 5, 5, 5],
    [9, 9, 9, 12, 12, 12, 9, 9, 9, 6, 6, 6],
    [10, 10, 10, 7, 7, 7, 4, 4, 4, 10, 10, 10],
    [11, 11, 11, 8, 8, 8, 5, 5, 5, 11, 11, 11],
    [12, 12, 12, 9, 9, 9, 6, 6, 6, 12, 12, 12],
];

const Q2: [[usize; 12]; 12] = [
    [1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2],
    [2, 2, 1, 2, 2, 1, 2, 2, 1, 2, 2, 1],
    [3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3],
    [4, 4, 5, 4, 4, 5, 10, 10, 11, 7, 7, 8],
    [5, 5, 4, 5, 5, 4, 11, 11, 10, 8, 8, 7],
    [6, 6, 6, 6, 6, 6, 12, 12, 12, 9, 9, 9],
    [7, 7, 8, 10, 10, 11, 7, 7, 8, 4, 4, 5],
    [8, 8, 7, 11, 11, 10, 8, 8, 7, 5, 5, 4],
    [9, 9, 9, 12, 12, 12, 9, 9, 9, 6, 6, 6],
    [10, 10, 11, 7, 7, 8, 4, 4, 5, 10, 10, 11],
    [11, 11, 10, 8, 8, 7, 5, 5, 4, 11, 11, 10],
    [12, 12, 12, 9, 9, 9, 6, 6, 6, 12, 12, 12],
];

/// The second order-12 table exactly as in the source; not a quandle.
pub const Q2_AS_PRINTED: [[usize; 12]; 12] = {
    let mut t = Q2;
    t[5][9] = 12;
    t[5][10] = 12;
    t[5][11] = 12;
    t
};

/// Keys of the built-in tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinDataset {
    Table1,
    Q1,
    Q2,
    BaseB,
}

impl BuiltinDataset {
    pub const ALL: [BuiltinDataset; 4] = [
        BuiltinDataset::Table1,
        BuiltinDataset::Q1,
        BuiltinDataset::Q2,
        BuiltinDataset::BaseB,
    ];

    pub fn key(self) -> &'static str {
        match self {
            BuiltinDataset::Table1 => "paper:table1",
            BuiltinDataset::Q1 => "paper:q1",
            BuiltinDataset::Q2 => "paper:q2",
            BuiltinDataset::BaseB => "paper:baseB",
        }
    }

    pub fn from_key(key: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|d| d.key() == key)
    }

    pub fn table(self) -> Magma {
        fn rows<const N: usize>(t: &[[usize; N]; N]) -> Vec<Vec<usize>> {
            t.iter().map(|r| r.to_vec()).collect()
        }
        let rows = match self {
            BuiltinDataset::Table1 => rows(&TABLE1),
            BuiltinDataset::Q1 => rows(&Q1),
            BuiltinDataset::Q2 => rows(&Q2),
            BuiltinDataset::BaseB => rows(&BASE_B),
        };
        Magma::from_rows(&rows)
            .expect("built-in tables are well formed")
            .with_name(self.key())
    }
}

pub fn table1() -> Magma {
    BuiltinDataset::Table1.table()
}

pub fn q1() -> Magma {
    BuiltinDataset::Q1.table()
}

pub fn q2() -> Magma {
    BuiltinDataset::Q2.table()
}

pub fn base_b() -> Magma {
    BuiltinDataset::BaseB.table()
}
