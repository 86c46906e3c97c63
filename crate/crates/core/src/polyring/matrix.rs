use std::collections::HashMap;

use super::order::TermOrder;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Dense row-major matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows * cols");
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-indexed entry.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    /// Top-left `rows x cols` block.
    pub fn top_left(&self, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(i, j).clone())
    }

    pub fn determinant(&self, ord: &TermOrder) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut cache = MinorCache::new(self);
        let all = if self.rows == 64 { u64::MAX } else { (1u64 << self.rows) - 1 };
        Ok(cache.minor(all, all, ord))
    }
}

/// Memoized minors of one matrix, keyed by (row subset, column subset)
/// bitmasks. A minor is expanded along its last column, so all minors that
/// share a column prefix reuse each other's sub-determinants.
pub struct MinorCache<'a> {
    matrix: &'a PolyMatrix,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl<'a> MinorCache<'a> {
    pub fn new(matrix: &'a PolyMatrix) -> Self {
        assert!(matrix.rows <= 64 && matrix.cols <= 64, "matrix too large for subset masks");
        MinorCache {
            matrix,
            memo: HashMap::new(),
        }
    }

    /// Determinant of the submatrix on `rows` x `cols`; the masks must have
    /// equal popcount.
    pub fn minor(&mut self, rows: u64, cols: u64, ord: &TermOrder) -> Polynomial {
        debug_assert_eq!(rows.count_ones(), cols.count_ones());
        if rows == 0 {
            return Polynomial::one();
        }
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }
        let last_col = 63 - cols.leading_zeros() as usize;
        let sub_cols = cols & !(1u64 << last_col);
        // sign of entry (r, last_col) is (-1)^(pos(r) + k - 1)
        let k = rows.count_ones() as usize;
        let mut acc = Polynomial::zero();
        for (pos, r) in (0..64).filter(|r| rows >> r & 1 == 1).enumerate() {
            let entry = self.matrix.get(r, last_col);
            if entry.is_zero() {
                continue;
            }
            let sub = self.minor(rows & !(1u64 << r), sub_cols, ord);
            if sub.is_zero() {
                continue;
            }
            let prod = entry.mul(&sub, ord);
            acc = if (pos + k - 1).is_multiple_of(2) {
                acc.add(&prod, ord)
            } else {
                acc.sub(&prod, ord)
            };
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}
