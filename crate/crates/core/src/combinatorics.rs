//! Permutations of `{1..n}` and the combinatorics attached to them: inversion
//! length, rank matrices, Bruhat order and pattern containment.
//!
//! Permutations are always written in one-line notation, 1-indexed:
//! `2143` is the permutation with `w(1) = 2, w(2) = 1, w(3) = 4, w(4) = 3`.
//! The Bruhat order follows the rank-matrix convention `v >= w` iff
//! `r_ij(v) <= r_ij(w)` for all `i, j`, which makes `n...21` the maximum.
//! Some references use the opposite indexing; invert to compare.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Validates `values` as a bijection of `{1..n}`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("duplicate value {v}")));
            }
            seen[v] = true;
        }
        Ok(Self { image: values })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity needs n >= 1");
        Self {
            image: (1..=n).collect(),
        }
    }

    /// The longest element `n...21`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "longest element needs n >= 1");
        Self {
            image: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// One-line notation, `image()[i - 1] = w(i)`.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.image;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { image: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(Self {
            image: other.image.iter().map(|&i| self.image[i - 1]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn rank_matrix(&self) -> RankMatrix {
        RankMatrix::of(self)
    }

    /// `self >= other` in Bruhat order.
    pub fn bruhat_geq(&self, other: &Self) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let rv = self.rank_matrix();
        let rw = other.rank_matrix();
        Ok(rv.entries.iter().zip(&rw.entries).all(|(a, b)| a <= b))
    }

    /// Whether some subsequence of the word is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Self) -> bool {
        let k = pattern.n();
        if k > self.n() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        extend_match(&self.image, &pattern.image, 0, &mut chosen)
    }

    /// Smoothness of `Y_w` by the pattern criterion: `w` avoids 1324 and 2143.
    pub fn is_pattern_smooth(&self) -> bool {
        let p1324 = Self {
            image: vec![1, 3, 2, 4],
        };
        let p2143 = Self {
            image: vec![2, 1, 4, 3],
        };
        !self.contains_pattern(&p1324) && !self.contains_pattern(&p2143)
    }
}

/// Depth-first scan over increasing index tuples, pruning as soon as the
/// chosen prefix stops being order-isomorphic to the pattern prefix.
fn extend_match(word: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for pos in start..=word.len() - remaining {
        let value = word[pos];
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(q, &prev)| (word[prev] < value) == (pattern[q] < pattern[depth]));
        if consistent {
            chosen.push(pos);
            if extend_match(word, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.image {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`"2143"`) or comma-separated integers
    /// (`"2,1,4,3"`, required once `n > 9`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("'{}' is not an integer", p.trim()))
                    })
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                        Error::InvalidPermutation(format!("'{c}' is not a digit in '{s}'"))
                    })
                })
                .collect::<Result<_>>()?
        };
        Self::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `r[i][j] = #{a <= i : w(a) <= j}`, the rank of the top-left `i x j`
/// block of any matrix in the Schubert cell of `w`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RankMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl RankMatrix {
    pub fn of(w: &Permutation) -> Self {
        let n = w.n();
        let mut entries = vec![0; n * n];
        for i in 1..=n {
            for j in 1..=n {
                let above = if i > 1 { entries[(i - 2) * n + (j - 1)] } else { 0 };
                let here = usize::from(w.apply(i) <= j);
                entries[(i - 1) * n + (j - 1)] = above + here;
            }
        }
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r_ij`, 1-indexed; a zero index reads as 0.
    pub fn get(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 {
            0
        } else {
            self.entries[(i - 1) * self.n + (j - 1)]
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Recovers the permutation from the unit increments of the matrix.
    pub fn permutation(&self) -> Result<Permutation> {
        let n = self.n;
        let mut image = vec![0; n];
        for i in 1..=n {
            for j in 1..=n {
                let step = self.get(i, j) as i64 - self.get(i - 1, j) as i64
                    - self.get(i, j - 1) as i64
                    + self.get(i - 1, j - 1) as i64;
                match step {
                    0 => {}
                    1 if image[i - 1] == 0 => image[i - 1] = j,
                    _ => {
                        return Err(Error::InvalidPermutation(format!(
                            "rank matrix has increment {step} at ({i},{j})"
                        )))
                    }
                }
            }
        }
        Permutation::new(image)
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, row) in self.entries.chunks(self.n).enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of `{1..n}` in lexicographic order of their words.
pub fn enumerate(n: usize) -> LexPermutations {
    assert!(n >= 1, "enumerate needs n >= 1");
    LexPermutations {
        next: Some((1..=n).collect()),
    }
}

pub struct LexPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Standard next-permutation step.
        if let Some(pivot) = (0..succ.len().saturating_sub(1)).rev().find(|&i| succ[i] < succ[i + 1]) {
            let swap = (pivot + 1..succ.len()).rev().find(|&j| succ[j] > succ[pivot]).unwrap();
            succ.swap(pivot, swap);
            succ[pivot + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { image: current })
    }
}
