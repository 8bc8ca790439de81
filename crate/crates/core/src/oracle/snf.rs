//! Smith normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::words::FinitePresentation;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntegerMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] -= q * row[src]`
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] -= v;
        }
    }

    /// `col[dst] -= q * col[src]`
    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] -= v;
        }
    }

    fn row_add(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.data[src * self.cols + j].clone();
            self.data[dst * self.cols + j] += v;
        }
    }

    /// Relation matrix of the abelianization: one row per relator, one
    /// column per generator, entries are exponent sums.
    pub fn relation_matrix(pres: &FinitePresentation) -> Self {
        let cols = pres.num_generators();
        let mut m = IntegerMatrix::zeros(pres.relators().len(), cols);
        for (i, rel) in pres.relators().iter().enumerate() {
            for l in rel.letters() {
                let cell = &mut m.data[i * cols + l.gen as usize];
                *cell += l.exp;
            }
        }
        m
    }
}

/// Invariant factors `d_1 | d_2 | ...` greater than one, plus the free rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SnfResult {
    #[serde(with = "crate::serde_util::big_vec")]
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl SnfResult {
    /// Order of the group, `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.invariant_factors.iter().product())
    }

    pub fn is_cyclic(&self) -> bool {
        self.free_rank + self.invariant_factors.len() <= 1
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }
}

impl std::fmt::Display for SnfResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z_{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Diagonal of the Smith normal form, with all diagonal entries (ones and
/// zeros included) up to `min(rows, cols)`.
pub fn smith_diagonal(mut m: IntegerMatrix) -> Vec<BigInt> {
    let size = m.rows.min(m.cols);
    let mut diag = Vec::with_capacity(size);
    for t in 0..size {
        // Pivot: smallest nonzero absolute value in the trailing block.
        let Some((pi, pj)) = min_nonzero(&m, t) else {
            diag.extend(std::iter::repeat_n(BigInt::zero(), size - t));
            break;
        };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m.rows {
                if m.get(i, t).is_zero() {
                    continue;
                }
                let q = m.get(i, t).div_floor(m.get(t, t));
                m.row_sub(i, t, &q);
                if !m.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..m.cols {
                if m.get(t, j).is_zero() {
                    continue;
                }
                let q = m.get(t, j).div_floor(m.get(t, t));
                m.col_sub(j, t, &q);
                if !m.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Row and column cleared; enforce divisibility of the rest.
                let p = m.get(t, t).clone();
                let bad = (t + 1..m.rows).find(|&i| {
                    (t + 1..m.cols).any(|j| !m.get(i, j).is_multiple_of(&p))
                });
                match bad {
                    None => break,
                    Some(i) => m.row_add(t, i),
                }
            }
            let (pi, pj) = min_nonzero_cross(&m, t);
            m.swap_rows(t, pi);
            m.swap_cols(t, pj);
        }
        diag.push(m.get(t, t).abs());
    }
    diag
}

fn min_nonzero(m: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < m.get(bi, bj).abs()) {
                best = Some((i, j));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` and column `t` beyond the corner.
fn min_nonzero_cross(m: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = m.get(t, t).abs();
    let mut consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let v = m.get(i, j).abs();
        if !v.is_zero() && (best_abs.is_zero() || v < best_abs) {
            best_abs = v;
            *best = (i, j);
        }
    };
    for i in t..m.rows {
        consider(i, t, &mut best);
    }
    for j in t + 1..m.cols {
        consider(t, j, &mut best);
    }
    best
}

pub fn smith_normal_form(m: IntegerMatrix) -> SnfResult {
    let cols = m.cols;
    let diag = smith_diagonal(m);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    SnfResult {
        invariant_factors: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
        free_rank: cols - rank,
    }
}

/// Abelianization of the presented group.
pub fn abelianization(pres: &FinitePresentation) -> SnfResult {
    smith_normal_form(IntegerMatrix::relation_matrix(pres))
}
