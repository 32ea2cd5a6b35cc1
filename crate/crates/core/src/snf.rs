//! Smith normal form of sparse integer matrices.
//!
//! Boundary matrices of coset complexes are large, sparse and full of unit
//! entries. Most of the work is sparse elimination on unit pivots in `i64`;
//! whatever survives is finished densely with big integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix as a list of rows, each a sorted column map.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    /// Adds `value` to entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, value: i64) {
        let e = self.data[r].entry(c).or_insert(0);
        *e += value;
        if *e == 0 {
            self.data[r].remove(&c);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r].get(&c).copied().unwrap_or(0)
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.data[r].iter().map(|(&c, &v)| (c, v))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }
}

/// Nonzero invariant factors of an integer matrix, in divisibility order.
/// Their count is the rank.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let mut ones = 0usize;
    let rest = match eliminate_units(m, &mut ones) {
        Some(rest) => rest,
        None => {
            // i64 overflow during elimination; redo everything densely
            ones = 0;
            m.data.iter().map(|r| r.iter().map(|(&c, &v)| (c, BigInt::from(v))).collect()).collect()
        }
    };
    let mut factors = vec![BigInt::one(); ones];
    factors.extend(dense_smith(rest, m.cols));
    factors.sort();
    factors
}

pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

type BigRows = Vec<BTreeMap<usize, BigInt>>;

/// Repeatedly pivots on `±1` entries, choosing the pivot that minimises
/// fill-in. Returns the remaining rows, or `None` on overflow.
fn eliminate_units(m: &SparseMatrix, ones: &mut usize) -> Option<BigRows> {
    let mut rows: Vec<BTreeMap<usize, i64>> = m.data.clone();
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<BTreeMap<usize, ()>> = vec![BTreeMap::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r, ());
        }
    }
    loop {
        // Markowitz-style choice among unit entries
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if !alive[r] {
                continue;
            }
            for (&c, &v) in row {
                if v.abs() != 1 {
                    continue;
                }
                let cost = (row.len() - 1) * (col_rows[c].len() - 1);
                if best.is_none_or(|b| cost < b.0) {
                    best = Some((cost, r, c));
                }
                if cost == 0 {
                    break;
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = rows[pr].clone();
        let pv = pivot_row[&pc];
        let targets: Vec<usize> = col_rows[pc].keys().copied().filter(|&r| r != pr).collect();
        for r in targets {
            let a = rows[r][&pc];
            // row_r -= a * pv * pivot_row  (pv = ±1 so pv^-1 = pv)
            let f = a.checked_mul(pv)?;
            for (&c, &v) in &pivot_row {
                let delta = f.checked_mul(v)?;
                let entry = rows[r].entry(c).or_insert(0);
                *entry = entry.checked_sub(delta)?;
                if *entry == 0 {
                    rows[r].remove(&c);
                    col_rows[c].remove(&r);
                } else {
                    col_rows[c].insert(r, ());
                }
            }
        }
        for &c in pivot_row.keys() {
            col_rows[c].remove(&pr);
        }
        alive[pr] = false;
        rows[pr].clear();
        *ones += 1;
    }
    Some(
        rows.into_iter()
            .zip(alive)
            .filter(|(r, a)| *a && !r.is_empty())
            .map(|(r, _)| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
            .collect(),
    )
}

/// Dense Smith normal form on the leftover rows; returns nonzero diagonal.
fn dense_smith(rows: BigRows, ncols: usize) -> Vec<BigInt> {
    let rows: Vec<BTreeMap<usize, BigInt>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let mut used: Vec<usize> = rows.iter().flat_map(|r| r.keys().copied()).collect();
    used.sort_unstable();
    used.dedup();
    debug_assert!(used.iter().all(|&c| c < ncols));
    let col_of: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); used.len()];
            for (c, v) in r {
                dense[col_of[c]] = v.clone();
            }
            dense
        })
        .collect();
    smith_diagonal(&mut a)
}

/// In-place Smith normal form of a dense matrix; returns the nonzero
/// invariant factors in order.
pub fn smith_diagonal(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // pivot: minimal nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            // clear column t
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..n {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            // clear row t
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // divisibility: the pivot must divide the rest of the block
            let bad = (t + 1..m).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| {
                !(&a[i][j] % &a[t][t]).is_zero()
            });
            match bad {
                Some((i, _)) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// Abelian group invariants `Z^rank ⊕ ⊕ Z/d` of the cokernel of a
/// relation matrix with `generators` columns.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of a finite group, `None` when the rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 { "Z".to_string() } else { format!("Z^{}", self.rank) });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Cokernel of `relations` (rows are relations among `relations.cols` generators).
pub fn cokernel(relations: &SparseMatrix) -> AbelianInvariants {
    let factors = invariant_factors(relations);
    AbelianInvariants {
        rank: relations.cols - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(rows: &[&[i64]]) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows.len(), rows.first().map_or(0, |r| r.len()));
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.add(i, j, v);
            }
        }
        m
    }

    #[test]
    fn textbook_example() {
        let m = from_dense(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let f: Vec<i64> = invariant_factors(&m).iter().map(|d| d.try_into().unwrap()).collect();
        assert_eq!(f, vec![2, 6, 12]);
    }

    #[test]
    fn cokernels() {
        // Z^2 / <(2, 0), (0, 3)> = Z/6
        let c = cokernel(&from_dense(&[&[2, 0], &[0, 3]]));
        assert_eq!(c.rank, 0);
        assert_eq!(c.torsion, vec![BigInt::from(6)]);
        assert_eq!(c.to_string(), "Z/6");
        let c = cokernel(&from_dense(&[&[0, 0, 0]]));
        assert_eq!(c.rank, 3);
        let c = cokernel(&SparseMatrix::new(0, 0));
        assert!(c.is_trivial());
    }

    #[test]
    fn mixed_unit_and_nonunit() {
        let m = from_dense(&[&[1, 2, 0], &[0, 4, 0], &[3, 6, 5]]);
        let f: Vec<i64> = invariant_factors(&m).iter().map(|d| d.try_into().unwrap()).collect();
        assert_eq!(f, vec![1, 1, 20]);
    }
}
