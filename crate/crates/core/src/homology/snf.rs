//! Smith normal form of integer matrices.
//!
//! Elimination runs in two phases. Unit pivots are eliminated first on a
//! sparse row representation, choosing at each step the unit with the
//! smallest Markowitz fill estimate; boundary matrices of simplicial
//! complexes are mostly reduced here. Whatever is left has no unit entries
//! and is small, and goes through a dense Euclidean reduction. Both phases
//! run on `i64` with checked arithmetic and restart on [`BigInt`] if any
//! operation overflows, so results are always exact.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer matrix stored by rows; each row is sorted by column and holds no
/// explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let ncols = dense.first().map_or(0, Vec::len);
        let mut m = Self::zeros(dense.len(), ncols);
        for (r, row) in dense.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(i) => self.rows[r][i].1,
            Err(_) => 0,
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        assert!(r < self.nrows && c < self.ncols, "index out of bounds");
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) if v == 0 => {
                row.remove(i);
            }
            Ok(i) => row[i].1 = v,
            Err(_) if v == 0 => {}
            Err(i) => row.insert(i, (c, v)),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                out[r][c] = v;
            }
        }
        out
    }

    /// Exact product `self * rhs` with arbitrary-precision accumulation.
    pub fn mul_exact(&self, rhs: &SparseMatrix) -> Vec<Vec<BigInt>> {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch");
        let mut out = vec![vec![BigInt::zero(); rhs.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for &(k, a) in row {
                for &(c, b) in &rhs.rows[k] {
                    out[r][c] += BigInt::from(a) * BigInt::from(b);
                }
            }
        }
        out
    }

    /// Returns the matrix with rows and columns permuted:
    /// entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        let mut out = Self::zeros(self.nrows, self.ncols);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                out.set(row_perm[r], col_perm[c], v);
            }
        }
        out
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_rank` of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigUint>,
    pub rank: usize,
}

impl SmithForm {
    /// The diagonal of the normal form padded with zeros to `min(rows, cols)`.
    pub fn diagonal(&self, len: usize) -> Vec<BigUint> {
        let mut d = self.invariant_factors.clone();
        d.resize(len.max(self.rank), BigUint::zero());
        d
    }
}

pub fn smith_normal_form(matrix: &SparseMatrix) -> SmithForm {
    let raw = eliminate::<i64>(matrix)
        .unwrap_or_else(|| eliminate::<BigInt>(matrix).expect("arbitrary-precision elimination cannot overflow"));
    let rank = raw.len();
    SmithForm {
        invariant_factors: divisibility_chain(raw),
        rank,
    }
}

/// Exact integer arithmetic with overflow reported as `None`.
trait Entry: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn smaller_than(&self, other: &Self) -> bool;
    /// `self - q * other`.
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    /// Truncating quotient; the remainder is smaller than `d` in magnitude.
    fn quot(&self, d: &Self) -> Option<Self>;
    fn magnitude(&self) -> BigUint;
}

impl Entry for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn smaller_than(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*other)?)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn magnitude(&self) -> BigUint {
        BigUint::from(self.unsigned_abs())
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn smaller_than(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        Some(self - q * other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn magnitude(&self) -> BigUint {
        BigInt::magnitude(self).clone()
    }
}

/// Diagonalizes `matrix`, returning the nonzero diagonal entries (not yet a
/// divisibility chain), or `None` on overflow.
fn eliminate<T: Entry>(matrix: &SparseMatrix) -> Option<Vec<BigUint>> {
    let mut rows: Vec<Vec<(usize, T)>> = matrix
        .rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, T::from_i64(v))).collect())
        .collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); matrix.ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c].insert(r);
        }
    }
    let mut active = vec![true; matrix.nrows];
    let mut diagonal = Vec::new();

    while let Some((p, c)) = unit_pivot(&rows, &col_rows, &active) {
        let pivot_row = core::mem::take(&mut rows[p]);
        let pivot = pivot_row.iter().find(|e| e.0 == c).map(|e| e.1.clone())?;
        let others: Vec<usize> = col_rows[c].iter().copied().filter(|&r| r != p).collect();
        for r in others {
            let a = rows[r].iter().find(|e| e.0 == c).map(|e| e.1.clone())?;
            // pivot is ±1, so a * pivot clears the entry.
            let q = a.mul(&pivot)?;
            let updated = sub_scaled_row(&rows[r], &q, &pivot_row)?;
            update_columns(&mut col_rows, r, &rows[r], &updated);
            rows[r] = updated;
        }
        for &(cc, _) in &pivot_row {
            col_rows[cc].remove(&p);
        }
        active[p] = false;
        diagonal.push(BigUint::one());
    }

    // Dense phase on whatever survived.
    let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| active[r] && !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..col_rows.len()).filter(|&c| !col_rows[c].is_empty()).collect();
    if !live_rows.is_empty() {
        let mut dense: Vec<Vec<T>> = live_rows
            .iter()
            .map(|&r| {
                let mut out = vec![T::from_i64(0); live_cols.len()];
                for (c, v) in &rows[r] {
                    let j = live_cols.binary_search(c).expect("live column");
                    out[j] = v.clone();
                }
                out
            })
            .collect();
        diagonal.extend(dense_diagonalize(&mut dense)?);
    }
    Some(diagonal)
}

/// Unit entry minimizing `(row_len - 1) * (col_len - 1)`; ties go to the
/// smallest `(row, col)`.
fn unit_pivot<T: Entry>(
    rows: &[Vec<(usize, T)>],
    col_rows: &[BTreeSet<usize>],
    active: &[bool],
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (r, row) in rows.iter().enumerate() {
        if !active[r] {
            continue;
        }
        for (c, v) in row {
            if !v.is_unit() {
                continue;
            }
            let cost = (row.len() - 1) * (col_rows[*c].len() - 1);
            if best.map_or(true, |b| cost < b.0) {
                best = Some((cost, r, *c));
                if cost == 0 {
                    return Some((r, *c));
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// `target - q * source` on sorted sparse rows.
fn sub_scaled_row<T: Entry>(target: &[(usize, T)], q: &T, source: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let ti = target.get(i).map(|e| e.0);
        let sj = source.get(j).map(|e| e.0);
        let (col, value) = match (ti, sj) {
            (Some(a), Some(b)) if a == b => {
                let v = target[i].1.sub_mul(q, &source[j].1)?;
                i += 1;
                j += 1;
                (a, v)
            }
            (Some(a), Some(b)) if a < b => {
                i += 1;
                (a, target[i - 1].1.clone())
            }
            (Some(a), None) => {
                i += 1;
                (a, target[i - 1].1.clone())
            }
            (_, Some(b)) => {
                j += 1;
                (b, zero.sub_mul(q, &source[j - 1].1)?)
            }
            (None, None) => unreachable!(),
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    Some(out)
}

fn update_columns<T>(col_rows: &mut [BTreeSet<usize>], r: usize, old: &[(usize, T)], new: &[(usize, T)]) {
    for (c, _) in old {
        if new.binary_search_by_key(c, |e| e.0).is_err() {
            col_rows[*c].remove(&r);
        }
    }
    for (c, _) in new {
        col_rows[*c].insert(r);
    }
}

/// Euclidean row/column reduction to a diagonal; returns the nonzero
/// diagonal magnitudes.
#[allow(clippy::needless_range_loop)]
fn dense_diagonalize<T: Entry>(a: &mut [Vec<T>]) -> Option<Vec<BigUint>> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for k in 0..nrows.min(ncols) {
        let Some((pi, pj)) = smallest_entry(a, k, nrows, ncols) else {
            break;
        };
        a.swap(k, pi);
        swap_cols(a, k, pj);
        loop {
            let mut clean = true;
            for i in k + 1..nrows {
                if !a[i][k].is_zero() {
                    let q = a[i][k].quot(&a[k][k])?;
                    for j in k..ncols {
                        a[i][j] = a[i][j].sub_mul(&q, &a[k][j])?;
                    }
                    clean &= a[i][k].is_zero();
                }
            }
            for j in k + 1..ncols {
                if !a[k][j].is_zero() {
                    let q = a[k][j].quot(&a[k][k])?;
                    for i in k..nrows {
                        a[i][j] = a[i][j].sub_mul(&q, &a[i][k])?;
                    }
                    clean &= a[k][j].is_zero();
                }
            }
            if clean {
                break;
            }
            // A nonzero remainder is smaller than the pivot: promote it.
            let mut best: Option<(bool, usize)> = None;
            let mut best_val: Option<T> = None;
            for i in k + 1..nrows {
                if !a[i][k].is_zero() && best_val.as_ref().map_or(true, |b| a[i][k].smaller_than(b)) {
                    best = Some((true, i));
                    best_val = Some(a[i][k].clone());
                }
            }
            for j in k + 1..ncols {
                if !a[k][j].is_zero() && best_val.as_ref().map_or(true, |b| a[k][j].smaller_than(b)) {
                    best = Some((false, j));
                    best_val = Some(a[k][j].clone());
                }
            }
            match best {
                Some((true, i)) => a.swap(k, i),
                Some((false, j)) => swap_cols(a, k, j),
                None => unreachable!("an unclean pass leaves a nonzero entry"),
            }
        }
        out.push(a[k][k].magnitude());
    }
    Some(out)
}

fn smallest_entry<T: Entry>(a: &[Vec<T>], k: usize, nrows: usize, ncols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..nrows {
        for j in k..ncols {
            if a[i][j].is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| a[i][j].smaller_than(&a[bi][bj])) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols<T>(a: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// Turns nonzero diagonal entries into the invariant-factor chain by
/// repeated `(gcd, lcm)` replacement.
fn divisibility_chain(mut d: Vec<BigUint>) -> Vec<BigUint> {
    d.sort();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[i].is_one() {
                break;
            }
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn factors(m: &[Vec<i64>]) -> Vec<u64> {
        smith_normal_form(&SparseMatrix::from_dense(m))
            .invariant_factors
            .iter()
            .map(|d| u64::try_from(d.clone()).unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factors(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 4]]), vec![2, 4]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(factors(&[vec![4, 6], vec![6, 9]]), vec![1]);
        assert_eq!(factors(&[vec![6, 4], vec![4, 6]]), vec![2, 10]);
        assert_eq!(factors(&[]), Vec::<u64>::new());
    }

    #[test]
    fn diagonal_padding() {
        let snf = smith_normal_form(&SparseMatrix::from_dense(&[vec![2, 0, 0], vec![0, 0, 0]]));
        assert_eq!(snf.rank, 1);
        assert_eq!(snf.diagonal(2), vec![BigUint::from(2u32), BigUint::zero()]);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let m = [vec![big, big - 1], vec![big - 1, big - 2]];
        let snf = smith_normal_form(&SparseMatrix::from_dense(&m));
        // det = big*(big-2) - (big-1)^2 = -1
        assert_eq!(snf.invariant_factors, vec![BigUint::one(), BigUint::one()]);

        let m = [vec![i64::MAX, 0], vec![0, i64::MAX - 1]];
        let snf = smith_normal_form(&SparseMatrix::from_dense(&m));
        let product = BigUint::from(i64::MAX as u64) * BigUint::from((i64::MAX - 1) as u64);
        assert_eq!(snf.invariant_factors, vec![BigUint::one(), product]);
    }

    #[test]
    fn sparse_set_and_get() {
        let mut m = SparseMatrix::zeros(2, 3);
        m.set(1, 2, 5);
        m.set(1, 0, -1);
        m.set(1, 2, 0);
        assert_eq!(m.get(1, 0), -1);
        assert_eq!(m.get(1, 2), 0);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.to_dense(), vec![vec![0, 0, 0], vec![-1, 0, 0]]);
    }
}
