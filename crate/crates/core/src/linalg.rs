//! Exact dense linear algebra: fraction-free determinants and an
//! incremental row-echelon basis used for span membership.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::Rational;

/// Determinant by Bareiss fraction-free elimination.
///
/// Works over the rationals (every division is exact), swapping in the
/// first nonzero pivot below the diagonal.
pub fn determinant(matrix: &[Vec<Rational>]) -> Result<Rational> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|row| row.len() != n) {
        return Err(Error::domain(format!(
            "matrix is not square: {n} rows but a row of length {}",
            row.len()
        )));
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Determinant of a small integer matrix (row-major, `n x n`) by Bareiss
/// elimination with the largest-magnitude pivot in each column.
///
/// Intermediate values are minors of the input, so `i64` suffices for the
/// sign matrices handled here (order at most 11 with entries in {-1, 0, 1}).
pub fn determinant_i64(entries: &[i64], n: usize) -> i64 {
    debug_assert_eq!(entries.len(), n * n);
    if n == 0 {
        return 1;
    }
    let mut a = [0i64; 144];
    let mut heap;
    let a: &mut [i64] = if n * n <= a.len() {
        a[..n * n].copy_from_slice(entries);
        &mut a[..n * n]
    } else {
        heap = entries.to_vec();
        &mut heap
    };
    let mut negate = false;
    let mut prev = 1i64;
    for k in 0..n {
        let pivot = (k..n).max_by_key(|&i| a[i * n + k].abs()).unwrap();
        if a[pivot * n + k] == 0 {
            return 0;
        }
        if pivot != k {
            for j in 0..n {
                a.swap(k * n + j, pivot * n + j);
            }
            negate = !negate;
        }
        let akk = a[k * n + k];
        for i in k + 1..n {
            let aik = a[i * n + k];
            for j in k + 1..n {
                a[i * n + j] = (a[i * n + j] * akk - aik * a[k * n + j]) / prev;
            }
        }
        prev = akk;
    }
    let d = a[n * n - 1];
    if negate {
        -d
    } else {
        d
    }
}

/// Row-echelon basis of a subspace of `Q^len`, grown one vector at a time.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    len: usize,
    // (pivot column, row normalised to 1 at the pivot)
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// Adds `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pivot].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        // keep earlier rows reduced against the new pivot so `reduce` stays a
        // single pass
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Solves `sum_i c_i columns[i] = target` exactly, returning one solution
/// (free variables set to zero) or `None` when `target` is outside the span.
pub fn solve_in_span(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let k = columns.len();
    if columns.iter().any(|c| c.len() != rows) {
        return None;
    }
    // augmented matrix rows x (k + 1)
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut solution = vec![Rational::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        solution[col] = a[i][k].clone();
    }
    Some(solution)
}
