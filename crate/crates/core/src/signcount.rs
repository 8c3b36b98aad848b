//! Censuses of `m x m` sign matrices and the block covering argument.
//!
//! Sign matrices are enumerated as bit patterns in increasing integer order
//! (see [`SignMatrix`]), so every sweep is a reduction over an integer range
//! and its result does not depend on how the range is split across threads.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;
use rayon::prelude::*;
use serde::Serialize;

use crate::bipartite::SignMatrix;
use crate::error::{Error, Result};
use crate::linalg::determinant_i64;

/// Largest block size for exhaustive censuses (`2^25` matrices).
pub const MAX_CENSUS_ORDER: usize = 5;

/// Largest block count for pointwise cover scans (`512^2` points).
pub const MAX_SCAN_BLOCKS: usize = 2;

const SIGMA3: usize = 512;

fn sign_entries(bits: u64, m: usize, out: &mut [i64]) {
    for (k, x) in out.iter_mut().enumerate().take(m * m) {
        *x = if bits >> k & 1 == 1 { -1 } else { 1 };
    }
}

/// Permanent of a small integer matrix: direct expansion up to order 3,
/// Ryser's inclusion-exclusion formula (Gray-code order) above.
pub fn permanent_i64(a: &[i64], m: usize) -> i64 {
    match m {
        0 => 1,
        1 => a[0],
        2 => a[0] * a[3] + a[1] * a[2],
        3 => {
            a[0] * (a[4] * a[8] + a[5] * a[7]) + a[1] * (a[3] * a[8] + a[5] * a[6])
                + a[2] * (a[3] * a[7] + a[4] * a[6])
        }
        _ => ryser(a, m),
    }
}

fn ryser(a: &[i64], m: usize) -> i64 {
    let mut row_sums = vec![0i64; m];
    let mut subset = 0u64;
    let mut total = 0i64;
    for step in 1u64..(1 << m) {
        // Gray code: flip the lowest set bit of `step`
        let col = step.trailing_zeros() as usize;
        let adding = subset >> col & 1 == 0;
        subset ^= 1 << col;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += a[i * m + col];
            } else {
                *s -= a[i * m + col];
            }
        }
        let prod: i64 = row_sums.iter().product();
        if subset.count_ones() % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    if m % 2 == 0 {
        total
    } else {
        -total
    }
}

fn check_census_order(m: usize) -> Result<()> {
    if m == 0 || m > MAX_CENSUS_ORDER {
        return Err(Error::resource(format!(
            "census order must be in 1..={MAX_CENSUS_ORDER}, got {m}"
        )));
    }
    Ok(())
}

/// Counts over all `2^{m^2}` sign matrices of order `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub m: usize,
    pub total: u64,
    pub permanent_zero_count: u64,
    pub nonsingular_count: u64,
    /// Matrices whose first row and first column are all `+1`.
    pub normalized_total: u64,
    pub normalized_nonsingular_count: u64,
    /// Size of every row/column sign-change orbit, `2^{2m-1}`.
    pub orbit_size: u64,
}

#[derive(Default, Clone, Copy)]
struct Tally {
    per_zero: u64,
    nonsingular: u64,
    normalized: u64,
    normalized_nonsingular: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            per_zero: self.per_zero + o.per_zero,
            nonsingular: self.nonsingular + o.nonsingular,
            normalized: self.normalized + o.normalized,
            normalized_nonsingular: self.normalized_nonsingular + o.normalized_nonsingular,
        }
    }
}

/// Exhaustive census of the order-`m` sign matrices, `1 <= m <= 5`.
pub fn census(m: usize) -> Result<CensusResult> {
    check_census_order(m)?;
    let cells = m * m;
    let total = 1u64 << cells;
    // bits of the first row and first column
    let border: u64 = (0..m).fold(0, |acc, j| acc | 1 << j) | (0..m).fold(0, |acc, i| acc | 1 << (i * m));
    let tally = (0..total)
        .into_par_iter()
        .fold(Tally::default, |mut t, bits| {
            let mut a = [0i64; 25];
            sign_entries(bits, m, &mut a);
            let a = &a[..cells];
            if permanent_i64(a, m) == 0 {
                t.per_zero += 1;
            }
            let nonsingular = determinant_i64(a, m) != 0;
            if nonsingular {
                t.nonsingular += 1;
            }
            if bits & border == 0 {
                t.normalized += 1;
                if nonsingular {
                    t.normalized_nonsingular += 1;
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(CensusResult {
        m,
        total,
        permanent_zero_count: tally.per_zero,
        nonsingular_count: tally.nonsingular,
        normalized_total: tally.normalized,
        normalized_nonsingular_count: tally.normalized_nonsingular,
        orbit_size: 1u64 << (2 * m - 1),
    })
}

/// One row of the normalised `3 x 3` case analysis: the matrix
/// `[[1,1,1],[1,a,b],[1,c,d]]` with `(a, b)` fixed and `(c, d)` free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRow {
    pub a: i64,
    pub b: i64,
    /// Closed form in `c` and `d`.
    pub expression: &'static str,
    /// `((c, d), value)` for all four choices, computed from the matrix.
    pub values: Vec<((i64, i64), i64)>,
    pub nonzero_choices: usize,
}

const PM: [i64; 2] = [1, -1];

fn normalized3(a: i64, b: i64, c: i64, d: i64) -> [i64; 9] {
    [1, 1, 1, 1, a, b, 1, c, d]
}

fn case_rows(value: impl Fn(&[i64; 9]) -> i64, closed: impl Fn(i64, i64, i64, i64) -> i64, exprs: [&'static str; 4]) -> Result<Vec<CaseRow>> {
    let mut rows = Vec::new();
    for (k, (a, b)) in [(1, 1), (1, -1), (-1, 1), (-1, -1)].into_iter().enumerate() {
        let mut values = Vec::new();
        for c in PM {
            for d in PM {
                let v = value(&normalized3(a, b, c, d));
                if v != closed(a, b, c, d) {
                    return Err(Error::domain(format!(
                        "case ({a},{b}) at (c,d)=({c},{d}): matrix gives {v}, closed form '{}' disagrees",
                        exprs[k]
                    )));
                }
                values.push(((c, d), v));
            }
        }
        let nonzero_choices = values.iter().filter(|(_, v)| *v != 0).count();
        rows.push(CaseRow {
            a,
            b,
            expression: exprs[k],
            values,
            nonzero_choices,
        });
    }
    Ok(rows)
}

/// Permanent case table of the normalised `3 x 3` sign matrices; every
/// closed form is checked against the permanent of the matrix itself.
pub fn per_case_table() -> Result<Vec<CaseRow>> {
    case_rows(
        |x| permanent_i64(x, 3),
        |a, b, c, d| match (a, b) {
            (1, 1) => 2 + 2 * c + 2 * d,
            (1, -1) => 2 * d,
            (-1, 1) => 2 * c,
            _ => -2,
        },
        ["2+2c+2d", "2d", "2c", "-2"],
    )
}

/// Determinant case table of the normalised `3 x 3` sign matrices.
pub fn det_case_table() -> Result<Vec<CaseRow>> {
    case_rows(
        |x| determinant_i64(x, 3),
        |a, b, c, d| match (a, b) {
            (1, 1) => 0,
            (1, -1) => 2 * c - 2,
            (-1, 1) => 2 - 2 * d,
            _ => 2 * c - 2 * d,
        },
        ["0", "2c-2", "2-2d", "2c-2d"],
    )
}

/// Number of `X` with `det(S o X) != 0`, by direct enumeration.
pub fn det_cover_count(s: &SignMatrix) -> Result<u64> {
    let m = s.order();
    check_census_order(m)?;
    let cells = m * m;
    let sbits = s.bits() as u64;
    Ok((0..1u64 << cells)
        .into_par_iter()
        .filter(|&x| {
            let mut a = [0i64; 25];
            sign_entries(sbits ^ x, m, &mut a);
            determinant_i64(&a[..cells], m) != 0
        })
        .count() as u64)
}

fn check_blocks(s: &SignMatrix, r: usize) -> Result<()> {
    if r == 0 || s.order() != 3 * r {
        return Err(Error::domain(format!(
            "expected a sign matrix of order {} for {r} blocks, got order {}",
            3 * r,
            s.order()
        )));
    }
    Ok(())
}

/// Nonsingularity of `S_j o X` for all 512 `X`, per diagonal block `j`.
fn block_tables(s: &SignMatrix, r: usize) -> Result<Vec<Vec<bool>>> {
    (0..r)
        .map(|j| {
            let block = s.diagonal_block(3 * j, 3)?.bits() as u64;
            Ok((0..SIGMA3 as u64)
                .map(|x| {
                    let mut a = [0i64; 9];
                    sign_entries(block ^ x, 3, &mut a);
                    determinant_i64(&a, 3) != 0
                })
                .collect())
        })
        .collect()
}

/// Block-diagonal `X = X_1 (+) ... (+) X_r` with `det(S o X) != 0`, counted
/// as the product of per-block cover counts (off-diagonal blocks of `S` meet
/// zeros of `X`).
pub fn block_cover_count(s: &SignMatrix, r: usize) -> Result<u64> {
    check_blocks(s, r)?;
    (0..r).try_fold(1u64, |acc, j| Ok(acc * det_cover_count(&s.diagonal_block(3 * j, 3)?)?))
}

/// The full block-diagonal sign matrix at scan index `point`; block `j` is
/// the base-512 digit `j` of `point`.
pub fn block_point(point: u64, r: usize) -> Result<Vec<SignMatrix>> {
    (0..r)
        .map(|j| SignMatrix::from_bits(3, u128::from(point >> (9 * j) & 511)))
        .collect()
}

/// [`block_cover_count`] by scanning all `512^r` points and taking the full
/// `3r x 3r` determinant of `S o X` at each; `r <= 2`.
pub fn block_cover_count_exhaustive(s: &SignMatrix, r: usize) -> Result<u64> {
    check_blocks(s, r)?;
    if r > MAX_SCAN_BLOCKS {
        return Err(Error::resource(format!(
            "exhaustive block scan supports r <= {MAX_SCAN_BLOCKS}, got {r}"
        )));
    }
    let n = 3 * r;
    let sv = s.to_i64();
    let points = (SIGMA3 as u64).pow(r as u32);
    Ok((0..points)
        .into_par_iter()
        .filter(|&p| {
            let mut a = [0i64; 36];
            for j in 0..r {
                let x = p >> (9 * j) & 511;
                for k in 0..9 {
                    let (i, c) = (3 * j + k / 3, 3 * j + k % 3);
                    let sign = if x >> k & 1 == 1 { -1 } else { 1 };
                    a[i * n + c] = sv[i * n + c] * sign;
                }
            }
            determinant_i64(&a[..n * n], n) != 0
        })
        .count() as u64)
}

/// `ceil((8/3)^r)`, exactly.
pub fn amplification_bound(r: u32) -> BigUint {
    let num = BigUint::from(8u32).pow(r);
    let den = BigUint::from(3u32).pow(r);
    num.div_ceil(&den)
}

/// Outcome of scanning every block-diagonal point against a list of
/// signed-determinant terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub r: usize,
    pub total_points: u64,
    pub per_term_max: u64,
    pub terms: usize,
    #[serde(serialize_with = "crate::signcount::serialize_biguint")]
    pub bound: BigUint,
    pub covered_points: u64,
    pub uncovered_points: u64,
    /// Lowest-index uncovered point, one `3 x 3` block per entry.
    pub uncovered_witness: Option<Vec<SignMatrix>>,
}

impl CoverReport {
    pub fn fully_covered(&self) -> bool {
        self.uncovered_points == 0
    }
}

/// Scans all `512^r` block-diagonal sign matrices `X` (`r <= 2`) and checks
/// whether each makes some term `det(S_i o X)` nonzero.
pub fn refute_cover(signs: &[SignMatrix], r: usize) -> Result<CoverReport> {
    if r == 0 || r > MAX_SCAN_BLOCKS {
        return Err(Error::resource(format!(
            "cover scan supports 1 <= r <= {MAX_SCAN_BLOCKS}, got {r}"
        )));
    }
    for s in signs {
        check_blocks(s, r)?;
    }
    let tables = signs
        .iter()
        .map(|s| block_tables(s, r))
        .collect::<Result<Vec<_>>>()?;
    let total_points = (SIGMA3 as u64).pow(r as u32);
    let covered = |p: u64| {
        tables
            .iter()
            .any(|t| (0..r).all(|j| t[j][(p >> (9 * j) & 511) as usize]))
    };
    let covered_points = (0..total_points).into_par_iter().filter(|&p| covered(p)).count() as u64;
    let uncovered_points = total_points - covered_points;
    let witness = (0..total_points)
        .into_par_iter()
        .find_first(|&p| !covered(p))
        .map(|p| block_point(p, r))
        .transpose()?;
    let per_term_max = 192u64.pow(r as u32);
    if (signs.len() as u64) * per_term_max < total_points && witness.is_none() {
        return Err(Error::domain(format!(
            "{} terms covered all {total_points} points, contradicting the count of {per_term_max} per term",
            signs.len()
        )));
    }
    Ok(CoverReport {
        r,
        total_points,
        per_term_max,
        terms: signs.len(),
        bound: amplification_bound(r as u32),
        covered_points,
        uncovered_points,
        uncovered_witness: witness,
    })
}

/// Which side of the `3 x 3` rate `(8/3)^{1/3}` a block size falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RateDirection {
    Smaller,
    Equal,
    Larger,
}

fn direction(lhs: &BigUint, rhs: &BigUint) -> RateDirection {
    use std::cmp::Ordering::*;
    match lhs.cmp(rhs) {
        Less => RateDirection::Smaller,
        Equal => RateDirection::Equal,
        Greater => RateDirection::Larger,
    }
}

/// Exact comparison of the per-row covering rate of block size `m` with the
/// `3 x 3` rate.
///
/// The rate of a block size is `(T / N_m)^{1/m}` where `N_m` counts the
/// nonsingular sign matrices; comparing with `(8/3)^{1/3}` is done on the
/// integers `T^3 * 3^m` and `N_m^3 * 8^m`. `total_*` uses `T = 2^{m^2}`;
/// `covering_*` uses `T` = matrices with nonzero permanent, which is what a
/// covering argument with `m x m` blocks can actually use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RateComparison {
    pub m: usize,
    pub total: u64,
    pub nonsingular: u64,
    pub permanent_nonzero: u64,
    #[serde(serialize_with = "serialize_biguint")]
    pub total_lhs: BigUint,
    #[serde(serialize_with = "serialize_biguint")]
    pub rhs: BigUint,
    pub total_direction: RateDirection,
    #[serde(serialize_with = "serialize_biguint")]
    pub covering_lhs: BigUint,
    pub covering_direction: RateDirection,
}

pub fn rate(m: usize) -> Result<RateComparison> {
    if !(2..=MAX_CENSUS_ORDER).contains(&m) {
        return Err(Error::resource(format!("rate needs 2 <= m <= {MAX_CENSUS_ORDER}, got {m}")));
    }
    Ok(rate_from_census(&census(m)?))
}

pub fn rate_from_census(c: &CensusResult) -> RateComparison {
    let m = c.m as u32;
    let three_m = BigUint::from(3u32).pow(m);
    let permanent_nonzero = c.total - c.permanent_zero_count;
    let total_lhs = BigUint::from(c.total).pow(3u32) * &three_m;
    let covering_lhs = BigUint::from(permanent_nonzero).pow(3u32) * &three_m;
    let rhs = BigUint::from(c.nonsingular_count).pow(3u32) * BigUint::from(8u32).pow(m);
    RateComparison {
        m: c.m,
        total: c.total,
        nonsingular: c.nonsingular_count,
        permanent_nonzero,
        total_direction: direction(&total_lhs, &rhs),
        covering_direction: direction(&covering_lhs, &rhs),
        total_lhs,
        covering_lhs,
        rhs,
    }
}

/// `det(T o I_t)` for the trailing `t x t` block `T` of `S`: the product of
/// its diagonal signs, `+1` when `t = 0`.
pub fn padding_delta(s: &SignMatrix, t: usize) -> Result<i8> {
    let n = s.order();
    if t > n {
        return Err(Error::domain(format!("padding size {t} exceeds order {n}")));
    }
    Ok((n - t..n).map(|k| s.get(k, k)).product())
}

pub(crate) fn serialize_biguint<S: serde::Serializer>(value: &BigUint, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(value) {
        Ok(v) => ser.serialize_u64(v),
        Err(_) => ser.serialize_str(&value.to_string()),
    }
}

/// `4^g`.
pub fn genus_upper_bound(g: u32) -> BigUint {
    BigUint::from(4u32).pow(g)
}
