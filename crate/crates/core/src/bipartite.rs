//! Biadjacency matrices, sign matrices, and the identity
//! `Pf(A_D) = (-1)^{n(n-1)/2} det(S_D o B_G)` for balanced bipartite graphs.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::pfaffian::{pfaffian_form_in_order, Orientation};
use crate::polyalg::{rational, MatchingPolynomial, Monomial};
use crate::Limits;

/// Largest order a bit-packed [`SignMatrix`] can hold.
pub const MAX_SIGN_ORDER: usize = 11;

/// `m x m` matrix over `{+1, -1}`, bit-packed row-major: bit `i*m + j` set
/// means entry `(i, j)` is `-1`. For `m = 3` the integers `0..512` are
/// exactly the 512 sign matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignMatrix {
    order: usize,
    bits: u128,
}

impl SignMatrix {
    pub fn all_ones(order: usize) -> Result<Self> {
        SignMatrix::from_bits(order, 0)
    }

    pub fn from_bits(order: usize, bits: u128) -> Result<Self> {
        if order == 0 || order > MAX_SIGN_ORDER {
            return Err(Error::domain(format!(
                "sign matrix order must be in 1..={MAX_SIGN_ORDER}, got {order}"
            )));
        }
        let cells = order * order;
        if cells < 128 && bits >> cells != 0 {
            return Err(Error::domain(format!("bit pattern {bits:#x} too wide for order {order}")));
        }
        Ok(SignMatrix { order, bits })
    }

    /// Builds from rows of `+1` / `-1` entries.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let m = rows.len();
        let mut s = SignMatrix::all_ones(m)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::domain("sign matrix rows must be square"));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    1 => {}
                    -1 => s.set(i, j, -1),
                    other => return Err(Error::domain(format!("sign entry must be +-1, got {other}"))),
                }
            }
        }
        Ok(s)
    }

    pub fn random<R: Rng + ?Sized>(order: usize, rng: &mut R) -> Result<Self> {
        let cells = order * order;
        let raw: u128 = rng.gen();
        let bits = if cells >= 128 { raw } else { raw & ((1u128 << cells) - 1) };
        SignMatrix::from_bits(order, bits)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        if self.bits >> (i * self.order + j) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: i8) {
        let bit = 1u128 << (i * self.order + j);
        if value < 0 {
            self.bits |= bit;
        } else {
            self.bits &= !bit;
        }
    }

    /// Entrywise product; on bit patterns this is XOR, so `S o (S o X) = X`.
    pub fn hadamard(&self, other: &SignMatrix) -> Result<SignMatrix> {
        if self.order != other.order {
            return Err(Error::domain(format!(
                "entrywise product of orders {} and {}",
                self.order, other.order
            )));
        }
        Ok(SignMatrix {
            order: self.order,
            bits: self.bits ^ other.bits,
        })
    }

    /// Square sub-block with top-left corner `(start, start)`.
    pub fn diagonal_block(&self, start: usize, size: usize) -> Result<SignMatrix> {
        if start + size > self.order || size == 0 {
            return Err(Error::domain(format!(
                "block {start}..{} outside order {}",
                start + size,
                self.order
            )));
        }
        let mut out = SignMatrix::all_ones(size)?;
        for i in 0..size {
            for j in 0..size {
                out.set(i, j, self.get(start + i, start + j));
            }
        }
        Ok(out)
    }

    /// Entries as a row-major `i64` buffer.
    pub fn to_i64(&self) -> Vec<i64> {
        let m = self.order;
        (0..m * m).map(|k| i64::from(self.get(k / m, k % m))).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl fmt::Display for SignMatrix {
    /// Row-major `+`/`-` characters, rows separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            if i > 0 {
                f.write_str(" ")?;
            }
            for j in 0..self.order {
                f.write_str(if self.get(i, j) < 0 { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

impl FromStr for SignMatrix {
    type Err = Error;

    /// Accepts `+`/`-` characters with any whitespace; the order is the
    /// square root of the symbol count.
    fn from_str(text: &str) -> Result<Self> {
        let mut signs = Vec::new();
        for c in text.chars() {
            match c {
                '+' => signs.push(false),
                '-' => signs.push(true),
                c if c.is_whitespace() => {}
                other => return Err(Error::domain(format!("invalid sign character '{other}'"))),
            }
        }
        let m = (1..=MAX_SIGN_ORDER)
            .find(|m| m * m == signs.len())
            .ok_or_else(|| Error::domain(format!("{} signs do not form a square matrix", signs.len())))?;
        let bits = signs
            .iter()
            .enumerate()
            .fold(0u128, |acc, (k, &neg)| acc | (u128::from(neg) << k));
        SignMatrix::from_bits(m, bits)
    }
}

impl serde::Serialize for SignMatrix {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// One cell of a symbolic square matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Absent,
    /// The edge variable `x_e`.
    Edge(usize),
    /// The constant `1` (identity padding).
    Unit,
}

/// Square matrix whose cells are distinct edge variables, zeros, or ones.
/// For a balanced bipartite graph, rows follow `U` and columns follow `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiadjacencyMatrix {
    n: usize,
    cells: Vec<Cell>,
    edge_count: usize,
}

impl BiadjacencyMatrix {
    /// `n x n` matrix of distinct variables `x_{i*n + j}`.
    pub fn generic(n: usize) -> Self {
        BiadjacencyMatrix {
            n,
            cells: (0..n * n).map(Cell::Edge).collect(),
            edge_count: n * n,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn cell(&self, i: usize, j: usize) -> Cell {
        self.cells[i * self.n + j]
    }

    /// `self (+) I_t`: block diagonal with a `t x t` identity appended.
    pub fn direct_sum_identity(&self, t: usize) -> Self {
        let n = self.n + t;
        let mut cells = vec![Cell::Absent; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                cells[i * n + j] = self.cell(i, j);
            }
        }
        for k in self.n..n {
            cells[k * n + k] = Cell::Unit;
        }
        BiadjacencyMatrix {
            n,
            cells,
            edge_count: self.edge_count,
        }
    }
}

fn balanced_sides(graph: &Graph) -> Result<(&[usize], &[usize])> {
    let (u, v) = graph
        .bipartition()
        .ok_or_else(|| Error::domain("graph has no recorded bipartition"))?;
    if u.len() != v.len() {
        return Err(Error::domain(format!(
            "bipartition is unbalanced: |U| = {}, |V| = {}",
            u.len(),
            v.len()
        )));
    }
    Ok((u, v))
}

/// `B_G`: rows indexed by `U`, columns by `V`, cell `(i, j)` holding the
/// edge `u_i v_j` when present.
pub fn biadjacency(graph: &Graph) -> Result<BiadjacencyMatrix> {
    let (u, v) = balanced_sides(graph)?;
    let n = u.len();
    let mut cells = vec![Cell::Absent; n * n];
    for (i, &a) in u.iter().enumerate() {
        for (j, &b) in v.iter().enumerate() {
            if let Some(e) = graph.edge_index(a, b) {
                cells[i * n + j] = Cell::Edge(e);
            }
        }
    }
    Ok(BiadjacencyMatrix {
        n,
        cells,
        edge_count: graph.edge_count(),
    })
}

/// `S_D`: `+1` where `u_i v_j` points from `U` to `V`, `-1` where it points
/// back, and `+1` on non-edges.
pub fn orientation_sign_matrix(d: &Orientation<'_>) -> Result<SignMatrix> {
    let graph = d.graph();
    let (u, v) = balanced_sides(graph)?;
    let mut s = SignMatrix::all_ones(u.len())?;
    for (i, &a) in u.iter().enumerate() {
        for (j, &b) in v.iter().enumerate() {
            if let Some(e) = graph.edge_index(a, b) {
                if d.arc(e).0 != a {
                    s.set(i, j, -1);
                }
            }
        }
    }
    Ok(s)
}

/// Expands a symbolic permanent or determinant of `S o B` over all
/// permutations; `signed` selects the determinant.
fn expand(s: &SignMatrix, b: &BiadjacencyMatrix, signed: bool) -> Result<MatchingPolynomial> {
    if s.order() != b.order() {
        return Err(Error::domain(format!(
            "sign matrix of order {} against a matrix of order {}",
            s.order(),
            b.order()
        )));
    }
    let n = b.order();
    let mut poly = MatchingPolynomial::zero(b.edge_count());
    let mut vars = Vec::with_capacity(n);
    let mut used = vec![false; n];
    expand_row(s, b, signed, 0, 1, &mut used, &mut vars, &mut poly)?;
    Ok(poly)
}

#[allow(clippy::too_many_arguments)]
fn expand_row(
    s: &SignMatrix,
    b: &BiadjacencyMatrix,
    signed: bool,
    row: usize,
    coeff: i64,
    used: &mut [bool],
    vars: &mut Vec<usize>,
    poly: &mut MatchingPolynomial,
) -> Result<()> {
    let n = b.order();
    if row == n {
        return poly.add_term(Monomial::new(vars.clone())?, rational(coeff));
    }
    for col in 0..n {
        if used[col] {
            continue;
        }
        let var = match b.cell(row, col) {
            Cell::Absent => continue,
            Cell::Edge(e) => Some(e),
            Cell::Unit => None,
        };
        // columns already taken to the right of `col` are inversions
        let inversions = used[col + 1..].iter().filter(|&&u| u).count();
        let mut c = coeff * i64::from(s.get(row, col));
        if signed && inversions % 2 == 1 {
            c = -c;
        }
        used[col] = true;
        if let Some(e) = var {
            vars.push(e);
        }
        expand_row(s, b, signed, row + 1, c, used, vars, poly)?;
        if var.is_some() {
            vars.pop();
        }
        used[col] = false;
    }
    Ok(())
}

/// `det(S o B)` by permutation expansion.
pub fn signed_det_form(s: &SignMatrix, b: &BiadjacencyMatrix) -> Result<MatchingPolynomial> {
    expand(s, b, true)
}

/// `per(S o B)` by permutation expansion.
pub fn signed_permanent_form(s: &SignMatrix, b: &BiadjacencyMatrix) -> Result<MatchingPolynomial> {
    expand(s, b, false)
}

/// `per(B)`.
pub fn symbolic_permanent(b: &BiadjacencyMatrix) -> Result<MatchingPolynomial> {
    expand(&SignMatrix::all_ones(b.order().max(1))?, b, false)
}

/// `(-1)^{n(n-1)/2}`.
pub fn pf_det_sign(n: usize) -> i8 {
    if (n * n.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Checks `Pf(A_D) = (-1)^{n(n-1)/2} det(S_D o B_G)` as polynomials, with
/// Pfaffian signs taken in the `U`-then-`V` vertex order.
pub fn bipartite_pf_det_check(d: &Orientation<'_>, limits: &Limits) -> Result<bool> {
    let graph = d.graph();
    let (u, v) = balanced_sides(graph)?;
    let order: Vec<usize> = u.iter().chain(v.iter()).copied().collect();
    let pf = pfaffian_form_in_order(d, &order, limits)?;
    let det = signed_det_form(&orientation_sign_matrix(d)?, &biadjacency(graph)?)?;
    Ok(pf == det.scaled(&rational(i64::from(pf_det_sign(u.len())))))
}
