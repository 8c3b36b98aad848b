//! Orientations, matching signs, symbolic Pfaffians and Pfaffian-orientation
//! search.
//!
//! Signs are taken with respect to a vertex order; unless a caller supplies
//! one, the graph's numeric vertex order is used. Changing the vertex order
//! multiplies every matching sign by the same `+1` or `-1`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphs::{enumerate_perfect_matchings, Graph, Matching};
use crate::linalg;
use crate::polyalg::{rational, MatchingPolynomial, Monomial, Rational};
use crate::Limits;

/// One direction bit per edge of `graph`. Bit `0` directs edge `(a, b)`,
/// `a < b`, from `a` to `b`; bit `1` reverses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation<'g> {
    graph: &'g Graph,
    bits: Vec<bool>,
}

impl<'g> Orientation<'g> {
    pub fn new(graph: &'g Graph, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != graph.edge_count() {
            return Err(Error::domain(format!(
                "orientation has {} bits but the graph has {} edges",
                bits.len(),
                graph.edge_count()
            )));
        }
        Ok(Orientation { graph, bits })
    }

    /// Every edge directed from its smaller endpoint to its larger one.
    pub fn ascending(graph: &'g Graph) -> Self {
        Orientation {
            graph,
            bits: vec![false; graph.edge_count()],
        }
    }

    /// Orientation whose bit `e` is bit `e` of `mask`.
    pub fn from_mask(graph: &'g Graph, mask: u64) -> Result<Self> {
        let m = graph.edge_count();
        if m > 64 || (m < 64 && mask >> m != 0) {
            return Err(Error::domain(format!("mask {mask:#x} does not fit {m} edges")));
        }
        Ok(Orientation {
            graph,
            bits: (0..m).map(|e| mask >> e & 1 == 1).collect(),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn mask(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        Some(
            self.bits
                .iter()
                .enumerate()
                .fold(0u64, |acc, (e, &b)| acc | (u64::from(b) << e)),
        )
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        let (a, b) = self.graph.edge(e);
        if self.bits[e] {
            (b, a)
        } else {
            (a, b)
        }
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            graph: self.graph,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn flip(&self, e: usize) -> Self {
        let mut bits = self.bits.clone();
        bits[e] = !bits[e];
        Orientation {
            graph: self.graph,
            bits,
        }
    }

    /// Re-targets the orientation at another graph with the same edge
    /// count, e.g. after a round trip through the text encoding.
    pub fn on<'h>(&self, graph: &'h Graph) -> Result<Orientation<'h>> {
        Orientation::new(graph, self.bits.clone())
    }

    /// Text encoding: `orient <bitstring>` over the canonical edge order.
    pub fn encode(&self) -> String {
        format!("orient {}", self.bitstring())
    }

    pub fn bitstring(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Parses a bitstring, with or without the `orient` keyword.
    pub fn decode(graph: &'g Graph, text: &str) -> Result<Self> {
        let text = text.trim();
        let body = text.strip_prefix("orient").unwrap_or(text).trim();
        let bits = body
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::domain(format!("invalid orientation character '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Orientation::new(graph, bits)
    }
}

/// Sign (`+1` or `-1`) of the permutation listing `order`'s positions.
fn permutation_parity(mut perm: Vec<usize>) -> i8 {
    let mut sign = 1i8;
    for i in 0..perm.len() {
        while perm[i] != i {
            let j = perm[i];
            perm.swap(i, j);
            sign = -sign;
        }
    }
    sign
}

fn rank_of(order: &[usize], n: usize) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::domain(format!(
            "vertex order lists {} vertices, graph has {n}",
            order.len()
        )));
    }
    let mut rank = vec![usize::MAX; n];
    for (pos, &v) in order.iter().enumerate() {
        if v >= n || rank[v] != usize::MAX {
            return Err(Error::domain("vertex order is not a permutation"));
        }
        rank[v] = pos;
    }
    Ok(rank)
}

/// Sign of perfect matching `m` in orientation `d`: list each edge
/// tail-then-head and take the sign of the resulting arrangement relative to
/// `vertex_order`.
pub fn matching_sign(d: &Orientation<'_>, m: &Matching, vertex_order: &[usize]) -> Result<i8> {
    let n = d.graph.vertex_count();
    let rank = rank_of(vertex_order, n)?;
    sign_with_rank(d, m, &rank)
}

fn sign_with_rank(d: &Orientation<'_>, m: &Matching, rank: &[usize]) -> Result<i8> {
    let n = d.graph.vertex_count();
    let mut seen = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    for &e in m.edges() {
        if e >= d.graph.edge_count() {
            return Err(Error::domain(format!("matching uses unknown edge {e}")));
        }
        let (t, h) = d.arc(e);
        for x in [t, h] {
            if seen[x] {
                return Err(Error::domain(format!("matching covers vertex {x} twice")));
            }
            seen[x] = true;
            seq.push(rank[x]);
        }
    }
    if seq.len() != n {
        return Err(Error::domain("matching is not perfect"));
    }
    Ok(permutation_parity(seq))
}

fn identity_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `PM(G)`: one monomial per perfect matching, coefficient `1`.
pub fn pm_polynomial(graph: &Graph, limits: &Limits) -> Result<MatchingPolynomial> {
    let matchings = enumerate_perfect_matchings(graph, limits.matchings)?;
    MatchingPolynomial::from_terms(
        graph.edge_count(),
        matchings
            .into_iter()
            .map(|m| (Monomial::new(m.edges().to_vec()).expect("matching edges are distinct"), rational(1))),
    )
}

/// `Pf(A_D)` as a polynomial, signs taken in the numeric vertex order.
pub fn pfaffian_form(d: &Orientation<'_>, limits: &Limits) -> Result<MatchingPolynomial> {
    pfaffian_form_in_order(d, &identity_order(d.graph.vertex_count()), limits)
}

pub fn pfaffian_form_in_order(
    d: &Orientation<'_>,
    vertex_order: &[usize],
    limits: &Limits,
) -> Result<MatchingPolynomial> {
    let rank = rank_of(vertex_order, d.graph.vertex_count())?;
    let matchings = enumerate_perfect_matchings(d.graph, limits.matchings)?;
    let mut poly = MatchingPolynomial::zero(d.graph.edge_count());
    for m in &matchings {
        let s = sign_with_rank(d, m, &rank)?;
        poly.add_term(Monomial::new(m.edges().to_vec())?, rational(i64::from(s)))?;
    }
    Ok(poly)
}

/// All perfect matchings share one sign (vacuous without matchings).
pub fn is_pfaffian_orientation(d: &Orientation<'_>, limits: &Limits) -> Result<bool> {
    let form = pfaffian_form(d, limits)?;
    let mut coeffs = form.terms().map(|(_, c)| c);
    Ok(match coeffs.next() {
        None => true,
        Some(first) => coeffs.all(|c| c == first),
    })
}

/// Matching signs of every orientation of a graph with at most 64 edges,
/// without re-deriving permutations.
///
/// Reversing one edge of a matching swaps two adjacent entries of its
/// permutation, so the sign under orientation mask `x` is the sign under the
/// ascending orientation times `(-1)^{|x & M|}`.
#[derive(Debug, Clone)]
pub struct OrientationSweep {
    matchings: Vec<Matching>,
    masks: Vec<u64>,
    base: Vec<i8>,
    edge_count: usize,
}

impl OrientationSweep {
    pub fn new(graph: &Graph, limits: &Limits) -> Result<Self> {
        if graph.edge_count() > 64 {
            return Err(Error::resource(format!(
                "orientation sweep supports at most 64 edges, graph has {}",
                graph.edge_count()
            )));
        }
        let matchings = enumerate_perfect_matchings(graph, limits.matchings)?;
        let ascending = Orientation::ascending(graph);
        let rank = identity_order(graph.vertex_count());
        let base = matchings
            .iter()
            .map(|m| sign_with_rank(&ascending, m, &rank))
            .collect::<Result<Vec<_>>>()?;
        let masks = matchings
            .iter()
            .map(|m| m.edges().iter().fold(0u64, |acc, &e| acc | 1 << e))
            .collect();
        Ok(OrientationSweep {
            matchings,
            masks,
            base,
            edge_count: graph.edge_count(),
        })
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn sign(&self, mask: u64, matching: usize) -> i8 {
        let flips = (mask & self.masks[matching]).count_ones();
        if flips % 2 == 0 {
            self.base[matching]
        } else {
            -self.base[matching]
        }
    }

    pub fn signs(&self, mask: u64) -> Vec<i8> {
        (0..self.matchings.len()).map(|i| self.sign(mask, i)).collect()
    }

    pub fn is_pfaffian(&self, mask: u64) -> bool {
        let mut it = (0..self.matchings.len()).map(|i| self.sign(mask, i));
        match it.next() {
            None => true,
            Some(first) => it.all(|s| s == first),
        }
    }
}

/// Exhaustive search for a Pfaffian orientation; the witness is the smallest
/// orientation mask, independent of how the sweep is split across threads.
pub fn find_pfaffian_orientation<'g>(
    graph: &'g Graph,
    limits: &Limits,
) -> Result<Option<Orientation<'g>>> {
    if graph.edge_count() > limits.search_edges {
        return Err(Error::resource(format!(
            "orientation search over {} edges exceeds cap of {}",
            graph.edge_count(),
            limits.search_edges
        )));
    }
    let sweep = OrientationSweep::new(graph, limits)?;
    let total = 1u64 << graph.edge_count();
    let hit = (0..total).into_par_iter().find_first(|&mask| sweep.is_pfaffian(mask));
    hit.map(|mask| Orientation::from_mask(graph, mask)).transpose()
}

/// Skew-symmetric matrix of even order, stored by its strict upper triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    order: usize,
    upper: Vec<Rational>,
}

impl SkewMatrix {
    pub fn zero(order: usize) -> Self {
        SkewMatrix {
            order,
            upper: vec![rational(0); order * order.saturating_sub(1) / 2],
        }
    }

    /// Reads the strict upper triangle of a full square matrix; the lower
    /// triangle and diagonal are checked for skew-symmetry.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix is not square"));
        }
        let mut m = SkewMatrix::zero(n);
        for i in 0..n {
            if !num_traits::Zero::is_zero(&rows[i][i]) {
                return Err(Error::domain("skew-symmetric matrix needs a zero diagonal"));
            }
            for j in i + 1..n {
                if rows[j][i] != -rows[i][j].clone() {
                    return Err(Error::domain(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
                }
                m.set(i, j, rows[i][j].clone());
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.order);
        i * self.order - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Sets `(i, j)` and implicitly `(j, i) = -value`; requires `i < j`.
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i < j && j < self.order, "set({i}, {j}) outside the strict upper triangle");
        let s = self.slot(i, j);
        self.upper[s] = value;
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => rational(0),
            Less => self.upper[self.slot(i, j)].clone(),
            Greater => -self.upper[self.slot(j, i)].clone(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// Pfaffian as the signed weighted matching sum of the oriented graph `D_A`
/// (edge `ij` for every nonzero `a_ij`, `i < j`, directed from `i` to `j`).
pub fn numeric_pfaffian(a: &SkewMatrix) -> Result<Rational> {
    let n = a.order();
    if n % 2 == 1 {
        return Err(Error::domain(format!("Pfaffian needs even order, got {n}")));
    }
    let mut support = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !num_traits::Zero::is_zero(&a.get(i, j)) {
                support.push((i, j));
            }
        }
    }
    let graph = Graph::new(n, support)?;
    let d = Orientation::ascending(&graph);
    let order = identity_order(n);
    let mut total = rational(0);
    for m in enumerate_perfect_matchings(&graph, usize::MAX)? {
        let sign = matching_sign(&d, &m, &order)?;
        let mut term = rational(i64::from(sign));
        for &e in m.edges() {
            let (i, j) = graph.edge(e);
            term *= a.get(i, j);
        }
        total += term;
    }
    Ok(total)
}

/// Exact determinant of a square rational matrix.
pub fn numeric_determinant(rows: &[Vec<Rational>]) -> Result<Rational> {
    linalg::determinant(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{construct_family, Family};
    use proptest::prelude::*;

    fn limits() -> Limits {
        Limits::default()
    }

    fn matching(g: &Graph, pairs: &[(usize, usize)]) -> Matching {
        Matching::new(pairs.iter().map(|&(a, b)| g.edge_index(a, b).unwrap()).collect())
    }

    #[test]
    fn sign_examples_on_four_vertices() {
        let k4 = Graph::complete(4);
        let d = Orientation::ascending(&k4);
        let order = [0, 1, 2, 3];
        let m12_34 = matching(&k4, &[(0, 1), (2, 3)]);
        let m13_24 = matching(&k4, &[(0, 2), (1, 3)]);
        assert_eq!(matching_sign(&d, &m12_34, &order).unwrap(), 1);
        assert_eq!(matching_sign(&d, &m13_24, &order).unwrap(), -1);
        let e = k4.edge_index(0, 1).unwrap();
        assert_eq!(matching_sign(&d.flip(e), &m12_34, &order).unwrap(), -1);
    }

    #[test]
    fn sign_rejects_non_perfect_matching() {
        let k4 = Graph::complete(4);
        let d = Orientation::ascending(&k4);
        let partial = matching(&k4, &[(0, 1)]);
        assert!(matches!(matching_sign(&d, &partial, &[0, 1, 2, 3]), Err(Error::Domain(_))));
        let overlapping = matching(&k4, &[(0, 1), (1, 2)]);
        assert!(matching_sign(&d, &overlapping, &[0, 1, 2, 3]).is_err());
        assert!(matching_sign(&d, &matching(&k4, &[(0, 1), (2, 3)]), &[0, 1, 1, 3]).is_err());
    }

    #[test]
    fn pm_polynomial_examples() {
        assert_eq!(pm_polynomial(&Graph::complete_bipartite(2, 2), &limits()).unwrap().len(), 2);
        let k33 = pm_polynomial(&Graph::complete_bipartite(3, 3), &limits()).unwrap();
        assert_eq!(k33.len(), 6);
        assert!(k33.terms().all(|(_, c)| *c == rational(1)));
        let empty = Graph::new(2, []).unwrap();
        assert!(pm_polynomial(&empty, &limits()).unwrap().is_zero());
    }

    #[test]
    fn full_reversal_scales_by_parity() {
        let k33 = Graph::complete_bipartite(3, 3);
        let k4 = Graph::complete(4);
        for (g, n) in [(&k33, 3), (&k4, 2)] {
            for mask in [0u64, 5, 77] {
                let d = Orientation::from_mask(g, mask % (1 << g.edge_count())).unwrap();
                let f = pfaffian_form(&d, &limits()).unwrap();
                let r = pfaffian_form(&d.reversed(), &limits()).unwrap();
                let factor = rational(if n % 2 == 0 { 1 } else { -1 });
                assert_eq!(r, f.scaled(&factor));
            }
        }
    }

    #[test]
    fn k2_is_trivially_pfaffian() {
        let k2 = Graph::complete(2);
        for mask in 0..2 {
            let d = Orientation::from_mask(&k2, mask).unwrap();
            assert!(is_pfaffian_orientation(&d, &limits()).unwrap());
        }
    }

    #[test]
    fn ascending_k33_is_not_pfaffian() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(!is_pfaffian_orientation(&Orientation::ascending(&k33), &limits()).unwrap());
    }

    #[test]
    fn c4_pfaffian_orientations_by_exhaustion() {
        let c4 = Graph::cycle(4).unwrap();
        let mut count = 0;
        for mask in 0..16 {
            let d = Orientation::from_mask(&c4, mask).unwrap();
            let form = pfaffian_form(&d, &limits()).unwrap();
            let coeffs: Vec<_> = form.terms().map(|(_, c)| c.clone()).collect();
            assert_eq!(coeffs.len(), 2);
            if coeffs[0] == coeffs[1] {
                count += 1;
                assert!(is_pfaffian_orientation(&d, &limits()).unwrap());
            }
        }
        // each matching sign flips with each of its two edges: half the
        // orientations agree
        assert_eq!(count, 8);
        let found = find_pfaffian_orientation(&c4, &limits()).unwrap().unwrap();
        assert!(is_pfaffian_orientation(&found, &limits()).unwrap());
    }

    #[test]
    fn search_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(find_pfaffian_orientation(&k33, &limits()).unwrap().is_none());
        let grid = Graph::grid(2, 3).unwrap();
        let d = find_pfaffian_orientation(&grid, &limits()).unwrap().unwrap();
        assert!(is_pfaffian_orientation(&d, &limits()).unwrap());
        // smallest witness: nothing below it qualifies
        let witness = d.mask().unwrap();
        for mask in 0..witness {
            let d = Orientation::from_mask(&grid, mask).unwrap();
            assert!(!is_pfaffian_orientation(&d, &limits()).unwrap());
        }
    }

    #[test]
    fn search_respects_edge_cap() {
        let k6 = Graph::complete(6);
        let tight = Limits { search_edges: 14, ..Limits::default() };
        assert!(matches!(find_pfaffian_orientation(&k6, &tight), Err(Error::Resource(_))));
    }

    #[test]
    fn sweep_agrees_with_direct_signs() {
        let k33 = Graph::complete_bipartite(3, 3);
        let sweep = OrientationSweep::new(&k33, &limits()).unwrap();
        let order = identity_order(6);
        for mask in 0..512u64 {
            let d = Orientation::from_mask(&k33, mask).unwrap();
            for (i, m) in sweep.matchings().iter().enumerate() {
                assert_eq!(sweep.sign(mask, i), matching_sign(&d, m, &order).unwrap());
            }
        }
    }

    #[test]
    fn support_matches_pm_polynomial() {
        let g = construct_family(Family::ChainPlus(1)).unwrap();
        let pm = pm_polynomial(&g, &limits()).unwrap();
        for mask in [0u64, 1, 0x2aa, 0x7ff] {
            let d = Orientation::from_mask(&g, mask).unwrap();
            let form = pfaffian_form(&d, &limits()).unwrap();
            assert!(form.monomials().eq(pm.monomials()));
        }
    }

    #[test]
    fn flipping_an_edge_negates_exactly_its_monomials() {
        let k33 = Graph::complete_bipartite(3, 3);
        let d = Orientation::from_mask(&k33, 0b1_0110_1001).unwrap();
        let base = pfaffian_form(&d, &limits()).unwrap();
        for e in 0..k33.edge_count() {
            let flipped = pfaffian_form(&d.flip(e), &limits()).unwrap();
            for (m, c) in base.terms() {
                let expect = if m.contains(e) { -c.clone() } else { c.clone() };
                assert_eq!(flipped.coefficient(m), expect);
            }
        }
    }

    #[test]
    fn orientation_text_encoding() {
        let c4 = Graph::cycle(4).unwrap();
        let d = Orientation::from_mask(&c4, 0b0110).unwrap();
        assert_eq!(d.encode(), "orient 0110");
        assert_eq!(Orientation::decode(&c4, "orient 0110").unwrap(), d);
        assert!(Orientation::decode(&c4, "orient 011").is_err());
        assert!(Orientation::decode(&c4, "orient 01x0").is_err());
    }

    #[test]
    fn pfaffian_small_orders() {
        let mut a = SkewMatrix::zero(2);
        a.set(0, 1, rational(7));
        assert_eq!(numeric_pfaffian(&a).unwrap(), rational(7));

        // a12 a34 - a13 a24 + a14 a23
        let mut b = SkewMatrix::zero(4);
        let vals = [(0, 1, 2), (0, 2, 3), (0, 3, 5), (1, 2, 7), (1, 3, 11), (2, 3, 13)];
        for &(i, j, v) in &vals {
            b.set(i, j, rational(v));
        }
        assert_eq!(numeric_pfaffian(&b).unwrap(), rational(2 * 13 - 3 * 11 + 5 * 7));
        assert!(numeric_pfaffian(&SkewMatrix::zero(3)).is_err());
        assert_eq!(numeric_pfaffian(&SkewMatrix::zero(0)).unwrap(), rational(1));
    }

    #[test]
    fn skew_rows_round_trip() {
        let mut a = SkewMatrix::zero(4);
        a.set(1, 3, rational(-4));
        let rows = a.to_rows();
        assert_eq!(rows[3][1], rational(4));
        assert_eq!(SkewMatrix::from_rows(&rows).unwrap(), a);
        let mut bad = rows.clone();
        bad[3][1] = rational(3);
        assert!(SkewMatrix::from_rows(&bad).is_err());
    }

    fn arb_skew() -> impl Strategy<Value = SkewMatrix> {
        (1usize..=3).prop_flat_map(|half| {
            let n = 2 * half;
            prop::collection::vec((-9i64..=9, 1i64..=3), n * (n - 1) / 2).prop_map(move |vals| {
                let mut a = SkewMatrix::zero(n);
                let mut it = vals.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        let (p, q) = it.next().unwrap();
                        a.set(i, j, Rational::new(p.into(), q.into()));
                    }
                }
                a
            })
        })
    }

    proptest! {
        #[test]
        fn cayley_identity(a in arb_skew()) {
            let pf = numeric_pfaffian(&a).unwrap();
            let det = numeric_determinant(&a.to_rows()).unwrap();
            prop_assert_eq!(&pf * &pf, det);
        }

        #[test]
        fn sign_ignores_edge_listing_order(mask in 0u64..512, pick in 0usize..6, order_seed in 0usize..720) {
            let k33 = Graph::complete_bipartite(3, 3);
            let d = Orientation::from_mask(&k33, mask).unwrap();
            let ms = enumerate_perfect_matchings(&k33, 100).unwrap();
            let m = &ms[pick];
            let order = identity_order(6);
            let rank = rank_of(&order, 6).unwrap();
            // list the edges in a permuted order and compute the sign directly
            let mut edges = m.edges().to_vec();
            let mut seed = order_seed;
            for i in (1..edges.len()).rev() {
                edges.swap(i, seed % (i + 1));
                seed /= i + 1;
            }
            let mut seq = Vec::new();
            for &e in &edges {
                let (t, h) = d.arc(e);
                seq.push(rank[t]);
                seq.push(rank[h]);
            }
            prop_assert_eq!(permutation_parity(seq), matching_sign(&d, m, &order).unwrap());
        }
    }
}
