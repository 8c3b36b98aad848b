//! k-Pfaffian certificates, exact Pfaffian numbers of small graphs, and
//! lower-bound reports for the graph families.
//!
//! A certificate is a list of orientations with rational coefficients such
//! that `PM(G) = sum_i c_i Pf(A_{D_i})`. Since every `Pf(A_D)` has the same
//! monomials as `PM(G)`, this is the statement that the all-ones vector is
//! the combination `sum_i c_i v_i` of the sign vectors `v_i` of the `D_i`
//! over the perfect matchings. Sign vectors are `+-1`-integral, so a real
//! solution exists iff a rational one does.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{delete_edges, enumerate_perfect_matchings, Family, Graph};
use crate::linalg::{solve_in_span, EchelonBasis};
use crate::pfaffian::{matching_sign, pfaffian_form, pm_polynomial, Orientation, OrientationSweep};
use crate::polyalg::{format_rational, parse_rational, rational, MatchingPolynomial, Rational};
use crate::signcount::{amplification_bound, genus_upper_bound, serialize_biguint};
use crate::Limits;

/// `(sign_D(M))_M` over the perfect matchings in canonical order.
pub type SignVector = Vec<i8>;

/// Orientations `D_1..D_k` with coefficients `c_1..c_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPfaffianCertificate<'g> {
    orientations: Vec<Orientation<'g>>,
    coefficients: Vec<Rational>,
}

impl<'g> KPfaffianCertificate<'g> {
    pub fn new(orientations: Vec<Orientation<'g>>, coefficients: Vec<Rational>) -> Result<Self> {
        if orientations.len() != coefficients.len() {
            return Err(Error::domain(format!(
                "{} orientations but {} coefficients",
                orientations.len(),
                coefficients.len()
            )));
        }
        Ok(KPfaffianCertificate {
            orientations,
            coefficients,
        })
    }

    pub fn len(&self) -> usize {
        self.orientations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orientations.is_empty()
    }

    pub fn orientations(&self) -> &[Orientation<'g>] {
        &self.orientations
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Orientation<'g>, &Rational)> {
        self.orientations.iter().zip(&self.coefficients)
    }

    /// Parses the certificate text format against `graph`:
    /// `k <int>`, then one `orient <bits> coeff <num>/<den>` per term.
    pub fn parse(graph: &'g Graph, text: &str) -> Result<Self> {
        let mut declared = None;
        let mut orientations = Vec::new();
        let mut coefficients = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["k", k] => {
                    if declared.is_some() {
                        return Err(Error::parse(line_no, "repeated 'k' line"));
                    }
                    let k = k
                        .parse::<usize>()
                        .map_err(|_| Error::parse(line_no, format!("invalid term count '{k}'")))?;
                    declared = Some(k);
                }
                ["orient", bits, "coeff", coeff] => {
                    let d = Orientation::decode(graph, bits).map_err(|e| Error::parse(line_no, e.to_string()))?;
                    let c = parse_rational(coeff)
                        .ok_or_else(|| Error::parse(line_no, format!("invalid coefficient '{coeff}'")))?;
                    orientations.push(d);
                    coefficients.push(c);
                }
                _ => return Err(Error::parse(line_no, format!("unrecognised line '{line}'"))),
            }
        }
        let k = declared.ok_or_else(|| Error::parse(1, "missing 'k' line"))?;
        if k != orientations.len() {
            return Err(Error::parse(
                text.lines().count().max(1),
                format!("declared k = {k} but found {} terms", orientations.len()),
            ));
        }
        KPfaffianCertificate::new(orientations, coefficients)
    }
}

impl fmt::Display for KPfaffianCertificate<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.len())?;
        for (d, c) in self.terms() {
            writeln!(f, "{} coeff {}", d.encode(), format_rational(c))?;
        }
        Ok(())
    }
}

/// Sign vector of `d` in the numeric vertex order.
pub fn sign_vector(d: &Orientation<'_>, limits: &Limits) -> Result<SignVector> {
    let graph = d.graph();
    let order: Vec<usize> = (0..graph.vertex_count()).collect();
    enumerate_perfect_matchings(graph, limits.matchings)?
        .iter()
        .map(|m| matching_sign(d, m, &order))
        .collect()
}

fn same_graph(a: &Graph, b: &Graph) -> bool {
    std::ptr::eq(a, b) || (a.vertex_count() == b.vertex_count() && a.edges() == b.edges())
}

fn check_certificate_graph(graph: &Graph, cert: &KPfaffianCertificate<'_>) -> Result<()> {
    if cert.orientations.iter().any(|d| !same_graph(d.graph(), graph)) {
        return Err(Error::domain("certificate orientation belongs to a different graph"));
    }
    Ok(())
}

/// Polynomial route: `sum_i c_i Pf(A_{D_i}) == PM(G)`.
pub fn verify_by_polynomials(graph: &Graph, cert: &KPfaffianCertificate<'_>, limits: &Limits) -> Result<bool> {
    check_certificate_graph(graph, cert)?;
    let pm = pm_polynomial(graph, limits)?;
    let forms = cert
        .orientations
        .iter()
        .map(|d| pfaffian_form(d, limits))
        .collect::<Result<Vec<_>>>()?;
    let combo = if forms.is_empty() {
        MatchingPolynomial::zero(graph.edge_count())
    } else {
        MatchingPolynomial::combine(cert.coefficients.iter().zip(&forms))?
    };
    Ok(combo == pm)
}

/// Sign-vector route: `sum_i c_i v_i` is the all-ones vector.
pub fn verify_by_sign_vectors(graph: &Graph, cert: &KPfaffianCertificate<'_>, limits: &Limits) -> Result<bool> {
    check_certificate_graph(graph, cert)?;
    let count = enumerate_perfect_matchings(graph, limits.matchings)?.len();
    let mut sum = vec![Rational::zero(); count];
    for (d, c) in cert.terms() {
        for (slot, s) in sum.iter_mut().zip(sign_vector(d, limits)?) {
            *slot += c * rational(i64::from(s));
        }
    }
    Ok(sum.iter().all(One::is_one))
}

/// Verifies a certificate by both routes; they must agree.
pub fn verify_certificate(graph: &Graph, cert: &KPfaffianCertificate<'_>, limits: &Limits) -> Result<bool> {
    let by_poly = verify_by_polynomials(graph, cert, limits)?;
    let by_signs = verify_by_sign_vectors(graph, cert, limits)?;
    if by_poly != by_signs {
        return Err(Error::domain(format!(
            "certificate routes disagree: polynomial says {by_poly}, sign vectors say {by_signs}"
        )));
    }
    Ok(by_poly)
}

fn to_rational(v: &[i8]) -> Vec<Rational> {
    v.iter().map(|&s| rational(i64::from(s))).collect()
}

/// Some exact solution of `sum_i c_i v_i = 1`, or `None` when the all-ones
/// vector is outside the span of the orientations' sign vectors.
pub fn solve_coefficients(
    graph: &Graph,
    orientations: &[Orientation<'_>],
    limits: &Limits,
) -> Result<Option<Vec<Rational>>> {
    if orientations.iter().any(|d| !same_graph(d.graph(), graph)) {
        return Err(Error::domain("orientation belongs to a different graph"));
    }
    let count = enumerate_perfect_matchings(graph, limits.matchings)?.len();
    let columns = orientations
        .iter()
        .map(|d| sign_vector(d, limits).map(|v| to_rational(&v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(solve_in_span(&columns, &vec![Rational::one(); count]))
}

/// A sign vector class up to global negation and its first orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignClass {
    /// Representative with first entry `+1`.
    pub vector: SignVector,
    /// Smallest orientation mask realising `vector` or its negation.
    pub mask: u64,
    /// Whether `mask` realises `-vector`.
    pub negated: bool,
}

/// Distinct sign vectors over all `2^|E|` orientations, up to negation, in
/// order of first appearance by orientation mask.
pub fn sign_classes(graph: &Graph, limits: &Limits) -> Result<Vec<SignClass>> {
    check_exact_caps(graph, limits)?;
    let sweep = OrientationSweep::new(graph, limits)?;
    let vectors: Vec<SignVector> = (0..1u64 << graph.edge_count())
        .into_par_iter()
        .map(|mask| sweep.signs(mask))
        .collect();
    let mut seen: HashMap<SignVector, usize> = HashMap::new();
    let mut classes = Vec::new();
    for (mask, v) in vectors.into_iter().enumerate() {
        let negated = v.first().is_some_and(|&s| s < 0);
        let rep: SignVector = if negated { v.iter().map(|s| -s).collect() } else { v };
        if !seen.contains_key(&rep) {
            seen.insert(rep.clone(), classes.len());
            classes.push(SignClass {
                vector: rep,
                mask: mask as u64,
                negated,
            });
        }
    }
    Ok(classes)
}

fn check_exact_caps(graph: &Graph, limits: &Limits) -> Result<()> {
    if graph.edge_count() > limits.exact_edges {
        return Err(Error::resource(format!(
            "exact Pfaffian number needs at most {} edges, graph has {}",
            limits.exact_edges,
            graph.edge_count()
        )));
    }
    let cap = limits.exact_matchings.min(limits.matchings);
    let count = enumerate_perfect_matchings(graph, cap.saturating_add(1))?.len();
    if count > limits.exact_matchings {
        return Err(Error::resource(format!(
            "exact Pfaffian number needs at most {} perfect matchings",
            limits.exact_matchings
        )));
    }
    Ok(())
}

/// Result of the exact Pfaffian number search.
#[derive(Debug, Clone)]
pub struct ExactPfaffianNumber<'g> {
    pub k: usize,
    pub certificate: KPfaffianCertificate<'g>,
    /// Number of distinct sign vectors up to negation.
    pub classes: usize,
    pub matchings: usize,
}

/// Lexicographically first linearly independent `k`-subset of `vectors`
/// whose span contains `target`.
fn first_spanning_subset(vectors: &[Vec<Rational>], target: &[Rational], k: usize) -> Option<Vec<usize>> {
    fn extend(
        vectors: &[Vec<Rational>],
        target: &[Rational],
        k: usize,
        basis: &EchelonBasis,
        chosen: &mut Vec<usize>,
        next: usize,
    ) -> bool {
        if chosen.len() == k {
            return basis.contains(target);
        }
        let need = k - chosen.len();
        for i in next..vectors.len() {
            if vectors.len() - i < need {
                break;
            }
            let mut grown = basis.clone();
            // a dependent vector could be dropped, giving a smaller subset
            // that every smaller k has already ruled out
            if !grown.insert(&vectors[i]) {
                continue;
            }
            chosen.push(i);
            if extend(vectors, target, k, &grown, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let len = target.len();
    (0..vectors.len()).into_par_iter().find_map_first(|first| {
        let mut basis = EchelonBasis::new(len);
        if !basis.insert(&vectors[first]) {
            return None;
        }
        let mut chosen = vec![first];
        extend(vectors, target, k, &basis, &mut chosen, first + 1).then_some(chosen)
    })
}

/// `pf(G)` with a witness certificate, by exhaustive span search over all
/// orientations. Subsets are tried by increasing size and, within a size, in
/// lexicographic order of class indices.
pub fn exact_pfaffian_number<'g>(graph: &'g Graph, limits: &Limits) -> Result<ExactPfaffianNumber<'g>> {
    let classes = sign_classes(graph, limits)?;
    let matchings = classes.first().map_or(0, |c| c.vector.len());
    if matchings == 0 {
        // PM(G) = 0 = Pf(A_D) for every D
        let cert = KPfaffianCertificate::new(vec![Orientation::ascending(graph)], vec![rational(1)])?;
        return Ok(ExactPfaffianNumber {
            k: 1,
            certificate: cert,
            classes: classes.len(),
            matchings,
        });
    }
    let vectors: Vec<Vec<Rational>> = classes.iter().map(|c| to_rational(&c.vector)).collect();
    let ones = vec![Rational::one(); matchings];
    for k in 1..=vectors.len().min(matchings) {
        let Some(subset) = first_spanning_subset(&vectors, &ones, k) else {
            continue;
        };
        let columns: Vec<Vec<Rational>> = subset.iter().map(|&i| vectors[i].clone()).collect();
        let coeffs = solve_in_span(&columns, &ones)
            .ok_or_else(|| Error::domain("spanning subset has no solution"))?;
        let mut orientations = Vec::with_capacity(k);
        let mut coefficients = Vec::with_capacity(k);
        for (&i, c) in subset.iter().zip(coeffs) {
            let class = &classes[i];
            orientations.push(Orientation::from_mask(graph, class.mask)?);
            coefficients.push(if class.negated { -c } else { c });
        }
        let certificate = KPfaffianCertificate::new(orientations, coefficients)?;
        if !verify_certificate(graph, &certificate, limits)? {
            return Err(Error::domain("witness certificate failed verification"));
        }
        return Ok(ExactPfaffianNumber {
            k,
            certificate,
            classes: classes.len(),
            matchings,
        });
    }
    Err(Error::domain("all-ones vector is outside the span of every sign vector"))
}

/// Restricts a certificate of `G` to `G` minus `removed` (same coefficients,
/// orientations restricted to surviving edges) and verifies it there.
pub fn monotonicity_check(
    graph: &Graph,
    cert: &KPfaffianCertificate<'_>,
    removed: &[usize],
    limits: &Limits,
) -> Result<bool> {
    check_certificate_graph(graph, cert)?;
    let sub = delete_edges(graph, removed)?;
    let restricted = cert
        .orientations
        .iter()
        .map(|d| {
            let bits = sub.parent_edge.iter().map(|&e| d.bits()[e]).collect();
            Orientation::new(&sub.graph, bits)
        })
        .collect::<Result<Vec<_>>>()?;
    let cert_h = KPfaffianCertificate::new(restricted, cert.coefficients.clone())?;
    verify_certificate(&sub.graph, &cert_h, limits)
}

/// Families with a lower-bound report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum BoundFamily {
    /// Maximum Pfaffian number over graphs of orientable genus at most `g`.
    Genus(usize),
    Graph(Family),
}

impl BoundFamily {
    pub fn from_tag(tag: &str, param: usize) -> Result<Self> {
        match tag.to_ascii_lowercase().as_str() {
            "genus" => Ok(BoundFamily::Genus(param)),
            other => Family::from_tag(other, param).map(BoundFamily::Graph),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BoundFamily::Genus(_) => "genus",
            BoundFamily::Graph(f) => f.tag(),
        }
    }

    pub fn param(&self) -> usize {
        match self {
            BoundFamily::Genus(g) => *g,
            BoundFamily::Graph(f) => f.param(),
        }
    }
}

/// Lower (and where known, upper) bounds on the Pfaffian number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub family: &'static str,
    pub param: usize,
    #[serde(serialize_with = "serialize_biguint")]
    pub lower_bound: BigUint,
    #[serde(serialize_with = "serialize_opt_biguint")]
    pub upper_bound: Option<BigUint>,
    /// Previously known lower bound, where one applies.
    #[serde(serialize_with = "serialize_opt_biguint")]
    pub comparison: Option<BigUint>,
    pub source: Vec<String>,
}

fn serialize_opt_biguint<S: serde::Serializer>(
    value: &Option<BigUint>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => serialize_biguint(v, ser),
        None => ser.serialize_none(),
    }
}

const SRC_AMPLIFICATION: &str =
    "per(B_1 (+) ... (+) B_r) = sum c_i det(S_i o B) forces k >= (512/192)^r: every block-diagonal sign point has nonzero permanent, each term is nonzero on at most 192^r of 512^r points";
const SRC_BIPARTITE: &str =
    "bipartite reduction: Pf(A_D) = (-1)^{n(n-1)/2} det(S_D o B_G), so a k-Pfaffian bipartite graph gives per(B_G) as k signed determinants";
const SRC_PADDING: &str =
    "specialise the generic n x n matrix to B (+) I_{n-3r}, r = floor(n/3); each term picks up a sign det(T_i o I)";
const SRC_SPANNING: &str = "deleting edges cannot raise the Pfaffian number (set x_e = 0 in a certificate)";
const SRC_UPPER: &str = "graphs of orientable genus g are 4^g-Pfaffian (Galluccio-Loebl; Tesler)";
const SRC_GENUS_BLOCKS: &str = "genus(K33) = 1 and genus is additive over components, so r disjoint K33 blocks have genus r";
const SRC_PRIOR: &str = "earlier linear bound pf(K_{3r,3r}) >= 3r + 1 (Junchaya-Lucchesi-Miranda)";

/// Bound report for a family; all arithmetic is exact.
pub fn lower_bound_report(family: BoundFamily) -> Result<BoundReport> {
    let p = family.param();
    if p < 1 {
        return Err(Error::domain(format!("{}: parameter must be at least 1", family.tag())));
    }
    let blocks_bound = || amplification_bound(p as u32);
    let s = |x: &str| x.to_string();
    let (lower, upper, comparison, source) = match family {
        BoundFamily::Genus(g) => (
            blocks_bound(),
            Some(genus_upper_bound(g as u32)),
            None,
            vec![
                format!("witness: K33 blocks x{g}, which has genus {g}"),
                s(SRC_GENUS_BLOCKS),
                s(SRC_BIPARTITE),
                s(SRC_AMPLIFICATION),
                s(SRC_UPPER),
            ],
        ),
        BoundFamily::Graph(f) => match f {
            Family::Knn(n) | Family::K2n(n) => {
                if n < 3 {
                    return Err(Error::domain(format!("{f}: the bound needs n >= 3")));
                }
                let r = n / 3;
                let mut source = vec![s(SRC_BIPARTITE), s(SRC_PADDING), s(SRC_AMPLIFICATION)];
                let comparison = match f {
                    Family::Knn(_) if n % 3 == 0 => {
                        source.push(s(SRC_PRIOR));
                        Some(BigUint::from(n + 1))
                    }
                    Family::K2n(_) => {
                        source.push(format!("K_{{2n}} contains a spanning K_{{{n},{n}}}"));
                        source.push(s(SRC_SPANNING));
                        None
                    }
                    _ => None,
                };
                (amplification_bound(r as u32), None, comparison, source)
            }
            Family::K33Blocks(r) => (
                blocks_bound(),
                Some(genus_upper_bound(r as u32)),
                None,
                vec![s(SRC_BIPARTITE), s(SRC_AMPLIFICATION), s(SRC_GENUS_BLOCKS), s(SRC_UPPER)],
            ),
            Family::Chain(g) => (
                blocks_bound(),
                Some(genus_upper_bound(g as u32)),
                None,
                vec![
                    format!("deleting the {} connector edges leaves K33 blocks x{g}", 2 * (g - 1)),
                    s(SRC_SPANNING),
                    s(SRC_BIPARTITE),
                    s(SRC_AMPLIFICATION),
                    format!("chain of {g} blocks has genus exactly {g}"),
                    s(SRC_UPPER),
                ],
            ),
            Family::ChainPlus(g) => (
                blocks_bound(),
                None,
                None,
                vec![
                    format!("chain of {g} blocks is a spanning subgraph (drop a_1 b_1 and alpha_1 beta_1)"),
                    format!("deleting the {} connector edges leaves K33 blocks x{g}", 2 * (g - 1)),
                    s(SRC_SPANNING),
                    s(SRC_BIPARTITE),
                    s(SRC_AMPLIFICATION),
                ],
            ),
        },
    };
    if let Some(u) = &upper {
        if &lower > u {
            return Err(Error::domain("lower bound exceeds upper bound"));
        }
    }
    Ok(BoundReport {
        family: family.tag(),
        param: p,
        lower_bound: lower,
        upper_bound: upper,
        comparison,
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfaffian::find_pfaffian_orientation;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn sign_vector_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let d = find_pfaffian_orientation(&c4, &limits()).unwrap().unwrap();
        let v = sign_vector(&d, &limits()).unwrap();
        assert!(v.iter().all(|&s| s == v[0]));

        let k33 = Graph::complete_bipartite(3, 3);
        let d = Orientation::from_mask(&k33, 0b1_1010_0110).unwrap();
        let v = sign_vector(&d, &limits()).unwrap();
        let r = sign_vector(&d.reversed(), &limits()).unwrap();
        assert!(v.iter().zip(&r).all(|(a, b)| *a == -*b));

        let k2 = Graph::complete(2);
        assert_eq!(sign_vector(&Orientation::ascending(&k2), &limits()).unwrap().len(), 1);
    }

    #[test]
    fn verify_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let d = find_pfaffian_orientation(&c4, &limits()).unwrap().unwrap();
        let s = sign_vector(&d, &limits()).unwrap()[0];
        let cert = KPfaffianCertificate::new(vec![d.clone()], vec![rational(i64::from(s))]).unwrap();
        assert!(verify_certificate(&c4, &cert, &limits()).unwrap());
        let wrong = KPfaffianCertificate::new(vec![d], vec![rational(-i64::from(s))]).unwrap();
        assert!(!verify_certificate(&c4, &wrong, &limits()).unwrap());
    }

    #[test]
    fn no_single_orientation_certifies_k33() {
        let k33 = Graph::complete_bipartite(3, 3);
        for mask in 0..512 {
            let d = Orientation::from_mask(&k33, mask).unwrap();
            assert_eq!(solve_coefficients(&k33, &[d.clone()], &limits()).unwrap(), None);
            for c in [-1, 1, 2] {
                let cert = KPfaffianCertificate::new(vec![d.clone()], vec![rational(c)]).unwrap();
                assert!(!verify_certificate(&k33, &cert, &limits()).unwrap());
            }
        }
    }

    #[test]
    fn solve_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let d = find_pfaffian_orientation(&c4, &limits()).unwrap().unwrap();
        let sol = solve_coefficients(&c4, &[d.clone()], &limits()).unwrap().unwrap();
        assert!(sol[0] == rational(1) || sol[0] == rational(-1));

        // v and -v with v non-constant: a line missing the all-ones vector
        let non_pf = (0..16)
            .map(|m| Orientation::from_mask(&c4, m).unwrap())
            .find(|d| {
                let v = sign_vector(d, &limits()).unwrap();
                v[0] != v[1]
            })
            .unwrap();
        let rev = non_pf.flip(0).flip(1).flip(2).flip(3);
        assert_eq!(solve_coefficients(&c4, &[non_pf, rev], &limits()).unwrap(), None);
    }

    #[test]
    fn exact_small_graphs() {
        let k2 = Graph::complete(2);
        assert_eq!(exact_pfaffian_number(&k2, &limits()).unwrap().k, 1);
        let k22 = Graph::complete_bipartite(2, 2);
        assert_eq!(exact_pfaffian_number(&k22, &limits()).unwrap().k, 1);
        let empty = Graph::new(4, [(0, 1)]).unwrap();
        assert_eq!(exact_pfaffian_number(&empty, &limits()).unwrap().k, 1);
    }

    #[test]
    fn exact_k33_is_four() {
        let k33 = Graph::complete_bipartite(3, 3);
        let exact = exact_pfaffian_number(&k33, &limits()).unwrap();
        assert_eq!(exact.k, 4);
        assert!(verify_certificate(&k33, &exact.certificate, &limits()).unwrap());
        let orientations = exact.certificate.orientations().to_vec();
        let sol = solve_coefficients(&k33, &orientations, &limits()).unwrap();
        assert!(sol.is_some());
    }

    #[test]
    fn exact_respects_caps() {
        let k6 = Graph::complete(6);
        assert!(matches!(exact_pfaffian_number(&k6, &limits()), Err(Error::Resource(_))));
        let k44 = Graph::complete_bipartite(4, 4);
        // 24 perfect matchings
        let wide = Limits { exact_edges: 16, exact_matchings: 20, ..Limits::default() };
        assert!(matches!(exact_pfaffian_number(&k44, &wide), Err(Error::Resource(_))));
    }

    #[test]
    fn exact_one_iff_pfaffian_orientation_exists() {
        let graphs = vec![
            Graph::cycle(4).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::grid(2, 3).unwrap(),
            Graph::complete(4),
            Graph::complete_bipartite(3, 3),
            Graph::path(4).unwrap(),
            Graph::complete_bipartite(2, 2).disjoint_union(&Graph::complete(4)),
        ];
        for g in &graphs {
            let k = exact_pfaffian_number(g, &limits()).unwrap().k;
            let pfaffian = find_pfaffian_orientation(g, &limits()).unwrap().is_some();
            assert_eq!(k == 1, pfaffian, "{g:?}");
        }
    }

    #[test]
    fn monotonicity_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let d = find_pfaffian_orientation(&c4, &limits()).unwrap().unwrap();
        let s = sign_vector(&d, &limits()).unwrap()[0];
        let cert = KPfaffianCertificate::new(vec![d], vec![rational(i64::from(s))]).unwrap();
        assert!(monotonicity_check(&c4, &cert, &[], &limits()).unwrap());
        for e in 0..4 {
            assert!(monotonicity_check(&c4, &cert, &[e], &limits()).unwrap());
        }

        let k33 = Graph::complete_bipartite(3, 3);
        let exact = exact_pfaffian_number(&k33, &limits()).unwrap();
        for e in 0..9 {
            assert!(monotonicity_check(&k33, &exact.certificate, &[e], &limits()).unwrap());
        }
        assert!(monotonicity_check(&k33, &exact.certificate, &[0, 4, 8], &limits()).unwrap());
    }

    #[test]
    fn negating_a_term_only_flips_its_coefficient() {
        let k33 = Graph::complete_bipartite(3, 3);
        let exact = exact_pfaffian_number(&k33, &limits()).unwrap();
        let mut orientations = exact.certificate.orientations().to_vec();
        let mut coefficients = exact.certificate.coefficients().to_vec();
        orientations[1] = orientations[1].reversed();
        coefficients[1] = -coefficients[1].clone();
        let cert = KPfaffianCertificate::new(orientations, coefficients).unwrap();
        assert!(verify_certificate(&k33, &cert, &limits()).unwrap());
    }

    #[test]
    fn certificate_text_round_trip() {
        let k33 = Graph::complete_bipartite(3, 3);
        let exact = exact_pfaffian_number(&k33, &limits()).unwrap();
        let text = exact.certificate.to_string();
        assert!(text.starts_with("k 4\norient "));
        let back = KPfaffianCertificate::parse(&k33, &text).unwrap();
        assert_eq!(back, exact.certificate);
    }

    #[test]
    fn certificate_parse_errors() {
        let k2 = Graph::complete(2);
        let err = KPfaffianCertificate::parse(&k2, "k 1\norient 1 coeff x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = KPfaffianCertificate::parse(&k2, "k 2\norient 1 coeff 1/1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = KPfaffianCertificate::parse(&k2, "orient 10 coeff 1/1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn certificate_for_another_graph_is_rejected() {
        let k2 = Graph::complete(2);
        let other = Graph::new(2, [(0, 1)]).unwrap().disjoint_union(&Graph::complete(2));
        let cert = KPfaffianCertificate::new(vec![Orientation::ascending(&other)], vec![rational(1)]).unwrap();
        assert!(matches!(verify_certificate(&k2, &cert, &limits()), Err(Error::Domain(_))));
    }

    #[test]
    fn bound_examples() {
        let knn9 = lower_bound_report(BoundFamily::Graph(Family::Knn(9))).unwrap();
        assert_eq!(knn9.lower_bound, BigUint::from(19u32));
        assert_eq!(knn9.comparison, Some(BigUint::from(10u32)));
        let g1 = lower_bound_report(BoundFamily::Genus(1)).unwrap();
        assert_eq!(g1.lower_bound, BigUint::from(3u32));
        assert_eq!(g1.upper_bound, Some(BigUint::from(4u32)));
        let blocks = lower_bound_report(BoundFamily::Graph(Family::K33Blocks(2))).unwrap();
        assert_eq!(blocks.lower_bound, BigUint::from(8u32));
        assert_eq!(blocks.upper_bound, Some(BigUint::from(16u32)));
        let knn4 = lower_bound_report(BoundFamily::Graph(Family::Knn(4))).unwrap();
        assert_eq!(knn4.lower_bound, BigUint::from(3u32));
        assert_eq!(knn4.comparison, None);
        let k2n = lower_bound_report(BoundFamily::Graph(Family::K2n(6))).unwrap();
        assert_eq!(k2n.lower_bound, BigUint::from(8u32));
    }

    #[test]
    fn bound_errors() {
        assert!(lower_bound_report(BoundFamily::Graph(Family::Knn(2))).is_err());
        assert!(lower_bound_report(BoundFamily::Graph(Family::K2n(1))).is_err());
        assert!(lower_bound_report(BoundFamily::Genus(0)).is_err());
        assert!(BoundFamily::from_tag("petersen", 1).is_err());
    }
}
