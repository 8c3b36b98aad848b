//! Invariant suites behind `verify`: each check reports a verdict, the
//! number of cases it covered, and the first failing case.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bipartite::{bipartite_pf_det_check, signed_det_form, BiadjacencyMatrix, SignMatrix};
use crate::error::{Error, Result};
use crate::graphs::{delete_edges, Graph};
use crate::pfaffian::{
    find_pfaffian_orientation, numeric_determinant, numeric_pfaffian, Orientation, OrientationSweep, SkewMatrix,
};
use crate::polyalg::{format_rational, rational, Rational};
use crate::signcount::{census, det_case_table, det_cover_count, padding_delta, per_case_table, permanent_i64};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemmas,
    Cayley,
    Bipartite,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Cayley => "cayley",
            Suite::Bipartite => "bipartite",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "cayley" => Ok(Suite::Cayley),
            "bipartite" => Ok(Suite::Bipartite),
            "all" => Ok(Suite::All),
            other => Err(Error::domain(format!(
                "unknown suite '{other}' (expected lemmas, cayley, bipartite or all)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str, cases: u64, summary: String, counterexample: Option<String>) -> Self {
        Check {
            name,
            passed: counterexample.is_none(),
            cases,
            summary,
            counterexample,
        }
    }
}

/// Checks of one suite run, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Independent seeded stream for one check, so checks do not perturb each
/// other's randomness.
pub fn check_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

const STREAM_COVER: u64 = 1;
const STREAM_PADDING: u64 = 2;
const STREAM_CAYLEY: u64 = 3;

pub fn run_suite(suite: Suite, seed: u64, limits: &Limits) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Lemmas => lemma_checks(seed)?,
        Suite::Cayley => vec![cayley_check(seed, 100)?],
        Suite::Bipartite => bipartite_checks(limits)?,
        Suite::All => {
            let mut all = lemma_checks(seed)?;
            all.push(cayley_check(seed, 100)?);
            all.extend(bipartite_checks(limits)?);
            all
        }
    };
    Ok(SuiteReport { suite, seed, checks })
}

fn lemma_checks(seed: u64) -> Result<Vec<Check>> {
    let c = census(3)?;
    let mut checks = Vec::new();

    let zero_per = (0u64..512).find(|&bits| {
        let s = SignMatrix::from_bits(3, u128::from(bits)).expect("order 3");
        permanent_i64(&s.to_i64(), 3) == 0
    });
    checks.push(Check::new(
        "sigma3-permanent-nonzero",
        c.total,
        format!("{}/{} zero permanents", c.permanent_zero_count, c.total),
        zero_per.map(|bits| format!("per = 0 at {}", SignMatrix::from_bits(3, u128::from(bits)).expect("order 3"))),
    ));

    let split_ok = c.nonsingular_count == 192
        && c.normalized_nonsingular_count == 6
        && c.orbit_size == 32
        && c.normalized_nonsingular_count * c.orbit_size == c.nonsingular_count;
    checks.push(Check::new(
        "sigma3-nonsingular-count",
        c.total,
        format!(
            "{} nonsingular = {} normalized x {} orbit",
            c.nonsingular_count, c.normalized_nonsingular_count, c.orbit_size
        ),
        (!split_ok).then(|| {
            format!(
                "expected 192 = 6 x 32, got {} = {} x {}",
                c.nonsingular_count, c.normalized_nonsingular_count, c.orbit_size
            )
        }),
    ));

    checks.push(case_table_check("permanent-case-table", per_case_table(), |rows| {
        rows.iter().all(|r| r.nonzero_choices == 4)
    }));
    checks.push(case_table_check("determinant-case-table", det_case_table(), |rows| {
        rows.iter().map(|r| r.nonzero_choices).sum::<usize>() == 6
    }));

    checks.push(det_cover_check(seed, 20)?);
    checks.push(padding_check(seed, 50)?);
    Ok(checks)
}

fn case_table_check(
    name: &'static str,
    table: Result<Vec<crate::signcount::CaseRow>>,
    expected: impl Fn(&[crate::signcount::CaseRow]) -> bool,
) -> Check {
    match table {
        Ok(rows) => {
            let nonzero: usize = rows.iter().map(|r| r.nonzero_choices).sum();
            let ok = expected(&rows);
            Check::new(
                name,
                16,
                format!("{nonzero}/16 normalized matrices nonzero"),
                (!ok).then(|| format!("unexpected nonzero pattern: {nonzero}/16")),
            )
        }
        Err(e) => Check::new(name, 16, "closed form disagrees with matrix".into(), Some(e.to_string())),
    }
}

/// `det_cover_count(S) = 192` for `samples` seeded random `S`.
pub fn det_cover_check(seed: u64, samples: usize) -> Result<Check> {
    let mut rng = check_rng(seed, STREAM_COVER);
    let mut bad = None;
    for _ in 0..samples {
        let s = SignMatrix::random(3, &mut rng)?;
        let n = det_cover_count(&s)?;
        if n != 192 && bad.is_none() {
            bad = Some(format!("S = {s}: {n} covered points"));
        }
    }
    Ok(Check::new(
        "det-cover-count",
        samples as u64,
        format!("det(S o X) != 0 for exactly 192 of 512 X, {samples} sampled S"),
        bad,
    ))
}

/// `det(S o (B (+) I_t)) = delta * det(S' o B)` for seeded random `S` and
/// `t <= 3`, with `B` a generic `3 x 3` variable block.
pub fn padding_check(seed: u64, samples: usize) -> Result<Check> {
    let mut rng = check_rng(seed, STREAM_PADDING);
    let b = BiadjacencyMatrix::generic(3);
    let mut bad = None;
    for _ in 0..samples {
        let t = rng.gen_range(0..=3);
        let s = SignMatrix::random(3 + t, &mut rng)?;
        let padded = signed_det_form(&s, &b.direct_sum_identity(t))?;
        let lead = s.diagonal_block(0, 3)?;
        let delta = padding_delta(&s, t)?;
        let expect = signed_det_form(&lead, &b)?.scaled(&rational(i64::from(delta)));
        if padded != expect && bad.is_none() {
            bad = Some(format!("t = {t}, S = {s}: padded {padded} vs {expect}"));
        }
    }
    Ok(Check::new(
        "identity-padding",
        samples as u64,
        format!("{samples} seeded instances with t <= 3"),
        bad,
    ))
}

/// Skew-symmetric matrix of the given order with upper entries `p/q`,
/// `|p| <= 9`, `1 <= q <= 3`.
pub fn random_skew<R: Rng + ?Sized>(order: usize, rng: &mut R) -> SkewMatrix {
    let mut a = SkewMatrix::zero(order);
    for i in 0..order {
        for j in i + 1..order {
            let p: i64 = rng.gen_range(-9..=9);
            let q: i64 = rng.gen_range(1..=3);
            a.set(i, j, Rational::new(p.into(), q.into()));
        }
    }
    a
}

/// `Pf(A)^2 = det(A)` for `samples` seeded random skew matrices of orders
/// 2 to 8; odd orders check `det(A) = 0`.
pub fn cayley_check(seed: u64, samples: usize) -> Result<Check> {
    let mut rng = check_rng(seed, STREAM_CAYLEY);
    let mut bad = None;
    for _ in 0..samples {
        let order = rng.gen_range(2..=8);
        let a = random_skew(order, &mut rng);
        let det = numeric_determinant(&a.to_rows())?;
        let ok = if order % 2 == 0 {
            let pf = numeric_pfaffian(&a)?;
            &pf * &pf == det
        } else {
            det.is_zero()
        };
        if !ok && bad.is_none() {
            let rows: Vec<String> = a
                .to_rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(" "))
                .collect();
            bad = Some(format!("order {order}, det {}: [{}]", format_rational(&det), rows.join("; ")));
        }
    }
    Ok(Check::new(
        "cayley",
        samples as u64,
        format!("Pf(A)^2 = det(A) over {samples} seeded skew matrices of order 2..8"),
        bad,
    ))
}

fn pf_det_exhaustive(name: &'static str, graph: &Graph, limits: &Limits) -> Result<Check> {
    let count = 1u64 << graph.edge_count();
    let mut bad = None;
    for mask in 0..count {
        let d = Orientation::from_mask(graph, mask)?;
        if !bipartite_pf_det_check(&d, limits)? {
            bad = Some(format!("fails for {}", d.encode()));
            break;
        }
    }
    Ok(Check::new(
        name,
        count,
        format!("Pf(A_D) = (-1)^(n(n-1)/2) det(S_D o B_G) for all {count} orientations"),
        bad,
    ))
}

fn bipartite_checks(limits: &Limits) -> Result<Vec<Check>> {
    let k22 = Graph::complete_bipartite(2, 2);
    let k33 = Graph::complete_bipartite(3, 3);
    let k33e = delete_edges(&k33, &[0])?.graph;
    let mut checks = vec![
        pf_det_exhaustive("pf-det-k22", &k22, limits)?,
        pf_det_exhaustive("pf-det-k33", &k33, limits)?,
        pf_det_exhaustive("pf-det-k33-minus-edge", &k33e, limits)?,
    ];

    for (name, graph, expect) in [
        ("pfaffian-orientation-c4", Graph::cycle(4)?, true),
        ("pfaffian-orientation-grid-2x3", Graph::grid(2, 3)?, true),
        ("pfaffian-orientation-k33", k33.clone(), false),
    ] {
        let found = find_pfaffian_orientation(&graph, limits)?;
        let summary = match &found {
            Some(d) => format!("found {}", d.encode()),
            None => format!("none among {} orientations", 1u64 << graph.edge_count()),
        };
        let bad = (found.is_some() != expect).then(|| summary.clone());
        checks.push(Check::new(name, 1 << graph.edge_count(), summary, bad));
    }

    // the sweep and the direct sign computation must agree everywhere
    let sweep = OrientationSweep::new(&k33, limits)?;
    let pfaffian_masks = (0..512u64).filter(|&m| sweep.is_pfaffian(m)).count();
    checks.push(Check::new(
        "k33-sweep-no-pfaffian",
        512,
        format!("{pfaffian_masks}/512 orientations Pfaffian"),
        (pfaffian_masks != 0).then(|| format!("{pfaffian_masks} Pfaffian orientations of K33")),
    ));
    Ok(checks)
}
