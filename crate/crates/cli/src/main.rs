//! `kpfaff`: verification suites, sign-matrix censuses, cover refutations,
//! Pfaffian numbers and bound reports, with JSON reports on stdout.

mod report;
mod source;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kpfaff_core::bipartite::SignMatrix;
use kpfaff_core::graphs::{construct_family, enumerate_perfect_matchings, Family, Graph};
use kpfaff_core::pfaffian::pm_polynomial;
use kpfaff_core::pfnum::{
    exact_pfaffian_number, lower_bound_report, sign_vector, verify_certificate, BoundFamily, KPfaffianCertificate,
};
use kpfaff_core::polyalg::{format_rational, rational, Rational};
use kpfaff_core::signcount::{census, det_case_table, per_case_table, rate_from_census, refute_cover, CaseRow};
use kpfaff_core::suites::{run_suite, Suite};
use kpfaff_core::{Error, Limits};

use report::{to_value, CliError, Failure, Outcome, RunReport, Table};

#[derive(Parser)]
#[command(name = "kpfaff", version, about = "Pfaffian numbers, sign-matrix censuses and covering bounds")]
struct Cli {
    /// Seed for randomised checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for enumeration sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Compare the rendered report byte-for-byte with this file.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
    /// Maximum number of perfect matchings to enumerate.
    #[arg(long, global = true)]
    cap_matchings: Option<usize>,
    /// Maximum edge count for orientation sweeps and exact Pfaffian numbers.
    #[arg(long, global = true)]
    cap_edges: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Allow long runs (census of 5 x 5 sign matrices).
    #[arg(long, global = true)]
    slow: bool,
    /// Add elapsed wall time to the report (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Cayley,
    Bipartite,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Cayley => Suite::Cayley,
            SuiteArg::Bipartite => Suite::Bipartite,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run an invariant suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Census of all m x m sign matrices.
    Census {
        #[arg(long)]
        m: usize,
    },
    /// Scan all block-diagonal sign points against signed-determinant terms.
    Refute {
        #[arg(long)]
        r: usize,
        /// One sign matrix per line, e.g. `++- +-+ -++`.
        #[arg(long)]
        signs: PathBuf,
    },
    /// Exact Pfaffian number with a witness, or verify a certificate.
    Pfnum {
        /// Graph file.
        graph: Option<PathBuf>,
        /// Graph spec instead of a file: k33, c4, grid2x3, chain:1, ...
        #[arg(long)]
        family: Option<String>,
        /// Verify this certificate instead of searching.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Write the witness certificate here.
        #[arg(long, conflicts_with = "cert")]
        cert_out: Option<PathBuf>,
    },
    /// Lower and upper bounds on the Pfaffian number for a family.
    Bound { family: String, param: usize },
    /// Build a family graph.
    Construct {
        family: String,
        param: usize,
        /// Write the graph file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Perfect-matching polynomial of a graph.
    Matchpoly {
        graph: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
    },
}

fn limits(cli: &Cli) -> Limits {
    let mut limits = Limits::default();
    if let Some(m) = cli.cap_matchings {
        limits.matchings = m;
    }
    if let Some(e) = cli.cap_edges {
        limits.search_edges = e;
        limits.exact_edges = e;
    }
    limits
}

fn path_value(p: &Option<PathBuf>) -> Value {
    p.as_ref().map_or(Value::Null, |p| json!(p.display().to_string()))
}

fn inputs(cli: &Cli) -> Value {
    match &cli.command {
        Command::Verify { suite } => json!({ "suite": Suite::from(*suite).name(), "seed": cli.seed }),
        Command::Census { m } => json!({ "m": m }),
        Command::Refute { r, signs } => json!({ "r": r, "signs": signs.display().to_string() }),
        Command::Pfnum {
            graph,
            family,
            cert,
            cert_out,
        } => json!({
            "graph": path_value(graph),
            "family": family,
            "cert": path_value(cert),
            "cert_out": path_value(cert_out),
        }),
        Command::Bound { family, param } => json!({ "family": family, "param": param }),
        Command::Construct { family, param, out } => {
            json!({ "family": family, "param": param, "out": path_value(out) })
        }
        Command::Matchpoly { graph, family } => json!({ "graph": path_value(graph), "family": family }),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Census { .. } => "census",
        Command::Refute { .. } => "refute",
        Command::Pfnum { .. } => "pfnum",
        Command::Bound { .. } => "bound",
        Command::Construct { .. } => "construct",
        Command::Matchpoly { .. } => "matchpoly",
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let limits = limits(cli);
    match &cli.command {
        Command::Verify { suite } => cmd_verify((*suite).into(), cli.seed, &limits),
        Command::Census { m } => cmd_census(*m, cli.slow),
        Command::Refute { r, signs } => cmd_refute(*r, signs),
        Command::Pfnum {
            graph,
            family,
            cert,
            cert_out,
        } => {
            let g = source::load_graph(graph.as_deref(), family.as_deref())?;
            match cert {
                Some(path) => cmd_pfnum_verify(&g, path, &limits),
                None => cmd_pfnum_exact(&g, cert_out.as_deref(), &limits),
            }
        }
        Command::Bound { family, param } => {
            let report = lower_bound_report(BoundFamily::from_tag(family, *param)?)?;
            Ok(Outcome::pass(report))
        }
        Command::Construct { family, param, out } => cmd_construct(family, *param, out.as_deref()),
        Command::Matchpoly { graph, family } => {
            let g = source::load_graph(graph.as_deref(), family.as_deref())?;
            cmd_matchpoly(&g, &limits)
        }
    }
}

fn cmd_verify(suite: Suite, seed: u64, limits: &Limits) -> Result<Outcome, CliError> {
    let report = run_suite(suite, seed, limits)?;
    let failures = report
        .failures()
        .map(|c| Failure {
            check: c.name.to_string(),
            counterexample: json!(c.counterexample),
        })
        .collect();
    let table = Table {
        title: format!("suite {suite}, seed {seed}"),
        header: ["check", "verdict", "cases", "summary"].map(String::from).to_vec(),
        rows: report
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.name.to_string(),
                    if c.passed { "PASS" } else { "FAIL" }.to_string(),
                    c.cases.to_string(),
                    c.summary.clone(),
                ]
            })
            .collect(),
    };
    Ok(Outcome {
        results: to_value(&report),
        failures,
        tables: vec![table],
    })
}

fn case_table(title: &str, rows: &[CaseRow]) -> Table {
    let mut header = vec!["(a,b)".to_string(), "closed form".to_string()];
    header.extend(rows[0].values.iter().map(|((c, d), _)| format!("c={c},d={d}")));
    header.push("nonzero".into());
    Table {
        title: title.into(),
        header,
        rows: rows
            .iter()
            .map(|r| {
                let mut row = vec![format!("({},{})", r.a, r.b), r.expression.to_string()];
                row.extend(r.values.iter().map(|(_, v)| v.to_string()));
                row.push(format!("{}/4", r.nonzero_choices));
                row
            })
            .collect(),
    }
}

fn cmd_census(m: usize, slow: bool) -> Result<Outcome, CliError> {
    if m >= 5 && !slow {
        return Err(Error::Resource(format!("census m = {m} enumerates 2^{} matrices; pass --slow", m * m)).into());
    }
    let c = census(m)?;
    let rate = (m >= 2).then(|| rate_from_census(&c));
    let mut results = json!({ "census": c, "rate": rate });
    let mut tables = Vec::new();
    if m == 3 {
        let per = per_case_table()?;
        let det = det_case_table()?;
        tables.push(case_table("permanent of [[1,1,1],[1,a,b],[1,c,d]]", &per));
        tables.push(case_table("determinant of [[1,1,1],[1,a,b],[1,c,d]]", &det));
        results["case_tables"] = json!({ "permanent": per, "determinant": det });
    }
    let mut rows = vec![
        vec!["m".into(), c.m.to_string()],
        vec!["sign matrices".into(), c.total.to_string()],
        vec!["zero permanent".into(), c.permanent_zero_count.to_string()],
        vec!["nonsingular".into(), c.nonsingular_count.to_string()],
        vec!["normalized".into(), c.normalized_total.to_string()],
        vec!["normalized nonsingular".into(), c.normalized_nonsingular_count.to_string()],
        vec!["orbit size".into(), c.orbit_size.to_string()],
    ];
    if let Some(r) = &rate {
        rows.push(vec!["rate vs 8/3 (all matrices)".into(), format!("{:?}", r.total_direction).to_lowercase()]);
        rows.push(vec!["rate vs 8/3 (nonzero permanent)".into(), format!("{:?}", r.covering_direction).to_lowercase()]);
    }
    tables.insert(
        0,
        Table {
            title: "census".into(),
            header: vec!["quantity".into(), "value".into()],
            rows,
        },
    );
    Ok(Outcome {
        results,
        failures: Vec::new(),
        tables,
    })
}

fn parse_signs(text: &str) -> Result<Vec<SignMatrix>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let s = line.parse::<SignMatrix>().map_err(|e| Error::Parse {
            line: i + 1,
            message: match e {
                Error::Domain(m) => m,
                other => other.to_string(),
            },
        })?;
        out.push(s);
    }
    Ok(out)
}

fn cmd_refute(r: usize, signs: &Path) -> Result<Outcome, CliError> {
    let signs = parse_signs(&read_file(signs)?)?;
    let report = refute_cover(&signs, r)?;
    let mut results = to_value(&report);
    results["refuted"] = json!(!report.fully_covered());
    Ok(Outcome::pass(results))
}

fn certificate_terms(cert: &KPfaffianCertificate<'_>) -> Value {
    cert.terms()
        .map(|(d, c)| json!({ "orientation": d.bitstring(), "coefficient": format_rational(c) }))
        .collect()
}

fn cmd_pfnum_exact(g: &Graph, cert_out: Option<&Path>, limits: &Limits) -> Result<Outcome, CliError> {
    let exact = exact_pfaffian_number(g, limits)?;
    let text = exact.certificate.to_string();
    if let Some(path) = cert_out {
        write_file(path, &text)?;
    }
    Ok(Outcome::pass(json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "perfect_matchings": exact.matchings,
        "sign_classes": exact.classes,
        "k": exact.k,
        "certificate": certificate_terms(&exact.certificate),
        "verified": true,
    })))
}

fn cmd_pfnum_verify(g: &Graph, path: &Path, limits: &Limits) -> Result<Outcome, CliError> {
    let cert = KPfaffianCertificate::parse(g, &read_file(path)?)?;
    let valid = verify_certificate(g, &cert, limits)?;
    let mut failures = Vec::new();
    if !valid {
        // first perfect matching whose combined sign is not 1
        let matchings = enumerate_perfect_matchings(g, limits.matchings)?;
        let mut sum = vec![Rational::from_integer(0.into()); matchings.len()];
        for (d, c) in cert.terms() {
            for (slot, s) in sum.iter_mut().zip(sign_vector(d, limits)?) {
                *slot += c * rational(i64::from(s));
            }
        }
        let counterexample = match sum.iter().position(|x| *x != rational(1)) {
            Some(i) => json!({
                "matching": matchings[i].edges(),
                "combined_sign": format_rational(&sum[i]),
            }),
            None => json!(null),
        };
        failures.push(Failure {
            check: "certificate".into(),
            counterexample,
        });
    }
    let mut outcome = Outcome::pass(json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "k": cert.len(),
        "certificate": certificate_terms(&cert),
        "valid": valid,
    }));
    outcome.failures = failures;
    Ok(outcome)
}

fn cmd_construct(family: &str, param: usize, out: Option<&Path>) -> Result<Outcome, CliError> {
    let f = Family::from_tag(family, param)?;
    let g = construct_family(f)?;
    let text = g.to_string();
    if let Some(path) = out {
        write_file(path, &text)?;
    }
    Ok(Outcome::pass(json!({
        "family": f.tag(),
        "param": param,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "bipartite": g.is_bipartite(),
        "connected": g.is_connected(),
        "genus_note": g.genus_note(),
        "graph": text,
    })))
}

fn cmd_matchpoly(g: &Graph, limits: &Limits) -> Result<Outcome, CliError> {
    let poly = pm_polynomial(g, limits)?;
    let matchings = enumerate_perfect_matchings(g, limits.matchings)?;
    Ok(Outcome::pass(json!({
        "vertices": g.vertex_count(),
        "edges": g.edges(),
        "perfect_matchings": matchings.len(),
        "matchings": matchings.iter().map(|m| m.edges()).collect::<Vec<_>>(),
        "polynomial": poly.to_string(),
    })))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("kpfaff: cannot set up {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = if cli.timing && cli.golden.is_some() {
        Err(CliError::Usage("--timing output cannot match a golden file".into()))
    } else {
        run(&cli)
    };
    let mut report = RunReport::new(command_name(&cli.command), inputs(&cli), outcome);
    if cli.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    let rendered = match cli.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    print!("{rendered}");
    let mut code = report.status.exit_code();
    if let Some(path) = &cli.golden {
        match std::fs::read_to_string(path) {
            Ok(expected) if expected == rendered => {}
            Ok(_) => {
                eprintln!("kpfaff: output differs from golden file {}", path.display());
                code = code.max(1);
            }
            Err(e) => {
                eprintln!("kpfaff: cannot read golden file {}: {e}", path.display());
                code = 2;
            }
        }
    }
    ExitCode::from(code)
}
