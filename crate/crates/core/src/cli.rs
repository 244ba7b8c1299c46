//! Command-line front end: `terms`, `q-terms`, `check`, `series`, `errata`.
//!
//! [`run`] parses arguments and renders output into a string so the whole
//! surface can be exercised from tests; `main` only prints and exits.

use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::GaussianRational;
use crate::audit::errata;
use crate::error::{Error, Result};
use crate::genfunc::expand;
use crate::identities::{cassini, docagne, jump3, outside_hypothesis, partial_sum, step, window3, IdentityKind};
use crate::qfamily::{binomial_sum, geometric_sum, geometric_sum_ratio_one, q_step, q_term, QIndex};
use crate::report::{IdentityReport, Status};
use crate::sequence::{Evaluator, Preset, SeedTriple};

#[derive(Debug, Parser)]
#[command(name = "jacobsthal", version, about = "Exact generalized Gaussian third-order Jacobsthal numbers")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Seed `a,b,c` as fraction literals, e.g. `1/2,-2/3,7`.
    #[arg(long, global = true, allow_hyphen_values = true, conflicts_with = "preset")]
    pub seed: Option<String>,

    /// Named seed: `jg` = (0,1,1), `kg` = (3,1,3).
    #[arg(long, global = true)]
    pub preset: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Binet,
    Fast,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Terms of the sequence over an index range.
    Terms {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
    },
    /// Terms of the q-generalized family.
    #[command(name = "q-terms")]
    QTerms {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Check an identity exactly; exits nonzero iff some instance fails.
    Check {
        /// cassini | docagne | sum | step | jump3 | window3 | qstep | qbinom | qgeom
        #[arg(long)]
        identity: String,
        /// Index or inclusive range `a..b`.
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long)]
        q: Option<String>,
    },
    /// Coefficients of the generating function.
    Series {
        #[arg(long)]
        count: usize,
    },
    /// Audit the preset corollary formulas against the recurrence.
    Errata,
}

/// Rendered output plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, exit_code: 0 }
    }
}

pub fn run<I, T>(args: I) -> Result<Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Ok(Outcome::ok(e.to_string())),
                _ => Err(Error::Usage(e.to_string())),
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Terms { from, to, method } => {
            let seed = resolve_seed(cli)?;
            if from > to {
                return Err(Error::BadRange(format!("--from {from} is greater than --to {to}")));
            }
            Ok(Outcome::ok(render_terms(&seed, *from..=*to, *method, cli.format)))
        }
        Command::QTerms { q, from, to } => {
            let seed = resolve_seed(cli)?;
            if from > to {
                return Err(Error::BadRange(format!("--from {from} is greater than --to {to}")));
            }
            render_q_terms(&seed, *q, *from..=*to, cli.format).map(Outcome::ok)
        }
        Command::Check { identity, n, m, q } => {
            let seed = resolve_seed(cli)?;
            let kind = IdentityKind::from_name(identity)?;
            let ranges = CheckRanges {
                n: n.as_deref().map(parse_range).transpose()?,
                m: m.as_deref().map(parse_range).transpose()?,
                q: q.as_deref().map(parse_range).transpose()?,
            };
            let instances = run_check(&seed, kind, &ranges)?;
            let fails = instances.iter().filter(|i| !i.report.holds()).count();
            Ok(Outcome { stdout: render_check(&instances, cli.format), exit_code: if fails == 0 { 0 } else { 1 } })
        }
        Command::Series { count } => {
            let seed = resolve_seed(cli)?;
            render_series(&seed, *count, cli.format).map(Outcome::ok)
        }
        Command::Errata => Ok(Outcome::ok(render_errata(cli.format))),
    }
}

fn resolve_seed(cli: &Cli) -> Result<SeedTriple> {
    match (&cli.seed, &cli.preset) {
        (Some(s), None) => s.parse(),
        (None, Some(p)) => Ok(p.parse::<Preset>()?.seed()),
        (Some(_), Some(_)) => Err(Error::Usage("--seed and --preset are mutually exclusive".into())),
        (None, None) => Err(Error::Usage("one of --seed or --preset is required".into())),
    }
}

/// Parses `k`, `a..b` or `a..=b` (both inclusive).
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>> {
    let num = |s: &str| {
        s.trim().parse::<i64>().map_err(|_| Error::BadRange(format!("`{text}` is not an index or a..b range")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let k = num(text)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(Error::BadRange(format!("`{text}` is empty")));
    }
    Ok(lo..=hi)
}

#[derive(Debug, Default)]
struct CheckRanges {
    n: Option<RangeInclusive<i64>>,
    m: Option<RangeInclusive<i64>>,
    q: Option<RangeInclusive<i64>>,
}

fn required(range: &Option<RangeInclusive<i64>>, flag: &str, kind: IdentityKind) -> Result<RangeInclusive<i64>> {
    range.clone().ok_or_else(|| Error::BadRange(format!("identity `{}` needs --{flag}", kind.name())))
}

fn non_negative(range: RangeInclusive<i64>, flag: &str) -> Result<RangeInclusive<u64>> {
    if *range.start() < 0 {
        return Err(Error::BadRange(format!("--{flag} must be non-negative")));
    }
    Ok(*range.start() as u64..=*range.end() as u64)
}

/// One checked instance with both sides kept for display.
#[derive(Debug, Clone)]
pub struct Instance {
    pub report: IdentityReport,
    pub lhs: GaussianRational,
    pub rhs: GaussianRational,
}

impl Instance {
    fn new(name: String, seed: &SeedTriple, indices: Vec<i64>, lhs: GaussianRational, rhs: GaussianRational) -> Self {
        let report = IdentityReport::single(name, seed, indices, lhs.clone(), rhs.clone());
        Instance { report, lhs, rhs }
    }
}

fn label(kind: IdentityKind, within: bool) -> String {
    if within {
        kind.name().to_string()
    } else {
        outside_hypothesis(kind.name())
    }
}

fn run_check(seed: &SeedTriple, kind: IdentityKind, ranges: &CheckRanges) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    match kind {
        IdentityKind::Cassini => {
            for n in required(&ranges.n, "n", kind)? {
                let sides = cassini(seed, n);
                let rhs = if sides.lhs == sides.psi_form { sides.expanded_form } else { sides.psi_form };
                out.push(Instance::new(label(kind, n >= 1), seed, vec![n], sides.lhs, rhs));
            }
        }
        IdentityKind::Docagne => {
            let ms = required(&ranges.m, "m", kind)?;
            let ns = required(&ranges.n, "n", kind)?;
            for m in ms {
                for n in ns.clone() {
                    let (lhs, rhs) = docagne(seed, m, n);
                    out.push(Instance::new(label(kind, n >= m && m >= 0), seed, vec![m, n], lhs, rhs));
                }
            }
        }
        IdentityKind::Sum => {
            for n in non_negative(required(&ranges.n, "n", kind)?, "n")? {
                let (lhs, rhs) = partial_sum(seed, n);
                out.push(Instance::new(label(kind, true), seed, vec![n as i64], lhs, rhs));
            }
        }
        IdentityKind::Step | IdentityKind::Jump3 | IdentityKind::Window3 => {
            let sides = match kind {
                IdentityKind::Step => step,
                IdentityKind::Jump3 => jump3,
                _ => window3,
            };
            for n in required(&ranges.n, "n", kind)? {
                let (lhs, rhs) = sides(seed, n);
                // The step relation is asserted for every integer; the other
                // two are stated for n ≥ 0.
                let within = kind == IdentityKind::Step || n >= 0;
                out.push(Instance::new(label(kind, within), seed, vec![n], lhs, rhs));
            }
        }
        IdentityKind::QStep | IdentityKind::QBinom | IdentityKind::QGeom => {
            let qs = non_negative(required(&ranges.q, "q", kind)?, "q")?;
            let ms = non_negative(required(&ranges.m, "m", kind)?, "m")?;
            for q in qs {
                for m in ms.clone() {
                    let indices = vec![q as i64, m as i64];
                    let instance = match kind {
                        IdentityKind::QStep => {
                            let (lhs, rhs) = q_step(seed, q, m)?;
                            Instance::new(label(kind, m >= 1), seed, indices, lhs, rhs)
                        }
                        IdentityKind::QBinom => {
                            let (lhs, rhs) = binomial_sum(seed, q, m)?;
                            Instance::new(label(kind, true), seed, indices, lhs, rhs)
                        }
                        _ => match geometric_sum(seed, q, m) {
                            Ok((lhs, rhs)) => Instance::new(label(kind, true), seed, indices, lhs, rhs),
                            Err(Error::DegenerateRatio { .. }) => {
                                let (lhs, rhs) = geometric_sum_ratio_one(seed, q, m)?;
                                Instance::new("qgeom (ratio-1 fallback)".into(), seed, indices, lhs, rhs)
                            }
                            Err(e) => return Err(e),
                        },
                    };
                    out.push(instance);
                }
            }
        }
    }
    Ok(out)
}

fn parts(x: &GaussianRational) -> Value {
    json!({"re": x.re.to_string(), "im": x.im.to_string()})
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn table_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json renders") + "\n"
}

fn render_terms(seed: &SeedTriple, range: RangeInclusive<i64>, method: Method, format: Format) -> String {
    let single = match method {
        Method::Recurrence => Some(Evaluator::Recurrence),
        Method::Binet => Some(Evaluator::Binet),
        Method::Fast => Some(Evaluator::Fast),
        Method::All => None,
    };
    let rows: Vec<(i64, Vec<GaussianRational>)> = range
        .map(|n| {
            let vals = match single {
                Some(ev) => vec![ev.eval(seed, n)],
                None => Evaluator::ALL.iter().map(|ev| ev.eval(seed, n)).collect(),
            };
            (n, vals)
        })
        .collect();
    let agree = |v: &[GaussianRational]| v.windows(2).all(|w| w[0] == w[1]);

    match (format, single) {
        (Format::Json, Some(_)) => json_text(&Value::Array(
            rows.iter().map(|(n, v)| json!({"n": n, "re": v[0].re.to_string(), "im": v[0].im.to_string()})).collect(),
        )),
        (Format::Json, None) => json_text(&Value::Array(
            rows.iter()
                .map(|(n, v)| {
                    json!({
                        "n": n,
                        "re": v[0].re.to_string(),
                        "im": v[0].im.to_string(),
                        "binet": parts(&v[1]),
                        "fast": parts(&v[2]),
                        "match": agree(v),
                    })
                })
                .collect(),
        )),
        (Format::Csv, Some(_)) => csv_text(
            &["n", "re", "im"],
            rows.iter().map(|(n, v)| vec![n.to_string(), v[0].re.to_string(), v[0].im.to_string()]).collect(),
        ),
        (Format::Csv, None) => csv_text(
            &["n", "re", "im", "binet_re", "binet_im", "fast_re", "fast_im", "match"],
            rows.iter()
                .map(|(n, v)| {
                    let mut row = vec![n.to_string()];
                    for x in v {
                        row.push(x.re.to_string());
                        row.push(x.im.to_string());
                    }
                    row.push(agree(v).to_string());
                    row
                })
                .collect(),
        ),
        (Format::Table, Some(ev)) => {
            table_text(&["n", ev.name()], rows.iter().map(|(n, v)| vec![n.to_string(), v[0].to_string()]).collect())
        }
        (Format::Table, None) => table_text(
            &["n", "recurrence", "binet", "fast", "match"],
            rows.iter()
                .map(|(n, v)| {
                    let mut row = vec![n.to_string()];
                    row.extend(v.iter().map(ToString::to_string));
                    row.push(if agree(v) { "yes" } else { "NO" }.to_string());
                    row
                })
                .collect(),
        ),
    }
}

fn render_q_terms(seed: &SeedTriple, q: u64, range: RangeInclusive<u64>, format: Format) -> Result<String> {
    let mut rows = Vec::new();
    for n in range {
        let idx = QIndex::new(q, n)?;
        rows.push((idx, q_term(seed, q, n)?));
    }
    Ok(match format {
        Format::Json => json_text(&Value::Array(
            rows.iter()
                .map(|(idx, v)| json!({"n": idx.n, "re": v.re.to_string(), "im": v.im.to_string(), "q": idx.q}))
                .collect(),
        )),
        Format::Csv => csv_text(
            &["n", "re", "im"],
            rows.iter().map(|(idx, v)| vec![idx.n.to_string(), v.re.to_string(), v.im.to_string()]).collect(),
        ),
        Format::Table => table_text(
            &["n", "m", "r", "value"],
            rows.iter()
                .map(|(idx, v)| vec![idx.n.to_string(), idx.m.to_string(), idx.r.to_string(), v.to_string()])
                .collect(),
        ),
    })
}

fn indices_text(indices: &[i64]) -> String {
    indices.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

fn render_check(instances: &[Instance], format: Format) -> String {
    let holds = instances.iter().filter(|i| i.report.holds()).count();
    let fails = instances.len() - holds;
    match format {
        Format::Json => json_text(&json!({
            "reports": instances.iter().map(|i| i.report.to_json()).collect::<Vec<_>>(),
            "summary": {"holds": holds, "fails": fails},
        })),
        Format::Csv => csv_text(
            &["identity", "indices", "status", "lhs_re", "lhs_im", "rhs_re", "rhs_im"],
            instances
                .iter()
                .map(|i| {
                    vec![
                        i.report.identity().to_string(),
                        indices_text(&i.report.indices()[0]),
                        i.report.status().as_str().to_string(),
                        i.lhs.re.to_string(),
                        i.lhs.im.to_string(),
                        i.rhs.re.to_string(),
                        i.rhs.im.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Table => {
            let mut out = table_text(
                &["identity", "indices", "status", "lhs", "rhs"],
                instances
                    .iter()
                    .map(|i| {
                        vec![
                            i.report.identity().to_string(),
                            indices_text(&i.report.indices()[0]),
                            i.report.status().as_str().to_string(),
                            i.lhs.to_string(),
                            i.rhs.to_string(),
                        ]
                    })
                    .collect(),
            );
            out.push_str(&format!("summary: {holds} holds, {fails} fails\n"));
            out
        }
    }
}

fn render_series(seed: &SeedTriple, count: usize, format: Format) -> Result<String> {
    let series = expand(seed, count)?;
    let flags = series.verify();
    let rows: Vec<_> = series.coefficients.iter().zip(flags).enumerate().collect();
    Ok(match format {
        Format::Json => json_text(&Value::Array(
            rows.iter()
                .map(|(k, (c, ok))| json!({"k": k, "re": c.re.to_string(), "im": c.im.to_string(), "match": ok}))
                .collect(),
        )),
        Format::Csv => csv_text(
            &["k", "re", "im", "match"],
            rows.iter()
                .map(|(k, (c, ok))| vec![k.to_string(), c.re.to_string(), c.im.to_string(), ok.to_string()])
                .collect(),
        ),
        Format::Table => table_text(
            &["k", "coefficient", "match"],
            rows.iter()
                .map(|(k, (c, ok))| vec![k.to_string(), c.to_string(), if *ok { "yes" } else { "NO" }.to_string()])
                .collect(),
        ),
    })
}

fn render_errata(format: Format) -> String {
    let entries = errata();
    let first_failure = |r: &IdentityReport| {
        r.counterexample().map(|c| format!("[{}] {} vs {}", indices_text(&c.indices), c.lhs, c.rhs)).unwrap_or_default()
    };
    match format {
        Format::Json => json_text(&Value::Array(entries.iter().map(|e| e.to_json()).collect())),
        Format::Csv => csv_text(
            &["formula", "printed", "printed_verdict", "derived", "derived_verdict", "printed_counterexample"],
            entries
                .iter()
                .map(|e| {
                    vec![
                        e.formula.clone(),
                        e.printed.clone(),
                        e.printed_status().as_str().to_string(),
                        e.derived.clone(),
                        e.derived_status().as_str().to_string(),
                        first_failure(&e.printed_report),
                    ]
                })
                .collect(),
        ),
        Format::Table => {
            let verdict = |s: Status| match s {
                Status::Holds => "HOLDS",
                Status::Fails => "FAILS",
            };
            let mut out = String::new();
            for e in &entries {
                out.push_str(&format!("{}\n", e.formula));
                out.push_str(&format!("  printed  {}  {}\n", verdict(e.printed_status()), e.printed));
                if let Some(ce) = e.printed_report.counterexample() {
                    out.push_str(&format!(
                        "           first failure at [{}]: truth {} vs formula {}\n",
                        indices_text(&ce.indices),
                        ce.lhs,
                        ce.rhs
                    ));
                }
                out.push_str(&format!("  derived  {}  {}\n", verdict(e.derived_status()), e.derived));
            }
            out
        }
    }
}
