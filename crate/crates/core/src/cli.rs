//! The `gallai` command-line tool.
//!
//! Exit codes: 0 success, 1 failed verification or a reported violation,
//! 2 usage or input error, 3 inconclusive search.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::construct::{construct_lower_bound, verify_construction, SharpnessLibrary, WitnessCache};
use crate::error::Error;
use crate::formula::{check_inequalities, condition_label, gallai_ramsey_value, Parameters};
use crate::graph::EdgeColoredCompleteGraph;
use crate::io;
use crate::partition::{coarsen_to_minimal, find_gallai_partition};
use crate::pattern::PatternKind;
use crate::search::{
    compute_ramsey, local_search_witness, witness_search, LocalOutcome, SearchBudget, SearchOutcome,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gallai", version, about = "Gallai-Ramsey numbers for B3+, S3+ and K3")]
struct Cli {
    /// Print one JSON object instead of text lines.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Directory of cached sharpness examples.
    #[arg(long, global = true, env = "GALLAI_CACHE", default_value = "qcache")]
    cache: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form Gallai-Ramsey number and its condition label.
    Value { r: u32, s: u32, t: u32 },
    /// Build the lower-bound coloring of order f(r, s, t).
    Construct {
        r: u32,
        s: u32,
        t: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring against the lower-bound claim for (r, s, t).
    Verify {
        file: PathBuf,
        #[arg(long, num_args = 3, value_names = ["R", "S", "T"], required = true)]
        params: Vec<u32>,
    },
    /// Find a Gallai partition of a coloring.
    Partition {
        file: PathBuf,
        /// Merge parts while the partition stays valid.
        #[arg(long)]
        minimize: bool,
    },
    /// Classical two-color Ramsey number by exhaustive search.
    Ramsey {
        a: PatternKind,
        b: PatternKind,
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        /// Time limit in seconds.
        #[arg(long, default_value_t = 600.0)]
        time: f64,
        #[arg(long)]
        nodes: Option<u64>,
    },
    /// Search for a two-coloring of K_n avoiding a in color 1 and b in color 2.
    Witness {
        a: PatternKind,
        b: PatternKind,
        n: usize,
        #[arg(long, default_value_t = 600.0)]
        time: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use the exhaustive search instead of local search.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the ratio bounds over 0 ≤ r, s, t ≤ max.
    Inequalities {
        #[arg(long, default_value_t = 8)]
        max: u32,
        /// Print only failing instances and the summary.
        #[arg(long)]
        failures_only: bool,
    },
    /// Convert a coloring to DOT or JSON.
    Export {
        file: PathBuf,
        #[arg(long, conflicts_with = "graph_json")]
        dot: bool,
        /// Emit the JSON mirror of the .gcol file.
        #[arg(long = "graph-json")]
        graph_json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Value { .. } => "value",
            Command::Construct { .. } => "construct",
            Command::Verify { .. } => "verify",
            Command::Partition { .. } => "partition",
            Command::Ramsey { .. } => "ramsey",
            Command::Witness { .. } => "witness",
            Command::Inequalities { .. } => "inequalities",
            Command::Export { .. } => "export",
        }
    }
}

/// Text lines plus the equivalent JSON, and the exit code.
struct Report {
    lines: Vec<String>,
    json: Value,
    code: i32,
}

impl Report {
    fn ok(lines: Vec<String>, json: Value) -> Self {
        Report { lines, json, code: EXIT_OK }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconclusive => EXIT_INCONCLUSIVE,
        Error::Construction(_)
        | Error::Certification { .. }
        | Error::NoPartition
        | Error::SearchExhausted { .. }
        | Error::RoutingCollision(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn read_graph(path: &Path) -> Result<EdgeColoredCompleteGraph, Error> {
    if path.extension().is_some_and(|e| e == "json") {
        io::from_json(&std::fs::read_to_string(path)?)
    } else {
        io::read_gcol(path)
    }
}

fn seconds(s: f64) -> Result<Duration, Error> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::InvalidArgument(format!("time limit must be positive, got {s}")));
    }
    Ok(Duration::from_secs_f64(s))
}

fn big_json(n: &num_bigint::BigUint) -> Value {
    n.to_u64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn params_of(v: &[u32]) -> Parameters {
    Parameters::new(v[0], v[1], v[2])
}

fn execute(cmd: &Command, cache: &Path) -> Result<Report, Error> {
    match cmd {
        Command::Value { r, s, t } => {
            let p = Parameters::new(*r, *s, *t);
            let gr = gallai_ramsey_value(&p)?;
            let label = condition_label(&p)?;
            Ok(Report::ok(
                vec![format!("gr={gr} condition={label}")],
                json!({"params": p, "gr": big_json(&gr), "condition": label.to_string()}),
            ))
        }
        Command::Construct { r, s, t, out } => {
            let p = Parameters::new(*r, *s, *t);
            let lib = SharpnessLibrary::with_cache(Some(WitnessCache::new(cache)));
            let g = construct_lower_bound(&p, &lib)?;
            let label = condition_label(&p)?;
            let summary = json!({"params": p, "order": g.order(), "condition": label.to_string()});
            match out {
                Some(path) => {
                    io::write_gcol(path, &g)?;
                    Ok(Report::ok(
                        vec![format!("order={} condition={label} out={}", g.order(), path.display())],
                        json!({"construct": summary, "out": path.display().to_string()}),
                    ))
                }
                None => {
                    let text = io::to_gcol(&g);
                    Ok(Report::ok(
                        text.lines().map(str::to_owned).collect(),
                        json!({"construct": summary, "gcol": text}),
                    ))
                }
            }
        }
        Command::Verify { file, params } => {
            let p = params_of(params);
            if p.k() == 0 {
                return Err(Error::EmptyPalette);
            }
            let g = read_graph(file)?;
            let cert = verify_construction(&g, &p);
            let mut lines = vec![format!(
                "order={} expected={} order_ok={} gallai_ok={} avoid_ok={}",
                cert.order, cert.expected_order, cert.order_ok, cert.gallai_ok, cert.avoid_ok
            )];
            if let Some([u, v, w]) = cert.rainbow {
                lines.push(format!("rainbow={u},{v},{w}"));
            }
            if let Some(fc) = &cert.forbidden {
                let verts: Vec<String> = fc.embedding.map.iter().map(|v| v.to_string()).collect();
                lines.push(format!("forbidden color={} pattern={} vertices={}", fc.color, fc.pattern, verts.join(",")));
            }
            if cert.palette_mismatch {
                lines.push(format!("palette_mismatch graph={} params={}", g.palette_size(), p.k()));
            }
            let code = if cert.is_valid() { EXIT_OK } else { EXIT_FAIL };
            Ok(Report {
                lines,
                json: serde_json::to_value(&cert)?,
                code,
            })
        }
        Command::Partition { file, minimize } => {
            let g = read_graph(file)?;
            let mut p = find_gallai_partition(&g)?;
            if *minimize {
                p = coarsen_to_minimal(&g, &p);
            }
            let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            let mut lines: Vec<String> = p.parts.iter().map(|part| join(part)).collect();
            let cross: Vec<String> = p.cross_colors.iter().map(|c| c.to_string()).collect();
            lines.push(format!("cross_colors={}", cross.join(",")));
            lines.push(format!("q={}", p.len()));
            Ok(Report::ok(
                lines,
                json!({"parts": p.parts, "cross_colors": p.cross_colors, "q": p.len()}),
            ))
        }
        Command::Ramsey { a, b, nmax, time, nodes } => {
            let mut budget = SearchBudget::with_time(seconds(*time)?);
            if let Some(cap) = nodes {
                budget = SearchBudget::new(*cap, budget.time_limit, 0)?;
            }
            let rv = compute_ramsey(*a, *b, *nmax, &budget)?;
            Ok(Report::ok(
                vec![format!("a={a} b={b} value={} nodes={}", rv.value, rv.nodes)],
                json!({"a": a.to_string(), "b": b.to_string(), "value": rv.value, "nodes": rv.nodes, "witness": io::to_gcol(&rv.witness)}),
            ))
        }
        Command::Witness {
            a,
            b,
            n,
            time,
            seed,
            exhaustive,
            out,
        } => {
            let budget = SearchBudget::with_time(seconds(*time)?).with_seed(*seed);
            let found = if *exhaustive {
                match witness_search(*a, *b, *n, &budget)? {
                    SearchOutcome::Witness { graph, .. } => graph,
                    SearchOutcome::ExhaustiveNone { .. } => {
                        return Err(Error::SearchExhausted { a: *a, b: *b, n: *n })
                    }
                    SearchOutcome::BudgetExhausted { .. } => return Err(Error::Inconclusive),
                }
            } else {
                match local_search_witness(*a, *b, *n, &budget)? {
                    LocalOutcome::Witness { graph, .. } => graph,
                    LocalOutcome::Timeout { .. } => return Err(Error::Inconclusive),
                }
            };
            let text = io::to_gcol(&found);
            let mut lines = vec![format!("a={a} b={b} n={n} found=true")];
            match out {
                Some(path) => {
                    std::fs::write(path, &text)?;
                    lines.push(format!("out={}", path.display()));
                }
                None => lines.extend(text.lines().map(str::to_owned)),
            }
            Ok(Report::ok(
                lines,
                json!({"a": a.to_string(), "b": b.to_string(), "n": n, "gcol": text}),
            ))
        }
        Command::Inequalities { max, failures_only } => {
            let report = check_inequalities(*max, *max, *max);
            let mut lines = Vec::new();
            for c in report.checks.iter().filter(|c| !failures_only || !c.holds) {
                lines.push(format!(
                    "ineq={} triple={} ratio={}/{} status={}",
                    c.index,
                    c.triple,
                    c.ratio.numer(),
                    c.ratio.denom(),
                    if c.holds { "pass" } else { "fail" }
                ));
            }
            let violations = report.violations().count();
            lines.push(format!("checks={} violations={violations}", report.checks.len()));
            Ok(Report {
                lines,
                json: json!({"checks": report.checks, "violations": violations}),
                code: if violations == 0 { EXIT_OK } else { EXIT_FAIL },
            })
        }
        Command::Export {
            file,
            dot,
            graph_json,
            out,
        } => {
            let g = read_graph(file)?;
            let text = if *graph_json && !*dot {
                io::to_json(&g) + "\n"
            } else {
                io::to_dot(&g)
            };
            match out {
                Some(path) => {
                    std::fs::write(path, &text)?;
                    Ok(Report::ok(
                        vec![format!("out={}", path.display())],
                        json!({"out": path.display().to_string()}),
                    ))
                }
                None => Ok(Report::ok(text.lines().map(str::to_owned).collect(), json!({"text": text}))),
            }
        }
    }
}

/// Runs the tool on `argv` (including the program name) and returns the
/// exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let name = cli.command.name();
    let result = match cli.threads {
        Some(0) => Err(Error::InvalidArgument("--threads must be positive".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &cli.cache)),
            Err(e) => Err(Error::InvalidArgument(e.to_string())),
        },
        None => execute(&cli.command, &cli.cache),
    };
    match result {
        Ok(report) => {
            let written = if cli.json {
                let ok = report.code == EXIT_OK;
                writeln!(out, "{}", json!({"command": name, "ok": ok, "result": report.json}))
            } else {
                report.lines.iter().try_for_each(|l| writeln!(out, "{l}"))
            };
            if written.is_err() {
                return EXIT_FAIL;
            }
            report.code
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let _ = writeln!(out, "{}", json!({"command": name, "ok": false, "error": e.to_string(), "exit": code}));
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            code
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
