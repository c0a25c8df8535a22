//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the exit code with what belongs on stdout and stderr, so the
//! binary only forwards them.
//!
//! Exit codes: 0 for success, 1 for a negative answer (invalid coloring,
//! infeasible instance, falsified audit), 2 for usage or I/O errors.

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::coloring::{verify_equitable, Coloring};
use crate::dimacs::{load_graph, write_graph};
use crate::discharge::audit;
use crate::generators::{family, random_sparse, FamilyParams, GenSpec};
use crate::graph::Graph;
use crate::metrics::{fmt_rational, girth, mad_exact, metrics};
use crate::oracle::Oracle;
use crate::solver::{equitable_color_with, upper_threshold, Mode, SolverOptions};
use crate::threads::ThreadMap;

#[derive(Parser, Debug)]
#[command(name = "equicolor", version, about = "Equitable colorings of sparse graphs with large girth")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// DIMACS graph file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Equitable coloring with a given number of colors.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: usize,
        /// Skip the girth and maximum average degree checks.
        #[arg(long)]
        unchecked: bool,
        /// Include the sequence of reduced configurations.
        #[arg(long)]
        trace: bool,
    },
    /// Check a coloring (JSON) against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Coloring JSON file, or `-` for stdin.
        #[arg(long)]
        coloring: String,
    },
    /// Order, size, girth, exact maximum average degree.
    Metrics {
        #[command(flatten)]
        input: Input,
    },
    /// Thread decomposition and per-vertex thread profiles.
    Threads {
        #[command(flatten)]
        input: Input,
    },
    /// Discharging audit.
    Audit {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Include the full transfer log.
        #[arg(long)]
        ledger: bool,
    },
    /// Exhaustive search on small graphs.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Emit a generated graph in DIMACS format.
    Gen {
        #[command(flatten)]
        input: Input,
        /// Named family: cycle, theta, star, k2n, kab, petersen, complete, subdivided.
        #[arg(long, conflicts_with = "random")]
        family: Option<String>,
        #[arg(long, default_value = "")]
        params: String,
        /// Random spec such as `n0=8,q=3..5,girth=10,seed=42`.
        #[arg(long)]
        random: Option<String>,
    },
    /// Color every graph of a directory for a range of color counts.
    Bench {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        corpus: PathBuf,
        /// Inclusive range `A..B`.
        #[arg(long = "m-range")]
        m_range: String,
        /// Where the CSV goes.
        #[arg(long, default_value = "bench.csv")]
        csv: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum OracleQuery {
    Equitable {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: usize,
        /// Vertex cap; defaults to the environment setting.
        #[arg(long)]
        cap: Option<usize>,
    },
    Threshold {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    M4,
    M3,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::M4 => Mode::M4,
            ModeArg::M3 => Mode::M3,
        }
    }
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn json(exit_code: i32, value: &impl Serialize) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("serializable output");
        stdout.push('\n');
        CommandResult { exit_code, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CommandResult { exit_code: 2, stdout: String::new(), stderr }
    }

    fn negative(mut self, msg: impl Into<String>) -> Self {
        self.exit_code = 1;
        self.stderr = msg.into() + "\n";
        self
    }
}

/// Runs one command, reading `-` inputs from the process stdin.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_stdin(args, &mut std::io::stdin())
}

/// Runs one command, reading `-` inputs from `stdin`.
pub fn run_with_stdin<I, T>(args: I, stdin: &mut dyn Read) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandResult { exit_code: 0, stdout: text, stderr: String::new() }
                }
                _ => CommandResult::usage(text),
            };
        }
    };
    let mut io = Io { stdin, stdin_used: false };
    match execute(cli.command, &mut io) {
        Ok(r) => r,
        Err(msg) => CommandResult::usage(msg),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, String> {
        if path == "-" {
            if self.stdin_used {
                return Err("stdin can feed only one input".into());
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
        }
    }

    fn graph(&mut self, input: &Input) -> Result<Graph, String> {
        let text = self.read(&input.input)?;
        load_graph(&text).map_err(|e| format!("{}: {e}", input.input))
    }
}

#[derive(Serialize)]
struct ColorOutput<'a> {
    #[serde(flatten)]
    coloring: &'a Coloring,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a [crate::solver::TraceEntry]>,
}

fn execute(cmd: Command, io: &mut Io<'_>) -> Result<CommandResult, String> {
    Ok(match cmd {
        Command::Color { input, m, unchecked, trace } => {
            let g = io.graph(&input)?;
            let opts = SolverOptions { check_invariants: false, unchecked, trace };
            match equitable_color_with(&g, m, &opts) {
                Ok(sol) => {
                    let out = ColorOutput { coloring: &sol.coloring, trace: trace.then_some(sol.trace.as_slice()) };
                    CommandResult::json(0, &out)
                }
                Err(e) => CommandResult::json(1, &json!({ "error": e.to_string() })).negative(e.to_string()),
            }
        }
        Command::Verify { input, coloring } => {
            // Read the coloring first so `--coloring -` works with a file graph.
            let text = io.read(&coloring)?;
            let g = io.graph(&input)?;
            let f: Coloring = serde_json::from_str(&text).map_err(|e| format!("{coloring}: {e}"))?;
            let report = verify_equitable(&g, &f).map_err(|e| e.to_string())?;
            let code = if report.valid { 0 } else { 1 };
            CommandResult::json(code, &json!({
                "status": if report.valid { "VALID" } else { "INVALID" },
                "class_sizes": report.class_sizes,
                "violations": report.violations,
            }))
        }
        Command::Metrics { input } => {
            let g = io.graph(&input)?;
            let met = metrics(&g).map_err(|e| e.to_string())?;
            let upper = upper_threshold(&g).map_err(|e| e.to_string())?;
            CommandResult::json(0, &json!({ "metrics": met, "colors_guaranteed_from": upper }))
        }
        Command::Threads { input } => {
            let g = io.graph(&input)?;
            let map = ThreadMap::build(&g).map_err(|e| e.to_string())?;
            let profiles: Vec<_> = g.vertices().filter(|&v| map.is_branch(v)).filter_map(|v| map.profile(v).ok()).collect();
            CommandResult::json(0, &json!({
                "threads": map.threads,
                "pure_cycles": map.pure_cycles,
                "profiles": profiles,
            }))
        }
        Command::Audit { input, mode, ledger } => {
            let g = io.graph(&input)?;
            let mode = Mode::from(mode);
            let report = audit(&g, mode).map_err(|e| e.to_string())?;
            let mut value = serde_json::to_value(&report).expect("serializable report");
            if ledger && report.rules_applied {
                let (d0, _) = crate::discharge::mode_constants(mode);
                let l = crate::discharge::apply_rules(&crate::discharge::charges_init(&g, d0), &g, mode).map_err(|e| e.to_string())?;
                value["ledger"] = serde_json::to_value(&l).expect("serializable ledger");
            }
            let code = if report.passed() { 0 } else { 1 };
            CommandResult::json(code, &value)
        }
        Command::Oracle { query } => {
            let (input, cap) = match &query {
                OracleQuery::Equitable { input, cap, .. } | OracleQuery::Threshold { input, cap } => (input.clone(), *cap),
            };
            let g = io.graph(&input)?;
            let oracle = cap.map(Oracle::with_cap).unwrap_or_else(Oracle::from_env);
            match query {
                OracleQuery::Equitable { m, .. } => {
                    let s = oracle.equitable(&g, m).map_err(|e| e.to_string())?;
                    let code = if s.feasible() { 0 } else { 1 };
                    CommandResult::json(code, &json!({
                        "feasible": s.feasible(),
                        "nodes": s.nodes,
                        "coloring": s.witness,
                    }))
                }
                OracleQuery::Threshold { .. } => {
                    let t = oracle.threshold(&g).map_err(|e| e.to_string())?;
                    CommandResult::json(0, &t)
                }
            }
        }
        Command::Gen { input: _, family: fam, params, random } => {
            let (g, note) = match (fam, random) {
                (Some(name), None) => {
                    let p: FamilyParams = params.parse().map_err(|e: crate::generators::GenError| e.to_string())?;
                    (family(&name, &p).map_err(|e| e.to_string())?, format!("family {name} {params}"))
                }
                (None, Some(spec)) => {
                    let s = GenSpec::parse(&spec).map_err(|e| e.to_string())?;
                    (random_sparse(&s).map_err(|e| e.to_string())?, format!("random {spec}"))
                }
                _ => return Err("gen needs exactly one of --family or --random".into()),
            };
            CommandResult { exit_code: 0, stdout: write_graph(&g, &[&note]), stderr: String::new() }
        }
        Command::Bench { input: _, corpus, m_range, csv } => bench(&corpus, &m_range, &csv)?,
    })
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text.split_once("..").ok_or_else(|| format!("expected A..B, got `{text}`"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {text}"));
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct BenchRow {
    graph: String,
    n: usize,
    girth: String,
    mad: String,
    m: usize,
    time: f64,
    valid: bool,
}

fn bench(corpus: &Path, m_range: &str, csv_path: &Path) -> Result<CommandResult, String> {
    let (lo, hi) = parse_range(m_range)?;
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus)
        .map_err(|e| format!("{}: {e}", corpus.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "col"))
        .collect();
    files.sort();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for path in &files {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let g = load_graph(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let gr = girth(&g).to_string();
        let mad = mad_exact(&g).map(|r| fmt_rational(&r)).unwrap_or_default();
        for m in lo..=hi {
            let start = Instant::now();
            let outcome = equitable_color_with(&g, m, &SolverOptions::default());
            let time = start.elapsed().as_secs_f64();
            let valid = match &outcome {
                Ok(sol) => verify_equitable(&g, &sol.coloring).is_ok_and(|r| r.valid),
                Err(e) => {
                    failures.push(json!({ "graph": name, "m": m, "error": e.to_string() }));
                    false
                }
            };
            rows.push(BenchRow { graph: name.clone(), n: g.order(), girth: gr.clone(), mad: mad.clone(), m, time, valid });
        }
    }
    let mut w = csv::Writer::from_path(csv_path).map_err(|e| format!("{}: {e}", csv_path.display()))?;
    for r in &rows {
        w.serialize(r).map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())?;
    let invalid = rows.iter().filter(|r| !r.valid).count();
    Ok(CommandResult::json(if invalid == 0 { 0 } else { 1 }, &json!({
        "csv": csv_path.display().to_string(),
        "graphs": files.len(),
        "rows": rows.len(),
        "invalid": invalid,
        "failures": failures,
    })))
}
