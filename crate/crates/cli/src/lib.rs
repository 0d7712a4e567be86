//! The `chromis` command-line front end.
//!
//! Exit codes: 0 ok, 1 usage, 2 parse, 3 resource cap, 4 property failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use chromis_core::chromatic::{chromatic_number_capped, extract_coloring};
use chromis_core::{
    generate, is_proper_coloring, mis_bound, small_mis, small_mis_filtered, to_dimacs, DpError,
    Graph, GraphError, DEFAULT_DP_CAP, DEFAULT_VERTEX_CAP, MAX_DP_CAP, MAX_VERTICES,
};

pub mod selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_PROPERTY: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "chromis",
    version,
    about = "Exact graph coloring and small maximal independent sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the chromatic number (and optionally an optimal coloring).
    Solve(SolveArgs),
    /// List or count maximal independent sets of size at most k.
    Mis(MisArgs),
    /// Print the bound 3^(4k-n) * 4^(n-3k).
    Bound { n: u32, k: u32 },
    /// Run the built-in property suites against the brute-force oracles.
    Selftest {
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = selftest::DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Write a generated instance as DIMACS.
    ///
    /// SPEC is one of: `triangles-k4s A B`, `gnp N P SEED`, `petersen`,
    /// `groetzsch`, `complete N`, `cycle N`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub path: PathBuf,
    /// Print `v <vertex> <color>` lines (1-based).
    #[arg(long)]
    pub print_coloring: bool,
    /// Raise the vertex cap of the DP (table of 2^n bytes), at most 28.
    #[arg(long, default_value_t = DEFAULT_DP_CAP)]
    pub max_n: usize,
    /// Print a JSON report instead of plain text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct MisArgs {
    pub path: PathBuf,
    #[arg(short, long)]
    pub k: usize,
    /// Stream the generator's raw output, which may repeat sets or include
    /// non-maximal ones.
    #[arg(long, conflicts_with = "maximal")]
    pub raw: bool,
    /// Only exact maximal sets (the default).
    #[arg(long)]
    pub maximal: bool,
    #[arg(long)]
    pub count_only: bool,
}

/// Summary of one `solve` run; serialized by `solve --json`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub wall_ms: f64,
    pub enum_stats: EnumTotals,
    pub table_entries: usize,
    pub peak_table_bytes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumTotals {
    pub recursive_calls: u64,
    pub emitted_sets: u64,
}

/// A failed command: exit code plus a diagnostic for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::TooManyVertices { .. } => EXIT_RESOURCE,
            _ => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<DpError> for Failure {
    fn from(e: DpError) -> Self {
        let code = match e {
            DpError::TooLarge { .. } => EXIT_RESOURCE,
            _ => EXIT_PROPERTY,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Solve(args) => {
            let report = cmd_solve(&args)?;
            if args.json {
                let json = serde_json::to_string_pretty(&report).expect("report serializes");
                writeln!(out, "{json}")?;
            } else {
                writeln!(out, "chi {}", report.chi)?;
                if let Some(colors) = &report.coloring {
                    for (v, c) in colors.iter().enumerate() {
                        writeln!(out, "v {} {}", v + 1, c)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Mis(args) => {
            cmd_mis(&args, out)?;
            Ok(EXIT_OK)
        }
        Command::Bound { n, k } => {
            let b = mis_bound(n, k);
            writeln!(out, "{b}")?;
            writeln!(out, "~ {}", format_decimal(b.to_f64()))?;
            Ok(EXIT_OK)
        }
        Command::Selftest { seed, trials } => {
            let outcome = selftest::run(seed, trials, &selftest::Engines::default());
            write!(out, "{outcome}")?;
            Ok(selftest::exit_code(&outcome))
        }
        Command::Gen { spec, out: path } => {
            let g = cmd_gen(&spec)?;
            let text = format!("c chromis gen {}\n{}", spec.join(" "), to_dimacs(&g));
            match path {
                Some(p) => fs::write(&p, text)
                    .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn read_graph(path: &Path, cap: usize) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    chromis_core::from_dimacs_with_cap(&text, cap).map_err(|e| {
        let f = Failure::from(e);
        Failure::new(f.code, format!("{}: {}", path.display(), f.message))
    })
}

/// Solves the instance at `args.path`. The coloring is re-verified before
/// it is returned.
pub fn cmd_solve(args: &SolveArgs) -> Result<RunReport, Failure> {
    if args.max_n > MAX_DP_CAP {
        return Err(Failure::new(
            EXIT_USAGE,
            format!(
                "--max-n {} exceeds the hard limit of {MAX_DP_CAP}",
                args.max_n
            ),
        ));
    }
    let g = read_graph(&args.path, DEFAULT_VERTEX_CAP)?;
    let start = Instant::now();
    let (chi, table) = chromatic_number_capped(&g, args.max_n)?;
    let coloring = extract_coloring(&g, &table)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;

    if !is_proper_coloring(&g, &coloring) || coloring.num_colors != chi {
        return Err(Failure::new(
            EXIT_PROPERTY,
            "extracted coloring failed verification",
        ));
    }
    let stats = table.enum_stats();
    Ok(RunReport {
        instance: args
            .path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default(),
        n: g.n(),
        m: g.m(),
        chi,
        wall_ms,
        enum_stats: EnumTotals {
            recursive_calls: stats.recursive_calls,
            emitted_sets: stats.emitted_sets,
        },
        table_entries: table.len(),
        peak_table_bytes: table.size_bytes(),
        coloring: args
            .print_coloring
            .then(|| coloring.colors.iter().map(|c| c + 1).collect()),
    })
}

/// Lists (or counts) small independent sets of the instance at `args.path`.
pub fn cmd_mis(args: &MisArgs, out: &mut dyn Write) -> Result<u64, Failure> {
    let g = read_graph(&args.path, MAX_VERTICES)?;
    let all = g.vertices();
    let count = if args.raw {
        let mut count = 0u64;
        let mut io = Ok(());
        small_mis(&g, all, args.k, |i| {
            count += 1;
            if !args.count_only && io.is_ok() {
                io = writeln!(out, "{}", i.to_one_based_string());
            }
        });
        io?;
        count
    } else {
        let sets = small_mis_filtered(&g, all, args.k);
        if !args.count_only {
            for i in &sets {
                writeln!(out, "{}", i.to_one_based_string())?;
            }
        }
        sets.len() as u64
    };
    if args.count_only {
        writeln!(out, "{count}")?;
    }
    Ok(count)
}

/// Builds the graph named by a `gen` spec.
pub fn cmd_gen(spec: &[String]) -> Result<Graph, Failure> {
    let usage = |msg: &str| {
        Failure::new(
            EXIT_USAGE,
            format!("bad gen spec `{}`: {msg}", spec.join(" ")),
        )
    };
    let int = |s: &String| s.parse::<usize>().map_err(|_| usage("expected an integer"));
    let (name, rest) = spec.split_first().ok_or_else(|| usage("empty"))?;
    let g = match (name.as_str(), rest) {
        ("triangles-k4s", [a, b]) => generate::triangles_k4s(int(a)?, int(b)?),
        ("gnp", [n, p, seed]) => {
            let p: f64 = p.parse().map_err(|_| usage("expected a probability"))?;
            let seed: u64 = seed.parse().map_err(|_| usage("expected a seed"))?;
            generate::gnp(int(n)?, p, seed)
        }
        ("petersen" | "groetzsch", []) => generate::named(name),
        ("complete", [n]) => generate::complete(int(n)?),
        ("cycle", [n]) => generate::cycle(int(n)?),
        _ => return Err(usage("unknown generator or wrong argument count")),
    };
    g.map_err(|e| usage(&e.to_string()))
}

fn format_decimal(x: f64) -> String {
    if x != 0.0 && !(1e-4..1e9).contains(&x) {
        format!("{x:.6e}")
    } else {
        format!("{x:.6}")
    }
}
