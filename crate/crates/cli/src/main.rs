//! `harmonia`: generators, counters and checkers for linear triple systems,
//! triangle packings and harmonic-point geometry, with JSON run reports.
//!
//! Exit codes: 0 when every check passed, 1 when a check found a violated
//! invariant (the report names it and carries a witness), 2 on usage, I/O or
//! precondition errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "harmonia",
    version,
    about = "Loose cycles, triangle packings and harmonic points, computed exactly"
)]
struct Cli {
    /// Worker threads for parallel phases (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Where to write the output. `gen` writes the generated file there and
    /// the report to stdout (without `--out`, the file goes to stdout and the
    /// report to stderr); every other command writes its report there.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Generate triple systems, graphs and point sets.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Count loose cycles or graph cycles.
    #[command(subcommand)]
    Count(CountCmd),
    /// Check identities and invariants.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Evaluate the supersaturation lower bounds.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Triangle packings and farness certificates.
    #[command(subcommand)]
    Removal(RemovalCmd),
    /// Similar triangles and harmonic points.
    #[command(subcommand)]
    Geom(GeomCmd),
    /// Closed-form statistics.
    #[command(subcommand)]
    Stats(StatsCmd),
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    /// The C5-free system T3(n) as `.l3g`.
    T3 {
        #[arg(long)]
        n: usize,
    },
    /// The blow-up H(t) of a linear system as `.l3g`.
    Blowup {
        #[arg(long)]
        t: usize,
        input: PathBuf,
    },
    /// The base-13 right isosceles point set as `.pts`.
    Ruzsa {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        s: i64,
    },
    /// A random linear system from `attempts` proposed triples, as `.l3g`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        attempts: usize,
        #[arg(long)]
        seed: u64,
    },
    /// A random graph G(n, p) as `.g1`.
    Graph {
        #[arg(long)]
        n: usize,
        /// Edge probability as `num/den`.
        #[arg(long)]
        p: String,
        #[arg(long)]
        seed: u64,
    },
    /// Distinct random points of a `width x height` grid as `.pts`.
    Points {
        #[arg(long)]
        width: i64,
        #[arg(long)]
        height: i64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct WorkLimit {
    /// Refuse instances whose estimated work exceeds this many steps.
    #[arg(long, default_value_t = 1_000_000_000)]
    max_work: u128,
}

#[derive(Subcommand, Debug)]
enum CountCmd {
    /// Loose cycles C_k in a `.l3g` system.
    Loose {
        #[arg(long)]
        k: usize,
        input: PathBuf,
        #[command(flatten)]
        limit: WorkLimit,
    },
    /// Cycles of length k in a `.g1` graph.
    Graph {
        #[arg(long)]
        k: usize,
        input: PathBuf,
        #[command(flatten)]
        limit: WorkLimit,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Every pair of vertices lies in at most one edge.
    Linear { input: PathBuf },
    /// `sum e(G_v) = 4 sum C(d, 2)`, or with `--k` the k-path identity.
    Identity {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Include the per-vertex breakdown.
        #[arg(long)]
        per_vertex: bool,
    },
    /// The bad-path bound on every G_v.
    Claim {
        input: PathBuf,
        #[arg(long)]
        per_vertex: bool,
    },
    /// Digit tableaux and harmonic-point distinctness of the base-13 set.
    Ruzsa {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        s: i64,
    },
    /// The four-point formula on every loose pentagon of a similarity system.
    Lemma41 {
        input: PathBuf,
        /// Shape parameter as `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        limit: WorkLimit,
    },
}

#[derive(Subcommand, Debug)]
enum BoundCmd {
    /// `m^6 / n^7` under `m^2 > 10^4 n^3`.
    C5 {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
    },
    /// `m^{3k} / n^{4k-1}` under `m > C n^{2 - 1/(3k)}`.
    Ck {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        k: u32,
        /// The constant C as a rational.
        #[arg(long, default_value = "1")]
        c: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PackOrder {
    Lex,
    Random,
}

#[derive(Subcommand, Debug)]
enum RemovalCmd {
    /// Greedy edge-disjoint triangle packing.
    Pack {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = PackOrder::Lex)]
        order: PackOrder,
        /// Required with `--order random`.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Bounds on the triangle edit distance over n^2.
    Certify { input: PathBuf },
    /// Compares the (2l+1)-cycle count with `c eps^{3l} n^{2l+1}`.
    Check {
        input: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value = "1")]
        c: String,
        #[command(flatten)]
        limit: WorkLimit,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrientationArg {
    Direct,
    Mirror,
    Both,
}

#[derive(Subcommand, Debug)]
enum GeomCmd {
    /// Labeled triangles of a point set with a given shape.
    Similar {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = OrientationArg::Both)]
        orientation: OrientationArg,
    },
    /// The three harmonic points of a triangle, each point as `re,im`.
    Harmonic {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Pairs of similar triangles with a common harmonic point.
    Shared {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = OrientationArg::Both)]
        orientation: OrientationArg,
    },
    /// Greedy closure under popular harmonic points.
    Closure {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(long)]
        eps: String,
        /// Also write the closed point set here as `.pts`.
        #[arg(long)]
        points: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum StatsCmd {
    /// Point and triangle counts of the base-13 construction.
    Ruzsa {
        /// Comma-separated values of m.
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let (name, result) = commands::run(&cli.command, cli.out.as_deref());
    let elapsed = start.elapsed().as_millis();
    match result {
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(outcome) => {
            let text = report::render(&name, &outcome, elapsed);
            let written = match (&cli.command, cli.out.as_deref()) {
                // The generated file went to stdout, so the report cannot.
                (Group::Gen(_), None) => {
                    eprint!("{text}");
                    Ok(())
                }
                (Group::Gen(_), Some(_)) | (_, None) => {
                    print!("{text}");
                    Ok(())
                }
                (_, Some(p)) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if let Some(v) = &outcome.violation {
                eprintln!("violated: {}", v.invariant);
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
