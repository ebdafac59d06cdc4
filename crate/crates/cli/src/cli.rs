use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use tlsra_core::instance::{load_with, save, LoadOptions};
use tlsra_core::{
    gen_geometric, gen_random_abstract, gen_worst_case, GeometricParams, Instance, ScheduleFile,
    Solution, WorstCaseParams,
};

use crate::bench::{bench_files, corpus_files, write_csv, BenchConfig, WORKERS_ENV};
use crate::run::{parse_order, solve, AlgorithmSpec, SolveOptions};
use crate::table::ratio_table;

#[derive(Debug, Parser)]
#[command(name = "tlsra", version, about = "Two-level symmetric range assignment")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Solve an instance and print its run record.
    Solve(SolveArgs),
    /// Check a solution against its instance.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
    },
    /// Run solvers over a directory of instances and write CSV.
    Bench(BenchArgs),
    /// Print the approximation bounds per k.
    RatioTable {
        #[arg(long, default_value_t = 10)]
        max_k: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Adversarial family for greedy-k, with its merging schedule.
    WorstCase {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: PathBuf,
        /// Where to write the schedule; defaults to `<out>.schedule.json`.
        #[arg(long)]
        schedule: Option<PathBuf>,
    },
    /// Random points in a square with two transmission radii.
    Geometric {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rmin: f64,
        #[arg(long)]
        rmax: f64,
        #[arg(long, default_value_t = 1.0)]
        side: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random reachability relations.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        min_density: f64,
        #[arg(long)]
        max_density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub instance: PathBuf,
    /// greedy-k, greedy-<k>, fast3, spanning-tree or exact.
    #[arg(long, short, default_value = "fast3")]
    pub algorithm: String,
    #[arg(long, short, default_value_t = 3)]
    pub k: usize,
    /// Merging order for greedy-k: `lex` or `perm:<seed>`.
    #[arg(long, default_value = "lex")]
    pub order: String,
    /// Merging schedule file to replay.
    #[arg(long)]
    pub schedule: Option<PathBuf>,
    /// Largest subset size the exact solver may try.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Add missing min-power entries to dmax before validating.
    #[arg(long)]
    pub normalize: bool,
    /// Solution file to write.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub corpus: PathBuf,
    /// Comma-separated algorithm names.
    #[arg(long, default_value = "fast3,greedy-3", value_delimiter = ',')]
    pub algorithms: Vec<String>,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    /// CSV path; stdout when omitted.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Compute the exact optimum for instances up to this size.
    #[arg(long)]
    pub exact_max_n: Option<usize>,
    #[arg(long, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub normalize: bool,
}

/// Runs a parsed command. Exit status 1 is reserved for an infeasible
/// verdict; errors are reported by the caller.
pub fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(g) => gen(g),
        Command::Solve(a) => cmd_solve(a),
        Command::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Command::Bench(a) => cmd_bench(a),
        Command::RatioTable { max_k } => {
            if !(2..=40).contains(&max_k) {
                bail!("--max-k must be in 2..=40");
            }
            print!("{}", ratio_table(max_k));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_instance(path: &Path, normalize: bool) -> Result<Instance> {
    let (inst, report) = load_with(path, LoadOptions { normalize })?;
    if report.self_loops_stripped > 0 {
        eprintln!(
            "warning: {}: stripped {} self-loop entries",
            path.display(),
            report.self_loops_stripped
        );
    }
    Ok(inst)
}

fn gen(cmd: GenCommand) -> Result<ExitCode> {
    let (inst, out) = match cmd {
        GenCommand::WorstCase { k, t, out, schedule } => {
            let wc = gen_worst_case(WorstCaseParams { k, t })?;
            let spath = schedule.unwrap_or_else(|| out.with_extension("schedule.json"));
            wc.schedule_file().save(&spath)?;
            (wc.instance, out)
        }
        GenCommand::Geometric { n, rmin, rmax, side, seed, out } => (
            gen_geometric(GeometricParams {
                n,
                r_min: rmin,
                r_max: rmax,
                side,
                seed,
            })?,
            out,
        ),
        GenCommand::Random { n, min_density, max_density, seed, out } => {
            (gen_random_abstract(n, min_density, max_density, seed)?, out)
        }
    };
    save(&inst, &out)?;
    println!("{}", inst.digest());
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(a: SolveArgs) -> Result<ExitCode> {
    let inst = load_instance(&a.instance, a.normalize)?;
    let spec = AlgorithmSpec::parse(&a.algorithm, a.k)?;
    let schedule = match &a.schedule {
        Some(p) => Some(ScheduleFile::load(p)?.mergings),
        None => None,
    };
    let opts = SolveOptions {
        order: parse_order(&a.order)?,
        schedule,
        budget: a.budget,
    };
    let name = a
        .instance
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let outcome = solve(&inst, &name, spec, &opts)?;
    if let Some(out) = &a.out {
        outcome.solution.save(out)?;
    }
    let stdout = io::stdout();
    let mut w = stdout.lock();
    serde_json::to_writer(&mut w, &outcome.record)?;
    writeln!(w)?;
    if let Some(r) = &outcome.exact {
        serde_json::to_writer(&mut w, r)?;
        writeln!(w)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(instance: &Path, solution: &Path) -> Result<ExitCode> {
    let inst = load_instance(instance, false)?;
    let sol = Solution::load(solution)?;
    let verdict = sol.verify(&inst)?;
    println!("{}", serde_json::to_string(&verdict)?);
    Ok(if verdict.feasible {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_bench(a: BenchArgs) -> Result<ExitCode> {
    let algorithms = a
        .algorithms
        .iter()
        .map(|s| AlgorithmSpec::parse(s.trim(), 3))
        .collect::<Result<Vec<_>>>()?;
    let cfg = BenchConfig {
        algorithms,
        reps: a.reps,
        exact_max_n: a.exact_max_n,
        workers: a.workers,
        normalize: a.normalize,
    };
    let files = corpus_files(&a.corpus)?;
    if files.is_empty() {
        bail!("no .json instances in {}", a.corpus.display());
    }
    let report = bench_files(&files, &cfg)?;
    for (name, err) in &report.failures {
        eprintln!("error: {name}: {err}");
    }
    match &a.out {
        Some(p) => {
            let f = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            write_csv(&report.rows, BufWriter::new(f))?;
        }
        None => write_csv(&report.rows, io::stdout().lock())?,
    }
    eprintln!(
        "{} rows, {} failed instances",
        report.rows.len(),
        report.failures.len()
    );
    Ok(ExitCode::SUCCESS)
}
