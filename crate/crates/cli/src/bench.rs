use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use rayon::prelude::*;
use tlsra_core::instance::{load_with, LoadOptions};
use tlsra_core::{solve_exact, Instance};

use crate::record::RunRecord;
use crate::run::{solve, AlgorithmSpec, SolveOptions};

pub const WORKERS_ENV: &str = "TLSRA_WORKERS";

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub algorithms: Vec<AlgorithmSpec>,
    pub reps: usize,
    /// Fill the `exact` column for instances with at most this many nodes.
    pub exact_max_n: Option<usize>,
    pub workers: Option<usize>,
    pub normalize: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algorithms: vec![AlgorithmSpec::Fast3, AlgorithmSpec::Greedy(3)],
            reps: 5,
            exact_max_n: None,
            workers: None,
            normalize: false,
        }
    }
}

#[derive(Debug)]
pub struct BenchReport {
    pub rows: Vec<RunRecord>,
    pub failures: Vec<(String, String)>,
}

/// `*.json` files directly under `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("reading corpus {}", dir.display()))? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn median(mut xs: Vec<u64>) -> u64 {
    xs.sort_unstable();
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2
    }
}

/// One row per algorithm; solutions are deterministic so only the timing
/// varies across repetitions, and the row keeps its median.
pub fn bench_instance(name: &str, inst: &Instance, cfg: &BenchConfig) -> Result<Vec<RunRecord>> {
    let exact = match cfg.exact_max_n {
        Some(max) if inst.n() <= max => Some(solve_exact(inst, None)?.size),
        _ => None,
    };
    let opts = SolveOptions::default();
    let mut rows = Vec::with_capacity(cfg.algorithms.len());
    for &spec in &cfg.algorithms {
        let mut times = Vec::with_capacity(cfg.reps.max(1));
        let mut last = None;
        for _ in 0..cfg.reps.max(1) {
            let out = solve(inst, name, spec, &opts)?;
            times.push(out.record.wall_ns);
            last = Some(out.record);
        }
        let mut row = last.expect("at least one repetition");
        row.wall_ns = median(times);
        if let Some(e) = exact {
            row.set_exact(e);
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn bench_files(files: &[PathBuf], cfg: &BenchConfig) -> Result<BenchReport> {
    let job = || {
        files
            .par_iter()
            .map(|path| {
                let name = instance_name(path);
                let res = load_with(path, LoadOptions { normalize: cfg.normalize })
                    .map_err(anyhow::Error::from)
                    .and_then(|(inst, _)| bench_instance(&name, &inst, cfg));
                (name, res)
            })
            .collect::<Vec<_>>()
    };
    let results = match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()?
            .install(job),
        None => job(),
    };

    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (name, res) in results {
        match res {
            Ok(r) => rows.extend(r),
            Err(e) => failures.push((name, format!("{e:#}"))),
        }
    }
    rows.sort_by(|a, b| {
        (&a.instance, &a.algorithm, a.k).cmp(&(&b.instance, &b.algorithm, b.k))
    });
    Ok(BenchReport { rows, failures })
}

pub fn write_csv<W: Write>(rows: &[RunRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
