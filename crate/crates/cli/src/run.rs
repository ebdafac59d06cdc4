use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Result};
use tlsra_core::exact::ExactResult;
use tlsra_core::fast3::scan_order_from_schedule;
use tlsra_core::{
    approx_2lsra_k, fast3_solve_with_order, solve_exact, spanning_tree_baseline, Algorithm,
    Instance, MergingOrder, NodeId, Solution,
};

use crate::record::RunRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmSpec {
    Greedy(usize),
    Fast3,
    SpanningTree,
    Exact,
}

impl AlgorithmSpec {
    /// `greedy-k` takes its k from `k`; `greedy-<k>` carries its own.
    pub fn parse(name: &str, k: usize) -> Result<Self> {
        if let Some(rest) = name.strip_prefix("greedy-") {
            if rest != "k" {
                return Ok(AlgorithmSpec::Greedy(rest.parse()?));
            }
        }
        Ok(match name.parse::<Algorithm>().map_err(anyhow::Error::msg)? {
            Algorithm::GreedyK => AlgorithmSpec::Greedy(k),
            Algorithm::Fast3 => AlgorithmSpec::Fast3,
            Algorithm::SpanningTree => AlgorithmSpec::SpanningTree,
            Algorithm::Exact => AlgorithmSpec::Exact,
        })
    }

    pub fn algorithm(self) -> Algorithm {
        match self {
            AlgorithmSpec::Greedy(_) => Algorithm::GreedyK,
            AlgorithmSpec::Fast3 => Algorithm::Fast3,
            AlgorithmSpec::SpanningTree => Algorithm::SpanningTree,
            AlgorithmSpec::Exact => Algorithm::Exact,
        }
    }
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmSpec::Greedy(k) => write!(f, "greedy-{k}"),
            other => f.write_str(other.algorithm().as_str()),
        }
    }
}

impl FromStr for AlgorithmSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgorithmSpec::parse(s, 3)
    }
}

/// `lex` or `perm:<seed>`.
pub fn parse_order(s: &str) -> Result<MergingOrder> {
    match s {
        "lex" | "lexicographic" => Ok(MergingOrder::Lexicographic),
        _ => match s.strip_prefix("perm:") {
            Some(seed) => Ok(MergingOrder::Permutation(seed.parse()?)),
            None => bail!("unknown order `{s}` (expected `lex` or `perm:<seed>`)"),
        },
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub order: MergingOrder,
    /// Replayed by greedy-k; for fast3 it fixes the scan order.
    pub schedule: Option<Vec<Vec<NodeId>>>,
    pub budget: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub solution: Solution,
    pub record: RunRecord,
    pub exact: Option<ExactResult>,
}

/// Runs one solver and times it with a monotonic clock.
pub fn solve(inst: &Instance, name: &str, spec: AlgorithmSpec, opts: &SolveOptions) -> Result<Outcome> {
    let mut op_count = None;
    let mut exact = None;
    let start = Instant::now();
    let solution = match spec {
        AlgorithmSpec::Greedy(k) => {
            let order = match &opts.schedule {
                Some(s) => MergingOrder::Schedule(s.clone()),
                None => opts.order.clone(),
            };
            approx_2lsra_k(inst, k, &order)?
        }
        AlgorithmSpec::Fast3 => {
            let scan = opts
                .schedule
                .as_ref()
                .map(|s| scan_order_from_schedule(inst.graph(), s));
            let run = fast3_solve_with_order(inst, scan.as_deref())?;
            op_count = Some(run.op_count);
            run.solution
        }
        AlgorithmSpec::SpanningTree => spanning_tree_baseline(inst)?,
        AlgorithmSpec::Exact => {
            let r = solve_exact(inst, opts.budget)?;
            let sol = Solution {
                algorithm: Algorithm::Exact,
                k: None,
                u_set: r.u_opt.clone(),
                trace: Vec::new(),
                instance_digest: inst.digest().to_owned(),
            };
            exact = Some(r);
            sol
        }
    };
    let wall_ns = start.elapsed().as_nanos() as u64;

    let mut record = RunRecord {
        instance: name.to_owned(),
        digest: inst.digest().to_owned(),
        algorithm: spec.algorithm().as_str().to_owned(),
        k: solution.k,
        n: inst.n(),
        s_min: inst.s_min(),
        s_max: inst.s_max(),
        cc_min: inst.graph().min_components().count(),
        size: solution.size(),
        exact: None,
        ratio: None,
        op_count,
        wall_ns,
    };
    if let Some(r) = &exact {
        record.set_exact(r.size);
    }
    Ok(Outcome {
        solution,
        record,
        exact,
    })
}
