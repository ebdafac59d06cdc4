use std::f64::consts::PI;
use std::fmt::Write;

use num_rational::Ratio;
use tlsra_core::bounds::{upper_bound, worst_case_limit};

fn decimal(r: Ratio<i128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Per k: the proven upper bound on the greedy ratio, and the ratio the
/// worst-case family approaches as t grows (no family for k = 2).
pub fn ratio_table(max_k: usize) -> String {
    let mut out = String::new();
    writeln!(out, "{:>3}  {:>24}  {:>10}  {:>12}  {:>10}", "k", "upper", "~upper", "lower", "~lower").unwrap();
    for k in 2..=max_k {
        let up = upper_bound(k);
        let (lo, lo_dec) = if k >= 3 {
            let lo = worst_case_limit(k);
            (lo.to_string(), format!("{:.6}", decimal(lo)))
        } else {
            ("-".to_owned(), "-".to_owned())
        };
        writeln!(
            out,
            "{k:>3}  {:>24}  {:>10.6}  {lo:>12}  {lo_dec:>10}",
            up.to_string(),
            decimal(up)
        )
        .unwrap();
    }
    writeln!(out, "upper bound tends to pi^2/6 = {:.6}", PI * PI / 6.0).unwrap();
    out
}
