use serde::Serialize;

/// One solver run, as printed by `solve` and written by `bench`.
///
/// Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRecord {
    pub instance: String,
    pub digest: String,
    pub algorithm: String,
    pub k: Option<usize>,
    pub n: usize,
    pub s_min: usize,
    pub s_max: usize,
    /// `|CC(G(∅))|`
    pub cc_min: usize,
    pub size: usize,
    pub exact: Option<usize>,
    /// `size / exact`; 1 when both are 0.
    pub ratio: Option<f64>,
    pub op_count: Option<u64>,
    pub wall_ns: u64,
}

pub const CSV_COLUMNS: [&str; 13] = [
    "instance", "digest", "algorithm", "k", "n", "s_min", "s_max", "cc_min", "size", "exact",
    "ratio", "op_count", "wall_ns",
];

impl RunRecord {
    pub fn set_exact(&mut self, exact: usize) {
        self.exact = Some(exact);
        self.ratio = Some(if exact == 0 {
            1.0
        } else {
            self.size as f64 / exact as f64
        });
    }

    /// The lower bound a solution must meet: `cc_min` when above one.
    pub fn lower_bound(&self) -> usize {
        if self.cc_min > 1 {
            self.cc_min
        } else {
            0
        }
    }
}
