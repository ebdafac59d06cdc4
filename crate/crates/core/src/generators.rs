//! Instance generators: the adversarial worst-case family, random two-radius
//! geometric instances and random abstract reachability relations.

use std::fs;
use std::path::Path;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::instance::{Edge, Instance, NodeId};

/// Generation attempts before giving up on a connected max-power graph.
pub const MAX_ATTEMPTS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorstCaseParams {
    pub k: usize,
    pub t: usize,
}

/// Node label `(d, r, c)` of the worst-case family.
pub type Label = (usize, usize, usize);

#[derive(Clone, Debug)]
pub struct WorstCase {
    pub params: WorstCaseParams,
    pub instance: Instance,
    /// `labels[id]`, sorted lexicographically with `(0, 0, 0)` first.
    pub labels: Vec<Label>,
    /// The k-mergings `{(d,3,c) : 0 <= c < k}` for every d, then the
    /// 2-mergings `{(d,1,c), (d,2,c)}`.
    pub schedule: Vec<Vec<NodeId>>,
    /// `kt + 2(k-1)t`
    pub expected_greedy: usize,
    /// `1 + 2(k-1)t`
    pub expected_opt: usize,
}

impl WorstCase {
    pub fn id_of(&self, label: Label) -> Option<NodeId> {
        self.labels.binary_search(&label).ok().map(|i| i as NodeId)
    }

    /// `{(0,0,0)} ∪ {(d,r,c) : r ∈ {1,2}}`, sorted.
    pub fn optimal_set(&self) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = self
            .labels
            .iter()
            .enumerate()
            .filter(|(_, &(d, r, _))| d == 0 || r == 1 || r == 2)
            .map(|(i, _)| i as NodeId)
            .collect();
        out.sort_unstable();
        out
    }

    /// `q(k, t) = |U_k| / |U_OPT|` under the adversarial schedule.
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.expected_greedy as u64, self.expected_opt as u64)
    }

    pub fn schedule_file(&self) -> ScheduleFile {
        ScheduleFile {
            mergings: self.schedule.clone(),
        }
    }
}

/// On-disk merging schedule: `{"mergings": [[ids], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleFile {
    pub mergings: Vec<Vec<NodeId>>,
}

impl ScheduleFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("schedule serialization is infallible");
        s.push('\n');
        s
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_json()).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| Error::Json {
            context: path.display().to_string(),
            source,
        })
    }
}

/// The worst-case family `I_t` for the greedy solver with parameter k.
pub fn gen_worst_case(p: WorstCaseParams) -> Result<WorstCase> {
    let WorstCaseParams { k, t } = p;
    if k < 3 {
        return Err(Error::InvalidParams(format!("worst case needs k >= 3, got {k}")));
    }
    if t < 1 {
        return Err(Error::InvalidParams("worst case needs t >= 1".into()));
    }

    let mut labels = vec![(0, 0, 0)];
    for d in 1..=t {
        labels.push((d, 3, 0));
        for r in 1..=3 {
            for c in 1..k {
                labels.push((d, r, c));
            }
        }
    }
    labels.sort_unstable();
    let id = |l: Label| labels.binary_search(&l).expect("label in node set") as NodeId;

    let mut e_min: Vec<Edge> = Vec::new();
    for d in 1..=t {
        e_min.push((id((0, 0, 0)), id((d, 3, 0))));
        for c in 1..k {
            e_min.push((id((d, 2, c)), id((d, 3, c))));
        }
    }
    let mut e_max = e_min.clone();
    for d in 1..=t {
        e_max.push((id((0, 0, 0)), id((d, 2, 1))));
        for r in [2, 3] {
            for c in 1..k - 1 {
                e_max.push((id((d, r, c)), id((d, r, c + 1))));
            }
        }
        e_max.push((id((d, 3, 0)), id((d, 3, 1))));
        for c in 1..k {
            e_max.push((id((d, 1, c)), id((d, 2, c))));
        }
    }

    let n = labels.len();
    let instance = Instance::new(n, symmetric_lists(n, &e_min), symmetric_lists(n, &e_max))?
        .with_meta(json!({
            "generator": "worst-case",
            "k": k,
            "t": t,
            "labels": labels.iter().map(|&(d, r, c)| [d, r, c]).collect::<Vec<_>>(),
        }));

    let mut schedule = Vec::new();
    for d in 1..=t {
        let mut m: Vec<NodeId> = (0..k).map(|c| id((d, 3, c))).collect();
        m.sort_unstable();
        schedule.push(m);
    }
    for d in 1..=t {
        for c in 1..k {
            schedule.push(vec![id((d, 1, c)), id((d, 2, c))]);
        }
    }

    Ok(WorstCase {
        params: p,
        instance,
        labels,
        schedule,
        expected_greedy: k * t + 2 * (k - 1) * t,
        expected_opt: 1 + 2 * (k - 1) * t,
    })
}

fn symmetric_lists(n: usize, edges: &[Edge]) -> Vec<Vec<NodeId>> {
    let mut lists = vec![Vec::new(); n];
    for &(u, v) in edges {
        lists[u as usize].push(v);
        lists[v as usize].push(u);
    }
    lists
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeometricParams {
    pub n: usize,
    pub r_min: f64,
    pub r_max: f64,
    /// Points are uniform in `[0, side)²`.
    pub side: f64,
    pub seed: u64,
}

/// Random points in a square; `u ∈ dmin(v)` iff `‖u - v‖ <= r_min`, likewise
/// for `dmax`. Regenerates (continuing the same random stream) until G(V) is
/// connected, at most [`MAX_ATTEMPTS`] times. Coordinates go to `meta.points`.
pub fn gen_geometric(p: GeometricParams) -> Result<Instance> {
    if p.n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    if !(p.r_min > 0.0 && p.r_min <= p.r_max && p.r_max.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "need 0 < r_min <= r_max, got r_min = {}, r_max = {}",
            p.r_min, p.r_max
        )));
    }
    if !(p.side > 0.0 && p.side.is_finite()) {
        return Err(Error::InvalidParams(format!("side must be positive, got {}", p.side)));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..MAX_ATTEMPTS {
        let points: Vec<(f64, f64)> = (0..p.n)
            .map(|_| (rng.random::<f64>() * p.side, rng.random::<f64>() * p.side))
            .collect();
        let (dmin, dmax) = disk_relations(&points, p.r_min, p.r_max, p.side);
        let inst = Instance::new(p.n, dmin, dmax)?;
        if inst.graph().max_components().is_connected() {
            return Ok(inst.with_meta(json!({
                "generator": "geometric",
                "n": p.n,
                "r_min": p.r_min,
                "r_max": p.r_max,
                "side": p.side,
                "seed": p.seed,
                "points": points.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
            })));
        }
    }
    Err(Error::RetriesExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

fn disk_relations(
    points: &[(f64, f64)],
    r_min: f64,
    r_max: f64,
    side: f64,
) -> (Vec<Vec<NodeId>>, Vec<Vec<NodeId>>) {
    let n = points.len();
    // grid with cells no smaller than r_max, so neighbours lie in the 3x3 block
    let cap = (n as f64).sqrt().ceil() as usize + 1;
    let cells = ((side / r_max).floor() as usize).clamp(1, cap);
    let cell_of = |x: f64| ((x / side * cells as f64) as usize).min(cells - 1);
    let mut buckets: Vec<Vec<NodeId>> = vec![Vec::new(); cells * cells];
    for (i, &(x, y)) in points.iter().enumerate() {
        buckets[cell_of(y) * cells + cell_of(x)].push(i as NodeId);
    }
    let (rmin2, rmax2) = (r_min * r_min, r_max * r_max);
    let mut dmin = vec![Vec::new(); n];
    let mut dmax = vec![Vec::new(); n];
    for (i, &(x, y)) in points.iter().enumerate() {
        let (cx, cy) = (cell_of(x), cell_of(y));
        for gy in cy.saturating_sub(1)..=(cy + 1).min(cells - 1) {
            for gx in cx.saturating_sub(1)..=(cx + 1).min(cells - 1) {
                for &j in &buckets[gy * cells + gx] {
                    if j as usize == i {
                        continue;
                    }
                    let (qx, qy) = points[j as usize];
                    let d2 = (x - qx) * (x - qx) + (y - qy) * (y - qy);
                    if d2 <= rmax2 {
                        dmax[i].push(j);
                        if d2 <= rmin2 {
                            dmin[i].push(j);
                        }
                    }
                }
            }
        }
    }
    (dmin, dmax)
}

/// Independent per ordered pair: `u ∈ dmin(v)` with probability
/// `min_density`, `u ∈ dmax(v)` with probability `max_density`, coupled so
/// that `dmin ⊆ dmax`. Relations may be asymmetric.
pub fn gen_random_abstract(
    n: usize,
    min_density: f64,
    max_density: f64,
    seed: u64,
) -> Result<Instance> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    for (name, d) in [("min_density", min_density), ("max_density", max_density)] {
        if !(0.0..=1.0).contains(&d) {
            return Err(Error::InvalidParams(format!("{name} must be in [0, 1], got {d}")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut dmin = vec![Vec::new(); n];
        let mut dmax = vec![Vec::new(); n];
        for v in 0..n {
            for u in 0..n {
                if u == v {
                    continue;
                }
                let x: f64 = rng.random();
                let in_min = x < min_density;
                if in_min || x < max_density {
                    dmax[v].push(u as NodeId);
                }
                if in_min {
                    dmin[v].push(u as NodeId);
                }
            }
        }
        let inst = Instance::new(n, dmin, dmax)?;
        if inst.graph().max_components().is_connected() {
            return Ok(inst.with_meta(json!({
                "generator": "random",
                "n": n,
                "min_density": min_density,
                "max_density": max_density,
                "seed": seed,
            })));
        }
    }
    Err(Error::RetriesExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub instance: Instance,
}

/// `count` small instances (4 <= n <= 12), alternating geometric and
/// abstract, all derived from `seed`. Parameter draws that fail to connect
/// are skipped.
pub fn small_corpus(count: usize, seed: u64) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        let n = rng.random_range(4..=12usize);
        let sub_seed: u64 = rng.random();
        let entry = if i.is_multiple_of(2) {
            let r_min = rng.random_range(0.08..0.35);
            let r_max = rng.random_range(0.45..0.9);
            gen_geometric(GeometricParams {
                n,
                r_min,
                r_max,
                side: 1.0,
                seed: sub_seed,
            })
            .ok()
            .map(|instance| CorpusEntry {
                name: format!("geo-{i:04}-n{n}"),
                instance,
            })
        } else {
            let min_density = rng.random_range(0.0..0.3);
            let max_density = rng.random_range(0.3..0.8);
            gen_random_abstract(n, min_density, max_density, sub_seed)
                .ok()
                .map(|instance| CorpusEntry {
                    name: format!("abs-{i:04}-n{n}"),
                    instance,
                })
        };
        out.extend(entry);
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_case_sizes() {
        let wc = gen_worst_case(WorstCaseParams { k: 3, t: 1 }).unwrap();
        assert_eq!(wc.instance.n(), 8);
        assert_eq!((wc.expected_greedy, wc.expected_opt), (7, 5));
        assert_eq!(wc.ratio(), Ratio::new(7, 5));
        assert_eq!(wc.labels[0], (0, 0, 0));
        assert_eq!(wc.id_of((1, 3, 2)), Some(7));
        assert_eq!(wc.optimal_set(), vec![0, 1, 2, 3, 4]);

        let wc = gen_worst_case(WorstCaseParams { k: 3, t: 25 }).unwrap();
        assert_eq!(wc.ratio(), Ratio::new(175, 101));
        let wc = gen_worst_case(WorstCaseParams { k: 4, t: 10 }).unwrap();
        assert_eq!(wc.ratio(), Ratio::new(100, 61));
        assert_eq!(wc.instance.n(), 1 + 10 + 3 * 10 * 3);
    }

    #[test]
    fn worst_case_rejects_small_k() {
        assert!(gen_worst_case(WorstCaseParams { k: 2, t: 1 }).is_err());
        assert!(gen_worst_case(WorstCaseParams { k: 3, t: 0 }).is_err());
    }

    #[test]
    fn single_point() {
        let inst = gen_geometric(GeometricParams {
            n: 1,
            r_min: 0.1,
            r_max: 0.2,
            side: 1.0,
            seed: 3,
        })
        .unwrap();
        assert_eq!(inst.n(), 1);
        assert!(inst.graph().e_max().is_empty());
        assert!(inst.is_valid());
    }

    #[test]
    fn equal_radii_collapse_levels() {
        let inst = gen_geometric(GeometricParams {
            n: 20,
            r_min: 0.6,
            r_max: 0.6,
            side: 1.0,
            seed: 5,
        })
        .unwrap();
        assert_eq!(inst.graph().e_min(), inst.graph().e_max());
        assert_eq!(inst.lower_bound_cc(), 0);
    }

    #[test]
    fn geometric_param_errors() {
        let p = GeometricParams {
            n: 5,
            r_min: 0.5,
            r_max: 0.2,
            side: 1.0,
            seed: 0,
        };
        assert!(matches!(gen_geometric(p), Err(Error::InvalidParams(_))));
        let p = GeometricParams {
            n: 50,
            r_min: 0.001,
            r_max: 0.002,
            side: 1.0,
            seed: 0,
        };
        assert!(matches!(gen_geometric(p), Err(Error::RetriesExhausted { attempts: 100 })));
    }

    #[test]
    fn abstract_extremes() {
        let inst = gen_random_abstract(6, 0.0, 1.0, 1).unwrap();
        assert_eq!(inst.graph().e_max().len(), 15);
        assert!(inst.graph().e_min().is_empty());
        assert_eq!(inst.lower_bound_cc(), 6);
        assert!(gen_random_abstract(4, 1.5, 0.5, 1).is_err());
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = small_corpus(20, 11);
        let b = small_corpus(20, 11);
        assert_eq!(a.len(), 20);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.instance.to_canonical_bytes(), y.instance.to_canonical_bytes());
            assert!(x.instance.is_valid() && x.instance.n() <= 12);
        }
    }
}
