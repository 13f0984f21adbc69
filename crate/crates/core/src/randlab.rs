// === random-lab: seeded G(n,p) sampling, threshold sweeps, dense-set probes
//
// Everything here is deterministic given a master seed. Per-trial seeds are
// derived by hashing (master, n, grid-parameter, trial), so trials can run in
// any order (or in parallel) without changing a single output byte. All
// logarithms are natural.

use rand::distributions::Distribution;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Geometric;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{pair_from_rank, Graph};
use crate::numerics::{derive_seed, ln_binomial, log_sum_exp};
use crate::thickness::{thickness_order_with_cap, Order};

/// Below this edge probability, sampling walks the pair sequence with
/// geometric skips instead of flipping one coin per pair.
const SKIP_SAMPLING_MAX_P: f64 = 0.1;

/// Sample G(n, p) with the given RNG stream seed. Deterministic in
/// (n, p, stream_seed). Pairs are visited in lexicographic order on both
/// code paths, so the two paths draw the same distribution (though not the
/// same graphs for the same seed).
pub fn sample_gnp(n: usize, p: f64, stream_seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadProbability { p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed);
    let total = (n.saturating_sub(1) * n / 2) as u64;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if p == 0.0 || total == 0 {
        // fall through with no edges
    } else if p <= SKIP_SAMPLING_MAX_P {
        // Geometric skip: the gap to the next selected pair is the number of
        // failures before the first success of a p-coin.
        let geo = Geometric::new(p)
            .map_err(|e| Error::BadParameter(format!("geometric sampler: {e}")))?;
        let mut pos: u64 = 0; // next candidate rank
        loop {
            let skip = geo.sample(&mut rng);
            pos = pos.saturating_add(skip);
            if pos >= total {
                break;
            }
            edges.push(pair_from_rank(n, pos));
            pos += 1;
        }
    } else {
        edges.reserve((p * total as f64) as usize);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

// --- threshold sweeps ----------------------------------------------------

/// One axis value of the sweep grid: either the scaled density c (with
/// p = c/sqrt(n)) or a raw edge probability.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GridParam {
    C(f64),
    P(f64),
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub ns: Vec<usize>,
    pub grid: Vec<GridParam>,
    pub trials: u64,
    pub master_seed: u64,
    /// Level cap handed to the thickness engine; None uses the engine's
    /// own (never-binding) default for each sampled graph.
    pub level_cap: Option<u32>,
}

impl ExperimentConfig {
    fn validate(&self) -> Result<()> {
        if self.ns.is_empty() || self.grid.is_empty() {
            return Err(Error::BadParameter("sweep grid is empty".to_string()));
        }
        if self.trials == 0 {
            return Err(Error::BadParameter("trials must be >= 1".to_string()));
        }
        for &n in &self.ns {
            if n == 0 {
                return Err(Error::BadParameter("n must be >= 1".to_string()));
            }
            for gp in &self.grid {
                let p = gp.p_for(n);
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::BadProbability { p });
                }
            }
        }
        Ok(())
    }
}

impl GridParam {
    fn p_for(&self, n: usize) -> f64 {
        match *self {
            GridParam::C(c) => c / (n as f64).sqrt(),
            GridParam::P(p) => p,
        }
    }

    fn c_for(&self, n: usize) -> f64 {
        match *self {
            GridParam::C(c) => c,
            GridParam::P(p) => p * (n as f64).sqrt(),
        }
    }

    // Seed derivation folds in which parameterization was used, so a c-point
    // and a p-point that happen to coincide still get independent streams.
    fn seed_parts(&self) -> (u64, u64) {
        match *self {
            GridParam::C(c) => (0, c.to_bits()),
            GridParam::P(p) => (1, p.to_bits()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub grid_index: usize,
    pub n: usize,
    pub c: f64,
    pub p: f64,
    pub trial: u64,
    pub seed: u64,
    pub order: Order,
    pub rel_hyperbolic: Option<bool>,
    pub max_t1_component: usize,
    pub max_supp1: usize,
}

impl SweepRow {
    fn rel_hyp_token(&self) -> &'static str {
        match self.rel_hyperbolic {
            Some(true) => "true",
            Some(false) => "false",
            None => "unknown",
        }
    }
}

/// Exact header of the CSV emitted by [`SweepResult::to_csv`].
pub const SWEEP_CSV_HEADER: &str = "n,c,p,trial,seed,order,rel_hyp,max_t1_comp,max_supp1";

#[derive(Clone, Debug, Serialize)]
pub struct GridAggregate {
    pub n: usize,
    pub c: f64,
    pub p: f64,
    pub trials: u64,
    /// Verdict counts keyed by order token ("0", "1", ..., "inf", "cap").
    pub order_counts: BTreeMap<String, u64>,
    pub frac_rel_hyperbolic: f64,
    pub frac_infinite: f64,
    pub frac_indeterminate: f64,
    pub max_t1_component_max: usize,
    pub max_supp1_max: usize,
}

impl GridAggregate {
    /// Fraction of trials whose verdict was a finite order <= k.
    pub fn frac_order_at_most(&self, k: u32) -> f64 {
        let hits: u64 = self
            .order_counts
            .iter()
            .filter_map(|(tok, cnt)| tok.parse::<u32>().ok().map(|o| (o, cnt)))
            .filter(|&(o, _)| o <= k)
            .map(|(_, cnt)| cnt)
            .sum();
        hits as f64 / self.trials as f64
    }
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(32 * (self.rows.len() + 1));
        out.push_str(SWEEP_CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.n,
                r.c,
                r.p,
                r.trial,
                r.seed,
                r.order.token(),
                r.rel_hyp_token(),
                r.max_t1_component,
                r.max_supp1,
            ));
        }
        out
    }

    /// Per-grid-point aggregates, recomputed from the rows.
    pub fn aggregates(&self) -> Vec<GridAggregate> {
        let mut by_point: BTreeMap<usize, Vec<&SweepRow>> = BTreeMap::new();
        for r in &self.rows {
            by_point.entry(r.grid_index).or_default().push(r);
        }
        by_point
            .values()
            .map(|rows| {
                let first = rows[0];
                let trials = rows.len() as u64;
                let mut order_counts: BTreeMap<String, u64> = BTreeMap::new();
                let mut rel_hyp = 0u64;
                let mut infinite = 0u64;
                let mut indeterminate = 0u64;
                let mut max_comp = 0usize;
                let mut max_supp1 = 0usize;
                for r in rows {
                    *order_counts.entry(r.order.token()).or_insert(0) += 1;
                    if r.rel_hyperbolic == Some(true) {
                        rel_hyp += 1;
                    }
                    match r.order {
                        Order::Infinite => infinite += 1,
                        Order::Indeterminate { .. } => indeterminate += 1,
                        Order::Finite(_) => {}
                    }
                    max_comp = max_comp.max(r.max_t1_component);
                    max_supp1 = max_supp1.max(r.max_supp1);
                }
                GridAggregate {
                    n: first.n,
                    c: first.c,
                    p: first.p,
                    trials,
                    order_counts,
                    frac_rel_hyperbolic: rel_hyp as f64 / trials as f64,
                    frac_infinite: infinite as f64 / trials as f64,
                    frac_indeterminate: indeterminate as f64 / trials as f64,
                    max_t1_component_max: max_comp,
                    max_supp1_max: max_supp1,
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "n": r.n,
                    "c": r.c,
                    "p": r.p,
                    "trial": r.trial,
                    "seed": r.seed,
                    "order": r.order.token(),
                    "rel_hyp": r.rel_hyp_token(),
                    "max_t1_comp": r.max_t1_component,
                    "max_supp1": r.max_supp1,
                })
            })
            .collect();
        serde_json::json!({
            "rows": rows,
            "aggregates": self.aggregates(),
        })
    }
}

/// Run the full sweep grid: for every (n, grid parameter) point, sample
/// `trials` independent graphs and record the thickness verdict of each.
/// Rows come back sorted by (grid point, trial) regardless of how the
/// parallel execution interleaved them.
pub fn threshold_sweep(cfg: &ExperimentConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let mut points = Vec::new();
    for &n in &cfg.ns {
        for gp in &cfg.grid {
            points.push((points.len(), n, *gp));
        }
    }
    let tasks: Vec<(usize, u64)> = points
        .iter()
        .flat_map(|&(idx, _, _)| (0..cfg.trials).map(move |t| (idx, t)))
        .collect();
    let mut rows = tasks
        .into_par_iter()
        .map(|(idx, trial)| {
            let (_, n, gp) = points[idx];
            let p = gp.p_for(n);
            let (kind, bits) = gp.seed_parts();
            let seed = derive_seed(cfg.master_seed, &[n as u64, kind, bits, trial]);
            let g = sample_gnp(n, p, seed)?;
            let cap = cfg.level_cap.unwrap_or_else(|| crate::thickness::default_level_cap(&g));
            let report = thickness_order_with_cap(&g, cap);
            Ok(SweepRow {
                grid_index: idx,
                n,
                c: gp.c_for(n),
                p,
                trial,
                seed,
                order: report.order,
                rel_hyperbolic: report.rel_hyperbolic,
                max_t1_component: report.t1_stats.max_component_size,
                max_supp1: report.t1_stats.max_supp1_size,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.grid_index, r.trial));
    Ok(SweepResult { rows })
}

// --- first-moment bound on dense subsets ----------------------------------

/// ln of the expected number of m-vertex subsets spanning at least 2m-4
/// edges, summed over m in [ceil(ln n), floor(2 ln n)]:
///
///   E[X] = sum_m C(n,m) * C(C(m,2), 2m-4) * p^(2m-4)
///
/// Evaluated entirely in the log domain, so it cannot overflow. An empty
/// m-range yields -inf (an expectation of zero).
pub fn ln_expected_dense_sets(n: usize, p: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::BadParameter(format!(
            "expected_dense_sets requires n >= 3, got {n}"
        )));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::BadParameter(format!(
            "expected_dense_sets requires 0 < p < 1, got {p}"
        )));
    }
    let ln_n = (n as f64).ln();
    let lo = ln_n.ceil() as u64;
    let hi = (2.0 * ln_n).floor() as u64;
    let mut terms = Vec::new();
    for m in lo..=hi.min(n as u64) {
        let pairs = m * (m - 1) / 2;
        let picks = 2 * m - 4;
        debug_assert!(picks <= pairs); // m^2-5m+8 > 0 for all m
        let ln_term = ln_binomial(n as u64, m)
            + ln_binomial(pairs, picks)
            + picks as f64 * p.ln();
        terms.push(ln_term);
    }
    if terms.is_empty() {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(log_sum_exp(&terms))
}

/// exp of [`ln_expected_dense_sets`]; convenient when the value is known to
/// be moderate (it is +inf if the log-domain value exceeds ~709).
pub fn expected_dense_sets(n: usize, p: f64) -> Result<f64> {
    Ok(ln_expected_dense_sets(n, p)?.exp())
}

// --- heuristic dense-subset search -----------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct DenseWitness {
    pub m: usize,
    pub edges: usize,
    /// edges - 2m; a value >= -4 certifies an m-set with >= 2m-4 edges.
    pub score: i64,
    pub vertices: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DenseProbeReport {
    /// Best witness for each m in the probed range (m clamped to [1, n]).
    pub per_m: Vec<DenseWitness>,
    /// Overall best by score, ties broken toward more edges.
    pub best: Option<DenseWitness>,
}

/// Heuristic search for dense vertex subsets: one deterministic greedy peel
/// plus `restarts` randomized peels (random tie-breaking among minimum-degree
/// vertices), each followed by swap-based hill climbing at every target size.
/// A returned witness with score >= -4 is certified (its edges are counted
/// exactly); absence of one is evidence only.
pub fn dense_subset_probe(
    g: &Graph,
    m_lo: usize,
    m_hi: usize,
    restarts: u32,
    seed: u64,
) -> DenseProbeReport {
    let n = g.n();
    let lo = m_lo.max(1);
    let hi = m_hi.min(n);
    let mut per_m: BTreeMap<usize, DenseWitness> = BTreeMap::new();
    if lo <= hi {
        for r in 0..=restarts {
            let mut rng = (r > 0).then(|| ChaCha8Rng::seed_from_u64(derive_seed(seed, &[r as u64])));
            let removal = peel_order(g, rng.as_mut());
            for m in lo..=hi {
                // survivors after n-m removals = the last m entries
                let mut set: Vec<u32> = removal[n - m..].to_vec();
                let edges = improve_by_swaps(g, &mut set);
                let cand = DenseWitness {
                    m,
                    edges,
                    score: edges as i64 - 2 * m as i64,
                    vertices: {
                        set.sort_unstable();
                        set
                    },
                };
                match per_m.get(&m) {
                    Some(prev) if prev.edges >= cand.edges => {}
                    _ => {
                        per_m.insert(m, cand);
                    }
                }
            }
        }
    }
    let per_m: Vec<DenseWitness> = per_m.into_values().collect();
    let best = per_m
        .iter()
        .max_by_key(|w| (w.score, w.edges))
        .cloned();
    DenseProbeReport { per_m, best }
}

/// Remove vertices one at a time, always a minimum-degree vertex of the
/// remaining induced subgraph; returns the removal order. With an RNG,
/// ties are broken uniformly at random, otherwise by smallest index.
fn peel_order(g: &Graph, mut rng: Option<&mut ChaCha8Rng>) -> Vec<u32> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let min_deg = (0..n)
            .filter(|&v| alive[v])
            .map(|v| deg[v])
            .min()
            .expect("nonempty");
        let pick = match rng.as_deref_mut() {
            Some(rng) => {
                let ties: Vec<usize> =
                    (0..n).filter(|&v| alive[v] && deg[v] == min_deg).collect();
                ties[rng.gen_range(0..ties.len())]
            }
            None => (0..n)
                .find(|&v| alive[v] && deg[v] == min_deg)
                .expect("nonempty"),
        };
        alive[pick] = false;
        for &w in g.neighbors(pick) {
            if alive[w as usize] {
                deg[w as usize] -= 1;
            }
        }
        order.push(pick as u32);
    }
    order
}

/// Hill-climb on single-vertex swaps that strictly increase the induced edge
/// count; mutates `set` in place and returns its final edge count.
fn improve_by_swaps(g: &Graph, set: &mut [u32]) -> usize {
    let n = g.n();
    let m = set.len();
    let mut in_set = vec![false; n];
    for &v in set.iter() {
        in_set[v as usize] = true;
    }
    // deg_in[v] = neighbors of v inside the set (for members: internal degree)
    let mut deg_in = vec![0usize; n];
    let mut edges = 0usize;
    for &v in set.iter() {
        for &w in g.neighbors(v as usize) {
            deg_in[w as usize] += 1;
            if in_set[w as usize] && (w as usize) > v as usize {
                edges += 1;
            }
        }
    }
    if m == 0 || m == n {
        return edges;
    }
    for _round in 0..(4 * m).max(16) {
        let u = (0..n)
            .filter(|&v| in_set[v])
            .min_by_key(|&v| (deg_in[v], v))
            .expect("nonempty set");
        let w = (0..n)
            .filter(|&v| !in_set[v])
            .max_by_key(|&v| (deg_in[v], std::cmp::Reverse(v)))
            .expect("nonempty complement");
        // gain of swapping u out for w; the edge u~w (if any) must not count
        let gain = deg_in[w] as i64 - g.has_edge(u, w) as i64 - deg_in[u] as i64;
        if gain <= 0 {
            break;
        }
        in_set[u] = false;
        for &x in g.neighbors(u) {
            deg_in[x as usize] -= 1;
        }
        edges -= deg_in[u]; // deg_in[u] is unaffected by u's own exit
        // after u's exit, deg_in[w] equals w's degree into S - u exactly
        edges += deg_in[w];
        in_set[w] = true;
        for &x in g.neighbors(w) {
            deg_in[x as usize] += 1;
        }
        let pos = set.iter().position(|&v| v == u as u32).expect("member");
        set[pos] = w as u32;
    }
    debug_assert_eq!(edges, {
        let vs = crate::vertexset::VertexSet::from_iter(n, set.iter().map(|&v| v as usize));
        g.induced_edge_count(&vs)
    });
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertexset::VertexSet;

    #[test]
    fn gnp_extremes() {
        let g0 = sample_gnp(10, 0.0, 7).unwrap();
        assert_eq!(g0.edge_count(), 0);
        let g1 = sample_gnp(10, 1.0, 7).unwrap();
        assert_eq!(g1.edge_count(), 45);
        assert!(sample_gnp(10, 1.5, 7).is_err());
        assert!(sample_gnp(10, -0.1, 7).is_err());
        assert_eq!(sample_gnp(0, 0.5, 7).unwrap().n(), 0);
    }

    #[test]
    fn gnp_deterministic_per_seed() {
        let a = sample_gnp(40, 0.3, 123).unwrap();
        let b = sample_gnp(40, 0.3, 123).unwrap();
        let c = sample_gnp(40, 0.3, 124).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert_ne!(a.edges(), c.edges());
        // skip-sampling path is deterministic too
        let d = sample_gnp(40, 0.05, 9).unwrap();
        let e = sample_gnp(40, 0.05, 9).unwrap();
        assert_eq!(d.edges(), e.edges());
    }

    #[test]
    fn gnp_skip_path_plausible_density() {
        // 200 vertices, p = 0.05: mean 995, sd ~ 30.7; accept +-6 sd
        let mut total = 0usize;
        for s in 0..20 {
            total += sample_gnp(200, 0.05, s).unwrap().edge_count();
        }
        let mean = total as f64 / 20.0;
        assert!((mean - 995.0).abs() < 6.0 * 30.7 / (20.0f64).sqrt(), "mean {mean}");
    }

    #[test]
    fn sweep_shape_and_determinism() {
        let cfg = ExperimentConfig {
            ns: vec![30, 40],
            grid: vec![GridParam::C(0.4), GridParam::P(0.02)],
            trials: 4,
            master_seed: 99,
            level_cap: None,
        };
        let a = threshold_sweep(&cfg).unwrap();
        assert_eq!(a.rows.len(), 2 * 2 * 4);
        let b = threshold_sweep(&cfg).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert!(a.to_csv().starts_with("n,c,p,trial,seed,order,rel_hyp,max_t1_comp,max_supp1\n"));
        let aggs = a.aggregates();
        assert_eq!(aggs.len(), 4);
        assert!(aggs.iter().all(|agg| agg.trials == 4));
        // row counts per grid point match trials
        for agg in &aggs {
            let total: u64 = agg.order_counts.values().sum();
            assert_eq!(total, 4);
        }
    }

    #[test]
    fn sweep_zero_density_is_all_rel_hyperbolic() {
        let cfg = ExperimentConfig {
            ns: vec![50],
            grid: vec![GridParam::C(0.0)],
            trials: 3,
            master_seed: 5,
            level_cap: None,
        };
        let res = threshold_sweep(&cfg).unwrap();
        assert!(res.rows.iter().all(|r| r.rel_hyperbolic == Some(true)));
        assert!(res.rows.iter().all(|r| r.order == Order::Infinite));
    }

    #[test]
    fn sweep_rejects_bad_configs() {
        let base = ExperimentConfig {
            ns: vec![10],
            grid: vec![GridParam::C(0.5)],
            trials: 1,
            master_seed: 0,
            level_cap: None,
        };
        let mut c = base.clone();
        c.trials = 0;
        assert!(threshold_sweep(&c).is_err());
        let mut c = base.clone();
        c.grid = vec![GridParam::C(4.0)]; // p = 4/sqrt(10) > 1
        assert!(threshold_sweep(&c).is_err());
        let mut c = base.clone();
        c.ns.clear();
        assert!(threshold_sweep(&c).is_err());
    }

    #[test]
    fn expected_dense_sets_basics() {
        // tiny p drives the expectation toward zero
        let near_zero = expected_dense_sets(1000, 1e-12).unwrap();
        assert!(near_zero < 1e-6, "{near_zero}");
        // monotone in p
        let n = 1_000_000usize;
        let p1 = 1.0 / (4.0 * ((n as f64) * (n as f64).ln()).sqrt());
        let lo = ln_expected_dense_sets(n, p1).unwrap();
        let hi = ln_expected_dense_sets(n, 2.0 * p1).unwrap();
        assert!(lo < hi);
        assert!(expected_dense_sets(n, p1).unwrap() < 1.0);
        // domain errors
        assert!(ln_expected_dense_sets(2, 0.5).is_err());
        assert!(ln_expected_dense_sets(100, 0.0).is_err());
        assert!(ln_expected_dense_sets(100, 1.0).is_err());
    }

    #[test]
    fn expected_dense_sets_decreasing_in_n_along_threshold_curve() {
        let mut prev = f64::INFINITY;
        for k in 3..=7 {
            let n = 10usize.pow(k);
            let p = 1.0 / (4.0 * ((n as f64) * (n as f64).ln()).sqrt());
            let v = ln_expected_dense_sets(n, p).unwrap();
            assert!(v < prev, "n=10^{k}: {v} !< {prev}");
            prev = v;
        }
    }

    #[test]
    fn dense_probe_finds_planted_k23() {
        // sparse ring on 40 vertices with K_{2,3} planted on {0,1} x {2,3,4}
        let mut edges: Vec<(usize, usize)> = (0..40).map(|i| (i, (i + 1) % 40)).collect();
        for u in [0usize, 1] {
            for v in [2usize, 3, 4] {
                edges.push((u.min(v), u.max(v)));
            }
        }
        let g = Graph::from_edge_list(40, &edges).unwrap();
        let report = dense_subset_probe(&g, 4, 8, 4, 11);
        let at5 = report.per_m.iter().find(|w| w.m == 5).unwrap();
        assert!(at5.edges >= 6, "found only {} edges at m=5", at5.edges);
        // reported edge counts are exact
        for w in &report.per_m {
            let vs = VertexSet::from_iter(40, w.vertices.iter().map(|&v| v as usize));
            assert_eq!(w.edges, g.induced_edge_count(&vs));
            assert_eq!(w.vertices.len(), w.m);
        }
    }

    #[test]
    fn dense_probe_empty_graph() {
        let g = Graph::from_edge_list(12, &[]).unwrap();
        let report = dense_subset_probe(&g, 3, 6, 2, 0);
        assert!(report.per_m.iter().all(|w| w.edges == 0));
        assert_eq!(report.best.as_ref().unwrap().m, 3); // least 2m penalty
    }

    #[test]
    fn dense_probe_range_clamping() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2)]).unwrap();
        let report = dense_subset_probe(&g, 4, 20, 1, 3);
        assert_eq!(report.per_m.len(), 2); // m in {4, 5}
        let report = dense_subset_probe(&g, 9, 20, 1, 3);
        assert!(report.per_m.is_empty());
        assert!(report.best.is_none());
    }
}
