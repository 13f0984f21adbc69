//! Square-component exploration process and the idealized branching
//! comparison.
//!
//! The exploration walks a square-graph component one active non-edge at
//! a time: selecting the oldest active pair x1y1 discovers Z, the
//! undiscovered common neighbors of x1 and y1, and activates every unseen
//! non-edge inside F ∪ Z (F is the pair with which x1y1 was squared). The
//! order-2 variant additionally scans for bridge pairs: disjoint pairs
//! {x2,x3}, {y2,y3} outside the discovered set which, minus the edge x1y1,
//! complete a K_{3,3}; both bridge pairs activate and partner each other.
//! The process stops LARGE when |R| + |A| exceeds the cap, EXTINCTION when
//! the queue drains.
//!
//! The matching idealized process is a Bienaymé–Galton–Watson branching
//! process with offspring X = C(Z+2, 2) - 1, Z ~ Binomial(n, λ²/n), whose
//! mean tends to λ⁴/2 + 2λ²; the order-2 variant adds a bridge term of
//! mean λ⁸/8 (sampled as Poisson, the limit of the vanishing-probability
//! binomial count).

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet, VecDeque};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution, Poisson};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, NonEdge};
use crate::numerics::derive_seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    LargeStop,
    ExtinctionStop,
}

#[derive(Clone, Debug)]
pub struct ExplorationOutcome {
    pub verdict: Verdict,
    /// Number of executed selection steps.
    pub steps: usize,
    /// Every non-edge that was ever active or reached, in activation order.
    pub pairs_seen: Vec<NonEdge>,
    /// |D| at termination.
    pub discovered: usize,
}

impl ExplorationOutcome {
    /// |A| + |R| at termination: pairs only ever move from A to R.
    pub fn active_plus_reached(&self) -> usize {
        self.pairs_seen.len()
    }
}

/// Step-by-step trace entry.
#[derive(Clone, Debug)]
pub struct StepRecord {
    pub t: usize,
    pub selected: NonEdge,
    pub partner: NonEdge,
    pub z: Vec<u32>,
    pub activated: Vec<NonEdge>,
    pub bridges: Vec<(NonEdge, NonEdge)>,
}

/// Default exploration cap ⌈(ln n)⁴⌉ (at least 2).
pub fn default_exploration_cap(n: usize) -> usize {
    let l = (n.max(1) as f64).ln();
    (l.powi(4).ceil() as usize).max(2)
}

pub fn explore_square_component(
    g: &Graph,
    seed_square: ((usize, usize), (usize, usize)),
    cap: usize,
) -> Result<ExplorationOutcome> {
    explore(g, seed_square, cap, false, None)
}

pub fn explore_square_component_traced(
    g: &Graph,
    seed_square: ((usize, usize), (usize, usize)),
    cap: usize,
) -> Result<(ExplorationOutcome, Vec<StepRecord>)> {
    let mut trace = Vec::new();
    let outcome = explore(g, seed_square, cap, false, Some(&mut trace))?;
    Ok((outcome, trace))
}

pub fn explore_order2(
    g: &Graph,
    seed_square: ((usize, usize), (usize, usize)),
    cap: usize,
) -> Result<ExplorationOutcome> {
    explore(g, seed_square, cap, true, None)
}

pub fn explore_order2_traced(
    g: &Graph,
    seed_square: ((usize, usize), (usize, usize)),
    cap: usize,
) -> Result<(ExplorationOutcome, Vec<StepRecord>)> {
    let mut trace = Vec::new();
    let outcome = explore(g, seed_square, cap, true, Some(&mut trace))?;
    Ok((outcome, trace))
}

fn explore(
    g: &Graph,
    seed_square: ((usize, usize), (usize, usize)),
    cap: usize,
    order2: bool,
    mut trace: Option<&mut Vec<StepRecord>>,
) -> Result<ExplorationOutcome> {
    let f = NonEdge::new(g, seed_square.0 .0, seed_square.0 .1)?;
    let d = NonEdge::new(g, seed_square.1 .0, seed_square.1 .1)?;
    let (a1, c1) = f.endpoints();
    let (b1, e1) = d.endpoints();
    let induced = a1 != b1
        && a1 != e1
        && c1 != b1
        && c1 != e1
        && g.has_edge(a1, b1)
        && g.has_edge(a1, e1)
        && g.has_edge(c1, b1)
        && g.has_edge(c1, e1);
    if !induced {
        return Err(Error::NotASquare {
            a: format!("({}, {})", f.u, f.v),
            b: format!("({}, {})", d.u, d.v),
        });
    }
    debug_assert!(cap >= 2, "exploration cap must admit the two seed diagonals");

    let n = g.n();
    let mut discovered = vec![false; n];
    for v in [a1, c1, b1, e1] {
        discovered[v] = true;
    }
    let mut discovered_count = 4;

    // Queue entries: (pair, partner). `seen` holds every pair ever queued,
    // so |A| + |R| = seen.len() and nothing re-enters.
    let mut queue: VecDeque<(NonEdge, NonEdge)> = VecDeque::new();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut order_seen: Vec<NonEdge> = Vec::new();
    let (first, second) = if f < d { (f, d) } else { (d, f) };
    for (pair, partner) in [(first, second), (second, first)] {
        queue.push_back((pair, partner));
        seen.insert(pair.key(n));
        order_seen.push(pair);
    }
    let mut reached = 0usize;
    let mut steps = 0usize;

    loop {
        // Step 1: size test.
        if reached + queue.len() > cap {
            return Ok(ExplorationOutcome {
                verdict: Verdict::LargeStop,
                steps,
                pairs_seen: order_seen,
                discovered: discovered_count,
            });
        }
        // Step 2: extinction test.
        let Some((sel, partner)) = queue.pop_front() else {
            return Ok(ExplorationOutcome {
                verdict: Verdict::ExtinctionStop,
                steps,
                pairs_seen: order_seen,
                discovered: discovered_count,
            });
        };
        // Step 3: discover the pair's undiscovered common neighborhood and
        // activate the fresh non-edges it spans with the partner pair.
        steps += 1;
        let (x1, y1) = sel.endpoints();
        debug_assert!({
            let (pa, pb) = partner.endpoints();
            g.has_edge(x1, pa) && g.has_edge(x1, pb) && g.has_edge(y1, pa) && g.has_edge(y1, pb)
        });
        let z: Vec<u32> = g
            .common_neighbors_sorted(x1, y1)
            .into_iter()
            .filter(|&w| !discovered[w as usize])
            .collect();

        let mut bridges: Vec<(NonEdge, NonEdge)> = Vec::new();
        if order2 {
            bridges = bridge_pairs(g, x1, y1, &discovered, &z);
        }

        for &w in &z {
            discovered[w as usize] = true;
        }
        discovered_count += z.len();

        let mut pool: Vec<u32> = Vec::with_capacity(z.len() + 2);
        pool.push(partner.u);
        pool.push(partner.v);
        pool.extend_from_slice(&z);
        pool.sort_unstable();
        let mut activated = Vec::new();
        for (i, &u) in pool.iter().enumerate() {
            for &v in &pool[i + 1..] {
                if u == v || g.has_edge(u as usize, v as usize) {
                    continue;
                }
                let pair = NonEdge::new_unchecked(u, v);
                if seen.insert(pair.key(n)) {
                    queue.push_back((pair, sel));
                    order_seen.push(pair);
                    activated.push(pair);
                }
            }
        }
        for &(bx, by) in &bridges {
            // Each bridge pair partners the other; if one was already seen
            // it still serves as the recorded square mate of the new one.
            for (pair, mate) in [(bx, by), (by, bx)] {
                if seen.insert(pair.key(n)) {
                    queue.push_back((pair, mate));
                    order_seen.push(pair);
                    activated.push(pair);
                }
            }
        }
        reached += 1;
        if let Some(t) = trace.as_deref_mut() {
            t.push(StepRecord { t: steps, selected: sel, partner, z, activated, bridges });
        }
    }
}

/// Bridge-pair scan for the order-2 variant: unordered pairs {x2,x3} of
/// non-adjacent neighbors of y1 and {y2,y3} of non-adjacent neighbors of
/// x1, all outside D ∪ Z, with the four cross edges present (the remaining
/// four of the eight required edges are the membership conditions). Output
/// is canonically ordered and deduplicated.
fn bridge_pairs(
    g: &Graph,
    x1: usize,
    y1: usize,
    discovered: &[bool],
    z: &[u32],
) -> Vec<(NonEdge, NonEdge)> {
    let excluded = |w: u32| discovered[w as usize] || z.binary_search(&w).is_ok();
    let x_cands: Vec<u32> =
        g.neighbors(y1).iter().copied().filter(|&w| !excluded(w)).collect();
    if x_cands.len() < 2 {
        return Vec::new();
    }
    // Bucket x-candidates by each non-adjacent pair {y2,y3} they both see
    // inside the x1-neighborhood.
    let mut buckets: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
    for &x in &x_cands {
        let ys: Vec<u32> = g
            .common_neighbors_sorted(x as usize, x1)
            .into_iter()
            .filter(|&w| !excluded(w) && w as usize != y1)
            .collect();
        for (i, &y2) in ys.iter().enumerate() {
            for &y3 in &ys[i + 1..] {
                if g.has_edge(y2 as usize, y3 as usize) {
                    continue;
                }
                match buckets.entry((y2, y3)) {
                    Entry::Occupied(mut e) => e.get_mut().push(x),
                    Entry::Vacant(e) => {
                        e.insert(vec![x]);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for ((y2, y3), xs) in buckets {
        for (i, &x2) in xs.iter().enumerate() {
            for &x3 in &xs[i + 1..] {
                if !g.has_edge(x2 as usize, x3 as usize) {
                    out.push((
                        NonEdge::new_unchecked(x2.min(x3), x2.max(x3)),
                        NonEdge::new_unchecked(y2, y3),
                    ));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Idealized offspring law: p = λ/√n, Z ~ Binomial(n, λ²/n),
/// X = C(Z+2,2) − 1, plus a Poisson(λ⁸/8) bridge term when modified.
#[derive(Clone, Copy, Debug)]
pub struct OffspringModel {
    pub lambda: f64,
    pub n: u64,
    pub modified: bool,
}

impl OffspringModel {
    pub fn new(lambda: f64, n: u64, modified: bool) -> OffspringModel {
        OffspringModel { lambda, n, modified }
    }
}

/// Limiting offspring mean λ⁴/2 + 2λ², plus λ⁸/8 when modified.
pub fn offspring_mean(model: &OffspringModel) -> f64 {
    let l2 = model.lambda * model.lambda;
    let l4 = l2 * l2;
    let base = l4 / 2.0 + 2.0 * l2;
    if model.modified { base + l4 * l4 / 8.0 } else { base }
}

/// Root of offspring_mean(λ) = 1 by bisection on [0, 2] to 1e-12.
pub fn critical_lambda(modified: bool) -> f64 {
    let mean = |lambda: f64| {
        offspring_mean(&OffspringModel { lambda, n: 0, modified }) - 1.0
    };
    let (mut lo, mut hi) = (0.0f64, 2.0f64);
    debug_assert!(mean(lo) < 0.0 && mean(hi) > 0.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if mean(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// One draw from the offspring law.
pub fn sample_offspring(model: &OffspringModel, rng: &mut ChaCha8Rng) -> u64 {
    let p2 = (model.lambda * model.lambda / model.n as f64).min(1.0);
    let z = Binomial::new(model.n, p2).expect("probability in range").sample(rng);
    let mut x = (z + 2) * (z + 1) / 2 - 1;
    if model.modified {
        let bridge_mean = offspring_mean(model)
            - offspring_mean(&OffspringModel { modified: false, ..*model });
        if bridge_mean > 0.0 {
            x += Poisson::new(bridge_mean).expect("positive mean").sample(rng) as u64;
        }
    }
    x
}

/// Monte Carlo mean of the offspring law with its standard error.
pub fn offspring_mean_empirical(model: &OffspringModel, samples: u64, seed: u64) -> (f64, f64) {
    const CHUNK: u64 = 1 << 14;
    let chunks = samples.div_ceil(CHUNK);
    let (sum, sum_sq) = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[c]));
            let lo = c * CHUNK;
            let hi = samples.min(lo + CHUNK);
            let mut s = 0.0f64;
            let mut s2 = 0.0f64;
            for _ in lo..hi {
                let x = sample_offspring(model, &mut rng) as f64;
                s += x;
                s2 += x * x;
            }
            (s, s2)
        })
        .reduce(|| (0.0, 0.0), |a, b| (a.0 + b.0, a.1 + b.1));
    let mean = sum / samples as f64;
    let var = (sum_sq / samples as f64 - mean * mean).max(0.0);
    (mean, (var / samples as f64).sqrt())
}

#[derive(Clone, Copy, Debug)]
pub struct BgwReport {
    pub trials: u64,
    pub survived: u64,
    pub survival: f64,
    pub std_error: f64,
}

/// Runs the branching process `trials` times from a single ancestor.
/// A trial survives if the population is positive at the generation cap
/// (reaching the population cap counts as survival and stops early).
pub fn bgw_simulate(
    model: &OffspringModel,
    generations_cap: u32,
    population_cap: u64,
    trials: u64,
    seed: u64,
) -> BgwReport {
    let survived = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[trial]));
            let mut pop = 1u64;
            for _ in 0..generations_cap {
                let mut next = 0u64;
                for _ in 0..pop {
                    next += sample_offspring(model, &mut rng);
                    if next >= population_cap {
                        return 1u64;
                    }
                }
                pop = next;
                if pop == 0 {
                    return 0u64;
                }
            }
            1u64
        })
        .sum::<u64>();
    let survival = survived as f64 / trials as f64;
    let std_error = (survival * (1.0 - survival) / trials as f64).sqrt();
    BgwReport { trials, survived, survival, std_error }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k23() -> Graph {
        Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn c4_extinction() {
        let out = explore_square_component(&c4(), ((0, 2), (1, 3)), 100).unwrap();
        assert_eq!(out.verdict, Verdict::ExtinctionStop);
        assert_eq!(out.steps, 2);
        assert_eq!(out.active_plus_reached(), 2);
        assert_eq!(out.discovered, 4);
    }

    #[test]
    fn k23_extinction_with_four_pairs() {
        // Seed on the square spanned by the 2-side and two of the 3-side.
        let out = explore_square_component(&k23(), ((0, 1), (2, 3)), 100).unwrap();
        assert_eq!(out.verdict, Verdict::ExtinctionStop);
        assert_eq!(out.active_plus_reached(), 4);
        assert_eq!(out.discovered, 5);
        let mut pairs = out.pairs_seen.clone();
        pairs.sort_unstable();
        let expect: Vec<NonEdge> = [(0, 1), (2, 3), (2, 4), (3, 4)]
            .iter()
            .map(|&(u, v)| NonEdge::new_unchecked(u, v))
            .collect();
        assert_eq!(pairs, expect);
    }

    #[test]
    fn seed_validation() {
        assert!(matches!(
            explore_square_component(&c4(), ((0, 1), (2, 3)), 100),
            Err(Error::NotANonEdge { .. })
        ));
        // Two disjoint non-edges that do not span a square.
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            explore_square_component(&g, ((0, 2), (1, 3)), 100),
            Err(Error::NotASquare { .. })
        ));
    }

    #[test]
    fn large_stop_at_cap() {
        // K_{2,6}: the seed square's component has 1 + C(6,2) non-edges;
        // a tiny cap triggers LARGE_STOP on the first size test that fails.
        let edges: Vec<_> = (0..2).flat_map(|u| (2..8).map(move |v| (u, v))).collect();
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let out = explore_square_component(&g, ((0, 1), (2, 3)), 3).unwrap();
        assert_eq!(out.verdict, Verdict::LargeStop);
        assert!(out.active_plus_reached() > 3);
        let full = explore_square_component(&g, ((0, 1), (2, 3)), 100).unwrap();
        assert_eq!(full.verdict, Verdict::ExtinctionStop);
        assert_eq!(full.active_plus_reached(), 16);
    }

    #[test]
    fn trace_partners_are_squares() {
        let (_, trace) = explore_square_component_traced(&k23(), ((0, 1), (2, 3)), 100).unwrap();
        let g = k23();
        for rec in &trace {
            let (x1, y1) = rec.selected.endpoints();
            let (a, b) = rec.partner.endpoints();
            assert!(g.has_edge(x1, a) && g.has_edge(x1, b));
            assert!(g.has_edge(y1, a) && g.has_edge(y1, b));
        }
        // First step both processes the seed and activates the 3-side pairs.
        assert_eq!(trace[0].z, vec![4]);
        assert_eq!(trace[0].activated.len(), 2);
    }

    #[test]
    fn order2_equals_order1_without_bridges() {
        for (g, seed) in [(c4(), ((0, 2), (1, 3))), (k23(), ((0, 1), (2, 3)))] {
            let a = explore_square_component(&g, seed, 100).unwrap();
            let b = explore_order2(&g, seed, 100).unwrap();
            assert_eq!(a.verdict, b.verdict);
            assert_eq!(a.pairs_seen, b.pairs_seen);
            assert_eq!(a.discovered, b.discovered);
        }
    }

    #[test]
    fn planted_bridge_is_found() {
        // K_{3,3} minus the edge (0,3), plus helper vertices 6,7 adjacent
        // to 0 and 3 so the missing edge sits in a seed square.
        let mut edges = Vec::new();
        for x in [0, 1, 2] {
            for y in [3, 4, 5] {
                if (x, y) != (0, 3) {
                    edges.push((x, y));
                }
            }
        }
        edges.extend([(6, 0), (6, 3), (7, 0), (7, 3)]);
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let (out, trace) = explore_order2_traced(&g, ((0, 3), (6, 7)), 100).unwrap();
        let step1 = &trace[0];
        assert_eq!(step1.selected, NonEdge::new_unchecked(0, 3));
        assert_eq!(
            step1.bridges,
            vec![(NonEdge::new_unchecked(1, 2), NonEdge::new_unchecked(4, 5))]
        );
        assert!(out.pairs_seen.contains(&NonEdge::new_unchecked(1, 2)));
        assert!(out.pairs_seen.contains(&NonEdge::new_unchecked(4, 5)));
        // The order-1 process on the same seed never reaches the far side.
        let base = explore_square_component(&g, ((0, 3), (6, 7)), 100).unwrap();
        assert!(!base.pairs_seen.contains(&NonEdge::new_unchecked(1, 2)));
    }

    #[test]
    fn offspring_mean_fixtures() {
        assert_eq!(offspring_mean(&OffspringModel::new(0.0, 10, false)), 0.0);
        let l1 = (6f64.sqrt() - 2.0).sqrt();
        let m = offspring_mean(&OffspringModel::new(l1, 10, false));
        assert!((m - 1.0).abs() < 1e-12, "mean at the critical point: {m}");
        let mm = offspring_mean(&OffspringModel::new(l1, 10, true));
        let expect = 1.0 + (6f64.sqrt() - 2.0).powi(4) / 8.0;
        assert!((mm - expect).abs() < 1e-12);
        assert!((mm - 1.00510).abs() < 5e-5);
    }

    #[test]
    fn critical_lambda_fixtures() {
        let l1 = critical_lambda(false);
        assert!((l1 - (6f64.sqrt() - 2.0).sqrt()).abs() < 1e-9);
        let l2 = critical_lambda(true);
        assert!(l2 < l1);
        assert!((l2 - 0.66892).abs() < 5e-5);
        let m = offspring_mean(&OffspringModel::new(l2, 10, true));
        assert!((m - 1.0).abs() < 1e-11);
    }

    #[test]
    fn default_cap_value() {
        // (ln 100)^4 = 449.3..., so the cap rounds up to 450.
        assert_eq!(default_exploration_cap(100), 450);
        assert_eq!(default_exploration_cap(1), 2);
    }

    #[test]
    fn bgw_dies_at_lambda_zero() {
        let report = bgw_simulate(&OffspringModel::new(0.0, 1000, false), 50, 10_000, 200, 1);
        assert_eq!(report.survived, 0);
        assert_eq!(report.survival, 0.0);
    }

    #[test]
    fn bgw_deterministic_per_seed() {
        let model = OffspringModel::new(0.7, 100_000, false);
        let a = bgw_simulate(&model, 30, 1000, 500, 42);
        let b = bgw_simulate(&model, 30, 1000, 500, 42);
        assert_eq!(a.survived, b.survived);
        let c = bgw_simulate(&model, 30, 1000, 500, 43);
        // Different seed may differ; only check it still runs sanely.
        assert!(c.survival >= 0.0 && c.survival <= 1.0);
    }

    #[test]
    fn empirical_offspring_mean_matches_formula() {
        let model = OffspringModel::new(0.7, 100_000, false);
        let (mean, se) = offspring_mean_empirical(&model, 200_000, 9);
        let expect = offspring_mean(&model);
        assert!(
            (mean - expect).abs() < 4.0 * se,
            "empirical {mean} vs formula {expect} (se {se})"
        );
    }
}
