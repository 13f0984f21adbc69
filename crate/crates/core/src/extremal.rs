//! Extremal families, non-edge gluing, and the edge-bound scan.
//!
//! A thick graph on m vertices has at least 2m-4 edges; the bound is sharp
//! for the complete bipartite graphs K_{2,m-2}, for paths of squares, and
//! for graphs glued from extremal pieces along non-edges. The scan
//! enumerates every labeled graph at small m, confirms that nothing below
//! the bound is thick, and catalogues the graphs meeting it exactly.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{pair_rank, Graph, NonEdge};
use crate::graph6::emit_graph6;
use crate::numerics::derive_seed;
use crate::thickness::{is_thick_order0, thickness_order, Order};
use crate::vertexset::VertexSet;

/// Path of squares on m vertices (m even, >= 4): vertex x belongs to group
/// x mod m/2, each group {i, i + m/2} is a diagonal pair, and u ~ v exactly
/// when their groups are consecutive. Always has exactly 2m-4 edges; m=4
/// gives the 4-cycle 0-1-2-3 and 0..m/2 is always an induced path.
pub fn path_of_squares(m: usize) -> Result<Graph> {
    if m < 4 || m % 2 != 0 {
        return Err(Error::BadParameter(format!(
            "path of squares needs an even vertex count >= 4, got {m}"
        )));
    }
    let h = m / 2;
    let mut edges = Vec::with_capacity(2 * m - 4);
    for u in 0..m {
        for v in u + 1..m {
            if (u % h).abs_diff(v % h) == 1 {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edge_list(m, &edges)?;
    debug_assert_eq!(g.edge_count(), 2 * m - 4);
    Ok(g)
}

/// K_{a,b} with part A = 0..a and part B = a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edge_list(a + b, &edges).expect("bipartite edge list is valid")
}

/// Which endpoint of the second non-edge lands on which endpoint of the
/// first when gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlueOrientation {
    LowerToLower,
    LowerToUpper,
}

/// Identifies a non-edge of g2 onto a non-edge of g1: the result has
/// m1 + m2 - 2 vertices (g1's labels are kept; g2's remaining vertices
/// follow in ascending order) and e1 + e2 edges — glued edges cannot
/// collide because both identified pairs are non-edges.
pub fn glue_along_nonedges(
    g1: &Graph,
    f1: (usize, usize),
    g2: &Graph,
    f2: (usize, usize),
    orient: GlueOrientation,
) -> Result<Graph> {
    let f1 = NonEdge::new(g1, f1.0, f1.1)?;
    let f2 = NonEdge::new(g2, f2.0, f2.1)?;
    let (m1, m2) = (g1.n(), g2.n());
    let mut map = vec![usize::MAX; m2];
    match orient {
        GlueOrientation::LowerToLower => {
            map[f2.u as usize] = f1.u as usize;
            map[f2.v as usize] = f1.v as usize;
        }
        GlueOrientation::LowerToUpper => {
            map[f2.u as usize] = f1.v as usize;
            map[f2.v as usize] = f1.u as usize;
        }
    }
    let mut next = m1;
    for slot in map.iter_mut().take(m2) {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = g1.edges();
    edges.extend(g2.edges().iter().map(|&(u, v)| (map[u], map[v])));
    let glued = Graph::from_edge_list(m1 + m2 - 2, &edges)?;
    debug_assert_eq!(glued.edge_count(), g1.edge_count() + g2.edge_count());
    Ok(glued)
}

/// Graph on m vertices whose edges are the set bits of `bits`, indexed by
/// the lexicographic pair rank.
pub fn graph_from_edge_bits(m: usize, bits: u64) -> Graph {
    let mut edges = Vec::with_capacity(bits.count_ones() as usize);
    let mut rank = 0;
    for u in 0..m {
        for v in u + 1..m {
            if bits >> rank & 1 == 1 {
                edges.push((u, v));
            }
            rank += 1;
        }
    }
    Graph::from_edge_list(m, &edges).expect("edge bits index valid pairs")
}

fn edge_bits_of(g: &Graph) -> u64 {
    let mut bits = 0u64;
    for (u, v) in g.edges() {
        bits |= 1 << pair_rank(g.n(), u, v);
    }
    bits
}

/// Smallest edge-bit encoding over all vertex relabelings; usable as an
/// isomorphism key for m <= 8.
fn canonical_edge_bits(m: usize, bits: u64) -> Result<u64> {
    if m > 8 {
        return Err(Error::TooLarge { n: m, limit: 8, what: "canonical form" });
    }
    let pairs: Vec<(usize, usize)> =
        (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |perm| {
        let mut relabeled = 0u64;
        for (rank, &(u, v)) in pairs.iter().enumerate() {
            if bits >> rank & 1 == 1 {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                relabeled |= 1 << pair_rank(m, a, b);
            }
        }
        best = best.min(relabeled);
    });
    Ok(best)
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// graph6 of the canonical relabeling; equal strings iff isomorphic.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    let bits = canonical_edge_bits(g.n(), edge_bits_of(g))?;
    emit_graph6(&graph_from_edge_bits(g.n(), bits))
}

#[derive(Clone, Copy, Debug)]
pub enum ScanMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalScanReport {
    pub m: usize,
    pub graphs_scanned: u64,
    pub thick_count: u64,
    pub min_edges_among_thick: Option<usize>,
    /// Canonical graph6 of every thick graph met with exactly 2m-4 edges.
    pub extremal_witnesses: Vec<String>,
    /// graph6 of any graph violating the edge bound (thick with fewer than
    /// 2m-4 edges) or the order-0 join bound e >= a(m-a). Must stay empty.
    pub violations: Vec<String>,
}

pub const EXHAUSTIVE_SCAN_MAX_M: usize = 7;

#[derive(Default)]
struct Partial {
    scanned: u64,
    thick: u64,
    min_edges: Option<usize>,
    witness_bits: BTreeSet<u64>,
    violations: Vec<String>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.scanned += other.scanned;
        self.thick += other.thick;
        self.min_edges = match (self.min_edges, other.min_edges) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.witness_bits.extend(other.witness_bits);
        self.violations.extend(other.violations);
        self
    }

    fn absorb(&mut self, m: usize, g: &Graph, bits: u64) {
        self.scanned += 1;
        let bound = 2 * m - 4;
        let e = g.edge_count();
        let report = thickness_order(g);
        if let Order::Finite(k) = report.order {
            self.thick += 1;
            self.min_edges = Some(self.min_edges.map_or(e, |cur| cur.min(e)));
            if e < bound {
                self.violations.push(emit_graph6(g).expect("scan sizes fit graph6"));
            } else if e == bound {
                let canon = canonical_edge_bits(m, bits).expect("scan m is small");
                self.witness_bits.insert(canon);
            }
            if k == 0 {
                // The join bound: an order-0 graph splits as A * B, so it
                // carries at least |A|(m-|A|) >= 2(m-2) edges.
                let (a, _) = is_thick_order0(g, &VertexSet::full(m))
                    .expect("order 0 implies a join witness");
                let a = a.len();
                if e < a * (m - a) || a * (m - a) < 2 * (m - 2) {
                    self.violations.push(emit_graph6(g).expect("scan sizes fit graph6"));
                }
            }
        }
    }
}

/// Scans graphs on m labeled vertices for violations of the extremal edge
/// bound. Exhaustive mode covers all 2^C(m,2) labeled graphs (m <= 7);
/// sampled mode draws uniform labeled graphs from a seeded generator.
pub fn extremal_scan(m: usize, mode: ScanMode) -> Result<ExtremalScanReport> {
    if m < 4 {
        return Err(Error::BadParameter(format!("extremal scan needs m >= 4, got {m}")));
    }
    let pair_count = m * (m - 1) / 2;
    let partial = match mode {
        ScanMode::Exhaustive => {
            if m > EXHAUSTIVE_SCAN_MAX_M {
                return Err(Error::TooLarge {
                    n: m,
                    limit: EXHAUSTIVE_SCAN_MAX_M,
                    what: "exhaustive extremal scan",
                });
            }
            let total = 1u64 << pair_count;
            const CHUNK: u64 = 1 << 12;
            (0..total.div_ceil(CHUNK))
                .into_par_iter()
                .map(|chunk| {
                    let mut part = Partial::default();
                    let lo = chunk * CHUNK;
                    for bits in lo..total.min(lo + CHUNK) {
                        let g = graph_from_edge_bits(m, bits);
                        part.absorb(m, &g, bits);
                    }
                    part
                })
                .reduce(Partial::default, Partial::merge)
        }
        ScanMode::Sampled { samples, seed } => {
            let mut part = Partial::default();
            for i in 0..samples {
                let mut rng =
                    ChaCha8Rng::seed_from_u64(derive_seed(seed, &[m as u64, i]));
                let bits = rng.gen::<u64>() & ((1u64 << pair_count) - 1);
                let g = graph_from_edge_bits(m, bits);
                part.absorb(m, &g, bits);
            }
            part
        }
    };
    let mut witnesses: Vec<String> = partial
        .witness_bits
        .iter()
        .map(|&bits| emit_graph6(&graph_from_edge_bits(m, bits)).expect("small graphs"))
        .collect();
    witnesses.sort();
    let mut violations = partial.violations;
    violations.sort();
    violations.dedup();
    Ok(ExtremalScanReport {
        m,
        graphs_scanned: partial.scanned,
        thick_count: partial.thick,
        min_edges_among_thick: partial.min_edges,
        extremal_witnesses: witnesses,
        violations,
    })
}
