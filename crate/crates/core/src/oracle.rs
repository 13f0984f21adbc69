//! Hypergraph index oracle.
//!
//! Small-scale ground truth for the thickness engine, computed along an
//! entirely different route: enumerate every vertex subset, collect the
//! maximal join-of-two-non-cliques subsets and the maximal strips
//! (non-edge plus a clique inside its suspension), then repeatedly merge
//! hyperedges whose pairwise intersections contain a non-edge and replace
//! each merge class by its union. The index is the first level at which
//! the full vertex set appears; it is INFINITE when there is no
//! order-0 subset at all or when the hyperedge family stops changing.
//!
//! Everything here works on `u32` bitmasks and deliberately shares no
//! component code with the engine, so agreement between the two is
//! meaningful evidence.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::thickness::Order;
use crate::vertexset::VertexSet;

/// Default vertex-count guard for the oracle.
pub const ORACLE_MAX_N: usize = 16;

/// Hard representation limit: hyperedges are u32 bitmasks.
const MASK_MAX_N: usize = 31;

/// Whether a strip's clique part may be empty (a bare non-edge).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripRule {
    NonEmptyClique,
    AllowEmptyClique,
}

fn guard(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MASK_MAX_N);
    if n > limit {
        return Err(Error::TooLarge { n, limit, what: "hypergraph oracle" });
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// True iff the subgraph induced by `s` is a join of two non-cliques:
/// the complement of g[s] must have two components that each contain a
/// complement edge. Flood fill over complement adjacency, mask arithmetic
/// only.
fn is_thick0_mask(adj: &[u32], s: u32) -> bool {
    if (s.count_ones() as usize) < 4 {
        return false;
    }
    let mut remaining = s;
    let mut edge_comps = 0;
    while remaining != 0 {
        let v = remaining.trailing_zeros();
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        remaining &= !comp;
        while frontier != 0 {
            let x = frontier.trailing_zeros();
            frontier &= frontier - 1;
            let grow = remaining & !adj[x as usize];
            comp |= grow;
            remaining &= !grow;
            frontier |= grow;
        }
        if comp.count_ones() >= 2 {
            edge_comps += 1;
            if edge_comps == 2 {
                return true;
            }
        }
    }
    false
}

/// True iff some pair of vertices in `mask` is non-adjacent.
fn mask_contains_nonedge(adj: &[u32], mask: u32) -> bool {
    let mut it = mask;
    while it != 0 {
        let v = it.trailing_zeros();
        it &= it - 1;
        // Only look above v so each pair is tested once.
        if mask & !adj[v as usize] & !((2u32 << v) - 1) != 0 {
            return true;
        }
    }
    false
}

/// Keeps the inclusion-maximal masks of the input.
fn maximal_masks(mut masks: Vec<u32>) -> Vec<u32> {
    masks.sort_unstable();
    masks.dedup();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut kept: Vec<u32> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&k| k & m == m && k != m) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

fn masks_to_sets(n: usize, masks: &[u32]) -> Vec<VertexSet> {
    masks
        .iter()
        .map(|&m| VertexSet::from_iter(n, (0..n).filter(|&v| m >> v & 1 == 1)))
        .collect()
}

fn order0_masks(adj: &[u32], all_not_maximal: bool) -> Vec<u32> {
    let n = adj.len();
    let mut found = Vec::new();
    for s in 0..1u64 << n {
        let s = s as u32;
        if (s.count_ones() as usize) >= 4 && is_thick0_mask(adj, s) {
            found.push(s);
        }
    }
    if all_not_maximal {
        found
    } else {
        maximal_masks(found)
    }
}

/// Bron-Kerbosch with pivoting; pushes every maximal nonempty clique of
/// the subgraph induced by the initial `p`.
fn maximal_cliques(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 && x == 0 {
        if r != 0 {
            out.push(r);
        }
        return;
    }
    let mut pivot = 0;
    let mut best = u32::MAX;
    let mut it = p | x;
    while it != 0 {
        let u = it.trailing_zeros();
        it &= it - 1;
        let missed = (p & !adj[u as usize]).count_ones();
        if best == u32::MAX || missed < best {
            best = missed;
            pivot = u;
        }
    }
    let mut cand = p & !adj[pivot as usize];
    while cand != 0 {
        let v = cand.trailing_zeros();
        cand &= cand - 1;
        let bit = 1u32 << v;
        maximal_cliques(adj, r | bit, p & adj[v as usize], x & adj[v as usize], out);
        p &= !bit;
        x |= bit;
    }
}

/// All nonempty cliques (not only maximal) inside mask `p`.
fn all_cliques(adj: &[u32], p: u32) -> Vec<u32> {
    let verts: Vec<u32> = {
        let mut v = Vec::new();
        let mut it = p;
        while it != 0 {
            v.push(it.trailing_zeros());
            it &= it - 1;
        }
        v
    };
    let mut out = Vec::new();
    for mask in 1u32..1 << verts.len() {
        let mut clique = 0u32;
        for (i, &v) in verts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                clique |= 1 << v;
            }
        }
        let ok = {
            let mut it = clique;
            let mut ok = true;
            while it != 0 {
                let v = it.trailing_zeros();
                it &= it - 1;
                if clique & !adj[v as usize] & !(1 << v) != 0 {
                    ok = false;
                    break;
                }
            }
            ok
        };
        if ok {
            out.push(clique);
        }
    }
    out
}

fn strip_masks(g: &Graph, adj: &[u32], rule: StripRule, all_not_maximal: bool) -> Vec<u32> {
    let mut candidates = Vec::new();
    for f in g.non_edges_iter() {
        let fmask = 1u32 << f.u | 1 << f.v;
        let susp = adj[f.u as usize] & adj[f.v as usize];
        if rule == StripRule::AllowEmptyClique {
            candidates.push(fmask);
        }
        let mut cliques = Vec::new();
        if all_not_maximal {
            cliques = all_cliques(adj, susp);
        } else if susp != 0 {
            maximal_cliques(adj, 0, susp, 0, &mut cliques);
        }
        for k in cliques {
            debug_assert!(k & fmask == 0);
            debug_assert!({
                // Structural strip shape: clique part fully joined to f.
                let mut ok = true;
                let mut it = k;
                while it != 0 {
                    let w = it.trailing_zeros();
                    it &= it - 1;
                    ok &= adj[w as usize] & fmask == fmask;
                }
                ok
            });
            candidates.push(fmask | k);
        }
    }
    if all_not_maximal {
        candidates.sort_unstable();
        candidates.dedup();
        candidates
    } else {
        maximal_masks(candidates)
    }
}

/// All inclusion-maximal subsets inducing a join of two non-cliques.
pub fn maximal_order0_subsets(g: &Graph) -> Result<Vec<VertexSet>> {
    guard(g.n(), ORACLE_MAX_N)?;
    let adj = adjacency_masks(g);
    Ok(masks_to_sets(g.n(), &order0_masks(&adj, false)))
}

/// All inclusion-maximal strips f ∪ K (non-edge f, clique K inside the
/// suspension of f, K nonempty under the default rule).
pub fn maximal_strips(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_strips_with_rule(g, StripRule::NonEmptyClique)
}

pub fn maximal_strips_with_rule(g: &Graph, rule: StripRule) -> Result<Vec<VertexSet>> {
    guard(g.n(), ORACLE_MAX_N)?;
    let adj = adjacency_masks(g);
    Ok(masks_to_sets(g.n(), &strip_masks(g, &adj, rule, false)))
}

/// Hypergraph index with the default guard and strip rule.
pub fn hypergraph_index(g: &Graph) -> Result<Order> {
    hypergraph_index_with(g, ORACLE_MAX_N, StripRule::NonEmptyClique)
}

/// Hypergraph index with an explicit vertex-count guard (hard cap 31).
pub fn hypergraph_index_with_limit(g: &Graph, limit: usize) -> Result<Order> {
    hypergraph_index_with(g, limit, StripRule::NonEmptyClique)
}

pub fn hypergraph_index_with(g: &Graph, limit: usize, rule: StripRule) -> Result<Order> {
    guard(g.n(), limit)?;
    let adj = adjacency_masks(g);
    let order0 = order0_masks(&adj, false);
    if order0.is_empty() {
        // No thick order-0 subset anywhere: infinite regardless of strips.
        return Ok(Order::Infinite);
    }
    let mut level = order0;
    level.extend(strip_masks(g, &adj, rule, false));
    level.sort_unstable();
    level.dedup();
    Ok(run_levels(g.n(), &adj, level))
}

/// Same construction but seeded with every (not only maximal) order-0
/// subset and strip; exists to verify that absorption of sub-hyperedges
/// does not change the index.
pub fn hypergraph_index_all_hyperedges(g: &Graph) -> Result<Order> {
    guard(g.n(), ORACLE_MAX_N)?;
    let adj = adjacency_masks(g);
    let order0 = order0_masks(&adj, true);
    if order0.is_empty() {
        return Ok(Order::Infinite);
    }
    let mut level = order0;
    level.extend(strip_masks(g, &adj, StripRule::NonEmptyClique, true));
    level.sort_unstable();
    level.dedup();
    Ok(run_levels(g.n(), &adj, level))
}

fn run_levels(n: usize, adj: &[u32], mut level: Vec<u32>) -> Order {
    let full: u32 = if n == 0 { 0 } else { (1u64 << n) as u32 - 1 };
    for idx in 0u32.. {
        if level.contains(&full) {
            return Order::Finite(idx);
        }
        // Merge classes: hyperedges are related when their intersection
        // contains a non-edge; union-find closes chains.
        let mut uf = crate::unionfind::UnionFind::new(level.len());
        for i in 0..level.len() {
            for j in i + 1..level.len() {
                if mask_contains_nonedge(adj, level[i] & level[j]) {
                    uf.union(i as u32, j as u32);
                }
            }
        }
        let mut next: Vec<u32> = uf
            .sets()
            .into_iter()
            .map(|cls| cls.into_iter().fold(0u32, |m, i| m | level[i as usize]))
            .collect();
        next.sort_unstable();
        next.dedup();
        if next == level {
            return Order::Infinite;
        }
        level = next;
    }
    unreachable!("level loop either stabilizes or reaches the full set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_edge_list(a + b, &edges).unwrap()
    }

    fn path_of_squares(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if v / 2 == u / 2 + 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn sets_as_vecs(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn maximal_order0_examples() {
        assert_eq!(sets_as_vecs(&maximal_order0_subsets(&c4()).unwrap()), vec![vec![0, 1, 2, 3]]);
        assert!(maximal_order0_subsets(&complete(5)).unwrap().is_empty());
        // 8-vertex path of squares: two maximal windows of three groups.
        let got = sets_as_vecs(&maximal_order0_subsets(&path_of_squares(8)).unwrap());
        assert_eq!(got, vec![vec![0, 1, 2, 3, 4, 5], vec![2, 3, 4, 5, 6, 7]]);
    }

    #[test]
    fn maximal_strips_examples() {
        let got = sets_as_vecs(&maximal_strips(&c4()).unwrap());
        assert_eq!(got, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        let cherry = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(sets_as_vecs(&maximal_strips(&cherry).unwrap()), vec![vec![0, 1, 2]]);
        assert!(maximal_strips(&complete(4)).unwrap().is_empty());
        // Empty-clique rule admits bare non-edges where no suspension exists.
        let two_pts = Graph::from_edge_list(2, &[]).unwrap();
        assert!(maximal_strips(&two_pts).unwrap().is_empty());
        let bare = maximal_strips_with_rule(&two_pts, StripRule::AllowEmptyClique).unwrap();
        assert_eq!(sets_as_vecs(&bare), vec![vec![0, 1]]);
    }

    #[test]
    fn index_fixtures() {
        assert_eq!(hypergraph_index(&c4()).unwrap(), Order::Finite(0));
        assert_eq!(hypergraph_index(&complete_bipartite(2, 5)).unwrap(), Order::Finite(0));
        assert_eq!(hypergraph_index(&complete(5)).unwrap(), Order::Infinite);
        let cherry = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(hypergraph_index(&cherry).unwrap(), Order::Infinite);
        assert_eq!(hypergraph_index(&path_of_squares(8)).unwrap(), Order::Finite(1));
        assert_eq!(hypergraph_index(&path_of_squares(12)).unwrap(), Order::Finite(1));
        // Two disjoint squares: supports never chain across.
        let g = Graph::from_edge_list(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        assert_eq!(hypergraph_index(&g).unwrap(), Order::Infinite);
    }

    #[test]
    fn guard_rejects_large_graphs() {
        let g = Graph::from_edge_list(17, &[(0, 1)]).unwrap();
        assert!(matches!(hypergraph_index(&g), Err(Error::TooLarge { limit: 16, .. })));
        assert!(hypergraph_index_with_limit(&g, 17).is_ok());
        let huge = Graph::from_edge_list(40, &[(0, 1)]).unwrap();
        assert!(matches!(
            hypergraph_index_with_limit(&huge, 40),
            Err(Error::TooLarge { limit: 31, .. })
        ));
    }

    #[test]
    fn strips_are_strips() {
        // Every strip splits as non-edge + clique with all cross edges.
        for g in [c4(), path_of_squares(8), complete_bipartite(3, 4)] {
            for s in maximal_strips(&g).unwrap() {
                let members = s.to_vec();
                let mut found = false;
                for (i, &u) in members.iter().enumerate() {
                    for &v in &members[i + 1..] {
                        if g.has_edge(u, v) {
                            continue;
                        }
                        let rest: Vec<usize> =
                            members.iter().copied().filter(|&w| w != u && w != v).collect();
                        let clique = rest.iter().enumerate().all(|(a, &x)| {
                            rest[a + 1..].iter().all(|&y| g.has_edge(x, y))
                        });
                        let joined =
                            rest.iter().all(|&w| g.has_edge(w, u) && g.has_edge(w, v));
                        if clique && joined {
                            found = true;
                        }
                    }
                }
                assert!(found, "strip {members:?} lacks a non-edge + joined clique split");
            }
        }
    }

    #[test]
    fn maximality_is_strict() {
        for g in [c4(), path_of_squares(8), complete_bipartite(2, 4)] {
            let sets = maximal_order0_subsets(&g).unwrap();
            for (i, a) in sets.iter().enumerate() {
                for (j, b) in sets.iter().enumerate() {
                    if i != j {
                        assert!(!a.is_subset_of(b));
                    }
                }
            }
        }
    }
}
