//! Exhaustive cross-validation of the thickness engine against the
//! hypergraph-index oracle on every labeled graph with at most 6 vertices,
//! plus brute-force checks of the order-0 join test and the hyperedge
//! absorption property. The 7-vertex exhaustive run lives in the
//! acceptance suite.

use squarelab_core::graph::Graph;
use squarelab_core::graph6::emit_graph6;
use squarelab_core::oracle::{hypergraph_index, hypergraph_index_all_hyperedges};
use squarelab_core::thickness::{is_thick_order0, thickness_order};
use squarelab_core::vertexset::VertexSet;

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Order-0 by definition: some bipartition A ⊔ B = V with every cross pair
/// adjacent and neither side a clique.
fn order0_bipartition_bruteforce(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    for a_mask in 1u32..(1 << n) - 1 {
        let b_mask = !a_mask & ((1u32 << n) - 1);
        let a: Vec<usize> = (0..n).filter(|&v| a_mask >> v & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&v| b_mask >> v & 1 == 1).collect();
        let join = a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v)));
        if !join {
            continue;
        }
        let non_clique = |side: &[usize]| {
            side.iter()
                .enumerate()
                .any(|(i, &u)| side[i + 1..].iter().any(|&v| !g.has_edge(u, v)))
        };
        if non_clique(&a) && non_clique(&b) {
            return true;
        }
    }
    false
}

#[test]
fn engine_matches_oracle_exhaustively_to_n6() {
    for n in 0..=6usize {
        let pairs = all_pairs(n);
        for mask in 0..1u64 << pairs.len() {
            let g = graph_from_mask(n, &pairs, mask);
            let engine = thickness_order(&g).order;
            let oracle = hypergraph_index(&g).unwrap();
            assert_eq!(
                engine,
                oracle,
                "order disagreement on {} (n={n})",
                emit_graph6(&g).unwrap()
            );
        }
    }
}

#[test]
fn order0_matches_bipartition_bruteforce_to_n6() {
    for n in 0..=6usize {
        let pairs = all_pairs(n);
        for mask in 0..1u64 << pairs.len() {
            let g = graph_from_mask(n, &pairs, mask);
            let fast = is_thick_order0(&g, &VertexSet::full(n)).is_some();
            let brute = order0_bipartition_bruteforce(&g);
            assert_eq!(
                fast,
                brute,
                "order-0 disagreement on {} (n={n})",
                emit_graph6(&g).unwrap()
            );
        }
    }
}

#[test]
fn absorption_all_hyperedges_same_index_to_n6() {
    for n in 0..=6usize {
        let pairs = all_pairs(n);
        for mask in 0..1u64 << pairs.len() {
            let g = graph_from_mask(n, &pairs, mask);
            let maximal = hypergraph_index(&g).unwrap();
            let all = hypergraph_index_all_hyperedges(&g).unwrap();
            assert_eq!(
                maximal,
                all,
                "absorption failure on {} (n={n})",
                emit_graph6(&g).unwrap()
            );
        }
    }
}

#[test]
fn order0_witness_sides_are_valid() {
    for n in 4..=6usize {
        let pairs = all_pairs(n);
        for mask in 0..1u64 << pairs.len() {
            let g = graph_from_mask(n, &pairs, mask);
            if let Some((a, b)) = is_thick_order0(&g, &VertexSet::full(n)) {
                let av = a.to_vec();
                let bv = b.to_vec();
                assert_eq!(av.len() + bv.len(), n);
                assert!(!av.iter().any(|v| bv.contains(v)));
                // Join: every cross pair adjacent.
                assert!(av.iter().all(|&u| bv.iter().all(|&v| g.has_edge(u, v))));
                // Neither side a clique.
                let non_clique = |side: &[usize]| {
                    side.iter()
                        .enumerate()
                        .any(|(i, &u)| side[i + 1..].iter().any(|&v| !g.has_edge(u, v)))
                };
                assert!(non_clique(&av) && non_clique(&bv));
            }
        }
    }
}
