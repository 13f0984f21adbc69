use crate::error::{Error, Result};
use crate::vertexset::VertexSet;

/// Vertex count up to which per-vertex adjacency bitsets are kept alongside
/// the sorted neighbor lists. Above it, neighborhood intersections fall back
/// to merge scans over the sorted lists.
pub const DENSE_BITSET_MAX: usize = 512;

/// Simple undirected graph on vertices `0..n`.
///
/// Storage is dual: sorted neighbor lists always, plus per-vertex bitsets for
/// small graphs. Vertices are 0-based throughout the library; 1-based labels
/// appear only in command-line input and output.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<u32>>,
    masks: Option<Vec<VertexSet>>,
}

/// Unordered vertex pair known to be a non-edge of a specific graph.
/// Invariants: `u < v`, distinct, and not adjacent in the host graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NonEdge {
    pub u: u32,
    pub v: u32,
}

impl NonEdge {
    pub fn new(g: &Graph, a: usize, b: usize) -> Result<NonEdge> {
        if a == b {
            return Err(Error::SelfLoop { v: a });
        }
        if a >= g.n || b >= g.n {
            return Err(Error::EdgeOutOfRange { u: a, v: b, n: g.n });
        }
        if g.has_edge(a, b) {
            return Err(Error::NotANonEdge { u: a, v: b });
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(NonEdge { u: u as u32, v: v as u32 })
    }

    pub(crate) fn new_unchecked(u: u32, v: u32) -> NonEdge {
        debug_assert!(u < v);
        NonEdge { u, v }
    }

    /// Packed ordering key `u * n + v`; total order equals lexicographic
    /// order on (u, v).
    pub fn key(&self, n: usize) -> u64 {
        self.u as u64 * n as u64 + self.v as u64
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u as usize, self.v as usize)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Endpoints must lie in `0..n` and be
    /// distinct; duplicate edges (in either orientation) collapse to one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::from_edge_list_with_threshold(n, edges, DENSE_BITSET_MAX)
    }

    /// As [`from_edge_list`](Self::from_edge_list) with an explicit bitset
    /// threshold, exposed so the density fallback itself can be exercised.
    pub fn from_edge_list_with_threshold(
        n: usize,
        edges: &[(usize, usize)],
        dense_max: usize,
    ) -> Result<Graph> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        m /= 2;
        let masks = (n <= dense_max).then(|| {
            adj.iter()
                .map(|list| VertexSet::from_iter(n, list.iter().map(|&v| v as usize)))
                .collect()
        });
        Ok(Graph { n, m, adj, masks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn neighbor_mask(&self, v: usize) -> Option<&VertexSet> {
        self.masks.as_ref().map(|m| &m[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        match &self.masks {
            Some(masks) => masks[u].contains(v),
            // Probe from the lower-degree endpoint.
            None => {
                let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
                self.adj[a].binary_search(&(b as u32)).is_ok()
            }
        }
    }

    /// Common neighborhood of `u` and `v` as a vertex set.
    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        match &self.masks {
            Some(masks) => masks[u].intersection(&masks[v]),
            None => VertexSet::from_iter(
                self.n,
                self.common_neighbors_sorted(u, v).into_iter().map(|x| x as usize),
            ),
        }
    }

    /// Common neighborhood as a sorted list; merge scan, no n-sized buffers,
    /// suitable for large graphs.
    pub fn common_neighbors_sorted(&self, u: usize, v: usize) -> Vec<u32> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// All non-edges in lexicographic order. Materializes the complement's
    /// edge set: O(n^2) output for sparse graphs, so callers working at
    /// large n should iterate instead.
    pub fn non_edges(&self) -> Vec<NonEdge> {
        self.non_edges_iter().collect()
    }

    /// Lazy lexicographic enumeration of non-edges.
    pub fn non_edges_iter(&self) -> impl Iterator<Item = NonEdge> + '_ {
        (0..self.n as u32).flat_map(move |u| {
            let mut next = u + 1;
            let row = &self.adj[u as usize];
            let mut k = row.partition_point(|&x| x <= u);
            std::iter::from_fn(move || loop {
                if next >= self.n as u32 {
                    return None;
                }
                if k < row.len() && row[k] == next {
                    k += 1;
                    next += 1;
                    continue;
                }
                let v = next;
                next += 1;
                return Some(NonEdge::new_unchecked(u, v));
            })
        })
    }

    pub fn non_edge_count(&self) -> usize {
        self.n.saturating_sub(1) * self.n / 2 - self.m
    }

    /// Connected components of the complement of the subgraph induced by
    /// `s`, each flagged true when it contains a complement edge (i.e. has
    /// at least two vertices). Ordered by smallest member.
    pub fn complement_nontrivial_components(&self, s: &VertexSet) -> Vec<(VertexSet, bool)> {
        debug_assert_eq!(s.capacity(), self.n);
        let mut out = Vec::new();
        let mut remaining = s.clone();
        if let Some(masks) = &self.masks {
            while let Some(start) = remaining.min() {
                let mut comp = VertexSet::new(self.n);
                let mut queue = vec![start];
                remaining.remove(start);
                comp.insert(start);
                while let Some(v) = queue.pop() {
                    // Complement neighbors of v inside s not yet visited.
                    let mut cand = remaining.clone();
                    cand.subtract(&masks[v]);
                    for w in cand.iter().collect::<Vec<_>>() {
                        remaining.remove(w);
                        comp.insert(w);
                        queue.push(w);
                    }
                }
                let flagged = comp.len() >= 2;
                out.push((comp, flagged));
            }
        } else {
            // Sorted-list variant of the same sweep; each unvisited vertex is
            // tested against the current frontier vertex by binary search.
            let mut unvisited: Vec<u32> = s.iter().map(|v| v as u32).collect();
            while !unvisited.is_empty() {
                let start = unvisited.remove(0);
                let mut comp_members = vec![start];
                let mut queue = vec![start];
                while let Some(v) = queue.pop() {
                    let mut kept = Vec::with_capacity(unvisited.len());
                    for &w in &unvisited {
                        if self.adj[v as usize].binary_search(&w).is_ok() {
                            kept.push(w);
                        } else {
                            comp_members.push(w);
                            queue.push(w);
                        }
                    }
                    unvisited = kept;
                }
                let flagged = comp_members.len() >= 2;
                out.push((
                    VertexSet::from_iter(self.n, comp_members.iter().map(|&v| v as usize)),
                    flagged,
                ));
            }
        }
        out
    }

    /// Edge count of the subgraph induced by `s`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        let mut e = 0;
        for v in s.iter() {
            e += self.adj[v].iter().filter(|&&w| s.contains(w as usize) && (w as usize) > v).count();
        }
        e
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if (v as usize) > u {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    /// Parses the plain text edge-list format: first line `n m`, then m
    /// lines `u v` with 0-based endpoints.
    pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) = lines.next().ok_or_else(|| Error::EdgeList {
            line: 1,
            reason: "empty input".into(),
        })?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
            tok.ok_or_else(|| Error::EdgeList { line, reason: format!("missing {what}") })?
                .parse::<usize>()
                .map_err(|_| Error::EdgeList { line, reason: format!("invalid {what}") })
        };
        let n = parse_num(it.next(), ln + 1, "vertex count")?;
        let m = parse_num(it.next(), ln + 1, "edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (ln, line) = lines.next().ok_or_else(|| Error::EdgeList {
                line: ln + 2 + edges.len(),
                reason: format!("expected {m} edge lines"),
            })?;
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), ln + 1, "endpoint")?;
            let v = parse_num(it.next(), ln + 1, "endpoint")?;
            edges.push((u, v));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn emit_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Adjacency-list JSON export: `{"n": n, "adj": [[...], ...]}`.
    pub fn to_adjacency_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "adj": self.adj,
        })
    }
}

/// Lexicographic rank of the pair (u, v), u < v, among all pairs from 0..n.
pub fn pair_rank(n: usize, u: usize, v: usize) -> u64 {
    debug_assert!(u < v && v < n);
    let (n, u, v) = (n as u64, u as u64, v as u64);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Inverse of [`pair_rank`].
pub fn pair_from_rank(n: usize, rank: u64) -> (usize, usize) {
    let nn = n as u64;
    // Initial guess for the row from the quadratic formula, then fix up.
    let total = nn * (nn - 1) / 2;
    debug_assert!(rank < total);
    let mut u = {
        let r = rank as f64;
        let nf = nn as f64;
        let disc = (2.0 * nf - 1.0) * (2.0 * nf - 1.0) - 8.0 * r;
        (((2.0 * nf - 1.0) - disc.max(0.0).sqrt()) / 2.0).floor() as u64
    };
    let row_start = |u: u64| u * nn - u * (u + 1) / 2;
    while u > 0 && row_start(u) > rank {
        u -= 1;
    }
    while u + 1 < nn && row_start(u + 1) <= rank {
        u += 1;
    }
    let v = u + 1 + (rank - row_start(u));
    (u as usize, v as usize)
}
