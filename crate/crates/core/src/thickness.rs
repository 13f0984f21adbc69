//! Square graph, level graphs, and the thickness order engine.
//!
//! The square graph T1 has one node per non-edge of the graph; two nodes
//! are adjacent when they are the diagonals of an induced 4-cycle. Level
//! graphs T_k coarsen T1 by repeatedly merging latch sets: for a component
//! C, supp_1(C) is the union of its member pairs (no suspensions),
//! supp_k(C) for k >= 2 additionally includes each member's suspension
//! (common neighborhood of its endpoints), and latch_k(C) is the set of
//! non-edges with both endpoints inside supp_k(C). Merging every latch set
//! into one block yields the next level; components whose latches intersect
//! coalesce automatically through the shared non-edge.
//!
//! The thickness order is 0 when the whole graph is a join of two
//! non-cliques, otherwise the least k >= 1 at which some component of T_k
//! latches every non-edge. A graph with no induced square has no thick
//! subset at all, and a merge round that performs no unions at level >= 2
//! is a fixpoint; both yield order INFINITE.

use crate::graph::{Graph, NonEdge};
use crate::unionfind::UnionFind;
use crate::vertexset::VertexSet;

/// Thickness order outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u32),
    Infinite,
    /// Level cap was hit before a verdict; carries the cap that was used.
    Indeterminate { cap: u32 },
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }

    /// Token used in CSV output: the numeric order, `inf`, or `cap`.
    pub fn token(&self) -> String {
        match self {
            Order::Finite(k) => k.to_string(),
            Order::Infinite => "inf".to_string(),
            Order::Indeterminate { .. } => "cap".to_string(),
        }
    }
}

/// Certificate for a finite order: the level at which a component latched
/// every non-edge, and that component's size and support size. For order 0
/// the "component" is the first non-clique side of the join witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub level: u32,
    pub component_size: usize,
    pub supp_size: usize,
}

/// Size statistics of the square graph T1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct T1Stats {
    pub component_count: usize,
    pub max_component_size: usize,
    pub max_supp1_size: usize,
}

#[derive(Clone, Debug)]
pub struct ThicknessReport {
    pub order: Order,
    pub witness: Option<Witness>,
    /// None only when the order is indeterminate.
    pub rel_hyperbolic: Option<bool>,
    /// "exponential" or "poly_degree_{k+1}"; None when indeterminate.
    pub divergence: Option<String>,
    pub t1_stats: T1Stats,
}

impl ThicknessReport {
    pub fn to_json(&self) -> serde_json::Value {
        let order = match self.order {
            Order::Finite(k) => serde_json::json!(k),
            Order::Infinite => serde_json::json!("inf"),
            Order::Indeterminate { .. } => serde_json::json!("cap"),
        };
        let mut obj = serde_json::json!({
            "order": order,
            "witness": self.witness.map(|w| {
                serde_json::json!({
                    "level": w.level,
                    "component_size": w.component_size,
                    "supp_size": w.supp_size,
                })
            }),
            "rel_hyperbolic": self.rel_hyperbolic,
            "divergence": self.divergence,
            "t1_stats": {
                "component_count": self.t1_stats.component_count,
                "max_component_size": self.t1_stats.max_component_size,
                "max_supp1_size": self.t1_stats.max_supp1_size,
            },
        });
        if let Order::Indeterminate { cap } = self.order {
            obj["indeterminate_cap"] = serde_json::json!(cap);
        }
        obj
    }
}

fn finite_report(k: u32, witness: Witness, t1_stats: T1Stats) -> ThicknessReport {
    ThicknessReport {
        order: Order::Finite(k),
        witness: Some(witness),
        rel_hyperbolic: Some(false),
        divergence: Some(format!("poly_degree_{}", k + 1)),
        t1_stats,
    }
}

fn infinite_report(t1_stats: T1Stats) -> ThicknessReport {
    ThicknessReport {
        order: Order::Infinite,
        witness: None,
        rel_hyperbolic: Some(true),
        divergence: Some("exponential".to_string()),
        t1_stats,
    }
}

/// Join test: `g[s]` is a join of two non-cliques iff the complement of
/// `g[s]` has at least two edge-containing components. Returns the witness
/// partition (A, B) with A a single edge-containing complement component
/// and B the rest of `s`.
pub fn is_thick_order0(g: &Graph, s: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    let comps = g.complement_nontrivial_components(s);
    let mut flagged = comps.iter().filter(|(_, f)| *f);
    let a = flagged.next()?.0.clone();
    flagged.next()?;
    let mut b = s.clone();
    b.subtract(&a);
    Some((a, b))
}

/// Square graph over the non-edges of a fixed graph.
pub struct SquareGraph {
    non_edges: Vec<NonEdge>,
    squares: Vec<(u32, u32)>,
    uf: UnionFind,
}

impl SquareGraph {
    pub fn non_edges(&self) -> &[NonEdge] {
        &self.non_edges
    }

    /// Diagonal index pairs, smaller index first.
    pub fn squares(&self) -> &[(u32, u32)] {
        &self.squares
    }

    pub fn index_of(&self, f: NonEdge) -> Option<u32> {
        self.non_edges.binary_search(&f).ok().map(|i| i as u32)
    }

    pub fn component_count(&self) -> usize {
        self.uf.set_count()
    }

    pub fn same_component(&mut self, i: u32, j: u32) -> bool {
        self.uf.same(i, j)
    }

    /// Components as ascending member lists, ordered by smallest member.
    pub fn components(&mut self) -> Vec<Vec<u32>> {
        self.uf.sets()
    }

    pub fn stats(&mut self) -> T1Stats {
        let comps = self.uf.sets();
        let mut stats = T1Stats { component_count: comps.len(), ..Default::default() };
        let mut supp = Vec::new();
        for members in &comps {
            stats.max_component_size = stats.max_component_size.max(members.len());
            supp.clear();
            for &i in members {
                let f = self.non_edges[i as usize];
                supp.push(f.u);
                supp.push(f.v);
            }
            supp.sort_unstable();
            supp.dedup();
            stats.max_supp1_size = stats.max_supp1_size.max(supp.len());
        }
        stats
    }
}

/// Enumerates induced squares as canonical diagonal pairs {f, f'} with
/// key(f) < key(f'): for each non-edge f, every non-adjacent pair inside
/// the common neighborhood of f's endpoints spans a square with f.
pub fn enumerate_induced_squares(g: &Graph) -> Vec<(NonEdge, NonEdge)> {
    let mut out = Vec::new();
    for f in g.non_edges_iter() {
        let z = g.common_neighbors_sorted(f.u as usize, f.v as usize);
        for i in 0..z.len() {
            for j in i + 1..z.len() {
                if !g.has_edge(z[i] as usize, z[j] as usize) {
                    let d = NonEdge::new_unchecked(z[i], z[j]);
                    if f < d {
                        out.push((f, d));
                    }
                }
            }
        }
    }
    out
}

/// Builds the square graph: one union per induced square.
pub fn build_square_graph(g: &Graph) -> SquareGraph {
    let non_edges = g.non_edges();
    let mut uf = UnionFind::new(non_edges.len());
    let mut squares = Vec::new();
    for (f, d) in enumerate_induced_squares(g) {
        let i = non_edges.binary_search(&f).expect("diagonal is a listed non-edge") as u32;
        let j = non_edges.binary_search(&d).expect("diagonal is a listed non-edge") as u32;
        debug_assert!(square_is_induced(g, f, d));
        squares.push((i, j));
        uf.union(i, j);
    }
    SquareGraph { non_edges, squares, uf }
}

fn square_is_induced(g: &Graph, f: NonEdge, d: NonEdge) -> bool {
    let (a, c) = f.endpoints();
    let (b, e) = d.endpoints();
    a != b
        && a != e
        && c != b
        && c != e
        && g.has_edge(a, b)
        && g.has_edge(a, e)
        && g.has_edge(c, b)
        && g.has_edge(c, e)
        && !g.has_edge(a, c)
        && !g.has_edge(b, e)
}

/// Partition of the non-edges at one level of the T_k iteration.
pub struct LevelState {
    pub k: u32,
    non_edges: Vec<NonEdge>,
    comp: UnionFind,
}

impl LevelState {
    pub fn non_edges(&self) -> &[NonEdge] {
        &self.non_edges
    }

    pub fn index_of(&self, f: NonEdge) -> Option<u32> {
        self.non_edges.binary_search(&f).ok().map(|i| i as u32)
    }

    pub fn same_component(&mut self, i: u32, j: u32) -> bool {
        self.comp.same(i, j)
    }

    pub fn component_count(&self) -> usize {
        self.comp.set_count()
    }

    pub fn components(&mut self) -> Vec<Vec<u32>> {
        self.comp.sets()
    }

    /// supp of a component given its member indices: endpoints only at
    /// k = 1, endpoints plus suspensions at k >= 2.
    pub fn supp(&self, g: &Graph, members: &[u32]) -> VertexSet {
        let mut supp = VertexSet::new(g.n());
        self.supp_into(g, members, &mut supp);
        supp
    }

    fn supp_into(&self, g: &Graph, members: &[u32], supp: &mut VertexSet) {
        supp.clear();
        for &i in members {
            let f = self.non_edges[i as usize];
            supp.insert(f.u as usize);
            supp.insert(f.v as usize);
            if self.k >= 2 {
                for w in g.common_neighbors_sorted(f.u as usize, f.v as usize) {
                    supp.insert(w as usize);
                }
            }
        }
    }

    /// latch of a component from its supp: indices of all non-edges with
    /// both endpoints in supp.
    pub fn latch(&self, g: &Graph, supp: &VertexSet) -> Vec<u32> {
        let mut out = Vec::new();
        let members: Vec<usize> = supp.iter().collect();
        for (ai, &a) in members.iter().enumerate() {
            for &b in &members[ai + 1..] {
                if !g.has_edge(a, b) {
                    let f = NonEdge::new_unchecked(a as u32, b as u32);
                    let idx = self
                        .non_edges
                        .binary_search(&f)
                        .expect("pair of non-adjacent vertices is a listed non-edge");
                    out.push(idx as u32);
                }
            }
        }
        out
    }
}

/// Level-1 state from the square graph partition.
pub fn level_state_from_squares(_g: &Graph, sq: &SquareGraph) -> LevelState {
    LevelState { k: 1, non_edges: sq.non_edges.clone(), comp: sq.uf.clone() }
}

/// Advances one level: unions every component's latch set into a single
/// block (components with intersecting latches coalesce through the shared
/// member), then bumps k so supp switches to the suspension-included rule.
pub fn next_level(g: &Graph, state: LevelState) -> LevelState {
    let (next, _) = next_level_counting(g, state);
    next
}

fn next_level_counting(g: &Graph, mut state: LevelState) -> (LevelState, usize) {
    let comps = state.comp.sets();
    let mut unions = 0;
    let mut supp = VertexSet::new(g.n());
    let mut merged = state.comp.clone();
    for members in &comps {
        state.supp_into(g, members, &mut supp);
        let latch = state.latch(g, &supp);
        let anchor = latch[0];
        for &other in &latch[1..] {
            unions += merged.union(anchor, other) as usize;
        }
    }
    (LevelState { k: state.k + 1, non_edges: state.non_edges, comp: merged }, unions)
}

/// Default level cap: each productive round merges components or grows a
/// support, so this bound is never reached by the iteration itself.
pub fn default_level_cap(g: &Graph) -> u32 {
    (g.non_edge_count() + g.n() + 2) as u32
}

pub fn thickness_order(g: &Graph) -> ThicknessReport {
    thickness_order_with_cap(g, default_level_cap(g))
}

pub fn thickness_order_with_cap(g: &Graph, cap: u32) -> ThicknessReport {
    let mut sq = build_square_graph(g);
    let t1_stats = sq.stats();

    if let Some((a, b)) = is_thick_order0(g, &VertexSet::full(g.n())) {
        let witness =
            Witness { level: 0, component_size: a.len(), supp_size: a.len() + b.len() };
        return finite_report(0, witness, t1_stats);
    }
    // No induced square means no subset is a join of two non-cliques, so
    // no level can certify thickness: not thick.
    if sq.squares.is_empty() {
        return infinite_report(t1_stats);
    }

    // Vertices that must be covered by a full latch: a vertex adjacent to
    // everything else lies in no non-edge, so latching all non-edges is
    // exactly covering the non-dominating vertices with supp.
    let nondom = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| g.degree(v) + 1 < g.n()));

    let mut state = level_state_from_squares(g, &sq);
    let mut supp = VertexSet::new(g.n());
    loop {
        let comps = state.comp.sets();
        for members in &comps {
            state.supp_into(g, members, &mut supp);
            if nondom.is_subset_of(&supp) {
                let witness = Witness {
                    level: state.k,
                    component_size: members.len(),
                    supp_size: supp.len(),
                };
                return finite_report(state.k, witness, t1_stats);
            }
        }
        if state.k >= cap {
            return ThicknessReport {
                order: Order::Indeterminate { cap },
                witness: None,
                rel_hyperbolic: None,
                divergence: None,
                t1_stats,
            };
        }
        let k = state.k;
        let (next, unions) = next_level_counting(g, state);
        // A union-free round at k >= 2 repeats forever: the partition and
        // the (suspension-included) supp rule are both unchanged.
        if k >= 2 && unions == 0 {
            return infinite_report(t1_stats);
        }
        state = next;
        #[cfg(debug_assertions)]
        debug_assert!(state.k <= cap + 1);
    }
}

/// (max component size in T1, max supp_1 size, thickness order).
pub fn largest_component_stats(g: &Graph) -> (usize, usize, Order) {
    let report = thickness_order(g);
    (report.t1_stats.max_component_size, report.t1_stats.max_supp1_size, report.order)
}
