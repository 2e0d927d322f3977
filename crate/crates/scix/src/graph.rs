//! Undirected simple graphs with bitset adjacency rows.
//!
//! Vertices are `0..n-1` internally; every file format (DIMACS-like graph
//! files, permutation files, decomposition files) is 1-based. Graphs are
//! immutable after construction and all operations here are pure, so shared
//! read access from multiple threads is safe.

use crate::bitset::Bitset;
use thiserror::Error;

/// Index into [`Graph::edges`], stable for the lifetime of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}): vertex out of range for a graph on {n} vertices")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {v}) is a self-loop")]
    SelfLoop { u: usize, v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
}

/// Undirected simple graph. The edge list is kept sorted lexicographically
/// with `u < v` in every pair, so [`EdgeId`]s are canonical.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Bitset>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs. Pairs may come in any
    /// order and orientation; the stored edge list is canonicalized.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u, v });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        let mut adj = vec![Bitset::new(n); n];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, edges })
    }

    /// Builds a graph from 1-based pairs, the convention of every external
    /// file format. Errors report the pair as given.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut shifted = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u < 1 || v < 1 || u > n || v > n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            shifted.push((u - 1, v - 1));
        }
        Graph::from_edges(n, &shifted).map_err(|e| match e {
            GraphError::VertexOutOfRange { u, v, n } => {
                GraphError::VertexOutOfRange { u: u + 1, v: v + 1, n }
            }
            GraphError::SelfLoop { u, v } => GraphError::SelfLoop { u: u + 1, v: v + 1 },
            GraphError::DuplicateEdge { u, v } => GraphError::DuplicateEdge { u: u + 1, v: v + 1 },
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &pairs).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        pairs.push((0, n - 1));
        Graph::from_edges(n, &pairs).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Graph::from_edges(n, &pairs).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id.index()]
    }

    /// Canonical id of the edge between `u` and `v`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_row(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    /// Edge-complement on the same vertex set. An involution.
    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &pairs).unwrap()
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut pairs = self.edges.clone();
        pairs.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(self.n + other.n, &pairs).unwrap()
    }

    /// Disjoint union plus all cross edges between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut pairs = self.edges.clone();
        pairs.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        for u in 0..self.n {
            for v in 0..other.n {
                pairs.push((u, v + self.n));
            }
        }
        Graph::from_edges(self.n + other.n, &pairs).unwrap()
    }

    /// Subgraph induced by `verts` (which must be distinct). Returns the new
    /// graph together with the old labels of its vertices, in order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            debug_assert!(index[v] == usize::MAX, "duplicate vertex in selection");
            index[v] = i;
        }
        let mut pairs = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                pairs.push((index[u], index[v]));
            }
        }
        (Graph::from_edges(verts.len(), &pairs).unwrap(), verts.to_vec())
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Two-colors the graph by BFS. Disconnected graphs get an independent
    /// labeling per component. A non-bipartite graph yields an odd closed
    /// walk witness that is a genuine cycle of the graph.
    pub fn bipartition(&self) -> TwoColoring {
        let mut side = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::A);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(side[v].unwrap().other());
                            parent[w] = v;
                            depth[w] = depth[v] + 1;
                            queue.push_back(w);
                        }
                        Some(c) if c == side[v].unwrap() => {
                            return TwoColoring::OddCycle(odd_cycle(&parent, &depth, v, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        TwoColoring::Bipartite(Bipartition {
            side: side.into_iter().map(Option::unwrap).collect(),
        })
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Closed odd cycle through the conflict edge `(v, w)`: walk both BFS-tree
/// paths up to the common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], v: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (v, w);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    // up_a ends at the ancestor; up_b's copy of it is dropped.
    up_b.pop();
    up_b.reverse();
    up_a.extend(up_b);
    up_a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Per-vertex two-coloring; every edge crosses sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn vertices_on(&self, s: Side) -> impl Iterator<Item = usize> + '_ {
        self.side
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == s)
            .map(|(v, _)| v)
    }

    /// No edge of `g` is monochromatic.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    Bipartite(Bipartition),
    /// Vertex sequence of an odd cycle; consecutive entries (and the
    /// wrap-around pair) are adjacent.
    OddCycle(Vec<usize>),
}

impl TwoColoring {
    pub fn bipartition(&self) -> Option<&Bipartition> {
        match self {
            TwoColoring::Bipartite(b) => Some(b),
            TwoColoring::OddCycle(_) => None,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    BadEdge { line: usize, source: GraphError },
    #[error("missing problem line `p edge <n> <m>`")]
    MissingHeader,
    #[error("problem line announces {expected} edges but the file has {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Parses the DIMACS-like graph format: a `p edge <n> <m>` line, then `m`
/// lines `e <u> <v>` with `1 <= u < v <= n`. Lines starting with `c` are
/// comments.
pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = l.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(DimacsError::Syntax { line, msg: "second problem line".into() });
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(DimacsError::Syntax {
                        line,
                        msg: "expected `p edge <n> <m>`".into(),
                    });
                }
                let n = parse_num(fields[2], line)?;
                let m = parse_num(fields[3], line)?;
                header = Some((n, m));
            }
            "e" => {
                if header.is_none() {
                    return Err(DimacsError::Syntax {
                        line,
                        msg: "edge before problem line".into(),
                    });
                }
                if fields.len() != 3 {
                    return Err(DimacsError::Syntax { line, msg: "expected `e <u> <v>`".into() });
                }
                let u = parse_num(fields[1], line)?;
                let v = parse_num(fields[2], line)?;
                if u >= v {
                    return Err(DimacsError::Syntax {
                        line,
                        msg: format!("edge ({u}, {v}) must satisfy u < v"),
                    });
                }
                pairs.push((u, v));
            }
            other => {
                return Err(DimacsError::Syntax {
                    line,
                    msg: format!("unknown record `{other}`"),
                });
            }
        }
    }
    let (n, m) = header.ok_or(DimacsError::MissingHeader)?;
    if pairs.len() != m {
        return Err(DimacsError::EdgeCountMismatch { expected: m, found: pairs.len() });
    }
    Graph::from_edge_list(n, &pairs).map_err(|source| DimacsError::BadEdge { line: 0, source })
}

fn parse_num(s: &str, line: usize) -> Result<usize, DimacsError> {
    s.parse().map_err(|_| DimacsError::Syntax { line, msg: format!("bad number `{s}`") })
}

/// Renders a graph in the format accepted by [`parse_dimacs`].
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_single_edge() {
        let g = Graph::from_edge_list(2, &[(1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.adjacent(0, 1));
    }

    #[test]
    fn from_edge_list_path() {
        let g = Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let degs: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![1, 2, 2, 1]);
        assert_eq!(g, Graph::path(4));
    }

    #[test]
    fn from_edge_list_rejects_duplicates() {
        let err = Graph::from_edge_list(3, &[(1, 2), (1, 2)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 1, v: 2 });
        // Same edge in the opposite orientation is still a duplicate.
        let err = Graph::from_edge_list(3, &[(1, 2), (2, 1)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 1, v: 2 });
    }

    #[test]
    fn from_edge_list_rejects_self_loops_and_range() {
        assert_eq!(
            Graph::from_edge_list(3, &[(2, 2)]).unwrap_err(),
            GraphError::SelfLoop { u: 2, v: 2 }
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 4)]).unwrap_err(),
            GraphError::VertexOutOfRange { u: 1, v: 4, n: 3 }
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1)]).unwrap_err(),
            GraphError::VertexOutOfRange { u: 0, v: 1, n: 3 }
        );
    }

    #[test]
    fn complement_small_cases() {
        assert_eq!(Graph::complete(2).complement(), Graph::empty(2));
        // P4 is self-complementary up to relabeling; check the exact edges.
        let p4c = Graph::path(4).complement();
        assert_eq!(p4c.edges(), &[(0, 2), (0, 3), (1, 3)]);
        assert_eq!(p4c.edge_count(), 3);
        // |E(complement of P5)| = C(5,2) - 4 = 6.
        assert_eq!(Graph::path(5).complement().edge_count(), 6);
    }

    #[test]
    fn union_and_join_counts() {
        let k2 = Graph::complete(2);
        let two_k2 = k2.disjoint_union(&k2);
        assert_eq!(two_k2.edge_count(), 2);
        assert_eq!(two_k2.vertex_count(), 4);
        assert_eq!(Graph::empty(1).disjoint_union(&Graph::empty(1)), Graph::empty(2));
        assert_eq!(Graph::path(4).disjoint_union(&Graph::cycle(4)).edge_count(), 7);

        assert_eq!(Graph::empty(1).join(&Graph::empty(1)), Graph::complete(2));
        assert_eq!(Graph::complete(2).join(&Graph::empty(1)), Graph::complete(3));
        let j = Graph::path(3).join(&Graph::path(3));
        assert_eq!(j.vertex_count(), 6);
        assert_eq!(j.edge_count(), 13);
    }

    #[test]
    fn bipartition_of_path() {
        let g = Graph::path(4);
        let two = g.bipartition();
        let b = two.bipartition().expect("P4 is bipartite");
        assert!(b.is_valid_for(&g));
        assert_eq!(b.side(0), b.side(2));
        assert_eq!(b.side(1), b.side(3));
        assert_ne!(b.side(0), b.side(1));
    }

    #[test]
    fn bipartition_of_triangle_yields_odd_cycle() {
        let g = Graph::complete(3);
        match g.bipartition() {
            TwoColoring::OddCycle(cycle) => {
                assert_eq!(cycle.len(), 3);
                assert_cycle_in(&g, &cycle);
            }
            TwoColoring::Bipartite(_) => panic!("K3 is not bipartite"),
        }
    }

    #[test]
    fn odd_cycle_witness_on_larger_graph() {
        // C5 with a chord and a pendant; the witness must be a real odd cycle.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (4, 5)])
            .unwrap();
        match g.bipartition() {
            TwoColoring::OddCycle(cycle) => {
                assert!(cycle.len() % 2 == 1);
                assert_cycle_in(&g, &cycle);
            }
            TwoColoring::Bipartite(_) => panic!("graph has odd cycles"),
        }
    }

    fn assert_cycle_in(g: &Graph, cycle: &[usize]) {
        assert!(cycle.len() >= 3);
        let mut seen = std::collections::HashSet::new();
        for i in 0..cycle.len() {
            assert!(seen.insert(cycle[i]), "repeated vertex in cycle");
            assert!(g.adjacent(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn components_and_trees() {
        let g = Graph::path(3).disjoint_union(&Graph::complete(2));
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert!(Graph::path(5).is_tree());
        assert!(!Graph::cycle(4).is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(2).is_tree());
    }

    #[test]
    fn edge_ids_are_sorted_and_searchable() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 1), (1, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 3), (2, 3)]);
        assert_eq!(g.edge_id(3, 1), Some(EdgeId(1)));
        assert_eq!(g.edge_id(0, 2), None);
    }

    #[test]
    fn dimacs_round_trip_and_errors() {
        let g = Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let text = to_dimacs(&g);
        assert_eq!(parse_dimacs(&text).unwrap(), g);

        let bad = "p edge 3 2\ne 1 2\n";
        assert!(matches!(parse_dimacs(bad), Err(DimacsError::EdgeCountMismatch { .. })));
        let bad = "p edge 3 1\ne 2 1\n";
        assert!(matches!(parse_dimacs(bad), Err(DimacsError::Syntax { .. })));
        let bad = "c comment only\n";
        assert!(matches!(parse_dimacs(bad), Err(DimacsError::MissingHeader)));
        let ok = "c header\np edge 2 1\n\ne 1 2\n";
        assert_eq!(parse_dimacs(ok).unwrap(), Graph::complete(2));
    }

    #[test]
    fn graphs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        assert_send_sync::<Bipartition>();
    }
}
