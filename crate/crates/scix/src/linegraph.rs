//! Linegraphs and their squares, plus the certificate types that live on
//! them: strong edge colorings and induced matchings, with verifiers.
//!
//! A strong edge coloring of `G` is exactly a proper vertex coloring of
//! `L(G)^2`, and an induced matching is exactly an independent set in
//! `L(G)^2`; the verifiers below check against that adjacency directly.

use crate::graph::{EdgeId, Graph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A graph whose vertices are the edges of a base graph, together with the
/// base edge list so results can be mapped back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGraph {
    base_edges: Vec<(usize, usize)>,
    graph: Graph,
}

impl EdgeGraph {
    /// The derived graph on one vertex per base edge.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Base-graph endpoints of the edge behind vertex `id`.
    pub fn base_edge(&self, id: EdgeId) -> (usize, usize) {
        self.base_edges[id.index()]
    }
}

/// Linegraph: one vertex per edge of `g`, adjacent iff the edges share an
/// endpoint.
pub fn line_graph(g: &Graph) -> EdgeGraph {
    build(g, false)
}

/// Square of the linegraph: edges are adjacent iff they share an endpoint or
/// some edge of `g` joins an endpoint of one to an endpoint of the other.
pub fn line_graph_square(g: &Graph) -> EdgeGraph {
    build(g, true)
}

fn build(g: &Graph, square: bool) -> EdgeGraph {
    let edges = g.edges();
    let m = edges.len();
    let mut pairs = Vec::new();
    for i in 0..m {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            let meet = a == c || a == d || b == c || b == d;
            let linked = square
                && (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d));
            if meet || linked {
                pairs.push((i, j));
            }
        }
    }
    EdgeGraph {
        base_edges: edges.to_vec(),
        graph: Graph::from_edges(m, &pairs).unwrap(),
    }
}

/// Color per edge, colors compacted to `0..k-1` with every color used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    /// Normalizes arbitrary color values to the compact range `0..k-1`,
    /// keeping first-appearance order.
    pub fn new(raw: Vec<usize>) -> EdgeColoring {
        let mut remap: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        let mut colors = Vec::with_capacity(raw.len());
        for c in raw {
            let next = remap.len();
            colors.push(*remap.entry(c).or_insert(next));
        }
        let k = remap.len();
        EdgeColoring { colors, k }
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.colors[e.index()]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors.
    pub fn color_count(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }
}

/// Subset of a graph's edges, stored as sorted distinct ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSet {
    ids: Vec<EdgeId>,
}

impl EdgeSet {
    pub fn new(mut ids: Vec<EdgeId>) -> EdgeSet {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet { ids }
    }

    pub fn ids(&self) -> &[EdgeId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Endpoint pairs in `g`, in id order.
    pub fn endpoint_pairs(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.ids.iter().map(|&e| g.edge(e)).collect()
    }
}

/// True iff base edges `e` and `f` are within distance two in the linegraph:
/// they meet a common vertex or an edge of `g` joins them.
pub fn edges_conflict(g: &Graph, e: EdgeId, f: EdgeId) -> bool {
    let (a, b) = g.edge(e);
    let (c, d) = g.edge(f);
    a == c || a == d || b == c || b == d
        || g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringVerifyError {
    /// Input error: certificate does not cover the edge set.
    #[error("coloring covers {found} edges but the graph has {expected}")]
    EdgeCountMismatch { expected: usize, found: usize },
    /// Violation: two same-colored edges within distance two.
    #[error("edges #{} and #{} share color {color} but are within distance two", first.0, second.0)]
    Conflict { first: EdgeId, second: EdgeId, color: usize },
}

impl ColoringVerifyError {
    /// Distinguishes certificate violations (exit code 3 at the CLI) from
    /// malformed input (exit code 1).
    pub fn is_violation(&self) -> bool {
        matches!(self, ColoringVerifyError::Conflict { .. })
    }
}

/// Checks that every color class is an induced matching of `g`.
pub fn verify_strong_edge_coloring(g: &Graph, c: &EdgeColoring) -> Result<(), ColoringVerifyError> {
    if c.edge_count() != g.edge_count() {
        return Err(ColoringVerifyError::EdgeCountMismatch {
            expected: g.edge_count(),
            found: c.edge_count(),
        });
    }
    let m = g.edge_count();
    for i in 0..m {
        for j in i + 1..m {
            if c.colors[i] == c.colors[j] && edges_conflict(g, EdgeId(i), EdgeId(j)) {
                return Err(ColoringVerifyError::Conflict {
                    first: EdgeId(i),
                    second: EdgeId(j),
                    color: c.colors[i],
                });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingVerifyError {
    /// Input error: id does not name an edge of the graph.
    #[error("edge id #{} is out of range (graph has {m} edges)", id.0)]
    UnknownEdge { id: EdgeId, m: usize },
    /// Violation: two selected edges within distance two.
    #[error("edges #{} and #{} are within distance two", first.0, second.0)]
    Conflict { first: EdgeId, second: EdgeId },
}

impl MatchingVerifyError {
    pub fn is_violation(&self) -> bool {
        matches!(self, MatchingVerifyError::Conflict { .. })
    }
}

/// Checks that the edge set is an induced matching of `g` (an independent
/// set in `L(g)^2`). The empty set is valid.
pub fn verify_induced_matching(g: &Graph, s: &EdgeSet) -> Result<(), MatchingVerifyError> {
    for &id in s.ids() {
        if id.index() >= g.edge_count() {
            return Err(MatchingVerifyError::UnknownEdge { id, m: g.edge_count() });
        }
    }
    for (i, &e) in s.ids().iter().enumerate() {
        for &f in &s.ids()[i + 1..] {
            if edges_conflict(g, e, f) {
                return Err(MatchingVerifyError::Conflict { first: e, second: f });
            }
        }
    }
    Ok(())
}

/// Serialized strong-coloring certificate: 1-based endpoints plus a 0-based
/// color per edge.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub value: usize,
    pub coloring: Vec<(usize, usize, usize)>,
}

/// Serialized induced-matching certificate: 1-based endpoint pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatchingCertificate {
    pub value: usize,
    pub matching: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Error)]
pub enum CertificateError {
    #[error("certificate references edge ({u}, {v}) which is not in the graph")]
    UnknownEdge { u: usize, v: usize },
    #[error("certificate lists edge ({u}, {v}) more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("certificate misses {count} edge(s) of the graph")]
    MissingEdges { count: usize },
    #[error("certificate claims value {claimed} but carries {actual}")]
    ValueMismatch { claimed: usize, actual: usize },
}

impl ColoringCertificate {
    pub fn from_coloring(g: &Graph, c: &EdgeColoring) -> ColoringCertificate {
        let coloring = g
            .edges()
            .iter()
            .zip(c.colors())
            .map(|(&(u, v), &col)| (u + 1, v + 1, col))
            .collect();
        ColoringCertificate { value: c.color_count(), coloring }
    }

    /// Rebuilds the per-edge coloring; every edge of `g` must appear exactly
    /// once. The claimed `value` must match the number of distinct colors.
    pub fn to_coloring(&self, g: &Graph) -> Result<EdgeColoring, CertificateError> {
        let mut colors = vec![usize::MAX; g.edge_count()];
        for &(u, v, col) in &self.coloring {
            let id = one_based_edge(g, u, v)?;
            if colors[id.index()] != usize::MAX {
                return Err(CertificateError::DuplicateEdge { u, v });
            }
            colors[id.index()] = col;
        }
        let missing = colors.iter().filter(|&&c| c == usize::MAX).count();
        if missing > 0 {
            return Err(CertificateError::MissingEdges { count: missing });
        }
        let coloring = EdgeColoring::new(colors);
        if coloring.color_count() != self.value {
            return Err(CertificateError::ValueMismatch {
                claimed: self.value,
                actual: coloring.color_count(),
            });
        }
        Ok(coloring)
    }
}

impl MatchingCertificate {
    pub fn from_edge_set(g: &Graph, s: &EdgeSet) -> MatchingCertificate {
        let matching = s.endpoint_pairs(g).iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        MatchingCertificate { value: s.len(), matching }
    }

    pub fn to_edge_set(&self, g: &Graph) -> Result<EdgeSet, CertificateError> {
        let mut ids = Vec::with_capacity(self.matching.len());
        for &(u, v) in &self.matching {
            ids.push(one_based_edge(g, u, v)?);
        }
        let set = EdgeSet::new(ids);
        if set.len() != self.matching.len() {
            let &(u, v) = self
                .matching
                .iter()
                .find(|&&(u, v)| {
                    self.matching.iter().filter(|&&p| p == (u, v)).count() > 1
                })
                .unwrap();
            return Err(CertificateError::DuplicateEdge { u, v });
        }
        if set.len() != self.value {
            return Err(CertificateError::ValueMismatch { claimed: self.value, actual: set.len() });
        }
        Ok(set)
    }
}

fn one_based_edge(g: &Graph, u: usize, v: usize) -> Result<EdgeId, CertificateError> {
    if u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count() {
        return Err(CertificateError::UnknownEdge { u, v });
    }
    g.edge_id(u - 1, v - 1).ok_or(CertificateError::UnknownEdge { u, v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_graph_of_path_is_shorter_path() {
        assert_eq!(line_graph(&Graph::path(4)).graph(), &Graph::path(3));
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(line_graph(&claw).graph(), &Graph::complete(3));
    }

    #[test]
    fn line_graph_of_c4_is_c4() {
        let lg = line_graph(&Graph::cycle(4));
        assert_eq!(lg.vertex_count(), 4);
        assert_eq!(lg.graph().edge_count(), 4);
        let degs: Vec<_> = (0..4).map(|v| lg.graph().degree(v)).collect();
        assert_eq!(degs, vec![2, 2, 2, 2]);
        assert!(lg.graph().bipartition().is_bipartite());
    }

    #[test]
    fn square_of_p4_is_triangle() {
        assert_eq!(line_graph_square(&Graph::path(4)).graph(), &Graph::complete(3));
    }

    #[test]
    fn square_of_two_k2_is_edgeless() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(line_graph_square(&two_k2).graph(), &Graph::empty(2));
    }

    #[test]
    fn square_of_p5_misses_only_end_pair() {
        let sq = line_graph_square(&Graph::path(5));
        assert_eq!(sq.vertex_count(), 4);
        for i in 0..4 {
            for j in i + 1..4 {
                let expect = !(i == 0 && j == 3);
                assert_eq!(sq.graph().adjacent(i, j), expect, "pair ({i}, {j})");
            }
        }
    }

    #[test]
    fn line_adjacency_is_subrelation_of_square() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
        let l = line_graph(&g);
        let sq = line_graph_square(&g);
        for &(i, j) in l.graph().edges() {
            assert!(sq.graph().adjacent(i, j));
        }
    }

    #[test]
    fn strong_coloring_verifier() {
        let p4 = Graph::path(4);
        let all_distinct = EdgeColoring::new(vec![0, 1, 2]);
        assert!(verify_strong_edge_coloring(&p4, &all_distinct).is_ok());

        let shared = EdgeColoring::new(vec![0, 1, 0]);
        match verify_strong_edge_coloring(&p4, &shared) {
            Err(ColoringVerifyError::Conflict { first, second, color }) => {
                assert_eq!((first, second, color), (EdgeId(0), EdgeId(2), 0));
            }
            other => panic!("expected a conflict, got {other:?}"),
        }

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(verify_strong_edge_coloring(&two_k2, &EdgeColoring::new(vec![0, 0])).is_ok());

        let short = EdgeColoring::new(vec![0]);
        assert!(matches!(
            verify_strong_edge_coloring(&p4, &short),
            Err(ColoringVerifyError::EdgeCountMismatch { expected: 3, found: 1 })
        ));
    }

    #[test]
    fn induced_matching_verifier() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(verify_induced_matching(&two_k2, &EdgeSet::new(vec![EdgeId(0), EdgeId(1)])).is_ok());

        let p4 = Graph::path(4);
        match verify_induced_matching(&p4, &EdgeSet::new(vec![EdgeId(0), EdgeId(2)])) {
            Err(MatchingVerifyError::Conflict { first, second }) => {
                assert_eq!((first, second), (EdgeId(0), EdgeId(2)));
            }
            other => panic!("expected a conflict, got {other:?}"),
        }

        assert!(verify_induced_matching(&p4, &EdgeSet::new(vec![])).is_ok());
        assert!(matches!(
            verify_induced_matching(&p4, &EdgeSet::new(vec![EdgeId(7)])),
            Err(MatchingVerifyError::UnknownEdge { .. })
        ));
    }

    #[test]
    fn certificates_round_trip() {
        let g = Graph::path(4);
        let c = EdgeColoring::new(vec![0, 1, 2]);
        let cert = ColoringCertificate::from_coloring(&g, &c);
        let json = serde_json::to_string(&cert).unwrap();
        let back: ColoringCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_coloring(&g).unwrap(), c);

        let s = EdgeSet::new(vec![EdgeId(1)]);
        let cert = MatchingCertificate::from_edge_set(&g, &s);
        let back: MatchingCertificate =
            serde_json::from_str(&serde_json::to_string(&cert).unwrap()).unwrap();
        assert_eq!(back.to_edge_set(&g).unwrap(), s);
    }

    #[test]
    fn certificate_errors() {
        let g = Graph::path(4);
        let bogus = ColoringCertificate { value: 1, coloring: vec![(1, 3, 0)] };
        assert!(matches!(bogus.to_coloring(&g), Err(CertificateError::UnknownEdge { u: 1, v: 3 })));

        let partial = ColoringCertificate { value: 1, coloring: vec![(1, 2, 0)] };
        assert!(matches!(partial.to_coloring(&g), Err(CertificateError::MissingEdges { count: 2 })));

        let wrong_value =
            ColoringCertificate { value: 5, coloring: vec![(1, 2, 0), (2, 3, 1), (3, 4, 2)] };
        assert!(matches!(
            wrong_value.to_coloring(&g),
            Err(CertificateError::ValueMismatch { claimed: 5, actual: 3 })
        ));
    }
}
