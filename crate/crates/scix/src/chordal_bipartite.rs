//! Chordal bipartite graphs: recognition at desk scale, strong chromatic
//! index via the clique number of `L(G)^2`, chain-graph recognition, and an
//! exact maximum chain subgraph used to test the clique/chain
//! correspondence.

use crate::graph::{Bipartition, Graph, Side, TwoColoring};
use crate::linegraph::{line_graph_square, EdgeSet};
use crate::pattern::{contains_induced_pattern, has_induced_cycle_longer_than, Pattern};
use crate::solver::max_clique;
use thiserror::Error;

/// Outcome of chordal-bipartite recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalBipartiteCheck {
    Yes(Bipartition),
    /// Odd cycle witness.
    NotBipartite(Vec<usize>),
    /// Induced cycle of length at least six.
    LongInducedCycle(Vec<usize>),
}

impl ChordalBipartiteCheck {
    pub fn is_yes(&self) -> bool {
        matches!(self, ChordalBipartiteCheck::Yes(_))
    }
}

/// Bipartite with no induced cycle of length more than four. Exhaustive
/// cycle search; meant for n up to roughly 30.
pub fn is_chordal_bipartite(g: &Graph) -> ChordalBipartiteCheck {
    let sides = match g.bipartition() {
        TwoColoring::Bipartite(b) => b,
        TwoColoring::OddCycle(c) => return ChordalBipartiteCheck::NotBipartite(c),
    };
    match has_induced_cycle_longer_than(g, 4) {
        Some(cycle) => ChordalBipartiteCheck::LongInducedCycle(cycle),
        None => ChordalBipartiteCheck::Yes(sides),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<usize>),
    #[error("graph has an induced cycle longer than four: {0:?}")]
    LongInducedCycle(Vec<usize>),
}

/// Strong chromatic index of a chordal bipartite graph: the clique number of
/// `L(G)^2` (which is perfect for this class, so the clique number equals
/// the chromatic number).
pub fn strong_chromatic_index(g: &Graph) -> Result<usize, ClassError> {
    match is_chordal_bipartite(g) {
        ChordalBipartiteCheck::Yes(_) => {}
        ChordalBipartiteCheck::NotBipartite(c) => return Err(ClassError::NotBipartite(c)),
        ChordalBipartiteCheck::LongInducedCycle(c) => return Err(ClassError::LongInducedCycle(c)),
    }
    let sq = line_graph_square(g);
    Ok(max_clique(sq.graph()).len())
}

/// Outcome of chain-graph recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainCheck {
    /// One side's vertices ordered so their neighborhoods are nested upward.
    Chain { ordered_side: Vec<usize> },
    /// An induced K3, 2K2 or C5 (the forbidden patterns for chain graphs).
    NotChain { pattern: Pattern, witness: Vec<usize> },
}

impl ChainCheck {
    pub fn is_chain(&self) -> bool {
        matches!(self, ChainCheck::Chain { .. })
    }
}

/// Chain graphs are the graphs with no induced K3, 2K2 or C5; equivalently,
/// bipartite graphs whose side-A neighborhoods are totally ordered by
/// inclusion. Returns the nested ordering, or a forbidden pattern.
pub fn is_chain_graph(g: &Graph) -> ChainCheck {
    if let TwoColoring::Bipartite(sides) = g.bipartition() {
        let mut side_a: Vec<usize> = sides.vertices_on(Side::A).collect();
        side_a.sort_by_key(|&v| g.degree(v));
        let nested = side_a
            .windows(2)
            .all(|w| g.neighbor_row(w[0]).is_subset_of(g.neighbor_row(w[1])));
        if nested {
            return ChainCheck::Chain { ordered_side: side_a };
        }
    }
    for pattern in [Pattern::K3, Pattern::TwoK2, Pattern::C5] {
        if let Some(witness) = contains_induced_pattern(g, pattern) {
            return ChainCheck::NotChain { pattern, witness };
        }
    }
    unreachable!("a graph without induced K3, 2K2 and C5 is a chain graph");
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainSubgraphError {
    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<usize>),
    #[error("instance too large for the exact search ({rows} rows, {cols} columns)")]
    TooLarge { rows: usize, cols: usize },
}

/// Exact maximum chain subgraph of a bipartite graph: the largest edge
/// subset whose subgraph is 2K2-free. Exponential subset search over the
/// smaller side's rows; intended for m up to roughly 20.
///
/// In an optimal solution the rows can be ordered so each row keeps exactly
/// the neighbors common to it and every row above, so it suffices to
/// maximize the telescoping sum of intersection sizes over row subsets.
pub fn max_chain_subgraph(g: &Graph) -> Result<(usize, EdgeSet), ChainSubgraphError> {
    let sides = match g.bipartition() {
        TwoColoring::Bipartite(b) => b,
        TwoColoring::OddCycle(c) => return Err(ChainSubgraphError::NotBipartite(c)),
    };
    let busy = |v: &usize| g.degree(*v) > 0;
    let mut rows: Vec<usize> = sides.vertices_on(Side::A).filter(busy).collect();
    let mut cols: Vec<usize> = sides.vertices_on(Side::B).filter(busy).collect();
    if rows.len() > cols.len() {
        std::mem::swap(&mut rows, &mut cols);
    }
    if rows.len() > 22 || cols.len() > 64 {
        return Err(ChainSubgraphError::TooLarge { rows: rows.len(), cols: cols.len() });
    }

    let col_index: std::collections::HashMap<usize, usize> =
        cols.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let neighbor_mask: Vec<u64> = rows
        .iter()
        .map(|&r| g.neighbors(r).fold(0u64, |m, w| m | 1 << col_index[&w]))
        .collect();

    let full: usize = (1 << rows.len()) - 1;
    let all_cols = if cols.is_empty() { 0 } else { u64::MAX >> (64 - cols.len()) };
    // common[s] = columns adjacent to every row in s; f[s] = best value of a
    // chain whose top rows are exactly s.
    let mut common = vec![0u64; full + 1];
    let mut f = vec![0u32; full + 1];
    let mut pick = vec![0u8; full + 1];
    common[0] = all_cols;
    for s in 1..=full {
        let low = s.trailing_zeros() as usize;
        common[s] = common[s & (s - 1)] & neighbor_mask[low];
        let mut best = 0u32;
        let mut arg = low as u8;
        let mut rest = s;
        while rest != 0 {
            let r = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if f[s & !(1 << r)] > best {
                best = f[s & !(1 << r)];
                arg = r as u8;
            }
        }
        f[s] = best + common[s].count_ones();
        pick[s] = arg;
    }

    let mut ids = Vec::new();
    let mut s = full;
    while s != 0 {
        let r = pick[s] as usize;
        s &= !(1 << r);
        let mut t = common[s | 1 << r];
        // Re-read the block's common set: the peeled row owns it.
        while t != 0 {
            let c = t.trailing_zeros() as usize;
            t &= t - 1;
            ids.push(g.edge_id(rows[r], cols[c]).unwrap());
        }
    }
    let set = EdgeSet::new(ids);
    debug_assert_eq!(set.len() as u32, f[full]);
    debug_assert!(edge_subset_is_chain(g, &set));
    Ok((f[full] as usize, set))
}

/// Test-support check: the subgraph on exactly these edges is 2K2-free.
pub fn edge_subset_is_chain(g: &Graph, set: &EdgeSet) -> bool {
    let pairs = set.endpoint_pairs(g);
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let joined = [(a, c), (a, d), (b, c), (b, d)]
                .iter()
                .any(|&(x, y)| g.edge_id(x, y).is_some_and(|id| set.ids().contains(&id)));
            if !joined {
                return false;
            }
        }
    }
    true
}

/// The 8-vertex example graph: chordal bipartite, yet `L(G)^2` has a hole.
/// 1-based edges (1,3),(3,4),(3,5),(2,4),(4,6),(5,6),(5,7),(6,8).
pub fn hole_square_example() -> Graph {
    Graph::from_edge_list(
        8,
        &[(1, 3), (3, 4), (3, 5), (2, 4), (4, 6), (5, 6), (5, 7), (6, 8)],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn recognition_cases() {
        assert!(is_chordal_bipartite(&Graph::cycle(4)).is_yes());
        match is_chordal_bipartite(&Graph::cycle(6)) {
            ChordalBipartiteCheck::LongInducedCycle(c) => assert_eq!(c.len(), 6),
            other => panic!("C6 should fail on its own cycle, got {other:?}"),
        }
        match is_chordal_bipartite(&Graph::cycle(5)) {
            ChordalBipartiteCheck::NotBipartite(c) => assert_eq!(c.len(), 5),
            other => panic!("C5 is odd, got {other:?}"),
        }
        assert!(is_chordal_bipartite(&hole_square_example()).is_yes());
    }

    #[test]
    fn index_cases() {
        // All four C4 edges are pairwise within distance two.
        assert_eq!(strong_chromatic_index(&Graph::cycle(4)).unwrap(), 4);
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(strong_chromatic_index(&claw).unwrap(), 3);
        let fig = hole_square_example();
        assert_eq!(
            strong_chromatic_index(&fig).unwrap(),
            oracle::strong_chromatic_index(&fig).0
        );
        assert!(strong_chromatic_index(&Graph::cycle(5)).is_err());
        assert!(strong_chromatic_index(&Graph::cycle(6)).is_err());
    }

    #[test]
    fn square_of_example_has_a_hole() {
        let sq = line_graph_square(&hole_square_example());
        assert!(!oracle::is_chordal(sq.graph()));
    }

    #[test]
    fn chain_recognition() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_chain_graph(&claw).is_chain());

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        match is_chain_graph(&two_k2) {
            ChainCheck::NotChain { pattern, witness } => {
                assert_eq!(pattern, Pattern::TwoK2);
                assert_eq!(witness.len(), 4);
            }
            ChainCheck::Chain { .. } => panic!("2K2 is not a chain graph"),
        }

        // Equal neighborhoods nest trivially.
        assert!(is_chain_graph(&Graph::cycle(4)).is_chain());
        assert!(is_chain_graph(&Graph::empty(3)).is_chain());
        match is_chain_graph(&Graph::complete(3)) {
            ChainCheck::NotChain { pattern, .. } => assert_eq!(pattern, Pattern::K3),
            ChainCheck::Chain { .. } => panic!("K3 is not a chain graph"),
        }
        match is_chain_graph(&Graph::cycle(5)) {
            ChainCheck::NotChain { pattern, .. } => assert_eq!(pattern, Pattern::C5),
            ChainCheck::Chain { .. } => panic!("C5 is not a chain graph"),
        }
    }

    #[test]
    fn chain_ordering_is_nested() {
        // Half graph on 3+3: neighborhoods strictly nested.
        let g = Graph::from_edges(6, &[(0, 3), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5)]).unwrap();
        match is_chain_graph(&g) {
            ChainCheck::Chain { ordered_side } => {
                for w in ordered_side.windows(2) {
                    assert!(g.neighbor_row(w[0]).is_subset_of(g.neighbor_row(w[1])));
                }
            }
            ChainCheck::NotChain { .. } => panic!("half graph is a chain graph"),
        }
    }

    #[test]
    fn max_chain_subgraph_cases() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(max_chain_subgraph(&two_k2).unwrap().0, 1);
        assert_eq!(max_chain_subgraph(&Graph::cycle(4)).unwrap().0, 4);
        // Three consecutive C6 edges are a clique in the square but not a
        // chain; the best chain in C6 is any P4's three edges.
        assert_eq!(max_chain_subgraph(&Graph::cycle(6)).unwrap().0, 3);
        assert!(max_chain_subgraph(&Graph::complete(3)).is_err());
    }

    #[test]
    fn chain_witnesses_are_chains() {
        let graphs = [
            Graph::cycle(6),
            Graph::path(7),
            hole_square_example(),
            Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]).unwrap(),
        ];
        for g in &graphs {
            let (value, set) = max_chain_subgraph(g).unwrap();
            assert_eq!(set.len(), value);
            assert!(edge_subset_is_chain(g, &set));
        }
    }

    #[test]
    fn chain_value_never_exceeds_square_clique() {
        // And equals it in the C6-free cases among these.
        let g = Graph::path(6);
        let (value, _) = max_chain_subgraph(&g).unwrap();
        let clique = max_clique(line_graph_square(&g).graph()).len();
        assert_eq!(value, clique);
    }
}
