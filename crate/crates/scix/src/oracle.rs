//! Ground-truth oracle: exact strong chromatic index and maximum induced
//! matching through `L(G)^2`, plus a chordality check. Every class-specific
//! algorithm in this crate is tested against these.

use crate::graph::{EdgeId, Graph};
use crate::linegraph::{
    line_graph_square, verify_induced_matching, verify_strong_edge_coloring, EdgeColoring, EdgeSet,
};
use crate::pattern::has_induced_cycle_longer_than;
use crate::solver::{chromatic_number, max_independent_set};

/// Exact strong chromatic index: the chromatic number of `L(G)^2`, with a
/// certificate. An edgeless graph needs 0 colors.
pub fn strong_chromatic_index(g: &Graph) -> (usize, EdgeColoring) {
    let sq = line_graph_square(g);
    let (k, colors) = chromatic_number(sq.graph());
    let coloring = EdgeColoring::new(colors);
    debug_assert_eq!(coloring.color_count(), k);
    verify_strong_edge_coloring(g, &coloring).expect("oracle produced an invalid strong coloring");
    (k, coloring)
}

/// Exact maximum induced matching: a maximum independent set of `L(G)^2`,
/// with the witness edge set.
pub fn max_induced_matching(g: &Graph) -> (usize, EdgeSet) {
    let sq = line_graph_square(g);
    let ids = max_independent_set(sq.graph());
    let set = EdgeSet::new(ids.into_iter().map(EdgeId).collect());
    verify_induced_matching(g, &set).expect("oracle produced an invalid induced matching");
    (set.len(), set)
}

/// Chordality by simplicial elimination: `Ok` carries a perfect elimination
/// ordering, `Err` a chordless cycle of length at least four.
pub fn chordality(g: &Graph) -> Result<Vec<usize>, Vec<usize>> {
    let n = g.vertex_count();
    let mut alive: Vec<bool> = vec![true; n];
    let mut rows: Vec<_> = (0..n).map(|v| g.neighbor_row(v).clone()).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let simplicial = (0..n).find(|&v| {
            alive[v]
                && rows[v]
                    .iter()
                    .all(|u| {
                        let mut rest = rows[v].clone();
                        rest.remove(u);
                        rest.is_subset_of(g.neighbor_row(u))
                    })
        });
        match simplicial {
            Some(v) => {
                order.push(v);
                alive[v] = false;
                for u in rows[v].clone().iter() {
                    rows[u].remove(v);
                }
                rows[v] = crate::bitset::Bitset::new(n);
            }
            None => {
                let hole = has_induced_cycle_longer_than(g, 3)
                    .expect("no simplicial vertex left, yet no hole found");
                return Err(hole);
            }
        }
    }
    Ok(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strong_index_small_cases() {
        assert_eq!(strong_chromatic_index(&Graph::complete(2)).0, 1);
        assert_eq!(strong_chromatic_index(&Graph::path(4)).0, 3);
        // Every pair of C5 edges is within distance two.
        assert_eq!(strong_chromatic_index(&Graph::cycle(5)).0, 5);
        assert_eq!(strong_chromatic_index(&Graph::empty(3)).0, 0);
    }

    #[test]
    fn induced_matching_small_cases() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(max_induced_matching(&two_k2).0, 2);
        assert_eq!(max_induced_matching(&Graph::path(4)).0, 1);
        assert_eq!(max_induced_matching(&Graph::path(5)).0, 2);
        assert_eq!(max_induced_matching(&Graph::empty(2)).0, 0);
    }

    #[test]
    fn certificates_always_verify() {
        for (n, pairs) in [
            (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            (6, vec![(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]),
            (4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
        ] {
            let g = Graph::from_edges(n, &pairs).unwrap();
            let (k, coloring) = strong_chromatic_index(&g);
            assert_eq!(coloring.color_count(), k);
            assert!(verify_strong_edge_coloring(&g, &coloring).is_ok());
            let (s, matching) = max_induced_matching(&g);
            assert_eq!(matching.len(), s);
            assert!(verify_induced_matching(&g, &matching).is_ok());
        }
    }

    #[test]
    fn chordality_basics() {
        assert!(is_chordal(&Graph::path(6)));
        assert!(is_chordal(&Graph::complete(5)));
        match chordality(&Graph::cycle(4)) {
            Err(hole) => assert_eq!(hole.len(), 4),
            Ok(_) => panic!("C4 is not chordal"),
        }
        // A chordal graph with a non-trivial elimination ordering.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let peo = chordality(&g).unwrap();
        assert_eq!(peo.len(), 5);
    }

    #[test]
    fn peo_is_perfect() {
        // Later neighbors of each vertex in the ordering must form a clique.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)])
            .unwrap();
        let peo = chordality(&g).unwrap();
        let position: Vec<usize> = {
            let mut p = vec![0; 6];
            for (i, &v) in peo.iter().enumerate() {
                p[v] = i;
            }
            p
        };
        for &v in &peo {
            let later: Vec<usize> =
                g.neighbors(v).filter(|&u| position[u] > position[v]).collect();
            for i in 0..later.len() {
                for j in i + 1..later.len() {
                    assert!(g.adjacent(later[i], later[j]));
                }
            }
        }
    }
}
