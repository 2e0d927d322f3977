//! Permutation diagrams and the algorithms that live on them: the trapezoid
//! model of `L(G)^2`, greedy strong edge coloring, and the maximal-clique
//! sweep for bipartite permutation graphs.

use crate::graph::{EdgeId, Graph, TwoColoring};
use crate::linegraph::EdgeColoring;
use thiserror::Error;

/// A permutation diagram: labels `0..n-1` sit on the top line in natural
/// order, and `bottom[i]` is the label at bottom position `i`. Label `k`'s
/// segment connects top position `k` to bottom position `position(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    bottom: Vec<usize>,
    position: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("value {value} out of range 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("value {value} appears more than once")]
    Repeated { value: usize },
}

impl Permutation {
    /// Builds from a 0-based bottom-line order.
    pub fn new(bottom: Vec<usize>) -> Result<Permutation, PermutationError> {
        let n = bottom.len();
        let mut position = vec![usize::MAX; n];
        for (i, &label) in bottom.iter().enumerate() {
            if label >= n {
                return Err(PermutationError::OutOfRange { value: label + 1, n });
            }
            if position[label] != usize::MAX {
                return Err(PermutationError::Repeated { value: label + 1 });
            }
            position[label] = i;
        }
        Ok(Permutation { bottom, position })
    }

    /// Builds from the 1-based bottom-line order used in permutation files.
    pub fn from_one_based(bottom: &[usize]) -> Result<Permutation, PermutationError> {
        let n = bottom.len();
        let mut zero = Vec::with_capacity(n);
        for &label in bottom {
            if label < 1 || label > n {
                return Err(PermutationError::OutOfRange { value: label, n });
            }
            zero.push(label - 1);
        }
        Permutation::new(zero)
    }

    pub fn len(&self) -> usize {
        self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bottom.is_empty()
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// Bottom position of label `k`.
    pub fn position(&self, k: usize) -> usize {
        self.position[k]
    }

    /// Intersection graph of the diagram's segments: `u < v` are adjacent
    /// iff `v` comes before `u` on the bottom line.
    pub fn graph(&self) -> Graph {
        let n = self.len();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.position[u] > self.position[v] {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &pairs).unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    NotAPermutation(#[from] PermutationError),
}

/// Parses the permutation file format: line 1 is `n`, line 2 holds `n`
/// space-separated integers (the 1-based bottom-line order). Comment lines
/// starting with `#` are skipped.
pub fn parse_permutation(text: &str) -> Result<Permutation, PermutationFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (nline, ntext) = lines
        .next()
        .ok_or(PermutationFileError::Syntax { line: 1, msg: "missing size line".into() })?;
    let n: usize = ntext.parse().map_err(|_| PermutationFileError::Syntax {
        line: nline,
        msg: format!("bad size `{ntext}`"),
    })?;
    let values = if n == 0 {
        Vec::new()
    } else {
        let (vline, vtext) = lines.next().ok_or(PermutationFileError::Syntax {
            line: nline + 1,
            msg: "missing permutation line".into(),
        })?;
        vtext
            .split_ascii_whitespace()
            .map(|w| {
                w.parse::<usize>().map_err(|_| PermutationFileError::Syntax {
                    line: vline,
                    msg: format!("bad value `{w}`"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    if let Some((line, _)) = lines.next() {
        return Err(PermutationFileError::Syntax { line, msg: "trailing content".into() });
    }
    if values.len() != n {
        return Err(PermutationFileError::LengthMismatch { expected: n, found: values.len() });
    }
    Ok(Permutation::from_one_based(&values)?)
}

pub fn render_permutation(p: &Permutation) -> String {
    let values: Vec<String> = p.bottom().iter().map(|&l| (l + 1).to_string()).collect();
    format!("{}\n{}\n", p.len(), values.join(" "))
}

/// One trapezoid per edge: the top interval spans the endpoints' top
/// positions, the bottom interval their bottom positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Trapezoid {
    pub top_lo: usize,
    pub top_hi: usize,
    pub bot_lo: usize,
    pub bot_hi: usize,
    pub owner: EdgeId,
}

impl Trapezoid {
    /// Entirely left of `other` on both lines (the diagram's disjointness
    /// relation).
    pub fn left_of(&self, other: &Trapezoid) -> bool {
        self.top_hi < other.top_lo && self.bot_hi < other.bot_lo
    }

    pub fn intersects(&self, other: &Trapezoid) -> bool {
        !self.left_of(other) && !other.left_of(self)
    }
}

/// The trapezoids of the diagram, indexed by the [`EdgeId`]s of
/// [`Permutation::graph`]. Their intersection graph is `L(G)^2`.
pub fn trapezoid_model(p: &Permutation) -> Vec<Trapezoid> {
    let g = p.graph();
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            // u < v and the segments cross, so the bottom order is reversed.
            Trapezoid {
                top_lo: u,
                top_hi: v,
                bot_lo: p.position(v),
                bot_hi: p.position(u),
                owner: EdgeId(i),
            }
        })
        .collect()
}

/// Intersection graph of a trapezoid collection, one vertex per entry.
pub fn trapezoid_intersection_graph(traps: &[Trapezoid]) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..traps.len() {
        for j in i + 1..traps.len() {
            if traps[i].intersects(&traps[j]) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edges(traps.len(), &pairs).unwrap()
}

/// Greedy strong edge coloring of a permutation graph: sweep the trapezoids
/// of `L(G)^2` by `(top_lo, bot_lo, owner)` and give each the smallest color
/// not used by an earlier intersecting trapezoid.
pub fn greedy_strong_coloring(p: &Permutation) -> EdgeColoring {
    let mut traps = trapezoid_model(p);
    traps.sort_by_key(|t| (t.top_lo, t.bot_lo, t.owner));
    let mut colors = vec![usize::MAX; traps.len()];
    for i in 0..traps.len() {
        let mut taken = vec![false; i + 1];
        for j in 0..i {
            if traps[j].intersects(&traps[i]) {
                let c = colors[traps[j].owner.index()];
                if c < taken.len() {
                    taken[c] = true;
                }
            }
        }
        colors[traps[i].owner.index()] = taken.iter().position(|&t| !t).unwrap();
    }
    EdgeColoring::new(colors)
}

/// Checks whether the diagram's graph is bipartite.
pub fn is_bipartite_permutation(p: &Permutation) -> TwoColoring {
    p.graph().bipartition()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("permutation graph is not bipartite; odd cycle {0:?}")]
pub struct NotBipartite(pub Vec<usize>);

/// Strong chromatic index of a bipartite permutation graph by the
/// maximal-clique sweep over the diagram.
///
/// Each round takes the leftmost non-isolated topline vertex `a1`, the first
/// topline vertex `b1` of the other side whose segment crosses `a1`'s, and
/// scores the edge set incident to the complete bipartite subgraph around
/// them, for the current diagram and for the diagram minus `a1` and minus
/// `b1`; then both are deleted. Disconnected inputs are swept per component
/// and the maximum taken.
pub fn bp_strong_chromatic_index(p: &Permutation) -> Result<usize, NotBipartite> {
    let g = p.graph();
    let sides = match g.bipartition() {
        TwoColoring::Bipartite(b) => b,
        TwoColoring::OddCycle(c) => {
            return Err(NotBipartite(c.iter().map(|&v| v + 1).collect()));
        }
    };
    let mut best = 0;
    for comp in g.connected_components() {
        let mut active = vec![false; g.vertex_count()];
        for &v in &comp {
            active[v] = true;
        }
        while let Some(a1) = leftmost_non_isolated(&g, &active) {
            let side_a = sides.side(a1);
            let b1 = (0..g.vertex_count())
                .find(|&w| active[w] && sides.side(w) != side_a && g.adjacent(a1, w))
                .expect("a non-isolated vertex has a neighbor on the other side");
            best = best.max(clique_size(&g, p, &sides, &active));
            active[a1] = false;
            best = best.max(clique_size(&g, p, &sides, &active));
            active[a1] = true;
            active[b1] = false;
            best = best.max(clique_size(&g, p, &sides, &active));
            active[a1] = false;
        }
    }
    Ok(best)
}

fn leftmost_non_isolated(g: &Graph, active: &[bool]) -> Option<usize> {
    (0..g.vertex_count())
        .find(|&v| active[v] && g.neighbors(v).any(|w| active[w]))
}

/// Size of the maximal clique of `L(G)^2` anchored at the current leftmost
/// crossing pair: all active edges with an endpoint in the complete
/// bipartite subgraph around it.
fn clique_size(
    g: &Graph,
    p: &Permutation,
    sides: &crate::graph::Bipartition,
    active: &[bool],
) -> usize {
    let Some(a1) = leftmost_non_isolated(g, active) else { return 0 };
    let side_a = sides.side(a1);
    let b1 = (0..g.vertex_count())
        .find(|&w| active[w] && sides.side(w) != side_a && g.adjacent(a1, w))
        .expect("a non-isolated vertex has a neighbor on the other side");
    let mut in_m = vec![false; g.vertex_count()];
    in_m[a1] = true;
    in_m[b1] = true;
    for v in 0..g.vertex_count() {
        if !active[v] || in_m[v] {
            continue;
        }
        if sides.side(v) == side_a && v < b1 {
            // Topline endpoint left of b1's.
            in_m[v] = true;
        } else if sides.side(v) != side_a && p.position(v) < p.position(a1) {
            // Bottom endpoint left of a1's.
            in_m[v] = true;
        }
    }
    g.edges()
        .iter()
        .filter(|&&(u, v)| active[u] && active[v] && (in_m[u] || in_m[v]))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linegraph::{line_graph_square, verify_strong_edge_coloring};
    use crate::oracle;
    use crate::pattern::{contains_induced_pattern, Pattern};
    use crate::solver::{chromatic_number, max_clique};

    fn perm(values: &[usize]) -> Permutation {
        Permutation::from_one_based(values).unwrap()
    }

    #[test]
    fn graph_of_small_permutations() {
        assert_eq!(perm(&[2, 1]).graph(), Graph::complete(2));
        assert_eq!(perm(&[1, 2, 3]).graph(), Graph::empty(3));
    }

    #[test]
    fn graph_of_five_point_diagram() {
        // Bottom order 3 5 1 4 2.
        let g = perm(&[3, 5, 1, 4, 2]).graph();
        let expected =
            Graph::from_edge_list(5, &[(1, 3), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn permutation_validation() {
        assert!(matches!(
            Permutation::from_one_based(&[1, 1]),
            Err(PermutationError::Repeated { value: 1 })
        ));
        assert!(matches!(
            Permutation::from_one_based(&[0, 1]),
            Err(PermutationError::OutOfRange { value: 0, n: 2 })
        ));
        assert!(matches!(
            Permutation::from_one_based(&[3, 1]),
            Err(PermutationError::OutOfRange { value: 3, n: 2 })
        ));
    }

    #[test]
    fn permutation_file_round_trip() {
        let p = perm(&[3, 5, 1, 4, 2]);
        assert_eq!(parse_permutation(&render_permutation(&p)).unwrap(), p);
        assert!(parse_permutation("2\n1 1\n").is_err());
        assert!(parse_permutation("3\n1 2\n").is_err());
        assert!(parse_permutation("x\n").is_err());
        assert!(parse_permutation("").is_err());
    }

    #[test]
    fn single_edge_trapezoid() {
        let traps = trapezoid_model(&perm(&[2, 1]));
        assert_eq!(traps.len(), 1);
        let t = traps[0];
        assert_eq!((t.top_lo, t.top_hi, t.bot_lo, t.bot_hi), (0, 1, 0, 1));
    }

    #[test]
    fn disjoint_trapezoids_for_two_k2() {
        let traps = trapezoid_model(&perm(&[2, 1, 4, 3]));
        assert_eq!(traps.len(), 2);
        assert!(!traps[0].intersects(&traps[1]));
        assert!(traps[0].left_of(&traps[1]));
    }

    #[test]
    fn trapezoid_graph_equals_linegraph_square() {
        for values in [vec![3, 5, 1, 4, 2], vec![2, 1, 4, 3], vec![4, 3, 2, 1], vec![1, 2]] {
            let p = perm(&values);
            let traps = trapezoid_model(&p);
            assert_eq!(
                trapezoid_intersection_graph(&traps),
                *line_graph_square(&p.graph()).graph(),
                "permutation {values:?}"
            );
        }
    }

    #[test]
    fn greedy_coloring_small_cases() {
        assert_eq!(greedy_strong_coloring(&perm(&[2, 1])).color_count(), 1);
        assert_eq!(greedy_strong_coloring(&perm(&[2, 1, 4, 3])).color_count(), 1);
        assert_eq!(greedy_strong_coloring(&perm(&[1, 2, 3])).color_count(), 0);
        let p = perm(&[3, 5, 1, 4, 2]);
        let coloring = greedy_strong_coloring(&p);
        let g = p.graph();
        assert!(verify_strong_edge_coloring(&g, &coloring).is_ok());
        assert_eq!(coloring.color_count(), oracle::strong_chromatic_index(&g).0);
    }

    #[test]
    fn greedy_matches_exact_chromatic_number() {
        for values in [vec![3, 5, 1, 4, 2], vec![2, 4, 1, 3], vec![5, 4, 3, 2, 1], vec![2, 3, 1]] {
            let p = perm(&values);
            let g = p.graph();
            let coloring = greedy_strong_coloring(&p);
            assert!(verify_strong_edge_coloring(&g, &coloring).is_ok());
            let sq = line_graph_square(&g);
            assert_eq!(coloring.color_count(), chromatic_number(sq.graph()).0);
            assert_eq!(coloring.color_count(), max_clique(sq.graph()).len());
        }
    }

    #[test]
    fn bipartiteness_of_permutations() {
        assert!(is_bipartite_permutation(&perm(&[2, 1, 4, 3])).is_bipartite());
        assert!(is_bipartite_permutation(&perm(&[1, 2])).is_bipartite());
        // [3, 5, 1, 4, 2] contains the triangle {2, 4, 5}.
        let p = perm(&[3, 5, 1, 4, 2]);
        let g = p.graph();
        match is_bipartite_permutation(&p) {
            TwoColoring::OddCycle(c) => {
                assert!(c.len() % 2 == 1 && c.len() >= 3);
                for i in 0..c.len() {
                    assert!(g.adjacent(c[i], c[(i + 1) % c.len()]));
                }
            }
            TwoColoring::Bipartite(_) => panic!("graph has a triangle"),
        }
    }

    #[test]
    fn sweep_on_small_cases() {
        assert_eq!(bp_strong_chromatic_index(&perm(&[2, 1])).unwrap(), 1);
        // [2, 4, 1, 3] realizes P4.
        let p = perm(&[2, 4, 1, 3]);
        assert!(contains_induced_pattern(&p.graph(), Pattern::Cycle(3)).is_none());
        assert_eq!(bp_strong_chromatic_index(&p).unwrap(), 3);
        // Disconnected: two separate edges.
        assert_eq!(bp_strong_chromatic_index(&perm(&[2, 1, 4, 3])).unwrap(), 1);
        // Edgeless and empty diagrams.
        assert_eq!(bp_strong_chromatic_index(&perm(&[1, 2, 3])).unwrap(), 0);
        assert_eq!(bp_strong_chromatic_index(&perm(&[])).unwrap(), 0);
    }

    #[test]
    fn sweep_rejects_non_bipartite() {
        let err = bp_strong_chromatic_index(&perm(&[3, 5, 1, 4, 2])).unwrap_err();
        assert!(err.0.len() % 2 == 1 && err.0.len() >= 3);
    }

    #[test]
    fn sweep_agrees_with_oracle_on_k33() {
        // Reversal of the first half against the second: K(3,3).
        let p = perm(&[4, 5, 6, 1, 2, 3]);
        let g = p.graph();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(
            bp_strong_chromatic_index(&p).unwrap(),
            oracle::strong_chromatic_index(&g).0
        );
    }
}
