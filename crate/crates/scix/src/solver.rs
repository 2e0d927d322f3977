//! Exact solvers: maximum clique, chromatic number, maximum independent set.
//!
//! Branch and bound over bitset candidate sets, with greedy-coloring bounds
//! for the clique search and a DSATUR-style search for the chromatic number.
//! Exponential in the worst case; intended for desk-scale inputs (up to
//! roughly 64 vertices). Deterministic for a given input.

use crate::bitset::Bitset;
use crate::graph::Graph;

/// Maximum clique, returned as a sorted vertex list. Empty graph gives an
/// empty clique.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut best = greedy_clique(g);
    if n == 0 {
        return best;
    }
    let mut current = Vec::new();
    let candidates = Bitset::full(n);
    expand_clique(g, &mut current, &candidates, &mut best);
    best.sort_unstable();
    debug_assert!(is_clique(g, &best));
    best
}

fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.adjacent(u, v)))
}

/// Seed clique: repeatedly take the highest-degree vertex compatible with
/// the clique so far.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique = Vec::new();
    let mut allowed = Bitset::full(n);
    for v in order {
        if allowed.contains(v) {
            clique.push(v);
            allowed.intersect_with(g.neighbor_row(v));
        }
    }
    clique
}

/// Tomita-style expansion: candidates are greedily colored and processed in
/// reverse color order so the color index doubles as an upper bound.
fn expand_clique(g: &Graph, current: &mut Vec<usize>, candidates: &Bitset, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let (order, bounds) = color_order(g, candidates);
    let mut pool = candidates.clone();
    for i in (0..order.len()).rev() {
        let v = order[i];
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        current.push(v);
        let mut next = pool.intersection(g.neighbor_row(v));
        next.remove(v);
        expand_clique(g, current, &next, best);
        current.pop();
        pool.remove(v);
    }
}

/// Greedy (sequential) coloring of the candidate set. Returns the vertices
/// sorted by color class, with each vertex's 1-based color number.
fn color_order(g: &Graph, candidates: &Bitset) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = candidates.clone();
    let mut order = Vec::with_capacity(candidates.count());
    let mut bounds = Vec::with_capacity(candidates.count());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut class_candidates = uncolored.clone();
        while let Some(v) = class_candidates.smallest() {
            order.push(v);
            bounds.push(color);
            uncolored.remove(v);
            class_candidates.remove(v);
            class_candidates.difference_with(g.neighbor_row(v));
        }
    }
    (order, bounds)
}

/// Maximum independent set: maximum clique of the complement.
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

/// Exact chromatic number with a proper-coloring witness.
///
/// Conventions: the graph on 0 vertices needs 0 colors; an edgeless graph on
/// n >= 1 vertices needs 1.
pub fn chromatic_number(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    if g.edge_count() == 0 {
        return (1, vec![0; n]);
    }

    let clique = max_clique(g);
    let lower = clique.len();
    let (mut best_k, mut best_colors) = dsatur_greedy(g);
    debug_assert!(is_proper(g, &best_colors));
    if best_k > lower {
        // Branch and bound, seeded with the clique pre-colored.
        let mut colors = vec![usize::MAX; n];
        for (c, &v) in clique.iter().enumerate() {
            colors[v] = c;
        }
        dsatur_branch(g, &mut colors, lower, lower, &mut best_k, &mut best_colors);
    }
    debug_assert!(is_proper(g, &best_colors));
    debug_assert_eq!(best_colors.iter().copied().max().unwrap() + 1, best_k);
    (best_k, best_colors)
}

fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Greedy DSATUR: repeatedly color the vertex seeing the most distinct
/// neighbor colors. Gives the initial upper bound and witness.
fn dsatur_greedy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = select_dsatur(g, &colors).unwrap();
        let c = smallest_free_color(g, &colors, v);
        colors[v] = c;
        used = used.max(c + 1);
    }
    (used, colors)
}

fn select_dsatur(g: &Graph, colors: &[usize]) -> Option<usize> {
    (0..g.vertex_count())
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| (saturation(g, colors, v), g.degree(v)))
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> usize {
    let mut seen = 0u64;
    let mut count = 0;
    for w in g.neighbors(v) {
        let c = colors[w];
        if c != usize::MAX && c < 64 && seen >> c & 1 == 0 {
            seen |= 1 << c;
            count += 1;
        }
    }
    count
}

fn smallest_free_color(g: &Graph, colors: &[usize], v: usize) -> usize {
    let mut taken = vec![false; g.degree(v) + 1];
    for w in g.neighbors(v) {
        let c = colors[w];
        if c != usize::MAX && c < taken.len() {
            taken[c] = true;
        }
    }
    taken.iter().position(|&t| !t).unwrap()
}

fn dsatur_branch(
    g: &Graph,
    colors: &mut Vec<usize>,
    used: usize,
    lower: usize,
    best_k: &mut usize,
    best_colors: &mut Vec<usize>,
) {
    if used >= *best_k {
        return;
    }
    let Some(v) = select_dsatur(g, colors) else {
        // Everything colored with `used` < best_k colors.
        *best_k = used;
        *best_colors = colors.clone();
        return;
    };
    let mut blocked = vec![false; used + 1];
    for w in g.neighbors(v) {
        let c = colors[w];
        if c != usize::MAX && c <= used {
            blocked[c] = true;
        }
    }
    // Existing colors first; opening a new class is the last resort and only
    // if it stays under the incumbent.
    for c in (0..used).filter(|&c| !blocked[c]) {
        colors[v] = c;
        dsatur_branch(g, colors, used, lower, best_k, best_colors);
        colors[v] = usize::MAX;
        if *best_k == lower {
            return;
        }
    }
    if used + 1 < *best_k {
        colors[v] = used;
        dsatur_branch(g, colors, used + 1, lower, best_k, best_colors);
        colors[v] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linegraph::line_graph_square;

    #[test]
    fn clique_basics() {
        assert_eq!(max_clique(&Graph::complete(3)).len(), 3);
        assert_eq!(max_clique(&Graph::cycle(5)).len(), 2);
        assert_eq!(max_clique(&Graph::empty(0)).len(), 0);
        assert_eq!(max_clique(&Graph::empty(4)).len(), 1);
        // L(P4)^2 is a triangle.
        assert_eq!(max_clique(line_graph_square(&Graph::path(4)).graph()).len(), 3);
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&Graph::empty(3)).0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).0, 0);
        assert_eq!(chromatic_number(&Graph::cycle(5)).0, 3);
        assert_eq!(chromatic_number(&Graph::complete(4)).0, 4);
        // L(C4)^2 = K4.
        assert_eq!(chromatic_number(line_graph_square(&Graph::cycle(4)).graph()).0, 4);
    }

    #[test]
    fn chromatic_witness_is_proper() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])
            .unwrap();
        let (k, colors) = chromatic_number(&g);
        assert_eq!(k, 3);
        assert!(is_proper(&g, &colors));
        assert_eq!(colors.iter().max().unwrap() + 1, k);
    }

    #[test]
    fn independent_set_basics() {
        assert_eq!(max_independent_set(&Graph::complete(4)).len(), 1);
        assert_eq!(max_independent_set(&Graph::cycle(6)).len(), 3);
        // L(P5)^2: the two end edges are the only compatible pair.
        let sq = line_graph_square(&Graph::path(5));
        assert_eq!(max_independent_set(sq.graph()).len(), 2);
    }

    #[test]
    fn petersen_graph_parameters() {
        // Outer C5 0..4, inner pentagram 5..9, spokes i -> i+5.
        let pairs = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ];
        let g = Graph::from_edges(10, &pairs).unwrap();
        assert_eq!(max_clique(&g).len(), 2);
        assert_eq!(chromatic_number(&g).0, 3);
        assert_eq!(max_independent_set(&g).len(), 4);
    }

    #[test]
    fn random_graphs_clique_vs_mis_duality() {
        // alpha(G) == omega(complement(G)) must hold structurally; exercise
        // the two code paths against each other on a few seeds.
        for seed in 0..8u64 {
            let g = pseudo_random_graph(12, seed);
            let a = max_independent_set(&g).len();
            let w = max_clique(&g.complement()).len();
            assert_eq!(a, w);
            let (k, _) = chromatic_number(&g);
            assert!(k >= max_clique(&g).len());
        }
    }

    fn pseudo_random_graph(n: usize, seed: u64) -> Graph {
        // Tiny multiplicative hash; only the tests use this.
        let mut pairs = Vec::new();
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        for u in 0..n {
            for v in u + 1..n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 33 & 1 == 1 {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &pairs).unwrap()
    }
}
