//! Exhaustive induced-subgraph search for a small catalogue of patterns and
//! for long induced cycles.
//!
//! The searches are exact and exponential in the worst case; they are meant
//! for desk-scale graphs (n up to roughly 40 for the fixed patterns, 30 for
//! cycle searches). Every returned witness is re-verified against the host
//! graph before it is handed out.

use crate::bitset::Bitset;
use crate::graph::Graph;
use thiserror::Error;

/// Fixed pattern catalogue. `Cycle(k)` is the induced cycle on `k >= 3`
/// vertices; `C5`/`C6`/`K3` are aliases kept for readable call sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    K3,
    TwoK2,
    C5,
    C6,
    Claw,
    Gem,
    Cycle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown pattern name `{0}`")]
pub struct UnknownPattern(pub String);

impl std::str::FromStr for Pattern {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k3" => Ok(Pattern::K3),
            "2k2" => Ok(Pattern::TwoK2),
            "claw" => Ok(Pattern::Claw),
            "gem" => Ok(Pattern::Gem),
            c => {
                if let Some(k) = c.strip_prefix('c').and_then(|k| k.parse::<usize>().ok()) {
                    if k >= 3 {
                        return Ok(match k {
                            5 => Pattern::C5,
                            6 => Pattern::C6,
                            _ => Pattern::Cycle(k),
                        });
                    }
                }
                Err(UnknownPattern(s.to_string()))
            }
        }
    }
}

impl Pattern {
    fn as_cycle_len(&self) -> Option<usize> {
        match *self {
            Pattern::K3 => Some(3),
            Pattern::C5 => Some(5),
            Pattern::C6 => Some(6),
            Pattern::Cycle(k) => Some(k),
            _ => None,
        }
    }

    fn model(&self) -> Graph {
        match *self {
            Pattern::TwoK2 => Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
            Pattern::Claw => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
            // P4 on 0..3 plus a vertex adjacent to the whole path.
            Pattern::Gem => Graph::from_edges(
                5,
                &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
            )
            .unwrap(),
            Pattern::K3 | Pattern::C5 | Pattern::C6 => Graph::cycle(self.as_cycle_len().unwrap()),
            Pattern::Cycle(k) => Graph::cycle(k),
        }
    }
}

/// Finds an induced copy of `pattern` in `g`, returning its vertex set
/// (ordered to match the pattern for cycles: consecutive witness vertices are
/// cycle-adjacent).
pub fn contains_induced_pattern(g: &Graph, pattern: Pattern) -> Option<Vec<usize>> {
    let witness = match pattern.as_cycle_len() {
        Some(k) => induced_cycle_exact(g, k),
        None => find_induced_embedding(g, &pattern.model()),
    }?;
    assert!(
        is_induced_copy(g, &pattern.model(), &witness),
        "search returned a non-induced embedding"
    );
    Some(witness)
}

/// Searches for an induced cycle of length strictly greater than `k`
/// (`k >= 3`). Exhaustive: `None` means no such cycle exists.
pub fn has_induced_cycle_longer_than(g: &Graph, k: usize) -> Option<Vec<usize>> {
    assert!(k >= 3);
    induced_cycle_search(g, k + 1, None)
}

/// Induced cycle of length exactly `k`, if any.
pub fn induced_cycle_exact(g: &Graph, k: usize) -> Option<Vec<usize>> {
    assert!(k >= 3);
    induced_cycle_search(g, k, Some(k))
}

/// DFS over chordless paths. Cycles are canonicalized by their smallest
/// vertex: the path starts at `v0` and only visits larger vertices.
fn induced_cycle_search(g: &Graph, min_len: usize, exact: Option<usize>) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < min_len {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    for v0 in 0..n {
        let low: Bitset = { // v0 and everything below it is off limits
            let mut s = Bitset::new(n);
            for u in 0..=v0 {
                s.insert(u);
            }
            s
        };
        for v1 in g.neighbors(v0) {
            if v1 <= v0 {
                continue;
            }
            path.clear();
            path.push(v0);
            path.push(v1);
            // Forbidden = path vertices plus (as the path grows) neighbors of
            // interior vertices; neighbors of v0 are handled separately so
            // the cycle can close there.
            let mut forbidden = low.clone();
            forbidden.insert(v1);
            if let Some(found) = extend_path(g, &mut path, forbidden, min_len, exact) {
                let cycle = found;
                debug_assert!(is_induced_cycle(g, &cycle));
                return Some(cycle);
            }
        }
    }
    None
}

fn extend_path(
    g: &Graph,
    path: &mut Vec<usize>,
    forbidden: Bitset,
    min_len: usize,
    exact: Option<usize>,
) -> Option<Vec<usize>> {
    let v0 = path[0];
    let last = *path.last().unwrap();
    let mut candidates = g.neighbor_row(last).clone();
    candidates.difference_with(&forbidden);
    for w in candidates.iter() {
        let closes = g.adjacent(w, v0);
        if closes {
            let len = path.len() + 1;
            if len >= min_len && exact.is_none_or(|e| len == e) {
                let mut cycle = path.clone();
                cycle.push(w);
                return Some(cycle);
            }
            // w is adjacent to v0, so it can only ever close the cycle;
            // extending through it would leave a chord.
            continue;
        }
        if let Some(e) = exact {
            if path.len() + 1 >= e {
                continue;
            }
        }
        let mut next_forbidden = forbidden.clone();
        next_forbidden.union_with(g.neighbor_row(last));
        next_forbidden.insert(w);
        path.push(w);
        if let Some(found) = extend_path(g, path, next_forbidden, min_len, exact) {
            return Some(found);
        }
        path.pop();
    }
    None
}

/// Backtracking injective embedding of `h` into `g` with exact adjacency
/// match (induced). Pattern vertices are processed in an order that keeps
/// each new slot constrained by as many placed slots as possible.
fn find_induced_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let hn = h.vertex_count();
    let n = g.vertex_count();
    if hn > n {
        return None;
    }
    let order = constraint_order(h);
    // Complement rows of g, used for "must be non-adjacent" constraints.
    let nonadj: Vec<Bitset> = (0..n)
        .map(|v| {
            let mut row = g.neighbor_row(v).clone();
            row.invert();
            row.remove(v);
            row
        })
        .collect();
    let mut used = Bitset::new(n);
    let mut map = vec![usize::MAX; hn];
    fn rec(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        nonadj: &[Bitset],
        depth: usize,
        used: &mut Bitset,
        map: &mut Vec<usize>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        let mut cand = used.clone();
        cand.invert();
        for &q in &order[..depth] {
            let gq = map[q];
            if h.adjacent(p, q) {
                cand.intersect_with(g.neighbor_row(gq));
            } else {
                cand.intersect_with(&nonadj[gq]);
            }
        }
        for v in cand.iter() {
            map[p] = v;
            used.insert(v);
            if rec(g, h, order, nonadj, depth + 1, used, map) {
                return true;
            }
            used.remove(v);
            map[p] = usize::MAX;
        }
        false
    }
    if rec(g, h, &order, &nonadj, 0, &mut used, &mut map) {
        debug_assert!(is_induced_copy(g, h, &map));
        Some(map)
    } else {
        None
    }
}

fn constraint_order(h: &Graph) -> Vec<usize> {
    let hn = h.vertex_count();
    let mut order = Vec::with_capacity(hn);
    let mut placed = vec![false; hn];
    for _ in 0..hn {
        let best = (0..hn)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = h.neighbors(v).filter(|&u| placed[u]).count();
                (anchored, h.degree(v))
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }
    order
}

/// `map[i]` hosts pattern vertex `i`; adjacency must match exactly.
pub fn is_induced_copy(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if map.len() != h.vertex_count() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !map.iter().all(|&v| v < g.vertex_count() && seen.insert(v)) {
        return false;
    }
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if g.adjacent(map[i], map[j]) != h.adjacent(i, j) {
                return false;
            }
        }
    }
    true
}

pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    is_induced_copy(g, &Graph::cycle(cycle.len()), cycle)
}
