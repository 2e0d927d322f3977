//! Deterministic, seeded instance generators for the property and
//! acceptance suites.
//!
//! All randomness comes from ChaCha8 seeded with the caller's 64-bit seed,
//! so identical `(parameters, seed)` pairs reproduce identical instances on
//! every platform and run.

use crate::chordal_bipartite::is_chordal_bipartite;
use crate::graph::Graph;
use crate::permutation::Permutation;
use crate::tree_cograph::{DecompTree, LeafTree};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("generator gave up after {attempts} attempts ({what})")]
pub struct GeneratorExhausted {
    pub what: String,
    pub attempts: usize,
}

const MAX_ATTEMPTS: usize = 100_000;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labeled tree on `n >= 1` vertices (random Pruefer
/// sequence, decoded).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    random_tree_with(&mut rng_for(seed), n)
}

fn random_tree_with(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, &prufer_decode(n, &seq)).unwrap()
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut it = leaves.into_iter();
    let (a, b) = (it.next().unwrap(), it.next().unwrap());
    edges.push((a, b));
    edges
}

/// Random binary decomposition tree with `leaves >= 1` leaves. Each leaf is
/// independently a tree or co-tree on 1..=`max_leaf_n` vertices; internal
/// nodes are joins or unions with equal probability.
pub fn random_decomposition(leaves: usize, max_leaf_n: usize, seed: u64) -> DecompTree {
    assert!(leaves >= 1 && max_leaf_n >= 1);
    random_decomposition_with(&mut rng_for(seed), leaves, max_leaf_n)
}

fn random_decomposition_with(rng: &mut ChaCha8Rng, leaves: usize, max_leaf_n: usize) -> DecompTree {
    if leaves == 1 {
        let n = rng.gen_range(1..=max_leaf_n);
        let tree = random_tree_with(rng, n);
        let leaf = LeafTree::new(n, tree.edges().to_vec()).unwrap();
        return if rng.gen_bool(0.5) {
            DecompTree::TreeLeaf(leaf)
        } else {
            DecompTree::CoTreeLeaf(leaf)
        };
    }
    let left = rng.gen_range(1..leaves);
    let a = random_decomposition_with(rng, left, max_leaf_n);
    let b = random_decomposition_with(rng, leaves - left, max_leaf_n);
    if rng.gen_bool(0.5) {
        DecompTree::Join(Box::new(a), Box::new(b))
    } else {
        DecompTree::Union(Box::new(a), Box::new(b))
    }
}

/// Random permutation whose diagram realizes a connected bipartite graph,
/// by rejection. Errors out rather than looping forever when `n` admits few
/// (or no) such permutations in the sample budget.
pub fn random_bipartite_permutation(n: usize, seed: u64) -> Result<Permutation, GeneratorExhausted> {
    assert!(n >= 1);
    let mut rng = rng_for(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut bottom: Vec<usize> = (0..n).collect();
        bottom.shuffle(&mut rng);
        let p = Permutation::new(bottom).unwrap();
        let g = p.graph();
        if g.is_connected() && g.bipartition().is_bipartite() {
            return Ok(p);
        }
    }
    Err(GeneratorExhausted {
        what: format!("connected bipartite permutation on {n} points"),
        attempts: MAX_ATTEMPTS,
    })
}

/// Random bipartite graph: each vertex picks a side uniformly, then each
/// cross pair becomes an edge with probability `edge_percent`/100.
pub fn random_bipartite(n: usize, edge_percent: u32, seed: u64) -> Graph {
    random_bipartite_with(&mut rng_for(seed), n, edge_percent)
}

fn random_bipartite_with(rng: &mut ChaCha8Rng, n: usize, edge_percent: u32) -> Graph {
    let sides: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if sides[u] != sides[v] && rng.gen_ratio(edge_percent, 100) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &pairs).unwrap()
}

/// Random chordal bipartite graph: bipartite with edge probability 0.4,
/// rejection-sampled until no induced cycle longer than four remains.
/// Intended for n up to roughly 14 (the rejection rate grows quickly).
pub fn random_chordal_bipartite(n: usize, seed: u64) -> Result<Graph, GeneratorExhausted> {
    let mut rng = rng_for(seed);
    for _ in 0..MAX_ATTEMPTS {
        let g = random_bipartite_with(&mut rng, n, 40);
        if is_chordal_bipartite(&g).is_yes() {
            return Ok(g);
        }
    }
    Err(GeneratorExhausted {
        what: format!("chordal bipartite graph on {n} vertices"),
        attempts: MAX_ATTEMPTS,
    })
}
