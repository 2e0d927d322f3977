//! Tree-cographs: binary decomposition trees whose leaves are trees or
//! complements of trees and whose internal nodes are joins or disjoint
//! unions, plus linear-time recursions for the strong chromatic index and
//! maximum induced matchings over such trees.

use crate::graph::{Graph, GraphError};
use crate::linegraph::{verify_induced_matching, EdgeSet};
use thiserror::Error;

/// A validated tree stored at a decomposition leaf: `n` vertices and exactly
/// `n - 1` connecting edges, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafTree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeafTreeError {
    #[error("leaf vertex count must be positive")]
    EmptyLeaf,
    #[error("a tree on {n} vertices needs {} edges, found {found}", n - 1)]
    WrongEdgeCount { n: usize, found: usize },
    #[error(transparent)]
    BadEdge(#[from] GraphError),
    #[error("leaf edges are disconnected: vertices {separated:?} are cut off from vertex 1")]
    Disconnected { separated: Vec<usize> },
}

impl LeafTree {
    /// Validates 0-based edges as a tree on `n` vertices.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<LeafTree, LeafTreeError> {
        if n == 0 {
            return Err(LeafTreeError::EmptyLeaf);
        }
        if edges.len() != n - 1 {
            return Err(LeafTreeError::WrongEdgeCount { n, found: edges.len() });
        }
        let g = Graph::from_edges(n, &edges)?;
        let comps = g.connected_components();
        if comps.len() > 1 {
            let separated = comps[1].iter().map(|&v| v + 1).collect();
            return Err(LeafTreeError::Disconnected { separated });
        }
        Ok(LeafTree { n, edges: g.edges().to_vec() })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges).unwrap()
    }
}

/// Rooted binary decomposition tree of a tree-cograph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompTree {
    Join(Box<DecompTree>, Box<DecompTree>),
    Union(Box<DecompTree>, Box<DecompTree>),
    TreeLeaf(LeafTree),
    CoTreeLeaf(LeafTree),
}

impl DecompTree {
    /// Vertex count of the realized graph.
    pub fn realized_vertex_count(&self) -> usize {
        match self {
            DecompTree::Join(a, b) | DecompTree::Union(a, b) => {
                a.realized_vertex_count() + b.realized_vertex_count()
            }
            DecompTree::TreeLeaf(l) | DecompTree::CoTreeLeaf(l) => l.vertex_count(),
        }
    }
}

/// Builds the graph a decomposition tree denotes. The left child always
/// occupies the lower vertex indices.
pub fn realize(t: &DecompTree) -> Graph {
    match t {
        DecompTree::TreeLeaf(l) => l.to_graph(),
        DecompTree::CoTreeLeaf(l) => l.to_graph().complement(),
        DecompTree::Union(a, b) => realize(a).disjoint_union(&realize(b)),
        DecompTree::Join(a, b) => realize(a).join(&realize(b)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompParseError {
    #[error("offset {at}: {msg}")]
    Syntax { at: usize, msg: String },
    #[error("offset {at}: leaf is not a tree: {source}")]
    BadLeaf { at: usize, source: LeafTreeError },
}

/// Parses the whitespace-insensitive s-expression grammar
///
/// ```text
/// expr := "(join" expr expr ")" | "(union" expr expr ")" | leaf
/// leaf := "(tree" INT pair* ")" | "(cotree" INT pair* ")"
/// pair := "(" INT INT ")"
/// ```
///
/// where a leaf's INT is its vertex count and the pairs are its 1-based tree
/// edges.
pub fn parse_decomposition(text: &str) -> Result<DecompTree, DecompParseError> {
    let tokens = tokenize(text)?;
    let mut pos = 0;
    let tree = parse_expr(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(DecompParseError::Syntax {
            at: tokens[pos].at,
            msg: "trailing input after expression".into(),
        });
    }
    Ok(tree)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Open,
    Close,
    Word(String),
    Int(usize),
}

#[derive(Debug, Clone)]
struct Token {
    at: usize,
    kind: TokenKind,
}

fn tokenize(text: &str) -> Result<Vec<Token>, DecompParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            tokens.push(Token { at: i, kind: TokenKind::Open });
            i += 1;
        } else if c == ')' {
            tokens.push(Token { at: i, kind: TokenKind::Close });
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
                i += 1;
            }
            tokens.push(Token { at: start, kind: TokenKind::Word(text[start..i].to_string()) });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let value = text[start..i]
                .parse()
                .map_err(|_| DecompParseError::Syntax { at: start, msg: "number too large".into() })?;
            tokens.push(Token { at: start, kind: TokenKind::Int(value) });
        } else {
            return Err(DecompParseError::Syntax { at: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(tokens)
}

fn syntax(at: usize, msg: impl Into<String>) -> DecompParseError {
    DecompParseError::Syntax { at, msg: msg.into() }
}

fn next<'a>(tokens: &'a [Token], pos: &mut usize, expected: &str) -> Result<&'a Token, DecompParseError> {
    let t = tokens.get(*pos).ok_or_else(|| {
        syntax(tokens.last().map_or(0, |t| t.at + 1), format!("unexpected end of input, expected {expected}"))
    })?;
    *pos += 1;
    Ok(t)
}

fn parse_expr(tokens: &[Token], pos: &mut usize) -> Result<DecompTree, DecompParseError> {
    let open = next(tokens, pos, "`(`")?;
    if open.kind != TokenKind::Open {
        return Err(syntax(open.at, "expected `(`"));
    }
    let head = next(tokens, pos, "a node kind")?;
    let word = match &head.kind {
        TokenKind::Word(w) => w.as_str(),
        _ => return Err(syntax(head.at, "expected `join`, `union`, `tree` or `cotree`")),
    };
    match word {
        "join" | "union" => {
            let left = parse_expr(tokens, pos)?;
            let right = parse_expr(tokens, pos)?;
            expect_close(tokens, pos)?;
            Ok(if word == "join" {
                DecompTree::Join(Box::new(left), Box::new(right))
            } else {
                DecompTree::Union(Box::new(left), Box::new(right))
            })
        }
        "tree" | "cotree" => {
            let n_tok = next(tokens, pos, "a vertex count")?;
            let n = match n_tok.kind {
                TokenKind::Int(v) => v,
                _ => return Err(syntax(n_tok.at, "expected a vertex count")),
            };
            let mut pairs = Vec::new();
            loop {
                let t = next(tokens, pos, "`(` or `)`")?;
                match t.kind {
                    TokenKind::Close => break,
                    TokenKind::Open => {
                        let u = parse_int(tokens, pos)?;
                        let v = parse_int(tokens, pos)?;
                        expect_close(tokens, pos)?;
                        pairs.push((u, v));
                    }
                    _ => return Err(syntax(t.at, "expected an edge pair or `)`")),
                }
            }
            let leaf = leaf_from_one_based(n, &pairs)
                .map_err(|source| DecompParseError::BadLeaf { at: head.at, source })?;
            Ok(if word == "tree" {
                DecompTree::TreeLeaf(leaf)
            } else {
                DecompTree::CoTreeLeaf(leaf)
            })
        }
        other => Err(syntax(head.at, format!("unknown node kind `{other}`"))),
    }
}

fn parse_int(tokens: &[Token], pos: &mut usize) -> Result<usize, DecompParseError> {
    let t = next(tokens, pos, "a number")?;
    match t.kind {
        TokenKind::Int(v) => Ok(v),
        _ => Err(syntax(t.at, "expected a number")),
    }
}

fn expect_close(tokens: &[Token], pos: &mut usize) -> Result<(), DecompParseError> {
    let t = next(tokens, pos, "`)`")?;
    if t.kind != TokenKind::Close {
        return Err(syntax(t.at, "expected `)`"));
    }
    Ok(())
}

fn leaf_from_one_based(n: usize, pairs: &[(usize, usize)]) -> Result<LeafTree, LeafTreeError> {
    let mut zero = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        if u < 1 || v < 1 || u > n || v > n {
            return Err(GraphError::VertexOutOfRange { u, v, n }.into());
        }
        zero.push((u - 1, v - 1));
    }
    LeafTree::new(n, zero)
}

/// Renders a decomposition in the grammar accepted by
/// [`parse_decomposition`].
pub fn render_decomposition(t: &DecompTree) -> String {
    match t {
        DecompTree::Join(a, b) => {
            format!("(join {} {})", render_decomposition(a), render_decomposition(b))
        }
        DecompTree::Union(a, b) => {
            format!("(union {} {})", render_decomposition(a), render_decomposition(b))
        }
        DecompTree::TreeLeaf(l) => render_leaf("tree", l),
        DecompTree::CoTreeLeaf(l) => render_leaf("cotree", l),
    }
}

fn render_leaf(kind: &str, l: &LeafTree) -> String {
    let mut out = format!("({kind} {}", l.vertex_count());
    for &(u, v) in l.edges() {
        out.push_str(&format!(" ({} {})", u + 1, v + 1));
    }
    out.push(')');
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("input graph is not a tree (n = {n}, m = {m}, connected: {connected})")]
pub struct NotTreeError {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
}

fn ensure_tree(g: &Graph) -> Result<(), NotTreeError> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(NotTreeError {
            n: g.vertex_count(),
            m: g.edge_count(),
            connected: g.is_connected(),
        })
    }
}

/// Strong chromatic index of a tree: the largest `d(x) + d(y) - 1` over its
/// edges, 0 for the one-vertex tree.
pub fn tree_strong_chromatic_index(g: &Graph) -> Result<usize, NotTreeError> {
    ensure_tree(g)?;
    Ok(tree_formula(g.vertex_count(), g.edges()))
}

fn tree_formula(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    edges.iter().map(|&(u, v)| deg[u] + deg[v] - 1).max().unwrap_or(0)
}

/// Strong chromatic index of the complement of any tree on `n` vertices:
/// its nonedge count `C(n,2) - (n-1)`.
pub fn cotree_strong_chromatic_index(n: usize) -> usize {
    assert!(n >= 1, "vertex count must be positive");
    n * (n - 1) / 2 - (n - 1)
}

/// Strong chromatic index of a tree-cograph by a single bottom-up pass:
/// leaves use the tree/co-tree formulas, a union takes the maximum and a
/// join adds the cross-edge count `n1 * n2` to both children's values.
pub fn strong_chromatic_index(t: &DecompTree) -> usize {
    fn rec(t: &DecompTree) -> (usize, usize) {
        match t {
            DecompTree::TreeLeaf(l) => {
                (l.vertex_count(), tree_formula(l.vertex_count(), l.edges()))
            }
            DecompTree::CoTreeLeaf(l) => {
                (l.vertex_count(), cotree_strong_chromatic_index(l.vertex_count()))
            }
            DecompTree::Union(a, b) => {
                let (na, va) = rec(a);
                let (nb, vb) = rec(b);
                (na + nb, va.max(vb))
            }
            DecompTree::Join(a, b) => {
                let (na, va) = rec(a);
                let (nb, vb) = rec(b);
                (na + nb, na * nb + va + vb)
            }
        }
    }
    rec(t).1
}

/// Maximum induced matching of a tree, with a witness, by a rooted dynamic
/// program. Three states per vertex:
///
/// * `free`   - vertex not matched, subtree otherwise unrestricted;
/// * `clean`  - vertex and all its children unmatched, so the parent edge
///              may enter the matching;
/// * `matched`- vertex matched to one of its children.
pub fn tree_max_induced_matching(g: &Graph) -> Result<(usize, EdgeSet), NotTreeError> {
    ensure_tree(g)?;
    let n = g.vertex_count();
    if n <= 1 {
        return Ok((0, EdgeSet::new(Vec::new())));
    }

    // BFS from 0: `order` lists parents before children.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    order.push(0);
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in g.neighbors(v) {
            if parent[w] == usize::MAX && w != 0 {
                parent[w] = v;
                children[v].push(w);
                order.push(w);
            }
        }
    }

    let mut free = vec![0usize; n];
    let mut clean = vec![0usize; n];
    let mut matched: Vec<Option<usize>> = vec![None; n];
    let mut matched_child: Vec<usize> = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let mut sum_free = 0;
        let mut sum_best = 0;
        for &c in &children[v] {
            sum_free += free[c];
            sum_best += free[c].max(matched[c].unwrap_or(0));
        }
        clean[v] = sum_free;
        free[v] = sum_best;
        let mut best: Option<(usize, usize)> = None;
        for &c in &children[v] {
            let value = 1 + clean[c] + sum_free - free[c];
            if best.is_none_or(|(b, _)| value > b) {
                best = Some((value, c));
            }
        }
        if let Some((value, c)) = best {
            matched[v] = Some(value);
            matched_child[v] = c;
        }
    }

    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Free,
        Clean,
        Matched,
    }
    let mut state = vec![State::Free; n];
    state[0] = if matched[0].unwrap_or(0) > free[0] { State::Matched } else { State::Free };
    let mut pairs = Vec::new();
    for &v in &order {
        match state[v] {
            State::Free => {
                for &c in &children[v] {
                    state[c] = if matched[c].unwrap_or(0) > free[c] {
                        State::Matched
                    } else {
                        State::Free
                    };
                }
            }
            State::Clean => {
                for &c in &children[v] {
                    state[c] = State::Free;
                }
            }
            State::Matched => {
                let star = matched_child[v];
                pairs.push((v, star));
                for &c in &children[v] {
                    state[c] = if c == star { State::Clean } else { State::Free };
                }
            }
        }
    }

    let size = free[0].max(matched[0].unwrap_or(0));
    assert_eq!(pairs.len(), size, "witness reconstruction out of sync");
    let ids = pairs.iter().map(|&(u, v)| g.edge_id(u, v).unwrap()).collect();
    let set = EdgeSet::new(ids);
    verify_induced_matching(g, &set).expect("tree DP produced an invalid matching");
    Ok((size, set))
}

/// Maximum induced matching of a tree-cograph, with a witness valid in
/// [`realize`]`(t)`. Co-tree leaves contribute one matched nonedge when they
/// have any (leaf trees on at least 3 vertices); unions add, joins take the
/// best side or a single cross edge.
pub fn max_induced_matching(t: &DecompTree) -> (usize, EdgeSet) {
    fn rec(t: &DecompTree) -> (usize, usize, Vec<(usize, usize)>) {
        match t {
            DecompTree::TreeLeaf(l) => {
                let g = l.to_graph();
                let (size, set) = tree_max_induced_matching(&g).unwrap();
                (l.vertex_count(), size, set.endpoint_pairs(&g))
            }
            DecompTree::CoTreeLeaf(l) => {
                let n = l.vertex_count();
                if n >= 3 {
                    // Any nonedge of the leaf tree is an edge of the
                    // realization; n >= 3 guarantees one exists.
                    let g = l.to_graph();
                    let pair = (0..n)
                        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                        .find(|&(u, v)| !g.adjacent(u, v))
                        .expect("a tree on >= 3 vertices has a nonedge");
                    (n, 1, vec![pair])
                } else {
                    (n, 0, Vec::new())
                }
            }
            DecompTree::Union(a, b) => {
                let (na, sa, pa) = rec(a);
                let (nb, sb, pb) = rec(b);
                let mut pairs = pa;
                pairs.extend(pb.into_iter().map(|(u, v)| (u + na, v + na)));
                (na + nb, sa + sb, pairs)
            }
            DecompTree::Join(a, b) => {
                let (na, sa, pa) = rec(a);
                let (nb, sb, pb) = rec(b);
                if sa == 0 && sb == 0 {
                    // Both sides edge-free for matching purposes; one cross
                    // edge always exists.
                    (na + nb, 1, vec![(0, na)])
                } else if sa >= sb {
                    (na + nb, sa, pa)
                } else {
                    (na + nb, sb, pb.into_iter().map(|(u, v)| (u + na, v + na)).collect())
                }
            }
        }
    }
    let (_, size, pairs) = rec(t);
    let g = realize(t);
    let ids = pairs
        .iter()
        .map(|&(u, v)| g.edge_id(u, v).expect("witness pair is an edge of the realization"))
        .collect();
    let set = EdgeSet::new(ids);
    verify_induced_matching(&g, &set).expect("recursion produced an invalid matching");
    debug_assert_eq!(set.len(), size);
    (size, set)
}
