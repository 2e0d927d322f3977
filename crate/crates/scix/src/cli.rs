//! Command-line front end: parse inputs, dispatch to the class algorithms
//! or the oracle, emit single-line JSON on stdout.
//!
//! Exit codes: 0 success, 1 malformed input, 2 class precondition violated,
//! 3 invalid certificate, 4 generator exhaustion. Diagnostics go to stderr.

use crate::chordal_bipartite;
use crate::graph::{parse_dimacs, to_dimacs, Graph};
use crate::linegraph::{
    verify_induced_matching, verify_strong_edge_coloring, ColoringCertificate, EdgeColoring,
    EdgeSet, MatchingCertificate,
};
use crate::oracle;
use crate::permutation::{
    bp_strong_chromatic_index, greedy_strong_coloring, parse_permutation, render_permutation,
    Permutation,
};
use crate::testkit;
use crate::tree_cograph::{self, parse_decomposition, realize, render_decomposition};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "scix", version, about = "Strong chromatic index and induced matching toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SciClass {
    /// Decomposition file; linear recursion.
    TreeCograph,
    /// Permutation file; greedy trapezoid coloring.
    Permutation,
    /// Permutation file; maximal-clique sweep (must be bipartite).
    Bipperm,
    /// Graph file; clique number of the linegraph square.
    ChordalBipartite,
    /// Graph file; exact solver on the linegraph square.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ImClass {
    TreeCograph,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// DIMACS-like graph file.
    Graph,
    /// Permutation file; the realized graph is verified against.
    Permutation,
    /// Decomposition file; the realized graph is verified against.
    TreeCograph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Random tree, as a graph file.
    Tree,
    /// Random decomposition tree, as a decomposition file.
    Decomp,
    /// Uniform random permutation file.
    Perm,
    /// Random connected bipartite permutation file.
    Bipperm,
    /// Random chordal bipartite graph file.
    ChordalBipartite,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Strong chromatic index of the input under the given class algorithm.
    Sci {
        #[arg(long, value_enum)]
        class: SciClass,
        #[arg(long)]
        input: PathBuf,
        /// Also print the coloring (supported by `permutation` and `oracle`).
        #[arg(long)]
        certificate: bool,
        /// Edge cap for the exact solvers.
        #[arg(long, default_value_t = 48)]
        max_oracle_edges: usize,
    },
    /// Maximum induced matching size plus a verified matching.
    Im {
        #[arg(long, value_enum)]
        class: ImClass,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 64)]
        max_oracle_edges: usize,
    },
    /// Greedy strong edge coloring of a permutation graph, with certificate.
    Color {
        #[arg(long)]
        input: PathBuf,
    },
    /// Check a coloring or matching certificate against a graph.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
        /// How to read `--input`.
        #[arg(long, value_enum, default_value_t = InputKind::Graph)]
        class: InputKind,
    },
    /// Emit a random instance file on stdout.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Vertex count (leaf count for `decomp`).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Largest leaf size for `decomp`.
        #[arg(long, default_value_t = 4)]
        max_leaf_n: usize,
    },
    /// Oracle measurements of one graph: sci, im, and linegraph-square data.
    OracleStats {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 48)]
        max_oracle_edges: usize,
    },
}

/// Failure modes, ordered by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Exit 1: unreadable or malformed input.
    Input(String),
    /// Exit 2: the input is readable but violates the class precondition.
    Precondition(String),
    /// Exit 3: a well-formed certificate that does not verify.
    InvalidCertificate(String),
    /// Exit 4: a generator ran out of attempts.
    Exhausted(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::InvalidCertificate(_) => 3,
            CliError::Exhausted(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m)
            | CliError::Precondition(m)
            | CliError::InvalidCertificate(m)
            | CliError::Exhausted(m) => m,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_dimacs(&read_file(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_permutation(path: &Path) -> Result<Permutation, CliError> {
    parse_permutation(&read_file(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_decomposition(path: &Path) -> Result<tree_cograph::DecompTree, CliError> {
    parse_decomposition(&read_file(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn check_oracle_cap(g: &Graph, cap: usize) -> Result<(), CliError> {
    if g.edge_count() > cap {
        return Err(CliError::Precondition(format!(
            "graph has {} edges; the exact solver cap is {cap} (raise with --max-oracle-edges)",
            g.edge_count()
        )));
    }
    Ok(())
}

fn coloring_json(g: &Graph, c: &EdgeColoring) -> serde_json::Value {
    serde_json::to_value(ColoringCertificate::from_coloring(g, c).coloring).unwrap()
}

fn matching_json(g: &Graph, s: &EdgeSet) -> serde_json::Value {
    serde_json::to_value(MatchingCertificate::from_edge_set(g, s).matching).unwrap()
}

/// Runs a parsed command, printing its JSON result on success.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sci { class, input, certificate, max_oracle_edges } => {
            cmd_sci(class, &input, certificate, max_oracle_edges)
        }
        Command::Im { class, input, max_oracle_edges } => cmd_im(class, &input, max_oracle_edges),
        Command::Color { input } => cmd_color(&input),
        Command::Verify { input, certificate, class } => cmd_verify(&input, &certificate, class),
        Command::Gen { kind, n, seed, max_leaf_n } => cmd_gen(kind, n, seed, max_leaf_n),
        Command::OracleStats { input, max_oracle_edges } => {
            cmd_oracle_stats(&input, max_oracle_edges)
        }
    }
}

fn cmd_sci(
    class: SciClass,
    input: &Path,
    certificate: bool,
    max_oracle_edges: usize,
) -> Result<(), CliError> {
    let mut out = json!({"problem": "sci"});
    match class {
        SciClass::TreeCograph => {
            let t = load_decomposition(input)?;
            out["class"] = json!("tree-cograph");
            out["value"] = json!(tree_cograph::strong_chromatic_index(&t));
            if certificate {
                eprintln!("note: class tree-cograph does not emit a coloring certificate");
            }
        }
        SciClass::Permutation => {
            let p = load_permutation(input)?;
            let g = p.graph();
            let coloring = greedy_strong_coloring(&p);
            verify_strong_edge_coloring(&g, &coloring)
                .map_err(|e| CliError::InvalidCertificate(format!("greedy coloring failed: {e}")))?;
            out["class"] = json!("permutation");
            out["value"] = json!(coloring.color_count());
            if certificate {
                out["coloring"] = coloring_json(&g, &coloring);
            }
        }
        SciClass::Bipperm => {
            let p = load_permutation(input)?;
            let value = bp_strong_chromatic_index(&p).map_err(|e| {
                CliError::Precondition(format!("class bipperm needs a bipartite diagram: {e}"))
            })?;
            out["class"] = json!("bipperm");
            out["value"] = json!(value);
            if certificate {
                eprintln!("note: class bipperm computes a count only");
            }
        }
        SciClass::ChordalBipartite => {
            let g = load_graph(input)?;
            let value = chordal_bipartite::strong_chromatic_index(&g)
                .map_err(|e| CliError::Precondition(format!("not chordal bipartite: {e}")))?;
            out["class"] = json!("chordal-bipartite");
            out["value"] = json!(value);
            if certificate {
                eprintln!("note: class chordal-bipartite computes a count only");
            }
        }
        SciClass::Oracle => {
            let g = load_graph(input)?;
            check_oracle_cap(&g, max_oracle_edges)?;
            let (value, coloring) = oracle::strong_chromatic_index(&g);
            out["class"] = json!("oracle");
            out["value"] = json!(value);
            if certificate {
                out["coloring"] = coloring_json(&g, &coloring);
            }
        }
    }
    println!("{out}");
    Ok(())
}

fn cmd_im(class: ImClass, input: &Path, max_oracle_edges: usize) -> Result<(), CliError> {
    let (g, value, matching) = match class {
        ImClass::TreeCograph => {
            let t = load_decomposition(input)?;
            let (value, matching) = tree_cograph::max_induced_matching(&t);
            (realize(&t), value, matching)
        }
        ImClass::Oracle => {
            let g = load_graph(input)?;
            check_oracle_cap(&g, max_oracle_edges)?;
            let (value, matching) = oracle::max_induced_matching(&g);
            (g, value, matching)
        }
    };
    verify_induced_matching(&g, &matching)
        .map_err(|e| CliError::InvalidCertificate(format!("matching failed verification: {e}")))?;
    let out = json!({
        "problem": "im",
        "value": value,
        "matching": matching_json(&g, &matching),
    });
    println!("{out}");
    Ok(())
}

fn cmd_color(input: &Path) -> Result<(), CliError> {
    let p = load_permutation(input)?;
    let g = p.graph();
    let coloring = greedy_strong_coloring(&p);
    verify_strong_edge_coloring(&g, &coloring)
        .map_err(|e| CliError::InvalidCertificate(format!("greedy coloring failed: {e}")))?;
    let out = json!({
        "problem": "color",
        "class": "permutation",
        "value": coloring.color_count(),
        "coloring": coloring_json(&g, &coloring),
    });
    println!("{out}");
    Ok(())
}

#[derive(Debug, serde::Deserialize)]
#[serde(untagged)]
enum AnyCertificate {
    Coloring(ColoringCertificate),
    Matching(MatchingCertificate),
}

fn cmd_verify(input: &Path, certificate: &Path, class: InputKind) -> Result<(), CliError> {
    let g = match class {
        InputKind::Graph => load_graph(input)?,
        InputKind::Permutation => load_permutation(input)?.graph(),
        InputKind::TreeCograph => realize(&load_decomposition(input)?),
    };
    let text = read_file(certificate)?;
    let cert: AnyCertificate = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: bad certificate: {e}", certificate.display())))?;
    let violation: Option<String> = match &cert {
        AnyCertificate::Coloring(c) => {
            let coloring = decode(c.to_coloring(&g))?;
            verify_strong_edge_coloring(&g, &coloring).err().map(|e| e.to_string())
        }
        AnyCertificate::Matching(m) => {
            let set = decode(m.to_edge_set(&g))?;
            verify_induced_matching(&g, &set).err().map(|e| e.to_string())
        }
    };
    match violation {
        None => {
            println!("{}", json!({"valid": true}));
            Ok(())
        }
        Some(msg) => {
            println!("{}", json!({"valid": false, "violation": msg}));
            Err(CliError::InvalidCertificate(msg))
        }
    }
}

/// Structural certificate decoding errors. A claimed value that disagrees
/// with the carried data is an invalid certificate; everything else means
/// the certificate does not match the graph (malformed input).
fn decode<T>(r: Result<T, crate::linegraph::CertificateError>) -> Result<T, CliError> {
    use crate::linegraph::CertificateError;
    r.map_err(|e| match e {
        CertificateError::ValueMismatch { .. } => CliError::InvalidCertificate(e.to_string()),
        _ => CliError::Input(e.to_string()),
    })
}

fn cmd_gen(kind: GenKind, n: usize, seed: u64, max_leaf_n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Input("--n must be positive".into()));
    }
    let text = match kind {
        GenKind::Tree => to_dimacs(&testkit::random_tree(n, seed)),
        GenKind::Decomp => {
            let t = testkit::random_decomposition(n, max_leaf_n, seed);
            format!("{}\n", render_decomposition(&t))
        }
        GenKind::Perm => {
            // A plain shuffle; the class algorithms validate on their own.
            use rand::seq::SliceRandom;
            use rand_chacha::rand_core::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut bottom: Vec<usize> = (0..n).collect();
            bottom.shuffle(&mut rng);
            render_permutation(&Permutation::new(bottom).unwrap())
        }
        GenKind::Bipperm => {
            let p = testkit::random_bipartite_permutation(n, seed)
                .map_err(|e| CliError::Exhausted(e.to_string()))?;
            render_permutation(&p)
        }
        GenKind::ChordalBipartite => {
            let g = testkit::random_chordal_bipartite(n, seed)
                .map_err(|e| CliError::Exhausted(e.to_string()))?;
            to_dimacs(&g)
        }
    };
    print!("{text}");
    Ok(())
}

fn cmd_oracle_stats(input: &Path, max_oracle_edges: usize) -> Result<(), CliError> {
    let g = load_graph(input)?;
    check_oracle_cap(&g, max_oracle_edges)?;
    let (sci, _) = oracle::strong_chromatic_index(&g);
    let (im, _) = oracle::max_induced_matching(&g);
    let sq = crate::linegraph::line_graph_square(&g);
    let omega = crate::solver::max_clique(sq.graph()).len();
    let (chi, _) = crate::solver::chromatic_number(sq.graph());
    let alpha = crate::solver::max_independent_set(sq.graph()).len();
    let out = json!({
        "problem": "oracle-stats",
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "sci": sci,
        "im": im,
        "l2_vertices": sq.vertex_count(),
        "l2_edges": sq.graph().edge_count(),
        "l2_omega": omega,
        "l2_chi": chi,
        "l2_alpha": alpha,
        "l2_chordal": oracle::is_chordal(sq.graph()),
    });
    println!("{out}");
    Ok(())
}
