//! Balls in right and left Cayley graphs of a complete rewriting system.
//!
//! Vertices of a ball of radius `L` are the normal forms of length at most
//! `L`, numbered in shortlex order (vertex 0 is the empty word). Since every
//! rule is length-reducing, the length of a normal form is its directed
//! distance from the identity, so this is exactly the directed ball.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{BallError, WordError};
use crate::presentations::enumerate_normal_forms;
use crate::rewrite::{CompleteSystem, RewritingSystem};
use crate::word::{Alphabet, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Arcs `x -> x g`.
    Right,
    /// Arcs `x -> g x`.
    Left,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrontierPolicy {
    /// Arcs leaving the ball are dropped.
    Closed,
    /// Arcs leaving the ball are kept as frontier targets.
    WithFrontier,
}

impl FrontierPolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            FrontierPolicy::Closed => "closed",
            FrontierPolicy::WithFrontier => "with_frontier",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub generator: Symbol,
}

/// An arc whose target lies outside the ball.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrontierTarget {
    pub src: usize,
    pub generator: Symbol,
    pub target: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyBall {
    pub side: Side,
    pub radius: usize,
    pub alphabet: Alphabet,
    pub vertices: Vec<Word>,
    pub edges: Vec<Edge>,
    pub policy: FrontierPolicy,
    pub frontier: Vec<FrontierTarget>,
}

impl CayleyBall {
    pub fn vertex_index(&self, w: &Word) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    /// Outgoing entries (edges plus frontier targets) per vertex.
    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.src] += 1;
        }
        for f in &self.frontier {
            deg[f.src] += 1;
        }
        deg
    }
}

/// Normal form of `v g` (right) or `g v` (left).
pub fn edge_target(
    system: &RewritingSystem,
    v: &Word,
    g: Symbol,
    side: Side,
) -> Result<Word, WordError> {
    if !system.alphabet().contains(g) {
        return Err(WordError::SymbolOutOfRange(g.0, system.alphabet().len()));
    }
    let product = match side {
        Side::Right => v.appended(g),
        Side::Left => v.prepended(g),
    };
    system.normal_form(&product)
}

/// Builds the ball of the given radius. Per-vertex arc computation runs in
/// parallel; the output order does not depend on scheduling.
pub fn build_ball(
    system: &CompleteSystem,
    side: Side,
    radius: usize,
    policy: FrontierPolicy,
) -> CayleyBall {
    let vertices = enumerate_normal_forms(system, radius);
    let generators: Vec<Symbol> = system.alphabet().symbols().collect();
    let rows: Vec<Vec<(Symbol, Word)>> = vertices
        .par_iter()
        .map(|v| {
            generators
                .iter()
                .map(|&g| {
                    let product = match side {
                        Side::Right => v.appended(g),
                        Side::Left => v.prepended(g),
                    };
                    (g, system.normal_form_unchecked(&product))
                })
                .collect()
        })
        .collect();

    let mut edges = Vec::new();
    let mut frontier = Vec::new();
    for (src, row) in rows.into_iter().enumerate() {
        for (generator, target) in row {
            if target.len() <= radius {
                let dst = vertices
                    .binary_search(&target)
                    .expect("normal forms within the radius are vertices");
                edges.push(Edge {
                    src,
                    dst,
                    generator,
                });
            } else if policy == FrontierPolicy::WithFrontier {
                frontier.push(FrontierTarget {
                    src,
                    generator,
                    target,
                });
            }
        }
    }
    CayleyBall {
        side,
        radius,
        alphabet: system.alphabet().clone(),
        vertices,
        edges,
        policy,
        frontier,
    }
}

/// Directed multigraph without labels. Arcs are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnlabelledDigraph {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl UnlabelledDigraph {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self, BallError> {
        if let Some(&(s, d)) = arcs.iter().find(|&&(s, d)| s >= n || d >= n) {
            return Err(BallError::Malformed(format!(
                "arc ({s}, {d}) out of range for {n} vertices"
            )));
        }
        arcs.sort_unstable();
        Ok(UnlabelledDigraph { n, arcs })
    }

    pub fn out_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(s, d) in &self.arcs {
            adj[s].push(d);
        }
        adj
    }

    pub fn in_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(s, d) in &self.arcs {
            adj[d].push(s);
        }
        adj
    }

    /// Arc multiset as counts.
    pub fn arc_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for &a in &self.arcs {
            *m.entry(a).or_insert(0) += 1;
        }
        m
    }

    pub fn loop_count(&self) -> usize {
        self.arcs.iter().filter(|(s, d)| s == d).count()
    }

    /// Number of arcs beyond the first between any ordered pair.
    pub fn parallel_arc_count(&self) -> usize {
        self.arc_counts().values().map(|&c| c - 1).sum()
    }

    /// Directed BFS distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let adj = self.out_adjacency();
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        if root < self.n {
            dist[root] = Some(0);
            queue.push_back(root);
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have a distance");
            for &w in &adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Drops generator labels, keeping arc multiplicities.
pub fn strip_labels(ball: &CayleyBall) -> UnlabelledDigraph {
    let mut arcs: Vec<(usize, usize)> = ball.edges.iter().map(|e| (e.src, e.dst)).collect();
    arcs.sort_unstable();
    UnlabelledDigraph {
        n: ball.vertices.len(),
        arcs,
    }
}

pub type DegreePair = (usize, usize);

/// A vertex's (in, out) degree together with the sorted degree pairs of its
/// out- and in-neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoStepProfile {
    pub own: DegreePair,
    pub successors: Vec<DegreePair>,
    pub predecessors: Vec<DegreePair>,
}

/// Isomorphism invariants of an unlabelled digraph. Unequal fingerprints
/// certify non-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub n: usize,
    pub arc_count: usize,
    pub degree_pairs: Vec<DegreePair>,
    pub two_step: Vec<TwoStepProfile>,
}

impl Fingerprint {
    /// Name of the first invariant that differs, if any.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        if self.n != other.n {
            Some("vertex count")
        } else if self.arc_count != other.arc_count {
            Some("arc count")
        } else if self.degree_pairs != other.degree_pairs {
            Some("(in-degree, out-degree) multiset")
        } else if self.two_step != other.two_step {
            Some("two-step degree profile multiset")
        } else {
            None
        }
    }
}

pub fn graph_invariants(g: &UnlabelledDigraph) -> Fingerprint {
    let out = g.out_adjacency();
    let inn = g.in_adjacency();
    let deg: Vec<DegreePair> = (0..g.n).map(|v| (inn[v].len(), out[v].len())).collect();
    let mut degree_pairs = deg.clone();
    degree_pairs.sort_unstable();
    let mut two_step: Vec<TwoStepProfile> = (0..g.n)
        .map(|v| {
            let mut successors: Vec<DegreePair> = out[v].iter().map(|&w| deg[w]).collect();
            let mut predecessors: Vec<DegreePair> = inn[v].iter().map(|&w| deg[w]).collect();
            successors.sort_unstable();
            predecessors.sort_unstable();
            TwoStepProfile {
                own: deg[v],
                successors,
                predecessors,
            }
        })
        .collect();
    two_step.sort_unstable();
    Fingerprint {
        n: g.n,
        arc_count: g.arcs.len(),
        degree_pairs,
        two_step,
    }
}

/// DOT and JSON renderings.
pub trait GraphExport: Sized {
    fn to_dot(&self) -> String;
    fn to_json(&self) -> String;
    fn from_json(text: &str) -> Result<Self, BallError>;
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Serialize, Deserialize)]
struct BallJson {
    side: Side,
    radius: usize,
    vertices: Vec<String>,
    edges: Vec<(usize, usize, String)>,
    alphabet: Vec<String>,
    policy: FrontierPolicy,
    #[serde(default)]
    frontier: Vec<(usize, String, String)>,
}

fn json_symbol(alphabet: &Alphabet, g: &str) -> Result<Symbol, BallError> {
    let mut chars = g.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(alphabet.symbol(c)?),
        _ => Err(BallError::Malformed(format!("generator {g:?} is not a single symbol"))),
    }
}

impl GraphExport for CayleyBall {
    fn to_dot(&self) -> String {
        let a = &self.alphabet;
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}_ball_r{}\" {{", self.side.as_str(), self.radius);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", dot_escape(&a.render_nonempty(v)));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  {} -> {} [label=\"{}\"];",
                e.src,
                e.dst,
                dot_escape(&a.display(e.generator).to_string())
            );
        }
        for (i, f) in self.frontier.iter().enumerate() {
            let _ = writeln!(
                out,
                "  f{i} [label=\"{}\", style=dashed];",
                dot_escape(&a.render(&f.target))
            );
            let _ = writeln!(
                out,
                "  {} -> f{i} [label=\"{}\", style=dashed];",
                f.src,
                dot_escape(&a.display(f.generator).to_string())
            );
        }
        out.push_str("}\n");
        out
    }

    fn to_json(&self) -> String {
        let a = &self.alphabet;
        let doc = BallJson {
            side: self.side,
            radius: self.radius,
            vertices: self.vertices.iter().map(|v| a.render(v)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| (e.src, e.dst, a.display(e.generator).to_string()))
                .collect(),
            alphabet: a.chars().iter().map(|c| c.to_string()).collect(),
            policy: self.policy,
            frontier: self
                .frontier
                .iter()
                .map(|f| (f.src, a.display(f.generator).to_string(), a.render(&f.target)))
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("ball serializes");
        s.push('\n');
        s
    }

    fn from_json(text: &str) -> Result<Self, BallError> {
        let doc: BallJson =
            serde_json::from_str(text).map_err(|e| BallError::Json(e.to_string()))?;
        let mut chars = Vec::with_capacity(doc.alphabet.len());
        for s in &doc.alphabet {
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => chars.push(c),
                _ => return Err(BallError::Malformed(format!("alphabet entry {s:?}"))),
            }
        }
        let alphabet = Alphabet::new(chars)?;
        let vertices = doc
            .vertices
            .iter()
            .map(|v| alphabet.parse(v))
            .collect::<Result<Vec<_>, _>>()?;
        if !vertices.windows(2).all(|p| p[0] < p[1]) {
            return Err(BallError::Malformed("vertices are not in shortlex order".into()));
        }
        let n = vertices.len();
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (src, dst, g) in &doc.edges {
            if *src >= n || *dst >= n {
                return Err(BallError::Malformed(format!("edge ({src}, {dst}) out of range")));
            }
            edges.push(Edge {
                src: *src,
                dst: *dst,
                generator: json_symbol(&alphabet, g)?,
            });
        }
        let mut frontier = Vec::with_capacity(doc.frontier.len());
        for (src, g, target) in &doc.frontier {
            if *src >= n {
                return Err(BallError::Malformed(format!("frontier source {src} out of range")));
            }
            frontier.push(FrontierTarget {
                src: *src,
                generator: json_symbol(&alphabet, g)?,
                target: alphabet.parse(target)?,
            });
        }
        Ok(CayleyBall {
            side: doc.side,
            radius: doc.radius,
            alphabet,
            vertices,
            edges,
            policy: doc.policy,
            frontier,
        })
    }
}

impl GraphExport for UnlabelledDigraph {
    fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for i in 0..self.n {
            let _ = writeln!(out, "  {i};");
        }
        for (s, d) in &self.arcs {
            let _ = writeln!(out, "  {s} -> {d};");
        }
        out.push_str("}\n");
        out
    }

    fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("digraph serializes");
        s.push('\n');
        s
    }

    fn from_json(text: &str) -> Result<Self, BallError> {
        let g: UnlabelledDigraph =
            serde_json::from_str(text).map_err(|e| BallError::Json(e.to_string()))?;
        UnlabelledDigraph::new(g.n, g.arcs)
    }
}
