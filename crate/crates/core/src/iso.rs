//! Isomorphism of unlabelled Cayley balls.
//!
//! Two independent routes: [`verify_explicit_iso`] checks that the normal-form
//! bijection `f` between `M` and `N` carries arcs to arcs in both directions,
//! and [`find_isomorphism`] searches for an isomorphism knowing nothing about
//! where the graphs came from. [`separate`] uses fingerprints and the search
//! to tell balls apart.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cayley::{
    build_ball, graph_invariants, strip_labels, CayleyBall, FrontierPolicy, Side, UnlabelledDigraph,
};
use crate::error::BallError;
use crate::presentations::{system_m, system_n, Bijection};
use crate::rewrite::{CompleteSystem, DEFAULT_SCHEMA_BOUND};

/// Default cap on search node expansions.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoStatus {
    Verified,
    Counterexample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// An arc of the first graph whose image is missing (or has a different
    /// multiplicity) in the second.
    Forward,
    /// An arc of the second graph whose preimage is missing in the first.
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The vertex cannot be mapped (not a normal form, or image outside the
    /// target ball).
    UnmappedVertex { vertex: usize, direction: Direction },
    /// Two vertices share an image.
    NotInjective { vertex: usize, other: usize },
    /// The two sides have different vertex counts.
    SizeMismatch { left: usize, right: usize },
    Arc {
        src: usize,
        dst: usize,
        direction: Direction,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::UnmappedVertex { vertex, direction } => {
                write!(f, "vertex {vertex} has no image ({direction:?})")
            }
            Witness::NotInjective { vertex, other } => {
                write!(f, "vertices {other} and {vertex} have the same image")
            }
            Witness::SizeMismatch { left, right } => {
                write!(f, "vertex counts differ: {left} vs {right}")
            }
            Witness::Arc {
                src,
                dst,
                direction,
            } => write!(f, "arc ({src}, {dst}) is not preserved ({direction:?})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub status: IsoStatus,
    pub mapping: Vec<usize>,
    pub witness: Option<Witness>,
    pub arcs_checked: usize,
    pub vertices_checked: usize,
}

impl IsoReport {
    pub fn verified(&self) -> bool {
        self.status == IsoStatus::Verified
    }

    fn fail(mapping: Vec<usize>, witness: Witness, arcs: usize, vertices: usize) -> Self {
        IsoReport {
            status: IsoStatus::Counterexample,
            mapping,
            witness: Some(witness),
            arcs_checked: arcs,
            vertices_checked: vertices,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Checks both arc directions of `mapping` (and its inverse) with
/// multiplicities.
fn check_arcs(
    g1: &UnlabelledDigraph,
    g2: &UnlabelledDigraph,
    forward: &[usize],
    backward: &[usize],
) -> Result<usize, Witness> {
    let c1 = g1.arc_counts();
    let c2 = g2.arc_counts();
    let mut checked = 0;
    for (&(x, y), &k) in &c1 {
        checked += 1;
        if c2.get(&(forward[x], forward[y])) != Some(&k) {
            return Err(Witness::Arc {
                src: x,
                dst: y,
                direction: Direction::Forward,
            });
        }
    }
    for (&(x, y), &k) in &c2 {
        checked += 1;
        if c1.get(&(backward[x], backward[y])) != Some(&k) {
            return Err(Witness::Arc {
                src: x,
                dst: y,
                direction: Direction::Backward,
            });
        }
    }
    Ok(checked)
}

/// Checks that `f` is an isomorphism between the unlabelled closed right
/// balls of `M` and `N` of equal radius.
///
/// The inverse direction uses `f^{-1}` computed from `N`'s normal forms, not
/// the inverted forward table.
pub fn verify_explicit_iso(ball_m: &CayleyBall, ball_n: &CayleyBall) -> Result<IsoReport, BallError> {
    if ball_m.side != Side::Right || ball_n.side != Side::Right {
        return Err(BallError::Mismatch("both balls must be right Cayley balls".into()));
    }
    if ball_m.policy != FrontierPolicy::Closed || ball_n.policy != FrontierPolicy::Closed {
        return Err(BallError::Mismatch("both balls must be closed".into()));
    }
    if ball_m.radius != ball_n.radius {
        return Err(BallError::Mismatch(format!(
            "radii differ: {} vs {}",
            ball_m.radius, ball_n.radius
        )));
    }
    if ball_m.alphabet.len() != 2 || ball_n.alphabet.len() != 2 {
        return Err(BallError::Mismatch("balls must be over two generators".into()));
    }
    let bij = Bijection::new();
    let nm = ball_m.vertices.len();
    let nn = ball_n.vertices.len();

    const UNSET: usize = usize::MAX;
    let mut forward = Vec::with_capacity(nm);
    let mut hit = vec![UNSET; nn];
    for (i, w) in ball_m.vertices.iter().enumerate() {
        let image = bij.forward(w).ok().and_then(|x| ball_n.vertex_index(&x));
        let Some(j) = image else {
            return Ok(IsoReport::fail(
                forward,
                Witness::UnmappedVertex {
                    vertex: i,
                    direction: Direction::Forward,
                },
                0,
                i,
            ));
        };
        if hit[j] != UNSET {
            return Ok(IsoReport::fail(
                forward,
                Witness::NotInjective {
                    vertex: i,
                    other: hit[j],
                },
                0,
                i,
            ));
        }
        hit[j] = i;
        forward.push(j);
    }
    if nm != nn {
        return Ok(IsoReport::fail(
            forward,
            Witness::SizeMismatch { left: nm, right: nn },
            0,
            nm,
        ));
    }
    let mut backward = Vec::with_capacity(nn);
    for (j, w) in ball_n.vertices.iter().enumerate() {
        let pre = bij.inverse(w).ok().and_then(|x| ball_m.vertex_index(&x));
        match pre {
            Some(i) if forward[i] == j => backward.push(i),
            _ => {
                return Ok(IsoReport::fail(
                    forward,
                    Witness::UnmappedVertex {
                        vertex: j,
                        direction: Direction::Backward,
                    },
                    0,
                    nm + j,
                ))
            }
        }
    }
    let g1 = strip_labels(ball_m);
    let g2 = strip_labels(ball_n);
    match check_arcs(&g1, &g2, &forward, &backward) {
        Ok(arcs) => Ok(IsoReport {
            status: IsoStatus::Verified,
            mapping: forward,
            witness: None,
            arcs_checked: arcs,
            vertices_checked: nm + nn,
        }),
        Err(w) => Ok(IsoReport::fail(forward, w, 0, nm + nn)),
    }
}

/// Right closed balls of `M` and `N` at `radius`, checked with `f`.
pub fn verify_explicit_iso_at(radius: usize) -> IsoReport {
    let (m, n) = certified_mn();
    let bm = build_ball(&m, Side::Right, radius, FrontierPolicy::Closed);
    let bn = build_ball(&n, Side::Right, radius, FrontierPolicy::Closed);
    verify_explicit_iso(&bm, &bn).expect("matching balls")
}

/// Both built-in systems certified at the default schema bound.
pub fn certified_mn() -> (CompleteSystem, CompleteSystem) {
    let m = system_m()
        .certify(DEFAULT_SCHEMA_BOUND)
        .expect("M is locally confluent");
    let n = system_n()
        .certify(DEFAULT_SCHEMA_BOUND)
        .expect("N is locally confluent");
    (m, n)
}

/// A vertex bijection `g1 -> g2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub mapping: Vec<usize>,
}

impl IsoCertificate {
    /// From-scratch check: bijection, and arc multiplicities preserved in
    /// both directions.
    pub fn validate(&self, g1: &UnlabelledDigraph, g2: &UnlabelledDigraph) -> Result<(), Witness> {
        if g1.n != g2.n || self.mapping.len() != g1.n {
            return Err(Witness::SizeMismatch {
                left: g1.n,
                right: g2.n,
            });
        }
        const UNSET: usize = usize::MAX;
        let mut inverse = vec![UNSET; g2.n];
        for (v, &w) in self.mapping.iter().enumerate() {
            if w >= g2.n {
                return Err(Witness::UnmappedVertex {
                    vertex: v,
                    direction: Direction::Forward,
                });
            }
            if inverse[w] != UNSET {
                return Err(Witness::NotInjective {
                    vertex: v,
                    other: inverse[w],
                });
            }
            inverse[w] = v;
        }
        check_arcs(g1, g2, &self.mapping, &inverse).map(|_| ())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Found(IsoCertificate),
    /// The search space was exhausted (or an invariant differs).
    NotIsomorphic,
    /// The budget ran out before the search finished; nothing is known.
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub result: SearchResult,
    pub expansions: u64,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&IsoCertificate> {
        match &self.result {
            SearchResult::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Adjacency with multiplicities, per vertex, sorted by neighbour.
struct CountedAdjacency {
    out: Vec<Vec<(usize, usize)>>,
    inn: Vec<Vec<(usize, usize)>>,
}

impl CountedAdjacency {
    fn new(g: &UnlabelledDigraph) -> Self {
        let mut out = vec![Vec::new(); g.n];
        let mut inn = vec![Vec::new(); g.n];
        for (&(s, d), &k) in &g.arc_counts() {
            out[s].push((d, k));
            inn[d].push((s, k));
        }
        CountedAdjacency { out, inn }
    }

    fn count(&self, s: usize, d: usize) -> usize {
        self.out[s]
            .binary_search_by_key(&d, |&(x, _)| x)
            .map_or(0, |i| self.out[s][i].1)
    }
}

/// Iterated colour refinement on the disjoint union, so colours are
/// comparable across the two graphs.
fn refine_colours(a1: &CountedAdjacency, a2: &CountedAdjacency) -> (Vec<usize>, Vec<usize>) {
    let n1 = a1.out.len();
    let n2 = a2.out.len();
    let mut c1 = vec![0usize; n1];
    let mut c2 = vec![0usize; n2];
    let mut classes = 1;
    type Sig = (usize, Vec<(usize, usize)>, Vec<(usize, usize)>);
    let signature = |adj: &CountedAdjacency, col: &[usize], v: usize| -> Sig {
        let mut o: Vec<(usize, usize)> = adj.out[v].iter().map(|&(w, k)| (col[w], k)).collect();
        let mut i: Vec<(usize, usize)> = adj.inn[v].iter().map(|&(w, k)| (col[w], k)).collect();
        o.sort_unstable();
        i.sort_unstable();
        (col[v], o, i)
    };
    loop {
        let s1: Vec<Sig> = (0..n1).map(|v| signature(a1, &c1, v)).collect();
        let s2: Vec<Sig> = (0..n2).map(|v| signature(a2, &c2, v)).collect();
        let mut all: Vec<&Sig> = s1.iter().chain(s2.iter()).collect();
        all.sort_unstable();
        all.dedup();
        let rank: BTreeMap<&Sig, usize> = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next1: Vec<usize> = s1.iter().map(|s| rank[s]).collect();
        let next2: Vec<usize> = s2.iter().map(|s| rank[s]).collect();
        c1 = next1;
        c2 = next2;
        if all.len() == classes {
            return (c1, c2);
        }
        classes = all.len();
    }
}

fn histogram(colours: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colours {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Backtracking isomorphism search pruned by colour refinement.
///
/// Vertices of `g1` are placed in breadth-first order over the underlying
/// undirected graph, so every non-root vertex must land on a neighbour of
/// its parent's image. Each tentative placement counts as one expansion.
pub fn find_isomorphism(g1: &UnlabelledDigraph, g2: &UnlabelledDigraph, budget: u64) -> SearchOutcome {
    let not_iso = SearchOutcome {
        result: SearchResult::NotIsomorphic,
        expansions: 0,
    };
    if g1.n != g2.n || g1.arcs.len() != g2.arcs.len() {
        return not_iso;
    }
    let n = g1.n;
    if n == 0 {
        return SearchOutcome {
            result: SearchResult::Found(IsoCertificate { mapping: vec![] }),
            expansions: 0,
        };
    }
    let a1 = CountedAdjacency::new(g1);
    let a2 = CountedAdjacency::new(g2);
    let (col1, col2) = refine_colours(&a1, &a2);
    if histogram(&col1) != histogram(&col2) {
        return not_iso;
    }

    // Placement order and, for each vertex, its parent and whether the
    // parent's arc points at it.
    let cell_size = histogram(&col1);
    let mut order = Vec::with_capacity(n);
    let mut parent: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (cell_size[&col1[v]], col1[v], v));
    for root in roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let nbrs = a1.out[v]
                .iter()
                .map(|&(w, _)| (w, true))
                .chain(a1.inn[v].iter().map(|&(w, _)| (w, false)));
            for (w, is_out) in nbrs {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, is_out));
                    order.push(w);
                }
            }
        }
    }

    const UNSET: usize = usize::MAX;
    let mut map1 = vec![UNSET; n];
    let mut map2 = vec![UNSET; n];

    let consistent = |v: usize, w: usize, map1: &[usize], map2: &[usize]| -> bool {
        if a1.count(v, v) != a2.count(w, w) {
            return false;
        }
        for &(u, k) in &a1.out[v] {
            if u != v && map1[u] != UNSET && a2.count(w, map1[u]) != k {
                return false;
            }
        }
        for &(u, k) in &a1.inn[v] {
            if u != v && map1[u] != UNSET && a2.count(map1[u], w) != k {
                return false;
            }
        }
        for &(x, k) in &a2.out[w] {
            if x != w && map2[x] != UNSET && a1.count(v, map2[x]) != k {
                return false;
            }
        }
        for &(x, k) in &a2.inn[w] {
            if x != w && map2[x] != UNSET && a1.count(map2[x], v) != k {
                return false;
            }
        }
        true
    };

    let candidates = |depth: usize, map1: &[usize]| -> Vec<usize> {
        let v = order[depth];
        let mut c: Vec<usize> = match parent[v] {
            Some((p, true)) => a2.out[map1[p]].iter().map(|&(x, _)| x).collect(),
            Some((p, false)) => a2.inn[map1[p]].iter().map(|&(x, _)| x).collect(),
            None => (0..n).collect(),
        };
        c.retain(|&x| col2[x] == col1[v]);
        c.sort_unstable();
        c.dedup();
        c
    };

    let mut cands: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut cursor = vec![0usize; n];
    cands[0] = candidates(0, &map1);
    let mut depth = 0usize;
    let mut expansions = 0u64;
    loop {
        let v = order[depth];
        if map1[v] != UNSET {
            map2[map1[v]] = UNSET;
            map1[v] = UNSET;
        }
        let mut placed = false;
        while cursor[depth] < cands[depth].len() {
            let w = cands[depth][cursor[depth]];
            cursor[depth] += 1;
            if map2[w] != UNSET {
                continue;
            }
            expansions += 1;
            if expansions > budget {
                return SearchOutcome {
                    result: SearchResult::Indeterminate,
                    expansions: budget,
                };
            }
            if consistent(v, w, &map1, &map2) {
                map1[v] = w;
                map2[w] = v;
                placed = true;
                break;
            }
        }
        if placed {
            depth += 1;
            if depth == n {
                return SearchOutcome {
                    result: SearchResult::Found(IsoCertificate { mapping: map1 }),
                    expansions,
                };
            }
            cands[depth] = candidates(depth, &map1);
            cursor[depth] = 0;
        } else if depth == 0 {
            return SearchOutcome {
                result: SearchResult::NotIsomorphic,
                expansions,
            };
        } else {
            depth -= 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// Fingerprints differ; the named invariant separates the balls.
    FingerprintsDiffer { invariant: String },
    /// Fingerprints agree but exhaustive search found no isomorphism.
    SearchExhausted { expansions: u64 },
    Isomorphic { expansions: u64 },
    /// Search budget ran out.
    Indeterminate { expansions: u64 },
}

impl Verdict {
    pub fn separated(&self) -> bool {
        matches!(
            self,
            Verdict::FingerprintsDiffer { .. } | Verdict::SearchExhausted { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusOutcome {
    pub radius: usize,
    pub vertices: (usize, usize),
    pub arcs: (usize, usize),
    pub verdict: Verdict,
}

/// Compares closed balls of the two systems at one radius.
pub fn separate(
    first: &CompleteSystem,
    second: &CompleteSystem,
    side: Side,
    radius: usize,
    budget: u64,
) -> RadiusOutcome {
    let g1 = strip_labels(&build_ball(first, side, radius, FrontierPolicy::Closed));
    let g2 = strip_labels(&build_ball(second, side, radius, FrontierPolicy::Closed));
    let verdict = match graph_invariants(&g1).first_difference(&graph_invariants(&g2)) {
        Some(inv) => Verdict::FingerprintsDiffer {
            invariant: inv.to_string(),
        },
        None => {
            let s = find_isomorphism(&g1, &g2, budget);
            match s.result {
                SearchResult::Found(_) => Verdict::Isomorphic {
                    expansions: s.expansions,
                },
                SearchResult::NotIsomorphic => Verdict::SearchExhausted {
                    expansions: s.expansions,
                },
                SearchResult::Indeterminate => Verdict::Indeterminate {
                    expansions: s.expansions,
                },
            }
        }
    };
    RadiusOutcome {
        radius,
        vertices: (g1.n, g2.n),
        arcs: (g1.arcs.len(), g2.arcs.len()),
        verdict,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub side: Side,
    pub outcomes: Vec<RadiusOutcome>,
    /// Smallest radius at which the balls were told apart.
    pub separated_at: Option<usize>,
}

impl SeparationReport {
    pub fn separating_outcome(&self) -> Option<&RadiusOutcome> {
        self.separated_at
            .and_then(|r| self.outcomes.iter().find(|o| o.radius == r))
    }
}

/// Tries radii `1..=max_radius` in turn and stops at the first separation.
pub fn escalate_separation(
    first: &CompleteSystem,
    second: &CompleteSystem,
    side: Side,
    max_radius: usize,
    budget: u64,
) -> SeparationReport {
    let mut outcomes = Vec::new();
    let mut separated_at = None;
    for radius in 1..=max_radius {
        let o = separate(first, second, side, radius, budget);
        let done = o.verdict.separated();
        outcomes.push(o);
        if done {
            separated_at = Some(radius);
            break;
        }
    }
    SeparationReport {
        side,
        outcomes,
        separated_at,
    }
}

/// Left closed balls of `M` and `N` at one radius.
pub fn separate_left_graphs(radius: usize) -> RadiusOutcome {
    let (m, n) = certified_mn();
    separate(&m, &n, Side::Left, radius, DEFAULT_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::GraphExport;

    fn g(n: usize, arcs: &[(usize, usize)]) -> UnlabelledDigraph {
        UnlabelledDigraph::new(n, arcs.to_vec()).unwrap()
    }

    #[test]
    fn single_vertices_are_isomorphic() {
        let s = find_isomorphism(&g(1, &[]), &g(1, &[]), 10);
        assert_eq!(s.certificate().unwrap().mapping, vec![0]);
    }

    #[test]
    fn cycle_is_not_path() {
        let cycle = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let path = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(find_isomorphism(&cycle, &path, 100).result, SearchResult::NotIsomorphic);
        assert!(graph_invariants(&cycle)
            .first_difference(&graph_invariants(&path))
            .is_some());
    }

    #[test]
    fn relabelled_graph_is_found() {
        let g1 = g(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 4), (1, 2), (1, 2)]);
        let perm = [3, 0, 4, 1, 2];
        let g2 = g(
            5,
            &g1.arcs
                .iter()
                .map(|&(s, d)| (perm[s], perm[d]))
                .collect::<Vec<_>>(),
        );
        let s = find_isomorphism(&g1, &g2, 1000);
        let cert = s.certificate().expect("isomorphic");
        assert!(cert.validate(&g1, &g2).is_ok());
        assert_eq!(cert.mapping, perm);
    }

    #[test]
    fn budget_exhaustion_is_indeterminate() {
        // two disjoint 4-cycles against one 8-cycle: refinement cannot tell
        // them apart, the search has to
        let two = g(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]);
        let one = g(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0)]);
        assert_eq!(find_isomorphism(&two, &one, 1).result, SearchResult::Indeterminate);
        assert_eq!(
            find_isomorphism(&two, &one, DEFAULT_BUDGET).result,
            SearchResult::NotIsomorphic
        );
    }

    #[test]
    fn validate_rejects_bad_certificates() {
        let g1 = g(2, &[(0, 1)]);
        assert!(IsoCertificate { mapping: vec![1, 0] }.validate(&g1, &g1).is_err());
        assert!(IsoCertificate { mapping: vec![0, 0] }.validate(&g1, &g1).is_err());
        assert!(IsoCertificate { mapping: vec![0, 1] }.validate(&g1, &g1).is_ok());
    }

    #[test]
    fn explicit_iso_small_radii() {
        let r0 = verify_explicit_iso_at(0);
        assert!(r0.verified());
        assert_eq!(r0.mapping, vec![0]);
        assert_eq!(r0.arcs_checked, 0);
        let r5 = verify_explicit_iso_at(5);
        assert!(r5.verified());
        assert_eq!(r5.vertices_checked, 2 * 57);
    }

    #[test]
    fn explicit_iso_table_row_nfm3a() {
        let (m, n) = certified_mn();
        let bm = build_ball(&m, Side::Right, 3, FrontierPolicy::Closed);
        let bn = build_ball(&n, Side::Right, 3, FrontierPolicy::Closed);
        let rep = verify_explicit_iso(&bm, &bn).unwrap();
        let am = m.alphabet();
        let an = n.alphabet();
        let abb = bm.vertex_index(&am.parse("abb").unwrap()).unwrap();
        let aba = bm.vertex_index(&am.parse("aba").unwrap()).unwrap();
        assert_eq!(an.render(&bn.vertices[rep.mapping[abb]]), "cdd");
        assert_eq!(an.render(&bn.vertices[rep.mapping[aba]]), "cdc");
        let gn = strip_labels(&bn);
        assert!(gn.arcs.contains(&(rep.mapping[abb], rep.mapping[aba])));
    }

    #[test]
    fn explicit_iso_rejects_mismatched_inputs() {
        let (m, n) = certified_mn();
        let bm = build_ball(&m, Side::Right, 2, FrontierPolicy::Closed);
        let bn3 = build_ball(&n, Side::Right, 3, FrontierPolicy::Closed);
        let bl = build_ball(&n, Side::Left, 2, FrontierPolicy::Closed);
        assert!(verify_explicit_iso(&bm, &bn3).is_err());
        assert!(verify_explicit_iso(&bm, &bl).is_err());
    }

    #[test]
    fn explicit_iso_detects_tampering() {
        let (m, n) = certified_mn();
        let bm = build_ball(&m, Side::Right, 3, FrontierPolicy::Closed);
        let mut bn = build_ball(&n, Side::Right, 3, FrontierPolicy::Closed);
        let e = bn.edges.pop().unwrap();
        let rep = verify_explicit_iso(&bm, &bn).unwrap();
        assert_eq!(rep.status, IsoStatus::Counterexample);
        assert!(matches!(rep.witness, Some(Witness::Arc { direction: Direction::Forward, .. })));
        bn.edges.push(e);
        bn.edges.push(e);
        let rep = verify_explicit_iso(&bm, &bn).unwrap();
        assert!(!rep.verified());
    }

    #[test]
    fn report_json_shape() {
        let v: serde_json::Value = serde_json::from_str(&verify_explicit_iso_at(1).to_json()).unwrap();
        assert_eq!(v["status"], "verified");
        assert_eq!(v["mapping"], serde_json::json!([0, 1, 2]));
        assert!(v["witness"].is_null());
    }

    #[test]
    fn left_radius_one_not_separated() {
        let o = separate_left_graphs(1);
        assert_eq!(o.vertices, (3, 3));
        assert!(!o.verdict.separated());
    }

    #[test]
    fn self_comparison_never_separates() {
        let (m, _) = certified_mn();
        let rep = escalate_separation(&m, &m, Side::Left, 5, DEFAULT_BUDGET);
        assert_eq!(rep.separated_at, None);
        assert_eq!(rep.outcomes.len(), 5);
        assert!(rep
            .outcomes
            .iter()
            .all(|o| matches!(o.verdict, Verdict::Isomorphic { .. })));
    }

    #[test]
    fn found_certificate_round_trips_through_json_graphs() {
        let (m, n) = certified_mn();
        let gm = strip_labels(&build_ball(&m, Side::Right, 3, FrontierPolicy::Closed));
        let gn = strip_labels(&build_ball(&n, Side::Right, 3, FrontierPolicy::Closed));
        let gm2 = UnlabelledDigraph::from_json(&gm.to_json()).unwrap();
        let s = find_isomorphism(&gm2, &gn, DEFAULT_BUDGET);
        assert!(s.certificate().unwrap().validate(&gm, &gn).is_ok());
    }
}
