//! Graph-class recognizers with witness certificates.
//!
//! Every recognizer returns a [`Verdict`]: a three-valued status plus a
//! certificate. Negative certificates embed a forbidden structure
//! (chordless cycle, induced P4, 2K2, odd cycle, Kuratowski subdivision,
//! odd-degree vertex, disconnection); positive certificates are
//! constructive (elimination order, cotree, split partition, peel order,
//! 2-coloring, rotation-system embedding, dominating vertex, Eulerian
//! circuit). [`Witness::check`] re-verifies any certificate against the
//! graph without consulting the recognizer that produced it.
//!
//! The empty graph gets the distinguished `Vacuous` status: difference
//! graphs of EPPO groups are empty and the classification theorems do not
//! apply to them.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::graph::SimpleGraph;

mod bipartite;
mod chordal;
mod cograph;
mod eulerian;
pub mod planar;
pub mod search;
mod splitg;
mod star;
mod threshold;

pub use bipartite::is_bipartite;
pub use chordal::{is_chordal, lex_bfs};
pub use cograph::is_cograph;
pub use eulerian::is_eulerian;
pub use planar::{is_outerplanar, is_planar};
pub use search::{brute_force_forbidden, ForbiddenKind};
pub use splitg::is_split;
pub use star::{dominating_vertices, is_dominatable, is_star};
pub use threshold::is_threshold;

/// Three-valued recognizer outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    True,
    False,
    /// The graph is empty (EPPO group); the class question does not apply.
    Vacuous,
}

impl Status {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Status::True => Some(true),
            Status::False => Some(false),
            Status::Vacuous => None,
        }
    }
}

/// Recognizer outcome plus certificate.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn vacuous() -> Self {
        Verdict {
            status: Status::Vacuous,
            witness: None,
        }
    }

    pub fn yes(witness: Witness) -> Self {
        Verdict {
            status: Status::True,
            witness: Some(witness),
        }
    }

    pub fn no(witness: Witness) -> Self {
        Verdict {
            status: Status::False,
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::True
    }
}

/// Node of a cotree: leaves are vertices, internal nodes say whether the
/// children's vertex sets are pairwise fully joined or fully separated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    Union(Vec<CotreeNode>),
    Join(Vec<CotreeNode>),
}

impl CotreeNode {
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            CotreeNode::Leaf(v) => out.push(*v),
            CotreeNode::Union(cs) | CotreeNode::Join(cs) => {
                for c in cs {
                    c.collect(out);
                }
            }
        }
    }
}

/// Neighbor lists in cyclic order, one per vertex.
pub type Rotations = Vec<Vec<usize>>;

/// A certificate for a recognizer verdict.
#[derive(Clone, Debug)]
pub enum Witness {
    // ---- forbidden structures (negative certificates) ----
    /// Cycle of length >= 4 with no chords; length 4 refutes C4-freeness,
    /// 5 refutes C5-freeness.
    ChordlessCycle(Vec<usize>),
    /// Vertices inducing the path a-b-c-d.
    InducedP4([usize; 4]),
    /// Edges (a,b) and (c,d) with no edges across.
    TwoK2([usize; 4]),
    /// Cycle of odd length (chords allowed).
    OddCycle(Vec<usize>),
    OddDegreeVertex(usize),
    /// Vertices in different connected components.
    Disconnected { u: usize, v: usize },
    /// Subdivision of a complete graph: K5 (5 branch vertices, planarity)
    /// or K4 (4, outerplanarity). `paths[k]` joins one branch pair, listed
    /// endpoints included.
    CliqueSubdivision {
        branch: Vec<usize>,
        paths: Vec<Vec<usize>>,
    },
    /// Subdivision of K_{3,3} (planarity) or K_{2,3} (outerplanarity).
    BipartiteSubdivision {
        left: Vec<usize>,
        right: Vec<usize>,
        paths: Vec<Vec<usize>>,
    },
    /// pairs[i] = (v, w) with w not adjacent to v, one per vertex: no
    /// vertex dominates.
    NoDominatingVertex(Vec<(usize, usize)>),
    /// An edge (u, w) whose endpoints both have another neighbor; no star
    /// contains such an edge.
    EdgeBothBranched {
        u: usize,
        w: usize,
        a: usize,
        b: usize,
    },
    /// Fewer than two vertices.
    TooSmall,
    // ---- constructive structures (positive certificates) ----
    /// A perfect elimination ordering.
    EliminationOrder(Vec<usize>),
    Cotree(CotreeNode),
    SplitPartition {
        clique: Vec<usize>,
        independent: Vec<usize>,
    },
    /// Removal order; each vertex was isolated or dominating among the
    /// remaining ones.
    PeelOrder(Vec<usize>),
    /// colors[v] in {0, 1}, proper on every edge.
    TwoColoring(Vec<u8>),
    /// Planar embedding: Euler's formula holds per connected component.
    Embedding(Rotations),
    /// Planar embedding in which some face of each component contains all
    /// of that component's vertices.
    OuterEmbedding(Rotations),
    DominatingVertex(usize),
    StarCenter(usize),
    /// Closed trail covering every edge exactly once.
    EulerianCircuit(Vec<usize>),
}

impl Witness {
    /// Short kind tag, stable for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::ChordlessCycle(c) => match c.len() {
                4 => "c4",
                5 => "c5",
                _ => "chordless_cycle",
            },
            Witness::InducedP4(_) => "p4",
            Witness::TwoK2(_) => "2k2",
            Witness::OddCycle(_) => "odd_cycle",
            Witness::OddDegreeVertex(_) => "odd_degree_vertex",
            Witness::Disconnected { .. } => "disconnected",
            Witness::CliqueSubdivision { branch, .. } => {
                if branch.len() == 5 {
                    "k5_subdivision"
                } else {
                    "k4_subdivision"
                }
            }
            Witness::BipartiteSubdivision { left, .. } => {
                if left.len() == 3 {
                    "k33_subdivision"
                } else {
                    "k23_subdivision"
                }
            }
            Witness::NoDominatingVertex(_) => "no_dominating_vertex",
            Witness::EdgeBothBranched { .. } => "edge_both_branched",
            Witness::TooSmall => "too_small",
            Witness::EliminationOrder(_) => "elimination_order",
            Witness::Cotree(_) => "cotree",
            Witness::SplitPartition { .. } => "split_partition",
            Witness::PeelOrder(_) => "peel_order",
            Witness::TwoColoring(_) => "two_coloring",
            Witness::Embedding(_) => "embedding",
            Witness::OuterEmbedding(_) => "outer_embedding",
            Witness::DominatingVertex(_) => "dominating_vertex",
            Witness::StarCenter(_) => "star_center",
            Witness::EulerianCircuit(_) => "eulerian_circuit",
        }
    }

    /// The distinct vertices the certificate touches (small certificates
    /// only; constructive whole-graph certificates report none).
    pub fn touched_vertices(&self) -> Vec<usize> {
        let mut vs = match self {
            Witness::ChordlessCycle(c) | Witness::OddCycle(c) => c.clone(),
            Witness::InducedP4(a) | Witness::TwoK2(a) => a.to_vec(),
            Witness::OddDegreeVertex(v)
            | Witness::DominatingVertex(v)
            | Witness::StarCenter(v) => vec![*v],
            Witness::Disconnected { u, v } => vec![*u, *v],
            Witness::CliqueSubdivision { paths, .. }
            | Witness::BipartiteSubdivision { paths, .. } => {
                paths.iter().flatten().copied().collect()
            }
            Witness::EdgeBothBranched { u, w, a, b } => vec![*u, *w, *a, *b],
            _ => Vec::new(),
        };
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Re-verify the certificate against the graph. Independent of every
    /// recognizer: only adjacency queries are used.
    pub fn check(&self, g: &SimpleGraph) -> bool {
        match self {
            Witness::ChordlessCycle(c) => check_cycle(g, c, true, 4),
            Witness::OddCycle(c) => c.len() % 2 == 1 && check_cycle(g, c, false, 3),
            Witness::InducedP4(vs) => {
                let [a, b, c, d] = *vs;
                distinct(vs)
                    && g.has_edge(a, b)
                    && g.has_edge(b, c)
                    && g.has_edge(c, d)
                    && !g.has_edge(a, c)
                    && !g.has_edge(a, d)
                    && !g.has_edge(b, d)
            }
            Witness::TwoK2(vs) => {
                let [a, b, c, d] = *vs;
                distinct(vs)
                    && g.has_edge(a, b)
                    && g.has_edge(c, d)
                    && !g.has_edge(a, c)
                    && !g.has_edge(a, d)
                    && !g.has_edge(b, c)
                    && !g.has_edge(b, d)
            }
            Witness::OddDegreeVertex(v) => *v < g.vertex_count() && g.degree(*v) % 2 == 1,
            Witness::Disconnected { u, v } => !reachable(g, *u, *v),
            Witness::CliqueSubdivision { branch, paths } => {
                let k = branch.len();
                if !(k == 4 || k == 5) || !distinct(branch) {
                    return false;
                }
                let want: Vec<(usize, usize)> = (0..k)
                    .flat_map(|i| ((i + 1)..k).map(move |j| (i, j)))
                    .map(|(i, j)| (branch[i].min(branch[j]), branch[i].max(branch[j])))
                    .collect();
                check_subdivision_paths(g, branch, &want, paths)
            }
            Witness::BipartiteSubdivision { left, right, paths } => {
                let (l, r) = (left.len(), right.len());
                if !((l == 3 || l == 2) && r == 3) {
                    return false;
                }
                let mut all: Vec<usize> = left.iter().chain(right).copied().collect();
                all.sort_unstable();
                all.dedup();
                if all.len() != l + r {
                    return false;
                }
                let want: Vec<(usize, usize)> = left
                    .iter()
                    .flat_map(|&a| right.iter().map(move |&b| (a.min(b), a.max(b))))
                    .collect();
                let branch: Vec<usize> = left.iter().chain(right).copied().collect();
                check_subdivision_paths(g, &branch, &want, paths)
            }
            Witness::NoDominatingVertex(pairs) => {
                pairs.len() == g.vertex_count()
                    && pairs.iter().enumerate().all(|(i, &(v, w))| {
                        v == i && v != w && w < g.vertex_count() && !g.has_edge(v, w)
                    })
            }
            Witness::EdgeBothBranched { u, w, a, b } => {
                g.has_edge(*u, *w)
                    && g.has_edge(*u, *a)
                    && g.has_edge(*w, *b)
                    && a != w
                    && b != u
            }
            Witness::TooSmall => g.vertex_count() < 2,
            Witness::EliminationOrder(order) => check_peo(g, order),
            Witness::Cotree(root) => check_cotree(g, root),
            Witness::SplitPartition { clique, independent } => {
                let mut all: Vec<usize> = clique.iter().chain(independent).copied().collect();
                all.sort_unstable();
                all.dedup();
                all.len() == g.vertex_count()
                    && all == (0..g.vertex_count()).collect::<Vec<_>>()
                    && clique
                        .iter()
                        .enumerate()
                        .all(|(i, &u)| clique[i + 1..].iter().all(|&v| g.has_edge(u, v)))
                    && independent
                        .iter()
                        .enumerate()
                        .all(|(i, &u)| independent[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
            }
            Witness::PeelOrder(order) => check_peel(g, order),
            Witness::TwoColoring(colors) => {
                colors.len() == g.vertex_count()
                    && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
                    && colors.iter().all(|&c| c < 2)
            }
            Witness::Embedding(rot) => planar::verify_embedding(g, rot),
            Witness::OuterEmbedding(rot) => planar::verify_outer_embedding(g, rot),
            Witness::DominatingVertex(v) => {
                *v < g.vertex_count() && g.degree(*v) == g.vertex_count() - 1
            }
            Witness::StarCenter(v) => {
                *v < g.vertex_count()
                    && g.vertex_count() >= 2
                    && g.degree(*v) == g.vertex_count() - 1
                    && g.edge_count() == g.vertex_count() - 1
            }
            Witness::EulerianCircuit(c) => check_eulerian_circuit(g, c),
        }
    }
}

fn distinct(vs: &[usize]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Cycle validity: distinct vertices, consecutive (cyclically) adjacent,
/// optionally no chords, minimum length.
fn check_cycle(g: &SimpleGraph, c: &[usize], chordless: bool, min_len: usize) -> bool {
    let k = c.len();
    if k < min_len || !distinct(c) || c.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    for i in 0..k {
        if !g.has_edge(c[i], c[(i + 1) % k]) {
            return false;
        }
    }
    if chordless {
        for i in 0..k {
            for j in (i + 2)..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                if g.has_edge(c[i], c[j]) {
                    return false;
                }
            }
        }
    }
    true
}

fn reachable(g: &SimpleGraph, u: usize, v: usize) -> bool {
    if u >= g.vertex_count() || v >= g.vertex_count() {
        return false;
    }
    let mut seen = BitSet::new(g.vertex_count());
    seen.set(u);
    let mut queue = vec![u];
    while let Some(x) = queue.pop() {
        if x == v {
            return true;
        }
        for y in g.neighbors(x) {
            if !seen.get(y) {
                seen.set(y);
                queue.push(y);
            }
        }
    }
    false
}

/// Paths must realize exactly the wanted branch pairs, with internal
/// vertices disjoint from branch vertices and from each other.
fn check_subdivision_paths(
    g: &SimpleGraph,
    branch: &[usize],
    want: &[(usize, usize)],
    paths: &[Vec<usize>],
) -> bool {
    if paths.len() != want.len() {
        return false;
    }
    let mut got: Vec<(usize, usize)> = Vec::new();
    let mut used_internal: Vec<usize> = Vec::new();
    for p in paths {
        if p.len() < 2 {
            return false;
        }
        let (a, b) = (p[0], *p.last().unwrap());
        got.push((a.min(b), a.max(b)));
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return false;
            }
        }
        for &v in &p[1..p.len() - 1] {
            if branch.contains(&v) {
                return false;
            }
            used_internal.push(v);
        }
        if !distinct(p) {
            return false;
        }
    }
    let mut want = want.to_vec();
    want.sort_unstable();
    got.sort_unstable();
    if want != got {
        return false;
    }
    let before = used_internal.len();
    used_internal.sort_unstable();
    used_internal.dedup();
    used_internal.len() == before
}

/// Golumbic's perfect-elimination check: for each vertex, its later
/// neighbors minus the earliest one must be adjacent to that earliest one.
fn check_peo(g: &SimpleGraph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            for &w in &later {
                if w != parent && !g.has_edge(parent, w) {
                    return false;
                }
            }
        }
    }
    true
}

fn check_cotree(g: &SimpleGraph, root: &CotreeNode) -> bool {
    let mut leaves = root.vertex_set();
    leaves.sort_unstable();
    if leaves != (0..g.vertex_count()).collect::<Vec<_>>() {
        return false;
    }
    fn node_ok(g: &SimpleGraph, node: &CotreeNode) -> Option<Vec<usize>> {
        match node {
            CotreeNode::Leaf(v) => Some(vec![*v]),
            CotreeNode::Union(cs) | CotreeNode::Join(cs) => {
                let join = matches!(node, CotreeNode::Join(_));
                if cs.len() < 2 {
                    return None;
                }
                let mut sets: Vec<Vec<usize>> = Vec::with_capacity(cs.len());
                for c in cs {
                    sets.push(node_ok(g, c)?);
                }
                for i in 0..sets.len() {
                    for j in (i + 1)..sets.len() {
                        for &u in &sets[i] {
                            for &v in &sets[j] {
                                if g.has_edge(u, v) != join {
                                    return None;
                                }
                            }
                        }
                    }
                }
                Some(sets.into_iter().flatten().collect())
            }
        }
    }
    node_ok(g, root).is_some()
}

/// Replay a peel order: each removed vertex must be isolated or dominating
/// within the still-present vertex set.
fn check_peel(g: &SimpleGraph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut present = BitSet::full(n);
    let mut remaining = n;
    for &v in order {
        if v >= n || !present.get(v) {
            return false;
        }
        let mut live_deg = 0usize;
        for u in g.neighbors(v) {
            if present.get(u) {
                live_deg += 1;
            }
        }
        if live_deg != 0 && live_deg != remaining - 1 {
            return false;
        }
        present.clear(v);
        remaining -= 1;
    }
    true
}

fn check_eulerian_circuit(g: &SimpleGraph, c: &[usize]) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        // trivial circuit on a single vertex
        return n <= 1 && c.len() == n;
    }
    if c.len() != m + 1 || c[0] != *c.last().unwrap() {
        return false;
    }
    let mut used: alloc::collections::BTreeSet<(usize, usize)> = alloc::collections::BTreeSet::new();
    for w in c.windows(2) {
        let (u, v) = (w[0], w[1]);
        if u >= n || v >= n || !g.has_edge(u, v) {
            return false;
        }
        if !used.insert((u.min(v), u.max(v))) {
            return false;
        }
    }
    // all m edges used exactly once, and every vertex is on the trail
    let mut touched = BitSet::new(n);
    for &v in c {
        touched.set(v);
    }
    used.len() == m && touched.count() == n
}
