//! Simple graphs over group elements, and the four standard builders.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;
use crate::group::Group;
use crate::DEFAULT_ELEMENT_CAP;

/// Errors from graph construction and queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize, cap: usize },
    UnknownVertex { vertex: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n, cap } => {
                write!(f, "graph with {n} vertices exceeds the cap {cap}")
            }
            GraphError::UnknownVertex { vertex, n } => {
                write!(f, "vertex {vertex} out of range 0..{n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// An undirected simple graph with bitset adjacency rows.
///
/// Vertices carry a display label and the index of the group element they
/// came from, so witnesses can be printed as group elements even after
/// vertex sets shrink (difference graphs drop isolated vertices).
#[derive(Clone, Debug)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<BitSet>,
    edge_count: usize,
    labels: Vec<String>,
    element_ids: Vec<u32>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>, element_ids: Vec<u32>) -> Self {
        let n = labels.len();
        assert!(
            n <= DEFAULT_ELEMENT_CAP,
            "graph with {n} vertices exceeds the build cap"
        );
        assert_eq!(n, element_ids.len());
        SimpleGraph {
            n,
            rows: vec![BitSet::new(n); n],
            edge_count: 0,
            labels,
            element_ids,
        }
    }

    /// Graph on `n` anonymous vertices labeled by index.
    pub fn with_vertices(n: usize) -> Self {
        let labels = (0..n).map(|i| alloc::format!("{i}")).collect();
        let ids = (0..n as u32).collect();
        SimpleGraph::new(labels, ids)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].get(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v, "no loops");
        if !self.rows[u].get(v) {
            self.rows[u].set(v);
            self.rows[v].set(u);
            self.edge_count += 1;
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if self.rows[u].get(v) {
            self.rows[u].clear(v);
            self.rows[v].clear(u);
            self.edge_count -= 1;
        }
    }

    #[inline]
    pub fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Group element index behind vertex `v`.
    pub fn element_id(&self, v: usize) -> u32 {
        self.element_ids[v]
    }

    pub fn element_ids(&self) -> &[u32] {
        &self.element_ids
    }

    /// Edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced by `vs` (labels preserved).
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<SimpleGraph, GraphError> {
        for &v in vs {
            if v >= self.n {
                return Err(GraphError::UnknownVertex { vertex: v, n: self.n });
            }
        }
        let labels = vs.iter().map(|&v| self.labels[v].clone()).collect();
        let ids = vs.iter().map(|&v| self.element_ids[v]).collect();
        let mut sub = SimpleGraph::new(labels, ids);
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(i, j);
                }
            }
        }
        Ok(sub)
    }

    /// Degrees sorted ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.get(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.set(start);
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.rows[u].iter() {
                    if !seen.get(v) {
                        seen.set(v);
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Complete-bipartite shape check: Some((m, n)) with m <= n iff the
    /// graph is K_{m,n}.
    pub fn complete_bipartite_sides(&self) -> Option<(usize, usize)> {
        if self.n < 2 || self.edge_count == 0 {
            return None;
        }
        let comps = self.components();
        if comps.len() != 1 {
            return None;
        }
        // 2-color by BFS, then demand all cross pairs adjacent
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut queue = vec![0usize];
        while let Some(u) = queue.pop() {
            for v in self.rows[u].iter() {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
        let a = color.iter().filter(|&&c| c == 0).count();
        let b = self.n - a;
        if self.edge_count == a * b {
            Some((a.min(b), a.max(b)))
        } else {
            None
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * (self.n.saturating_sub(1)) / 2 && self.n > 0
    }
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

fn full_vertex_graph(group: &Group) -> SimpleGraph {
    let labels = group.names().to_vec();
    let ids = (0..group.n() as u32).collect();
    SimpleGraph::new(labels, ids)
}

/// Power graph: x ~ y iff one is a power of the other, i.e. x ∈ ⟨y⟩ or
/// y ∈ ⟨x⟩.
pub fn power_graph(group: &Group) -> SimpleGraph {
    let lat = group.lattice();
    let mut g = full_vertex_graph(group);
    let n = group.n();
    for s in &lat.subgroups {
        // x ~ y whenever x generates the subgroup and y is any member
        let members: Vec<usize> = s.elements.iter().map(|&e| e as usize).collect();
        let member_mask = BitSet::from_indices(n, &members);
        let gens: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&e| group.element_order(e) == s.order)
            .collect();
        let gen_mask = BitSet::from_indices(n, &gens);
        for &e in &gens {
            g.rows[e].union_with(&member_mask);
        }
        for &f in &members {
            g.rows[f].union_with(&gen_mask);
        }
    }
    let mut bits = 0usize;
    for v in 0..n {
        g.rows[v].clear(v);
        bits += g.rows[v].count();
    }
    g.edge_count = bits / 2;
    g
}

/// Enhanced power graph: x ~ y iff both lie in a common cyclic subgroup,
/// equivalently in a common maximal cyclic subgroup.
pub fn enhanced_power_graph(group: &Group) -> SimpleGraph {
    let lat = group.lattice();
    let mut g = full_vertex_graph(group);
    let n = group.n();
    let mut edge_bits = 0usize;
    for id in lat.maximal_ids() {
        let s = lat.subgroup(id);
        let members: Vec<usize> = s.elements.iter().map(|&e| e as usize).collect();
        let mask = BitSet::from_indices(n, &members);
        for &e in &members {
            g.rows[e].union_with(&mask);
        }
    }
    for v in 0..n {
        g.rows[v].clear(v);
        edge_bits += g.rows[v].count();
    }
    g.edge_count = edge_bits / 2;
    g
}

/// Commuting graph: x ~ y iff xy = yx (x != y), on the whole element set.
pub fn commuting_graph(group: &Group) -> SimpleGraph {
    let mut g = full_vertex_graph(group);
    for a in 0..group.n() {
        for b in (a + 1)..group.n() {
            if group.mul(a, b) == group.mul(b, a) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Difference graph D: the edges of the enhanced power graph that are not
/// power graph edges, with isolated vertices removed. EPPO groups produce
/// the empty graph.
pub fn difference_graph(group: &Group) -> SimpleGraph {
    let p = power_graph(group);
    let pe = enhanced_power_graph(group);
    difference_of(group, &p, &pe)
}

/// The difference construction from prebuilt power and enhanced graphs.
pub fn difference_of(group: &Group, power: &SimpleGraph, enhanced: &SimpleGraph) -> SimpleGraph {
    let n = group.n();
    let mut diff_rows: Vec<BitSet> = Vec::with_capacity(n);
    for v in 0..n {
        let mut row = enhanced.row(v).clone();
        row.subtract(power.row(v));
        diff_rows.push(row);
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| !diff_rows[v].is_empty()).collect();
    let mut remap = vec![usize::MAX; n];
    for (i, &v) in survivors.iter().enumerate() {
        remap[v] = i;
    }
    let labels = survivors
        .iter()
        .map(|&v| group.name(v).into())
        .collect();
    let ids = survivors.iter().map(|&v| v as u32).collect();
    let mut g = SimpleGraph::new(labels, ids);
    for (i, &v) in survivors.iter().enumerate() {
        for w in diff_rows[v].iter() {
            let j = remap[w];
            debug_assert_ne!(j, usize::MAX);
            if j > i {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The vertex set the difference graph must have, computed from the lattice
/// alone: non-identity elements g whose ⟨g⟩ is not maximal and which lie in
/// some cyclic subgroup of non-prime-power order.
pub fn predicted_vertex_set(group: &Group) -> Vec<usize> {
    let lat = group.lattice();
    (0..group.n())
        .filter(|&v| {
            if v == group.identity() {
                return false;
            }
            let own = lat.generated_by(group, v);
            !lat.maximal[own as usize] && lat.in_composite_order_subgroup(v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::realize_default;
    use crate::spec::parse;

    fn group(text: &str) -> Group {
        realize_default(&parse(text).unwrap()).unwrap()
    }

    /// Pairwise power relation by repeated multiplication; independent of
    /// the lattice-based builder.
    fn naive_power_edges(g: &Group) -> Vec<(usize, usize)> {
        let in_generated = |a: usize, b: usize| {
            // a ∈ ⟨b⟩?
            let mut x = b;
            loop {
                if x == a {
                    return true;
                }
                if x == g.identity() {
                    return false;
                }
                x = g.mul(x, b);
            }
        };
        let mut out = Vec::new();
        for a in 0..g.n() {
            for b in (a + 1)..g.n() {
                if in_generated(a, b) || in_generated(b, a) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Common-cyclic relation by exhaustive subgroup scan.
    fn naive_enhanced_edges(g: &Group) -> Vec<(usize, usize)> {
        let lat = g.lattice();
        let mut out = Vec::new();
        for a in 0..g.n() {
            for b in (a + 1)..g.n() {
                let joint = lat
                    .subgroups
                    .iter()
                    .any(|s| s.contains(a) && s.contains(b));
                if joint {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn power_graph_z4_is_complete() {
        let g = power_graph(&group("Z4"));
        assert!(g.is_complete());
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn power_graph_s3_exact_edges() {
        let grp = group("S3");
        let g = power_graph(&grp);
        assert_eq!(g.edges(), naive_power_edges(&grp));
        // identity adjacent to all, plus the two 3-cycles adjacent
        assert_eq!(g.edge_count(), 6);
        let e = grp.identity();
        assert_eq!(g.degree(e), 5);
    }

    #[test]
    fn power_graph_z6_exact_edges() {
        let grp = group("Z6");
        let g = power_graph(&grp);
        assert_eq!(g.edges(), naive_power_edges(&grp));
        // not complete: the involution 3 and the order-3 elements 2, 4 are
        // not power-related
        assert!(!g.has_edge(3, 2));
        assert!(!g.has_edge(3, 4));
        assert_eq!(g.edge_count(), 13);
    }

    #[test]
    fn enhanced_graph_matches_naive_common_cyclic() {
        for text in ["Z6", "S3", "Z12", "D30", "Q12", "Z2 x Z9"] {
            let grp = group(text);
            let g = enhanced_power_graph(&grp);
            assert_eq!(g.edges(), naive_enhanced_edges(&grp), "{text}");
        }
    }

    #[test]
    fn enhanced_z6_is_complete() {
        let g = enhanced_power_graph(&group("Z6"));
        assert!(g.is_complete());
    }

    #[test]
    fn enhanced_s3_equals_power_s3() {
        let grp = group("S3");
        assert_eq!(
            enhanced_power_graph(&grp).edges(),
            power_graph(&grp).edges()
        );
    }

    #[test]
    fn enhanced_d30_rotations_form_clique() {
        let grp = group("D30");
        let g = enhanced_power_graph(&grp);
        // rotations are elements 0..15, reflections 15..30
        for a in 1..15 {
            for b in (a + 1)..15 {
                assert!(g.has_edge(a, b), "rotations {a},{b}");
            }
        }
        // each reflection is adjacent only to the identity
        for r in 15..30 {
            assert_eq!(g.degree(r), 1);
            assert!(g.has_edge(r, 0));
        }
    }

    #[test]
    fn commuting_graph_abelian_is_complete() {
        assert!(commuting_graph(&group("Z2 x Z9")).is_complete());
        assert!(commuting_graph(&group("Z12")).is_complete());
    }

    #[test]
    fn commuting_graph_s3() {
        let grp = group("S3");
        let g = commuting_graph(&grp);
        let three_cycles: Vec<usize> = (0..grp.n())
            .filter(|&v| grp.element_order(v) == 3)
            .collect();
        assert!(g.has_edge(three_cycles[0], three_cycles[1]));
        let transpositions: Vec<usize> = (0..grp.n())
            .filter(|&v| grp.element_order(v) == 2)
            .collect();
        for (i, &a) in transpositions.iter().enumerate() {
            for &b in &transpositions[i + 1..] {
                assert!(!g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn difference_d30_is_k24() {
        let grp = group("D30");
        let d = difference_graph(&grp);
        assert_eq!(d.vertex_count(), 6);
        assert_eq!(d.edge_count(), 8);
        assert_eq!(d.complete_bipartite_sides(), Some((2, 4)));
        // the vertices are the rotations of orders 3 and 5
        for v in 0..d.vertex_count() {
            let e = d.element_id(v) as usize;
            assert!(matches!(grp.element_order(e), 3 | 5));
        }
    }

    #[test]
    fn difference_of_eppo_group_is_empty() {
        let d = difference_graph(&group("S4"));
        assert_eq!(d.vertex_count(), 0);
        assert_eq!(d.edge_count(), 0);
        let d = difference_graph(&group("Z4"));
        assert_eq!(d.vertex_count(), 0);
    }

    #[test]
    fn difference_z15_is_k24() {
        let d = difference_graph(&group("Z15"));
        assert_eq!(d.complete_bipartite_sides(), Some((2, 4)));
        assert_eq!(d.vertex_count(), 6);
        assert_eq!(d.edge_count(), 8);
    }

    #[test]
    fn predicted_vertex_set_examples() {
        let d30 = group("D30");
        let pv = predicted_vertex_set(&d30);
        assert_eq!(pv.len(), 6);
        for &v in &pv {
            assert!(matches!(d30.element_order(v), 3 | 5));
        }

        let z12 = group("Z12");
        let pv = predicted_vertex_set(&z12);
        assert_eq!(pv.len(), 7);
        for &v in &pv {
            assert!(matches!(z12.element_order(v), 2 | 3 | 4 | 6));
        }

        assert!(predicted_vertex_set(&group("S4")).is_empty());
    }

    #[test]
    fn difference_vertices_match_prediction() {
        for text in ["D30", "Z12", "Z15", "S4", "S5", "Q12", "Z2 x Z9"] {
            let grp = group(text);
            let d = difference_graph(&grp);
            let mut got: Vec<usize> =
                (0..d.vertex_count()).map(|v| d.element_id(v) as usize).collect();
            got.sort_unstable();
            assert_eq!(got, predicted_vertex_set(&grp), "{text}");
        }
    }

    #[test]
    fn edge_chain_power_enhanced_commuting() {
        for text in ["Z6", "S3", "S4", "D30", "Q12", "Z2 x Z9", "Z12"] {
            let grp = group(text);
            let p = power_graph(&grp);
            let pe = enhanced_power_graph(&grp);
            let c = commuting_graph(&grp);
            for v in 0..grp.n() {
                assert!(p.row(v).is_subset_of(pe.row(v)), "{text}: P ⊆ PE at {v}");
                assert!(pe.row(v).is_subset_of(c.row(v)), "{text}: PE ⊆ Δ at {v}");
            }
        }
    }

    #[test]
    fn induced_subgraph_basics() {
        let grp = group("Z15");
        let d = difference_graph(&grp);
        // restrict K_{2,4} to one side: empty graph on those vertices
        let side: Vec<usize> = (0..d.vertex_count())
            .filter(|&v| grp.element_order(d.element_id(v) as usize) == 5)
            .collect();
        let sub = d.induced_subgraph(&side).unwrap();
        assert_eq!(sub.vertex_count(), 4);
        assert_eq!(sub.edge_count(), 0);
        // restriction to all vertices is the identity
        let all: Vec<usize> = (0..d.vertex_count()).collect();
        let same = d.induced_subgraph(&all).unwrap();
        assert_eq!(same.edges(), d.edges());
        // unknown vertex errors
        assert!(matches!(
            d.induced_subgraph(&[0, 99]),
            Err(GraphError::UnknownVertex { .. })
        ));
    }

    #[test]
    fn difference_s5_counts() {
        let d = difference_graph(&group("S5"));
        assert_eq!(d.vertex_count(), 30);
        assert_eq!(d.edge_count(), 20);
        assert_eq!(d.components().len(), 10);
    }
}
