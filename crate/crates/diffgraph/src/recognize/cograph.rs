//! Cograph recognition by complement-connectivity decomposition.
//!
//! A graph is a cograph iff every induced subgraph on >= 2 vertices is
//! disconnected or co-disconnected. The recursion yields the cotree; a
//! subgraph that is connected both ways contains an induced P4, located by
//! a directed search over its edges.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::graph::SimpleGraph;
use crate::recognize::{search, CotreeNode, Verdict, Witness};

pub fn is_cograph(g: &SimpleGraph) -> Verdict {
    let n = g.vertex_count();
    if n == 0 {
        return Verdict::vacuous();
    }
    match decompose(g, &BitSet::full(n)) {
        Ok(tree) => Verdict::yes(Witness::Cotree(tree)),
        Err(p4) => Verdict::no(Witness::InducedP4(p4)),
    }
}

fn decompose(g: &SimpleGraph, mask: &BitSet) -> Result<CotreeNode, [usize; 4]> {
    let members = mask.to_indices();
    if members.len() == 1 {
        return Ok(CotreeNode::Leaf(members[0]));
    }
    let comps = components_within(g, mask);
    if comps.len() > 1 {
        let mut children = Vec::with_capacity(comps.len());
        for c in &comps {
            children.push(decompose(g, c)?);
        }
        return Ok(CotreeNode::Union(children));
    }
    let cocomps = co_components_within(g, mask);
    if cocomps.len() > 1 {
        let mut children = Vec::with_capacity(cocomps.len());
        for c in &cocomps {
            children.push(decompose(g, c)?);
        }
        return Ok(CotreeNode::Join(children));
    }
    // connected and co-connected on >= 2 vertices: an induced P4 exists
    let p4 = search::find_p4(g, Some(mask))
        .expect("connected, co-connected subgraph must contain an induced P4");
    Err(p4)
}

/// Connected components of the subgraph induced by `mask`, as masks,
/// ordered by smallest vertex.
pub(crate) fn components_within(g: &SimpleGraph, mask: &BitSet) -> Vec<BitSet> {
    let n = g.vertex_count();
    let mut unvisited = mask.clone();
    let mut out = Vec::new();
    while let Some(start) = unvisited.first() {
        let mut comp = BitSet::new(n);
        comp.set(start);
        unvisited.clear(start);
        let mut stack = alloc::vec![start];
        while let Some(u) = stack.pop() {
            let mut next = g.row(u).clone();
            next.intersect_with(&unvisited);
            for v in next.iter() {
                unvisited.clear(v);
                comp.set(v);
                stack.push(v);
            }
        }
        out.push(comp);
    }
    out
}

/// Components of the complement of the subgraph induced by `mask`.
fn co_components_within(g: &SimpleGraph, mask: &BitSet) -> Vec<BitSet> {
    let n = g.vertex_count();
    let mut unvisited = mask.clone();
    let mut out = Vec::new();
    while let Some(start) = unvisited.first() {
        let mut comp = BitSet::new(n);
        comp.set(start);
        unvisited.clear(start);
        let mut stack = alloc::vec![start];
        while let Some(u) = stack.pop() {
            // complement neighbors: unvisited vertices not adjacent to u
            let mut next = unvisited.clone();
            next.subtract(g.row(u));
            next.clear(u);
            for v in next.iter() {
                unvisited.clear(v);
                comp.set(v);
                stack.push(v);
            }
        }
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::Status;

    fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[test]
    fn empty_graph_is_vacuous() {
        let g = SimpleGraph::with_vertices(0);
        assert_eq!(is_cograph(&g).status, Status::Vacuous);
    }

    #[test]
    fn p4_is_not_a_cograph() {
        let g = graph_from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let v = is_cograph(&g);
        assert_eq!(v.status, Status::False);
        let w = v.witness.unwrap();
        assert!(matches!(w, Witness::InducedP4(_)));
        assert!(w.check(&g));
    }

    #[test]
    fn complete_bipartite_is_a_cograph() {
        let mut g = SimpleGraph::with_vertices(5);
        for u in 0..2 {
            for v in 2..5 {
                g.add_edge(u, v);
            }
        }
        let v = is_cograph(&g);
        assert_eq!(v.status, Status::True);
        let w = v.witness.unwrap();
        assert!(w.check(&g));
    }

    #[test]
    fn disjoint_cliques_are_cographs() {
        let g = graph_from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let v = is_cograph(&g);
        assert_eq!(v.status, Status::True);
        assert!(v.witness.unwrap().check(&g));
    }

    #[test]
    fn c5_is_not_a_cograph() {
        let g = graph_from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let v = is_cograph(&g);
        assert_eq!(v.status, Status::False);
        assert!(v.witness.unwrap().check(&g));
    }
}
