//! Threshold-graph recognition by iterative peeling.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::graph::SimpleGraph;
use crate::recognize::{search, Verdict, Witness};

/// Threshold iff repeatedly removing an isolated or dominating vertex
/// empties the graph. Positive witness: the peel order. Negative witness:
/// an induced C4, P4 or 2K2.
pub fn is_threshold(g: &SimpleGraph) -> Verdict {
    let n = g.vertex_count();
    if n == 0 {
        return Verdict::vacuous();
    }
    let mut present = BitSet::full(n);
    let mut live_deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut order = Vec::with_capacity(n);
    while remaining > 0 {
        let pick = present
            .iter()
            .find(|&v| live_deg[v] == 0 || live_deg[v] == remaining - 1);
        match pick {
            Some(v) => {
                order.push(v);
                present.clear(v);
                remaining -= 1;
                for u in g.neighbors(v) {
                    if present.get(u) {
                        live_deg[u] -= 1;
                    }
                }
            }
            None => break,
        }
    }
    if remaining == 0 {
        return Verdict::yes(Witness::PeelOrder(order));
    }
    if let Some(c4) = search::find_induced_c4(g) {
        return Verdict::no(Witness::ChordlessCycle(c4.to_vec()));
    }
    if let Some(w) = search::find_2k2(g) {
        return Verdict::no(Witness::TwoK2(w));
    }
    let p4 = search::find_p4(g, None)
        .expect("a non-threshold graph contains an induced C4, P4 or 2K2");
    Verdict::no(Witness::InducedP4(p4))
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
    fn stars_are_threshold() {
        let mut g = SimpleGraph::with_vertices(7);
        for v in 1..7 {
            g.add_edge(0, v);
        }
        let v = is_threshold(&g);
        assert_eq!(v.status, Status::True);
        assert!(v.witness.unwrap().check(&g));
    }

    #[test]
    fn p4_is_not_threshold() {
        let g = graph_from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let v = is_threshold(&g);
        assert_eq!(v.status, Status::False);
        let w = v.witness.unwrap();
        assert!(w.check(&g));
        assert!(matches!(w, Witness::InducedP4(_)));
    }

    #[test]
    fn c4_is_not_threshold() {
        let g = graph_from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let v = is_threshold(&g);
        assert_eq!(v.status, Status::False);
        assert!(matches!(v.witness.unwrap(), Witness::ChordlessCycle(_)));
    }

    #[test]
    fn two_k2_is_not_threshold() {
        let g = graph_from_edges(5, &[(0, 1), (2, 3)]);
        let v = is_threshold(&g);
        assert_eq!(v.status, Status::False);
        assert!(matches!(v.witness.unwrap(), Witness::TwoK2(_)));
    }

    #[test]
    fn nested_neighborhoods_are_threshold() {
        // built by adding dominating/isolated vertices in sequence
        let g = graph_from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let v = is_threshold(&g);
        assert_eq!(v.status, Status::True);
        assert!(v.witness.unwrap().check(&g));
    }
}
