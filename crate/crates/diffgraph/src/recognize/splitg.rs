//! Split-graph recognition by the Hammer–Simeone degree-sequence test.

use alloc::vec::Vec;

use crate::graph::SimpleGraph;
use crate::recognize::{search, Verdict, Witness};

/// Split iff the vertex set partitions into a clique and an independent
/// set; checked from the degree sequence. Positive witness: the partition.
/// Negative witness: an induced C4, C5 or 2K2 (one of these must exist in
/// a non-split graph).
pub fn is_split(g: &SimpleGraph) -> Verdict {
    let n = g.vertex_count();
    if n == 0 {
        return Verdict::vacuous();
    }
    // degrees descending, index ascending on ties
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    let d: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    // m = max{k : d_k >= k - 1} (1-based)
    let mut m = 0usize;
    for k in 1..=n {
        if d[k - 1] >= k - 1 {
            m = k;
        }
    }
    let top: usize = d[..m].iter().sum();
    let rest: usize = d[m..].iter().sum();
    if top == m * (m - 1) + rest {
        let clique: Vec<usize> = by_degree[..m].to_vec();
        let independent: Vec<usize> = by_degree[m..].to_vec();
        debug_assert!(clique
            .iter()
            .enumerate()
            .all(|(i, &u)| clique[i + 1..].iter().all(|&v| g.has_edge(u, v))));
        debug_assert!(independent
            .iter()
            .enumerate()
            .all(|(i, &u)| independent[i + 1..].iter().all(|&v| !g.has_edge(u, v))));
        return Verdict::yes(Witness::SplitPartition { clique, independent });
    }
    if let Some(c4) = search::find_induced_c4(g) {
        return Verdict::no(Witness::ChordlessCycle(c4.to_vec()));
    }
    if let Some(w) = search::find_2k2(g) {
        return Verdict::no(Witness::TwoK2(w));
    }
    // no C4 and no 2K2 but not split: all chordless cycles have length
    // exactly 5 (longer ones contain a 2K2)
    let cycle = search::find_chordless_cycle(g, None)
        .expect("a non-split C4-free 2K2-free graph contains a C5");
    debug_assert_eq!(cycle.len(), 5);
    Verdict::no(Witness::ChordlessCycle(cycle))
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
    fn stars_are_split() {
        let mut g = SimpleGraph::with_vertices(6);
        for v in 1..6 {
            g.add_edge(0, v);
        }
        let v = is_split(&g);
        assert_eq!(v.status, Status::True);
        assert!(v.witness.unwrap().check(&g));
    }

    #[test]
    fn k24_is_not_split() {
        let mut g = SimpleGraph::with_vertices(6);
        for u in 0..2 {
            for v in 2..6 {
                g.add_edge(u, v);
            }
        }
        let v = is_split(&g);
        assert_eq!(v.status, Status::False);
        let w = v.witness.unwrap();
        assert!(w.check(&g));
        assert!(matches!(w, Witness::ChordlessCycle(ref c) if c.len() == 4));
    }

    #[test]
    fn two_k2_refutes_split() {
        let g = graph_from_edges(4, &[(0, 1), (2, 3)]);
        let v = is_split(&g);
        assert_eq!(v.status, Status::False);
        let w = v.witness.unwrap();
        assert!(w.check(&g));
        assert!(matches!(w, Witness::TwoK2(_)));
    }

    #[test]
    fn c5_refutes_split_without_c4_or_2k2() {
        let g = graph_from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let v = is_split(&g);
        assert_eq!(v.status, Status::False);
        match v.witness.unwrap() {
            Witness::ChordlessCycle(c) => assert_eq!(c.len(), 5),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn clique_plus_pendant_is_split() {
        let g = graph_from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(is_split(&g).status, Status::True);
    }
}
