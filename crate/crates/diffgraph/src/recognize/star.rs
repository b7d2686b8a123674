//! Dominating vertices and star-shape recognition.

use alloc::vec::Vec;

use crate::graph::SimpleGraph;
use crate::recognize::{Verdict, Witness};

/// All vertices adjacent to every other vertex, ascending.
pub fn dominating_vertices(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n).filter(|&v| g.degree(v) == n - 1).collect()
}

/// For each vertex of a dominating-vertex-free graph, its first
/// non-neighbor.
fn no_dominating_witness(g: &SimpleGraph) -> Witness {
    let n = g.vertex_count();
    let pairs: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            let w = (0..n)
                .find(|&w| w != v && !g.has_edge(v, w))
                .expect("vertex with no non-neighbor dominates");
            (v, w)
        })
        .collect();
    Witness::NoDominatingVertex(pairs)
}

/// Does the graph have a dominating vertex?
pub fn is_dominatable(g: &SimpleGraph) -> Verdict {
    if g.vertex_count() == 0 {
        return Verdict::vacuous();
    }
    match dominating_vertices(g).first() {
        Some(&v) => Verdict::yes(Witness::DominatingVertex(v)),
        None => Verdict::no(no_dominating_witness(g)),
    }
}

/// Is the graph a star K_{1,n} (n >= 1): one center adjacent to all, every
/// other vertex a leaf?
pub fn is_star(g: &SimpleGraph) -> Verdict {
    let n = g.vertex_count();
    if n == 0 {
        return Verdict::vacuous();
    }
    if n < 2 {
        return Verdict::no(Witness::TooSmall);
    }
    let doms = dominating_vertices(g);
    let center = match doms.first() {
        Some(&c) => c,
        None => return Verdict::no(no_dominating_witness(g)),
    };
    if g.edge_count() == n - 1 {
        // center degree n-1 forces all other degrees to be exactly 1
        return Verdict::yes(Witness::StarCenter(center));
    }
    // an edge avoiding the center shows two branched endpoints
    let (u, w) = g
        .edges()
        .into_iter()
        .find(|&(u, w)| u != center && w != center)
        .expect("edge count exceeds n-1 with a dominating vertex");
    Verdict::no(Witness::EdgeBothBranched {
        u,
        w,
        a: center,
        b: center,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::Status;

    #[test]
    fn star_recognized() {
        let mut g = SimpleGraph::with_vertices(7);
        for v in 1..7 {
            g.add_edge(0, v);
        }
        let v = is_star(&g);
        assert_eq!(v.status, Status::True);
        assert!(v.witness.unwrap().check(&g));
        assert_eq!(dominating_vertices(&g), vec![0]);
    }

    #[test]
    fn single_edge_is_a_star() {
        let mut g = SimpleGraph::with_vertices(2);
        g.add_edge(0, 1);
        let v = is_star(&g);
        assert_eq!(v.status, Status::True);
        assert!(v.witness.unwrap().check(&g));
    }

    #[test]
    fn triangle_is_not_a_star() {
        let mut g = SimpleGraph::with_vertices(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        let v = is_star(&g);
        assert_eq!(v.status, Status::False);
        let w = v.witness.unwrap();
        assert!(w.check(&g));
        assert!(matches!(w, Witness::EdgeBothBranched { .. }));
    }

    #[test]
    fn k24_not_dominatable() {
        let mut g = SimpleGraph::with_vertices(6);
        for u in 0..2 {
            for w in 2..6 {
                g.add_edge(u, w);
            }
        }
        let v = is_dominatable(&g);
        assert_eq!(v.status, Status::False);
        let w = v.witness.unwrap();
        assert!(w.check(&g));
        assert_eq!(is_star(&g).status, Status::False);
        assert!(dominating_vertices(&g).is_empty());
    }

    #[test]
    fn empty_graph_vacuous() {
        let g = SimpleGraph::with_vertices(0);
        assert_eq!(is_star(&g).status, Status::Vacuous);
        assert_eq!(is_dominatable(&g).status, Status::Vacuous);
    }
}
