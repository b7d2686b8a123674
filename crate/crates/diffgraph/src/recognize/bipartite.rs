//! Bipartiteness by BFS 2-coloring; conflicts close into an odd cycle.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SimpleGraph;
use crate::recognize::{Verdict, Witness};

pub fn is_bipartite(g: &SimpleGraph) -> Verdict {
    let n = g.vertex_count();
    if n == 0 {
        return Verdict::vacuous();
    }
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    let cycle = odd_cycle_from_conflict(&parent, &depth, u, v);
                    debug_assert_eq!(cycle.len() % 2, 1);
                    return Verdict::no(Witness::OddCycle(cycle));
                }
            }
        }
    }
    Verdict::yes(Witness::TwoColoring(color))
}

/// Join the BFS-tree paths of the conflicting endpoints at their lowest
/// common ancestor; equal colors make the resulting cycle odd.
fn odd_cycle_from_conflict(
    parent: &[usize],
    depth: &[usize],
    u: usize,
    v: usize,
) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        left.push(a);
        b = parent[b];
        right.push(b);
    }
    // left ends at the LCA, right too; drop the duplicate
    right.pop();
    right.reverse();
    left.extend(right);
    left
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
    fn even_cycles_are_bipartite() {
        let g = graph_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let v = is_bipartite(&g);
        assert_eq!(v.status, Status::True);
        assert!(v.witness.unwrap().check(&g));
    }

    #[test]
    fn odd_cycles_are_not() {
        for k in [3usize, 5, 7] {
            let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let g = graph_from_edges(k, &edges);
            let v = is_bipartite(&g);
            assert_eq!(v.status, Status::False, "C{k}");
            let w = v.witness.unwrap();
            assert!(w.check(&g), "C{k}");
        }
    }

    #[test]
    fn triangle_with_tail() {
        let g = graph_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let v = is_bipartite(&g);
        assert_eq!(v.status, Status::False);
        let w = v.witness.unwrap();
        assert!(w.check(&g));
        match w {
            Witness::OddCycle(c) => assert_eq!(c.len(), 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn disconnected_bipartite() {
        let g = graph_from_edges(5, &[(0, 1), (2, 3), (3, 4)]);
        assert_eq!(is_bipartite(&g).status, Status::True);
    }
}
