//! Eulerian recognition: connected with all degrees even; the positive
//! certificate is an explicit closed trail (Hierholzer).

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SimpleGraph;
use crate::recognize::{Verdict, Witness};

/// Eulerian iff connected and every degree is even (a disconnected graph
/// with even degrees is not Eulerian). Connectivity is reported first, so
/// split difference graphs show the disconnection rather than a stray odd
/// degree.
pub fn is_eulerian(g: &SimpleGraph) -> Verdict {
    let n = g.vertex_count();
    if n == 0 {
        return Verdict::vacuous();
    }
    let comps = g.components();
    if comps.len() > 1 {
        return Verdict::no(Witness::Disconnected {
            u: comps[0][0],
            v: comps[1][0],
        });
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) % 2 == 1) {
        return Verdict::no(Witness::OddDegreeVertex(v));
    }
    Verdict::yes(Witness::EulerianCircuit(hierholzer(g)))
}

/// Closed trail through every edge exactly once; assumes the graph is
/// connected with even degrees. Edges leave each vertex in ascending
/// neighbor order, so the circuit is deterministic.
fn hierholzer(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        // single vertex, trivial circuit
        return vec![0];
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut next_idx = vec![0usize; n];
    let mut used = alloc::collections::BTreeSet::new();
    let mut stack = vec![0usize];
    let mut circuit = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        while next_idx[v] < adj[v].len() {
            let u = adj[v][next_idx[v]];
            next_idx[v] += 1;
            let key = (v.min(u), v.max(u));
            if used.insert(key) {
                stack.push(u);
                advanced = true;
                break;
            }
        }
        if !advanced {
            circuit.push(v);
            stack.pop();
        }
    }
    circuit.reverse();
    circuit
}
