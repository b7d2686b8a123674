//! DOT export with deterministic vertex order.

use diffgraph::graph::SimpleGraph;
use std::fmt::Write;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Render the graph in DOT: node ids are element names, vertices ascending
/// by element index, edges ascending (u, v) with u < v.
pub fn graph_to_dot(name: &str, g: &SimpleGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(name));
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {};", quote(g.label(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.label(u)), quote(g.label(v)));
    }
    out.push_str("}\n");
    out
}
