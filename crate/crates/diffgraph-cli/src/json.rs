//! Machine-readable rendering of class reports (schema "v1").
//!
//! Field names are snake_case; witness vertices are reported as element
//! display names plus raw element indices. serde_json maps are sorted by
//! key, so identical reports serialize to identical bytes.

use diffgraph::graph::SimpleGraph;
use diffgraph::recognize::{Status, Witness};
use diffgraph::theorems::ClassReport;
use serde_json::{json, Map, Value};

pub fn status_str(s: Status) -> &'static str {
    match s {
        Status::True => "true",
        Status::False => "false",
        Status::Vacuous => "vacuous",
    }
}

fn element(g: &SimpleGraph, v: usize) -> Value {
    json!({
        "index": g.element_id(v),
        "name": g.label(v),
    })
}

fn witness_json(g: &SimpleGraph, w: &Witness) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(w.kind()));
    match w {
        Witness::ChordlessCycle(c) | Witness::OddCycle(c) | Witness::EulerianCircuit(c) => {
            let verts: Vec<Value> = if matches!(w, Witness::EulerianCircuit(_)) && c.len() > 64 {
                Vec::new()
            } else {
                c.iter().map(|&v| element(g, v)).collect()
            };
            obj.insert("vertices".into(), json!(verts));
            obj.insert("length".into(), json!(c.len()));
        }
        Witness::InducedP4(vs) | Witness::TwoK2(vs) => {
            let verts: Vec<Value> = vs.iter().map(|&v| element(g, v)).collect();
            obj.insert("vertices".into(), json!(verts));
        }
        Witness::OddDegreeVertex(v)
        | Witness::DominatingVertex(v)
        | Witness::StarCenter(v) => {
            obj.insert("vertex".into(), element(g, *v));
        }
        Witness::Disconnected { u, v } => {
            obj.insert("vertices".into(), json!([element(g, *u), element(g, *v)]));
        }
        Witness::CliqueSubdivision { branch, paths } => {
            obj.insert(
                "branch".into(),
                json!(branch.iter().map(|&v| element(g, v)).collect::<Vec<_>>()),
            );
            obj.insert(
                "paths".into(),
                json!(paths
                    .iter()
                    .map(|p| p.iter().map(|&v| element(g, v)).collect::<Vec<_>>())
                    .collect::<Vec<_>>()),
            );
        }
        Witness::BipartiteSubdivision { left, right, paths } => {
            obj.insert(
                "left".into(),
                json!(left.iter().map(|&v| element(g, v)).collect::<Vec<_>>()),
            );
            obj.insert(
                "right".into(),
                json!(right.iter().map(|&v| element(g, v)).collect::<Vec<_>>()),
            );
            obj.insert(
                "paths".into(),
                json!(paths
                    .iter()
                    .map(|p| p.iter().map(|&v| element(g, v)).collect::<Vec<_>>())
                    .collect::<Vec<_>>()),
            );
        }
        Witness::EdgeBothBranched { u, w, a, b } => {
            obj.insert(
                "vertices".into(),
                json!([element(g, *u), element(g, *w), element(g, *a), element(g, *b)]),
            );
        }
        Witness::NoDominatingVertex(pairs) => {
            obj.insert("pair_count".into(), json!(pairs.len()));
        }
        Witness::TooSmall => {}
        Witness::EliminationOrder(o) => {
            obj.insert("length".into(), json!(o.len()));
        }
        Witness::Cotree(t) => {
            obj.insert("leaves".into(), json!(t.vertex_set().len()));
        }
        Witness::SplitPartition { clique, independent } => {
            obj.insert("clique_size".into(), json!(clique.len()));
            obj.insert("independent_size".into(), json!(independent.len()));
        }
        Witness::PeelOrder(o) => {
            obj.insert("length".into(), json!(o.len()));
        }
        Witness::TwoColoring(c) => {
            obj.insert(
                "side_sizes".into(),
                json!([
                    c.iter().filter(|&&x| x == 0).count(),
                    c.iter().filter(|&&x| x == 1).count()
                ]),
            );
        }
        Witness::Embedding(rot) | Witness::OuterEmbedding(rot) => {
            obj.insert("rotation_count".into(), json!(rot.len()));
        }
    }
    Value::Object(obj)
}

pub fn report_to_json(report: &ClassReport) -> Value {
    let prof = &report.profile;
    let sylow: Value = match &prof.sylow {
        None => Value::Null,
        Some(infos) => json!(infos
            .iter()
            .map(|s| json!({"prime": s.prime, "size": s.size, "exponent": s.exponent}))
            .collect::<Vec<_>>()),
    };
    let mut classes = Map::new();
    for (class, res) in &report.classes {
        let witness = res
            .observed
            .witness
            .as_ref()
            .map(|w| witness_json(&report.difference, w))
            .unwrap_or(Value::Null);
        classes.insert(
            class.name().into(),
            json!({
                "observed": status_str(res.observed.status),
                "predicted": res.predicted,
                "agrees": res.agrees,
                "witness": witness,
            }),
        );
    }
    json!({
        "schema": "v1",
        "spec": report.spec,
        "group": {
            "order": prof.order,
            "spectrum": prof.spectrum,
            "exponent": prof.exponent,
            "eppo": prof.eppo,
            "nilpotent": prof.nilpotent,
            "condition_a": prof.condition_a,
            "condition_b": prof.condition_b,
            "family": prof.family.to_string(),
            "sylow": sylow,
        },
        "difference_graph": {
            "vertex_count": report.difference.vertex_count(),
            "edge_count": report.difference.edge_count(),
        },
        "classes": Value::Object(classes),
        "mismatch_count": report.mismatches().len(),
    })
}
