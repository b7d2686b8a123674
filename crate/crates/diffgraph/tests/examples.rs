//! Cross-module checks on named small groups: difference graphs through
//! the recognizers, with every witness re-verified.

use diffgraph::graph::{self, SimpleGraph};
use diffgraph::group::{self, Group};
use diffgraph::recognize::{self, Status, Witness};
use diffgraph::spec;

fn realize(text: &str) -> Group {
    group::realize_default(&spec::parse(text).unwrap()).unwrap()
}

fn diff(text: &str) -> (Group, SimpleGraph) {
    let g = realize(text);
    let d = graph::difference_graph(&g);
    (g, d)
}

#[test]
fn d_z45_is_eulerian() {
    let (_, d) = diff("Z45");
    let v = recognize::is_eulerian(&d);
    assert_eq!(v.status, Status::True);
    assert!(v.witness.unwrap().check(&d));
}

#[test]
fn d_s5_is_disconnected_with_ten_components() {
    let (_, d) = diff("S5");
    assert_eq!(d.components().len(), 10);
    let v = recognize::is_eulerian(&d);
    assert_eq!(v.status, Status::False);
    let w = v.witness.unwrap();
    assert!(matches!(w, Witness::Disconnected { .. }));
    assert!(w.check(&d));
}

#[test]
fn d_z6_is_a_path_star_and_outerplanar() {
    let (g, d) = diff("Z6");
    // K_{1,2}: the involution joined to the two order-3 elements
    assert_eq!(d.vertex_count(), 3);
    assert_eq!(d.edge_count(), 2);
    let doms = recognize::dominating_vertices(&d);
    assert_eq!(doms.len(), 1);
    let center_element = d.element_id(doms[0]) as usize;
    assert_eq!(g.element_order(center_element), 2);

    let v = recognize::is_outerplanar(&d);
    assert_eq!(v.status, Status::True);
    assert!(v.witness.unwrap().check(&d));
    assert_eq!(recognize::is_star(&d).status, Status::True);
}

#[test]
fn d_d30_class_summary() {
    let (_, d) = diff("D30");
    assert!(recognize::dominating_vertices(&d).is_empty());
    assert_eq!(recognize::is_star(&d).status, Status::False);
    assert_eq!(recognize::is_split(&d).status, Status::False);
    assert_eq!(recognize::is_threshold(&d).status, Status::False);
    assert_eq!(recognize::is_bipartite(&d).status, Status::True);
    let outer = recognize::is_outerplanar(&d);
    assert_eq!(outer.status, Status::False);
    assert!(outer.witness.unwrap().check(&d));
    let planar = recognize::is_planar(&d);
    assert_eq!(planar.status, Status::True);
    assert!(planar.witness.unwrap().check(&d));
}

#[test]
fn d_z3_x_z25_cyclic_literal_vs_exponent_five() {
    // the cyclic group of order 75 has a K33 among its order-15 and
    // order-25 elements, so its difference graph is not planar
    let (_, d75) = diff("Z3 x Z25");
    assert_eq!(recognize::is_planar(&d75).status, Status::False);
    // the exponent-5 group of order 25 gives the planar K_{2,24}
    let (_, d) = diff("Z3 x Z5 x Z5");
    assert_eq!(d.complete_bipartite_sides(), Some((2, 24)));
    assert_eq!(recognize::is_planar(&d).status, Status::True);
    let v = recognize::is_outerplanar(&d);
    assert_eq!(v.status, Status::False);
    let w = v.witness.unwrap();
    assert!(matches!(w, Witness::BipartiteSubdivision { ref left, .. } if left.len() == 2));
    assert!(w.check(&d));
}

#[test]
fn induced_c4_inside_d_s6_matches_named_cycle() {
    // (1 2) ~ (3 4 5) ~ (1 6) ~ (3 5 4) ~ (1 2) is an induced 4-cycle
    let (_, d) = diff("S6");
    let find = |name: &str| -> usize {
        (0..d.vertex_count())
            .find(|&v| d.label(v) == name)
            .unwrap_or_else(|| panic!("vertex {name} missing"))
    };
    let cycle = [find("(1 2)"), find("(3 4 5)"), find("(1 6)"), find("(3 5 4)")];
    let w = Witness::ChordlessCycle(cycle.to_vec());
    assert!(w.check(&d));
    let sub = d.induced_subgraph(&cycle).unwrap();
    assert_eq!(sub.edge_count(), 4);
    assert_eq!(sub.degree_multiset(), vec![2, 2, 2, 2]);
}

#[test]
fn induced_c4_inside_d_a7_matches_named_cycle() {
    // (1 2)(3 4) ~ (5 6 7) ~ (1 3)(2 4) ~ (5 7 6) ~ (1 2)(3 4)
    let (_, d) = diff("A7");
    let find = |name: &str| -> usize {
        (0..d.vertex_count())
            .find(|&v| d.label(v) == name)
            .unwrap_or_else(|| panic!("vertex {name} missing"))
    };
    let cycle = [
        find("(1 2)(3 4)"),
        find("(5 6 7)"),
        find("(1 3)(2 4)"),
        find("(5 7 6)"),
    ];
    assert!(Witness::ChordlessCycle(cycle.to_vec()).check(&d));
}

#[test]
fn p4_inside_d_a8_matches_named_path() {
    // (1 2)(3 4) ~ (5 6 7) ~ (1 2)(3 8) ~ (5 6 4): an induced path
    let (_, d) = diff("A8");
    let find = |name: &str| -> usize {
        (0..d.vertex_count())
            .find(|&v| d.label(v) == name)
            .unwrap_or_else(|| panic!("vertex {name} missing"))
    };
    // (564) written from its smallest moved point is (4 5 6)
    let path = [
        find("(1 2)(3 4)"),
        find("(5 6 7)"),
        find("(1 2)(3 8)"),
        find("(4 5 6)"),
    ];
    assert!(Witness::InducedP4(path).check(&d));
}
