//! Structure-based predictions for difference-graph classes, and the
//! prediction-vs-recognizer harness.
//!
//! Two spectrum-plus-intersection conditions on a group G drive the
//! arbitrary-group predictions:
//!
//! * condition A: every element order is 1, a prime power, or twice an odd
//!   prime, and two distinct cyclic subgroups of the same order 2p meet in
//!   at most 2 elements. Equivalent to D(G) being chordal (and C4-free).
//! * condition B: the same spectrum constraint, and any two distinct
//!   cyclic subgroups of orders 2p and 2q (p, q odd primes) meet in
//!   exactly 2 elements. Equivalent to D(G) being a star, dominatable,
//!   threshold, or split.
//!
//! Nilpotent groups get family-based predictions for all ten classes from
//! their Sylow profile; symmetric and alternating groups (recognized from
//! the parsed description, not by isomorphism testing) get the known
//! chordal/cograph/split/threshold classifications.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{self, SimpleGraph};
use crate::group::{is_prime, is_prime_power, Group};
use crate::recognize::{self, Verdict};
use crate::spec::{Atom, GroupSpec, SpecNode};

/// Does the order spectrum fit {1} ∪ {2p : p odd prime} ∪ {prime powers}?
/// Returns the odd primes p with 2p in the spectrum.
fn spectrum_primes(group: &Group) -> Option<Vec<u32>> {
    let mut ps = Vec::new();
    for &o in group.order_spectrum().iter() {
        if o == 1 || is_prime_power(o as u64) {
            continue;
        }
        let half = o / 2;
        if o % 2 == 0 && half % 2 == 1 && is_prime(half as u64) {
            ps.push(half);
        } else {
            return None;
        }
    }
    Some(ps)
}

/// Condition A: spectrum constraint plus |M ∩ N| <= 2 for distinct cyclic
/// subgroups M != N of the same order 2p.
pub fn condition_a(group: &Group) -> bool {
    let ps = match spectrum_primes(group) {
        Some(ps) => ps,
        None => return false,
    };
    let lat = group.lattice();
    for &p in &ps {
        let ids = lat.ids_of_order(2 * p);
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                if lat.intersection_size(a, b) > 2 {
                    return false;
                }
            }
        }
    }
    true
}

/// Condition B: spectrum constraint plus |M ∩ N| = 2 for every pair of
/// distinct cyclic subgroups with orders in {2p : p odd prime in the
/// spectrum} (possibly different primes). With at most one such subgroup
/// the pair condition holds vacuously.
pub fn condition_b(group: &Group) -> bool {
    let ps = match spectrum_primes(group) {
        Some(ps) => ps,
        None => return false,
    };
    let lat = group.lattice();
    let mut ids: Vec<u32> = Vec::new();
    for &p in &ps {
        ids.extend_from_slice(lat.ids_of_order(2 * p));
    }
    ids.sort_unstable();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if lat.intersection_size(a, b) != 2 {
                return false;
            }
        }
    }
    true
}

/// One Sylow factor of a nilpotent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowInfo {
    pub prime: u32,
    pub size: usize,
    /// Exponent of the factor; for a p-group this is its largest element
    /// order.
    pub exponent: u32,
}

/// The structural family a group falls into, used for reporting. The
/// predictions themselves are computed from the underlying predicates, so
/// overlapping families are harmless.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    /// Z2 x P with P a p-group of exponent p > 2.
    TwoTimesOddPGroup,
    /// Z3 x P with P a p-group of exponent p > 3.
    ThreeTimesLargerPGroup,
    /// P x Z3 with P a 2-group of exponent 4 whose maximal cyclic
    /// subgroups pairwise meet trivially.
    TwoGroupExpFourTimesThree,
    /// Elementary abelian 2-group x Z3.
    ElementaryAbelianTwoTimesThree,
    /// P1 x P2 with both factors of prime exponent.
    BothPrimeExponent,
    /// P1 x P2 with at least one factor of prime exponent.
    OnePrimeExponent,
    Symmetric(u32),
    Alternating(u32),
    Other,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::TwoTimesOddPGroup => write!(f, "z2_x_p_exp_p"),
            FamilyTag::ThreeTimesLargerPGroup => write!(f, "z3_x_p_exp_p_gt3"),
            FamilyTag::TwoGroupExpFourTimesThree => write!(f, "p2_exp4_trivial_meets_x_z3"),
            FamilyTag::ElementaryAbelianTwoTimesThree => write!(f, "elem_abelian_2_x_z3"),
            FamilyTag::BothPrimeExponent => write!(f, "p1_x_p2_both_prime_exponent"),
            FamilyTag::OnePrimeExponent => write!(f, "at_least_one_prime_exponent"),
            FamilyTag::Symmetric(n) => write!(f, "symmetric({n})"),
            FamilyTag::Alternating(n) => write!(f, "alternating({n})"),
            FamilyTag::Other => write!(f, "other"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct FamilyFlags {
    z2xp: bool,
    z3x_larger: bool,
    two_exp4_trivial_x3: bool,
    elem2_x3: bool,
    both_prime: bool,
    one_prime: bool,
    symmetric: Option<u32>,
    alternating: Option<u32>,
}

/// Structural facts about a group that drive predictions.
#[derive(Clone, Debug)]
pub struct StructuralProfile {
    pub order: usize,
    pub spectrum: Vec<u32>,
    pub exponent: u64,
    pub eppo: bool,
    pub nilpotent: bool,
    /// Present iff the group is nilpotent.
    pub sylow: Option<Vec<SylowInfo>>,
    pub condition_a: bool,
    pub condition_b: bool,
    pub family: FamilyTag,
    flags: FamilyFlags,
}

/// Compute the structural profile. The parsed description, when given,
/// provides the symmetric/alternating recognition (there is no isomorphism
/// testing).
pub fn profile(group: &Group, spec: Option<&GroupSpec>) -> StructuralProfile {
    let eppo = group.is_eppo();
    let nilpotent = group.is_nilpotent();
    let mut sylow_info: Option<Vec<SylowInfo>> = None;
    let mut flags = FamilyFlags::default();

    if let Some(s) = spec {
        if let SpecNode::Atom(a) = &s.ast {
            match a {
                Atom::Symmetric(n) => flags.symmetric = Some(*n),
                Atom::Alternating(n) => flags.alternating = Some(*n),
                _ => {}
            }
        }
    }

    if nilpotent {
        let decomposition = group
            .sylow_decomposition()
            .expect("nilpotent group decomposes");
        let infos: Vec<SylowInfo> = decomposition
            .iter()
            .map(|(p, set)| SylowInfo {
                prime: *p,
                size: set.len(),
                exponent: set
                    .iter()
                    .map(|&g| group.element_order(g))
                    .max()
                    .unwrap_or(1),
            })
            .collect();
        if infos.len() == 2 {
            let (a, b) = (&infos[0], &infos[1]);
            flags.z2xp = a.prime == 2 && a.size == 2 && b.exponent == b.prime;
            flags.z3x_larger = a.prime == 3 && a.size == 3 && b.exponent == b.prime;
            flags.elem2_x3 = a.prime == 2 && a.exponent == 2 && b.prime == 3 && b.size == 3;
            flags.both_prime = a.exponent == a.prime && b.exponent == b.prime;
            flags.one_prime = a.exponent == a.prime || b.exponent == b.prime;
            if a.prime == 2 && a.exponent == 4 && b.prime == 3 && b.size == 3 {
                flags.two_exp4_trivial_x3 =
                    maximal_cyclics_meet_trivially(group, &decomposition[0].1);
            }
        }
        sylow_info = Some(infos);
    }

    let family = pick_family(&flags);
    StructuralProfile {
        order: group.n(),
        spectrum: group.order_spectrum(),
        exponent: group.exponent(),
        eppo,
        nilpotent,
        sylow: sylow_info,
        condition_a: condition_a(group),
        condition_b: condition_b(group),
        family,
        flags,
    }
}

/// View the subgroup as a group of its own and check that its maximal
/// cyclic subgroups pairwise intersect in the identity alone.
fn maximal_cyclics_meet_trivially(group: &Group, elements: &[usize]) -> bool {
    let sub = group
        .subgroup_from_elements(elements)
        .expect("Sylow subgroup is closed");
    let lat = sub.lattice();
    let ids: Vec<u32> = lat.maximal_ids().collect();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if lat.intersection_size(a, b) > 1 {
                return false;
            }
        }
    }
    true
}

fn pick_family(flags: &FamilyFlags) -> FamilyTag {
    if let Some(n) = flags.symmetric {
        return FamilyTag::Symmetric(n);
    }
    if let Some(n) = flags.alternating {
        return FamilyTag::Alternating(n);
    }
    if flags.z2xp {
        FamilyTag::TwoTimesOddPGroup
    } else if flags.z3x_larger {
        FamilyTag::ThreeTimesLargerPGroup
    } else if flags.two_exp4_trivial_x3 {
        FamilyTag::TwoGroupExpFourTimesThree
    } else if flags.elem2_x3 {
        FamilyTag::ElementaryAbelianTwoTimesThree
    } else if flags.both_prime {
        FamilyTag::BothPrimeExponent
    } else if flags.one_prime {
        FamilyTag::OnePrimeExponent
    } else {
        FamilyTag::Other
    }
}

/// The graph classes the harness tracks on difference graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GraphClass {
    Cograph,
    Chordal,
    Split,
    Threshold,
    Star,
    Dominatable,
    Bipartite,
    Eulerian,
    Planar,
    Outerplanar,
}

impl GraphClass {
    pub const ALL: [GraphClass; 10] = [
        GraphClass::Cograph,
        GraphClass::Chordal,
        GraphClass::Split,
        GraphClass::Threshold,
        GraphClass::Star,
        GraphClass::Dominatable,
        GraphClass::Bipartite,
        GraphClass::Eulerian,
        GraphClass::Planar,
        GraphClass::Outerplanar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Cograph => "cograph",
            GraphClass::Chordal => "chordal",
            GraphClass::Split => "split",
            GraphClass::Threshold => "threshold",
            GraphClass::Star => "star",
            GraphClass::Dominatable => "dominatable",
            GraphClass::Bipartite => "bipartite",
            GraphClass::Eulerian => "eulerian",
            GraphClass::Planar => "planar",
            GraphClass::Outerplanar => "outerplanar",
        }
    }

    fn index(self) -> usize {
        GraphClass::ALL.iter().position(|&c| c == self).unwrap()
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-class predictions; None where no classification applies.
#[derive(Clone, Copy, Debug, Default)]
pub struct Predictions {
    values: [Option<bool>; 10],
}

impl Predictions {
    pub fn get(&self, class: GraphClass) -> Option<bool> {
        self.values[class.index()]
    }

    fn set(&mut self, class: GraphClass, value: bool) {
        self.values[class.index()] = Some(value);
    }

    pub fn any(&self) -> bool {
        self.values.iter().any(|v| v.is_some())
    }
}

/// Fill per-class predictions from the profile. EPPO groups get none: the
/// classifications all presuppose a non-empty difference graph.
pub fn predict(profile: &StructuralProfile) -> Predictions {
    let mut out = Predictions::default();
    if profile.eppo {
        return out;
    }
    // arbitrary finite groups: conditions A and B
    out.set(GraphClass::Chordal, profile.condition_a);
    for c in [
        GraphClass::Star,
        GraphClass::Dominatable,
        GraphClass::Threshold,
        GraphClass::Split,
    ] {
        out.set(c, profile.condition_b);
    }
    // nilpotent non-p-groups: Sylow families decide all ten classes
    if profile.nilpotent {
        let f = &profile.flags;
        for c in [
            GraphClass::Chordal,
            GraphClass::Star,
            GraphClass::Dominatable,
            GraphClass::Threshold,
            GraphClass::Split,
        ] {
            out.set(c, f.z2xp);
        }
        out.set(GraphClass::Cograph, f.both_prime);
        out.set(GraphClass::Bipartite, f.one_prime);
        out.set(GraphClass::Eulerian, profile.order % 2 == 1);
        out.set(
            GraphClass::Planar,
            f.z2xp || f.z3x_larger || f.two_exp4_trivial_x3 || f.elem2_x3,
        );
        out.set(GraphClass::Outerplanar, f.z2xp);
    }
    if let Some(n) = profile.flags.symmetric {
        if n >= 5 {
            out.set(GraphClass::Chordal, n == 5);
            out.set(GraphClass::Cograph, n == 5);
            out.set(GraphClass::Split, false);
            out.set(GraphClass::Threshold, false);
        }
    }
    if let Some(n) = profile.flags.alternating {
        if n >= 7 {
            out.set(GraphClass::Chordal, false);
            out.set(GraphClass::Cograph, n == 7);
            out.set(GraphClass::Split, false);
            out.set(GraphClass::Threshold, false);
        }
    }
    out
}

/// One class row of a report.
#[derive(Clone, Debug)]
pub struct ClassResult {
    pub observed: Verdict,
    pub predicted: Option<bool>,
    /// Set iff a prediction exists and the observation is not vacuous.
    pub agrees: Option<bool>,
}

/// The verdict/prediction/agreement table for one group.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub spec: String,
    pub profile: StructuralProfile,
    pub difference: SimpleGraph,
    pub classes: Vec<(GraphClass, ClassResult)>,
}

impl ClassReport {
    pub fn get(&self, class: GraphClass) -> &ClassResult {
        &self
            .classes
            .iter()
            .find(|(c, _)| *c == class)
            .expect("all classes present")
            .1
    }

    /// Classes where prediction and observation disagree.
    pub fn mismatches(&self) -> Vec<GraphClass> {
        self.classes
            .iter()
            .filter(|(_, r)| r.agrees == Some(false))
            .map(|(c, _)| *c)
            .collect()
    }

    pub fn has_predictions(&self) -> bool {
        self.classes.iter().any(|(_, r)| r.predicted.is_some())
    }
}

fn run_recognizer(class: GraphClass, d: &SimpleGraph) -> Verdict {
    match class {
        GraphClass::Cograph => recognize::is_cograph(d),
        GraphClass::Chordal => recognize::is_chordal(d),
        GraphClass::Split => recognize::is_split(d),
        GraphClass::Threshold => recognize::is_threshold(d),
        GraphClass::Star => recognize::is_star(d),
        GraphClass::Dominatable => recognize::is_dominatable(d),
        GraphClass::Bipartite => recognize::is_bipartite(d),
        GraphClass::Eulerian => recognize::is_eulerian(d),
        GraphClass::Planar => recognize::is_planar(d),
        GraphClass::Outerplanar => recognize::is_outerplanar(d),
    }
}

/// Build the difference graph, run every recognizer, attach predictions
/// and agreement flags. Disagreement is data, not an error.
pub fn verify(group: &Group, spec: Option<&GroupSpec>) -> ClassReport {
    let prof = profile(group, spec);
    let d = graph::difference_graph(group);
    let preds = predict(&prof);
    let classes = GraphClass::ALL
        .iter()
        .map(|&class| {
            let observed = run_recognizer(class, &d);
            let predicted = preds.get(class);
            let agrees = match (predicted, observed.status.as_bool()) {
                (Some(p), Some(o)) => Some(p == o),
                _ => None,
            };
            (
                class,
                ClassResult {
                    observed,
                    predicted,
                    agrees,
                },
            )
        })
        .collect();
    ClassReport {
        spec: spec.map(|s| s.source.clone()).unwrap_or_default(),
        profile: prof,
        difference: d,
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::realize_default;
    use crate::recognize::Status;
    use crate::spec::parse;

    fn group(text: &str) -> Group {
        realize_default(&parse(text).unwrap()).unwrap()
    }

    fn report(text: &str) -> ClassReport {
        let spec = parse(text).unwrap();
        let g = realize_default(&spec).unwrap();
        verify(&g, Some(&spec))
    }

    #[test]
    fn condition_a_examples() {
        // Z2 x (Z7 x Z7): exponent-7 factor, intersections are {e, t}
        assert!(condition_a(&group("Z2 x Z7 x Z7")));
        // order 18 = 2 * 3^2 in the spectrum
        assert!(!condition_a(&group("Z2 x Z9")));
        // order 15 = 3 * 5 in the spectrum
        assert!(!condition_a(&group("Z15")));
    }

    #[test]
    fn condition_b_examples() {
        assert!(condition_b(&group("Z2 x Z7")));
        assert!(!condition_b(&group("D30")));
        // two distinct order-6 subgroups meet in the order-3 subgroup
        assert!(!condition_b(&group("Z2 x Z2 x Z3")));
    }

    #[test]
    fn condition_b_implies_a_on_samples() {
        for text in [
            "Z2 x Z7",
            "Z2 x Z7 x Z7",
            "Z15",
            "D30",
            "S5",
            "S6",
            "Z2 x Z9",
            "Q12",
            "Z2 x Z2 x Z3",
            "Z12",
        ] {
            let g = group(text);
            if condition_b(&g) {
                assert!(condition_a(&g), "{text}: B without A");
            }
        }
    }

    #[test]
    fn s5_satisfies_a_but_not_b() {
        let s5 = group("S5");
        assert!(condition_a(&s5));
        assert!(!condition_b(&s5));
    }

    #[test]
    fn predictions_for_z2_x_z5() {
        let spec = parse("Z2 x Z5").unwrap();
        let g = realize_default(&spec).unwrap();
        let p = predict(&profile(&g, Some(&spec)));
        assert_eq!(p.get(GraphClass::Star), Some(true));
        assert_eq!(p.get(GraphClass::Threshold), Some(true));
        assert_eq!(p.get(GraphClass::Split), Some(true));
        assert_eq!(p.get(GraphClass::Chordal), Some(true));
        assert_eq!(p.get(GraphClass::Dominatable), Some(true));
        assert_eq!(p.get(GraphClass::Outerplanar), Some(true));
        assert_eq!(p.get(GraphClass::Planar), Some(true));
        assert_eq!(p.get(GraphClass::Eulerian), Some(false));
        assert_eq!(p.get(GraphClass::Cograph), Some(true));
        assert_eq!(p.get(GraphClass::Bipartite), Some(true));
    }

    #[test]
    fn predictions_for_s6() {
        let spec = parse("S6").unwrap();
        let g = realize_default(&spec).unwrap();
        let p = predict(&profile(&g, Some(&spec)));
        assert_eq!(p.get(GraphClass::Chordal), Some(false));
        assert_eq!(p.get(GraphClass::Cograph), Some(false));
        assert_eq!(p.get(GraphClass::Split), Some(false));
        assert_eq!(p.get(GraphClass::Threshold), Some(false));
    }

    #[test]
    fn planar_family_iv() {
        let spec = parse("Z2 x Z2 x Z2 x Z3").unwrap();
        let g = realize_default(&spec).unwrap();
        let prof = profile(&g, Some(&spec));
        assert_eq!(prof.family, FamilyTag::ElementaryAbelianTwoTimesThree);
        assert_eq!(predict(&prof).get(GraphClass::Planar), Some(true));
    }

    #[test]
    fn planar_family_iii_z12() {
        let spec = parse("Z12").unwrap();
        let g = realize_default(&spec).unwrap();
        let prof = profile(&g, Some(&spec));
        // Z4 x Z3: the 2-Sylow Z4 has a single maximal cyclic subgroup
        assert_eq!(prof.family, FamilyTag::TwoGroupExpFourTimesThree);
        assert_eq!(predict(&prof).get(GraphClass::Planar), Some(true));
        // Q8 x Z3: maximal cyclic subgroups of Q8 share the centre
        let spec = parse("Q8 x Z3").unwrap();
        let g = realize_default(&spec).unwrap();
        let prof = profile(&g, Some(&spec));
        assert_eq!(predict(&prof).get(GraphClass::Planar), Some(false));
        // D8 x Z3: maximal cyclic subgroups of D8 meet trivially
        let spec = parse("D8 x Z3").unwrap();
        let g = realize_default(&spec).unwrap();
        let prof = profile(&g, Some(&spec));
        assert_eq!(prof.family, FamilyTag::TwoGroupExpFourTimesThree);
        assert_eq!(predict(&prof).get(GraphClass::Planar), Some(true));
    }

    #[test]
    fn verify_d30() {
        let r = report("D30");
        assert!(!r.profile.nilpotent);
        assert_eq!(r.get(GraphClass::Eulerian).observed.status, Status::True);
        // no Eulerian prediction for non-nilpotent groups
        assert_eq!(r.get(GraphClass::Eulerian).predicted, None);
        assert_eq!(r.difference.vertex_count(), 6);
        assert_eq!(r.difference.edge_count(), 8);
        assert!(r.mismatches().is_empty());
    }

    #[test]
    fn verify_s5_agrees() {
        let r = report("S5");
        assert!(r.mismatches().is_empty());
        assert_eq!(r.get(GraphClass::Chordal).observed.status, Status::True);
        assert_eq!(r.get(GraphClass::Cograph).observed.status, Status::True);
        assert_eq!(r.get(GraphClass::Split).observed.status, Status::False);
        assert_eq!(r.get(GraphClass::Threshold).observed.status, Status::False);
    }

    #[test]
    fn verify_z4_vacuous() {
        let r = report("Z4");
        assert!(r.profile.eppo);
        assert!(!r.has_predictions());
        for (_, res) in &r.classes {
            assert_eq!(res.observed.status, Status::Vacuous);
            assert_eq!(res.agrees, None);
        }
    }

    #[test]
    fn bipartite_adopted_reading() {
        // Z2 x Z9: one prime-exponent factor, predicted and observed bipartite
        let r = report("Z2 x Z9");
        assert_eq!(r.get(GraphClass::Bipartite).predicted, Some(true));
        assert_eq!(r.get(GraphClass::Bipartite).observed.status, Status::True);
        // Z4 x Z9: neither factor has prime exponent
        let r = report("Z4 x Z9");
        assert_eq!(r.get(GraphClass::Bipartite).predicted, Some(false));
        assert_eq!(r.get(GraphClass::Bipartite).observed.status, Status::False);
    }

    #[test]
    fn star_example_z2_x_z7() {
        let r = report("Z2 x Z7");
        assert_eq!(r.get(GraphClass::Star).observed.status, Status::True);
        assert_eq!(r.difference.complete_bipartite_sides(), Some((1, 6)));
        assert!(r.mismatches().is_empty());
    }
}
