//! Deterministic sweep-corpus generation and the CSV atlas.
//!
//! The corpus for `sweep --max-order N`:
//!
//! * cyclic Z_n for 2 <= n <= N;
//! * dihedral D_m for even m, 6 <= m <= N;
//! * dicyclic Q_m for m ≡ 0 (mod 4), 8 <= m <= N;
//! * direct products (>= 2 factors, non-decreasing factor order) of
//!   prime-power cyclic groups and the small non-abelian 2-groups D8, D16,
//!   D32, Q8, Q16, Q32, with product order <= N;
//! * S_n for 2 <= n <= 7 and A_n for 3 <= n <= 8 whose order is <= N (and
//!   within the element cap).
//!
//! Specs are emitted in a fixed order and sweep rows are sorted by spec
//! string, so parallel runs produce identical artifacts.

use diffgraph::group::is_prime_power;
use diffgraph::spec::Atom;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Families {
    All,
    Nilpotent,
    Cyclic,
    Dihedral,
    Dicyclic,
    Products,
    Symmetric,
    Alternating,
}

impl Families {
    /// Post-realization filter; shape filters act at generation time.
    pub fn admits_report(self, report: &diffgraph::theorems::ClassReport) -> bool {
        match self {
            Families::Nilpotent => report.profile.nilpotent,
            _ => true,
        }
    }

    pub fn parse(s: &str) -> Option<Families> {
        Some(match s {
            "all" => Families::All,
            "nilpotent" => Families::Nilpotent,
            "cyclic" => Families::Cyclic,
            "dihedral" => Families::Dihedral,
            "dicyclic" => Families::Dicyclic,
            "products" => Families::Products,
            "symmetric" => Families::Symmetric,
            "alternating" => Families::Alternating,
            _ => return None,
        })
    }

}

fn atom_str(a: &Atom) -> String {
    format!("{a}")
}

/// Non-abelian 2-group atoms usable as product factors.
fn two_group_atoms(max_order: usize) -> Vec<Atom> {
    let mut out = Vec::new();
    for m in [8u32, 16, 32] {
        if m as usize <= max_order {
            out.push(Atom::Dihedral(m));
            out.push(Atom::Dicyclic(m));
        }
    }
    out
}

fn product_factors(max_order: usize) -> Vec<Atom> {
    let mut out = Vec::new();
    for q in 2..=max_order / 2 {
        if is_prime_power(q as u64) {
            out.push(Atom::Cyclic(q as u32));
        }
    }
    out.extend(two_group_atoms(max_order / 2));
    // non-decreasing (order, kind) enumeration key
    out.sort_by_key(|a| (a.order(), atom_str(a)));
    out
}

fn products(max_order: usize) -> Vec<String> {
    let factors = product_factors(max_order);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn emit(
        factors: &[Atom],
        start: usize,
        remaining: u64,
        stack: &mut Vec<usize>,
        out: &mut Vec<String>,
    ) {
        for (i, atom) in factors.iter().enumerate().skip(start) {
            let o = atom.order();
            if o > remaining {
                break;
            }
            stack.push(i);
            if stack.len() >= 2 {
                let spec: Vec<String> = stack.iter().map(|&j| atom_str(&factors[j])).collect();
                out.push(spec.join(" x "));
            }
            emit(factors, i, remaining / o, stack, out);
            stack.pop();
        }
    }
    emit(&factors, 0, max_order as u64, &mut stack, &mut out);
    out
}

/// All corpus spec strings for a family filter, deterministic order.
pub fn corpus(max_order: usize, families: Families) -> Vec<String> {
    let mut out = Vec::new();
    let shapes = |f: Families| families == Families::All || families == Families::Nilpotent || families == f;
    if shapes(Families::Cyclic) {
        out.extend((2..=max_order).map(|n| format!("Z{n}")));
    }
    if shapes(Families::Dihedral) {
        out.extend((3..=max_order / 2).map(|m| format!("D{}", 2 * m)));
    }
    if shapes(Families::Dicyclic) {
        out.extend((2..=max_order / 4).map(|n| format!("Q{}", 4 * n)));
    }
    if shapes(Families::Products) {
        out.extend(products(max_order));
    }
    if shapes(Families::Symmetric) {
        let orders = [(2u32, 2usize), (3, 6), (4, 24), (5, 120), (6, 720), (7, 5040)];
        out.extend(
            orders
                .iter()
                .filter(|&&(_, o)| o <= max_order)
                .map(|&(n, _)| format!("S{n}")),
        );
    }
    if shapes(Families::Alternating) {
        let orders = [
            (3u32, 3usize),
            (4, 12),
            (5, 60),
            (6, 360),
            (7, 2520),
            (8, 20160),
        ];
        out.extend(
            orders
                .iter()
                .filter(|&&(_, o)| o <= max_order)
                .map(|&(n, _)| format!("A{n}")),
        );
    }
    out
}
