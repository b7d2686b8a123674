//! Concrete finite groups over indexed element sets.
//!
//! A [`Group`] stores its multiplication as either a closed-form rule
//! (cyclic, dihedral, dicyclic, permutation composition, componentwise
//! products) or an explicit Cayley table, plus memoized element orders and
//! display names. The cyclic subgroup lattice is built lazily on first use
//! and shared behind the group.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{self, CyclicLattice};
use crate::spec::{Atom, GroupSpec, SpecNode};
use crate::DEFAULT_ELEMENT_CAP;

/// Errors from group construction and structural queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    /// The requested group exceeds the element cap.
    TooLarge { order: u64, cap: usize },
    /// Sylow decomposition requires a nilpotent group.
    NotNilpotent,
    /// A Cayley table failed validation.
    InvalidCayley { message: String },
    /// An element subset is not closed under multiplication.
    NotClosed { product_of: (usize, usize) },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::TooLarge { order, cap } => {
                write!(f, "group of order {order} exceeds the element cap {cap}")
            }
            GroupError::NotNilpotent => write!(f, "group is not nilpotent"),
            GroupError::InvalidCayley { message } => write!(f, "invalid Cayley table: {message}"),
            GroupError::NotClosed { product_of: (a, b) } => {
                write!(f, "subset not closed under multiplication at pair ({a}, {b})")
            }
        }
    }
}

impl core::error::Error for GroupError {}

enum Backend {
    Cyclic {
        n: u32,
    },
    /// Order 2m, elements x^r y^f indexed f*m + r.
    Dihedral {
        m: u32,
    },
    /// Order 4n, elements a^i b^j indexed j*2n + i.
    Dicyclic {
        n: u32,
    },
    Perm {
        perms: Vec<Vec<u8>>,
        index: BTreeMap<Vec<u8>, u32>,
    },
    Table {
        n: u32,
        mul: Vec<u32>,
        inv: Vec<u32>,
        identity: u32,
    },
    Product {
        factors: Vec<Group>,
    },
}

/// A finite group on elements `0..n()`.
pub struct Group {
    backend: Backend,
    n: usize,
    orders: Vec<u32>,
    names: Vec<String>,
    lattice: OnceBox<CyclicLattice>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(n={})", self.n)
    }
}

impl Group {
    /// Number of elements.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Index of the identity element.
    #[inline]
    pub fn identity(&self) -> usize {
        match &self.backend {
            Backend::Table { identity, .. } => *identity as usize,
            _ => 0,
        }
    }

    /// Product of elements `a` and `b` (in that order).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.n && b < self.n);
        match &self.backend {
            Backend::Cyclic { n } => ((a as u64 + b as u64) % *n as u64) as usize,
            Backend::Dihedral { m } => {
                let m = *m as usize;
                let (r1, f1) = (a % m, a / m);
                let (r2, f2) = (b % m, b / m);
                // x^r1 y^f1 x^r2 = x^{r1 +- r2} y^f1
                let r = if f1 == 1 {
                    (r1 + m - r2) % m
                } else {
                    (r1 + r2) % m
                };
                (f1 ^ f2) * m + r
            }
            Backend::Dicyclic { n } => {
                let two_n = 2 * *n as usize;
                let (i, j) = (a % two_n, a / two_n);
                let (k, l) = (b % two_n, b / two_n);
                if j == 0 {
                    l * two_n + (i + k) % two_n
                } else {
                    // b a^k = a^{-k} b, and b^2 = a^n
                    let i2 = (i + two_n - k) % two_n;
                    if l == 0 {
                        two_n + i2
                    } else {
                        (i2 + *n as usize) % two_n
                    }
                }
            }
            Backend::Perm { perms, index } => {
                let p = &perms[a];
                let q = &perms[b];
                let composed: Vec<u8> = (0..p.len()).map(|x| p[q[x] as usize]).collect();
                index[&composed] as usize
            }
            Backend::Table { n, mul, .. } => mul[a * *n as usize + b] as usize,
            Backend::Product { factors } => {
                let xs = decompose(factors, a);
                let ys = decompose(factors, b);
                let zs: Vec<usize> = factors
                    .iter()
                    .zip(xs.iter().zip(&ys))
                    .map(|(g, (&x, &y))| g.mul(x, y))
                    .collect();
                compose(factors, &zs)
            }
        }
    }

    /// Inverse of element `a`.
    pub fn inv(&self, a: usize) -> usize {
        debug_assert!(a < self.n);
        match &self.backend {
            Backend::Cyclic { n } => {
                let n = *n as usize;
                (n - a) % n
            }
            Backend::Dihedral { m } => {
                let m = *m as usize;
                let (r, f) = (a % m, a / m);
                if f == 1 {
                    a // reflections are involutions
                } else {
                    (m - r) % m
                }
            }
            Backend::Dicyclic { n } => {
                let two_n = 2 * *n as usize;
                let (i, j) = (a % two_n, a / two_n);
                if j == 0 {
                    (two_n - i) % two_n
                } else {
                    two_n + (i + *n as usize) % two_n
                }
            }
            Backend::Perm { perms, index } => {
                let p = &perms[a];
                let mut q = vec![0u8; p.len()];
                for (x, &px) in p.iter().enumerate() {
                    q[px as usize] = x as u8;
                }
                index[&q] as usize
            }
            Backend::Table { inv, .. } => inv[a] as usize,
            Backend::Product { factors } => {
                let xs = decompose(factors, a);
                let zs: Vec<usize> = factors
                    .iter()
                    .zip(&xs)
                    .map(|(g, &x)| g.inv(x))
                    .collect();
                compose(factors, &zs)
            }
        }
    }

    /// Order of element `g`: the least k >= 1 with g^k = identity.
    #[inline]
    pub fn element_order(&self, g: usize) -> u32 {
        self.orders[g]
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Display name of element `g`.
    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The set of element orders, ascending.
    pub fn order_spectrum(&self) -> Vec<u32> {
        let mut set: Vec<u32> = self.orders.clone();
        set.sort_unstable();
        set.dedup();
        set
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.order_spectrum()
            .iter()
            .fold(1u64, |acc, &o| lcm(acc, o as u64))
    }

    /// True iff every element order is 1 or a prime power.
    pub fn is_eppo(&self) -> bool {
        self.order_spectrum()
            .iter()
            .all(|&o| o == 1 || is_prime_power(o as u64))
    }

    /// Nilpotency via commuting coprime-order pairs: the group is nilpotent
    /// iff every pair of elements with coprime orders commutes.
    pub fn is_nilpotent(&self) -> bool {
        // bucket elements by order so same-order pairs are skipped wholesale
        let mut buckets: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for g in 0..self.n {
            if g != self.identity() {
                buckets.entry(self.orders[g]).or_default().push(g);
            }
        }
        let orders: Vec<u32> = buckets.keys().copied().collect();
        for (i, &o1) in orders.iter().enumerate() {
            for &o2 in &orders[i..] {
                if gcd(o1 as u64, o2 as u64) != 1 {
                    continue;
                }
                for &x in &buckets[&o1] {
                    for &y in &buckets[&o2] {
                        if self.mul(x, y) != self.mul(y, x) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// For nilpotent groups, the Sylow p-subgroups as p-power-order element
    /// sets, one per prime dividing |G|. Each set is verified closed under
    /// multiplication and the sizes multiply to |G|.
    pub fn sylow_decomposition(&self) -> Result<Vec<(u32, Vec<usize>)>, GroupError> {
        if !self.is_nilpotent() {
            return Err(GroupError::NotNilpotent);
        }
        let primes: Vec<u32> = prime_factors(self.n as u64)
            .into_iter()
            .map(|(p, _)| p as u32)
            .collect();
        let mut out = Vec::new();
        let mut size_product = 1u64;
        for p in primes {
            let set: Vec<usize> = (0..self.n)
                .filter(|&g| {
                    let o = self.orders[g] as u64;
                    o == 1 || is_power_of(o, p as u64)
                })
                .collect();
            let members = crate::bits::BitSet::from_indices(self.n, &set);
            for &a in &set {
                for &b in &set {
                    if !members.get(self.mul(a, b)) {
                        return Err(GroupError::NotClosed { product_of: (a, b) });
                    }
                }
            }
            size_product *= set.len() as u64;
            out.push((p, set));
        }
        if size_product != self.n as u64 {
            return Err(GroupError::InvalidCayley {
                message: format!(
                    "Sylow sizes multiply to {size_product}, expected {}",
                    self.n
                ),
            });
        }
        Ok(out)
    }

    /// The cyclic subgroup lattice, built on first use.
    pub fn lattice(&self) -> &CyclicLattice {
        self.lattice
            .get_or_init(|| Box::new(lattice::build(self)))
    }

    /// View an element subset as a group in its own right, with the induced
    /// multiplication materialized as a Cayley table. Fails if the subset is
    /// not closed.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Group, GroupError> {
        let k = elements.len();
        let mut back: BTreeMap<usize, u32> = BTreeMap::new();
        for (i, &g) in elements.iter().enumerate() {
            back.insert(g, i as u32);
        }
        let mut mul = vec![0u32; k * k];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                let c = self.mul(a, b);
                match back.get(&c) {
                    Some(&ci) => mul[i * k + j] = ci,
                    None => return Err(GroupError::NotClosed { product_of: (a, b) }),
                }
            }
        }
        let identity = back[&self.identity()];
        let mut inv = vec![0u32; k];
        for (i, &a) in elements.iter().enumerate() {
            inv[i] = back[&self.inv(a)];
        }
        let orders: Vec<u32> = elements.iter().map(|&g| self.orders[g]).collect();
        let names: Vec<String> = elements.iter().map(|&g| self.names[g].clone()).collect();
        Ok(Group {
            backend: Backend::Table {
                n: k as u32,
                mul,
                inv,
                identity,
            },
            n: k,
            orders,
            names,
            lattice: OnceBox::new(),
        })
    }

    fn finish(backend: Backend, n: usize, names: Vec<String>) -> Group {
        let orders = compute_orders(&backend, n);
        Group {
            backend,
            n,
            orders,
            names,
            lattice: OnceBox::new(),
        }
    }
}

fn decompose(factors: &[Group], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0usize; factors.len()];
    for (slot, g) in out.iter_mut().zip(factors).rev() {
        *slot = idx % g.n();
        idx /= g.n();
    }
    out
}

fn compose(factors: &[Group], parts: &[usize]) -> usize {
    let mut idx = 0usize;
    for (g, &p) in factors.iter().zip(parts) {
        idx = idx * g.n() + p;
    }
    idx
}

fn compute_orders(backend: &Backend, n: usize) -> Vec<u32> {
    match backend {
        Backend::Cyclic { n: m } => (0..n)
            .map(|a| (*m as u64 / gcd(a as u64, *m as u64)) as u32)
            .collect(),
        Backend::Dihedral { m } => {
            let m = *m as usize;
            (0..n)
                .map(|a| {
                    let (r, f) = (a % m, a / m);
                    if f == 1 {
                        2
                    } else {
                        (m as u64 / gcd(r as u64, m as u64)) as u32
                    }
                })
                .collect()
        }
        Backend::Dicyclic { n: q } => {
            let two_n = 2 * *q as usize;
            (0..n)
                .map(|a| {
                    let (i, j) = (a % two_n, a / two_n);
                    if j == 1 {
                        4
                    } else {
                        (two_n as u64 / gcd(i as u64, two_n as u64)) as u32
                    }
                })
                .collect()
        }
        Backend::Perm { perms, .. } => perms
            .iter()
            .map(|p| {
                let mut seen = vec![false; p.len()];
                let mut order = 1u64;
                for start in 0..p.len() {
                    if seen[start] {
                        continue;
                    }
                    let mut len = 0u64;
                    let mut x = start;
                    while !seen[x] {
                        seen[x] = true;
                        x = p[x] as usize;
                        len += 1;
                    }
                    order = lcm(order, len);
                }
                order as u32
            })
            .collect(),
        Backend::Table {
            n: m,
            mul,
            identity,
            ..
        } => {
            let m = *m as usize;
            (0..n)
                .map(|g| {
                    let mut x = g;
                    let mut k = 1u32;
                    while x != *identity as usize {
                        x = mul[x * m + g] as usize;
                        k += 1;
                    }
                    k
                })
                .collect()
        }
        Backend::Product { factors } => (0..n)
            .map(|a| {
                let parts = decompose(factors, a);
                factors
                    .iter()
                    .zip(&parts)
                    .fold(1u64, |acc, (g, &p)| lcm(acc, g.orders[p] as u64))
                    as u32
            })
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Realization of parsed specs
// ---------------------------------------------------------------------------

/// Build the concrete group described by `spec`, enforcing the element cap.
pub fn realize(spec: &GroupSpec, cap: usize) -> Result<Group, GroupError> {
    let order = spec.order();
    if order > cap as u64 {
        return Err(GroupError::TooLarge { order, cap });
    }
    match &spec.ast {
        SpecNode::Atom(a) => Ok(realize_atom(*a)),
        SpecNode::Product(atoms) => {
            let factors: Vec<Group> = atoms.iter().map(|&a| realize_atom(a)).collect();
            Ok(realize_product(factors))
        }
    }
}

/// Build with the default element cap.
pub fn realize_default(spec: &GroupSpec) -> Result<Group, GroupError> {
    realize(spec, DEFAULT_ELEMENT_CAP)
}

fn realize_atom(atom: Atom) -> Group {
    match atom {
        Atom::Cyclic(n) => {
            let names = (0..n).map(|i| i.to_string()).collect();
            Group::finish(Backend::Cyclic { n }, n as usize, names)
        }
        Atom::Dihedral(order) => {
            let m = order / 2;
            let names = (0..order as usize)
                .map(|a| {
                    let (r, f) = (a % m as usize, a / m as usize);
                    match (r, f) {
                        (0, 0) => "e".to_string(),
                        (1, 0) => "x".to_string(),
                        (_, 0) => format!("x^{r}"),
                        (0, 1) => "y".to_string(),
                        (1, 1) => "x y".to_string(),
                        (_, 1) => format!("x^{r} y"),
                        _ => unreachable!(),
                    }
                })
                .collect();
            Group::finish(Backend::Dihedral { m }, order as usize, names)
        }
        Atom::Dicyclic(order) => {
            let q = order / 4;
            let two_n = 2 * q as usize;
            let names = (0..order as usize)
                .map(|a| {
                    let (i, j) = (a % two_n, a / two_n);
                    match (i, j) {
                        (0, 0) => "e".to_string(),
                        (1, 0) => "a".to_string(),
                        (_, 0) => format!("a^{i}"),
                        (0, 1) => "b".to_string(),
                        (1, 1) => "a b".to_string(),
                        (_, 1) => format!("a^{i} b"),
                        _ => unreachable!(),
                    }
                })
                .collect();
            Group::finish(Backend::Dicyclic { n: q }, order as usize, names)
        }
        Atom::Symmetric(deg) => realize_perm_group(deg, false),
        Atom::Alternating(deg) => realize_perm_group(deg, true),
    }
}

fn realize_perm_group(deg: u32, even_only: bool) -> Group {
    let deg = deg as usize;
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut current: Vec<u8> = (0..deg as u8).collect();
    loop {
        if !even_only || perm_is_even(&current) {
            perms.push(current.clone());
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index: BTreeMap<Vec<u8>, u32> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as u32))
        .collect();
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    let n = perms.len();
    Group::finish(Backend::Perm { perms, index }, n, names)
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn perm_is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0usize;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// Cycle notation on 1-based points, e.g. "(1 2 3)(4 5)"; identity is "e".
fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            x = p[x] as usize;
            first = false;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

fn realize_product(factors: Vec<Group>) -> Group {
    let n: usize = factors.iter().map(|g| g.n()).product();
    let names: Vec<String> = (0..n)
        .map(|a| {
            let parts = decompose(&factors, a);
            let strs: Vec<&str> = factors
                .iter()
                .zip(&parts)
                .map(|(g, &p)| g.name(p))
                .collect();
            format!("({})", strs.join(", "))
        })
        .collect();
    Group::finish(Backend::Product { factors }, n, names)
}

// ---------------------------------------------------------------------------
// Cayley table ingestion
// ---------------------------------------------------------------------------

/// Parse and validate a raw Cayley table.
///
/// Format: first line n, then n lines of n whitespace-separated element
/// indices (row i, column j holds the index of g_i * g_j). The table is
/// checked for the group axioms: closure (index range), cancellativity
/// (rows and columns are permutations), a two-sided identity, inverses, and
/// associativity — exhaustively for n <= 200, otherwise on at least 10^4
/// seeded random triples.
pub fn from_cayley_text(text: &str, cap: usize, seed: u64) -> Result<Group, GroupError> {
    let bad = |message: String| GroupError::InvalidCayley { message };
    let mut tokens = text.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| bad("missing element count".to_string()))?
        .parse()
        .map_err(|_| bad("element count is not an integer".to_string()))?;
    if n == 0 {
        return Err(bad("a group has at least one element".to_string()));
    }
    if n > cap {
        return Err(GroupError::TooLarge {
            order: n as u64,
            cap,
        });
    }
    let mut mul = Vec::with_capacity(n * n);
    for tok in tokens {
        let v: usize = tok
            .parse()
            .map_err(|_| bad(format!("'{tok}' is not an element index")))?;
        if v >= n {
            return Err(bad(format!("element index {v} out of range 0..{n}")));
        }
        mul.push(v as u32);
    }
    if mul.len() != n * n {
        return Err(bad(format!(
            "expected {} table entries, found {}",
            n * n,
            mul.len()
        )));
    }

    // rows and columns must be permutations
    for i in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for j in 0..n {
            let r = mul[i * n + j] as usize;
            if seen_row[r] {
                return Err(bad(format!("row {i} repeats element {r}")));
            }
            seen_row[r] = true;
            let c = mul[j * n + i] as usize;
            if seen_col[c] {
                return Err(bad(format!("column {i} repeats element {c}")));
            }
            seen_col[c] = true;
        }
    }

    // two-sided identity
    let identity = (0..n)
        .find(|&e| (0..n).all(|j| mul[e * n + j] as usize == j && mul[j * n + e] as usize == j))
        .ok_or_else(|| bad("no identity element".to_string()))?;

    // inverses
    let mut inv = vec![0u32; n];
    for a in 0..n {
        let b = (0..n)
            .find(|&b| mul[a * n + b] as usize == identity)
            .ok_or_else(|| bad(format!("element {a} has no right inverse")))?;
        if mul[b * n + a] as usize != identity {
            return Err(bad(format!("inverse of {a} is one-sided")));
        }
        inv[a] = b as u32;
    }

    // associativity
    let assoc = |a: usize, b: usize, c: usize| {
        mul[mul[a * n + b] as usize * n + c] == mul[a * n + mul[b * n + c] as usize]
    };
    if n <= 200 {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !assoc(a, b, c) {
                        return Err(bad(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10_000 {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let c = rng.gen_range(0..n);
            if !assoc(a, b, c) {
                return Err(bad(format!("associativity fails at ({a}, {b}, {c})")));
            }
        }
    }

    let names = (0..n).map(|i| format!("g{i}")).collect();
    Ok(Group::finish(
        Backend::Table {
            n: n as u32,
            mul,
            inv,
            identity: identity as u32,
        },
        n,
        names,
    ))
}

// ---------------------------------------------------------------------------
// Small number-theoretic helpers
// ---------------------------------------------------------------------------

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization as (prime, multiplicity) pairs, ascending.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n).len() == 1 && prime_factors(n)[0].1 == 1
}

/// True iff n = p^k for a prime p and k >= 1.
pub fn is_prime_power(n: u64) -> bool {
    n >= 2 && prime_factors(n).len() == 1
}

fn is_power_of(n: u64, p: u64) -> bool {
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}
