//! The deduplicated lattice of cyclic subgroups of a finite group.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::group::Group;

/// One cyclic subgroup, stored as its sorted element-index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSubgroup {
    /// Element indices, ascending.
    pub elements: Vec<u32>,
    /// The smallest-index generator.
    pub generator: u32,
    /// |subgroup| = order of the generator.
    pub order: u32,
}

impl CyclicSubgroup {
    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&(element as u32)).is_ok()
    }
}

/// All distinct cyclic subgroups of a group, with maximality flags and a
/// per-element membership index.
#[derive(Clone, Debug)]
pub struct CyclicLattice {
    pub subgroups: Vec<CyclicSubgroup>,
    /// `maximal[s]` iff subgroup s is not properly contained in another
    /// cyclic subgroup.
    pub maximal: Vec<bool>,
    /// For each element, the ids of the subgroups containing it, ascending.
    pub membership: Vec<Vec<u32>>,
    ids_by_order: BTreeMap<u32, Vec<u32>>,
}

impl CyclicLattice {
    pub fn subgroup(&self, id: u32) -> &CyclicSubgroup {
        &self.subgroups[id as usize]
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Ids of subgroups of exactly the given order.
    pub fn ids_of_order(&self, order: u32) -> &[u32] {
        self.ids_by_order
            .get(&order)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn maximal_ids(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.subgroups.len() as u32).filter(move |&s| self.maximal[s as usize])
    }

    /// |A ∩ B| for two subgroups, by sorted merge.
    pub fn intersection_size(&self, a: u32, b: u32) -> usize {
        let xs = &self.subgroups[a as usize].elements;
        let ys = &self.subgroups[b as usize].elements;
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < xs.len() && j < ys.len() {
            match xs[i].cmp(&ys[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// True iff some subgroup containing `element` has non-prime-power order.
    pub fn in_composite_order_subgroup(&self, element: usize) -> bool {
        self.membership[element].iter().any(|&s| {
            let o = self.subgroups[s as usize].order as u64;
            o > 1 && !crate::group::is_prime_power(o)
        })
    }

    /// The id of ⟨g⟩ for an element g: the unique subgroup of order o(g)
    /// containing g.
    pub fn generated_by(&self, group: &Group, element: usize) -> u32 {
        let o = group.element_order(element);
        *self.membership[element]
            .iter()
            .find(|&&s| self.subgroups[s as usize].order == o)
            .expect("every element generates a lattice subgroup")
    }
}

/// Enumerate ⟨g⟩ for every element, deduplicated.
///
/// Elements are scanned in ascending order; enumerating ⟨g⟩ marks every
/// generator of ⟨g⟩ (the powers g^k with gcd(k, o(g)) = 1) as covered, so
/// each subgroup is built exactly once, from its smallest generator.
pub fn build(group: &Group) -> CyclicLattice {
    let n = group.n();
    let mut covered = vec![false; n];
    let mut subgroups: Vec<CyclicSubgroup> = Vec::new();
    let mut membership: Vec<Vec<u32>> = vec![Vec::new(); n];

    for g in 0..n {
        if covered[g] {
            continue;
        }
        // powers[k] = g^{k+1}; the last entry g^o is the identity
        let o = group.element_order(g) as usize;
        let mut powers = Vec::with_capacity(o);
        let mut x = g;
        powers.push(g);
        while powers.len() < o {
            x = group.mul(x, g);
            powers.push(x);
        }
        debug_assert_eq!(*powers.last().unwrap(), group.identity());
        for (k, &p) in powers.iter().enumerate() {
            if crate::group::gcd((k + 1) as u64, o as u64) == 1 {
                covered[p] = true;
            }
        }
        let id = subgroups.len() as u32;
        let mut elements: Vec<u32> = powers.iter().map(|&p| p as u32).collect();
        elements.sort_unstable();
        elements.dedup();
        debug_assert_eq!(elements.len(), o);
        for &e in &elements {
            membership[e as usize].push(id);
        }
        subgroups.push(CyclicSubgroup {
            elements,
            generator: g as u32,
            order: o as u32,
        });
    }

    // ⟨g⟩ is maximal iff no other subgroup contains its generator: any
    // subgroup containing g contains all of ⟨g⟩.
    let maximal: Vec<bool> = subgroups
        .iter()
        .map(|s| membership[s.generator as usize].len() == 1)
        .collect();

    let mut ids_by_order: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (id, s) in subgroups.iter().enumerate() {
        ids_by_order.entry(s.order).or_default().push(id as u32);
    }

    CyclicLattice {
        subgroups,
        maximal,
        membership,
        ids_by_order,
    }
}
