//! Subgroup lattices, up to conjugacy.
//!
//! Classes are found by extension: every subgroup `K ≠ 1` is `⟨K₀, g⟩` for
//! some proper subgroup `K₀`, and replacing `K₀` by a conjugate replaces `K`
//! by a conjugate. So it is enough to close the set of class
//! representatives under "add one element". For solvable groups the added
//! element can be restricted to `g ∈ N_G(H)` with `gH` of prime order in
//! `N_G(H)/H`, because every solvable `K` has a normal subgroup of prime
//! index.
//!
//! Each newly found subgroup is expanded to its full conjugation orbit
//! (breadth-first over the group's generators); all orbit members go into a
//! hash index so later candidates are recognised by a single lookup.

use std::collections::{HashMap, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{is_prime, Elem, Group, Limits};
use crate::structure;
use crate::subgroup::{self, Subgroup};

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClassRecord {
    /// Least member of the class in canonical bitset order.
    pub representative: Subgroup,
    pub class_size: usize,
    pub normalizer_order: usize,
    pub self_normalizing: bool,
    pub is_normal: bool,
}

impl SubgroupClassRecord {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtensionStrategy {
    /// Prime-index extension inside normalizers when the group is solvable,
    /// general extension otherwise.
    #[default]
    Auto,
    /// Extend every class representative by every coset representative.
    General,
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    fingerprint: u64,
    group_order: usize,
    classes: Vec<SubgroupClassRecord>,
    total_subgroups: usize,
}

impl SubgroupLattice {
    pub fn compute(group: &Group, limits: &Limits) -> Result<SubgroupLattice> {
        Self::compute_with(group, limits, ExtensionStrategy::Auto)
    }

    pub fn compute_with(
        group: &Group,
        limits: &Limits,
        strategy: ExtensionStrategy,
    ) -> Result<SubgroupLattice> {
        let prime_steps = match strategy {
            ExtensionStrategy::Auto => structure::is_solvable(group),
            ExtensionStrategy::General => false,
        };
        let mut builder = Builder {
            group,
            limits,
            index: HashMap::new(),
            classes: Vec::new(),
            total: 0,
        };
        let mut queue = VecDeque::new();
        queue.push_back(builder.add_class(Subgroup::trivial(group))?);
        while let Some(c) = queue.pop_front() {
            let record = builder.classes[c].clone();
            let h = &record.representative;
            if h.order() == group.order() || record.self_normalizing && prime_steps {
                continue;
            }
            let mut covered = h.members().clone();
            let candidates: Vec<Elem> = if prime_steps {
                if record.is_normal {
                    (0..group.order() as Elem).collect()
                } else {
                    subgroup::normalizer(group, h)?.elements().collect()
                }
            } else {
                (0..group.order() as Elem).collect()
            };
            for g in candidates {
                if covered.contains(g as usize) {
                    continue;
                }
                for x in h.elements() {
                    covered.insert(group.mul(x, g) as usize);
                }
                if prime_steps && !is_prime(coset_order(group, h, g)) {
                    continue;
                }
                let k = h.extended(group, g);
                if !builder.index.contains_key(k.members()) {
                    queue.push_back(builder.add_class(k)?);
                }
            }
        }
        let mut classes = builder.classes;
        classes.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(SubgroupLattice {
            fingerprint: group.fingerprint(),
            group_order: group.order(),
            classes,
            total_subgroups: builder.total,
        })
    }

    /// Classes ordered by representative order, then canonical bitset.
    pub fn classes(&self) -> &[SubgroupClassRecord] {
        &self.classes
    }

    pub fn total_subgroups(&self) -> usize {
        self.total_subgroups
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn check_group(&self, group: &Group) -> Result<()> {
        if group.fingerprint() == self.fingerprint {
            Ok(())
        } else {
            Err(Error::NotASubgroup)
        }
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.classes
            .iter()
            .filter(|c| c.is_normal)
            .map(|c| &c.representative)
    }

    /// All members of one class, sorted.
    pub fn orbit(&self, group: &Group, class: usize) -> Vec<Subgroup> {
        let mut members = conjugation_orbit(group, &self.classes[class].representative);
        members.sort();
        members
    }

    /// Every subgroup, sorted by order then canonical bitset.
    pub fn all_subgroups(&self, group: &Group) -> Vec<Subgroup> {
        let mut all: Vec<Subgroup> = (0..self.classes.len())
            .flat_map(|c| self.orbit(group, c))
            .collect();
        all.sort();
        all
    }

    /// Index of the class containing `h`.
    pub fn class_of(&self, group: &Group, h: &Subgroup) -> Result<usize> {
        self.check_group(group)?;
        h.check_parent(group)?;
        let rep = conjugation_orbit(group, h)
            .into_iter()
            .min()
            .expect("orbit contains the subgroup itself");
        self.classes
            .binary_search_by(|c| c.representative.cmp(&rep))
            .map_err(|_| Error::Internal("subgroup missing from its lattice".into()))
    }
}

struct Builder<'a> {
    group: &'a Group,
    limits: &'a Limits,
    index: HashMap<BitSet, usize>,
    classes: Vec<SubgroupClassRecord>,
    total: usize,
}

impl Builder<'_> {
    fn add_class(&mut self, k: Subgroup) -> Result<usize> {
        let orbit = conjugation_orbit(self.group, &k);
        self.total += orbit.len();
        if self.total > self.limits.max_subgroups {
            return Err(Error::SubgroupCapExceeded {
                cap: self.limits.max_subgroups,
            });
        }
        let id = self.classes.len();
        let class_size = orbit.len();
        let mut rep: Option<Subgroup> = None;
        for member in orbit {
            if rep.as_ref().is_none_or(|r| member.members() < r.members()) {
                rep = Some(member.clone());
            }
            self.index.insert(member.members().clone(), id);
        }
        let representative = rep.expect("orbit is nonempty");
        let normalizer_order = self.group.order() / class_size;
        self.classes.push(SubgroupClassRecord {
            self_normalizing: normalizer_order == representative.order(),
            is_normal: class_size == 1,
            representative,
            class_size,
            normalizer_order,
        });
        Ok(id)
    }
}

/// Conjugates of `h` under the group, `h` first.
fn conjugation_orbit(group: &Group, h: &Subgroup) -> Vec<Subgroup> {
    let mut seen: HashMap<BitSet, ()> = HashMap::new();
    seen.insert(h.members().clone(), ());
    let mut orbit = vec![h.clone()];
    let mut i = 0;
    while i < orbit.len() {
        let current = orbit[i].clone();
        for &x in group.generator_elems() {
            if current.is_normalized_by(group, x) {
                continue;
            }
            let next = current.conjugate(group, x);
            if seen.insert(next.members().clone(), ()).is_none() {
                orbit.push(next);
            }
        }
        i += 1;
    }
    orbit
}

/// Order of `gH` in `N_G(H)/H`, for `g` normalizing `H`.
fn coset_order(group: &Group, h: &Subgroup, g: Elem) -> u64 {
    let mut k = 1;
    let mut x = g;
    while !h.contains(x) {
        x = group.mul(x, g);
        k += 1;
    }
    k
}

pub fn conjugacy_classes_of_subgroups(group: &Group, limits: &Limits) -> Result<Vec<SubgroupClassRecord>> {
    Ok(SubgroupLattice::compute(group, limits)?.classes)
}

pub fn all_subgroups(group: &Group, limits: &Limits) -> Result<Vec<Subgroup>> {
    Ok(SubgroupLattice::compute(group, limits)?.all_subgroups(group))
}

/// `⟨g⟩` for every element, deduplicated and sorted.
pub fn cyclic_subgroups(group: &Group) -> Vec<Subgroup> {
    let mut seen: HashMap<BitSet, Subgroup> = HashMap::new();
    for g in 0..group.order() as Elem {
        let c = Subgroup::generated(group, &[g]);
        seen.entry(c.members().clone()).or_insert(c);
    }
    let mut out: Vec<Subgroup> = seen.into_values().collect();
    out.sort();
    out
}

pub fn is_self_normalizing(group: &Group, h: &Subgroup) -> Result<bool> {
    Ok(subgroup::normalizer(group, h)?.order() == h.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate;
    use crate::perm::Permutation;

    fn group(d: usize, gens: &[&str]) -> Group {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_with_degree(s, d).unwrap())
            .collect();
        enumerate(d, &gens).unwrap()
    }

    fn orders(lat: &SubgroupLattice) -> Vec<usize> {
        lat.classes().iter().map(|c| c.order()).collect()
    }

    #[test]
    fn cyclic_subgroup_counts() {
        assert_eq!(cyclic_subgroups(&group(6, &["(1 2 3 4 5 6)"])).len(), 4);
        assert_eq!(cyclic_subgroups(&group(4, &["(1 2)", "(3 4)"])).len(), 4);
        assert_eq!(cyclic_subgroups(&group(3, &["(1 2)", "(1 2 3)"])).len(), 5);
    }

    #[test]
    fn s3_lattice() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let lat = SubgroupLattice::compute(&g, &Limits::default()).unwrap();
        assert_eq!(lat.total_subgroups(), 6);
        assert_eq!(orders(&lat), vec![1, 2, 3, 6]);
        assert_eq!(lat.all_subgroups(&g).len(), 6);
    }

    #[test]
    fn a5_lattice() {
        let g = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let lat = SubgroupLattice::compute(&g, &Limits::default()).unwrap();
        assert_eq!(lat.total_subgroups(), 59);
        assert_eq!(orders(&lat), vec![1, 2, 3, 4, 5, 6, 10, 12, 60]);
        let total: usize = lat.classes().iter().map(|c| c.class_size).sum();
        assert_eq!(total, 59);
    }

    #[test]
    fn cyclic_prime_power_classes_are_all_normal() {
        let g = group(27, &["(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27)"]);
        let lat = SubgroupLattice::compute(&g, &Limits::default()).unwrap();
        assert_eq!(lat.classes().len(), 4);
        assert!(lat.classes().iter().all(|c| c.is_normal));
    }

    #[test]
    fn subgroup_cap_is_enforced() {
        let g = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let limits = Limits {
            max_subgroups: 20,
            ..Limits::default()
        };
        assert_eq!(
            SubgroupLattice::compute(&g, &limits).unwrap_err(),
            Error::SubgroupCapExceeded { cap: 20 }
        );
    }

    #[test]
    fn strategies_agree_on_s4() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let auto = SubgroupLattice::compute(&g, &Limits::default()).unwrap();
        let general =
            SubgroupLattice::compute_with(&g, &Limits::default(), ExtensionStrategy::General).unwrap();
        assert_eq!(auto.classes(), general.classes());
        assert_eq!(auto.classes().len(), 11);
        assert_eq!(auto.total_subgroups(), 30);
    }

    #[test]
    fn class_of_finds_conjugates() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let lat = SubgroupLattice::compute(&g, &Limits::default()).unwrap();
        let t = Subgroup::generated_by_perms(&g, &[Permutation::parse_with_degree("(3 4)", 4).unwrap()]).unwrap();
        let c = lat.class_of(&g, &t).unwrap();
        assert_eq!(lat.classes()[c].class_size, 6);
        assert!(lat.orbit(&g, c).contains(&t));
    }

    #[test]
    fn self_normalizing_examples() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        assert!(is_self_normalizing(&g, &Subgroup::whole(&g)).unwrap());
        let t = Subgroup::generated_by_perms(&g, &[Permutation::parse_with_degree("(1 2)", 3).unwrap()]).unwrap();
        assert!(is_self_normalizing(&g, &t).unwrap());
    }
}
