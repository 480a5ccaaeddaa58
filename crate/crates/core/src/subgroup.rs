use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::perm::Permutation;

/// A subgroup, stored as a bitset over its parent's element table together
/// with a (not necessarily minimal) generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: u64,
    members: BitSet,
    order: usize,
    gens: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.members.hash(state);
    }
}

impl Ord for Subgroup {
    /// By order, then canonical bitset order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub(crate) fn from_parts(group: &Group, members: BitSet, gens: Vec<Elem>) -> Subgroup {
        let order = members.count();
        Subgroup {
            parent: group.fingerprint(),
            members,
            order,
            gens,
        }
    }

    pub fn trivial(group: &Group) -> Subgroup {
        Subgroup::from_parts(
            group,
            BitSet::from_indices(group.order(), [0]),
            Vec::new(),
        )
    }

    pub fn whole(group: &Group) -> Subgroup {
        Subgroup::from_parts(
            group,
            BitSet::full(group.order()),
            group.generator_elems().to_vec(),
        )
    }

    /// Subgroup generated by the given elements.
    pub fn generated(group: &Group, gens: &[Elem]) -> Subgroup {
        let trivial = Subgroup::trivial(group);
        gens.iter().fold(trivial, |h, &g| h.extended(group, g))
    }

    /// Subgroup generated by permutations, which must lie in `group`.
    pub fn generated_by_perms(group: &Group, perms: &[Permutation]) -> Result<Subgroup> {
        let gens = perms
            .iter()
            .map(|p| group.index_of(p).ok_or(Error::NotAMember))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup::generated(group, &gens))
    }

    /// Accepts an explicit element set; fails unless it is closed.
    pub fn from_elements(group: &Group, elements: &[Elem]) -> Result<Subgroup> {
        let n = group.order();
        if elements.iter().any(|&e| e as usize >= n) {
            return Err(Error::NotASubgroup);
        }
        let members = BitSet::from_indices(n, elements.iter().map(|&e| e as usize));
        let h = Subgroup::generated(group, elements);
        if h.members != members {
            return Err(Error::NotASubgroup);
        }
        Ok(h)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().map(|i| i as Elem)
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn parent_fingerprint(&self) -> u64 {
        self.parent
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.members.is_subset(&other.members)
    }

    /// Fails with [`Error::NotASubgroup`] unless this subgroup belongs to `group`.
    pub fn check_parent(&self, group: &Group) -> Result<()> {
        if self.parent == group.fingerprint() && self.members.len() == group.order() {
            Ok(())
        } else {
            Err(Error::NotASubgroup)
        }
    }

    /// `⟨self, g⟩`, by coset enumeration: the result is a union of right
    /// cosets `H·r`, and new coset representatives come from multiplying
    /// known ones by generators on the right.
    pub fn extended(&self, group: &Group, g: Elem) -> Subgroup {
        if self.contains(g) {
            return self.clone();
        }
        let mut gens = self.gens.clone();
        gens.push(g);
        let base: Vec<Elem> = self.elements().collect();
        let mut members = self.members.clone();
        let mut reps = vec![g];
        for &h in &base {
            members.insert(group.mul(h, g) as usize);
        }
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &s in &gens {
                let x = group.mul(r, s);
                if !members.contains(x as usize) {
                    reps.push(x);
                    for &h in &base {
                        members.insert(group.mul(h, x) as usize);
                    }
                }
            }
            i += 1;
        }
        Subgroup::from_parts(group, members, gens)
    }

    /// `x⁻¹ H x`.
    pub fn conjugate(&self, group: &Group, x: Elem) -> Subgroup {
        let members = BitSet::from_indices(
            group.order(),
            self.elements().map(|h| group.conj(h, x) as usize),
        );
        Subgroup {
            parent: self.parent,
            members,
            order: self.order,
            gens: self.gens.iter().map(|&h| group.conj(h, x)).collect(),
        }
    }

    /// True if `x` normalizes this subgroup; only generators are tested.
    pub fn is_normalized_by(&self, group: &Group, x: Elem) -> bool {
        self.gens.iter().all(|&h| self.contains(group.conj(h, x)))
    }

    pub fn to_group(&self, group: &Group) -> Group {
        group.subgroup_group(&self.gens)
    }

    pub fn is_cyclic(&self, group: &Group) -> bool {
        self.elements()
            .any(|e| group.order_of(e) as usize == self.order)
    }
}

/// `N_G(H) = {g : H^g = H}`, by element scan.
pub fn normalizer(group: &Group, h: &Subgroup) -> Result<Subgroup> {
    h.check_parent(group)?;
    let members: Vec<Elem> = (0..group.order() as Elem)
        .filter(|&g| h.is_normalized_by(group, g))
        .collect();
    Ok(from_member_list(group, &members))
}

/// `C_G(H) = {g : gh = hg for all h ∈ H}`, by element scan.
pub fn centralizer(group: &Group, h: &Subgroup) -> Result<Subgroup> {
    h.check_parent(group)?;
    let members: Vec<Elem> = (0..group.order() as Elem)
        .filter(|&g| {
            h.generators()
                .iter()
                .all(|&x| group.mul(g, x) == group.mul(x, g))
        })
        .collect();
    Ok(from_member_list(group, &members))
}

/// Center of the group.
pub fn center(group: &Group) -> Subgroup {
    centralizer(group, &Subgroup::whole(group)).expect("whole group belongs to itself")
}

pub fn is_normal(group: &Group, h: &Subgroup) -> Result<bool> {
    h.check_parent(group)?;
    Ok(group
        .generator_elems()
        .iter()
        .all(|&x| h.is_normalized_by(group, x)))
}

/// Smallest subgroup containing `seeds` that is normalized by every element
/// of `within` (given by generators).
pub fn normal_closure(group: &Group, within: &[Elem], seeds: &[Elem]) -> Subgroup {
    let mut closure = Subgroup::generated(group, seeds);
    loop {
        let missing = closure.gens.iter().find_map(|&h| {
            within
                .iter()
                .map(|&x| group.conj(h, x))
                .find(|&c| !closure.contains(c))
        });
        match missing {
            Some(c) => closure = closure.extended(group, c),
            None => return closure,
        }
    }
}

/// Builds a subgroup from a member list known to be closed, choosing a
/// generating set greedily.
pub(crate) fn from_member_list(group: &Group, members: &[Elem]) -> Subgroup {
    let mut h = Subgroup::trivial(group);
    for &m in members {
        if !h.contains(m) {
            h = h.extended(group, m);
        }
    }
    debug_assert_eq!(h.order(), members.len());
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate;

    fn perm(s: &str, d: usize) -> Permutation {
        Permutation::parse_with_degree(s, d).unwrap()
    }

    fn s3() -> Group {
        enumerate(3, &[perm("(1 2)", 3), perm("(1 2 3)", 3)]).unwrap()
    }

    #[test]
    fn normalizer_examples() {
        let g = s3();
        let t = Subgroup::generated_by_perms(&g, &[perm("(1 2)", 3)]).unwrap();
        assert_eq!(normalizer(&g, &t).unwrap(), t);
        let c3 = Subgroup::generated_by_perms(&g, &[perm("(1 2 3)", 3)]).unwrap();
        assert_eq!(normalizer(&g, &c3).unwrap().order(), 6);
    }

    #[test]
    fn centralizer_examples() {
        let g = s3();
        let trivial = Subgroup::trivial(&g);
        assert_eq!(centralizer(&g, &trivial).unwrap().order(), 6);
        let c3 = Subgroup::generated_by_perms(&g, &[perm("(1 2 3)", 3)]).unwrap();
        assert_eq!(centralizer(&g, &c3).unwrap(), c3);
        assert!(center(&g).is_trivial());
    }

    #[test]
    fn foreign_subgroup_is_rejected() {
        let g = s3();
        let other = enumerate(4, &[perm("(1 2 3 4)", 4)]).unwrap();
        let h = Subgroup::whole(&other);
        assert_eq!(normalizer(&g, &h), Err(Error::NotASubgroup));
        assert_eq!(centralizer(&g, &h), Err(Error::NotASubgroup));
    }

    #[test]
    fn from_elements_checks_closure() {
        let g = s3();
        let t = g.index_of(&perm("(1 2)", 3)).unwrap();
        assert!(Subgroup::from_elements(&g, &[0, t]).is_ok());
        let c = g.index_of(&perm("(1 2 3)", 3)).unwrap();
        assert_eq!(Subgroup::from_elements(&g, &[0, c]), Err(Error::NotASubgroup));
    }

    #[test]
    fn normal_closure_of_transposition_in_s3_is_everything() {
        let g = s3();
        let t = g.index_of(&perm("(1 2)", 3)).unwrap();
        let nc = normal_closure(&g, g.generator_elems(), &[t]);
        assert_eq!(nc.order(), 6);
    }
}
