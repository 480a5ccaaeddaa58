//! Series, Sylow subgroups, Frobenius recognition and related predicates.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{p_part, prime_factors, Elem, Group};
use crate::lattice::SubgroupLattice;
use crate::subgroup::{self, normal_closure, Subgroup};

/// `[H, H]` for a subgroup `H` of `group`.
fn commutator_of(group: &Group, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let seeds: Vec<Elem> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| gens[i + 1..].iter().map(move |&b| (a, b)))
        .map(|(a, b)| group.commutator(a, b))
        .collect();
    normal_closure(group, gens, &seeds)
}

/// `G′`, the normal closure of the generator commutators.
pub fn derived_subgroup(group: &Group) -> Subgroup {
    commutator_of(group, &Subgroup::whole(group))
}

/// `G ⊇ G′ ⊇ G″ ⊇ …`, stopping at the first repeat (kept once).
pub fn derived_series(group: &Group) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(group)];
    loop {
        let last = series.last().expect("series is nonempty");
        if last.is_trivial() {
            return series;
        }
        let next = commutator_of(group, last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// Number of steps to reach `1`, or `None` for unsolvable groups.
pub fn derived_length(group: &Group) -> Option<usize> {
    let series = derived_series(group);
    series
        .last()
        .expect("series is nonempty")
        .is_trivial()
        .then(|| series.len() - 1)
}

pub fn is_solvable(group: &Group) -> bool {
    derived_length(group).is_some()
}

/// `γ₁ = G`, `γₖ₊₁ = [γₖ, G]`, stopping at the first repeat.
pub fn lower_central_series(group: &Group) -> Vec<Subgroup> {
    let gens = group.generator_elems();
    let mut series = vec![Subgroup::whole(group)];
    loop {
        let last = series.last().expect("series is nonempty");
        if last.is_trivial() {
            return series;
        }
        let seeds: Vec<Elem> = last
            .generators()
            .iter()
            .flat_map(|&a| gens.iter().map(move |&g| (a, g)))
            .map(|(a, g)| group.commutator(a, g))
            .collect();
        let next = normal_closure(group, gens, &seeds);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn nilpotency_class(group: &Group) -> Option<usize> {
    let series = lower_central_series(group);
    series
        .last()
        .expect("series is nonempty")
        .is_trivial()
        .then(|| series.len() - 1)
}

pub fn is_nilpotent(group: &Group) -> bool {
    nilpotency_class(group).is_some()
}

pub fn center(group: &Group) -> Subgroup {
    subgroup::center(group)
}

/// The Sylow `p`-subgroup with least canonical bitset; trivial when `p`
/// does not divide the order.
pub fn sylow_subgroup(group: &Group, lattice: &SubgroupLattice, p: u64) -> Result<Subgroup> {
    lattice.check_group(group)?;
    let target = p_part(group.order() as u64, p) as usize;
    lattice
        .classes()
        .iter()
        .find(|c| c.order() == target)
        .map(|c| c.representative.clone())
        .ok_or_else(|| Error::Internal(format!("no subgroup of order {target}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusDecomposition {
    pub kernel: Subgroup,
    pub complement: Subgroup,
    pub kernel_order: usize,
    pub complement_order: usize,
}

/// Looks for a complement `H` with `H ∩ H^g = 1` for all `g ∉ H`, scanning
/// classes from the largest down.
pub fn frobenius_decomposition(
    group: &Group,
    lattice: &SubgroupLattice,
) -> Result<Option<FrobeniusDecomposition>> {
    lattice.check_group(group)?;
    let n = group.order();
    for (i, class) in lattice.classes().iter().enumerate().rev() {
        let h = class.order();
        if h == 1 || h == n || !class.self_normalizing {
            continue;
        }
        // Conjugates are pairwise disjoint off the identity iff their
        // nonidentity parts cover exactly class_size·(|H|−1) elements.
        let mut covered = BitSet::new(n);
        for conj in lattice.orbit(group, i) {
            covered.union_with(conj.members());
        }
        if covered.count() - 1 != class.class_size * (h - 1) {
            continue;
        }
        let kernel_members: Vec<Elem> = (0..n as Elem)
            .filter(|&e| e == group.identity() || !covered.contains(e as usize))
            .collect();
        let kernel = Subgroup::from_elements(group, &kernel_members).map_err(|_| {
            Error::Internal("Frobenius kernel candidate is not a subgroup".into())
        })?;
        return Ok(Some(FrobeniusDecomposition {
            kernel_order: kernel.order(),
            complement_order: h,
            kernel,
            complement: class.representative.clone(),
        }));
    }
    Ok(None)
}

/// Length of a composition series, by repeatedly passing to a largest
/// proper normal subgroup (least bitset among those of that order).
pub fn composition_length(group: &Group, lattice: &SubgroupLattice) -> Result<usize> {
    lattice.check_group(group)?;
    let mut current = Subgroup::whole(group);
    let mut length = 0;
    while !current.is_trivial() {
        current = largest_normal_in(group, lattice, &current);
        length += 1;
    }
    Ok(length)
}

fn largest_normal_in(group: &Group, lattice: &SubgroupLattice, n: &Subgroup) -> Subgroup {
    let classes = lattice.classes();
    let mut i = classes.len();
    while i > 0 {
        i -= 1;
        let order = classes[i].order();
        if order >= n.order() || n.order() % order != 0 {
            continue;
        }
        // All classes of this order (they sit contiguously).
        let mut j = i;
        while j > 0 && classes[j - 1].order() == order {
            j -= 1;
        }
        let best = (j..=i)
            .flat_map(|c| lattice.orbit(group, c))
            .filter(|k| {
                k.is_subgroup_of(n) && n.generators().iter().all(|&x| k.is_normalized_by(group, x))
            })
            .min();
        if let Some(k) = best {
            return k;
        }
        i = j;
    }
    Subgroup::trivial(group)
}

/// True iff a normal subgroup of order `|G|/|P|` exists.
pub fn has_normal_p_complement(group: &Group, lattice: &SubgroupLattice, p: u64) -> Result<bool> {
    lattice.check_group(group)?;
    let n = group.order() as u64;
    let target = (n / p_part(n, p)) as usize;
    Ok(lattice.normal_subgroups().any(|s| s.order() == target))
}

/// Every Sylow subgroup cyclic, i.e. for every `p` some element has order
/// equal to the `p`-part of `|G|`.
pub fn is_z_group(group: &Group) -> bool {
    let n = group.order() as u64;
    let orders: Vec<u64> = (0..n as Elem).map(|e| group.order_of(e)).collect();
    prime_factors(n).into_iter().all(|(p, _)| {
        let target = p_part(n, p);
        orders.iter().any(|&o| p_part(o, p) == target)
    })
}

/// `H` subnormal, by iterating `K ↦ H^K` (normal closure in `K`) from `G`.
pub fn is_subnormal(group: &Group, h: &Subgroup) -> Result<bool> {
    h.check_parent(group)?;
    let mut k = Subgroup::whole(group);
    loop {
        if k == *h {
            return Ok(true);
        }
        let next = normal_closure(group, k.generators(), h.generators());
        if next.order() == k.order() {
            return Ok(false);
        }
        k = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    pub derived_length: Option<usize>,
    pub center_order: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub composition_length: usize,
    pub prime_divisors: Vec<u64>,
    pub is_z_group: bool,
}

pub fn analyze(group: &Group, lattice: &SubgroupLattice) -> Result<StructureReport> {
    let derived = derived_series(group);
    let lower = lower_central_series(group);
    let derived_length = derived
        .last()
        .filter(|s| s.is_trivial())
        .map(|_| derived.len() - 1);
    let nilpotency_class = lower
        .last()
        .filter(|s| s.is_trivial())
        .map(|_| lower.len() - 1);
    Ok(StructureReport {
        order: group.order(),
        abelian: group.is_abelian(),
        nilpotent: nilpotency_class.is_some(),
        nilpotency_class,
        solvable: derived_length.is_some(),
        derived_length,
        center_order: center(group).order(),
        derived_series: derived.iter().map(Subgroup::order).collect(),
        lower_central_series: lower.iter().map(Subgroup::order).collect(),
        composition_length: composition_length(group, lattice)?,
        prime_divisors: group.prime_divisors(),
        is_z_group: is_z_group(group),
    })
}
