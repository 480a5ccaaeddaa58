//! Fully enumerated permutation groups.
//!
//! A [`Group`] keeps every element, sorted lexicographically by image
//! sequence, so an element is identified by its position in that table.
//! Index `0` is always the identity. Products of indices go through a Cayley
//! table for small groups and through a base-image lookup otherwise.

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{DefaultHasher, Hash, Hasher};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Index of an element in its group's element table.
pub type Elem = u32;

/// Resource caps for enumeration and lattice computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 1_000_000,
            max_subgroups: 100_000,
        }
    }
}

/// Groups up to this order get a full Cayley table.
const TABLE_LIMIT: usize = 2048;

#[derive(Clone)]
enum Multiplication {
    Table(Vec<u16>),
    Base {
        points: Vec<usize>,
        bits: u32,
        index: BaseIndex,
    },
}

#[derive(Clone)]
enum BaseIndex {
    Packed(HashMap<u128, Elem>),
    Wide(HashMap<Vec<u16>, Elem>),
}

#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    generator_elems: Vec<Elem>,
    inverses: Vec<Elem>,
    mult: Multiplication,
    fingerprint: u64,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Breadth-first closure of `generators` with the default order cap.
pub fn enumerate(degree: usize, generators: &[Permutation]) -> Result<Group> {
    Group::enumerate(degree, generators, &Limits::default())
}

impl Group {
    pub fn enumerate(degree: usize, generators: &[Permutation], limits: &Limits) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.compose_unchecked(g);
                if !seen.contains(&y) {
                    if seen.len() >= limits.max_order {
                        return Err(Error::OrderCapExceeded {
                            cap: limits.max_order,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Group::from_sorted(degree, generators.to_vec(), elements))
    }

    fn from_sorted(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Group {
        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        elements.hash(&mut hasher);
        let fingerprint = hasher.finish();

        let mut group = Group {
            degree,
            generators,
            elements,
            generator_elems: Vec::new(),
            inverses: Vec::new(),
            mult: Multiplication::Table(Vec::new()),
            fingerprint,
        };
        group.mult = group.build_multiplication();
        group.generator_elems = group
            .generators
            .iter()
            .map(|g| group.index_of(g).expect("generator lies in its closure"))
            .collect();
        group.inverses = (0..group.order())
            .map(|i| {
                group
                    .index_of(&group.elements[i].inverse())
                    .expect("group is closed under inverses")
            })
            .collect();
        group
    }

    fn build_multiplication(&self) -> Multiplication {
        let n = self.order();
        let (points, bits, index) = self.base_index();
        let base = Multiplication::Base {
            points,
            bits,
            index,
        };
        if n > TABLE_LIMIT {
            return base;
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = Self::base_product(&self.elements, &base, a as Elem, b as Elem) as u16;
            }
        }
        Multiplication::Table(table)
    }

    /// Greedy base: keep adding the smallest point moved by the pointwise
    /// stabilizer of the points chosen so far, until that stabilizer is trivial.
    fn base_index(&self) -> (Vec<usize>, u32, BaseIndex) {
        let mut points = Vec::new();
        let mut stabilizer: Vec<usize> = (1..self.order()).collect();
        while let Some(&s) = stabilizer.first() {
            let moved = (0..self.degree)
                .find(|&x| self.elements[s].apply(x) != x)
                .expect("non-identity element moves a point");
            points.push(moved);
            stabilizer.retain(|&e| self.elements[e].apply(moved) == moved);
        }
        let bits = usize::BITS - (self.degree.max(2) - 1).leading_zeros();
        let index = if points.len() * bits as usize <= 128 {
            BaseIndex::Packed(
                self.elements
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (pack(points.iter().map(|&p| e.apply(p)), bits), i as Elem))
                    .collect(),
            )
        } else {
            BaseIndex::Wide(
                self.elements
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (points.iter().map(|&p| e.apply(p) as u16).collect(), i as Elem))
                    .collect(),
            )
        };
        (points, bits, index)
    }

    #[inline]
    fn base_product(elements: &[Permutation], mult: &Multiplication, a: Elem, b: Elem) -> Elem {
        let Multiplication::Base {
            points,
            bits,
            index,
        } = mult
        else {
            unreachable!("base product requested on a table multiplication")
        };
        let (ea, eb) = (elements[a as usize].raw(), elements[b as usize].raw());
        match index {
            BaseIndex::Packed(map) => {
                let key = pack(points.iter().map(|&p| eb[ea[p] as usize] as usize), *bits);
                map[&key]
            }
            BaseIndex::Wide(map) => {
                let key: Vec<u16> = points.iter().map(|&p| eb[ea[p] as usize]).collect();
                map[&key]
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, e: Elem) -> &Permutation {
        &self.elements[e as usize]
    }

    /// Generators as element indices.
    pub fn generator_elems(&self) -> &[Elem] {
        &self.generator_elems
    }

    /// Stable hash of the element table; subgroups carry it to name their parent.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn index_of(&self, perm: &Permutation) -> Option<Elem> {
        if perm.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(perm).ok().map(|i| i as Elem)
    }

    /// `a` first, then `b`.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mult {
            Multiplication::Table(t) => t[a as usize * self.order() + b as usize] as Elem,
            base => Self::base_product(&self.elements, base, a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a as usize]
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conj(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut result = self.identity();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn order_of(&self, a: Elem) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Smallest `k ≥ 1` with `g^k = e`; errors if `g` is not in the group.
    pub fn element_order(&self, g: &Permutation) -> Result<u64> {
        let e = self.index_of(g).ok_or(Error::NotAMember)?;
        Ok(self.order_of(e))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_elems;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Distinct prime divisors of the order, ascending.
    pub fn prime_divisors(&self) -> Vec<u64> {
        prime_factors(self.order() as u64)
            .into_iter()
            .map(|(p, _)| p)
            .collect()
    }

    /// Re-enumerates from the given generator elements (used to turn a
    /// subgroup into a standalone group).
    pub fn subgroup_group(&self, gens: &[Elem]) -> Group {
        let perms: Vec<Permutation> = gens
            .iter()
            .filter(|&&g| g != self.identity())
            .map(|&g| self.element(g).clone())
            .collect();
        Group::enumerate(
            self.degree,
            &perms,
            &Limits {
                max_order: self.order(),
                ..Limits::default()
            },
        )
        .expect("subgroup of an enumerated group fits the parent's order")
    }
}

fn pack(images: impl Iterator<Item = usize>, bits: u32) -> u128 {
    images.fold(0u128, |acc, x| (acc << bits) | x as u128)
}

/// Prime factorisation by trial division, ascending.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [(n, 1)]
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, d: usize) -> Permutation {
        Permutation::parse_with_degree(s, d).unwrap()
    }

    #[test]
    fn enumerates_small_groups() {
        let s3 = enumerate(3, &[perm("(1 2)", 3), perm("(1 2 3)", 3)]).unwrap();
        assert_eq!(s3.order(), 6);
        let a5 = enumerate(5, &[perm("(1 2 3 4 5)", 5), perm("(1 2 3)", 5)]).unwrap();
        assert_eq!(a5.order(), 60);
        let trivial = enumerate(4, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.element(0).is_identity());
    }

    #[test]
    fn order_cap_and_degree_errors() {
        let limits = Limits {
            max_order: 5,
            ..Limits::default()
        };
        let err = Group::enumerate(3, &[perm("(1 2)", 3), perm("(1 2 3)", 3)], &limits).unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded { cap: 5 });
        assert!(matches!(
            enumerate(4, &[perm("(1 2)", 3)]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn element_order_requires_membership() {
        let c5 = enumerate(5, &[perm("(1 2 3 4 5)", 5)]).unwrap();
        assert_eq!(c5.element_order(&Permutation::identity(5)).unwrap(), 1);
        assert_eq!(c5.element_order(&perm("(1 2 3 4 5)", 5)).unwrap(), 5);
        assert_eq!(c5.element_order(&perm("(1 2)", 5)), Err(Error::NotAMember));
        let g = enumerate(5, &[perm("(1 2)(3 4 5)", 5)]).unwrap();
        assert_eq!(g.element_order(&perm("(1 2)(3 4 5)", 5)).unwrap(), 6);
    }

    #[test]
    fn table_and_base_routes_agree() {
        let g = enumerate(5, &[perm("(1 2 3 4 5)", 5), perm("(1 2)", 5)]).unwrap();
        let base = g.base_index();
        let mult = Multiplication::Base {
            points: base.0,
            bits: base.1,
            index: base.2,
        };
        for a in 0..g.order() as Elem {
            for b in 0..g.order() as Elem {
                let expected = g.index_of(&g.element(a).compose(g.element(b)).unwrap()).unwrap();
                assert_eq!(g.mul(a, b), expected);
                assert_eq!(Group::base_product(&g.elements, &mult, a, b), expected);
            }
        }
    }

    #[test]
    fn primes() {
        assert_eq!(prime_factors(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert_eq!(p_part(24, 2), 8);
    }
}
