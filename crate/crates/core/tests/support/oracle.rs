//! Brute-force subgroup enumeration, deliberately sharing nothing with the
//! lattice code: products go through `Permutation::compose`, subgroups are
//! plain sorted index sets, and every subgroup is found by closing element
//! pairs and then joining with single elements until nothing new appears.

use std::collections::{BTreeSet, HashMap};

use dcensus::{Group, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCounts {
    pub subgroups: usize,
    pub classes: usize,
    pub d: usize,
}

struct Table {
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl Table {
    fn new(group: &Group) -> Table {
        let perms = group.elements().to_vec();
        let index = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Table { perms, index }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.perms[a].compose(&self.perms[b]).unwrap()]
    }

    fn inv(&self, a: usize) -> usize {
        self.index[&self.perms[a].inverse()]
    }

    fn close(&self, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut set = seed.clone();
        set.insert(self.index[&Permutation::identity(self.perms[0].degree())]);
        loop {
            let items: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &items {
                for &b in &items {
                    set.insert(self.mul(a, b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    fn conjugate(&self, h: &BTreeSet<usize>, x: usize) -> BTreeSet<usize> {
        let xi = self.inv(x);
        h.iter().map(|&e| self.mul(self.mul(xi, e), x)).collect()
    }
}

pub fn naive_subgroups(group: &Group) -> Vec<BTreeSet<usize>> {
    let t = Table::new(group);
    let n = t.perms.len();
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            found.insert(t.close(&[a, b].into_iter().collect()));
        }
    }
    let mut frontier: Vec<BTreeSet<usize>> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for g in 0..n {
                if h.contains(&g) {
                    continue;
                }
                let mut seed = h.clone();
                seed.insert(g);
                let k = t.close(&seed);
                if found.insert(k.clone()) {
                    next.push(k);
                }
            }
        }
        frontier = next;
    }
    found.into_iter().collect()
}

pub fn naive_counts(group: &Group) -> OracleCounts {
    let t = Table::new(group);
    let n = t.perms.len();
    let subgroups = naive_subgroups(group);
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let (mut classes, mut d) = (0, 0);
    for h in &subgroups {
        if seen.contains(h) {
            continue;
        }
        classes += 1;
        let mut normalizer = 0;
        for x in 0..n {
            let c = t.conjugate(h, x);
            if c == *h {
                normalizer += 1;
            }
            seen.insert(c);
        }
        if h.len() > 1 && normalizer > h.len() {
            d += 1;
        }
    }
    OracleCounts {
        subgroups: subgroups.len(),
        classes,
        d,
    }
}
