//! `D(G)`, `D_G(N)`, the closed-form counts for Frobenius families, the
//! numeric bounds, and the small-`D` classification.

use std::fmt;

use serde::Serialize;

use crate::constructors::{FrobeniusSpec, ModuleKind};
use crate::error::{Error, Result};
use crate::group::{is_prime, p_part, prime_factors, Group, Limits};
use crate::lattice::{SubgroupClassRecord, SubgroupLattice};
use crate::structure;
use crate::subgroup::{self, Subgroup};

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub group_order: usize,
    /// `D(G)`.
    pub d_value: usize,
    /// The nontrivial, non-self-normalizing classes, in lattice order.
    pub class_records: Vec<SubgroupClassRecord>,
    pub total_subgroup_classes: usize,
    pub total_subgroups: usize,
}

/// One row of a printed class table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub order: usize,
    pub class_size: usize,
    pub normalizer_order: usize,
    pub normal: bool,
}

impl CensusReport {
    pub fn from_lattice(lattice: &SubgroupLattice) -> CensusReport {
        let class_records: Vec<SubgroupClassRecord> = lattice
            .classes()
            .iter()
            .filter(|c| c.order() > 1 && !c.self_normalizing)
            .cloned()
            .collect();
        CensusReport {
            group_order: lattice.group_order(),
            d_value: class_records.len(),
            class_records,
            total_subgroup_classes: lattice.classes().len(),
            total_subgroups: lattice.total_subgroups(),
        }
    }

    pub fn rows(&self) -> Vec<ClassRow> {
        self.class_records
            .iter()
            .map(|c| ClassRow {
                order: c.order(),
                class_size: c.class_size,
                normalizer_order: c.normalizer_order,
                normal: c.is_normal,
            })
            .collect()
    }
}

/// Number of conjugacy classes of nontrivial subgroups that are not
/// self-normalizing. `G` itself never counts, since `N_G(G) = G`.
pub fn census(group: &Group, limits: &Limits) -> Result<CensusReport> {
    Ok(CensusReport::from_lattice(&SubgroupLattice::compute(group, limits)?))
}

/// `D_G(N)`: classes of nontrivial non-self-normalizing subgroups of `G`
/// with a member properly contained in `N`.
pub fn relative_census(group: &Group, lattice: &SubgroupLattice, n: &Subgroup) -> Result<usize> {
    lattice.check_group(group)?;
    n.check_parent(group)?;
    let normal = subgroup::is_normal(group, n)?;
    let mut count = 0;
    for (i, c) in lattice.classes().iter().enumerate() {
        if c.order() == 1 || c.self_normalizing || c.order() >= n.order() {
            continue;
        }
        let inside = if normal {
            c.representative.is_subgroup_of(n)
        } else {
            lattice.orbit(group, i).iter().any(|k| k.is_subgroup_of(n))
        };
        if inside {
            count += 1;
        }
    }
    Ok(count)
}

fn exact_div(num: i64, den: i64, what: &str) -> Result<u64> {
    if den == 0 || num % den != 0 || num / den < 0 {
        return Err(Error::NonIntegral(format!("{what}: {num}/{den}")));
    }
    Ok((num / den) as u64)
}

fn check_primes(p: u64, q: u64) -> Result<()> {
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(Error::Domain(format!("need distinct primes, got p={p} q={q}")));
    }
    Ok(())
}

fn check_case(p: u64, q: u64, kind: ModuleKind) -> Result<()> {
    let divides = (p - 1) % q == 0;
    match (kind, divides) {
        (ModuleKind::Irreducible, true) => Err(Error::Domain(format!(
            "irreducible case needs q ∤ p-1, but {q} | {}",
            p - 1
        ))),
        (ModuleKind::Irreducible, false) => Ok(()),
        (_, true) => Ok(()),
        (_, false) => Err(Error::Domain(format!(
            "{kind} case needs q | p-1, but {q} ∤ {}",
            p - 1
        ))),
    }
}

/// Cyclic kernel of order `p^n`, cyclic complement of order `q^m`:
/// `(n + 1)m − 1`.
pub fn formula_frob1(n: u64, m: u64) -> Result<u64> {
    if n == 0 || m == 0 {
        return Err(Error::Domain("n and m must be positive".into()));
    }
    Ok((n + 1) * m - 1)
}

/// Kernel `(C_p)²`, complement `C_q`.
pub fn formula_frob2(p: u64, q: u64, kind: ModuleKind) -> Result<u64> {
    check_primes(p, q)?;
    check_case(p, q, kind)?;
    let (p, q) = (p as i64, q as i64);
    match kind {
        ModuleKind::Irreducible => Ok(exact_div(p + 1, q, "(p+1)/q")? + 1),
        ModuleKind::Homogeneous => Ok((p + 2) as u64),
        ModuleKind::SplitDistinct => Ok(exact_div(p - 1, q, "(p-1)/q")? + 3),
        ModuleKind::MixedDims => Err(Error::Domain(
            "mixed dimensions need a kernel of rank 3".into(),
        )),
    }
}

/// Kernel `(C_p)³`, complement `C_q`.
pub fn formula_frob3(p: u64, q: u64, kind: ModuleKind) -> Result<u64> {
    check_primes(p, q)?;
    check_case(p, q, kind)?;
    let (p, q) = (p as i64, q as i64);
    match kind {
        ModuleKind::Irreducible => Ok(exact_div(2 * (p * p + p + 1), q, "2(p²+p+1)/q")? + 1),
        ModuleKind::Homogeneous => Ok((2 * p * p + 2 * p + 3) as u64),
        ModuleKind::MixedDims => {
            Ok(exact_div(2 * (p * p - 1), q, "2(p²-1)/q")? + 2 * p as u64 + 5)
        }
        ModuleKind::SplitDistinct => Ok(exact_div(2 * (p * p + p - 2), q, "2(p²+p-2)/q")? + 7),
    }
}

/// The closed-form `D` for a Frobenius parameter set.
pub fn formula_for(spec: &FrobeniusSpec) -> Result<u64> {
    match *spec {
        FrobeniusSpec::Metacyclic { n, m, .. } => formula_frob1(n as u64, m as u64),
        FrobeniusSpec::ElementaryAbelian { p, k: 2, q, module } => formula_frob2(p, q, module),
        FrobeniusSpec::ElementaryAbelian { p, k: 3, q, module } => formula_frob3(p, q, module),
        FrobeniusSpec::ElementaryAbelian { k, .. } => {
            Err(Error::Domain(format!("no closed form for kernel rank {k}")))
        }
    }
}

/// `(D(H) + 2)(D(K) + 2) − 2`.
pub fn product_lower_bound(dh: u64, dk: u64) -> u64 {
    (dh + 2) * (dk + 2) - 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_class: u64,
    pub max_derived_length: u64,
}

fn floor_log2(x: u64) -> u64 {
    63 - x.leading_zeros() as u64
}

/// `p`-group in `D_n`, `n > 1`: class `≤ n/2`, derived length
/// `≤ log₂(n/2) + 1` (equivalently `2^dl ≤ n`).
pub fn pgroup_bounds(n: u64) -> Result<Bounds> {
    if n < 2 {
        return Err(Error::Domain(format!("p-group bounds need n ≥ 2, got {n}")));
    }
    Ok(Bounds {
        max_class: n / 2,
        max_derived_length: floor_log2(n),
    })
}

/// Noncyclic nilpotent group with `k` prime divisors in `D_n`: class
/// `≤ (n + 2 − 2^k)/2^k`, derived length `≤ log₂` of that `+ 1`.
pub fn nilpotent_bounds(n: u64, k: u32) -> Result<Bounds> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let two_k = 1u64 << k;
    if n + 2 < 2 * two_k {
        return Err(Error::Domain(format!(
            "(n+2-2^k)/2^k < 1 for n={n}, k={k}: no noncyclic nilpotent group fits"
        )));
    }
    let numerator = n + 2 - two_k;
    Ok(Bounds {
        max_class: numerator / two_k,
        // largest d with 2^(d-1) · 2^k ≤ n + 2 − 2^k
        max_derived_length: floor_log2(numerator / two_k) + 1,
    })
}

/// Solvable group in `D_n`, `n ≥ 3`: derived length
/// `≤ min(n − 1, ⌊3 log₂(n + 1) + 9⌋)`.
pub fn solvable_dl_bound(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::Domain(format!("solvable bound needs n ≥ 3, got {n}")));
    }
    // ⌊3 log₂(n+1)⌋ = ⌊log₂((n+1)³)⌋
    let log_part = floor_log2((n + 1).pow(3)) + 9;
    Ok((n - 1).min(log_part))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Bucket {
    /// The trivial group: no nontrivial subgroups at all.
    D0Trivial,
    D0Prime,
    D1CyclicP2,
    D1FrobeniusPq,
    /// `C_{p³}`.
    D2CyclicP3,
    /// `C_{pq}`.
    D2CyclicPq,
    /// Frobenius `C_{p²} ⋊ C_q`.
    D2FrobeniusP2q,
    D2A4,
    /// `C_{p⁴}`.
    D3CyclicP4,
    D3KleinFour,
    /// Frobenius `C_{p³} ⋊ C_q`.
    D3FrobeniusP3q,
    /// Frobenius `(C_p)² ⋊ C_q`, `p = 2q − 1`.
    D3FrobeniusP2Elem,
    /// Frobenius `C_p ⋊ C_{q²}`.
    D3FrobeniusPq2,
    /// Frobenius `C_{pr} ⋊ C_q`.
    D3FrobeniusPrq,
    /// Frobenius `(C_p)³ ⋊ C_q`, `q = p² + p + 1`.
    D3FrobeniusP3Elem,
    /// `C_p ⋊ C_{q²}` with `|Z(G)| = q`.
    D3CentralExtension,
    D4A5,
    D4SL23,
    NotCovered,
}

impl Bucket {
    pub fn label(self) -> &'static str {
        match self {
            Bucket::D0Trivial => "D0-trivial",
            Bucket::D0Prime => "D0-prime",
            Bucket::D1CyclicP2 => "D1-cyclic-p2",
            Bucket::D1FrobeniusPq => "D1-frobenius-pq",
            Bucket::D2CyclicP3 => "D2-1",
            Bucket::D2CyclicPq => "D2-2",
            Bucket::D2FrobeniusP2q => "D2-3",
            Bucket::D2A4 => "D2-4",
            Bucket::D3CyclicP4 => "D3-1",
            Bucket::D3KleinFour => "D3-2",
            Bucket::D3FrobeniusP3q => "D3-3",
            Bucket::D3FrobeniusP2Elem => "D3-4",
            Bucket::D3FrobeniusPq2 => "D3-5",
            Bucket::D3FrobeniusPrq => "D3-6",
            Bucket::D3FrobeniusP3Elem => "D3-7",
            Bucket::D3CentralExtension => "D3-8",
            Bucket::D4A5 => "D4-A5",
            Bucket::D4SL23 => "D4-SL23",
            Bucket::NotCovered => "not-covered",
        }
    }

    pub fn predicted_d(self) -> Option<u64> {
        use Bucket::*;
        match self {
            D0Trivial | D0Prime => Some(0),
            D1CyclicP2 | D1FrobeniusPq => Some(1),
            D2CyclicP3 | D2CyclicPq | D2FrobeniusP2q | D2A4 => Some(2),
            D3CyclicP4 | D3KleinFour | D3FrobeniusP3q | D3FrobeniusP2Elem | D3FrobeniusPq2
            | D3FrobeniusPrq | D3FrobeniusP3Elem | D3CentralExtension => Some(3),
            D4A5 | D4SL23 => Some(4),
            NotCovered => None,
        }
    }
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub bucket: Bucket,
    pub predicted_d: Option<u64>,
}

/// Cyclic of order `p^e` for a single prime: returns `e`.
fn prime_power_exponent(n: u64) -> Option<u32> {
    match prime_factors(n).as_slice() {
        [(_, e)] => Some(*e),
        _ => None,
    }
}

fn is_cyclic_group(group: &Group) -> bool {
    Subgroup::whole(group).is_cyclic(group)
}

fn is_elementary_abelian(group: &Group, h: &Subgroup) -> bool {
    let n = h.order() as u64;
    prime_power_exponent(n).is_some()
        && {
            let p = prime_factors(n)[0].0;
            h.elements().all(|e| group.order_of(e) == 1 || group.order_of(e) == p)
        }
        && h.generators().iter().all(|&a| {
            h.generators()
                .iter()
                .all(|&b| group.mul(a, b) == group.mul(b, a))
        })
}

/// Every bucket whose defining description fits `G`, in match order.
pub fn matching_buckets(group: &Group, lattice: &SubgroupLattice) -> Result<Vec<Bucket>> {
    lattice.check_group(group)?;
    let n = group.order() as u64;
    let factors = prime_factors(n);
    let exps: Vec<u32> = factors.iter().map(|&(_, e)| e).collect();
    let cyclic = is_cyclic_group(group);
    let mut out = Vec::new();
    if n == 1 {
        out.push(Bucket::D0Trivial);
    }
    if is_prime(n) {
        out.push(Bucket::D0Prime);
    }
    if cyclic {
        match exps.as_slice() {
            [2] => out.push(Bucket::D1CyclicP2),
            [3] => out.push(Bucket::D2CyclicP3),
            [4] => out.push(Bucket::D3CyclicP4),
            [1, 1] => out.push(Bucket::D2CyclicPq),
            _ => {}
        }
    }
    if n == 4 && !cyclic {
        out.push(Bucket::D3KleinFour);
    }
    if let Some(f) = structure::frobenius_decomposition(group, lattice)? {
        let k = f.kernel_order as u64;
        let h = f.complement_order as u64;
        let kernel_cyclic = f.kernel.is_cyclic(group);
        let complement_cyclic = f.complement.is_cyclic(group);
        let k_exp = prime_power_exponent(k);
        let h_exp = prime_power_exponent(h);
        let kp = prime_factors(k)[0].0;
        let hq = prime_factors(h)[0].0;
        if h_exp == Some(1) {
            match (k_exp, kernel_cyclic) {
                (Some(1), _) => out.push(Bucket::D1FrobeniusPq),
                (Some(2), true) => out.push(Bucket::D2FrobeniusP2q),
                (Some(3), true) => out.push(Bucket::D3FrobeniusP3q),
                (Some(2), false) if is_elementary_abelian(group, &f.kernel) && kp == 2 * hq - 1 && hq != 2 => {
                    out.push(Bucket::D3FrobeniusP2Elem)
                }
                (Some(3), false)
                    if is_elementary_abelian(group, &f.kernel) && hq == kp * kp + kp + 1 =>
                {
                    out.push(Bucket::D3FrobeniusP3Elem)
                }
                (None, true) if prime_factors(k).iter().all(|&(_, e)| e == 1) && prime_factors(k).len() == 2 => {
                    out.push(Bucket::D3FrobeniusPrq)
                }
                _ => {}
            }
        }
        if h_exp == Some(2) && complement_cyclic && k_exp == Some(1) {
            out.push(Bucket::D3FrobeniusPq2);
        }
    }
    let derived = structure::derived_subgroup(group);
    if n == 12 && derived.order() == 4 && !derived.is_cyclic(group) {
        out.push(Bucket::D2A4);
    }
    let solvable = structure::is_solvable(group);
    if n == 60 && !solvable {
        out.push(Bucket::D4A5);
    }
    let center = subgroup::center(group);
    if n == 24 && structure::derived_length(group) == Some(3) && center.order() == 2 {
        out.push(Bucket::D4SL23);
    }
    if let [(a, 1), (b, 2)] | [(b, 2), (a, 1)] = factors.as_slice() {
        let (p, q) = (*a, *b);
        let has_q2_element = (0..n as u32).any(|e| group.order_of(e) == q * q);
        if (p - 1) % q == 0
            && !group.is_abelian()
            && center.order() as u64 == q
            && has_q2_element
            && p_part(n, p) == p
        {
            out.push(Bucket::D3CentralExtension);
        }
    }
    Ok(out)
}

/// First matching bucket, or not-covered.
pub fn classify_small(group: &Group, lattice: &SubgroupLattice) -> Result<ClassificationVerdict> {
    let bucket = matching_buckets(group, lattice)?
        .into_iter()
        .next()
        .unwrap_or(Bucket::NotCovered);
    Ok(ClassificationVerdict {
        bucket,
        predicted_d: bucket.predicted_d(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn d(g: &Group) -> usize {
        census(g, &Limits::default()).unwrap().d_value
    }

    fn verdict(g: &Group) -> ClassificationVerdict {
        classify_small(g, &SubgroupLattice::compute(g, &Limits::default()).unwrap()).unwrap()
    }

    #[test]
    fn witness_censuses() {
        assert_eq!(d(&cyclic(4).unwrap()), 1);
        assert_eq!(d(&preset("S4").unwrap()), 7);
        assert_eq!(d(&preset("A5").unwrap()), 4);
        assert_eq!(d(&preset("SL2(3)").unwrap()), 4);
        assert_eq!(d(&dicyclic(3).unwrap()), 3);
        assert_eq!(d(&cyclic(1).unwrap()), 0);
    }

    #[test]
    fn relative_counts() {
        let s4 = preset("S4").unwrap();
        let lat = SubgroupLattice::compute(&s4, &Limits::default()).unwrap();
        assert_eq!(relative_census(&s4, &lat, &Subgroup::trivial(&s4)).unwrap(), 0);
        let a4 = structure::derived_subgroup(&s4);
        // C2 (double transpositions), C3 and V4
        assert_eq!(relative_census(&s4, &lat, &a4).unwrap(), 3);
        let dic = dicyclic(3).unwrap();
        let lat = SubgroupLattice::compute(&dic, &Limits::default()).unwrap();
        assert_eq!(relative_census(&dic, &lat, &subgroup::center(&dic)).unwrap(), 0);
    }

    #[test]
    fn formulas() {
        assert_eq!(formula_frob1(2, 1).unwrap(), 2);
        assert_eq!(formula_frob1(1, 2).unwrap(), 3);
        assert_eq!(formula_frob2(7, 3, ModuleKind::SplitDistinct).unwrap(), 5);
        assert_eq!(formula_frob2(7, 3, ModuleKind::Homogeneous).unwrap(), 9);
        assert_eq!(formula_frob2(5, 3, ModuleKind::Irreducible).unwrap(), 3);
        assert_eq!(formula_frob3(7, 3, ModuleKind::SplitDistinct).unwrap(), 43);
        assert_eq!(formula_frob3(2, 7, ModuleKind::Irreducible).unwrap(), 3);
        assert!(matches!(
            formula_frob2(7, 5, ModuleKind::Irreducible),
            Err(Error::NonIntegral(_))
        ));
        assert!(matches!(
            formula_frob2(7, 3, ModuleKind::Irreducible),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn bounds() {
        assert_eq!(product_lower_bound(0, 0), 2);
        assert_eq!(product_lower_bound(1, 0), 4);
        assert_eq!(product_lower_bound(0, 1), 4);
        assert_eq!(
            pgroup_bounds(4).unwrap(),
            Bounds {
                max_class: 2,
                max_derived_length: 2
            }
        );
        assert_eq!(nilpotent_bounds(10, 2).unwrap().max_class, 2);
        assert_eq!(solvable_dl_bound(4).unwrap(), 3);
        assert_eq!(solvable_dl_bound(100).unwrap(), 9 + 19);
        assert!(pgroup_bounds(1).is_err());
        assert!(solvable_dl_bound(2).is_err());
    }

    #[test]
    fn classification_examples() {
        let v = verdict(&cyclic(13).unwrap());
        assert_eq!((v.bucket, v.predicted_d), (Bucket::D0Prime, Some(0)));
        assert_eq!(verdict(&preset("A4").unwrap()).bucket, Bucket::D2A4);
        assert_eq!(verdict(&dicyclic(3).unwrap()).bucket, Bucket::D3CentralExtension);
        assert_eq!(verdict(&preset("A5").unwrap()).bucket, Bucket::D4A5);
        assert_eq!(verdict(&preset("SL2(3)").unwrap()).bucket, Bucket::D4SL23);
        assert_eq!(verdict(&preset("S4").unwrap()).bucket, Bucket::NotCovered);
        assert_eq!(verdict(&frobenius_metacyclic(7, 1, 3, 1).unwrap()).bucket, Bucket::D1FrobeniusPq);
        assert_eq!(verdict(&dihedral(4).unwrap()).predicted_d, None);
    }
}
