//! The verification harness: runs every check over a catalog and collects
//! one record per (check, instance).
//!
//! Records are ordered by check (in [`CHECKS`] order), then by catalog
//! order, so reports are byte-stable.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Display;

use serde::Serialize;

use crate::catalog::{Catalog, GroupSpec, Property, Recipe, Source};
use crate::census::{
    self, formula_for, matching_buckets, nilpotent_bounds, pgroup_bounds, product_lower_bound,
    relative_census, solvable_dl_bound, CensusReport,
};
use crate::error::{Error, Result};
use crate::group::{p_part, prime_factors, Elem, Group, Limits};
use crate::lattice::SubgroupLattice;
use crate::perm::gcd;
use crate::quotient::quotient;
use crate::structure;
use crate::subgroup::{self, Subgroup};

/// Check ids, in report order. `construction` only ever produces failures.
pub const CHECKS: [&str; 19] = [
    "construction",
    "expectations",
    "frobenius-formulas",
    "classification",
    "quotient-lemma",
    "product-formula",
    "center-gap",
    "pgroup-bounds",
    "nilpotent-bounds",
    "solvable-bounds",
    "small-d-metabelian",
    "d4-witnesses",
    "burnside",
    "z-group",
    "frobenius-structure",
    "subnormal",
    "nilpotency-characterization",
    "sylow-normalizer",
    "class-sizes",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSelector(BTreeSet<usize>);

impl CheckSelector {
    pub fn all() -> CheckSelector {
        CheckSelector((0..CHECKS.len()).collect())
    }

    /// `all`, or a comma-separated list of check ids.
    pub fn parse(s: &str) -> Result<CheckSelector> {
        let mut set = BTreeSet::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if item == "all" {
                return Ok(CheckSelector::all());
            }
            let idx = CHECKS
                .iter()
                .position(|&c| c == item)
                .ok_or_else(|| Error::Domain(format!("unknown check `{item}`")))?;
            set.insert(idx);
        }
        if set.is_empty() {
            return Err(Error::Domain("empty check selector".into()));
        }
        // Failures to build are always reported.
        set.insert(0);
        Ok(CheckSelector(set))
    }

    pub fn contains(&self, id: &str) -> bool {
        CHECKS
            .iter()
            .position(|&c| c == id)
            .is_some_and(|i| self.0.contains(&i))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub check_id: String,
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    fn new(records: Vec<VerificationRecord>) -> VerificationReport {
        let failed = records.iter().filter(|r| r.status == Status::Fail).count();
        VerificationReport {
            summary: Summary {
                total: records.len(),
                passed: records.len() - failed,
                failed,
            },
            records,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn count_for(&self, check: &str) -> (usize, usize) {
        let rs: Vec<_> = self.records.iter().filter(|r| r.check_id == check).collect();
        let failed = rs.iter().filter(|r| r.status == Status::Fail).count();
        (rs.len(), failed)
    }

    /// Columns: `check_id,instance,expected,computed,status`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        w.write_record(["check_id", "instance", "expected", "computed", "status"])
            .expect("in-memory CSV write");
        for r in &self.records {
            w.serialize(r).expect("in-memory CSV write");
        }
        String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("UTF-8 CSV")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Everything the per-group checks share.
struct Analysis {
    group: Group,
    lattice: SubgroupLattice,
    census: CensusReport,
    d: u64,
    derived_length: Option<usize>,
    nilpotent: bool,
    nilpotency_class: Option<usize>,
    center: Subgroup,
}

impl Analysis {
    fn new(group: Group, limits: &Limits) -> Result<Analysis> {
        let lattice = SubgroupLattice::compute(&group, limits)?;
        let census = CensusReport::from_lattice(&lattice);
        let derived_length = structure::derived_length(&group);
        let nilpotency_class = structure::nilpotency_class(&group);
        Ok(Analysis {
            d: census.d_value as u64,
            nilpotent: nilpotency_class.is_some(),
            center: subgroup::center(&group),
            group,
            lattice,
            census,
            derived_length,
            nilpotency_class,
        })
    }

    fn order(&self) -> u64 {
        self.group.order() as u64
    }
}

/// What product checks need to know about a factor.
#[derive(Clone, Copy)]
struct FactorInfo {
    d: u64,
    nilpotent: bool,
    order: u64,
}

struct Out {
    per_check: Vec<Vec<VerificationRecord>>,
}

impl Out {
    fn push(&mut self, check: &str, instance: &str, expected: impl Display, computed: impl Display, pass: bool) {
        let idx = CHECKS.iter().position(|&c| c == check).expect("known check id");
        self.per_check[idx].push(VerificationRecord {
            check_id: check.to_string(),
            instance: instance.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
        });
    }

    fn error(&mut self, check: &str, instance: &str, expected: impl Display, err: &Error) {
        self.push(check, instance, expected, format!("error: {err}"), false);
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

pub fn verify(catalog: &Catalog, selector: &CheckSelector, limits: &Limits) -> VerificationReport {
    let mut out = Out {
        per_check: vec![Vec::new(); CHECKS.len()],
    };
    let mut factors: HashMap<String, FactorInfo> = HashMap::new();
    for spec in &catalog.specs {
        let analysis = catalog
            .build(&spec.name, limits)
            .and_then(|g| Analysis::new(g, limits));
        let a = match analysis {
            Ok(a) => a,
            Err(e) => {
                out.error("construction", &spec.name, "group and lattice", &e);
                continue;
            }
        };
        factors.insert(
            spec.name.clone(),
            FactorInfo {
                d: a.d,
                nilpotent: a.nilpotent,
                order: a.order(),
            },
        );
        run_group_checks(&mut out, selector, spec, &a, &factors);
    }
    VerificationReport::new(out.per_check.into_iter().flatten().collect())
}

fn run_group_checks(
    out: &mut Out,
    sel: &CheckSelector,
    spec: &GroupSpec,
    a: &Analysis,
    factors: &HashMap<String, FactorInfo>,
) {
    let name = spec.name.as_str();
    type Check = fn(&mut Out, &str, &GroupSpec, &Analysis, &HashMap<String, FactorInfo>) -> Result<()>;
    let checks: [(&str, Check); 18] = [
        ("expectations", |o, n, s, a, _| check_expectations(o, n, s, a)),
        ("frobenius-formulas", |o, n, s, a, _| check_frobenius_formula(o, n, s, a)),
        ("classification", |o, n, _, a, _| check_classification(o, n, a)),
        ("quotient-lemma", |o, n, _, a, _| check_quotient_lemma(o, n, a)),
        ("product-formula", check_product),
        ("center-gap", |o, n, _, a, _| check_center_gap(o, n, a)),
        ("pgroup-bounds", |o, n, _, a, _| check_pgroup_bounds(o, n, a)),
        ("nilpotent-bounds", |o, n, _, a, _| check_nilpotent_bounds(o, n, a)),
        ("solvable-bounds", |o, n, _, a, _| check_solvable_bounds(o, n, a)),
        ("small-d-metabelian", |o, n, _, a, _| check_small_d(o, n, a)),
        ("d4-witnesses", |o, n, _, a, _| check_d4(o, n, a)),
        ("burnside", |o, n, _, a, _| check_burnside(o, n, a)),
        ("z-group", |o, n, _, a, _| check_z_group(o, n, a)),
        ("frobenius-structure", |o, n, _, a, _| check_frobenius_structure(o, n, a)),
        ("subnormal", |o, n, _, a, _| check_subnormal(o, n, a)),
        ("nilpotency-characterization", |o, n, _, a, _| check_nilpotency(o, n, a)),
        ("sylow-normalizer", |o, n, _, a, _| check_sylow_normalizer(o, n, a)),
        ("class-sizes", |o, n, _, a, _| check_class_sizes(o, n, a)),
    ];
    for (id, f) in checks {
        if sel.contains(id) {
            if let Err(e) = f(out, name, spec, a, factors) {
                out.error(id, name, "check to complete", &e);
            }
        }
    }
}

fn computed_property(a: &Analysis, p: Property) -> String {
    match p {
        Property::D => a.d.to_string(),
        Property::Order => a.order().to_string(),
        Property::DerivedLength => opt(a.derived_length),
        Property::NilpotencyClass => opt(a.nilpotency_class),
        Property::Abelian => a.group.is_abelian().to_string(),
        Property::CenterOrder => a.center.order().to_string(),
    }
}

fn check_expectations(out: &mut Out, name: &str, spec: &GroupSpec, a: &Analysis) -> Result<()> {
    for (&prop, value) in &spec.expected {
        let computed = computed_property(a, prop);
        let pass = computed == *value;
        out.push("expectations", &format!("{name} {}", prop.name()), value, computed, pass);
    }
    Ok(())
}

fn check_frobenius_formula(out: &mut Out, name: &str, spec: &GroupSpec, a: &Analysis) -> Result<()> {
    let Source::Recipe(Recipe::Frobenius(fs)) = &spec.source else {
        return Ok(());
    };
    let d = formula_for(fs)?;
    let decomposition = structure::frobenius_decomposition(&a.group, &a.lattice)?;
    let (k, h) = decomposition
        .map(|f| (f.kernel_order as u64, f.complement_order as u64))
        .unwrap_or((0, 0));
    let expected = format!("D={d} kernel={} complement={}", fs.kernel_order(), fs.complement_order());
    let computed = format!("D={} kernel={k} complement={h}", a.d);
    let pass = expected == computed;
    out.push("frobenius-formulas", name, expected, computed, pass);
    Ok(())
}

fn check_classification(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let buckets = matching_buckets(&a.group, &a.lattice)?;
    let small: Vec<_> = buckets
        .iter()
        .filter(|b| b.predicted_d().is_some_and(|d| d <= 3))
        .collect();
    let labels: Vec<String> = buckets
        .iter()
        .map(|b| format!("{}({})", b.label(), b.predicted_d().map_or("-".into(), |d| d.to_string())))
        .collect();
    let computed = format!(
        "D={} buckets=[{}]",
        a.d,
        if labels.is_empty() { "not-covered".to_string() } else { labels.join(" ") }
    );
    // Every matched bucket must predict the computed value; exactly one
    // D0–D3 bucket must match iff D ≤ 3.
    let consistent = buckets.iter().all(|b| b.predicted_d() == Some(a.d));
    let (expected, pass) = if a.d <= 3 {
        (format!("one D{} bucket", a.d), small.len() == 1 && consistent)
    } else {
        ("no D0-D3 bucket".to_string(), small.is_empty() && consistent)
    };
    out.push("classification", name, expected, computed, pass);
    Ok(())
}

fn check_quotient_lemma(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let n = a.group.order();
    let normals: Vec<&Subgroup> = a
        .lattice
        .normal_subgroups()
        .filter(|s| s.order() > 1 && s.order() < n)
        .collect();
    if normals.is_empty() {
        return Ok(());
    }
    let mut violations = Vec::new();
    for normal in &normals {
        let q = quotient(&a.group, normal)?;
        let dq = census::census(&q.quotient, &Limits::default())?.d_value as u64;
        let rel = relative_census(&a.group, &a.lattice, normal)? as u64;
        let m = a.d - rel;
        if dq + 1 > a.d || dq + 1 > m {
            violations.push(format!("|N|={} D(G/N)={dq} m={m}", normal.order()));
        }
    }
    let computed = if violations.is_empty() {
        format!("{} normal subgroups ok", normals.len())
    } else {
        violations.join("; ")
    };
    out.push(
        "quotient-lemma",
        name,
        format!("D(G/N) <= min(D(G), D(G)-D_G(N)) - 1 over {} N", normals.len()),
        computed,
        violations.is_empty(),
    );
    Ok(())
}

fn check_product(
    out: &mut Out,
    name: &str,
    spec: &GroupSpec,
    a: &Analysis,
    factors: &HashMap<String, FactorInfo>,
) -> Result<()> {
    let Source::Recipe(Recipe::DirectProduct { a: h, b: k }) = &spec.source else {
        return Ok(());
    };
    let (Some(h), Some(k)) = (factors.get(h), factors.get(k)) else {
        return Err(Error::UnresolvedReference(format!("factor of {name}")));
    };
    let bound = product_lower_bound(h.d, k.d);
    let equality = h.nilpotent && k.nilpotent && gcd(h.order, k.order) == 1;
    let expected = if equality {
        format!("= {bound}")
    } else {
        format!("> {bound}")
    };
    let pass = if equality { a.d == bound } else { a.d > bound };
    out.push("product-formula", name, expected, a.d, pass);
    Ok(())
}

/// `|G| = pq²` with `q | p − 1`, `|Z| = q`, a normal subgroup of order `p`
/// and cyclic Sylow `q`-subgroups.
fn central_extension_shape(a: &Analysis) -> bool {
    let n = a.order();
    let factors = prime_factors(n);
    let [(x, ex), (y, ey)] = factors.as_slice() else {
        return false;
    };
    let (p, q) = match (ex, ey) {
        (1, 2) => (*x, *y),
        (2, 1) => (*y, *x),
        _ => return false,
    };
    (p - 1) % q == 0
        && a.center.order() as u64 == q
        && (0..n as Elem).any(|e| a.group.order_of(e) == q * q)
        && a.lattice.normal_subgroups().any(|s| s.order() as u64 == p)
}

fn check_center_gap(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    if a.group.is_abelian() || a.center.order() == 1 {
        return Ok(());
    }
    let z = a.center.to_group(&a.group);
    let dz = census::census(&z, &Limits::default())?.d_value as u64;
    let gap = a.d.checked_sub(dz);
    let (expected, pass) = match gap {
        Some(g) if g > 3 => (">= 3".to_string(), true),
        Some(3) => ("= 3 with C_p x| C_q2 shape".to_string(), central_extension_shape(a)),
        _ => (">= 3".to_string(), false),
    };
    let computed = format!("D(G)={} D(Z)={dz}", a.d);
    out.push("center-gap", name, expected, computed, pass);
    Ok(())
}

fn is_p_group(n: u64) -> Option<(u64, u32)> {
    match prime_factors(n).as_slice() {
        [f] => Some(*f),
        _ => None,
    }
}

fn check_pgroup_bounds(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let Some((_, e)) = is_p_group(a.order()) else {
        return Ok(());
    };
    let cyclic = Subgroup::whole(&a.group).is_cyclic(&a.group);
    let class = a.nilpotency_class.unwrap_or(usize::MAX) as u64;
    let dl = a.derived_length.unwrap_or(usize::MAX) as u64;
    let mut expected = Vec::new();
    let mut pass = true;
    if a.d > 1 {
        let b = pgroup_bounds(a.d)?;
        expected.push(format!("class<={} dl<={}", b.max_class, b.max_derived_length));
        pass &= class <= b.max_class && dl <= b.max_derived_length;
    }
    if !cyclic && e >= 2 {
        // order p^{m+1}, noncyclic: at least 2m classes
        let m = (e - 1) as u64;
        expected.push(format!("D>={}", 2 * m));
        pass &= a.d >= 2 * m;
    }
    if expected.is_empty() {
        return Ok(());
    }
    let computed = format!("D={} class={class} dl={dl}", a.d);
    out.push("pgroup-bounds", name, expected.join(" "), computed, pass);
    Ok(())
}

fn check_nilpotent_bounds(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    if !a.nilpotent || Subgroup::whole(&a.group).is_cyclic(&a.group) {
        return Ok(());
    }
    let k = prime_factors(a.order()).len() as u32;
    let b = nilpotent_bounds(a.d, k)?;
    let class = a.nilpotency_class.unwrap_or(usize::MAX) as u64;
    let dl = a.derived_length.unwrap_or(usize::MAX) as u64;
    out.push(
        "nilpotent-bounds",
        name,
        format!("k={k} class<={} dl<={}", b.max_class, b.max_derived_length),
        format!("D={} class={class} dl={dl}", a.d),
        class <= b.max_class && dl <= b.max_derived_length,
    );
    Ok(())
}

fn check_solvable_bounds(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let Some(dl) = a.derived_length.filter(|_| a.d >= 3) else {
        return Ok(());
    };
    let bound = solvable_dl_bound(a.d)?;
    let length = structure::composition_length(&a.group, &a.lattice)? as u64;
    out.push(
        "solvable-bounds",
        name,
        format!("dl<={bound} composition-length<={}", a.d + 1),
        format!("dl={dl} composition-length={length}"),
        dl as u64 <= bound && length <= a.d + 1,
    );
    Ok(())
}

fn check_small_d(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    if a.d > 3 {
        return Ok(());
    }
    out.push(
        "small-d-metabelian",
        name,
        "solvable dl<=2",
        format!("D={} dl={}", a.d, opt(a.derived_length)),
        a.derived_length.is_some_and(|dl| dl <= 2),
    );
    Ok(())
}

fn check_d4(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    if a.d != 4 {
        return Ok(());
    }
    let (expected, pass) = match a.derived_length {
        None => ("A5 (order 60, nonsolvable)", a.order() == 60),
        Some(dl) if dl > 2 => (
            "SL(2,3) (order 24, dl 3, |Z|=2)",
            a.order() == 24 && dl == 3 && a.center.order() == 2,
        ),
        Some(_) => ("solvable dl<=2", true),
    };
    let computed = format!(
        "order={} dl={} |Z|={}",
        a.order(),
        opt(a.derived_length),
        a.center.order()
    );
    out.push("d4-witnesses", name, expected, computed, pass);
    Ok(())
}

fn check_burnside(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let mut applies = Vec::new();
    let mut pass = true;
    for p in a.group.prime_divisors() {
        let sylow = structure::sylow_subgroup(&a.group, &a.lattice, p)?;
        let normalizer = subgroup::normalizer(&a.group, &sylow)?;
        // P ≤ Z(N(P)) iff every element of N(P) centralizes P.
        let central = normalizer.elements().all(|x| {
            sylow
                .generators()
                .iter()
                .all(|&y| a.group.mul(x, y) == a.group.mul(y, x))
        });
        if central {
            let complement = structure::has_normal_p_complement(&a.group, &a.lattice, p)?;
            applies.push(format!("p={p}:{}", if complement { "complement" } else { "none" }));
            pass &= complement;
        }
    }
    if applies.is_empty() {
        return Ok(());
    }
    out.push(
        "burnside",
        name,
        "normal p-complement whenever P <= Z(N(P))",
        applies.join(" "),
        pass,
    );
    Ok(())
}

fn check_z_group(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    if !structure::is_z_group(&a.group) {
        return Ok(());
    }
    let derived = structure::derived_subgroup(&a.group);
    let q = quotient(&a.group, &derived)?;
    let abelianization_cyclic = Subgroup::whole(&q.quotient).is_cyclic(&q.quotient);
    let derived_cyclic = derived.is_cyclic(&a.group);
    let coprime = gcd(derived.order() as u64, q.quotient.order() as u64) == 1;
    out.push(
        "z-group",
        name,
        "G' cyclic, G/G' cyclic, coprime",
        format!(
            "|G'|={} cyclic={derived_cyclic} |G/G'|={} cyclic={abelianization_cyclic}",
            derived.order(),
            q.quotient.order()
        ),
        abelianization_cyclic && derived_cyclic && coprime,
    );
    Ok(())
}

/// Sylow subgroups of `h` all cyclic or generalized quaternion, i.e. each
/// has a unique subgroup of prime order.
fn sylows_cyclic_or_quaternion(h: &Group) -> Result<bool> {
    let lattice = SubgroupLattice::compute(h, &Limits::default())?;
    for p in h.prime_divisors() {
        let s = structure::sylow_subgroup(h, &lattice, p)?;
        let of_order_p = s.elements().filter(|&e| h.order_of(e) == p).count() as u64;
        if of_order_p != p - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_frobenius_structure(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let Some(f) = structure::frobenius_decomposition(&a.group, &a.lattice)? else {
        return Ok(());
    };
    let kernel = f.kernel.to_group(&a.group);
    let complement = f.complement.to_group(&a.group);
    let nilpotent = structure::is_nilpotent(&kernel);
    let coprime = gcd(f.kernel_order as u64, f.complement_order as u64) == 1;
    let product = f.kernel_order * f.complement_order == a.group.order();
    let normal = subgroup::is_normal(&a.group, &f.kernel)?;
    let sylows = sylows_cyclic_or_quaternion(&complement)?;
    out.push(
        "frobenius-structure",
        name,
        "kernel normal nilpotent, coprime to complement, |K||H|=|G|, complement Sylows cyclic/quaternion",
        format!(
            "|K|={} |H|={} nilpotent={nilpotent} normal={normal} sylows={sylows}",
            f.kernel_order, f.complement_order
        ),
        nilpotent && coprime && product && normal && sylows,
    );
    Ok(())
}

/// Only self-normalizing proper classes can violate "subnormal ⇒ not
/// self-normalizing", so only they are tested.
fn check_subnormal(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let n = a.group.order();
    let mut tested = 0;
    let mut bad = Vec::new();
    for c in a.lattice.classes() {
        if c.order() == 1 || c.order() == n || !c.self_normalizing {
            continue;
        }
        tested += 1;
        if structure::is_subnormal(&a.group, &c.representative)? {
            bad.push(c.order().to_string());
        }
    }
    let computed = if bad.is_empty() {
        format!("{tested} self-normalizing classes, none subnormal")
    } else {
        format!("subnormal self-normalizing of order {}", bad.join(","))
    };
    out.push(
        "subnormal",
        name,
        "no proper subnormal subgroup is self-normalizing",
        computed,
        bad.is_empty(),
    );
    Ok(())
}

fn check_nilpotency(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let n = a.group.order();
    let all_proper_non_sn = a
        .lattice
        .classes()
        .iter()
        .all(|c| c.order() == n || !c.self_normalizing);
    out.push(
        "nilpotency-characterization",
        name,
        format!("nilpotent={}", a.nilpotent),
        format!("no proper self-normalizing={all_proper_non_sn}"),
        a.nilpotent == all_proper_non_sn,
    );
    Ok(())
}

fn check_sylow_normalizer(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let mut pass = true;
    let mut parts = Vec::new();
    for p in a.group.prime_divisors() {
        let sylow = structure::sylow_subgroup(&a.group, &a.lattice, p)?;
        let np = subgroup::normalizer(&a.group, &sylow)?;
        let nnp = subgroup::normalizer(&a.group, &np)?;
        let ok = sylow.order() as u64 == p_part(a.order(), p) && nnp == np;
        parts.push(format!("p={p}:|N(P)|={}", np.order()));
        pass &= ok;
    }
    if parts.is_empty() {
        return Ok(());
    }
    out.push(
        "sylow-normalizer",
        name,
        "N(P) self-normalizing",
        parts.join(" "),
        pass,
    );
    Ok(())
}

fn check_class_sizes(out: &mut Out, name: &str, a: &Analysis) -> Result<()> {
    let n = a.group.order();
    let classes = a.lattice.classes();
    let sum: usize = classes.iter().map(|c| c.class_size).sum();
    let orbit_stabilizer = classes.iter().all(|c| c.class_size * c.normalizer_order == n);
    let lagrange = classes.iter().all(|c| n % c.order() == 0);
    let flags = classes
        .iter()
        .all(|c| c.self_normalizing == (c.normalizer_order == c.order()) && c.is_normal == (c.class_size == 1));
    let census_ok = a.census.d_value
        == classes
            .iter()
            .filter(|c| c.order() > 1 && c.normalizer_order > c.order())
            .count();
    out.push(
        "class-sizes",
        name,
        format!("sum of class sizes = {}", a.lattice.total_subgroups()),
        format!("{sum} over {} classes", classes.len()),
        sum == a.lattice.total_subgroups() && orbit_stabilizer && lagrange && flags && census_ok,
    );
    Ok(())
}

/// One line of the catalog census table. Computed fields are empty when the
/// entry could not be built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub order: Option<usize>,
    pub d: Option<usize>,
    pub subgroup_classes: Option<usize>,
    pub subgroups: Option<usize>,
    pub abelian: Option<bool>,
    pub nilpotency_class: Option<String>,
    pub derived_length: Option<String>,
    pub center_order: Option<usize>,
    pub bucket: Option<String>,
    pub error: Option<String>,
}

pub const TABLE_COLUMNS: [&str; 11] = [
    "name",
    "order",
    "d",
    "subgroup_classes",
    "subgroups",
    "abelian",
    "nilpotency_class",
    "derived_length",
    "center_order",
    "bucket",
    "error",
];

fn table_row(catalog: &Catalog, spec: &GroupSpec, limits: &Limits) -> Result<TableRow> {
    let a = Analysis::new(catalog.build(&spec.name, limits)?, limits)?;
    let verdict = census::classify_small(&a.group, &a.lattice)?;
    Ok(TableRow {
        name: spec.name.clone(),
        order: Some(a.group.order()),
        d: Some(a.census.d_value),
        subgroup_classes: Some(a.census.total_subgroup_classes),
        subgroups: Some(a.census.total_subgroups),
        abelian: Some(a.group.is_abelian()),
        nilpotency_class: Some(opt(a.nilpotency_class)),
        derived_length: Some(opt(a.derived_length)),
        center_order: Some(a.center.order()),
        bucket: Some(verdict.bucket.label().to_string()),
        error: None,
    })
}

/// Census of every catalog entry, in catalog order.
pub fn census_table(catalog: &Catalog, limits: &Limits) -> Vec<TableRow> {
    catalog
        .specs
        .iter()
        .map(|spec| {
            table_row(catalog, spec, limits).unwrap_or_else(|e| TableRow {
                name: spec.name.clone(),
                order: None,
                d: None,
                subgroup_classes: None,
                subgroups: None,
                abelian: None,
                nilpotency_class: None,
                derived_length: None,
                center_order: None,
                bucket: None,
                error: Some(e.to_string()),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_catalog;

    #[test]
    fn selector_parsing() {
        assert_eq!(CheckSelector::parse("all").unwrap(), CheckSelector::all());
        let s = CheckSelector::parse("burnside, z-group").unwrap();
        assert!(s.contains("burnside") && s.contains("z-group") && s.contains("construction"));
        assert!(!s.contains("classification"));
        assert!(CheckSelector::parse("nonsense").is_err());
        assert!(CheckSelector::parse("").is_err());
    }

    #[test]
    fn small_catalog_passes() {
        let text = "group S3 degree 3\ngen (1 2)\ngen (1 2 3)\nexpect d=1 order=6\n\n\
                    group C2 recipe cyclic n=2\n\ngroup C3 recipe cyclic n=3\n\n\
                    group C6 recipe direct_product a=C2 b=C3\nexpect d=2\n\n\
                    group C2xS3 recipe direct_product a=C2 b=S3\n\n\
                    group Dic3 recipe dicyclic n=3\nexpect d=3 center-order=2\n";
        let catalog = parse_catalog(text, "inline").unwrap();
        let report = verify(&catalog, &CheckSelector::all(), &Limits::default());
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(report.count_for("product-formula"), (2, 0));
        assert_eq!(report.count_for("center-gap").0, 2);
        assert!(report.to_csv().starts_with("check_id,instance,expected,computed,status\n"));
        let table = census_table(&catalog, &Limits::default());
        assert_eq!(table.len(), 6);
        assert_eq!(table[0].d, Some(1));
        assert_eq!(table[5].bucket.as_deref(), Some("D3-8"));
    }

    #[test]
    fn wrong_expectation_and_bad_recipe_fail() {
        let text = "group C4 recipe cyclic n=4\nexpect d=2\n\n\
                    group Bad recipe frobenius_metacyclic p=7 n=1 q=5 m=1\n";
        let catalog = parse_catalog(text, "inline").unwrap();
        let report = verify(&catalog, &CheckSelector::parse("expectations").unwrap(), &Limits::default());
        assert_eq!(report.summary.failed, 2);
        assert_eq!(report.count_for("construction"), (1, 1));
        let r = report.records.iter().find(|r| r.check_id == "expectations").unwrap();
        assert_eq!((r.expected.as_str(), r.computed.as_str()), ("2", "1"));
    }
}
