//! Values stated in the literature, checked end to end.

use dcensus::catalog::{builtin_catalog, parse_catalog, Property, SMALL_GROUPS};
use dcensus::census::{
    census, classify_small, formula_frob1, formula_frob2, formula_frob3, nilpotent_bounds,
    pgroup_bounds, product_lower_bound, relative_census, solvable_dl_bound, Bucket,
};
use dcensus::constructors::{self, central_extension_example, ModuleKind};
use dcensus::structure;
use dcensus::subgroup::{self, Subgroup};
use dcensus::{Error, Group, Limits, SubgroupLattice};

fn d(g: &Group) -> usize {
    census(g, &Limits::default()).unwrap().d_value
}

fn verdict(g: &Group) -> Bucket {
    classify_small(g, &SubgroupLattice::compute(g, &Limits::default()).unwrap())
        .unwrap()
        .bucket
}

#[test]
fn witness_values() {
    let p = |n| constructors::preset(n).unwrap();
    assert_eq!(d(&p("A5")), 4);
    assert_eq!(d(&p("SL2(3)")), 4);
    assert_eq!(d(&p("S4")), 7);
    assert_eq!(d(&p("A6")), 11);
    assert_eq!(d(&p("PSL(2,7)")), 8);
    assert_eq!(d(&p("PSL(2,8)")), 6);
    assert_eq!(d(&constructors::cyclic(4).unwrap()), 1);
    for p in [2usize, 3, 5] {
        for n in 0..=4u32 {
            let g = constructors::cyclic(p.pow(n + 1)).unwrap();
            assert_eq!(d(&g), n as usize, "C_{}", p.pow(n + 1));
        }
    }
    let dic = constructors::dicyclic(3).unwrap();
    assert_eq!(d(&dic), 3);
    assert_eq!(subgroup::center(&dic).order(), 2);
}

#[test]
fn relative_census_examples() {
    let limits = Limits::default();
    let dic = constructors::dicyclic(3).unwrap();
    let lattice = SubgroupLattice::compute(&dic, &limits).unwrap();
    let z = subgroup::center(&dic);
    assert_eq!(relative_census(&dic, &lattice, &z).unwrap(), 0);
    assert_eq!(relative_census(&dic, &lattice, &Subgroup::trivial(&dic)).unwrap(), 0);
    // A central subgroup: D_G(N) = D(N).
    let c = constructors::cyclic(12).unwrap();
    let lattice = SubgroupLattice::compute(&c, &limits).unwrap();
    let n = lattice.classes().iter().find(|k| k.order() == 6).unwrap().representative.clone();
    assert_eq!(relative_census(&c, &lattice, &n).unwrap(), d(&n.to_group(&c)));
}

#[test]
fn formula_examples() {
    assert_eq!(formula_frob1(2, 1).unwrap(), 2);
    assert_eq!(formula_frob2(7, 3, ModuleKind::SplitDistinct).unwrap(), 5);
    assert_eq!(formula_frob2(7, 3, ModuleKind::Homogeneous).unwrap(), 9);
    assert_eq!(formula_frob3(7, 3, ModuleKind::SplitDistinct).unwrap(), 43);
    assert!(matches!(formula_frob2(7, 3, ModuleKind::Irreducible), Err(Error::Domain(_))));
    assert_eq!(product_lower_bound(0, 0), 2);
    assert_eq!(product_lower_bound(1, 0), 4);
    assert_eq!(product_lower_bound(0, 1), 4);
    let b = pgroup_bounds(4).unwrap();
    assert_eq!((b.max_class, b.max_derived_length), (2, 2));
    assert_eq!(nilpotent_bounds(10, 2).unwrap().max_class, 2);
    assert_eq!(solvable_dl_bound(4).unwrap(), 3);
}

#[test]
fn classification_examples() {
    assert_eq!(verdict(&constructors::cyclic(13).unwrap()), Bucket::D0Prime);
    assert_eq!(verdict(&constructors::preset("A4").unwrap()), Bucket::D2A4);
    assert_eq!(verdict(&constructors::dicyclic(3).unwrap()), Bucket::D3CentralExtension);
    let g = central_extension_example(7, 3).unwrap();
    assert_eq!((g.order(), d(&g)), (63, 3));
    assert_eq!(verdict(&g), Bucket::D3CentralExtension);
}

#[test]
fn psl25_is_a5() {
    let g = constructors::preset("PSL(2,5)").unwrap();
    let a5 = constructors::preset("A5").unwrap();
    assert_eq!(g.order(), 60);
    assert!(!structure::is_solvable(&g));
    assert_eq!(d(&g), d(&a5));
    assert_eq!(verdict(&g), Bucket::D4A5);
}

#[test]
fn builtin_catalog_examples() {
    let catalog = builtin_catalog();
    let order = |name: &str| catalog.get(name).unwrap().expected[&Property::Order].parse::<usize>().unwrap();
    let small: Vec<&str> = SMALL_GROUPS.to_vec();
    assert_eq!(small.len(), 28);
    let primes: Vec<&str> = small
        .iter()
        .copied()
        .filter(|&n| dcensus::group::is_prime(order(n) as u64))
        .collect();
    assert_eq!(primes, ["C2", "C3", "C5", "C7", "C11", "C13"]);
    for p in &primes {
        assert_eq!(catalog.get(p).unwrap().expected[&Property::D], "0");
    }
    let mut eight: Vec<&str> = catalog
        .specs
        .iter()
        .filter(|s| s.expected.get(&Property::Order).map(String::as_str) == Some("8"))
        .map(|s| s.name.as_str())
        .collect();
    eight.sort();
    assert_eq!(eight, ["C2^3", "C4xC2", "C8", "D4", "Q8"]);
    // Declared orders are right for every small group.
    for name in small {
        assert_eq!(catalog.build(name, &Limits::default()).unwrap().order(), order(name), "{name}");
    }
}

#[test]
fn catalog_grammar_examples() {
    let c = parse_catalog("group S3 degree 3\ngen (1 2)\ngen (1 2 3)\n", "inline").unwrap();
    assert_eq!(c.build("S3", &Limits::default()).unwrap().order(), 6);
    let c = parse_catalog("group F21 recipe frobenius_metacyclic p=7 n=1 q=3 m=1\nexpect d=1\n", "inline").unwrap();
    let g = c.build("F21", &Limits::default()).unwrap();
    assert_eq!(d(&g).to_string(), c.specs[0].expected[&Property::D]);
    assert!(parse_catalog("", "inline").unwrap().specs.is_empty());
}
