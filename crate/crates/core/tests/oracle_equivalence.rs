mod support;

use dcensus::catalog::builtin_catalog;
use dcensus::{Limits, SubgroupLattice};
use support::oracle::{naive_counts, OracleCounts};

/// Values produced by the brute-force oracle, frozen so that a regression in
/// either implementation shows up as a diff against a known table.
const FROZEN: [(&str, OracleCounts); 12] = [
    ("C12", OracleCounts { subgroups: 6, classes: 6, d: 4 }),
    ("V4", OracleCounts { subgroups: 5, classes: 5, d: 3 }),
    ("C4xC2", OracleCounts { subgroups: 8, classes: 8, d: 6 }),
    ("C2^3", OracleCounts { subgroups: 16, classes: 16, d: 14 }),
    ("D4", OracleCounts { subgroups: 10, classes: 8, d: 6 }),
    ("Q8", OracleCounts { subgroups: 6, classes: 6, d: 4 }),
    ("C3^2", OracleCounts { subgroups: 6, classes: 6, d: 4 }),
    ("C6xC2", OracleCounts { subgroups: 10, classes: 10, d: 8 }),
    ("D6", OracleCounts { subgroups: 16, classes: 10, d: 7 }),
    ("A4", OracleCounts { subgroups: 10, classes: 5, d: 2 }),
    ("Dic3", OracleCounts { subgroups: 8, classes: 6, d: 3 }),
    ("S4", OracleCounts { subgroups: 30, classes: 11, d: 7 }),
];

#[test]
fn lattice_matches_naive_oracle_up_to_order_24() {
    let catalog = builtin_catalog();
    let limits = Limits::default();
    let mut compared = 0;
    for spec in &catalog.specs {
        let g = catalog.build(&spec.name, &limits).unwrap();
        if g.order() > 24 {
            continue;
        }
        let lattice = SubgroupLattice::compute(&g, &limits).unwrap();
        let oracle = naive_counts(&g);
        let d = lattice
            .classes()
            .iter()
            .filter(|c| c.order() > 1 && !c.self_normalizing)
            .count();
        let fast = OracleCounts {
            subgroups: lattice.total_subgroups(),
            classes: lattice.classes().len(),
            d,
        };
        println!("{}: {:?}", spec.name, oracle);
        assert_eq!(fast, oracle, "{}", spec.name);
        compared += 1;
    }
    assert!(compared >= 40, "only {compared} groups of order <= 24");
}

#[test]
fn oracle_matches_frozen_table() {
    let catalog = builtin_catalog();
    for (name, expected) in FROZEN {
        let g = catalog.build(name, &Limits::default()).unwrap();
        assert_eq!(naive_counts(&g), expected, "{name}");
    }
}
