//! Group catalogs: a line-oriented text format and the built-in list.
//!
//! ```text
//! # comment
//! group S3 degree 3
//! gen (1 2)
//! gen (1 2 3)
//! expect d=1 order=6
//!
//! group F21 recipe frobenius_metacyclic p=7 n=1 q=3 m=1
//! expect d=1
//! ```
//!
//! Recipes may refer to earlier groups by name (`direct_product a=C2 b=S3`).

use std::collections::BTreeMap;
use std::fmt;

use crate::census::formula_for;
use crate::constructors::{self, frobenius_grid, FrobeniusSpec, ModuleKind};
use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic { n: usize },
    Dihedral { n: usize },
    Dicyclic { n: usize },
    Sym { n: usize },
    Alt { n: usize },
    DirectProduct { a: String, b: String },
    Frobenius(FrobeniusSpec),
    CentralExtension { p: u64, q: u64 },
    Psl2 { q: u64 },
    Preset { name: String },
}

pub const CONSTRUCTORS: [&str; 11] = [
    "cyclic",
    "dihedral",
    "dicyclic",
    "sym",
    "alt",
    "direct_product",
    "frobenius_metacyclic",
    "frobenius_elem_abelian",
    "central_extension",
    "psl2",
    "preset",
];

impl Recipe {
    /// Parses `ctor k=v ...`.
    pub fn parse(text: &str) -> Result<Recipe> {
        let mut tokens = text.split_whitespace();
        let ctor = tokens
            .next()
            .ok_or_else(|| Error::Domain("empty recipe".into()))?;
        let mut params: BTreeMap<&str, &str> = BTreeMap::new();
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Domain(format!("expected key=value, got `{tok}`")))?;
            if params.insert(k, v).is_some() {
                return Err(Error::Domain(format!("parameter `{k}` given twice")));
            }
        }
        let expected: &[&str] = match ctor {
            "cyclic" | "dihedral" | "dicyclic" | "sym" | "alt" => &["n"],
            "direct_product" => &["a", "b"],
            "frobenius_metacyclic" => &["m", "n", "p", "q"],
            "frobenius_elem_abelian" => &["k", "module", "p", "q"],
            "central_extension" => &["p", "q"],
            "psl2" => &["q"],
            "preset" => &["name"],
            _ => return Err(Error::UnknownConstructor(ctor.to_string())),
        };
        let given: Vec<&str> = params.keys().copied().collect();
        if given != expected {
            return Err(Error::Domain(format!(
                "`{ctor}` takes parameters {}, got {}",
                expected.join(","),
                given.join(",")
            )));
        }
        fn num<T: std::str::FromStr>(params: &BTreeMap<&str, &str>, k: &str) -> Result<T> {
            params[k]
                .parse()
                .map_err(|_| Error::Domain(format!("parameter {k}={} is not a number", params[k])))
        }
        Ok(match ctor {
            "cyclic" => Recipe::Cyclic { n: num(&params, "n")? },
            "dihedral" => Recipe::Dihedral { n: num(&params, "n")? },
            "dicyclic" => Recipe::Dicyclic { n: num(&params, "n")? },
            "sym" => Recipe::Sym { n: num(&params, "n")? },
            "alt" => Recipe::Alt { n: num(&params, "n")? },
            "direct_product" => Recipe::DirectProduct {
                a: params["a"].to_string(),
                b: params["b"].to_string(),
            },
            "frobenius_metacyclic" => Recipe::Frobenius(FrobeniusSpec::Metacyclic {
                p: num(&params, "p")?,
                n: num(&params, "n")?,
                q: num(&params, "q")?,
                m: num(&params, "m")?,
            }),
            "frobenius_elem_abelian" => Recipe::Frobenius(FrobeniusSpec::ElementaryAbelian {
                p: num(&params, "p")?,
                k: num(&params, "k")?,
                q: num(&params, "q")?,
                module: ModuleKind::parse(params["module"])?,
            }),
            "central_extension" => Recipe::CentralExtension {
                p: num(&params, "p")?,
                q: num(&params, "q")?,
            },
            "psl2" => Recipe::Psl2 { q: num(&params, "q")? },
            _ => Recipe::Preset {
                name: params["name"].to_string(),
            },
        })
    }

    /// Names of other catalog entries this recipe needs.
    pub fn references(&self) -> Vec<&str> {
        match self {
            Recipe::DirectProduct { a, b } => vec![a, b],
            _ => Vec::new(),
        }
    }

    /// Builds the group; `resolve` supplies referenced groups.
    pub fn build(&self, resolve: &mut dyn FnMut(&str) -> Result<Group>) -> Result<Group> {
        match self {
            Recipe::Cyclic { n } => constructors::cyclic(*n),
            Recipe::Dihedral { n } => constructors::dihedral(*n),
            Recipe::Dicyclic { n } => constructors::dicyclic(*n),
            Recipe::Sym { n } => constructors::sym(*n),
            Recipe::Alt { n } => constructors::alt(*n),
            Recipe::DirectProduct { a, b } => {
                let (a, b) = (resolve(a)?, resolve(b)?);
                constructors::direct_product(&a, &b)
            }
            Recipe::Frobenius(spec) => spec.build(),
            Recipe::CentralExtension { p, q } => constructors::central_extension_example(*p, *q),
            Recipe::Psl2 { q } => constructors::psl2(*q),
            Recipe::Preset { name } => constructors::preset(name),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic { n } => write!(f, "cyclic n={n}"),
            Recipe::Dihedral { n } => write!(f, "dihedral n={n}"),
            Recipe::Dicyclic { n } => write!(f, "dicyclic n={n}"),
            Recipe::Sym { n } => write!(f, "sym n={n}"),
            Recipe::Alt { n } => write!(f, "alt n={n}"),
            Recipe::DirectProduct { a, b } => write!(f, "direct_product a={a} b={b}"),
            Recipe::Frobenius(spec) => f.write_str(&spec.label()),
            Recipe::CentralExtension { p, q } => write!(f, "central_extension p={p} q={q}"),
            Recipe::Psl2 { q } => write!(f, "psl2 q={q}"),
            Recipe::Preset { name } => write!(f, "preset name={name}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Recipe(Recipe),
    Explicit {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

/// Properties an entry may declare; values are compared as text
/// (`none` for an undefined derived length or class).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    D,
    Order,
    DerivedLength,
    NilpotencyClass,
    Abelian,
    CenterOrder,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::D,
        Property::Order,
        Property::DerivedLength,
        Property::NilpotencyClass,
        Property::Abelian,
        Property::CenterOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::D => "d",
            Property::Order => "order",
            Property::DerivedLength => "derived-length",
            Property::NilpotencyClass => "nilpotency-class",
            Property::Abelian => "abelian",
            Property::CenterOrder => "center-order",
        }
    }

    pub fn parse(s: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == s)
    }

    fn valid_value(self, v: &str) -> bool {
        match self {
            Property::Abelian => v == "true" || v == "false",
            Property::DerivedLength | Property::NilpotencyClass => {
                v == "none" || v.parse::<u64>().is_ok()
            }
            _ => v.parse::<u64>().is_ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub source: Source,
    pub expected: BTreeMap<Property, String>,
}

impl GroupSpec {
    pub fn recipe(name: &str, recipe: &str) -> GroupSpec {
        GroupSpec {
            name: name.to_string(),
            source: Source::Recipe(Recipe::parse(recipe).expect("built-in recipe parses")),
            expected: BTreeMap::new(),
        }
    }

    pub fn expect(mut self, property: Property, value: impl ToString) -> GroupSpec {
        self.expected.insert(property, value.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub specs: Vec<GroupSpec>,
    pub provenance: String,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&GroupSpec> {
        self.specs.iter().find(|s| s.name == name)
    }

    /// Builds the named entry, resolving references recursively.
    pub fn build(&self, name: &str, limits: &Limits) -> Result<Group> {
        let spec = self
            .get(name)
            .ok_or_else(|| Error::UnresolvedReference(name.to_string()))?;
        let group = match &spec.source {
            Source::Explicit { degree, generators } => {
                Group::enumerate(*degree, generators, limits)?
            }
            Source::Recipe(recipe) => recipe.build(&mut |r| self.build(r, limits))?,
        };
        if group.order() > limits.max_order {
            return Err(Error::OrderCapExceeded {
                cap: limits.max_order,
            });
        }
        Ok(group)
    }

    /// Text form accepted by [`parse_catalog`].
    pub fn print(&self) -> String {
        let mut out = String::new();
        for spec in &self.specs {
            match &spec.source {
                Source::Recipe(r) => out.push_str(&format!("group {} recipe {r}\n", spec.name)),
                Source::Explicit { degree, generators } => {
                    out.push_str(&format!("group {} degree {degree}\n", spec.name));
                    for g in generators {
                        out.push_str(&format!("gen {g}\n"));
                    }
                }
            }
            if !spec.expected.is_empty() {
                let items: Vec<String> = spec
                    .expected
                    .iter()
                    .map(|(k, v)| format!("{}={v}", k.name()))
                    .collect();
                out.push_str(&format!("expect {}\n", items.join(" ")));
            }
            out.push('\n');
        }
        out
    }
}

pub fn parse_catalog(text: &str, provenance: &str) -> Result<Catalog> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    let mut open = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let line = raw.trim();
        if line.is_empty() {
            open = false;
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "group" => {
                let mut parts = rest.splitn(3, char::is_whitespace);
                let name = parts.next().filter(|s| !s.is_empty()).ok_or_else(|| err("missing group name".into()))?;
                let kind = parts.next().ok_or_else(|| err("expected `degree` or `recipe`".into()))?;
                let body = parts.next().unwrap_or("").trim();
                if specs.iter().any(|s| s.name == name) {
                    return Err(Error::DuplicateName(name.to_string()));
                }
                let source = match kind {
                    "degree" => Source::Explicit {
                        degree: body
                            .parse()
                            .ok()
                            .filter(|&d| d > 0)
                            .ok_or_else(|| err(format!("bad degree `{body}`")))?,
                        generators: Vec::new(),
                    },
                    "recipe" => {
                        let recipe = Recipe::parse(body).map_err(|e| match e {
                            Error::UnknownConstructor(_) => e,
                            other => err(other.to_string()),
                        })?;
                        for r in recipe.references() {
                            if !specs.iter().any(|s| s.name == r) {
                                return Err(Error::UnresolvedReference(r.to_string()));
                            }
                        }
                        Source::Recipe(recipe)
                    }
                    other => return Err(err(format!("expected `degree` or `recipe`, got `{other}`"))),
                };
                specs.push(GroupSpec {
                    name: name.to_string(),
                    source,
                    expected: BTreeMap::new(),
                });
                open = true;
            }
            "gen" => {
                let spec = specs
                    .last_mut()
                    .filter(|_| open)
                    .ok_or_else(|| err("`gen` outside a group block".into()))?;
                let Source::Explicit { degree, generators } = &mut spec.source else {
                    return Err(err("`gen` in a recipe group".into()));
                };
                let g = Permutation::parse_with_degree(rest, *degree).map_err(|e| err(e.to_string()))?;
                generators.push(g);
            }
            "expect" => {
                let spec = specs
                    .last_mut()
                    .filter(|_| open)
                    .ok_or_else(|| err("`expect` outside a group block".into()))?;
                for item in rest.split_whitespace() {
                    let (k, v) = item
                        .split_once('=')
                        .ok_or_else(|| err(format!("expected prop=value, got `{item}`")))?;
                    let prop = Property::parse(k).ok_or_else(|| err(format!("unknown property `{k}`")))?;
                    if !prop.valid_value(v) {
                        return Err(err(format!("bad value `{v}` for {k}")));
                    }
                    spec.expected.insert(prop, v.to_string());
                }
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }
    Ok(Catalog {
        specs,
        provenance: provenance.to_string(),
    })
}

/// Names of the 28 groups of order at most 15, one per isomorphism type.
pub const SMALL_GROUPS: [&str; 28] = [
    "C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2^3", "D4", "Q8",
    "C9", "C3^2", "C10", "D5", "C11", "C12", "C6xC2", "D6", "A4", "Dic3", "C13", "C14", "D7",
    "C15",
];

/// Factor pairs for the product inequality, beyond the small products.
pub const PRODUCT_PAIRS: [(&str, &str); 16] = [
    ("C5", "S3"),
    ("C2", "D4"),
    ("C3", "Q8"),
    ("C3", "D4"),
    ("C4", "C5"),
    ("C8", "C3"),
    ("C9", "C2"),
    ("V4", "C5"),
    ("C4", "S3"),
    ("C3", "S3"),
    ("C7", "S3"),
    ("C2", "Q8"),
    ("C5", "C5"),
    ("C9", "V4"),
    ("S3", "S3"),
    ("A4", "C5"),
];

/// Everything the verifier runs over by default:
/// - the 28 groups of order ≤ 15 ([`SMALL_GROUPS`]);
/// - `C_{p^{n+1}}` for `p ∈ {2, 3, 5}`, `n ≤ 4`, expecting `D = n`;
/// - the presets, with the known values of `D`;
/// - the direct products in [`PRODUCT_PAIRS`];
/// - `C_p ⋊ C_{q²}` with central `C_q` for a few `(p, q)`;
/// - the Frobenius grid of [`frobenius_grid`], expecting the closed forms.
pub fn builtin_catalog() -> Catalog {
    use Property::*;
    let mut specs = Vec::new();
    let r = GroupSpec::recipe;
    for n in 1..=15 {
        let name = format!("C{n}");
        let spec = r(&name, &format!("cyclic n={n}")).expect(Order, n).expect(Abelian, true);
        specs.push(spec);
    }
    let extra = [
        ("V4", "direct_product a=C2 b=C2", 4, true, 4),
        ("C4xC2", "direct_product a=C4 b=C2", 8, true, 8),
        ("C2^3", "direct_product a=V4 b=C2", 8, true, 8),
        ("D4", "dihedral n=4", 8, false, 2),
        ("Q8", "preset name=Q8", 8, false, 2),
        ("C3^2", "direct_product a=C3 b=C3", 9, true, 9),
        ("S3", "dihedral n=3", 6, false, 1),
        ("D5", "dihedral n=5", 10, false, 1),
        ("C6xC2", "direct_product a=C6 b=C2", 12, true, 12),
        ("D6", "dihedral n=6", 12, false, 2),
        ("A4", "preset name=A4", 12, false, 1),
        ("Dic3", "dicyclic n=3", 12, false, 2),
        ("D7", "dihedral n=7", 14, false, 1),
    ];
    for (name, recipe, order, abelian, center) in extra {
        specs.push(
            r(name, recipe)
                .expect(Order, order)
                .expect(Abelian, abelian)
                .expect(CenterOrder, center),
        );
    }
    // Values of D the classification pins down for these orders.
    let small_d = [
        ("C1", 0),
        ("C2", 0),
        ("C3", 0),
        ("C5", 0),
        ("C7", 0),
        ("C11", 0),
        ("C13", 0),
        ("C4", 1),
        ("C9", 1),
        ("S3", 1),
        ("D5", 1),
        ("D7", 1),
        ("C8", 2),
        ("C6", 2),
        ("C10", 2),
        ("C14", 2),
        ("C15", 2),
        ("A4", 2),
        ("V4", 3),
        ("Dic3", 3),
    ];
    for (name, d) in small_d {
        let spec = specs.iter_mut().find(|s| s.name == name).expect("small group listed");
        spec.expected.insert(D, d.to_string());
    }
    for (p, max) in [(2u64, 5u32), (3, 5), (5, 5)] {
        for e in 1..=max {
            let n = p.pow(e);
            if n <= 15 {
                continue;
            }
            specs.push(
                r(&format!("C{n}"), &format!("cyclic n={n}"))
                    .expect(Order, n)
                    .expect(D, e - 1),
            );
        }
    }
    let presets = [
        ("S4", 24, Some(7)),
        ("A5", 60, Some(4)),
        ("SL2(3)", 24, Some(4)),
        ("A6", 360, Some(11)),
        ("PSL(2,5)", 60, Some(4)),
        ("PSL(2,7)", 168, Some(8)),
        ("PSL(2,8)", 504, Some(6)),
    ];
    for (name, order, d) in presets {
        let mut spec = r(name, &format!("preset name={name}")).expect(Order, order);
        if let Some(d) = d {
            spec = spec.expect(D, d);
        }
        specs.push(spec);
    }
    specs
        .iter_mut()
        .find(|s| s.name == "SL2(3)")
        .expect("listed above")
        .expected
        .insert(DerivedLength, "3".into());
    for (a, b) in PRODUCT_PAIRS {
        let order = |n: &str| -> usize {
            specs
                .iter()
                .find(|s| s.name == n)
                .and_then(|s| s.expected.get(&Order))
                .and_then(|o| o.parse().ok())
                .expect("factor listed with its order")
        };
        let total = order(a) * order(b);
        specs.push(r(&format!("{a}x{b}"), &format!("direct_product a={a} b={b}")).expect(Order, total));
    }
    for (p, q) in [(5, 2), (7, 2), (7, 3), (13, 2), (13, 3)] {
        specs.push(
            r(&format!("CExt_p{p}_q{q}"), &format!("central_extension p={p} q={q}"))
                .expect(Order, p * q * q)
                .expect(CenterOrder, q)
                .expect(D, 3),
        );
    }
    for spec in frobenius_grid() {
        let name = grid_name(&spec);
        let d = formula_for(&spec).expect("grid entries satisfy the formula preconditions");
        specs.push(GroupSpec {
            name,
            source: Source::Recipe(Recipe::Frobenius(spec)),
            expected: BTreeMap::new(),
        }
        .expect(Order, spec.kernel_order() * spec.complement_order())
        .expect(D, d));
    }
    Catalog {
        specs,
        provenance: "builtin".into(),
    }
}

/// `F1_p7n1_q3m1`, `F2_p5_q3_irreducible`, `F3_p11_q5_mixed-dims`.
pub fn grid_name(spec: &FrobeniusSpec) -> String {
    match *spec {
        FrobeniusSpec::Metacyclic { p, n, q, m } => format!("F1_p{p}n{n}_q{q}m{m}"),
        FrobeniusSpec::ElementaryAbelian { p, k, q, module } => {
            format!("F{k}_p{p}_q{q}_{module}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        let c = parse_catalog("group S3 degree 3\ngen (1 2)\ngen (1 2 3)\n", "inline").unwrap();
        assert_eq!(c.specs.len(), 1);
        assert_eq!(c.build("S3", &Limits::default()).unwrap().order(), 6);
        let c = parse_catalog(
            "group F21 recipe frobenius_metacyclic p=7 n=1 q=3 m=1\nexpect d=1\n",
            "inline",
        )
        .unwrap();
        assert_eq!(c.specs[0].expected[&Property::D], "1");
        assert!(parse_catalog("", "inline").unwrap().specs.is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_catalog("group A degree 2\ngen (1 2)\n\ngroup A degree 2\n", "x"),
            Err(Error::DuplicateName(_))
        ));
        assert!(matches!(
            parse_catalog("group A recipe frobnicate n=2\n", "x"),
            Err(Error::UnknownConstructor(_))
        ));
        assert!(matches!(
            parse_catalog("group A recipe direct_product a=B b=B\n", "x"),
            Err(Error::UnresolvedReference(_))
        ));
        assert_eq!(
            parse_catalog("# header\ngroup A degree 2\ngen (1 3)\n", "x").unwrap_err(),
            Error::Parse {
                line: 3,
                message: "invalid permutation: point 3 outside 1..2".into()
            }
        );
        assert!(matches!(
            parse_catalog("gen (1 2)\n", "x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_catalog("group A recipe cyclic n=2\nexpect colour=red\n", "x"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn builtin_round_trips() {
        let c = builtin_catalog();
        let again = parse_catalog(&c.print(), "builtin").unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn builtin_contents() {
        let c = builtin_catalog();
        for name in SMALL_GROUPS {
            assert!(c.get(name).is_some(), "{name}");
        }
        let primes = c
            .specs
            .iter()
            .filter(|s| SMALL_GROUPS.contains(&s.name.as_str()))
            .filter(|s| s.expected.get(&Property::D).map(String::as_str) == Some("0"))
            .count();
        assert_eq!(primes, 7); // six primes plus the trivial group
        let mut names: Vec<&str> = c.specs.iter().map(|s| s.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.specs.len());
    }
}
