//! Closed forms versus brute force over user-chosen parameter ranges.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::census::{census, formula_for};
use crate::constructors::{FrobeniusSpec, ModuleKind};
use crate::error::{Error, Result};
use crate::group::{is_prime, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// Cyclic kernel `C_{p^n}`, complement `C_{q^m}`.
    Frob1,
    /// `(C_p)² ⋊ C_q`.
    Frob2,
    /// `(C_p)³ ⋊ C_q`.
    Frob3,
}

impl Lemma {
    pub fn parse(s: &str) -> Result<Lemma> {
        match s {
            "frob1" => Ok(Lemma::Frob1),
            "frob2" => Ok(Lemma::Frob2),
            "frob3" => Ok(Lemma::Frob3),
            _ => Err(Error::Domain(format!("unknown lemma `{s}` (frob1, frob2, frob3)"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Lemma::Frob1 => "frob1",
            Lemma::Frob2 => "frob2",
            Lemma::Frob3 => "frob3",
        }
    }

    fn keys(self) -> &'static [&'static str] {
        match self {
            Lemma::Frob1 => &["p", "n", "q", "m"],
            Lemma::Frob2 | Lemma::Frob3 => &["p", "q"],
        }
    }

    fn default_range(key: &str) -> RangeInclusive<u64> {
        match key {
            "p" => 2..=13,
            "q" => 2..=7,
            "n" => 1..=3,
            _ => 1..=2,
        }
    }
}

/// Parses `p=5..13,q=2..5` (single values like `q=3` allowed). Keys not
/// given take their defaults: `p ≤ 13`, `q ≤ 7`, `n ≤ 3`, `m ≤ 2`.
pub fn parse_grid(lemma: Lemma, text: &str) -> Result<BTreeMap<String, RangeInclusive<u64>>> {
    let mut ranges: BTreeMap<String, RangeInclusive<u64>> = lemma
        .keys()
        .iter()
        .map(|&k| (k.to_string(), Lemma::default_range(k)))
        .collect();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("expected key=range, got `{item}`")))?;
        if !ranges.contains_key(k) {
            return Err(Error::Domain(format!("`{}` takes {}", lemma.name(), lemma.keys().join(","))));
        }
        let num = |s: &str| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Domain(format!("bad number `{s}` in `{item}`")))
        };
        let range = match v.split_once("..") {
            Some((lo, hi)) => num(lo)?..=num(hi)?,
            None => {
                let x = num(v)?;
                x..=x
            }
        };
        ranges.insert(k.to_string(), range);
    }
    Ok(ranges)
}

/// Realizable parameter sets of the lemma within the ranges.
pub fn family_specs(lemma: Lemma, ranges: &BTreeMap<String, RangeInclusive<u64>>) -> Vec<FrobeniusSpec> {
    let primes = |k: &str| -> Vec<u64> { ranges[k].clone().filter(|&x| is_prime(x)).collect() };
    let mut specs = Vec::new();
    for p in primes("p") {
        for q in primes("q") {
            match lemma {
                Lemma::Frob1 => {
                    for n in ranges["n"].clone().filter(|&n| n >= 1) {
                        for m in ranges["m"].clone().filter(|&m| m >= 1) {
                            specs.push(FrobeniusSpec::Metacyclic {
                                p,
                                n: n as u32,
                                q,
                                m: m as u32,
                            });
                        }
                    }
                }
                Lemma::Frob2 | Lemma::Frob3 => {
                    let k = if lemma == Lemma::Frob2 { 2 } else { 3 };
                    for module in ModuleKind::ALL {
                        if k == 2 && module == ModuleKind::MixedDims {
                            continue;
                        }
                        specs.push(FrobeniusSpec::ElementaryAbelian { p, k, q, module });
                    }
                }
            }
        }
    }
    specs.retain(|s| s.validate().is_ok());
    specs
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub lemma: String,
    pub parameters: String,
    pub order: u64,
    pub formula: String,
    pub census: String,
    pub agree: bool,
}

/// One row per realizable spec; a construction or formula error makes the
/// row disagree rather than aborting.
pub fn family_rows(lemma: Lemma, specs: &[FrobeniusSpec], limits: &Limits) -> Vec<FamilyRow> {
    specs
        .iter()
        .map(|spec| {
            let formula = formula_for(spec).map(|d| d as usize);
            let computed = spec.build().and_then(|g| census(&g, limits)).map(|c| c.d_value);
            let show = |r: &Result<usize>| match r {
                Ok(v) => v.to_string(),
                Err(e) => format!("error: {e}"),
            };
            FamilyRow {
                lemma: lemma.name().to_string(),
                parameters: spec.label(),
                order: spec.kernel_order() * spec.complement_order(),
                formula: show(&formula),
                census: show(&computed),
                agree: matches!((&formula, &computed), (Ok(a), Ok(b)) if a == b),
            }
        })
        .collect()
}

pub fn rows_to_csv<T: Serialize>(rows: &[T], header: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header).expect("in-memory CSV write");
    for r in rows {
        w.serialize(r).expect("in-memory CSV write");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("UTF-8 CSV")
}

pub fn rows_to_json<T: Serialize>(rows: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

pub const FAMILY_COLUMNS: [&str; 6] = ["lemma", "parameters", "order", "formula", "census", "agree"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let r = parse_grid(Lemma::Frob2, "p=5..13,q=2..5").unwrap();
        assert_eq!(r["p"], 5..=13);
        assert_eq!(r["q"], 2..=5);
        let r = parse_grid(Lemma::Frob1, "p=7,q=3").unwrap();
        assert_eq!(r["n"], 1..=3);
        assert!(parse_grid(Lemma::Frob2, "n=2").is_err());
        assert!(parse_grid(Lemma::Frob2, "p=x").is_err());
    }

    #[test]
    fn small_frob2_grid_agrees() {
        let r = parse_grid(Lemma::Frob2, "p=5..7,q=2..3").unwrap();
        let specs = family_specs(Lemma::Frob2, &r);
        assert!(!specs.is_empty());
        let rows = family_rows(Lemma::Frob2, &specs, &Limits::default());
        assert!(rows.iter().all(|r| r.agree), "{rows:#?}");
        let csv = rows_to_csv(&rows, &FAMILY_COLUMNS);
        assert!(csv.starts_with("lemma,parameters,order,formula,census,agree\n"));
    }
}
