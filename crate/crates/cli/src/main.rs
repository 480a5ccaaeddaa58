use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dcensus::catalog::{builtin_catalog, parse_catalog, Catalog, Recipe};
use dcensus::census::census;
use dcensus::constructors::preset;
use dcensus::family::{self, Lemma, FAMILY_COLUMNS};
use dcensus::verify::{census_table, verify, CheckSelector, TABLE_COLUMNS};
use dcensus::{Error, Group, Limits};

/// Census of non-self-normalizing subgroup classes, and checks of the
/// known formulas, bounds and classifications for that count.
#[derive(Parser)]
#[command(name = "dcensus", version)]
struct Cli {
    /// Refuse groups larger than this.
    #[arg(long, global = true, default_value_t = Limits::default().max_order)]
    max_order: usize,
    /// Refuse groups with more subgroups than this.
    #[arg(long, global = true, default_value_t = Limits::default().max_subgroups)]
    max_subgroups: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the order, D(G) and the counted subgroup classes.
    Census {
        /// Catalog name, preset, or recipe such as `dihedral n=5`.
        group: Vec<String>,
        /// Read the group from a catalog file (with --name).
        #[arg(long, requires = "name")]
        file: Option<String>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Run the verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long)]
        catalog: Option<String>,
        /// `all` or comma-separated check ids.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare a closed form with brute force over a parameter grid.
    Family {
        /// frob1, frob2 or frob3.
        lemma: String,
        /// e.g. `p=5..13,q=2..5`.
        #[arg(long, default_value = "")]
        grid: String,
    },
    /// Census table of a whole catalog.
    Table {
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn load_catalog(path: Option<&str>) -> Result<Catalog, Error> {
    match path {
        None => Ok(builtin_catalog()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| Error::Domain(format!("{p}: {e}")))?;
            parse_catalog(&text, p)
        }
    }
}

/// Catalog entry name, then preset, then recipe expression.
fn resolve_group(words: &[String], limits: &Limits) -> Result<Group, Error> {
    let text = words.join(" ");
    if text.is_empty() {
        return Err(Error::Domain("no group given".into()));
    }
    let builtin = builtin_catalog();
    if builtin.get(&text).is_some() {
        return builtin.build(&text, limits);
    }
    if !text.contains('=') {
        return preset(&text);
    }
    let recipe = Recipe::parse(&text)?;
    recipe.build(&mut |name| builtin.build(name, limits))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let limits = Limits {
        max_order: cli.max_order,
        max_subgroups: cli.max_subgroups,
    };
    match cli.command {
        Command::Census { group, file, name } => {
            let g = match (file, name) {
                (Some(path), Some(name)) => load_catalog(Some(&path))?.build(&name, &limits)?,
                _ => resolve_group(&group, &limits)?,
            };
            if g.order() > limits.max_order {
                return Err(Error::OrderCapExceeded { cap: limits.max_order });
            }
            let report = census(&g, &limits)?;
            println!("order {}, D = {}", report.group_order, report.d_value);
            println!("{:>8} {:>10} {:>16} {:>7}", "order", "class-size", "normalizer-order", "normal");
            for row in report.rows() {
                println!(
                    "{:>8} {:>10} {:>16} {:>7}",
                    row.order,
                    row.class_size,
                    row.normalizer_order,
                    if row.normal { "yes" } else { "no" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { catalog, checks, format } => {
            let catalog = load_catalog(catalog.as_deref())?;
            let selector = CheckSelector::parse(&checks)?;
            let report = verify(&catalog, &selector, &limits);
            match format {
                Format::Csv => print!("{}", report.to_csv()),
                Format::Json => print!("{}", report.to_json()),
            }
            for r in report.failures() {
                eprintln!(
                    "FAIL {} {}: expected {}, computed {}",
                    r.check_id, r.instance, r.expected, r.computed
                );
            }
            let s = report.summary;
            eprintln!("{} records, {} passed, {} failed", s.total, s.passed, s.failed);
            Ok(if s.failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Family { lemma, grid } => {
            let lemma = Lemma::parse(&lemma)?;
            let ranges = family::parse_grid(lemma, &grid)?;
            let specs = family::family_specs(lemma, &ranges);
            let rows = family::family_rows(lemma, &specs, &limits);
            print!("{}", family::rows_to_csv(&rows, &FAMILY_COLUMNS));
            let bad = rows.iter().filter(|r| !r.agree).count();
            eprintln!("{} realizable rows, {bad} disagreements", rows.len());
            Ok(if bad == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Table { catalog, format } => {
            let catalog = load_catalog(catalog.as_deref())?;
            let rows = census_table(&catalog, &limits);
            match format {
                Format::Csv => print!("{}", family::rows_to_csv(&rows, &TABLE_COLUMNS)),
                Format::Json => print!("{}", family::rows_to_json(&rows)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
