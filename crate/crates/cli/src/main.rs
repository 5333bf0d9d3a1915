use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use diagcycles::arrangements::find_isomorphism;
use diagcycles::cycles::{classify, standard_decomposition, Cycle};
use diagcycles::exactgeom::{
    is_generic, random_generic_polygon_with_budget, Point2, PolygonSpec, DEFAULT_RETRY_BUDGET,
};
use diagcycles::format::{arrangement_from_json, polygon_from_json, polygon_to_json, region_report_json};
use diagcycles::harness::{census_report, empirical_validate};
use diagcycles::realize::realize_cycle_with_budget;
use diagcycles::regions::{enumerate_regions, region_containing, region_count_formula};
use diagcycles::svg;
use diagcycles::Error;

const RETRY_BUDGET_VAR: &str = "DIAGCYCLES_RETRY_BUDGET";

#[derive(Parser)]
#[command(name = "diagcycles", version, about = "Regions of convex polygon diagonal arrangements and their cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count two-standard cycles, regions and the definite/indefinite split.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Classify a cycle as definite or indefinite, with evidence.
    Classify {
        #[arg(long)]
        cycle: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the regions of a polygon.
    Regions(RegionsArgs),
    /// Build a polygon containing a region with the given cycle.
    Realize {
        #[arg(long)]
        cycle: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the polygon JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check the classification against random polygons.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Search for an isomorphism between two point arrangements.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Print the standard row decomposition of a cycle.
    Decompose {
        #[arg(long)]
        cycle: String,
    },
}

#[derive(Args)]
struct RegionsArgs {
    /// Use a random generic polygon (needs --n).
    #[arg(long, conflicts_with = "polygon", requires = "n")]
    random: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Polygon JSON file.
    #[arg(long, required_unless_present = "random")]
    polygon: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Print cycle labels inside the SVG regions.
    #[arg(long)]
    labels: bool,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Lib(Error),
    Input(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Violation(_) => 4,
            Failure::Lib(e) => match e {
                Error::NonGeneric(_) => 3,
                Error::ClassifierDisagreement(_) | Error::RealizationFailed(_) => 4,
                Error::RetryBudgetExhausted(_) => 1,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Input(m) | Failure::Violation(m) => m.clone(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn retry_budget() -> Result<usize, Failure> {
    match std::env::var(RETRY_BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&b: &usize| b > 0)
            .ok_or_else(|| Failure::Input(format!("{RETRY_BUDGET_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_RETRY_BUDGET),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_cycle(text: &str) -> Result<Cycle, Failure> {
    text.parse().map_err(Failure::Lib)
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn load_polygon(path: &Path) -> Result<PolygonSpec, Failure> {
    let poly = polygon_from_json(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if !is_generic(&poly) {
        return Err(Error::NonGeneric(format!("{}: three diagonals meet at an interior point", path.display())).into());
    }
    Ok(poly)
}

fn regions(args: RegionsArgs) -> Outcome {
    let poly = match (&args.polygon, args.n) {
        (Some(path), _) => load_polygon(path)?,
        (None, Some(n)) if n >= 3 => random_generic_polygon_with_budget(n, args.seed, retry_budget()?)?,
        (None, _) => return Err(Failure::Input("--random needs --n of at least 3".into())),
    };
    let regions = enumerate_regions(&poly)?;
    if let Some(path) = &args.svg {
        write(path, &svg::render(&poly, &regions, args.labels, None))?;
    }
    if args.json {
        println!("{}", pretty(&region_report_json(&poly, &regions)));
    } else {
        println!("n={} regions={} formula={}", poly.n(), regions.len(), region_count_formula(poly.n()));
        for r in &regions {
            println!("{:<24} sides={} {}", r.cycle.to_string(), r.side_count, r.classification);
        }
    }
    Ok(())
}

fn realize(cycle: &str, seed: u64, out: Option<PathBuf>, svg_out: Option<PathBuf>) -> Outcome {
    let c = parse_cycle(cycle)?;
    let poly = realize_cycle_with_budget(&c, seed, retry_budget()?)?;
    let regions = enumerate_regions(&poly)?;
    let hit = region_containing(&regions, &Point2::origin())
        .filter(|r| r.cycle == c)
        .ok_or_else(|| Failure::Violation(format!("realized polygon lacks region {c}")))?;
    let line = format!("verified cycle={} sides={} {}", c, hit.side_count, hit.classification);
    let json = pretty(&polygon_to_json(&poly));
    if let Some(path) = &svg_out {
        write(path, &svg::render(&poly, &regions, false, Some(&c)))?;
    }
    match out {
        Some(path) => {
            write(&path, &format!("{json}\n"))?;
            println!("{line}");
        }
        None => {
            println!("{json}");
            eprintln!("{line}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Census { n, json } => {
            if !(3..=14).contains(&n) {
                return Err(Failure::Input(format!("--n must be in 3..=14, got {n}")));
            }
            let report = census_report(n)?;
            if json {
                println!("{}", pretty(&report));
            } else {
                println!("{report}");
            }
        }
        Command::Classify { cycle, json } => {
            let c = parse_cycle(&cycle)?;
            let k = classify(&c)?;
            if json {
                println!("{}", pretty(&serde_json::json!({ "cycle": c, "classification": k })));
            } else {
                println!("{k}");
            }
        }
        Command::Regions(args) => regions(args)?,
        Command::Realize { cycle, seed, out, svg } => realize(&cycle, seed, out, svg)?,
        Command::Verify { n, trials, seed, json } => {
            if !(4..=9).contains(&n) || trials == 0 {
                return Err(Failure::Input("--n must be in 4..=9 and --trials at least 1".into()));
            }
            let report = empirical_validate(n, trials, seed)?;
            if json {
                println!("{}", pretty(&report));
            } else {
                println!("{report}");
            }
            if !report.passed() {
                return Err(Failure::Violation(format!("{} violation(s)", report.violations.len())));
            }
        }
        Command::Iso { a, b } => {
            let load = |p: &Path| {
                arrangement_from_json(&read(p)?).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
            };
            println!("{}", find_isomorphism(&load(&a)?, &load(&b)?)?);
        }
        Command::Decompose { cycle } => {
            println!("rows: {}", standard_decomposition(&parse_cycle(&cycle)?));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
