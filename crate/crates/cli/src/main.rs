use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use leibniz_core::any::AnyAlgebra;
use leibniz_core::catalog::{self, Family, FamilySpec, FAMILIES};
use leibniz_core::field::{PrimeField, Rationals};
use leibniz_core::io;
use leibniz_core::structure::{structure_report, structure_report_finite};
use leibniz_core::verify::{self, SuiteResult};
use leibniz_core::{Budget, SubalgebraLattice};

/// Exact-arithmetic toolkit for finite-dimensional Leibniz algebras.
#[derive(Parser)]
#[command(name = "leibniz", version)]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest number of field elements an element scan may visit.
    #[arg(long, global = true, default_value_t = Budget::default().max_elements)]
    max_elements: u64,
    /// Largest subalgebra lattice that may be built.
    #[arg(long, global = true, default_value_t = Budget::default().max_nodes)]
    max_nodes: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz identities of an algebra file.
    Check { file: PathBuf },
    /// Print the structure report of an algebra.
    Analyze {
        file: PathBuf,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Build the subalgebra lattice and test its properties.
    Lattice {
        file: PathBuf,
        /// Write the Hasse diagram in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the lattice report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Exit with status 1 unless these properties hold
        /// (modular, upper_semimodular, lower_semimodular, all_wqi).
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
    },
    /// Run theorem checks on an algebra file or on the built-in corpus.
    Verify {
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        file: Option<PathBuf>,
        /// Use the built-in corpus instead of a file.
        #[arg(long)]
        corpus: bool,
        /// Seed for the corpus basis changes.
        #[arg(long, default_value_t = 0, requires = "corpus")]
        seed: u64,
        /// Comma-separated check ids (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List or build catalog families.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the families and their parameters.
    List,
    /// Write a family member as an algebra file.
    Emit {
        family: String,
        params: Vec<usize>,
        /// `p=<prime>` or `q` for the rationals.
        #[arg(long, default_value = "p=3")]
        field: String,
        /// Output path (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    PropertyFailure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::PropertyFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let budget = Budget {
        max_elements: cli.budget.max_elements,
        max_nodes: cli.budget.max_nodes,
    };
    match cli.command {
        Command::Check { file } => check(&load(&file)?),
        Command::Analyze { file, json } => analyze(&load(&file)?, json.as_deref(), &budget),
        Command::Lattice {
            file,
            dot,
            json,
            require,
        } => lattice(&load(&file)?, dot.as_deref(), json.as_deref(), &require, &budget),
        Command::Verify {
            file,
            corpus,
            seed,
            checks,
            json,
        } => {
            let ids: Vec<&str> = if checks.is_empty() {
                verify::all_check_ids()
            } else {
                checks.iter().map(String::as_str).collect()
            };
            let (result, seed) = if corpus {
                (verify::run_suite(&catalog::corpus(seed), &ids, &budget)?, Some(seed))
            } else {
                let path = file.expect("clap requires a file without --corpus");
                let l = load(&path)?;
                let l = l.finite("verify")?;
                (verify::run_on_algebra(l, None, &ids, &budget)?, None)
            };
            report_suite(&result, seed, json.as_deref())
        }
        Command::Catalog(CatalogCommand::List) => {
            for info in FAMILIES {
                let params = if info.params.is_empty() {
                    "-".to_string()
                } else {
                    info.params.join(" ")
                };
                println!("{:<26} {:<8} {}", info.family.as_str(), params, info.summary);
            }
            Ok(Outcome::Ok)
        }
        Command::Catalog(CatalogCommand::Emit {
            family,
            params,
            field,
            output,
        }) => {
            let family: Family = family.parse()?;
            let spec = FamilySpec::new(family, &params);
            let text = match parse_field(&field)? {
                Some(p) => io::emit_spec(&spec.build(PrimeField::new(p)?)?),
                None => io::emit_spec(&spec.build(Rationals)?),
            };
            match output {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(Outcome::Ok)
        }
    }
}

fn parse_field(s: &str) -> Result<Option<u32>> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(None);
    }
    match s.strip_prefix("p=").map(str::parse::<u32>) {
        Some(Ok(p)) => Ok(Some(p)),
        _ => bail!("invalid --field `{s}`: expected p=<prime> or q"),
    }
}

fn load(path: &Path) -> Result<AnyAlgebra> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    io::parse_spec(&text).with_context(|| format!("invalid algebra file {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn check(l: &AnyAlgebra) -> Result<Outcome> {
    println!("algebra: {} over {} (dim {})", l.name(), l.descriptor(), l.dim());
    // Loading already rejected tensors that fail the right identity.
    println!("right_leibniz: true");
    match l.left_leibniz_violation() {
        None => println!("left_leibniz: true"),
        Some((i, j, k)) => println!("left_leibniz: false (basis triple {i}, {j}, {k})"),
    }
    println!("symmetric: {}", yes_no(l.left_leibniz_violation().is_none()));
    println!("lie: {}", yes_no(l.is_lie()));
    Ok(Outcome::Ok)
}

fn analyze(l: &AnyAlgebra, json: Option<&Path>, budget: &Budget) -> Result<Outcome> {
    let value = match l {
        AnyAlgebra::Prime(l) => io::structure_report_json(&structure_report_finite(l, budget)?),
        AnyAlgebra::Rational(l) => io::structure_report_json(&structure_report(l)),
    };
    let get = |k: &str| -> String {
        match &value[k] {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Null => "-".into(),
            v => v.to_string(),
        }
    };
    println!("algebra: {} over {} (dim {})", l.name(), l.descriptor(), l.dim());
    for key in [
        "is_lie",
        "is_symmetric",
        "nilpotency_class",
        "derived_length",
        "is_supersolvable",
        "shape",
        "kernel",
        "center",
        "derived_algebra",
        "frattini",
    ] {
        println!("{key}: {}", get(key));
    }
    match value["square_zero"].as_object() {
        Some(sz) => println!("square_zero_subalgebra: {}", sz["j"].as_str().unwrap_or("-")),
        None => println!("square_zero_subalgebra: - (needs a finite field)"),
    }
    for note in value["notes"].as_array().into_iter().flatten() {
        println!("note: {}", note.as_str().unwrap_or_default());
    }
    if let Some(path) = json {
        write(path, &io::to_json_text(&value))?;
    }
    Ok(Outcome::Ok)
}

fn lattice(
    l: &AnyAlgebra,
    dot: Option<&Path>,
    json: Option<&Path>,
    require: &[String],
    budget: &Budget,
) -> Result<Outcome> {
    const PROPERTIES: [&str; 4] = ["modular", "upper_semimodular", "lower_semimodular", "all_wqi"];
    if let Some(bad) = require.iter().find(|r| !PROPERTIES.contains(&r.as_str())) {
        bail!(
            "unknown property `{bad}` in --require (expected one of {})",
            PROPERTIES.join(", ")
        );
    }
    let l = l.finite("lattice")?;
    let lat = SubalgebraLattice::new(l, budget)?;
    let report = io::lattice_report_json(&lat);
    let s = lat.stats();
    println!("algebra: {} (dim {})", l.name(), l.dim());
    println!(
        "nodes: {}  covers: {}  height: {}  atoms: {}  coatoms: {}",
        s.nodes, s.edges, s.height, s.atoms, s.coatoms
    );
    for (key, value) in report["verdicts"].as_object().expect("verdicts object") {
        let witness = &report["witnesses"][key];
        if witness.is_null() {
            println!("{key}: {value}");
        } else {
            println!("{key}: {value} (witness {witness})");
        }
    }
    println!("frattini: {}", report["frattini"].as_str().unwrap_or_default());
    if let Some(path) = dot {
        write(path, &io::export_dot(&lat))?;
    }
    if let Some(path) = json {
        write(path, &io::to_json_text(&report))?;
    }
    let failed = require.iter().any(|r| report["verdicts"][r.as_str()] == false);
    Ok(if failed { Outcome::PropertyFailure } else { Outcome::Ok })
}

fn report_suite(result: &SuiteResult, seed: Option<u64>, json: Option<&Path>) -> Result<Outcome> {
    print!("{}", io::suite_table(result));
    for r in &result.reports {
        if let verify::Status::Fail { witness } = &r.status {
            let kind = if r.report_only { "report" } else { "FAIL" };
            println!("{kind}: {} on {}: {}", r.check, r.algebra, witness_text(witness));
        }
    }
    if let Some(path) = json {
        write(path, &io::to_json_text(&io::suite_report_json(result, seed)))?;
    }
    if result.passed() {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::PropertyFailure)
    }
}

fn witness_text(w: &verify::Witness) -> String {
    let mut parts = Vec::new();
    if !w.subspaces.is_empty() {
        parts.push(format!("subspaces {}", w.subspaces.join(" ")));
    }
    for e in &w.elements {
        parts.push(format!("element ({})", e.join(",")));
    }
    if !w.detail.is_empty() {
        parts.push(w.detail.clone());
    }
    parts.join("; ")
}
