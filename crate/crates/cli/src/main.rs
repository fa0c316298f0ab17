//! Command-line front end: file-based verification, catalog reproduction,
//! interpolation reports, and catalog export.
//!
//! Exit codes: 0 = every check passed, 1 = at least one check failed,
//! 2 = usage or parse error. Output is plain text or JSON (`--report`),
//! never colored, and byte-identical for identical inputs.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use genstruct::catalog::{catalog_get, names, verify_entry, CatalogEntry, EntryKind};
use genstruct::exactla::{parse_rational, rational_to_string, Rational, Sign};
use genstruct::extended::{eigenspace_involutivity, nijenhuis_integrability, ExtendedSpace};
use genstruct::io::{AlgebraFile, MetricFile, StructureFile};
use genstruct::report::{Check, Report};

#[derive(Parser)]
#[command(
    name = "genstruct",
    about = "Exact verification of generalized (para)complex structures compatible with a pseudo-Riemannian metric on Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: GlobalOptions,
}

#[derive(Args)]
struct GlobalOptions {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Seed for any randomized sub-checks; output is deterministic given
    /// (inputs, seed, format).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a structure file against an algebra and a metric: the four
    /// algebraic axioms plus Nijenhuis integrability on the cotangent
    /// algebra.
    Verify {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        metric: PathBuf,
        #[arg(long)]
        structure: PathBuf,
    },
    /// Re-verify built-in catalog entries.
    Catalog {
        /// Entry name (g1..g5, ellipse).
        name: Option<String>,
        /// Verify every entry.
        #[arg(long)]
        all: bool,
        /// Comma-separated rational curve parameters for curve entries.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        curve_samples: Option<Vec<String>>,
    },
    /// Evaluate the interpolation curve of a catalog entry at an exact
    /// rational parameter and report axioms and eigenspace dimensions.
    Interpolate {
        /// Entry name (must carry a curve; currently "ellipse").
        name: String,
        /// Epsilon of the curve family: +1 or -1.
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        epsilon: i64,
        /// Weierstrass parameter, e.g. "1/2".
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Write a catalog entry as algebra/metric/structure JSON files.
    Export {
        /// Entry name (g1..g5, ellipse).
        name: String,
        /// Output directory (default: current directory).
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

enum Outcome {
    AllPassed(Vec<Report>),
    SomeFailed(Vec<Report>),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command, &cli.options) {
        Ok(Outcome::AllPassed(reports)) => {
            emit(&reports, cli.options.report);
            ExitCode::SUCCESS
        }
        Ok(Outcome::SomeFailed(reports)) => {
            emit(&reports, cli.options.report);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(reports: &[Report], format: ReportFormat) {
    match format {
        ReportFormat::Text => {
            for r in reports {
                print!("{}", r.render_text());
            }
        }
        ReportFormat::Json => {
            let json = serde_json::to_string_pretty(reports).expect("report serialization");
            println!("{json}");
        }
    }
}

fn outcome(reports: Vec<Report>) -> Outcome {
    if reports.iter().all(Report::all_pass) {
        Outcome::AllPassed(reports)
    } else {
        Outcome::SomeFailed(reports)
    }
}

fn run(command: &Command, _options: &GlobalOptions) -> genstruct::Result<Outcome> {
    match command {
        Command::Verify {
            algebra,
            metric,
            structure,
        } => {
            let algebra: AlgebraFile = read_json(algebra)?;
            let metric: MetricFile = read_json(metric)?;
            let structure: StructureFile = read_json(structure)?;
            let algebra = algebra.to_algebra()?;
            let metric = metric.to_metric()?;
            let structure = structure.to_structure(&metric)?;
            if metric.dim() != algebra.dim() {
                return Err(genstruct::Error::DimensionMismatch(format!(
                    "algebra dimension {} vs metric dimension {}",
                    algebra.dim(),
                    metric.dim()
                )));
            }
            let space = ExtendedSpace::new(metric, structure.k());
            let mut report = structure
                .verify_algebraic(&space)?
                .to_report("structure verification");
            let cotangent = algebra.cotangent_algebra()?;
            let nij = nijenhuis_integrability(&cotangent, &structure)?;
            let mut check = Check::of("nijenhuis tensor vanishes", nij.vanishes())
                .with_note(format!("{} basis pairs", nij.pairs_checked));
            if let Some((i, j, value)) = nij.failures.first() {
                check = check
                    .with_note(format!("nonzero at pair ({i}, {j})"))
                    .with_witness(value);
            }
            report.push(check);
            Ok(outcome(vec![report]))
        }
        Command::Catalog {
            name,
            all,
            curve_samples,
        } => {
            let samples = parse_samples(curve_samples.as_deref())?;
            let selected: Vec<String> = match (name, all) {
                (Some(n), false) => vec![n.clone()],
                (None, true) => names().iter().map(|s| s.to_string()).collect(),
                (None, false) => {
                    return Err(genstruct::Error::Parse(
                        "pass an entry name or --all".into(),
                    ))
                }
                (Some(_), true) => {
                    return Err(genstruct::Error::Parse(
                        "pass either an entry name or --all, not both".into(),
                    ))
                }
            };
            let mut reports = Vec::new();
            for n in selected {
                let entry = catalog_get(&n)?;
                reports.push(verify_entry(&entry, samples.as_deref()));
            }
            Ok(outcome(reports))
        }
        Command::Interpolate { name, epsilon, s } => {
            let entry = catalog_get(name)?;
            if !matches!(entry.kind, EntryKind::InterpolationCurve { .. }) {
                return Err(genstruct::Error::UnknownEntry(format!(
                    "{name} has no interpolation curve"
                )));
            }
            let eps = Sign::from_int(*epsilon)?;
            let s = parse_rational(s)?;
            Ok(outcome(vec![interpolation_report(&entry, eps, &s)?]))
        }
        Command::Export { name, dir } => {
            let entry = catalog_get(name)?;
            export_entry(&entry, dir)?;
            let mut report = Report::new(format!("export {name}"));
            for suffix in ["algebra", "metric", "structure"] {
                report.push(Check::pass(format!(
                    "wrote {}",
                    file_name(&entry.name, suffix)
                )));
            }
            Ok(outcome(vec![report]))
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> genstruct::Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn parse_samples(raw: Option<&[String]>) -> genstruct::Result<Option<Vec<Rational>>> {
    match raw {
        None => Ok(None),
        Some(items) => {
            let parsed: genstruct::Result<Vec<Rational>> =
                items.iter().map(|s| parse_rational(s)).collect();
            Ok(Some(parsed?))
        }
    }
}

fn interpolation_report(
    entry: &CatalogEntry,
    eps: Sign,
    s: &Rational,
) -> genstruct::Result<Report> {
    let mut report = Report::new(format!(
        "interpolation {} at eps = {eps}, s = {}",
        entry.name,
        rational_to_string(s)
    ));
    let point = entry.curve_structure(eps, s)?;
    report.push(Check::pass("curve point matrix (exact)").with_witness(&point.matrix));
    let space = ExtendedSpace::new(entry.metric.clone(), point.k());
    for outcome in point.verify_algebraic(&space)?.outcomes() {
        report.push(outcome.to_check());
    }
    let cotangent = entry.algebra.cotangent_algebra()?;
    for delta in [Sign::Plus, Sign::Minus] {
        let inv = eigenspace_involutivity(&cotangent, &point, delta)?;
        report.push(
            Check::of(format!("D({delta}) involutive"), inv.closed)
                .with_note(format!("dimension {}", inv.basis.dim())),
        );
    }
    Ok(report)
}

fn file_name(entry: &str, suffix: &str) -> String {
    format!("{entry}.{suffix}.json")
}

fn export_entry(entry: &CatalogEntry, dir: &Path) -> genstruct::Result<()> {
    std::fs::create_dir_all(dir)?;
    let algebra_file = match &entry.salamon {
        Some(spec) => AlgebraFile::from_salamon(entry.algebra.dim(), spec),
        None => AlgebraFile::from_algebra(&entry.algebra),
    };
    let metric_file = match &entry.metric_basis {
        Some((c, p)) => MetricFile::from_basis(c, p),
        None => MetricFile::from_gram(entry.metric.gram()),
    };
    let (lambda, ell) = entry.lambda_ell();
    let structure_file = match &entry.kind {
        EntryKind::Nilmanifold { a, b } => StructureFile::from_classical_pair(lambda, ell, a, b),
        EntryKind::InterpolationCurve { .. } => {
            StructureFile::from_matrix(&entry.primary_structure()?)
        }
    };
    write_json(&dir.join(file_name(&entry.name, "algebra")), &algebra_file)?;
    write_json(&dir.join(file_name(&entry.name, "metric")), &metric_file)?;
    write_json(
        &dir.join(file_name(&entry.name, "structure")),
        &structure_file,
    )?;
    Ok(())
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> genstruct::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serialization");
    std::fs::write(path, text + "\n")?;
    Ok(())
}
