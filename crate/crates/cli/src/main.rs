//! `wreathforge`: check, classify and construct models from JSON files.

mod render;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use wreathforge_core::catalog::{self, CatalogError, Suite};
use wreathforge_core::check::{report, Verdict};
use wreathforge_core::library::{self, LibraryError};
use wreathforge_core::model_file::{emit, parse, AnyModel, SchemaError};
use wreathforge_core::product::build_product;
use wreathforge_core::{
    classify, with_model, Diagram, FieldError, FieldSpec, ModelError, PrimeField, Rationals, SignatureTable,
    DEFAULT_DIMENSION_CAP,
};

#[derive(Debug, Parser)]
#[command(
    name = "wreathforge",
    version,
    about = "Exact checks of Hopf data, wreaths and tau-bimonads"
)]
struct Cli {
    /// Largest intermediate tensor dimension any evaluation may reach.
    #[arg(long, global = true, env = "WREATHFORGE_DIM_CAP", default_value_t = DEFAULT_DIMENSION_CAP)]
    dimension_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run identity suites against a model file.
    Check {
        path: PathBuf,
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Report the signature, table rows and suite verdicts of a model.
    Classify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Write the composite FB as a model file.
    Construct {
        path: PathBuf,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inspect the identity catalog.
    Axioms {
        #[command(subcommand)]
        action: AxiomsAction,
    },
    /// Built-in example models.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Debug, Subcommand)]
enum AxiomsAction {
    /// List every identity id with its description.
    List {
        #[arg(long)]
        suite: Option<String>,
    },
    /// Print both sides of one identity as s-expressions.
    Show { id: String },
}

#[derive(Debug, Subcommand)]
enum ExamplesAction {
    /// List the built-in examples.
    List,
    /// Write a built-in example as a model file.
    Emit {
        name: String,
        /// `q` or `fp:<p>`.
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Schema { path: String, source: SchemaError },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Library(#[from] LibraryError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension cap {cap} is below {needed}, the squared dimension of B F")]
    CapTooSmall { cap: usize, needed: usize },
}

/// Process outcome: 0 all selected suites pass, 1 some identity fails,
/// 2 the input could not be read or evaluated.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Ok(Verdict::Skipped) => {
            eprintln!("error: some suites could not be evaluated");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Verdict, CliError> {
    match &cli.command {
        Command::Check { path, suite, format } => {
            let model = load(path, cli.dimension_cap)?;
            let suites = select_suites(suite)?;
            let rep = with_model!(&model, m => report(&suites, m));
            let text = match format {
                Format::Json => json(&rep),
                Format::Text => render::report(&rep),
            };
            print!("{text}");
            Ok(rep.verdict())
        }
        Command::Classify { path, format } => {
            let model = load(path, cli.dimension_cap)?;
            let rep = with_model!(&model, m => classify(m))?;
            let text = match format {
                Format::Json => json(&rep),
                Format::Text => render::classification(&rep),
            };
            print!("{text}");
            Ok(Verdict::Pass)
        }
        Command::Construct { path, out } => {
            let model = load(path, cli.dimension_cap)?;
            let text = with_model!(&model, m => emit(&build_product(m)?.to_model()?));
            write_output(out.as_deref(), &text)?;
            Ok(Verdict::Pass)
        }
        Command::Axioms { action } => {
            match action {
                AxiomsAction::List { suite } => {
                    let filter = suite.as_deref().map(str::parse::<Suite>).transpose()?;
                    for a in catalog::catalog()
                        .iter()
                        .filter(|a| filter.is_none_or(|s| a.suite == s))
                    {
                        println!("{:<36} {:<22} {}", a.id, a.suite.name(), a.citation);
                    }
                }
                AxiomsAction::Show { id } => show_axiom(id)?,
            }
            Ok(Verdict::Pass)
        }
        Command::Examples { action } => {
            match action {
                ExamplesAction::List => {
                    for (name, about) in library::EXAMPLES {
                        println!("{name:<20} {about}");
                    }
                }
                ExamplesAction::Emit { name, field, out } => {
                    let spec: FieldSpec = field.parse()?;
                    let model = example(name, spec)?;
                    write_output(out.as_deref(), &model.to_json())?;
                }
            }
            Ok(Verdict::Pass)
        }
    }
}

fn load(path: &Path, cap: usize) -> Result<AnyModel, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let model = parse(&text).map_err(|source| CliError::Schema { path: shown, source })?;
    let dims = with_model!(&model, m => m.b().dim * m.f().dim);
    let needed = dims * dims;
    if cap < needed {
        return Err(CliError::CapTooSmall { cap, needed });
    }
    Ok(model.with_cap(cap))
}

fn select_suites(name: &str) -> Result<Vec<Suite>, CatalogError> {
    if name == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![name.parse()?])
    }
}

fn example(name: &str, spec: FieldSpec) -> Result<AnyModel, CliError> {
    Ok(match spec {
        FieldSpec::Rationals => library::example(name, Rationals)?.into(),
        FieldSpec::PrimeField(p) => library::example(name, PrimeField::new(p)?)?.into(),
    })
}

fn show_axiom(id: &str) -> Result<(), CliError> {
    let a = catalog::axiom(id)?;
    // Boundaries depend only on generator types, so any model will do.
    let m = library::trivial(Rationals)?;
    let (dom, cod) = if a.suite.on_product() {
        let p = build_product(&m)?;
        boundary(&a.lhs, p.interpretation())
    } else {
        boundary(&a.lhs, m.interpretation()?)
    };
    println!("{}  ({})", a.id, a.citation);
    println!("boundary: {dom} -> {cod}");
    println!("lhs: {}", a.lhs);
    println!("rhs: {}", a.rhs);
    if !a.hypotheses.is_empty() {
        println!("hypotheses: {}", a.hypotheses.join(", "));
    }
    Ok(())
}

fn boundary(d: &Diagram, table: &impl SignatureTable) -> (String, String) {
    match d.infer_boundary(table) {
        Ok((dom, cod)) => (word_text(&dom), word_text(&cod)),
        Err(e) => (format!("<{e}>"), "?".to_string()),
    }
}

fn word_text(w: &wreathforge_core::Word) -> String {
    if w.is_empty() {
        "I".to_string()
    } else {
        w.iter().collect::<Vec<_>>().join(" ")
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".to_string(),
                source,
            }),
    }
}
