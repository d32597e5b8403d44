//! `rspin`: command-line front end for `rspin-core`.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Output;

#[derive(Debug, Parser)]
#[command(name = "rspin", version, about = "Spin structures, curve configurations and monodromy certificates")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect a lattice: signature, ledger, and optional classes.
    Lattice(LatticeArgs),
    /// Curve configurations.
    #[command(subcommand)]
    Config(ConfigCommand),
    /// Winding numbers and spin structures.
    #[command(subcommand)]
    Winding(WindingCommand),
    /// Assemblage certificates.
    #[command(subcommand)]
    Assemblage(AssemblageCommand),
    /// Milnor number and monomial basis of a plane germ.
    Milnor {
        /// Polynomial in `x`, `y`, e.g. "x^3+y^4".
        polynomial: String,
        /// Largest truncation degree tried.
        #[arg(long, default_value_t = rspin_core::milnor::DEFAULT_CEILING)]
        ceiling: u32,
    },
    /// Image of a braid word in Z^d.
    Psi {
        /// Word such as "m(1,2)^2 b(3) s(tag)".
        word: String,
        /// Number of points.
        #[arg(long)]
        d: usize,
    },
    /// Correction word cancelling an image vector.
    Mainlemma {
        /// Comma separated vector with even sum, length at least 6.
        #[arg(long, allow_hyphen_values = true, value_parser = input::parse_coords)]
        k: input::Coords,
        /// Points playing the roles of 1, 2, 3, ..; a permutation of 1..=d.
        #[arg(long, value_parser = input::parse_coords)]
        labels: Option<input::Coords>,
    },
    /// End-to-end monodromy report for `C + D` on a surface.
    Report(ReportArgs),
    /// Built-in surfaces.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false, args = ["file", "surface"])]
pub struct LatticeSource {
    /// Lattice description file.
    file: Option<std::path::PathBuf>,
    /// Catalog surface name, e.g. P2, F1, Bl3P2, K3_4.
    #[arg(long)]
    surface: Option<String>,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[command(flatten)]
    source: LatticeSource,
    /// Class to analyze (repeatable), e.g. "6" or "1,-1".
    #[arg(long = "class", allow_hyphen_values = true, value_parser = input::parse_coords)]
    classes: Vec<input::Coords>,
}

#[derive(Debug, Subcommand)]
enum ConfigCommand {
    /// Graph type, neighborhood invariants and spanning verdict.
    Analyze {
        file: std::path::PathBuf,
        /// Ambient surface as `genus,boundary`; overrides the file.
        #[arg(long, value_parser = input::parse_pair)]
        ambient: Option<(u32, u32)>,
    },
}

#[derive(Debug, Subcommand)]
enum WindingCommand {
    /// Apply a twist word and tabulate classes and windings.
    Act {
        file: std::path::PathBuf,
        /// Word overriding the one in the file, e.g. "a b^-1".
        #[arg(long)]
        word: Option<String>,
    },
    /// Count mod 2 quadratic forms by Arf invariant.
    Census {
        #[arg(long)]
        genus: u32,
    },
}

#[derive(Debug, Subcommand)]
enum AssemblageCommand {
    /// Certify an assemblage description.
    Run { file: std::path::PathBuf },
    /// Build and certify the standard assemblage for `(g_C, g_D, d)`.
    Standard {
        #[arg(long)]
        gc: u32,
        #[arg(long)]
        gd: u32,
        #[arg(long)]
        d: u32,
    },
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Catalog surface name.
    #[arg(long, conflicts_with = "lattice")]
    surface: Option<String>,
    /// Lattice description file.
    #[arg(long)]
    lattice: Option<std::path::PathBuf>,
    /// Class of C.
    #[arg(long = "C", allow_hyphen_values = true, value_parser = input::parse_coords)]
    c: input::Coords,
    /// Class of D.
    #[arg(long = "D", allow_hyphen_values = true, value_parser = input::parse_coords)]
    d: input::Coords,
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// Names of the built-in surfaces.
    List,
    /// Lattice, ledger and validation curves of one surface.
    Show { name: String },
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Lattice(args) => commands::lattice(args),
        Command::Config(ConfigCommand::Analyze { file, ambient }) => {
            commands::config_analyze(file, *ambient)
        }
        Command::Winding(WindingCommand::Act { file, word }) => {
            commands::winding_act(file, word.as_deref())
        }
        Command::Winding(WindingCommand::Census { genus }) => commands::census(*genus),
        Command::Assemblage(AssemblageCommand::Run { file }) => commands::assemblage_run(file),
        Command::Assemblage(AssemblageCommand::Standard { gc, gd, d }) => {
            commands::assemblage_standard(*gc, *gd, *d)
        }
        Command::Milnor {
            polynomial,
            ceiling,
        } => commands::milnor(polynomial, *ceiling),
        Command::Psi { word, d } => commands::psi(word, *d),
        Command::Mainlemma { k, labels } => commands::mainlemma(&k.0, labels.as_ref().map(|l| &l.0[..])),
        Command::Report(args) => commands::report(args),
        Command::Catalog(CatalogCommand::List) => commands::catalog_list(),
        Command::Catalog(CatalogCommand::Show { name }) => commands::catalog_show(name),
    }
}

fn error_kind(err: &anyhow::Error) -> &'static str {
    use rspin_core::Error as E;
    if let Some(e) = err.downcast_ref::<E>() {
        return match e {
            E::Picard(_) => "picard",
            E::Curve(_) => "curveconf",
            E::Winding(_) => "winding",
            E::Assemblage(_) => "assemblage",
            E::Milnor(_) => "milnor",
            E::Braid(_) => "braidcalc",
        };
    }
    if err.downcast_ref::<std::io::Error>().is_some() {
        "io"
    } else {
        "input"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Human => out.render_human(),
                Format::Machine => out.doc.render_machine(),
            };
            let _ = stdout.lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            let kind = error_kind(&err);
            let msg = format!("{err:#}");
            match cli.format {
                Format::Human => eprintln!("error ({kind}): {msg}"),
                Format::Machine => {
                    let mut doc = rspin_core::ReportDocument::new();
                    doc.push("error.kind", kind).push("error.message", msg);
                    eprint!("{}", doc.render_machine());
                }
            }
            ExitCode::from(1)
        }
    }
}
