//! `orddiv` command-line front end.
//!
//! Exit status: 0 success / verdict true / feasible / conjecture held;
//! 1 verdict false / infeasible / counterexample found; 2 usage or
//! precondition error; 3 enumeration or search bound exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use orddiv::conjecture::{sweep_conjecture, SearchOptions, DEFAULT_SEARCH_BOUND};
use orddiv::existence::{exists_bijection, realize_bijection_bounded};
use orddiv::maps::{dihedral_paper_map, product_paper_map};
use orddiv::render::{render_existence, render_spectrum, render_sweep, render_verification, OutputFormat};
use orddiv::{ComparisonMode, Error, GroupSpec, LinearMapSpec, DEFAULT_ENUMERATION_BOUND};

#[derive(Parser)]
#[command(name = "orddiv", version, about = "Order-dividing bijections between finite groups")]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    format: OutputFormat,

    /// Raise the enumeration bound (group order) or, for `conjecture`, the
    /// largest n searched.
    #[arg(long, global = true)]
    bound: Option<u64>,

    /// Write the report to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the order spectrum of a group, e.g. `Z6`, `D8`, `Q12`, `Z3xZ6`.
    Spectrum { group: String },

    /// Build and verify one of the explicit linear maps.
    Map {
        #[command(subcommand)]
        kind: MapKind,
    },

    /// Verify f(s^a r^b) = x a + y b on D_2n -> Z_2n for arbitrary x, y.
    Verify {
        /// Half the dihedral order: the domain is D_2n.
        #[arg(long)]
        n: u64,
        /// Coefficient of a (any integer, reduced mod 2n).
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        /// Coefficient of b (any integer, reduced mod 2n).
        #[arg(long, allow_hyphen_values = true)]
        y: i64,
        #[arg(long, value_enum, default_value_t = ComparisonMode::Divides)]
        mode: ComparisonMode,
    },

    /// Decide whether a bijection respecting the mode exists between two
    /// groups of equal order.
    Exists {
        /// Source group descriptor.
        source: String,
        /// Target group descriptor.
        target: String,
        #[arg(long, value_enum, default_value_t = ComparisonMode::Divides)]
        mode: ComparisonMode,
        /// Also print an explicit element-level bijection.
        #[arg(long)]
        realize: bool,
    },

    /// Search all coefficient pairs for swapped order-dividing bijections.
    Conjecture {
        /// Smallest n searched (at least 2).
        #[arg(long)]
        n_min: u64,
        /// Largest n searched.
        #[arg(long)]
        n_max: u64,
        /// Worker threads; output does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum MapKind {
    /// f(s^a r^b) = k a + 2 b on D_2n -> Z_2n (k odd).
    Dihedral {
        /// Half the dihedral order: the domain is D_2n.
        #[arg(long)]
        n: u64,
        /// Odd multiplier of a.
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = ComparisonMode::Divides)]
        mode: ComparisonMode,
    },
    /// f((a, b)) = m k a + p b on Z_p x Z_kp -> Z_kp^2.
    Product {
        /// Odd prime.
        #[arg(long)]
        p: u64,
        /// Positive integer coprime to p.
        #[arg(long)]
        k: u64,
        /// Unit mod p scaling the first coordinate.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = ComparisonMode::Divides)]
        mode: ComparisonMode,
    },
}

struct Outcome {
    text: String,
    success: bool,
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let format = cli.common.format;
    let bound = cli.common.bound.unwrap_or(DEFAULT_ENUMERATION_BOUND);
    match cli.command {
        Command::Spectrum { group } => {
            let g: GroupSpec = group.parse()?;
            let spectrum = g.order_spectrum_bounded(bound)?;
            Ok(Outcome {
                text: render_spectrum(&g, &spectrum, format),
                success: true,
            })
        }
        Command::Map { kind } => {
            let (map, mode) = match kind {
                MapKind::Dihedral { n, k, mode } => (dihedral_paper_map(n, k)?, mode),
                MapKind::Product { p, k, m, mode } => (product_paper_map(p, k, m)?, mode),
            };
            let report = map.verify_bounded(mode, bound)?;
            Ok(Outcome {
                success: report.verdict,
                text: render_verification(&report, format),
            })
        }
        Command::Verify { n, x, y, mode } => {
            let map = LinearMapSpec::new(GroupSpec::dihedral(n)?, x, y)?;
            let report = map.verify_bounded(mode, bound)?;
            Ok(Outcome {
                success: report.verdict,
                text: render_verification(&report, format),
            })
        }
        Command::Exists {
            source,
            target,
            mode,
            realize,
        } => {
            let src: GroupSpec = source.parse()?;
            let dst: GroupSpec = target.parse()?;
            if src.order() != dst.order() {
                return Err(Error::Precondition(format!(
                    "{src} has order {} but {dst} has order {}",
                    src.order(),
                    dst.order()
                )));
            }
            let cert = exists_bijection(
                &src.order_spectrum_bounded(bound)?,
                &dst.order_spectrum_bounded(bound)?,
                mode,
            )?;
            let realized = if realize && cert.feasible {
                Some(realize_bijection_bounded(&src, &dst, &cert, bound)?)
            } else {
                None
            };
            Ok(Outcome {
                success: cert.feasible,
                text: render_existence(&src, &dst, &cert, realized.as_ref(), format),
            })
        }
        Command::Conjecture { n_min, n_max, jobs } => {
            let options = SearchOptions {
                bound: cli.common.bound.unwrap_or(DEFAULT_SEARCH_BOUND),
                jobs,
            };
            let sweep = sweep_conjecture(n_min, n_max, &options)?;
            Ok(Outcome {
                success: sweep.conjecture_holds(),
                text: render_sweep(&sweep, format),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.common.output.clone();
    match run(cli) {
        Ok(outcome) => {
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &outcome.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", outcome.text),
            }
            ExitCode::from(if outcome.success { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Resource { .. } => 3,
                _ => 2,
            })
        }
    }
}
