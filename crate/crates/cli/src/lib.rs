//! `hopfsmith`: products of presentations, bialgebra checks, antipodes,
//! integrals, reconstruction and the proof skeleton, from the command line.

pub mod commands;
pub mod dot;
pub mod error;
pub mod load;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

pub use error::{CliError, Result};
pub use report::{exit_code, Check, RunReport, Status, EXIT_FAIL, EXIT_PASS, EXIT_UNKNOWN, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "hopfsmith", version, about = "Gray products, shears, antipodes and reconstruction")]
pub struct Cli {
    /// print a JSON report on stdout
    #[arg(long, global = true)]
    pub json: bool,
    /// leave the timing field out of reports
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// step budget for equality search
    #[arg(long, global = true, env = "HOPFSMITH_BUDGET")]
    pub budget: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gray tensor product of two presentations
    Gray {
        a: String,
        b: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Smash product of two pointed presentations
    Smash {
        a: String,
        b: String,
        #[arg(long)]
        point_a: Option<String>,
        #[arg(long)]
        point_b: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Per-dimension generator counts
    Census { input: String },
    /// Axioms, the four shears, Hopf flags and the universal shear
    ShearCheck { bialgebra: String },
    Antipode { bialgebra: String },
    Integrals { bialgebra: String },
    /// Reconstruct from a comodule family, or from the regular comodule of a bialgebra
    Reconstruct {
        input: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Check the interchange chain behind the invertible-shear argument
    ProofSkeleton {
        /// flip the inversion flag of this step
        #[arg(long)]
        mutate: Option<usize>,
        /// JSON array of {"gen", "inv"} replacing the built-in chain
        #[arg(long)]
        chain: Option<PathBuf>,
    },
}

fn execute(cli: &Cli, r: &mut RunReport) -> Result<()> {
    let budget = cli.budget.unwrap_or(polygraph_core::DEFAULT_BUDGET);
    match &cli.command {
        Command::Gray { a, b, out, dot } => {
            let (pa, _) = load::presentation(a)?;
            let (pb, _) = load::presentation(b)?;
            commands::gray(r, &pa, &pb, out.as_deref(), dot.as_deref())
        }
        Command::Smash { a, b, point_a, point_b, out, dot } => {
            let pa = load::pointed(a, point_a.as_deref())?;
            let pb = load::pointed(b, point_b.as_deref())?;
            commands::smash(r, &pa, &pb, out.as_deref(), dot.as_deref())
        }
        Command::Census { input } => {
            let (p, _) = load::presentation(input)?;
            commands::census(r, &p);
            Ok(())
        }
        Command::ShearCheck { bialgebra } => commands::shear_check(r, &load::bialgebra(bialgebra)?),
        Command::Antipode { bialgebra } => commands::antipode_cmd(r, &load::bialgebra(bialgebra)?),
        Command::Integrals { bialgebra } => commands::integrals_cmd(r, &load::bialgebra(bialgebra)?),
        Command::Reconstruct { input, depth } => match load::reconstruct_input(input)? {
            load::ReconstructInput::Bialgebra(b) => commands::reconstruct_bialgebra(r, &b, *depth),
            load::ReconstructInput::Family(mut f) => {
                f.depth = *depth;
                let fam = match f.into_family(load::resolve_bialgebra) {
                    Ok(fam) => fam,
                    Err(e @ tannaka::TannakaError::NotComodule(_)) => {
                        r.check(Check::new("family is usable", Status::Fail).detail(e.to_string()));
                        return Ok(());
                    }
                    Err(e) => return Err(e.into()),
                };
                commands::reconstruct_family(r, &fam)
            }
        },
        Command::ProofSkeleton { mutate, chain } => {
            let chain = match chain {
                Some(p) => {
                    let text = load::read(&p.display().to_string())?;
                    Some(serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?)
                }
                None => None,
            };
            commands::proof_skeleton(r, chain, *mutate, budget)
        }
    }
}

/// Parse `args` (program name first), run, print to `out` and `err`, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut report = RunReport::new(command);
    let start = Instant::now();
    if let Err(e) = execute(&cli, &mut report) {
        let _ = writeln!(err, "hopfsmith: {e}");
        return e.exit_code();
    }
    if !cli.no_timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let _ = if cli.json {
        writeln!(out, "{}", report.to_json())
    } else if let Command::Census { .. } = cli.command {
        writeln!(out, "{}", report.data["census"])
    } else {
        write!(out, "{}", report.prose())
    };
    report.exit_code()
}
