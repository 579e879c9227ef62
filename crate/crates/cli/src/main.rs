use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::Outcome;

/// Multipliers, derivations and their complexes over finite-dimensional
/// commutative algebras, in exact rational arithmetic.
#[derive(Parser, Debug)]
#[command(name = "modan", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Highest cochain or form degree.
    #[arg(long, global = true, default_value_t = 3)]
    pub qmax: usize,
    /// Seed for every random sample.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of aligned tables.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Multiplier,
    Derivation,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum On {
    Algebra,
    Module,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the algebra and module axioms.
    Validate { file: PathBuf },
    /// Multipliers of the algebra.
    Multipliers { file: PathBuf },
    /// Multipliers of the module.
    ModuleMultipliers { file: PathBuf },
    /// Derivations of the algebra.
    Derivations { file: PathBuf },
    /// Derivations of the module.
    ModuleDerivations { file: PathBuf },
    /// A connection from a potential, or the componentwise lift.
    Connection {
        file: PathBuf,
        /// JSON potential; defaults to the workspace `potential` block.
        #[arg(long)]
        potential: Option<PathBuf>,
    },
    /// Transform a module multiplier or derivation by an automorphism.
    Gauge {
        file: PathBuf,
        /// JSON matrix, or `{"element": coords}` for multiplication by an element.
        #[arg(long)]
        g: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Target::Derivation)]
        target: Target,
        /// JSON pair `{module_op, algebra_op}`; defaults to every basis pair.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Cohomology of a complex.
    Cohomology {
        #[command(subcommand)]
        which: Complex,
    },
    /// Cartan's formula on every basis vector and basis form.
    CheckMagic {
        file: PathBuf,
        #[arg(long, value_enum)]
        on: Option<On>,
    },
    /// The contracting homotopy of the Euler derivation.
    Homotopy { file: PathBuf },
    /// Every invariant on the fixture and seeded random elements.
    Check { file: PathBuf },
    /// Recompute dimensions along an independent path and compare.
    Oracle {
        file: PathBuf,
        /// Largest total solution-space dimension the oracle accepts.
        #[arg(long, default_value_t = modan_core::oracle::DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Complex {
    Hochschild {
        file: PathBuf,
        /// `id`, or a JSON matrix file.
        #[arg(long, default_value = "id")]
        kappa: String,
        #[arg(long, value_enum)]
        on: Option<On>,
    },
    Derham {
        file: PathBuf,
        /// `id`, `lift`, `potential:<file>`, or a JSON matrix file.
        #[arg(long, default_value = "id")]
        kappa: String,
        #[arg(long, value_enum)]
        on: Option<On>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let outcome = match &cli.command {
        Command::Validate { file } => commands::validate(g, file),
        Command::Multipliers { file } => commands::multipliers(g, file),
        Command::ModuleMultipliers { file } => commands::module_multipliers(g, file),
        Command::Derivations { file } => commands::derivations(g, file),
        Command::ModuleDerivations { file } => commands::module_derivations(g, file),
        Command::Connection { file, potential } => commands::connection(g, file, potential.as_deref()),
        Command::Gauge { file, g: gfile, target, input } => commands::gauge(g, file, gfile.as_deref(), *target, input.as_deref()),
        Command::Cohomology { which: Complex::Hochschild { file, kappa, on } } => commands::hochschild(g, file, kappa, *on),
        Command::Cohomology { which: Complex::Derham { file, kappa, on } } => commands::derham(g, file, kappa, *on),
        Command::CheckMagic { file, on } => commands::check_magic(g, file, *on),
        Command::Homotopy { file } => commands::homotopy(g, file),
        Command::Check { file } => commands::check(g, file),
        Command::Oracle { file, cap } => commands::oracle(g, file, *cap),
    };
    finish(g, outcome)
}

fn finish(g: &Global, outcome: Outcome) -> ExitCode {
    match outcome {
        Outcome::Done(r) => {
            print!("{}", r.render(g.json));
            ExitCode::from(if r.ok { 0 } else { 1 })
        }
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
