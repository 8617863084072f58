mod commands;
mod num;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

/// Exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "lommel", version, about = "Lommel, Bessel and Struve functions and exponential-coefficient ODEs")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one function at one point, or on a polar grid with --csv.
    Eval(EvalArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Decide whether the solution f = e^{-Nz}[A J + B Y + sum sigma_j S] is subnormal.
    Classify(SpecArgs),
    /// Sample log log |f| / r along the growth sequence.
    Probe(ProbeArgs),
    /// One row of the quantization table.
    Table1(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    #[value(name = "J")]
    J,
    #[value(name = "Y")]
    Y,
    #[value(name = "H1")]
    H1,
    #[value(name = "H2")]
    H2,
    #[value(name = "s")]
    SmallS,
    #[value(name = "S")]
    BigS,
    #[value(name = "struveH")]
    StruveH,
    #[value(name = "struveK")]
    StruveK,
    #[value(name = "neumannO")]
    NeumannO,
    #[value(name = "gegenbauerA")]
    GegenbauerA,
    #[value(name = "schlafliS")]
    SchlafliS,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,
    /// RE[,IM]
    #[arg(long, value_parser = num::parse_complex, allow_hyphen_values = true)]
    pub mu: Option<lommel::C64>,
    /// RE[,IM]
    #[arg(long, value_parser = num::parse_complex, allow_hyphen_values = true)]
    pub nu: Option<lommel::C64>,
    /// polynomial index
    #[arg(long)]
    pub n: Option<u32>,
    /// logarithm of the point, RE,IM (any sheet)
    #[arg(long, value_parser = num::parse_complex, allow_hyphen_values = true, conflicts_with = "zeta")]
    pub w: Option<lommel::C64>,
    /// the point itself, RE,IM (principal sheet)
    #[arg(long, value_parser = num::parse_complex, allow_hyphen_values = true)]
    pub zeta: Option<lommel::C64>,
    /// evaluate at zeta e^{-M pi i}
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub branch: i64,
    /// print a CSV grid instead of JSON; the grid is --radii x --args
    #[arg(long, requires_all = ["radii", "args"])]
    pub csv: bool,
    /// R0,R1,COUNT (geometric spacing)
    #[arg(long)]
    pub radii: Option<String>,
    /// T0,T1,COUNT (uniform spacing of arg zeta)
    #[arg(long)]
    pub args: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: lommel::verify::Suite,
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// replaces every tolerance of the suite
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    #[arg(long = "L", value_parser = num::parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub l: lommel::C64,
    #[arg(long = "M", value_parser = num::parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub m: lommel::C64,
    #[arg(long = "N", value_parser = num::parse_complex, allow_hyphen_values = true, default_value = "0")]
    pub n: lommel::C64,
    #[arg(long, value_parser = num::parse_complex, allow_hyphen_values = true, default_value = "0")]
    pub nu: lommel::C64,
    /// "mu1:sigma1;mu2:sigma2", complex parts as RE[,IM]
    #[arg(long, default_value = "")]
    pub forcing: String,
    #[arg(long = "A", value_parser = num::parse_complex, allow_hyphen_values = true, default_value = "0")]
    pub a: lommel::C64,
    #[arg(long = "B", value_parser = num::parse_complex, allow_hyphen_values = true, default_value = "0")]
    pub b: lommel::C64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProbeFunction {
    /// the solution described by the spec flags
    #[value(name = "spec")]
    Spec,
    /// Struve function H_nu(L e^{Mz}); uses --nu, --L, --M only
    #[value(name = "struveH")]
    StruveH,
}

#[derive(Args, Debug)]
pub struct ProbeArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long = "n-max", default_value_t = 8)]
    pub n_max: u32,
    #[arg(long = "fn", value_enum, default_value = "spec")]
    pub function: ProbeFunction,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub case: u8,
    #[arg(long)]
    pub p: u32,
    #[arg(long, value_parser = num::parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub sigma: lommel::C64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Ok(v) = std::env::var("LOMMEL_TERM_CAP") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => lommel::logpoint::set_term_cap(n),
            _ => {
                eprintln!("error: LOMMEL_TERM_CAP must be a positive integer, got {v:?}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    ExitCode::from(commands::run(cli.command))
}
