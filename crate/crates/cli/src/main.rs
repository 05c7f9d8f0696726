mod commands;
mod report;
mod tables;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Format, Outcome};

#[derive(Parser, Debug)]
#[command(name = "latinpoly", version, about = "Permutation polynomials, local permutation polynomials and Latin squares over GF(q)")]
struct Cli {
    /// Output format; csv is available for tabular results.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Lift the capacity guards (q = 11 censuses, 16-variable Gröbner bases).
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Groebner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Lex,
    Degrevlex,
}

#[derive(Args, Debug)]
pub struct CountPp {
    #[arg(long)]
    pub q: usize,
    /// Report only this degree.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Count monic PPs without constant term and multiply by q(q-1) (groebner only).
    #[arg(long)]
    pub normalized: bool,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct Census {
    #[arg(long)]
    pub q: usize,
    #[arg(long, conflicts_with = "reduced")]
    pub symmetric: bool,
    #[arg(long)]
    pub reduced: bool,
}

#[derive(Args, Debug)]
pub struct Groebner {
    /// pp, lpp, pp-deg, lpp-deg, symmetric or reduced.
    #[arg(long)]
    pub ideal: String,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub degree: Option<usize>,
    /// Defaults to degrevlex for pp ideals and lex for lpp ideals.
    #[arg(long, value_enum)]
    pub order: Option<Order>,
    /// Build J_q from all row and column generators instead of substituting into the basis of I_q.
    #[arg(long)]
    pub plain: bool,
    /// Stop after this many S-pair reductions.
    #[arg(long)]
    pub max_pairs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[arg(long)]
    pub poly: String,
    #[arg(long)]
    pub q: usize,
}

#[derive(Args, Debug)]
pub struct Reduce {
    #[arg(long)]
    pub poly: String,
    #[arg(long)]
    pub q: usize,
    /// Zero `a,b` of the polynomial (element codes); defaults to the least zero.
    #[arg(long)]
    pub at: Option<String>,
}

#[derive(Args, Debug)]
pub struct Isotopic {
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub g: String,
    #[arg(long)]
    pub q: usize,
}

#[derive(Args, Debug)]
pub struct Transversals {
    /// Latin square file: a `q=<n>` line followed by n rows of element codes.
    #[arg(long)]
    pub square: std::path::PathBuf,
}

#[derive(Args, Debug)]
pub struct VerifyTables {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub table: u8,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of permutation polynomials of each degree.
    CountPp(CountPp),
    /// Number of local permutation polynomials of each total degree.
    Census(Census),
    /// Reduced Gröbner basis, quotient dimension and small varieties of a named ideal.
    Groebner(Groebner),
    /// Isotopism classes of Latin squares of order q.
    Classify {
        #[arg(long)]
        q: usize,
    },
    /// Principal isotopy of an LPP to a reduced one.
    Reduce(Reduce),
    /// Complete mappings of an LPP.
    CompleteMappings(PolyArgs),
    /// Transversals of a Latin square.
    Transversals(Transversals),
    /// Search for an isotopism between two LPPs.
    Isotopic(Isotopic),
    /// The six conjugates of an LPP.
    Conjugates(PolyArgs),
    /// Recompute the census tables cell by cell.
    VerifyTables(VerifyTables),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = std::time::Instant::now();
    let large = cli.allow_large;
    let result = match &cli.command {
        Command::CountPp(a) => commands::count_pp(a, large),
        Command::Census(a) => commands::census(a),
        Command::Groebner(a) => commands::groebner(a, large),
        Command::Classify { q } => commands::classify(*q),
        Command::Reduce(a) => commands::reduce(a),
        Command::CompleteMappings(a) => commands::complete_mappings(a),
        Command::Transversals(a) => commands::transversals(a),
        Command::Isotopic(a) => commands::isotopic(a),
        Command::Conjugates(a) => commands::conjugates(a),
        Command::VerifyTables(a) => commands::verify_tables(a, large),
    };
    match result {
        Ok(outcome) => report::emit(&echo, start.elapsed(), cli.format, outcome),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

pub type CmdResult = latinpoly::Result<Outcome>;
