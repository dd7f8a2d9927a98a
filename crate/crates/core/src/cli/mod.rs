//! Command-line front end. [`run`] takes the argument list and standard
//! input and returns the exit status with the report text, so the thin
//! binary and the tests drive exactly the same code.
//!
//! Exit status 0 means success, 1 a verification finding (nonzero residue,
//! counterexample, count mismatch, reducible word) and 2 a usage or parse
//! error.

mod commands;
mod parse;

use std::io::Read;

use clap::{Args, Parser, Subcommand};

pub use parse::{parse_expression, Expression};

#[derive(Debug, Parser)]
#[command(name = "quatnorm", version, about = "Normal forms of quaternionic polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of each expression.
    Normalize(NormalizeArgs),
    /// Check whether every word of each expression is in normal form.
    CheckNormal(CheckNormalArgs),
    /// Print the closed-form Gröbner base, one `LEAD -> RHS` rule per line.
    Gb(GbArgs),
    /// Reduce every S-polynomial and generator modulo the closed-form base.
    VerifyGroebner(VerifyArgs),
    /// Evaluate each expression at seeded random quaternion vectors.
    ZeroTest(ZeroTestArgs),
    /// Compare normal-word counts from linear algebra and from the base.
    DimCheck(DimCheckArgs),
    /// Check the built-in identity corpus.
    Identities(IdentitiesArgs),
    /// Run bounded completion on the vector syzygies.
    Complete(CompleteArgs),
}

/// Expressions come from the command line, or one per nonempty stdin line.
#[derive(Debug, Args)]
struct Exprs {
    #[arg(allow_hyphen_values = true)]
    exprs: Vec<String>,
}

#[derive(Debug, Args)]
struct NormalizeArgs {
    #[arg(long)]
    vars: u32,
    /// Degree bound of the base; defaults to the input degree.
    #[arg(long)]
    max_deg: Option<usize>,
    #[command(flatten)]
    input: Exprs,
}

#[derive(Debug, Args)]
struct CheckNormalArgs {
    #[arg(long)]
    vars: u32,
    /// Use the multilinear base; every word must have distinct letters.
    #[arg(long)]
    multilinear: bool,
    #[command(flatten)]
    input: Exprs,
}

#[derive(Debug, Args)]
struct GbArgs {
    #[arg(long)]
    vars: u32,
    /// Defaults to max(3, vars).
    #[arg(long)]
    max_deg: Option<usize>,
    #[arg(long)]
    multilinear: bool,
    /// Normalize each right-hand side.
    #[arg(long)]
    tail_reduce: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    vars: u32,
    #[arg(long)]
    max_deg: usize,
    #[arg(long)]
    multilinear: bool,
}

#[derive(Debug, Args)]
struct ZeroTestArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    input: Exprs,
}

#[derive(Debug, Args)]
struct DimCheckArgs {
    #[arg(long)]
    vars: u32,
    /// Word length; required unless --multilinear.
    #[arg(long)]
    deg: Option<usize>,
    /// Count permutations of v1..vn instead of all words.
    #[arg(long)]
    multilinear: bool,
    #[arg(long, default_value_t = crate::oracle::DEFAULT_GUARD)]
    guard: usize,
}

#[derive(Debug, Args)]
struct IdentitiesArgs {
    #[arg(long, default_value_t = 6)]
    max_n: u32,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// One line per instance instead of one per identity.
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Args)]
struct CompleteArgs {
    #[arg(long)]
    vars: u32,
    #[arg(long)]
    max_deg: usize,
    #[arg(long, default_value_t = crate::rewrite::DEFAULT_RULE_CAP)]
    cap: usize,
    /// Also compare the lead set with the closed-form base.
    #[arg(long)]
    compare: bool,
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

impl Outcome {
    fn new(status: i32, output: String) -> Outcome {
        Outcome { status, output }
    }
}

/// Runs one command. `args` excludes the program name. Standard input is
/// read only by commands given no expression arguments.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("quatnorm")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            return Outcome::new(status, e.render().to_string());
        }
    };
    match commands::dispatch(cli.command, stdin) {
        Ok(o) => o,
        Err(e) => Outcome::new(2, format!("error: {e}\n")),
    }
}
