mod cache;
mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use umrow::mennicke::DEFAULT_GROUP_CAP;
use umrow::orbit::{DEFAULT_CONJ_DEPTH, DEFAULT_NODE_CAP};

#[derive(Parser, Debug)]
#[command(name = "umrow", version, about = "Unimodular rows, elementary orbits and orbit group tables over explicit rings")]
struct Cli {
    #[command(flatten)]
    budget: Budget,

    /// Directory holding cached orbit tables.
    #[arg(long, global = true, env = "UMROW_CACHE_DIR", value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Accepted for compatibility; JSON is the only output format.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// Search limits shared by every subcommand.
#[derive(Args, Debug, Clone, Copy)]
pub struct Budget {
    /// Maximum rows discovered by one orbit search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_CAP, value_name = "ROWS")]
    pub node_cap: usize,
    /// Maximum matrices enumerated when deciding elementary-group membership.
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP, value_name = "MATRICES")]
    pub group_cap: usize,
    /// Maximum length of conjugating words for relative generators.
    #[arg(long, global = true, default_value_t = DEFAULT_CONJ_DEPTH, value_name = "DEPTH")]
    pub conj_depth: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    E,
    Esp,
    ERel,
    EspRel,
}

/// Generator restrictions for orbit searches.
#[derive(Args, Debug, Clone)]
pub struct GeneratorArgs {
    /// Only use these parameters in generators (comma separated elements).
    #[arg(long, value_name = "ELEMS", conflicts_with = "no_generators")]
    pub params: Option<String>,
    /// Use no generators at all, so every orbit is a single row.
    #[arg(long)]
    pub no_generators: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide unimodularity of a row and report a witness.
    Um {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        row: String,
        /// Also test membership in Um_n(R, I) for this ideal.
        #[arg(long, value_name = "GENS")]
        ideal: Option<String>,
    },
    /// Compute an orbit, or decide whether a target row lies in it.
    Orbit {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        row: String,
        #[arg(long, value_enum, default_value_t = ModeArg::E)]
        mode: ModeArg,
        /// Ideal generators for the relative modes.
        #[arg(long, value_name = "GENS")]
        ideal: Option<String>,
        #[command(flatten)]
        generators: GeneratorArgs,
        /// Decide membership of this row instead of listing the orbit.
        #[arg(long, value_name = "ROW")]
        target: Option<String>,
    },
    /// Build (or load from the cache) the orbit group table of Um_n(R)/E_n(R).
    Table {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        n: usize,
        /// Skip reading and writing the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Compare the product of two classes with the nice target.
    Nice {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Mennicke symbol of (a, b), compared with another symbol.
    Mennicke {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// The symbol to compare with, as `a,b`.
        #[arg(long, default_value = "1,0", value_name = "A,B")]
        versus: String,
    },
    /// Compare the E_2m and ESp_2m orbits of a row.
    SympCompare {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Row of length 2m; defaults to e1.
        #[arg(long)]
        row: Option<String>,
        #[command(flatten)]
        generators: GeneratorArgs,
    },
    /// Stable range and stable dimension of a finite ring.
    Sr {
        #[arg(long)]
        ring: String,
    },
    /// Build R (+) I and check its structure maps.
    ExcisionDemo {
        #[arg(long)]
        ring: String,
        #[arg(long, value_name = "GENS")]
        ideal: String,
        /// A row congruent to e1 modulo I to lift.
        #[arg(long)]
        row: Option<String>,
    },
    /// Relative transitivity word for a row of Um_n(R, I).
    RelTrans {
        #[arg(long)]
        ring: String,
        #[arg(long, value_name = "GENS")]
        ideal: String,
        #[arg(long)]
        row: String,
    },
    /// Jacobson radical, and optionally a reduction of a row to e1 through R/J.
    Jacobson {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        row: Option<String>,
    },
    /// Product over R[X] and its comparison with the product of the constant terms.
    PolyNice {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        /// Degree bound for unimodularity witnesses.
        #[arg(long, value_name = "D")]
        degree: Option<usize>,
    },
    /// Replay a certificate file and compare with its claimed target.
    VerifyCert {
        #[arg(long)]
        file: PathBuf,
    },
    /// Inspect or empty the orbit-table cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CacheAction {
    List,
    Clear,
    Path,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Um { .. } => "um",
            Command::Orbit { .. } => "orbit",
            Command::Table { .. } => "table",
            Command::Nice { .. } => "nice",
            Command::Mennicke { .. } => "mennicke",
            Command::SympCompare { .. } => "symp-compare",
            Command::Sr { .. } => "sr",
            Command::ExcisionDemo { .. } => "excision-demo",
            Command::RelTrans { .. } => "rel-trans",
            Command::Jacobson { .. } => "jacobson",
            Command::PolyNice { .. } => "poly-nice",
            Command::VerifyCert { .. } => "verify-cert",
            Command::Cache { .. } => "cache",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let cache = cache::Cache::new(cli.cache_dir.clone());
    let outcome = commands::run(&cli.command, &cli.budget, &cache);
    ExitCode::from(output::emit(name, outcome))
}
