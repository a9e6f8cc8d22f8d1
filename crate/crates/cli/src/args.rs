use clap::{Args, Parser, Subcommand};

pub const DESCRIPTOR_ENV: &str = "KOSTANT_DESCRIPTOR";

#[derive(Debug, Parser)]
#[command(
    name = "kostant",
    version,
    about = "Kostant sections for the unitary Lie algebra u_n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Backend selection. Falls back to the JSON descriptor in `KOSTANT_DESCRIPTOR`
/// when `--backend` is absent.
#[derive(Debug, Clone, Args)]
pub struct RingArgs {
    /// ff | series | rational (or the long tag names)
    #[arg(long)]
    pub backend: Option<String>,
    /// Residue characteristic
    #[arg(long)]
    pub p: Option<u64>,
    /// Non-residue with w^2 = d
    #[arg(long)]
    pub d: Option<u64>,
    /// Series precision in powers of pi
    #[arg(long = "N")]
    pub precision: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct the section matrix for an invariant tuple and verify it
    Build {
        #[command(flatten)]
        ring: RingArgs,
        /// Rank; defaults to the length of the tuple
        #[arg(long)]
        n: Option<usize>,
        /// Invariant tuple (a_1, ..., a_n): inline JSON array or a file path
        #[arg(long)]
        a: String,
        /// Override the canonical trace-zero unit (inline JSON element)
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Test a matrix for membership in u_n
    Verify {
        #[command(flatten)]
        ring: RingArgs,
        /// Matrix: inline JSON or a file path
        #[arg(long)]
        matrix: String,
    },
    /// Draw seeded samples of u_n
    Sample {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a property campaign
    Campaign {
        #[command(flatten)]
        ring: RingArgs,
        /// identity | round-trip | membership | negative-control | oracle | lie-closure | char-poly
        #[arg(long)]
        campaign: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Symbolic characteristic-polynomial coefficients of the model matrix
    Oracle {
        #[arg(long)]
        n: usize,
    },
    /// Existence of a Kostant section for rank n and residue characteristic
    Exists {
        #[arg(long)]
        n: usize,
        /// Residue characteristic (0 for characteristic zero)
        #[arg(long = "char")]
        residue_char: u64,
    },
}
