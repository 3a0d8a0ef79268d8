use clap::{Args, Parser, Subcommand, ValueEnum};
use seqcodes_core::Family;

#[derive(Parser, Debug)]
#[command(name = "seqcodes", version, about = "Binary cyclic codes from trace sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DistanceMode {
    Exact,
    None,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Exhaustive,
    Cyclic,
    Disjoint,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Counts,
    Lemmas,
    Duality,
    Sequences,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Bits,
    Support,
    Minpoly,
}

#[derive(Args, Debug, Clone)]
pub struct DistanceArgs {
    /// Compute the exact minimum distance, or report bounds only.
    #[arg(long, value_enum, default_value_t = DistanceMode::Exact)]
    pub distance: DistanceMode,

    /// Enumeration budget in codewords visited.
    #[arg(long, default_value_t = 1_000_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    pub engine: EngineArg,

    /// Random information sets tried before enumeration.
    #[arg(long, default_value_t = 2000)]
    pub probe_iterations: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build codes and report their parameters.
    Code {
        /// S, D or TangDing.
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Degree, or an inclusive range such as 4-8.
        #[arg(long, value_parser = parse_range)]
        m: (u32, u32),
        /// Exponent parameter of the trinomial family, or a range; all valid values if omitted.
        #[arg(long, value_parser = parse_range)]
        h: Option<(u32, u32)>,
        /// 0, 1, or both if omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        parity: Option<u8>,
        #[command(flatten)]
        distance: DistanceArgs,
    },
    /// Reproduce a distance table for even degrees up to --max-m.
    Table {
        /// 1: inverse-function family, 2: trinomial family.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(4..=26))]
        max_m: u32,
        #[command(flatten)]
        distance: DistanceArgs,
    },
    /// Run an invariant suite; exits with status 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..=26))]
        max_m: u32,
    },
    /// Print a sequence, its DFT support or its minimal polynomial.
    Seq {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=26))]
        m: u32,
        /// Selects the trinomial sequence; the inverse sequence if omitted.
        #[arg(long)]
        h: Option<u32>,
        #[arg(long, value_enum, default_value_t = Emit::Bits)]
        emit: Emit,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("'{t}': {e}"));
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}-{hi}"));
    }
    Ok((lo, hi))
}
