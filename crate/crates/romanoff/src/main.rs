//! Command-line front end. Every subcommand is a thin wrapper over the
//! library; numeric output always equals the corresponding library call.
//!
//! Exit codes: 0 success, 2 usage, 3 resource (or I/O), 4 domain/range.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use romanoff::analysis;
use romanoff::bsets::{self, BSetSpec};
use romanoff::report::{render, OutputFormat};
use romanoff::sieve::{PrimeTable, SieveOptions};
use romanoff::sumset;
use romanoff::Error;

const MEMORY_BUDGET_ENV: &str = "ROMANOFF_MEMORY_BUDGET";

#[derive(Parser)]
#[command(
    name = "romanoff",
    version,
    about = "Prime sumsets S = {p + b}: sieving, B-set constructions, and diagnostics"
)]
struct Cli {
    /// Sieve bound (inferred from the arguments when omitted)
    #[arg(long, global = true)]
    limit: Option<u64>,

    /// Sieving segment size in bits, in [4096, 16777216]
    #[arg(long, global = true, default_value_t = 1 << 18)]
    segment_bits: usize,

    /// Memory budget in bytes for the prime table
    /// (env ROMANOFF_MEMORY_BUDGET overrides the default)
    #[arg(long, global = true)]
    memory_budget: Option<u64>,

    /// Output format
    #[arg(long, global = true, default_value = "csv")]
    format: String,

    /// Write output atomically to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Emit the CSV header line
    #[arg(long, global = true)]
    header: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print pi(x), theta(x), and Mertens products for requested x
    Sieve {
        /// Comma-separated x values for pi(x)
        #[arg(long, value_name = "LIST")]
        pi: Option<String>,
        /// Comma-separated x values for theta(x)
        #[arg(long, value_name = "LIST")]
        theta: Option<String>,
        /// Comma-separated y values for prod_{p<=y}(1 - 1/p)
        #[arg(long, value_name = "LIST")]
        mertens: Option<String>,
    },
    /// Prime-pair counts pi_2(x, h) with the sieve-bound reference value
    Pairs {
        #[arg(long)]
        x: u64,
        /// Comma-separated even gaps
        #[arg(long, value_name = "LIST")]
        h: String,
    },
    /// Count, enumerate, or describe a B-set
    Bset {
        #[command(flatten)]
        spec: SpecArgs,
        /// Count or enumerate B up to this x
        #[arg(long)]
        x: Option<u64>,
        /// Print |B ∩ [1, x]| (the default action)
        #[arg(long)]
        count: bool,
        /// Stream the members of B ∩ [1, x], one per line
        #[arg(long)]
        enumerate: bool,
        /// Emit block rows j,d_j,lo,hi,cardinality (block construction only)
        #[arg(long)]
        blocks: bool,
        /// With --blocks or --j0: largest block index
        #[arg(long)]
        jmax: Option<u32>,
        /// Report the smallest j0 with strictly increasing block sizes
        #[arg(long)]
        j0: bool,
    },
    /// Measured c-condition ratios B(cx)/B(x) over a grid
    Ccond {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        c: f64,
        #[arg(long, value_name = "LIST")]
        grid: String,
    },
    /// Moment statistics M1, M2, S_alpha, S with the Cauchy-Schwarz bound
    Moments {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        alpha: f64,
    },
    /// Second-moment pipeline over a grid: CS lower bound vs x/logloglog x
    Thm1 {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_name = "LIST")]
        grid: String,
    },
    /// Block-construction pipeline: B(x) lower bound, S(x), pair partition
    Thm2 {
        /// Block parameter m >= 2
        #[arg(long)]
        m: u32,
        #[arg(long, value_name = "LIST")]
        grid: String,
        /// Partition cutoff s (default: the (ln ln x)^(1/2m) formula, clamped)
        #[arg(long)]
        s: Option<u32>,
        /// Emit bare partition rows (m,s,x,ell,part1..3,bound1..3,total_pairs)
        #[arg(long)]
        partition: bool,
    },
    /// Scan odd n for numbers with no representation p + 2^k
    Polignac {
        /// Inclusive odd range, e.g. 5..1000
        #[arg(long, value_name = "A..B")]
        odd_range: String,
        /// Disallow 2^0 = 1 as a summand
        #[arg(long)]
        no_zero_exponent: bool,
    },
}

/// B-set selection shared by bset/ccond/moments/thm1.
#[derive(Args)]
struct SpecArgs {
    /// B = {2^k}
    #[arg(long)]
    powers_of_two: bool,
    /// B = {2^(a^2)}
    #[arg(long)]
    two_pow_squares: bool,
    /// B = the primorial-block construction (requires --m)
    #[arg(long)]
    theorem2: bool,
    /// Block parameter m >= 2 (with --theorem2)
    #[arg(long)]
    m: Option<u32>,
    /// Explicit B-set file: one integer per line, ascending, # comments
    #[arg(long, value_name = "PATH")]
    explicit: Option<PathBuf>,
    /// Exclude exponent 0 (b = 1) from the power families
    #[arg(long)]
    no_zero_exponent: bool,
}

struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::Resource(_) | Error::Io(_) => 3,
            Error::Domain(_)
            | Error::Range(_)
            | Error::Input { .. }
            | Error::PrimorialOverflow { .. }
            | Error::BlockOverflow { .. } => 4,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl SpecArgs {
    fn to_spec(&self) -> Result<BSetSpec, Failure> {
        let include_zero = !self.no_zero_exponent;
        let mut picked: Vec<BSetSpec> = Vec::new();
        if self.powers_of_two {
            picked.push(BSetSpec::powers_of_two(include_zero));
        }
        if self.two_pow_squares {
            picked.push(BSetSpec::two_pow_squares(include_zero));
        }
        if self.theorem2 {
            let m = self.m.ok_or_else(|| usage("--theorem2 requires --m"))?;
            picked.push(BSetSpec::primorial_blocks(m)?);
        }
        if let Some(path) = &self.explicit {
            picked.push(BSetSpec::explicit_from_file(path)?);
        }
        match picked.len() {
            1 => Ok(picked.pop().unwrap()),
            0 => Err(usage(
                "select a B-set: --powers-of-two, --two-pow-squares, --theorem2 --m M, or --explicit PATH",
            )),
            _ => Err(usage("select exactly one B-set family")),
        }
    }
}

fn parse_scalar(token: &str) -> Result<u64, Failure> {
    let token = token.trim();
    if let Ok(v) = token.parse::<u64>() {
        return Ok(v);
    }
    let v: f64 = token
        .parse()
        .map_err(|_| usage(format!("cannot parse {token:?} as an integer")))?;
    if !v.is_finite() || v < 0.0 || v.trunc() != v || v >= 9.22e18 {
        return Err(usage(format!(
            "{token:?} is not a representable nonnegative integer"
        )));
    }
    Ok(v as u64)
}

fn parse_list(list: &str) -> Result<Vec<u64>, Failure> {
    if list.trim().is_empty() {
        return Err(usage("empty value list"));
    }
    list.split(',').map(parse_scalar).collect()
}

fn parse_range(range: &str) -> Result<(u64, u64), Failure> {
    let (a, b) = range
        .split_once("..")
        .ok_or_else(|| usage(format!("range must look like A..B, got {range:?}")))?;
    let (a, b) = (parse_scalar(a)?, parse_scalar(b)?);
    if a > b {
        return Err(usage(format!("empty range {a}..{b}")));
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct QueryRow {
    query: String,
    value: String,
}

#[derive(Serialize)]
struct PairRow {
    x: u64,
    h: u64,
    count: u64,
    bound_rhs: f64,
    ratio: f64,
}

#[derive(Serialize)]
struct CountRow {
    count: u64,
}

#[derive(Serialize)]
struct MemberRow {
    b: u64,
}

#[derive(Serialize)]
struct J0Row {
    m: u32,
    jmax: u32,
    j0: u32,
}

#[derive(Serialize)]
struct PolignacRow {
    n: u64,
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            if let Err(f) = emit(&cli, &text) {
                eprintln!("romanoff: {}", f.msg);
                std::process::exit(f.code);
            }
        }
        Err(f) => {
            eprintln!("romanoff: {}", f.msg);
            std::process::exit(f.code);
        }
    }
}

/// Write the fully rendered output: stdout, or atomically (temp file +
/// rename) when --output is set, so a failed run never leaves partial data.
fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
            let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(std::path::Path::new(".")))
                .map_err(|e| Failure::from(Error::Io(e)))?;
            tmp.write_all(text.as_bytes())
                .map_err(|e| Failure::from(Error::Io(e)))?;
            tmp.persist(path)
                .map_err(|e| Failure::from(Error::Io(e.error)))?;
            Ok(())
        }
    }
}

fn build_table(cli: &Cli, needed: u64) -> Result<PrimeTable, Failure> {
    let limit = match cli.limit {
        Some(l) => {
            if l < 2 {
                return Err(usage(format!("--limit must be >= 2, got {l}")));
            }
            l
        }
        None => needed.max(1000),
    };
    let budget = cli
        .memory_budget
        .or_else(|| {
            std::env::var(MEMORY_BUDGET_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| SieveOptions::default().memory_budget_bytes);
    let opts = SieveOptions {
        segment_bits: cli.segment_bits,
        memory_budget_bytes: budget,
    };
    Ok(PrimeTable::build_with(limit, &opts)?)
}

fn format_of(cli: &Cli) -> Result<OutputFormat, Failure> {
    cli.format.parse::<OutputFormat>().map_err(|_| {
        usage(format!(
            "--format must be csv or jsonl, got {:?}",
            cli.format
        ))
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format = format_of(cli)?;
    let header = cli.header;
    match &cli.command {
        Command::Sieve { pi, theta, mertens } => {
            let pi = pi
                .as_deref()
                .map(parse_list)
                .transpose()?
                .unwrap_or_default();
            let theta = theta
                .as_deref()
                .map(parse_list)
                .transpose()?
                .unwrap_or_default();
            let mertens = mertens
                .as_deref()
                .map(parse_list)
                .transpose()?
                .unwrap_or_default();
            let needed = pi
                .iter()
                .chain(&theta)
                .chain(&mertens)
                .copied()
                .max()
                .ok_or_else(|| usage("sieve needs at least one of --pi, --theta, --mertens"))?;
            let table = build_table(cli, needed)?;
            let mut rows = Vec::new();
            for &x in &pi {
                rows.push(QueryRow {
                    query: format!("pi({x})"),
                    value: table.prime_count(x)?.to_string(),
                });
            }
            for &x in &theta {
                rows.push(QueryRow {
                    query: format!("theta({x})"),
                    value: format!("{:.6}", table.chebyshev_theta(x)?),
                });
            }
            for &y in &mertens {
                rows.push(QueryRow {
                    query: format!("mertens({y})"),
                    value: format!("{:.6}", table.mertens_product(y)?),
                });
            }
            Ok(render(&rows, format, header)?)
        }

        Command::Pairs { x, h } => {
            let gaps = parse_list(h)?;
            for &g in &gaps {
                if g == 0 || g % 2 != 0 {
                    return Err(usage(format!(
                        "pair gaps must be even and nonzero, got {g}"
                    )));
                }
            }
            let table = build_table(cli, *x)?;
            let rows: Vec<PairRow> = gaps
                .iter()
                .map(|&g| {
                    table.prime_pair_count(*x, g).map(|r| PairRow {
                        x: r.x,
                        h: r.h,
                        count: r.count,
                        bound_rhs: r.bound_rhs,
                        ratio: r.ratio(),
                    })
                })
                .collect::<Result<_, _>>()?;
            Ok(render(&rows, format, header)?)
        }

        Command::Bset {
            spec,
            x,
            count,
            enumerate,
            blocks,
            jmax,
            j0,
        } => {
            let spec = spec.to_spec()?;
            if *blocks || *j0 {
                let BSetSpec::PrimorialBlocks { m } = spec else {
                    return Err(usage("--blocks/--j0 apply to --theorem2 sets only"));
                };
                let jmax = jmax.ok_or_else(|| usage("--blocks/--j0 require --jmax"))?;
                let table = build_table(cli, 1000)?;
                if *j0 {
                    let r = bsets::find_j0(&table, m, jmax)?;
                    return Ok(render(&[J0Row { m, jmax, j0: r.j0 }], format, header)?);
                }
                let rows: Vec<bsets::Block> = (1..=jmax)
                    .map(|j| bsets::primorial_block(&table, m, j))
                    .collect::<Result<_, _>>()?;
                return Ok(render(&rows, format, header)?);
            }
            let x = x.ok_or_else(|| usage("--count/--enumerate require --x"))?;
            let table = build_table(cli, x)?;
            if *enumerate {
                let rows: Vec<MemberRow> = bsets::enumerate_bset(&table, &spec, x)?
                    .into_iter()
                    .map(|b| MemberRow { b })
                    .collect();
                Ok(render(&rows, format, header)?)
            } else {
                let _ = count; // counting is the default action
                let n = bsets::bset_count(&table, &spec, x)?;
                Ok(render(&[CountRow { count: n }], format, header)?)
            }
        }

        Command::Ccond { spec, c, grid } => {
            let spec = spec.to_spec()?;
            let grid = parse_list(grid)?;
            let needed = grid.iter().copied().max().unwrap_or(0);
            let table = build_table(cli, needed)?;
            let report = bsets::c_condition_report(&table, &spec, *c, &grid)?;
            Ok(render(&report.rows, format, header)?)
        }

        Command::Moments { spec, x, alpha } => {
            let spec = spec.to_spec()?;
            let table = build_table(cli, *x)?;
            let stats = sumset::moments(&table, &spec, *x, *alpha)?;
            Ok(render(&[stats], format, header)?)
        }

        Command::Thm1 { spec, alpha, grid } => {
            let spec = spec.to_spec()?;
            let grid = parse_list(grid)?;
            let needed = grid.iter().copied().max().unwrap_or(0);
            let table = build_table(cli, needed)?;
            let rows = analysis::moment_report(&table, &spec, *alpha, &grid)?;
            Ok(render(&rows, format, header)?)
        }

        Command::Thm2 {
            m,
            grid,
            s,
            partition,
        } => {
            let grid = parse_list(grid)?;
            let needed = grid.iter().copied().max().unwrap_or(0);
            let table = build_table(cli, needed)?;
            if *partition {
                let rows: Vec<analysis::PartitionReport> = grid
                    .iter()
                    .map(|&x| {
                        let s_x = match s {
                            Some(s) => *s,
                            None => analysis::default_s(x, *m).s,
                        };
                        analysis::pair_partition(&table, *m, s_x, x)
                    })
                    .collect::<Result<_, _>>()?;
                Ok(render(&rows, format, header)?)
            } else {
                let rows = analysis::construction_report(&table, *m, &grid, *s)?;
                Ok(render(&rows, format, header)?)
            }
        }

        Command::Polignac {
            odd_range,
            no_zero_exponent,
        } => {
            let (a, b) = parse_range(odd_range)?;
            if a < 5 {
                return Err(usage("polignac scan starts at odd n >= 5"));
            }
            let table = build_table(cli, b)?;
            let mut rows = Vec::new();
            let mut n = if a % 2 == 0 { a + 1 } else { a };
            while n <= b {
                if analysis::polignac_check(&table, n, !no_zero_exponent)?.is_empty() {
                    rows.push(PolignacRow { n });
                }
                n += 2;
            }
            Ok(render(&rows, format, header)?)
        }
    }
}
