use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use island_census::census::{census, DEFAULT_ORACLE_CAP};
use island_census::generators::{generate, GenSpec};
use island_census::identities::{moment, poly_sum, vandermonde_rank};
use island_census::io::{census_csv, census_json, parse_points, write_points};
use island_census::report::all_pass;
use island_census::space::census3;
use island_census::tuples::count_tr;
use island_census::verify::{context_for, verify_generated, verify_set, Options, Suite};
use island_census::{CensusTable, PointSet};

#[derive(Parser)]
#[command(name = "island-census", version, about = "Exact census of convex polygons with interior-point counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the census X[k,l] with derived alternating sums.
    Census {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the identity and inequality battery on a file or generated sets.
    Verify {
        file: Option<PathBuf>,
        /// Generator spec, e.g. random:n=9,seed=7 or horton:n=16.
        #[arg(long, conflicts_with = "file")]
        gen: Option<String>,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Overrides the generator seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Write a generated point set.
    Gen {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count edge tuples T_r and compare with the alternating moment M_r.
    Tr {
        file: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Evaluate sum_{k,l} x^k (1+x)^l X[k,l].
    Poly {
        file: PathBuf,
        /// Rational as p/q or an integer.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Rank of the polynomial-sum equations on the empty-polygon columns.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

/// Verification failed; everything else that goes wrong is an input error.
#[derive(Debug)]
struct Failed;

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for Failed {}

fn load(path: &Path) -> anyhow::Result<PointSet> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_points(&text).with_context(|| format!("parsing {}", path.display()))
}

fn table_of(set: &PointSet) -> anyhow::Result<CensusTable> {
    Ok(match set.dim() {
        2 => census(set)?,
        _ => census3(set, DEFAULT_ORACLE_CAP)?,
    })
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("ISLAND_CENSUS_THREADS") else { return Ok(()) };
    let threads: usize = raw.trim().parse().with_context(|| format!("ISLAND_CENSUS_THREADS={raw}"))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    configure_threads()?;
    match cli.command {
        Command::Census { file, format } => {
            let table = table_of(&load(&file)?)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&census_json(&table))?),
                Format::Csv => print!("{}", census_csv(&table)),
            }
        }
        Command::Verify { file, gen, suite, oracle_cap, trials, seed } => {
            let suite: Suite = suite.parse()?;
            let opts = Options { oracle_cap, ..Options::default() };
            let reports = match (file, gen) {
                (Some(path), None) => {
                    let set = load(&path)?;
                    verify_set(&set, suite, &context_for(&set, None, path.display().to_string()), &opts)?
                }
                (None, Some(spec)) => {
                    let mut spec: GenSpec = spec.parse()?;
                    if let Some(s) = seed {
                        spec.seed = s;
                    }
                    verify_generated(&spec, suite, trials, &opts)?
                }
                _ => bail!("give a point file or --gen"),
            };
            for r in &reports {
                println!("{r}");
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            println!(
                "{} checks, {} failed (suite={suite:?}, trials={trials}, oracle-cap={oracle_cap})",
                reports.len(),
                failed
            );
            if !all_pass(&reports) {
                return Err(Failed.into());
            }
        }
        Command::Gen { spec, out } => {
            let spec: GenSpec = spec.parse()?;
            let generated = generate(&spec)?;
            let mut comments = vec![spec.to_string()];
            if let Some((e, f)) = generated.edges {
                comments.push(format!("e = {} {}", e.p, e.q));
                comments.push(format!("f = {} {}", f.p, f.q));
            }
            let text = write_points(&generated.set, &comments);
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Tr { file, r } => {
            let set = load(&file)?;
            let tr = count_tr(&set, r)? as i128;
            let m = moment(&census(&set)?, r);
            let verdict = if m == -tr { "OK" } else { "MISMATCH" };
            println!("T_{r} = {tr}; M_{r} = {m}; M_{r} = -T_{r} {verdict}");
            if m != -tr {
                return Err(Failed.into());
            }
        }
        Command::Poly { file, x } => {
            let x: BigRational = x.parse().map_err(|_| anyhow::anyhow!("bad rational `{x}`; expected p/q"))?;
            let table = table_of(&load(&file)?)?;
            println!("{}", poly_sum(&table, &x));
        }
        Command::Rank { n, dim } => {
            if n <= dim {
                bail!("need n > {dim}");
            }
            let xs: Vec<BigRational> = (1..=(n - dim) as i64).map(|x| BigRational::from_integer(x.into())).collect();
            let rank = vandermonde_rank(n, dim, &xs)?;
            println!("rank = {rank} = n-{}", n - rank);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Failed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
