//! Command-line front end: read or generate an inverse system, build and
//! export its resolution, run the verification checks, list annihilators.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gorlin::differentials::export;
use gorlin::ringcore::{monomials_of_degree, RatMatrix, MAX_VARS};
use gorlin::verify::{default_dmax, run_checks, Check};
use gorlin::{build_resolution, random_invsys, Error, InverseSystem, Polynomial};

const EXIT_FAIL: u8 = 1;
const EXIT_INADMISSIBLE: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "gorlin", version, about = "Explicit Gorenstein-linear resolutions from Macaulay inverse systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the resolution and write its matrices.
    Resolve {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the dump here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the resolution and run verification checks.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Exactness is checked in degrees 0..=DMAX (default 2n + d).
        #[arg(long)]
        dmax: Option<u32>,
        /// Comma-separated subset of: complex, betti, euler, exactness, ann, skeleton, duality, wlp.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a basis of ann(φ) in one degree, and compare with the columns of b₁.
    Ann {
        #[command(flatten)]
        source: Source,
        /// Degree of the annihilator piece (default n).
        #[arg(long)]
        degree: Option<u32>,
    },
}

/// Exactly one of --input or (--d, --n) must be given.
#[derive(Args, Debug)]
struct Source {
    /// Inverse system as JSON: {"d": .., "n": .., "coefficients": [[[exponents], "p/q"], ..]}.
    #[arg(long, conflicts_with_all = ["d", "n", "seed", "bound"], required_unless_present_all = ["d", "n"])]
    input: Option<PathBuf>,
    /// Number of variables for a random instance.
    #[arg(long, requires = "n", value_parser = clap::value_parser!(u64).range(3..=MAX_VARS as u64))]
    d: Option<u64>,
    /// Half of socle degree plus one, for a random instance.
    #[arg(long, requires = "d", value_parser = clap::value_parser!(u64).range(2..))]
    n: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random coefficients are drawn from [-bound, bound].
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    bound: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Cas,
}

/// Failure carrying its exit code.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Inadmissible(_)) { EXIT_INADMISSIBLE } else { EXIT_INPUT };
        Exit(code, e.to_string())
    }
}

fn load(source: &Source) -> Result<InverseSystem, Exit> {
    match (&source.input, source.d, source.n) {
        (Some(path), _, _) => Ok(InverseSystem::read_file(path).map_err(|e| Exit(EXIT_INPUT, format!("{}: {e}", path.display())))?),
        (None, Some(d), Some(n)) => Ok(random_invsys(d as usize, n as usize, source.seed, source.bound)?),
        _ => Err(Exit(EXIT_INPUT, "give --input PATH or both --d and --n".into())),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Exit> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Exit(EXIT_INPUT, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn resolve(source: &Source, format: Format, out: Option<&PathBuf>) -> Result<(), Exit> {
    let phi = load(source)?;
    let res = build_resolution(&phi)?;
    let dump = match format {
        Format::Text => export::to_text(&res),
        Format::Json => export::to_json(&res),
        Format::Cas => export::to_macaulay2(&res),
    };
    if out.is_some() {
        print!("{}", export::summary(&res));
    }
    emit(&dump, out)
}

fn verify(source: &Source, dmax: Option<u32>, checks: Option<&[String]>, format: Format, out: Option<&PathBuf>) -> Result<(), Exit> {
    let selected: Vec<Check> = match checks {
        Some(names) => names.iter().map(|s| s.parse()).collect::<Result<_, _>>()?,
        None => Check::ALL.to_vec(),
    };
    let phi = load(source)?;
    let res = build_resolution(&phi)?;
    let report = run_checks(&res, &selected, dmax.unwrap_or(default_dmax(res.d, res.n)));
    let text = match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => format!("{report}\n"),
        Format::Cas => return Err(Exit(EXIT_INPUT, "verify reports are text or json".into())),
    };
    emit(&text, out)?;
    if report.passed {
        Ok(())
    } else {
        Err(Exit(EXIT_FAIL, "some checks failed".into()))
    }
}

fn span_rank(polys: &[Polynomial], d: usize, j: u32) -> usize {
    let mons = monomials_of_degree(d, 1, j);
    if polys.is_empty() {
        return 0;
    }
    RatMatrix::from_rows(polys.iter().map(|p| mons.iter().map(|m| p.coeff(m)).collect()).collect()).rank()
}

fn ann(source: &Source, degree: Option<u32>) -> Result<(), Exit> {
    let phi = load(source)?;
    let j = degree.unwrap_or(phi.n() as u32);
    let oracle = phi.ann_degree(j);
    println!("ann(phi)_{j} from the catalecticant ({} generators):", oracle.len());
    for g in &oracle {
        println!("  {g}");
    }
    if j != phi.n() as u32 {
        return Ok(());
    }
    let res = match build_resolution(&phi) {
        Ok(r) => r,
        Err(e @ Error::Inadmissible(_)) => {
            println!("b_1 comparison skipped: {e}");
            return Err(Exit(EXIT_INADMISSIBLE, e.to_string()));
        }
        Err(e) => return Err(e.into()),
    };
    let b1 = res.matrix(1);
    let cols: Vec<Polynomial> = (0..b1.ncols()).map(|k| b1.get(0, k).clone()).collect();
    println!("columns of b_1 ({} generators):", cols.len());
    for g in &cols {
        println!("  {g}");
    }
    let both: Vec<Polynomial> = oracle.iter().chain(&cols).cloned().collect();
    let (ro, rb, rj) = (span_rank(&oracle, phi.d(), j), span_rank(&cols, phi.d(), j), span_rank(&both, phi.d(), j));
    let equal = ro == rb && rb == rj;
    println!("spans equal: {}", if equal { "yes" } else { "no" });
    if equal {
        Ok(())
    } else {
        Err(Exit(EXIT_FAIL, format!("span ranks: oracle {ro}, b_1 {rb}, joint {rj}")))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Resolve { source, format, out } => resolve(source, *format, out.as_ref()),
        Command::Verify { source, dmax, checks, format, out } => verify(source, *dmax, checks.as_deref(), *format, out.as_ref()),
        Command::Ann { source, degree } => ann(source, *degree),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
