use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use suspfactor::examples::{build, expected_fixtures, ExampleParams};
use suspfactor::exactreal::{parse_rational, set_start_precision};
use suspfactor::factormap::{length_coincidence_scan, locality_witness};
use suspfactor::render::{patch_pair, render, Format};
use suspfactor::sampling::Sampler;
use suspfactor::symbolic::{genericity_check, Genericity};
use suspfactor::{verify, Error, QLin, SuspensionPoint, SymbolicPoint};

const WITNESS_SEED: u64 = 7;
const WITNESS_PROBES: usize = 200;

#[derive(Parser)]
#[command(name = "suspfactor", version, about = "Exact factor maps between one-dimensional tiling systems")]
struct Cli {
    /// Starting enclosure width for comparisons, as a rational.
    #[arg(long, env = "SUSPFACTOR_PRECISION", global = true, value_parser = parse_rational)]
    precision: Option<BigRational>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite of an example and print a JSON report.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        example: u8,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock duration (makes the report non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Search for two points with a common window and different images.
    Witness {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        example: u8,
        #[arg(long)]
        radius: usize,
    },
    /// Scan integer combinations of tile lengths for coincidences.
    Lengths {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        example: u8,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
    },
    /// Render a source patch and its image.
    Render {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        example: u8,
        #[arg(long, value_parser = parse_rational)]
        rho: BigRational,
        #[arg(long, value_parser = parse_rational, default_value = "0")]
        s: BigRational,
        /// Half-width of the patch.
        #[arg(long = "L", value_parser = parse_rational, default_value = "3")]
        half_width: BigRational,
        #[arg(long, value_enum, default_value_t = RenderFormat::Text)]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the expected value sets of an example.
    Fixtures {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        example: u8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Svg,
    Text,
    Json,
}

impl From<RenderFormat> for Format {
    fn from(f: RenderFormat) -> Format {
        match f {
            RenderFormat::Svg => Format::Svg,
            RenderFormat::Text => Format::Text,
            RenderFormat::Json => Format::Json,
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if let Some(p) = &cli.precision {
        if !QLin::rational(p.clone()).is_positive() {
            eprintln!("precision must be positive");
            return Ok(ExitCode::from(2));
        }
        set_start_precision(p);
    }
    let params = ExampleParams::default();
    match cli.command {
        Command::Verify {
            example,
            samples,
            seed,
            out,
            timing,
        } => {
            let started = Instant::now();
            let mut report = verify::run(example, samples, seed)?;
            if timing {
                report.duration_secs = Some(started.elapsed().as_secs_f64());
            }
            emit(&(report.to_json() + "\n"), out.as_ref())?;
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Witness { example, radius } => {
            let bundle = build(example, &params)?;
            let mut sampler = Sampler::new(WITNESS_SEED);
            match locality_witness(&bundle.code, radius, WITNESS_PROBES, &mut sampler) {
                Ok(Some(w)) => emit(&pretty(&w), None)?,
                Ok(None) => emit("none\n", None)?,
                Err(Error::NotPlain) => {
                    eprintln!("example {example} has a doubled source; windows are not defined");
                    return Ok(ExitCode::from(2));
                }
                Err(e) => return Err(e.into()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lengths { example, bound } => {
            let f = expected_fixtures(example, &params)?;
            let found = length_coincidence_scan(&f.source_lengths, &f.target_lengths, bound)?;
            emit(
                &pretty(&json!({
                    "example": example,
                    "bound": bound,
                    "source_lengths": f.source_lengths,
                    "target_lengths": f.target_lengths,
                    "count": found.len(),
                    "coincidences": found,
                })),
                None,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            example,
            rho,
            s,
            half_width,
            format,
            out,
        } => {
            let bundle = build(example, &params)?;
            let half_width = QLin::rational(half_width);
            if !half_width.is_positive() {
                eprintln!("--L must be positive");
                return Ok(ExitCode::from(2));
            }
            let rho = QLin::rational(rho);
            if rho.is_negative() || rho >= QLin::one() {
                eprintln!("--rho must lie in [0, 1)");
                return Ok(ExitCode::from(2));
            }
            if let Genericity::Conflict(c) = genericity_check(&rho, bundle.source().system()) {
                eprintln!("rho = {rho} is not generic: step {} reaches boundary {}", c.n, c.boundary);
                return Ok(ExitCode::from(3));
            }
            let x = SymbolicPoint::ground(bundle.source().system().clone(), rho)?;
            let pair = patch_pair(&bundle.code, &SuspensionPoint::new(x, QLin::rational(s)), &half_width)?;
            emit(&render(&pair, format.into()), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { example } => {
            emit(&pretty(&expected_fixtures(example, &params)?), None)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<Error>() {
                Some(Error::BoundaryHit { .. }) => ExitCode::from(3),
                Some(Error::InvalidPoint(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
