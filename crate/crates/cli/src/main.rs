use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cfheight::verify::{run_suite, Suite, SuiteOptions};
use cfheight::{
    brute_force_h, cf_height, family_limit, family_points, render_significant, write_points,
    write_scan, CfExpansion, Error, FamilyKind, FamilySpec, HeightResult, OutputFormat,
    ReducedFraction, ScanConfig, ScanMethod, SIGNIFICANT_DIGITS,
};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

/// Heights on the finite projective line, computed exactly.
#[derive(Debug, Parser)]
#[command(name = "cfheight", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print H(r/m) by brute force and by the convergent formula.
    Height {
        #[arg(value_name = "R/M")]
        fraction: ReducedFraction,
    },
    /// Print the continued fraction, convergent table and intermediants of r/m.
    Cf {
        #[arg(value_name = "R/M")]
        fraction: ReducedFraction,
    },
    /// Emit (m, r, H) for every reduced r/m in a denominator range.
    Scan {
        #[arg(long, default_value_t = 2)]
        min_den: u64,
        #[arg(long, default_value_t = 200)]
        max_den: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Write to PATH instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
    /// Emit the points of a family converging to 1/k, 0, or 1/max(b, c).
    #[command(group(ArgGroup::new("kind").required(true).args(["one_over_k", "zero", "quant"])))]
    Family {
        #[arg(long, value_name = "A1")]
        one_over_k: Option<u64>,
        #[arg(long)]
        zero: bool,
        #[arg(long, value_name = "A,B,C", value_parser = parse_triple)]
        quant: Option<(u64, u64, u64)>,
        #[arg(long, value_name = "T")]
        terms: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_den: Option<u64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Cf,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Tsv,
}

impl From<MethodArg> for ScanMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => ScanMethod::BruteForce,
            MethodArg::Cf => ScanMethod::CfFormula,
            MethodArg::Both => ScanMethod::Both,
        }
    }
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Tsv => OutputFormat::Tsv,
        }
    }
}

fn parse_triple(s: &str) -> Result<(u64, u64, u64), String> {
    let parts: Vec<u64> = s
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => Err(format!("expected A,B,C, got {s:?}")),
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

const USAGE: u8 = 2;
const FAILURE: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InvalidConfig(_)
                | Error::InvalidFamily(_)
                | Error::ZeroTermCount
                | Error::Malformed(_)
                | Error::NotCoprime { .. }
                | Error::OutOfRange { .. } => USAGE,
                _ => FAILURE,
            };
            ExitCode::from(code)
        }
    }
}

fn open_output(out: Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn decimal(x: &BigRational) -> String {
    render_significant(x, SIGNIFICANT_DIGITS)
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Height { fraction } => Ok(height(fraction)),
        Command::Cf { fraction } => {
            cf(fraction);
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            min_den,
            max_den,
            method,
            format,
            out,
            workers,
        } => {
            let cfg = ScanConfig {
                min_den,
                max_den,
                method: method.into(),
                format: format.into(),
                workers: workers as usize,
            };
            cfg.validate()?;
            let mut sink = open_output(out)?;
            let rows = write_scan(&cfg, &mut sink)?;
            sink.flush()?;
            eprintln!("{rows} rows");
            Ok(ExitCode::SUCCESS)
        }
        Command::Family {
            one_over_k,
            zero,
            quant,
            terms,
            format,
            out,
        } => {
            let kind = match (one_over_k, zero, quant) {
                (Some(a1), _, _) => FamilyKind::OneOverK { a1 },
                (_, true, _) => FamilyKind::Zero,
                (_, _, Some((a, b, c))) => FamilyKind::Quantitative { a, b, c },
                _ => unreachable!("clap requires one family kind"),
            };
            let spec = FamilySpec::new(kind, terms)?;
            let fam = family_points(&spec)?;
            let mut sink = open_output(out)?;
            write_points(&fam.points, format.into(), &mut sink)?;
            sink.flush()?;
            let limit = family_limit(&spec);
            eprintln!(
                "{} points, {} skipped, limit {limit} ≈ {}",
                fam.points.len(),
                fam.skipped,
                decimal(&limit)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_den,
            seed,
        } => {
            let opts = SuiteOptions {
                max_den,
                seed,
                ..SuiteOptions::default()
            };
            let report = run_suite(suite, &opts);
            println!("{report}");
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(FAILURE)
            })
        }
    }
}

fn describe(h: &HeightResult) -> String {
    format!(
        "H = {} ≈ {}, witness k={}",
        h.value,
        decimal(&h.value),
        h.witness_k
    )
}

fn height(f: ReducedFraction) -> ExitCode {
    let brute = brute_force_h(f);
    let cf = cf_height(f);
    println!("{}", describe(&brute));
    println!("  brute force: {}", describe(&brute));
    println!("  cf formula:  {}", describe(&cf));
    if brute.value != cf.value {
        eprintln!("error: methods disagree for {f}");
        return ExitCode::from(FAILURE);
    }
    ExitCode::SUCCESS
}

fn cf(f: ReducedFraction) {
    let e = CfExpansion::expand(f);
    let t = e.convergents();
    println!("{f} = {e}");
    println!("alternate form: {}", e.toggle_form());
    println!(
        "{:>4} {:>12} {:>12} {:>12}  intermediants",
        "k", "a_k", "p_k", "q_k"
    );
    for k in -2..=t.n() as i64 {
        let a = if k >= 0 {
            t.quotient(k as usize).to_string()
        } else {
            String::new()
        };
        let inter = if k >= 1 {
            let v = t.intermediants(k as usize).expect("1 <= k <= n");
            let shown: Vec<String> = if v.len() > 8 {
                v[..3]
                    .iter()
                    .map(ToString::to_string)
                    .chain(std::iter::once("...".to_string()))
                    .chain(v[v.len() - 2..].iter().map(ToString::to_string))
                    .collect()
            } else {
                v.iter().map(ToString::to_string).collect()
            };
            shown.join(" ")
        } else {
            String::new()
        };
        println!("{k:>4} {a:>12} {:>12} {:>12}  {inter}", t.p(k), t.q(k));
    }
}
