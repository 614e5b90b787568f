//! Command-line front end: single evaluations and batch audits.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stieltjes::audit::{format_sig, run_modes, AuditConfig, Mode, Report, Status};
use stieltjes::lfunctions::{l_value, l_value_euler, l_value_via_fe, LValue};
use stieltjes::primeprod::{residue_product, ResidueProductSpec};
use stieltjes::stieltjes::stieltjes_gamma;
use stieltjes::zeta::{hurwitz_zeta_with_error, zeta_bounds};
use stieltjes::{Error, Rational};

#[derive(Parser)]
#[command(name = "stieltjes", version, about = "Stieltjes constants, Hurwitz zeta, quadratic L-functions and identity audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generalized Stieltjes constant γ_k(a).
    Gamma {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_rational)]
        a: Rational,
    },
    /// Hurwitz zeta ζ(s, a).
    Hurwitz {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        s: f64,
        #[arg(long, value_parser = parse_rational)]
        a: Rational,
    },
    /// Quadratic Dirichlet L-function L_D(s).
    Lfun {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        s: f64,
        #[arg(long, value_enum, default_value_t = LRoute::Hurwitz)]
        route: LRoute,
        /// Prime bound for the Euler-product route.
        #[arg(long, default_value_t = 10_000_000)]
        limit: u64,
    },
    /// Euler product restricted to residue classes.
    Primeprod {
        #[arg(long = "mod")]
        modulus: u64,
        /// Residues whose primes contribute (p^s − 1)/(p^s + 1).
        #[arg(long, value_delimiter = ',')]
        minus: Vec<u64>,
        /// Residues whose primes contribute (p^s + 1)/(p^s − 1).
        #[arg(long, value_delimiter = ',')]
        plus: Vec<u64>,
        #[arg(long = "exp", value_parser = parse_real)]
        s: f64,
        #[arg(long, default_value_t = 10_000_000)]
        limit: u64,
    },
    /// Run the identity catalogue.
    Audit {
        /// Glob over check ids, e.g. "P7*".
        #[arg(long)]
        prop: Option<String>,
        #[arg(long, value_enum, default_value_t = AuditMode::Audited)]
        mode: AuditMode,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// ISO-8601 timestamp recorded in the report (defaults to now).
        #[arg(long)]
        timestamp: Option<String>,
    },
    /// de Bruijn value of ζ(s) with its elementary brackets, 0 < s < 1.
    Bounds {
        #[arg(long, value_parser = parse_real)]
        s: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LRoute {
    Hurwitz,
    Euler,
    Fe,
}

#[derive(Clone, Copy, ValueEnum)]
enum AuditMode {
    Literal,
    Audited,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_real(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("invalid number '{s}'")),
    }
}

enum Failure {
    Usage(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn print_lvalue(l: &LValue) {
    println!(
        "L_{}({}) = {}  (err {}, route {:?})",
        l.d,
        format_sig(l.s),
        format_sig(l.value),
        format_sig(l.err_estimate),
        l.route
    );
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gamma { k, a } => {
            let (v, e) = stieltjes_gamma(k, a.to_f64())?;
            println!("gamma_{k}({a}) = {}  (err {})", format_sig(v), format_sig(e));
        }
        Command::Hurwitz { s, a } => {
            let (v, e) = hurwitz_zeta_with_error(s, a.to_f64())?;
            println!("zeta({}, {a}) = {}  (err {})", format_sig(s), format_sig(v), format_sig(e));
        }
        Command::Lfun { disc, s, route, limit } => {
            let l = match route {
                LRoute::Hurwitz => l_value(disc, s)?,
                LRoute::Euler => l_value_euler(disc, s, limit)?,
                LRoute::Fe => l_value_via_fe(disc, 1.0 - s)?,
            };
            print_lvalue(&l);
        }
        Command::Primeprod { modulus, minus, plus, s, limit } => {
            let spec = ResidueProductSpec::new(modulus, &minus, &plus, s, limit);
            let (v, tail) = residue_product(&spec)?;
            println!("product = {}  (log tail bound {})", format_sig(v), format_sig(tail));
        }
        Command::Bounds { s } => {
            let b = zeta_bounds(s)?;
            println!("zeta({}) = {}  (err {})", format_sig(s), format_sig(b.value), format_sig(b.value_error));
            println!("I(s) = {}", format_sig(b.integral));
            let pair = |(lo, hi): (f64, f64)| format!("({}, {})", format_sig(lo), format_sig(hi));
            println!("crude bracket of I(s): {}", pair(b.crude));
            println!("refined bracket of I(s): {}", pair(b.refined));
            println!("refined bracket by quadrature: {}", pair(b.refined_quadrature));
            println!("zeta bracket: {}", pair(b.zeta_bracket));
        }
        Command::Audit { prop, mode, limit, format, out, timestamp } => {
            let mut cfg = AuditConfig::default();
            if let Some(p) = prop {
                cfg = cfg.with_filter(&p);
            }
            if let Some(l) = limit {
                cfg.sieve_limit = l;
            }
            cfg = match timestamp {
                Some(t) => cfg.with_timestamp(&t)?,
                None => cfg.with_timestamp_now(),
            };
            let modes: &[Mode] = match mode {
                AuditMode::Literal => &[Mode::Literal],
                AuditMode::Audited => &[Mode::Audited],
                AuditMode::Both => &[Mode::Literal, Mode::Audited],
            };
            cfg.mode = modes[0];
            let report = run_modes(&cfg, modes)?;
            let text = render(&report, format)?;
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Error::Output(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            if report.checks.iter().any(|c| c.status == Status::Fail) {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn render(report: &Report, format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Json => report.to_json()? + "\n",
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
