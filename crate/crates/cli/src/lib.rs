//! Command-line front end for `primroots`.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 when `check`
//! finds that the value is not a primitive root. Data goes to the output
//! stream, diagnostics to the error stream.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use primroots::{
    brute_congruence_solutions, brute_primitive_roots, classify_modulus, count_primitive_roots,
    enumerate_with_ceiling, euler_phi, exceptional_t, is_primitive_root, lift_power,
    lift_prime_to_square, order, parse_natural, solve_prime_power, stream_roots,
    to_twice_prime_power, ModulusClass, Natural, Polynomial, DEFAULT_ORACLE_CEILING,
    DEFAULT_ROOT_CEILING,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_NOT_ROOT: u8 = 3;

/// Environment variable overriding the oracle's scan ceiling.
pub const ORACLE_CEILING_VAR: &str = "PRIMROOTS_ORACLE_CEILING";

#[derive(Debug, Clone)]
pub struct Settings {
    pub oracle_ceiling: Natural,
}

impl Default for Settings {
    fn default() -> Self {
        Self { oracle_ceiling: Natural::from(DEFAULT_ORACLE_CEILING) }
    }
}

impl Settings {
    pub fn from_env() -> Result<Self, String> {
        Self::from_env_value(std::env::var(ORACLE_CEILING_VAR).ok().as_deref())
    }

    pub fn from_env_value(value: Option<&str>) -> Result<Self, String> {
        match value {
            None => Ok(Self::default()),
            Some(v) => parse_natural(v.trim())
                .map(|oracle_ceiling| Self { oracle_ceiling })
                .map_err(|e| format!("{ORACLE_CEILING_VAR}: {e}")),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "primroots", version, about = "Construct the primitive roots of any modulus that has them")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn natural_arg(s: &str) -> Result<Natural, String> {
    parse_natural(s).map_err(|e| e.to_string())
}

fn polynomial_arg(s: &str) -> Result<Polynomial, String> {
    s.parse().map_err(|e: primroots::Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every primitive root of n.
    List(ListArgs),
    /// Number of primitive roots of n, phi(phi(n)).
    Count {
        #[arg(value_parser = natural_arg)]
        n: Natural,
    },
    /// Exit 0 if a is a primitive root of n, 3 if not.
    Check {
        #[arg(value_parser = natural_arg)]
        a: Natural,
        #[arg(value_parser = natural_arg)]
        n: Natural,
    },
    /// Multiplicative order of a modulo n.
    Order {
        #[arg(value_parser = natural_arg)]
        a: Natural,
        #[arg(value_parser = natural_arg)]
        n: Natural,
    },
    /// Lift a primitive root g of p^k to the primitive roots of p^(k+1) above it.
    Lift {
        #[arg(value_parser = natural_arg)]
        g: Natural,
        #[arg(value_parser = natural_arg)]
        p: Natural,
        k: u32,
    },
    /// The t for which g + t p is not a primitive root of p^2.
    Exceptional {
        #[arg(value_parser = natural_arg)]
        g: Natural,
        #[arg(value_parser = natural_arg)]
        p: Natural,
    },
    /// The primitive root of 2p^k obtained from the root g of p^k.
    Twice {
        #[arg(value_parser = natural_arg)]
        g: Natural,
        #[arg(value_parser = natural_arg)]
        p: Natural,
        k: u32,
    },
    /// Solve f(x) = 0 mod p^k by Hensel lifting.
    Hensel {
        /// Coefficients, constant term first: "1,0,1" is x^2 + 1.
        #[arg(long, value_parser = polynomial_arg, allow_hyphen_values = true)]
        poly: Polynomial,
        #[arg(long, value_parser = natural_arg)]
        prime: Natural,
        #[arg(long)]
        power: u32,
    },
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Which kind of modulus n is.
    Classify {
        #[arg(value_parser = natural_arg)]
        n: Natural,
    },
}

#[derive(Debug, Args)]
struct ListArgs {
    #[arg(value_parser = natural_arg)]
    n: Natural,
    /// Emit roots as they are constructed, in lift-chain order.
    #[arg(long)]
    stream: bool,
    /// Materialize but keep lift-chain order (same sequence as --stream).
    #[arg(long, conflicts_with = "stream")]
    no_sort: bool,
    /// Stop after this many roots.
    #[arg(long)]
    limit: Option<u64>,
    /// Refuse to materialize more roots than this.
    #[arg(long, value_parser = natural_arg, default_value_t = Natural::from(DEFAULT_ROOT_CEILING))]
    max_roots: Natural,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Primitive roots of n by exhaustive scan.
    Roots {
        #[arg(value_parser = natural_arg)]
        n: Natural,
    },
    /// Solutions of f(x) = 0 mod m by exhaustive scan.
    Solve {
        #[arg(long, value_parser = polynomial_arg, allow_hyphen_values = true)]
        poly: Polynomial,
        #[arg(long = "mod", value_parser = natural_arg)]
        modulus: Natural,
    },
}

enum Failure {
    Domain(primroots::Error),
    Io(io::Error),
}

impl From<primroots::Error> for Failure {
    fn from(e: primroots::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<u8, Failure>;

/// Parses `argv` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(argv: I, settings: &Settings, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, settings, out) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli, settings: &Settings, out: &mut dyn Write) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::List(args) => list(&args, format, out),
        Command::Count { n } => {
            let count = count_primitive_roots(&n)?;
            scalar(out, format, &count, json!({ "modulus": n.to_string(), "count": count.to_string() }))
        }
        Command::Check { a, n } => {
            if n == Natural::from(0u32) {
                return Err(primroots::Error::ZeroModulus.into());
            }
            let is_root = is_primitive_root(&a, &n);
            let doc = json!({ "a": a.to_string(), "modulus": n.to_string(), "primitive_root": is_root });
            scalar(out, format, &is_root, doc)?;
            Ok(if is_root { EXIT_OK } else { EXIT_NOT_ROOT })
        }
        Command::Order { a, n } => {
            let ord = order(&a, &n)?;
            scalar(out, format, &ord, json!({ "a": a.to_string(), "modulus": n.to_string(), "order": ord.to_string() }))
        }
        Command::Lift { g, p, k } => {
            let roots = match k {
                0 => return Err(primroots::Error::ZeroArgument { what: "k" }.into()),
                1 => lift_prime_to_square(&g, &p)?,
                _ => lift_power(&g, &p, k)?,
            };
            let modulus = num_traits::pow(p.clone(), k as usize + 1);
            let doc = json!({
                "g": g.to_string(),
                "prime": p.to_string(),
                "power": k,
                "modulus": modulus.to_string(),
                "roots": decimal_list(&roots),
            });
            lines(out, format, &roots, doc)
        }
        Command::Exceptional { g, p } => {
            let t = exceptional_t(&g, &p)?;
            scalar(out, format, &t, json!({ "g": g.to_string(), "prime": p.to_string(), "t": t.to_string() }))
        }
        Command::Twice { g, p, k } => {
            let root = to_twice_prime_power(&g, &p, k)?;
            let doc = json!({ "g": g.to_string(), "prime": p.to_string(), "power": k, "root": root.to_string() });
            scalar(out, format, &root, doc)
        }
        Command::Hensel { poly, prime, power } => {
            let solutions = solve_prime_power(&poly, &prime, power)?;
            let doc = json!({ "prime": prime.to_string(), "power": power, "solutions": decimal_list(&solutions) });
            lines(out, format, &solutions, doc)
        }
        Command::Oracle(OracleCommand::Roots { n }) => {
            let set = brute_primitive_roots(&n, &settings.oracle_ceiling)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&set).expect("serializable"))?,
                Format::Text => write_text_lines(out, set.roots())?,
            }
            Ok(EXIT_OK)
        }
        Command::Oracle(OracleCommand::Solve { poly, modulus }) => {
            let solutions = brute_congruence_solutions(&poly, &modulus, &settings.oracle_ceiling)?;
            let doc = json!({ "modulus": modulus.to_string(), "solutions": decimal_list(&solutions) });
            lines(out, format, &solutions, doc)
        }
        Command::Classify { n } => {
            let class = classify_modulus(&n)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&class).expect("serializable"))?,
                Format::Text => writeln!(out, "{}", class_text(&class))?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn class_text(class: &ModulusClass) -> String {
    match class {
        ModulusClass::One => "one".into(),
        ModulusClass::Two => "two".into(),
        ModulusClass::Four => "four".into(),
        ModulusClass::OddPrimePower { p, k } => format!("odd_prime_power p={p} k={k}"),
        ModulusClass::TwiceOddPrimePower { p, k } => format!("twice_odd_prime_power p={p} k={k}"),
        ModulusClass::NoPrimitiveRoots => "no_primitive_roots".into(),
    }
}

fn decimal_list(values: &[BigUint]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn scalar(out: &mut dyn Write, format: Format, value: &dyn std::fmt::Display, doc: serde_json::Value) -> CmdResult {
    match format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => writeln!(out, "{doc}")?,
    }
    Ok(EXIT_OK)
}

fn lines(out: &mut dyn Write, format: Format, values: &[BigUint], doc: serde_json::Value) -> CmdResult {
    match format {
        Format::Text => write_text_lines(out, values)?,
        Format::Json => writeln!(out, "{doc}")?,
    }
    Ok(EXIT_OK)
}

fn write_text_lines(out: &mut dyn Write, values: &[BigUint]) -> io::Result<()> {
    for v in values {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn list(args: &ListArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let stream = stream_roots(&args.n)?;
    let count = stream.root_count().clone();
    let header = ListHeader { modulus: args.n.clone(), phi: euler_phi(&args.n)?, count: count.clone() };

    if args.stream {
        emit_roots(out, format, &header, stream, args.limit)?;
    } else if args.no_sort {
        if count > args.max_roots {
            return Err(primroots::Error::TooManyRoots { n: args.n.clone(), count, ceiling: args.max_roots.clone() }.into());
        }
        let roots: Vec<Natural> = stream.collect();
        emit_roots(out, format, &header, roots.into_iter(), args.limit)?;
    } else {
        drop(stream);
        let set = enumerate_with_ceiling(&args.n, &args.max_roots)?;
        emit_roots(out, format, &header, set.into_roots().into_iter(), args.limit)?;
    }
    Ok(EXIT_OK)
}

struct ListHeader {
    modulus: Natural,
    phi: Natural,
    count: Natural,
}

/// Writes roots incrementally. JSON output follows the root-set document
/// shape; truncated output adds `"truncated": true` and `"shown"`.
fn emit_roots(
    out: &mut dyn Write,
    format: Format,
    header: &ListHeader,
    roots: impl Iterator<Item = Natural>,
    limit: Option<u64>,
) -> io::Result<()> {
    let truncated = limit.is_some_and(|l| Natural::from(l) < header.count);
    let roots = roots.take(limit.map_or(usize::MAX, |l| usize::try_from(l).unwrap_or(usize::MAX)));
    match format {
        Format::Text => {
            let mut shown = 0u64;
            for r in roots {
                writeln!(out, "{r}")?;
                shown += 1;
            }
            if truncated {
                writeln!(out, "# truncated: {shown} of {} roots shown", header.count)?;
            }
        }
        Format::Json => {
            write!(
                out,
                r#"{{"modulus":"{}","phi":"{}","count":"{}","roots":["#,
                header.modulus, header.phi, header.count
            )?;
            let mut shown = 0u64;
            for r in roots {
                if shown > 0 {
                    out.write_all(b",")?;
                }
                write!(out, "\"{r}\"")?;
                shown += 1;
            }
            out.write_all(b"]")?;
            if truncated {
                write!(out, r#","truncated":true,"shown":{shown}"#)?;
            }
            out.write_all(b"}\n")?;
        }
    }
    Ok(())
}
