//! The `lampart` command line.
//!
//! Exit codes: 0 on success, 1 when a verification finds a counterexample,
//! 2 on usage errors and malformed input.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumerate::{distinct, lambda_partitions, marked};
use crate::frobenius::{s_inverse, s_map};
use crate::groups::odd::{glaisher, sylvester, OddPartition};
use crate::groups::{factorial_form, table, TableRow};
use crate::partition::{index, Lambda, MarkedPartition};
use crate::series::{check, fe_sides, Identity};
use crate::text::{
    format_marked, format_partition, marked_to_json, parse_marked, parse_partition, parse_parts,
    partition_to_json,
};
use crate::tmap::{t_inverse, t_inverse_traced, t_map, t_map_traced};
use crate::{Error, Partition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lampart",
    version,
    about = "Distinct-part partitions and marked lambda-partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List partitions of n, one per line.
    Enumerate(EnumerateArgs),
    /// Apply one of the bijections to a single partition.
    Bijection(BijectionArgs),
    /// Exhaustive and series checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Cycle orders and group orders of the two automorphisms of D(n).
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Distinct,
    Lambda,
    Marked,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    S,
    SInv,
    T,
    TInv,
    Glaisher,
    Sylvester,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdentityArg {
    Main,
    Sylvester,
    #[value(name = "eq0")]
    IndexZero,
    Pentagonal,
    OddProduct,
    Fe,
}

impl From<IdentityArg> for Identity {
    fn from(a: IdentityArg) -> Self {
        match a {
            IdentityArg::Main => Identity::Main,
            IdentityArg::Sylvester => Identity::Sylvester,
            IdentityArg::IndexZero => Identity::IndexZero,
            IdentityArg::Pentagonal => Identity::Pentagonal,
            IdentityArg::OddProduct => Identity::OddProduct,
            IdentityArg::Fe => Identity::Fe,
        }
    }
}

fn parse_lambda(s: &str) -> Result<Lambda, String> {
    let v: u32 = s.parse().map_err(|e| format!("{e}"))?;
    Lambda::try_from(v).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "distinct")]
    kind: Kind,
    #[arg(long, value_parser = parse_lambda)]
    lambda: Option<Lambda>,
    /// Length filter (total length for marked partitions).
    #[arg(long)]
    length: Option<usize>,
    /// Index filter for lambda and marked partitions.
    #[arg(long)]
    index: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Debug, Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    map: MapName,
    #[arg(long, value_parser = parse_lambda)]
    lambda: Option<Lambda>,
    /// Comma-separated parts; marked parts carry a trailing `*`.
    #[arg(long, allow_hyphen_values = true)]
    input: String,
    /// Print every intermediate term (t and t-inv only).
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// |D_m(n)| = |N_{lambda,m}(n)| and round trips of the bijections.
    Theorem {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Option<Lambda>,
        #[arg(long, default_value_t = 20)]
        max_n: u32,
    },
    /// Coefficientwise check of a generating-function identity.
    Series {
        #[arg(long, value_enum)]
        identity: IdentityArg,
        #[arg(long, value_parser = parse_lambda, default_value = "3")]
        lambda: Lambda,
        #[arg(long, default_value_t = crate::series::DEFAULT_ORDER)]
        max_degree: usize,
    },
    /// The weighted F/E identity for every degree up to max-n.
    Fe {
        #[arg(long, default_value_t = 25)]
        max_n: u32,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value_t = 3)]
    from: u32,
    #[arg(long, default_value_t = 18)]
    to: u32,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    /// Show the group order as k! or k!/2 when it is one.
    #[arg(long)]
    factorial_form: bool,
}

enum Failure {
    Usage(String),
    Verification(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Enumerate(a) => enumerate(&a, out),
        Command::Bijection(a) => bijection(&a, out),
        Command::Verify(VerifyCommand::Theorem { lambda, max_n }) => {
            verify_theorem(lambda, max_n, out)
        }
        Command::Verify(VerifyCommand::Series {
            identity,
            lambda,
            max_degree,
        }) => verify_series(identity.into(), lambda, max_degree, out),
        Command::Verify(VerifyCommand::Fe { max_n }) => verify_fe(max_n, out),
        Command::Table(a) => print_table(&a, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(out, "{msg}");
            EXIT_FAILED
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn need_lambda(lambda: Option<Lambda>, what: &str) -> std::result::Result<Lambda, Failure> {
    lambda.ok_or_else(|| Failure::Usage(format!("{what} needs --lambda 2|3")))
}

fn enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Outcome {
    match a.kind {
        Kind::Distinct => {
            if a.index.is_some() || a.lambda.is_some() {
                return Err(Failure::Usage(
                    "--index and --lambda do not apply to distinct partitions".into(),
                ));
            }
            for p in distinct(a.n, a.length) {
                write_partition(&p, a.format, out)?;
            }
        }
        Kind::Lambda => {
            let lambda = need_lambda(a.lambda, "--kind lambda")?;
            for p in lambda_partitions(lambda, a.n, a.length) {
                if a.index.is_none_or(|i| index(lambda, &p).ok() == Some(i)) {
                    write_partition(&p, a.format, out)?;
                }
            }
        }
        Kind::Marked => {
            let lambda = need_lambda(a.lambda, "--kind marked")?;
            for mp in marked(lambda, a.n, a.length) {
                if a.index.is_none_or(|i| mp.index() == i) {
                    write_marked(&mp, a.format, out)?;
                }
            }
        }
    }
    Ok(())
}

fn write_partition(p: &Partition, format: TextFormat, out: &mut dyn Write) -> Outcome {
    match format {
        TextFormat::Text => writeln!(out, "{}", format_partition(p))?,
        TextFormat::Json => writeln!(out, "{}", partition_to_json(p))?,
    }
    Ok(())
}

fn write_marked(mp: &MarkedPartition, format: TextFormat, out: &mut dyn Write) -> Outcome {
    match format {
        TextFormat::Text => writeln!(out, "{}", format_marked(mp))?,
        TextFormat::Json => writeln!(out, "{}", marked_to_json(mp))?,
    }
    Ok(())
}

fn write_odd(o: &OddPartition, format: TextFormat, out: &mut dyn Write) -> Outcome {
    match format {
        TextFormat::Text => writeln!(out, "{o}")?,
        TextFormat::Json => writeln!(out, "{}", serde_json::json!({ "parts": o.parts() }))?,
    }
    Ok(())
}

fn bijection(a: &BijectionArgs, out: &mut dyn Write) -> Outcome {
    if a.trace && !matches!(a.map, MapName::T | MapName::TInv) {
        return Err(Failure::Usage("--trace applies to t and t-inv only".into()));
    }
    match a.map {
        MapName::S | MapName::SInv => {
            if a.lambda.is_some_and(|l| l != Lambda::Three) {
                return Err(Error::DiagonalMapNeedsThree.into());
            }
            if a.map == MapName::S {
                write_marked(&s_map(&parse_partition(&a.input)?)?, a.format, out)
            } else {
                write_partition(
                    &s_inverse(&parse_marked(Lambda::Three, &a.input)?)?,
                    a.format,
                    out,
                )
            }
        }
        MapName::T => {
            let lambda = need_lambda(a.lambda, "t")?;
            let p = parse_partition(&a.input)?;
            if a.trace {
                let (_, terms) = t_map_traced(lambda, &p)?;
                for term in terms {
                    writeln!(out, "{term}")?;
                }
                Ok(())
            } else {
                write_marked(&t_map(lambda, &p)?, a.format, out)
            }
        }
        MapName::TInv => {
            let lambda = need_lambda(a.lambda, "t-inv")?;
            let mp = parse_marked(lambda, &a.input)?;
            if a.trace {
                let (_, terms) = t_inverse_traced(&mp)?;
                for term in terms {
                    writeln!(out, "{term}")?;
                }
                Ok(())
            } else {
                write_partition(&t_inverse(&mp)?, a.format, out)
            }
        }
        MapName::Glaisher => write_odd(&glaisher(&parse_partition(&a.input)?), a.format, out),
        MapName::Sylvester => {
            let o = OddPartition::new(parse_parts(&a.input)?)?;
            write_partition(&sylvester(&o), a.format, out)
        }
    }
}

/// Checks the cardinalities per `(n, m)` and round trips of `T` (and `S`
/// for lambda = 3) for every `n <= max_n`.
fn verify_theorem(lambda: Option<Lambda>, max_n: u32, out: &mut dyn Write) -> Outcome {
    let lambdas: Vec<Lambda> = lambda.map_or(Lambda::ALL.to_vec(), |l| vec![l]);
    for &lambda in &lambdas {
        for n in 0..=max_n {
            let mut by_len: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
            for p in distinct(n, None) {
                by_len.entry(p.len()).or_default().0 += 1;
                round_trip(lambda, &p).map_err(|msg| {
                    Failure::Verification(format!("FAIL lambda={lambda} n={n}: {msg}"))
                })?;
            }
            for mp in marked(lambda, n, None) {
                by_len.entry(mp.total_len()).or_default().1 += 1;
                reverse_round_trip(&mp).map_err(|msg| {
                    Failure::Verification(format!("FAIL lambda={lambda} n={n}: {msg}"))
                })?;
            }
            for (m, (d, nm)) in by_len {
                if d != nm {
                    return Err(Failure::Verification(format!(
                        "FAIL lambda={lambda} n={n} m={m}: |D|={d} |N|={nm}"
                    )));
                }
                writeln!(out, "lambda={lambda} n={n} m={m} |D|={d} |N|={nm}")?;
            }
        }
    }
    writeln!(out, "OK n≤{max_n}")?;
    Ok(())
}

fn round_trip(lambda: Lambda, p: &Partition) -> std::result::Result<(), String> {
    let image = t_map(lambda, p).map_err(|e| format!("T({}) failed: {e}", format_partition(p)))?;
    if image.total_len() != p.len() || image.degree() != p.degree() {
        return Err(format!(
            "T({}) = {} changes degree or length",
            format_partition(p),
            format_marked(&image)
        ));
    }
    let back =
        t_inverse(&image).map_err(|e| format!("T^-1({}) failed: {e}", format_marked(&image)))?;
    if &back != p {
        return Err(format!(
            "T^-1(T({})) = {}",
            format_partition(p),
            format_partition(&back)
        ));
    }
    if lambda == Lambda::Three && !p.is_empty() {
        let image = s_map(p).map_err(|e| format!("S({}) failed: {e}", format_partition(p)))?;
        let back = s_inverse(&image)
            .map_err(|e| format!("S^-1({}) failed: {e}", format_marked(&image)))?;
        if &back != p || image.total_len() != p.len() {
            return Err(format!(
                "S^-1(S({})) = {}",
                format_partition(p),
                format_partition(&back)
            ));
        }
    }
    Ok(())
}

fn reverse_round_trip(mp: &MarkedPartition) -> std::result::Result<(), String> {
    let p = t_inverse(mp).map_err(|e| format!("T^-1({}) failed: {e}", format_marked(mp)))?;
    let again =
        t_map(mp.lambda(), &p).map_err(|e| format!("T({}) failed: {e}", format_partition(&p)))?;
    if &again != mp {
        return Err(format!(
            "T(T^-1({})) = {}",
            format_marked(mp),
            format_marked(&again)
        ));
    }
    Ok(())
}

fn verify_series(identity: Identity, lambda: Lambda, order: usize, out: &mut dyn Write) -> Outcome {
    let report = check(identity, lambda, order);
    writeln!(out, "{}", report.to_json())?;
    match &report.first_mismatch {
        None => {
            writeln!(out, "OK n≤{order}")?;
            Ok(())
        }
        Some(m) => Err(Failure::Verification(format!(
            "FAIL {} at x^{} t^{}: {} != {}",
            report.identity, m.n, m.h, m.lhs, m.rhs
        ))),
    }
}

/// Renders coefficients (constant first) as a polynomial in `t`.
pub fn format_t_poly(coeffs: &[BigInt]) -> String {
    let mut terms = Vec::new();
    for (h, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.sign() == num_bigint::Sign::Minus {
            "-"
        } else {
            "+"
        };
        let mag = c.magnitude();
        let body = match (h, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => "t".to_string(),
            (1, false) => format!("{mag}t"),
            (_, true) => format!("t^{h}"),
            (_, false) => format!("{mag}t^{h}"),
        };
        terms.push((sign, body));
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (sign, body)) in terms.iter().enumerate() {
        match (i, *sign) {
            (0, "-") => s.push('-'),
            (0, _) => {}
            (_, sign) => s.push_str(&format!(" {sign} ")),
        }
        s.push_str(body);
    }
    s
}

fn verify_fe(max_n: u32, out: &mut dyn Write) -> Outcome {
    for n in 1..=max_n {
        let (lhs, rhs) = fe_sides(n);
        let (l, r) = (format_t_poly(&lhs), format_t_poly(&rhs));
        if lhs != rhs {
            return Err(Failure::Verification(format!(
                "FAIL n={n}: F side {l} != E side {r}"
            )));
        }
        writeln!(out, "n={n} {l}")?;
    }
    writeln!(out, "OK n≤{max_n}")?;
    Ok(())
}

fn print_table(a: &TableArgs, out: &mut dyn Write) -> Outcome {
    if a.from == 0 || a.from > a.to {
        return Err(Failure::Usage(format!(
            "need 1 <= --from <= --to, got {}..{}",
            a.from, a.to
        )));
    }
    let rows = table(a.from, a.to)?;
    let group_order = |row: &TableRow| {
        let plain = row.nu_ab.to_string();
        if a.factorial_form {
            factorial_form(&row.nu_ab).unwrap_or(plain)
        } else {
            plain
        }
    };
    match a.format {
        TableFormat::Csv => {
            writeln!(out, "n,d,nu_a,nu_b,nu_ab")?;
            for row in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.n,
                    row.d,
                    row.nu_a,
                    row.nu_b,
                    group_order(row)
                )?;
            }
        }
        TableFormat::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "n": row.n,
                        "d": row.d,
                        "nu_a": row.nu_a.to_string(),
                        "nu_b": row.nu_b.to_string(),
                        "nu_ab": group_order(row),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(values))?;
        }
    }
    Ok(())
}
