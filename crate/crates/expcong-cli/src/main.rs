//! Command-line front end for the `expcong` library: evaluate the
//! exponential congruence symbol, dump residue partitions and class counts,
//! scan (n, k) grids, emit exponential-sum and Dirichlet-series data, and
//! run the self-verifying theorem suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 resource cap exceeded. Data goes to stdout, diagnostics to stderr.

mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use expcong::analytic::{completed_lambda, exp_sum_with_cap, l_series_partial};
use expcong::partition::{enumerate_partition_with_cap, prime_counts, DEFAULT_ENUMERATION_CAP};
use expcong::symbol::{symbol, SymbolQuery, SymbolValue};
use expcong::{ComplexSample, Error};
use output::{Emitter, Field, Format, Record};

/// Evaluate the exponential congruence symbol (a/n)_k — +1, -1, or 0
/// according to whether a^k is congruent to 1, to n-1, or to neither
/// modulo n — and explore the structure it induces.
#[derive(Parser)]
#[command(name = "expcong", version, max_term_width = 100)]
struct Cli {
    /// Output format for data records
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,

    /// Worker count, accepted for interface stability; evaluation is
    /// sequential regardless, so output is bit-reproducible at any value
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,

    /// Cap on enumerated moduli and sweep sizes; overrides the
    /// EXPCONG_MAX_N environment variable (built-in default: 1000000)
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate (a/n)_k for one argument
    #[command(allow_negative_numbers = true)]
    Symbol {
        /// Argument; any integer, reduced modulo n
        a: i64,
        /// Modulus, at least 2
        n: u64,
        /// Exponent, at least 1
        k: u64,
        /// Also print the residue a^k mod n and which branch fired
        #[arg(long)]
        explain: bool,
    },

    /// List the +1 / -1 / 0 classes of the units modulo n at exponent k
    Partition {
        /// Modulus, at least 2
        n: u64,
        /// Exponent, at least 1
        k: u64,
        /// Emit class sizes only, not the residue lists
        #[arg(long)]
        counts: bool,
    },

    /// Closed-form class counts for an odd prime modulus, no enumeration
    Count {
        /// Odd prime modulus
        p: u64,
        /// Exponent, at least 1
        k: u64,
    },

    /// Stream class counts, orthogonality sums, and index-two flags over
    /// inclusive ranges (LO..HI, or a single value)
    Scan {
        /// Modulus range, e.g. 3..50 or 15
        n_range: String,
        /// Exponent range, e.g. 1..20 or 2
        k_range: String,
        /// Visit only the primes in the modulus range
        #[arg(long)]
        primes: bool,
    },

    /// Weighted exponential sums S(m) = sum of e^(2*pi*i*a*m/n) over the
    /// residues a with (a/n)_k = +1 or -1, for each m in an inclusive range
    Expsum {
        /// Modulus, at least 2
        n: u64,
        /// Exponent, at least 1
        k: u64,
        /// Twist range, e.g. 0..4, -3..3, or a single value
        #[arg(allow_hyphen_values = true)]
        m_range: String,
    },

    /// Truncated Dirichlet series L(s) = sum of chi_k(m) m^(-s), where
    /// chi_k(m) = (m/n)_k, together with its integral tail bound
    #[command(allow_negative_numbers = true)]
    Lseries {
        /// Real evaluation point, must exceed 1 for convergence
        s: f64,
        /// Modulus, at least 2
        n: u64,
        /// Exponent, at least 1
        k: u64,
        /// Number of series terms to sum
        terms: u64,
        /// Also emit the completed form pi^(-s/2) * Gamma(s/2) * L(s)
        #[arg(long)]
        completed: bool,
    },

    /// Run the theorem-verification suites and print a pass/fail table
    /// (plain text regardless of --format); exits 1 on any failure
    Verify {
        /// Run every check (the default when no --theorem is given)
        #[arg(long, conflicts_with = "theorem")]
        all: bool,
        /// Run only the named check; repeatable (see the table slugs)
        #[arg(long, value_name = "SLUG")]
        theorem: Vec<String>,
        /// Reduced sweep sizes for a fast smoke run
        #[arg(long)]
        quick: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::ResourceCap { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let cap = resolve_cap(cli.max_n)?;
    let mut emitter = Emitter::new(cli.format);

    match cli.command {
        Command::Symbol { a, n, k, explain } => {
            let query = SymbolQuery::new(a, n, k)?;
            let value = symbol(&query);
            let mut result = vec![("value", Field::Int(value.as_int()))];
            let mut plain = format!("({a}/{n})_{k} = {value}");
            if explain {
                let residue = query.power_residue();
                let branch = match value {
                    SymbolValue::One => "congruent to 1",
                    SymbolValue::MinusOne => "congruent to n-1",
                    SymbolValue::Zero => "congruent to neither 1 nor n-1",
                };
                result.push(("residue", Field::UInt(residue)));
                result.push(("branch", Field::Str(branch.to_string())));
                plain.push_str(&format!(
                    "\n  {}^{} mod {} = {}  ({})",
                    query.a(),
                    k,
                    n,
                    residue,
                    branch
                ));
            }
            let record = Record {
                command: "symbol",
                inputs: vec![("a", Field::Int(a)), ("n", Field::UInt(n)), ("k", Field::UInt(k))],
                result,
                paper_ref: "definition of the exponential congruence symbol",
            };
            emitter.emit(&record, &plain);
        }

        Command::Partition { n, k, counts } => {
            let part = enumerate_partition_with_cap(n, k, cap)?;
            let (plus, minus, zero) = (part.r_plus(), part.r_minus(), part.r_zero());
            let mut result = vec![
                ("count_plus", Field::UInt(plus.len() as u64)),
                ("count_minus", Field::UInt(minus.len() as u64)),
                ("count_zero", Field::UInt(zero.len() as u64)),
                ("non_units", Field::UInt(part.non_unit_count())),
            ];
            let plain = if counts {
                format!(
                    "{}/{}/{} (non-units: {})",
                    plus.len(),
                    minus.len(),
                    zero.len(),
                    part.non_unit_count()
                )
            } else {
                result.push(("r_plus", Field::List(plus.to_vec())));
                result.push(("r_minus", Field::List(minus.to_vec())));
                result.push(("r_zero", Field::List(zero.to_vec())));
                format!(
                    "R+1 = {}\nR-1 = {}\nR0  = {}\nnon-units: {}",
                    plain_set(plus),
                    plain_set(minus),
                    plain_set(zero),
                    part.non_unit_count()
                )
            };
            let record = Record {
                command: "partition",
                inputs: vec![("n", Field::UInt(n)), ("k", Field::UInt(k))],
                result,
                paper_ref: "partition of the units into +1, -1, and 0 classes",
            };
            emitter.emit(&record, &plain);
        }

        Command::Count { p, k } => {
            let report = prime_counts(p, k)?;
            let record = Record {
                command: "count",
                inputs: vec![("p", Field::UInt(p)), ("k", Field::UInt(k))],
                result: vec![
                    ("group_order", Field::UInt(report.m)),
                    ("g", Field::UInt(report.g)),
                    ("count_plus", Field::UInt(report.count_plus)),
                    ("count_minus", Field::UInt(report.count_minus)),
                    ("minus_solvable", Field::Bool(report.minus_solvable)),
                ],
                paper_ref: "closed-form class counts for an odd prime modulus",
            };
            let plain = format!(
                "p={p} k={k}: |R+1| = {}, |R-1| = {} (gcd(k, p-1) = {}, -1 solvable: {})",
                report.count_plus, report.count_minus, report.g, report.minus_solvable
            );
            emitter.emit(&record, &plain);
        }

        Command::Scan { n_range, k_range, primes } => {
            let (n_lo, n_hi) = parse_range_u64(&n_range)?;
            let (k_lo, k_hi) = parse_range_u64(&k_range)?;
            for n in (n_lo..=n_hi).filter(|&n| !primes || expcong::arith::is_prime(n)) {
                for k in k_lo..=k_hi {
                    let part = enumerate_partition_with_cap(n, k, cap)?;
                    let (plus, minus, zero) = (
                        part.r_plus().len() as u64,
                        part.r_minus().len() as u64,
                        part.r_zero().len() as u64,
                    );
                    let sum = plus as i64 - minus as i64;
                    let index_two = minus > 0;
                    let record = Record {
                        command: "scan",
                        inputs: vec![("n", Field::UInt(n)), ("k", Field::UInt(k))],
                        result: vec![
                            ("count_plus", Field::UInt(plus)),
                            ("count_minus", Field::UInt(minus)),
                            ("count_zero", Field::UInt(zero)),
                            ("non_units", Field::UInt(part.non_unit_count())),
                            ("orthogonality_sum", Field::Int(sum)),
                            ("index_two", Field::Bool(index_two)),
                        ],
                        paper_ref: "bulk class counts with orthogonality sums and index-two flags",
                    };
                    let plain = format!(
                        "n={n} k={k}: {plus}/{minus}/{zero}, sum = {sum}, index-two: {index_two}, non-units: {}",
                        part.non_unit_count()
                    );
                    emitter.emit(&record, &plain);
                }
            }
        }

        Command::Expsum { n, k, m_range } => {
            let (m_lo, m_hi) = parse_range_i64(&m_range)?;
            let part = enumerate_partition_with_cap(n, k, cap)?;
            let bound = (part.r_plus().len() + part.r_minus().len()) as f64;
            for m in m_lo..=m_hi {
                let sum = exp_sum_with_cap(m, n, k, cap)?;
                let record = Record {
                    command: "expsum",
                    inputs: vec![("n", Field::UInt(n)), ("k", Field::UInt(k)), ("m", Field::Int(m))],
                    result: vec![
                        ("sum", Field::Complex(sum)),
                        ("abs", Field::Float(sum.norm())),
                        ("bound", Field::Float(bound)),
                    ],
                    paper_ref: "weighted exponential sum over the sign classes",
                };
                let plain = format!(
                    "m={m}: S = {}, |S| = {}, bound = {bound}",
                    plain_complex(sum),
                    sum.norm()
                );
                emitter.emit(&record, &plain);
            }
        }

        Command::Lseries { s, n, k, terms, completed } => {
            let point = ComplexSample::new(s, 0.0);
            let sample = l_series_partial(point, n, k, terms)?;
            let mut result = vec![
                ("partial_sum", Field::Complex(sample.partial_sum)),
                ("abs", Field::Float(sample.partial_sum.norm())),
                ("tail_bound", Field::Float(sample.tail_bound)),
            ];
            let mut plain = format!(
                "L_{terms}({s}) = {}, tail bound = {}",
                plain_complex(sample.partial_sum),
                sample.tail_bound
            );
            if completed {
                let lambda = completed_lambda(point, n, k, terms)?;
                result.push(("completed", Field::Complex(lambda)));
                plain.push_str(&format!("\ncompleted form = {}", plain_complex(lambda)));
            }
            let record = Record {
                command: "lseries",
                inputs: vec![
                    ("s", Field::Float(s)),
                    ("n", Field::UInt(n)),
                    ("k", Field::UInt(k)),
                    ("terms", Field::UInt(terms)),
                ],
                result,
                paper_ref: "truncated Dirichlet series of the symbol character",
            };
            emitter.emit(&record, &plain);
        }

        Command::Verify { all: _, theorem, quick } => {
            let code = verify::run(&theorem, quick)?;
            return Ok(ExitCode::from(code));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Enumeration cap: `--max-n` beats `EXPCONG_MAX_N` beats the built-in
/// default.
fn resolve_cap(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("EXPCONG_MAX_N") {
        Ok(raw) => raw.trim().parse::<u64>().map_err(|_| {
            Error::Domain(format!("EXPCONG_MAX_N must be an unsigned integer, got '{raw}'"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_CAP),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(Error::Domain("EXPCONG_MAX_N is not valid unicode".to_string()))
        }
    }
}

/// Parses an inclusive `LO..HI` range; a bare value means `V..V`.
fn parse_range_u64(raw: &str) -> Result<(u64, u64), Error> {
    parse_range_with(raw, |s| s.parse::<u64>())
}

fn parse_range_i64(raw: &str) -> Result<(i64, i64), Error> {
    parse_range_with(raw, |s| s.parse::<i64>())
}

fn parse_range_with<T: Copy + PartialOrd, E>(
    raw: &str,
    parse: impl Fn(&str) -> Result<T, E>,
) -> Result<(T, T), Error> {
    let malformed =
        || Error::Domain(format!("malformed range '{raw}': expected LO..HI or a single value"));
    let (lo, hi) = match raw.split_once("..") {
        Some((lo, hi)) => (parse(lo).map_err(|_| malformed())?, parse(hi).map_err(|_| malformed())?),
        None => {
            let v = parse(raw).map_err(|_| malformed())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::Domain(format!("empty range '{raw}': lower bound exceeds upper")));
    }
    Ok((lo, hi))
}

fn plain_set(xs: &[u64]) -> String {
    let inner = xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
    format!("{{{inner}}}")
}

fn plain_complex(z: ComplexSample) -> String {
    if z.im < 0.0 {
        format!("{} - {}i", z.re, -z.im)
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}
