//! Command-line front end for `symprod`.
//!
//! [`run`] takes the full argv and returns the exit status together with the
//! text destined for stdout and stderr, so the binary is a thin shell around
//! it and tests can drive it in-process.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when two partitions could
//! not be told apart by any implemented invariant.

mod output;

use clap::{Parser, Subcommand};
use serde_json::json;
use symprod::{
    classify_hilbert_schemes, distinguish, dp_threshold, enumerate_partitions, macdonald_betti,
    multi_sym_poincare, multiproj_poincare, partition_count, quot_degree, slope, sym_poincare,
    wpp_threshold, DivisorClassIndex, Error, Partition, QuotIndex,
};

pub use output::{
    BettiResult, BettiValue, DistinguishResult, Envelope, Format, PartitionsResult, QuotDegResult,
    SlopeResult, ThresholdsResult,
};

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(status: i32, msg: impl std::fmt::Display) -> Self {
        Outcome { status, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Debug, Parser)]
#[command(name = "symprod", version, about = "Betti numbers of symmetric products of curves and non-isomorphism certificates")]
struct Cli {
    /// Emit the canonical JSON encoding.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV tables.
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of n and p(n).
    Partitions { n: u32 },

    /// Macdonald Betti numbers of Sym^n(C), all of them or just B_r.
    #[command(allow_negative_numbers = true)]
    Betti { n: u32, g: u32, r: Option<i64> },

    /// Poincaré polynomial coefficients.
    Poincare {
        #[command(subcommand)]
        space: PoincareCommand,
    },

    /// Certificate separating two multi symmetric products:
    /// `distinguish <partsA...> -- <partsB...> --genus <g>`.
    Distinguish {
        #[arg(required = true)]
        parts_a: Vec<u32>,

        #[arg(long)]
        genus: Option<u32>,

        #[arg(last = true, allow_hyphen_values = true)]
        rest: Vec<String>,
    },

    /// Classify the Hilbert schemes attached to the partitions of n.
    Classify {
        n: u32,
        #[arg(long)]
        genus: u32,
    },

    /// Degree bookkeeping for ind-varieties of (r, n)-divisors.
    Divisor {
        #[command(subcommand)]
        op: DivisorCommand,
    },
}

#[derive(Debug, Subcommand)]
enum PoincareCommand {
    /// Sym^n(C) for a genus g curve.
    Sym { n: u32, g: u32 },
    /// Sym^{n_1}(C) x ... x Sym^{n_r}(C); the last value is the genus.
    Multisym {
        #[arg(num_args = 2.., required = true, value_name = "PARTS... G")]
        values: Vec<u32>,
    },
    /// P^{m_1} x ... x P^{m_s}.
    Multiproj {
        #[arg(required = true)]
        dims: Vec<u32>,
    },
}

#[derive(Debug, Subcommand)]
#[command(allow_negative_numbers = true)]
enum DivisorCommand {
    /// Slope n/r in lowest terms.
    #[command(allow_negative_numbers = true)]
    Slope { r: u32, n: i64 },
    /// Degrees of D past which the constituents have the weak point /
    /// diagonal property.
    #[command(allow_negative_numbers = true)]
    Thresholds { r: u32, n: i64 },
    /// Torsion degree n + r·deg(D) of the constituent Q^{r,n}(D).
    #[command(allow_negative_numbers = true)]
    Quotdeg { r: u32, n: i64, deg_d: u64 },
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { status: 0, stdout: err.to_string(), stderr: String::new() }
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    Outcome::failure(1, "a subcommand is required (try --help)")
                }
                _ => {
                    let text = err.to_string();
                    let line = text.lines().next().unwrap_or("invalid arguments");
                    Outcome { status: 1, stdout: String::new(), stderr: format!("{line}\n") }
                }
            };
        }
    };
    let mut format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    let mut warnings = String::new();
    let result = execute(cli.command, &mut format, &mut warnings);
    match result {
        Ok(stdout) => Outcome { status: 0, stdout, stderr: warnings },
        Err(err) => {
            let mut out = Outcome::failure(exit_status(&err), err);
            out.stderr.insert_str(0, &warnings);
            out
        }
    }
}

fn exit_status(err: &Failure) -> i32 {
    match err {
        Failure::Lib(Error::Indistinguishable { .. }) => 2,
        _ => 1,
    }
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Usage(String),
    Render(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Usage(m) | Failure::Render(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn canonical(parts: Vec<u32>, label: &str, warnings: &mut String) -> Result<Partition, Failure> {
    let original = parts.clone();
    let (p, reordered) = Partition::from_unsorted(parts)?;
    if reordered {
        let shown: Vec<String> = original.iter().map(u32::to_string).collect();
        warnings.push_str(&format!("warning: reordered {label} {} to {p}\n", shown.join(" ")));
    }
    Ok(p)
}

/// Pulls partition B, `--genus` and the output flags out of the arguments
/// that followed `--`.
fn split_distinguish_tail(rest: &[String], format: &mut Format) -> Result<(Vec<u32>, Option<u32>), Failure> {
    let parse_u32 = |s: &str, what: &str| {
        s.parse::<u32>().map_err(|_| Failure::Usage(format!("invalid {what} '{s}': expected a non-negative integer")))
    };
    let mut parts = Vec::new();
    let mut genus = None;
    let mut it = rest.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--genus" => {
                let v = it.next().ok_or_else(|| Failure::Usage("--genus needs a value".into()))?;
                genus = Some(parse_u32(v, "genus")?);
            }
            "--json" => *format = Format::Json,
            "--csv" => *format = Format::Csv,
            s if s.starts_with("--genus=") => genus = Some(parse_u32(&s["--genus=".len()..], "genus")?),
            s => parts.push(parse_u32(s, "part")?),
        }
    }
    Ok((parts, genus))
}

fn execute(command: Command, format: &mut Format, warnings: &mut String) -> Result<String, Failure> {
    let version = env!("CARGO_PKG_VERSION");
    let render = |s: Result<String, String>| s.map_err(Failure::Render);
    match command {
        Command::Partitions { n } => {
            let result = PartitionsResult {
                n,
                count: partition_count(n)?,
                partitions: enumerate_partitions(n)?,
            };
            render(Envelope::new("partitions", json!({ "n": n }), result, version).render(*format))
        }
        Command::Betti { n, g, r } => {
            let degrees: Vec<i64> = match r {
                Some(r) => vec![r],
                None => (0..=2 * i64::from(n)).collect(),
            };
            let values = degrees
                .into_iter()
                .map(|r| Ok(BettiValue { r, betti: macdonald_betti(n, g, r)? }))
                .collect::<Result<Vec<_>, Error>>()?;
            let result = BettiResult { n, genus: g, values };
            render(Envelope::new("betti", json!({ "n": n, "genus": g, "r": r }), result, version).render(*format))
        }
        Command::Poincare { space } => {
            let (name, input, poly) = match space {
                PoincareCommand::Sym { n, g } => ("poincare sym", json!({ "n": n, "genus": g }), sym_poincare(n, g)?),
                PoincareCommand::Multisym { mut values } => {
                    let g = values.pop().expect("clap enforces at least two values");
                    let p = canonical(values, "partition", warnings)?;
                    let poly = multi_sym_poincare(&p, g);
                    ("poincare multisym", json!({ "partition": p, "genus": g }), poly)
                }
                PoincareCommand::Multiproj { dims } => {
                    let poly = multiproj_poincare(&dims)?;
                    ("poincare multiproj", json!({ "dims": dims }), poly)
                }
            };
            render(Envelope::new(name, input, poly, version).render(*format))
        }
        Command::Distinguish { parts_a, genus, rest } => {
            let (parts_b, tail_genus) = split_distinguish_tail(&rest, format)?;
            let genus = match (genus, tail_genus) {
                (Some(_), Some(_)) => return Err(Failure::Usage("--genus given twice".into())),
                (Some(g), None) | (None, Some(g)) => g,
                (None, None) => return Err(Failure::Usage("--genus <g> is required".into())),
            };
            if parts_b.is_empty() {
                return Err(Failure::Usage("second partition missing: use <partsA...> -- <partsB...>".into()));
            }
            let a = canonical(parts_a, "first partition", warnings)?;
            let b = canonical(parts_b, "second partition", warnings)?;
            let certificate = distinguish(&a, &b, genus)?;
            let input = json!({ "a": a, "b": b, "genus": genus });
            let result = DistinguishResult { a, b, genus, certificate };
            render(Envelope::new("distinguish", input, result, version).render(*format))
        }
        Command::Classify { n, genus } => {
            let report = classify_hilbert_schemes(n, genus)?;
            render(Envelope::new("classify", json!({ "n": n, "genus": genus }), report, version).render(*format))
        }
        Command::Divisor { op } => match op {
            DivisorCommand::Slope { r, n } => {
                let s = slope(DivisorClassIndex::new(r, n)?);
                let result = SlopeResult {
                    rank: r,
                    degree: n,
                    numerator: s.numerator,
                    denominator: s.denominator,
                    integral: s.is_integral(),
                };
                render(Envelope::new("divisor slope", json!({ "r": r, "n": n }), result, version).render(*format))
            }
            DivisorCommand::Thresholds { r, n } => {
                let s = slope(DivisorClassIndex::new(r, n)?);
                // (r, n)-divisors correspond to the constituents Q^{r,-n}(D).
                let wpp = s.is_integral().then(|| wpp_threshold(r, s.numerator));
                let dp = (r == 1).then(|| dp_threshold(n));
                let at = |d: Option<u64>| d.map(|d| QuotIndex::constituent(r, -n, d));
                let result = ThresholdsResult {
                    rank: r,
                    degree: n,
                    integral_slope: s.is_integral(),
                    wpp_threshold: wpp,
                    wpp_torsion_degree: at(wpp).map(|q| q.degree),
                    dp_threshold: dp,
                    dp_torsion_degree: at(dp).map(|q| q.degree),
                };
                render(Envelope::new("divisor thresholds", json!({ "r": r, "n": n }), result, version).render(*format))
            }
            DivisorCommand::Quotdeg { r, n, deg_d } => {
                DivisorClassIndex::new(r, n)?;
                let q = QuotIndex { rank: r, degree: quot_degree(r, n, deg_d) };
                let result = QuotDegResult {
                    rank: r,
                    n,
                    deg_d,
                    torsion_degree: q.degree,
                    nonempty: q.is_nonempty(),
                    wpp_hypothesis: q.has_wpp(),
                    has_dp: q.has_dp(),
                };
                let input = json!({ "r": r, "n": n, "deg_d": deg_d });
                render(Envelope::new("divisor quotdeg", input, result, version).render(*format))
            }
        },
    }
}
