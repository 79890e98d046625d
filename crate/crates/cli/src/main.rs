//! `xtl`: command-line access to the exact computations and verification suites.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use xtl::sixvertex::{enumerate_configs, partition_enum, partition_enum_homogeneous, SvParams};
use xtl::spin::parse_word;
use xtl::theorems::{genfun_from_partition, run_suite, Suite};
use xtl::{contour, spinchain, tsasm, Error, Gq, IntPoly, Integer, Rational};

#[derive(Parser, Debug)]
#[command(name = "xtl", version, about = "Exact computations for the open XXZ chain at Delta = -1/2, six-vertex partition functions and TSASMs")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "XTL_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Components of the ground-state vector psi_N as polynomials in x and tau.
    Psi {
        #[arg(long = "N")]
        big_n: usize,
    },
    /// The component sum S_N(x, tau), or its value at a rational point.
    Sum {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, requires = "tau")]
        x: Option<Rational>,
        #[arg(long, requires = "x")]
        tau: Option<Rational>,
    },
    /// Totally symmetric alternating sign matrices.
    Tsasm {
        #[command(subcommand)]
        command: TsasmCommand,
    },
    /// Six-vertex model on the triangular grid.
    Sixvertex {
        #[command(subcommand)]
        command: SixvertexCommand,
    },
    /// The open XXZ chain.
    Spinchain {
        #[command(subcommand)]
        command: SpinchainCommand,
    },
    /// Runs verification suites; one report per line.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long = "max-N", default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, env = "XTL_SEED", default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args, Debug, Clone, Copy)]
#[group(required = true, multiple = false)]
struct Size {
    /// Matrix order 2N+1.
    #[arg(long)]
    order: Option<usize>,
    /// Chain length N.
    #[arg(long = "N")]
    big_n: Option<usize>,
}

impl Size {
    fn big_n(self) -> Result<usize, Error> {
        match (self.order, self.big_n) {
            (Some(o), _) => contour::chain_length_of_order(o),
            (_, Some(n)) => Ok(n),
            _ => Err(Error::Usage("give --order or --N".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    /// Enumeration of TSASMs.
    Enum,
    /// The contour-integral formula.
    Integral,
    /// The homogeneous six-vertex partition function at t = tau = 1.
    Partition,
    /// All three; fails unless they agree.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenfunMethod {
    Enum,
    Partition,
}

#[derive(Subcommand, Debug)]
enum TsasmCommand {
    /// |TSASM(2N+1)|; with --max-N, a table for N = 0..max.
    Count {
        #[arg(long, conflicts_with_all = ["big_n", "max_n"])]
        order: Option<usize>,
        #[arg(long = "N", conflicts_with = "max_n")]
        big_n: Option<usize>,
        #[arg(long = "max-N")]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = CountMethod::Enum)]
        method: CountMethod,
    },
    /// The generating function A_TS(2N+1; t, tau).
    Genfun {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = GenfunMethod::Enum)]
        method: GenfunMethod,
    },
    /// Every TSASM of the given order.
    List {
        #[command(flatten)]
        size: Size,
        /// Print the triangular arrays instead of the full matrices.
        #[arg(long)]
        triangles: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SixvertexCommand {
    /// Partition function for a bottom boundary word such as "dudu".
    Pf {
        #[arg(long)]
        alpha: String,
        /// Square root of q; without it the homogeneous polynomial in (t, q) is printed.
        #[arg(long)]
        s: Option<Gq>,
        #[arg(long, requires = "s")]
        t: Option<Gq>,
        /// Comma-separated inhomogeneities; all 1 by default.
        #[arg(long, requires = "s", value_delimiter = ',')]
        z: Vec<Gq>,
        /// List the configurations instead, one per line.
        #[arg(long, conflicts_with_all = ["s", "t", "z"])]
        configs: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SpinchainCommand {
    /// Checks H psi = E psi exactly at rational x, tau = 1.
    Verify {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        x: Rational,
    },
}

/// Output plus whether everything it reports passed.
struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, pass: true }
    }
}

fn unsupported(what: &str, f: Format) -> Error {
    Error::Usage(format!("{what} cannot be written as {f:?}").to_lowercase())
}

fn line(s: String) -> String {
    if s.ends_with('\n') {
        s
    } else {
        s + "\n"
    }
}

fn poly_out(p: &IntPoly, f: Format) -> Result<Outcome, Error> {
    match f {
        Format::Json => Ok(Outcome::ok(line(p.to_json()))),
        Format::Text => Ok(Outcome::ok(line(p.to_string()))),
        Format::Csv => Err(unsupported("a polynomial", f)),
    }
}

fn count(big_n: usize, method: CountMethod) -> Result<(BigInt, bool), Error> {
    let by_enum = || tsasm::count_tsasm(big_n).map(Integer::from);
    let by_partition = || -> Result<Integer, Error> {
        let one = Integer::from(1);
        Ok(genfun_from_partition(big_n)?.substitute("t", &one)?.substitute("tau", &one)?.constant_term())
    };
    Ok(match method {
        CountMethod::Enum => (by_enum()?, true),
        CountMethod::Integral => (contour::tsasm_count_integral(big_n), true),
        CountMethod::Partition => (by_partition()?, true),
        CountMethod::All => {
            let e = by_enum()?;
            let agree = contour::tsasm_count_integral(big_n) == e && by_partition()? == e;
            (e, agree)
        }
    })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let f = cli.format;
    match &cli.command {
        Command::Psi { big_n } => {
            let table = contour::psi_components(*big_n);
            match f {
                Format::Json => Ok(Outcome::ok(line(table.to_json()))),
                Format::Text => Ok(Outcome::ok(table.to_text())),
                Format::Csv => Err(unsupported("a component table", f)),
            }
        }
        Command::Sum { big_n, x, tau } => match (x, tau) {
            (Some(x), Some(tau)) => {
                let v = contour::sum_components_at(*big_n, x, tau);
                match f {
                    Format::Json => Ok(Outcome::ok(line(serde_json::json!({ "N": big_n, "x": x.to_string(), "tau": tau.to_string(), "value": v.to_string() }).to_string()))),
                    Format::Text => Ok(Outcome::ok(line(v.to_string()))),
                    Format::Csv => Err(unsupported("a value", f)),
                }
            }
            _ => poly_out(&contour::sum_components(*big_n), f),
        },
        Command::Tsasm { command } => match command {
            TsasmCommand::Count { order, big_n, max_n, method } => {
                let ns: Vec<usize> = match (order, big_n, max_n) {
                    (Some(o), _, _) => vec![contour::chain_length_of_order(*o)?],
                    (_, Some(n), _) => vec![*n],
                    (_, _, Some(m)) => (0..=*m).collect(),
                    _ => return Err(Error::Usage("give --order, --N or --max-N".into())),
                };
                let mut rows = Vec::new();
                let mut pass = true;
                for n in ns {
                    let (c, ok) = count(n, *method)?;
                    pass &= ok;
                    rows.push((n, c));
                }
                let body = match f {
                    Format::Csv => contour::count_table_csv(&rows),
                    Format::Text => rows.iter().map(|(_, c)| format!("{c}\n")).collect(),
                    Format::Json => rows
                        .iter()
                        .map(|(n, c)| format!("{}\n", serde_json::json!({ "N": n, "order": 2 * n + 1, "count": c.to_string() })))
                        .collect(),
                };
                Ok(Outcome { body, pass })
            }
            TsasmCommand::Genfun { size, method } => {
                let n = size.big_n()?;
                let p = match method {
                    GenfunMethod::Enum => tsasm::genfun(n)?,
                    GenfunMethod::Partition => genfun_from_partition(n)?,
                };
                poly_out(&p, f)
            }
            TsasmCommand::List { size, triangles } => {
                let n = size.big_n()?;
                if *triangles {
                    let ts = tsasm::enumerate_triangles(n)?;
                    return match f {
                        Format::Json => Ok(Outcome::ok(ts.iter().map(|t| t.to_json() + "\n").collect())),
                        _ => Err(unsupported("triangular arrays", f)),
                    };
                }
                let ms = tsasm::enumerate_tsasm(n)?;
                match f {
                    Format::Text => Ok(Outcome::ok(tsasm::to_text_blocks(&ms))),
                    Format::Json => Ok(Outcome::ok(line(serde_json::to_string(&ms.iter().map(|m| m.rows().to_vec()).collect::<Vec<_>>()).expect("serializable")))),
                    Format::Csv => Err(unsupported("a matrix list", f)),
                }
            }
        },
        Command::Sixvertex { command } => match command {
            SixvertexCommand::Pf { alpha, s, t, z, configs } => {
                let word = parse_word(alpha).ok_or_else(|| Error::Usage(format!("bad boundary word {alpha:?}")))?;
                if *configs {
                    let cs = enumerate_configs(&word)?;
                    return match f {
                        Format::Text => Ok(Outcome::ok(cs.iter().map(|c| c.to_line() + "\n").collect())),
                        _ => Err(unsupported("a configuration dump", f)),
                    };
                }
                let Some(s) = s else {
                    return poly_out(&partition_enum_homogeneous(&word)?, f);
                };
                let t = t.clone().unwrap_or_else(|| Gq::from(1));
                let z = if z.is_empty() { vec![Gq::from(1); word.len()] } else { z.clone() };
                let p = SvParams::new(s.clone(), t, Gq::from(1))?;
                let v = partition_enum(&p, &word, &z)?;
                match f {
                    Format::Json => Ok(Outcome::ok(line(serde_json::json!({ "alpha": alpha, "value": v.to_string() }).to_string()))),
                    Format::Text => Ok(Outcome::ok(line(v.to_string()))),
                    Format::Csv => Err(unsupported("a value", f)),
                }
            }
        },
        Command::Spinchain { command } => match command {
            SpinchainCommand::Verify { big_n, x } => {
                let r = spinchain::verify_eigenpair(*big_n, x)?;
                let body = match f {
                    Format::Json => line(r.to_json()),
                    Format::Text => format!(
                        "{} N={} x={} E={}\n",
                        if r.pass() { "PASS" } else { "FAIL" },
                        r.big_n,
                        r.x,
                        r.eigenvalue
                    ),
                    Format::Csv => return Err(unsupported("an eigenpair report", f)),
                };
                Ok(Outcome { body, pass: r.pass() })
            }
        },
        Command::Verify { suite, max_n, trials, seed } => {
            let suite: Suite = suite.parse()?;
            let reports = run_suite(suite, *max_n, *trials, *seed)?;
            let pass = reports.iter().all(|r| r.pass);
            let body = match f {
                Format::Json => reports.iter().map(|r| r.to_json() + "\n").collect(),
                Format::Text => reports
                    .iter()
                    .map(|r| {
                        let n = r.big_n.map(|n| format!(" N={n}")).unwrap_or_default();
                        let p = r.parameters.as_ref().map(|p| format!(" [{p}]")).unwrap_or_default();
                        format!("{} {}{}{} ({} checks)\n", if r.pass { "PASS" } else { "FAIL" }, r.property, n, p, r.trials)
                    })
                    .collect(),
                Format::Csv => return Err(unsupported("a report stream", f)),
            };
            Ok(Outcome { body, pass })
        }
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("xtl: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(o) => {
            if let Err(e) = emit(&cli, &o.body) {
                eprintln!("xtl: {e}");
                return ExitCode::from(2);
            }
            if o.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ (Error::Usage(_) | Error::Domain(_))) => {
            eprintln!("xtl: {e}");
            ExitCode::from(2)
        }
        Err(e @ Error::Internal(_)) => {
            eprintln!("xtl: {e}");
            ExitCode::from(1)
        }
    }
}
