//! Command-line front end for the dendriform triple-product identity
//! computations.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dendriform::degree7::{self, RunOptions};
use dendriform::error::Error;
use dendriform::freealg::{dd_basis, enumerate_tt_types, render_dd, render_tt};
use dendriform::identities::{analyze, degree3_lattice};
use dendriform::modlinalg::Gf;
use dendriform::products::OperationKind;
use dendriform::symmetric::Partition;

#[derive(Parser)]
#[command(
    name = "dendriform",
    about = "Multilinear polynomial identities of the pre-Lie and pre-Jordan \
             triple products in the free dendriform dialgebra",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PrimeArg {
    /// Field modulus (prime, > degree, < 256); DENDRIFORM_PRIME overrides
    /// the default of 101.
    #[arg(long)]
    prime: Option<u64>,
}

impl PrimeArg {
    fn gf(&self, degree: usize) -> Result<Gf, Error> {
        let p = match self.prime {
            Some(p) => p,
            None => match std::env::var("DENDRIFORM_PRIME") {
                Ok(s) => s.parse().map_err(|_| Error::BadPrime { p: 0, degree })?,
                Err(_) => 101,
            },
        };
        Gf::new(p, degree)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the ordered TT-types and normal DD-types of one degree.
    Types {
        #[arg(long)]
        degree: usize,
    },
    /// Expansion-matrix analysis in degree 3 or 5: rank, nullity, module
    /// generators, rank trace.
    Analyze {
        #[arg(long)]
        degree: usize,
        /// prelie, prejordan, or prejordan-lr
        #[arg(long)]
        op: String,
        #[command(flatten)]
        prime: PrimeArg,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimensions of the degree-3 submodule lattice on two binary
    /// operations.
    Lattice {
        #[command(flatten)]
        prime: PrimeArg,
        /// Write a JSON report here (stdout shows a plain table).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-partition degree-7 analysis of lifted vs. all identities.
    Degree7 {
        /// prelie or prejordan
        #[arg(long)]
        op: String,
        /// Restrict to a single partition, e.g. 421 or 31111.
        #[arg(long)]
        partition: Option<String>,
        #[command(flatten)]
        prime: PrimeArg,
        /// Worker threads across partitions (0 = default).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the rank table as TSV.
        #[arg(long)]
        tsv: Option<PathBuf>,
        /// Skip matrix-unit extraction of new identities.
        #[arg(long)]
        no_extract: bool,
        /// Scalar applied to extracted rows before symmetric
        /// representatives.
        #[arg(long, default_value_t = 2)]
        scale: u8,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run() -> Result<bool, Box<dyn std::error::Error>> {
    let cli = Cli::parse();
    match cli.command {
        Command::Types { degree } => {
            let tt = enumerate_tt_types(degree)?;
            let dd = dd_basis(degree);
            let mut s = String::new();
            s.push_str(&format!(
                "{} TT-types, {} DD-types in degree {}\n",
                tt.len(),
                dd.num_types(),
                degree
            ));
            for (k, t) in tt.iter().enumerate() {
                s.push_str(&format!(
                    "TT {:>3}  {}\n",
                    k + 1,
                    render_tt(&t.fill_identity())
                ));
            }
            for (k, t) in dd.types().iter().enumerate() {
                s.push_str(&format!(
                    "DD {:>3}  {}\n",
                    k + 1,
                    render_dd(&t.fill_identity())
                ));
            }
            emit(&s, None)?;
            Ok(true)
        }
        Command::Analyze {
            degree,
            op,
            prime,
            out,
        } => {
            let op = OperationKind::parse(&op)
                .ok_or_else(|| Error::BadPolynomial(format!("unknown operation {op:?}")))?;
            let gf = prime.gf(degree)?;
            let report = analyze(degree, op, gf)?;
            let ok = report.checks_passed;
            let mut json = serde_json::to_string_pretty(&report)?;
            json.push('\n');
            emit(&json, out.as_ref())?;
            Ok(ok)
        }
        Command::Lattice { prime, out } => {
            let gf = prime.gf(3)?;
            let lat = degree3_lattice(gf);
            match out {
                Some(path) => {
                    let mut json = serde_json::to_string_pretty(&lat)?;
                    json.push('\n');
                    std::fs::write(path, json)?;
                }
                None => {
                    let rows = [
                        ("dias", lat.dias),
                        ("dend", lat.dend),
                        ("tlie", lat.tlie),
                        ("tjor", lat.tjor),
                        ("dias+tlie", lat.dias_plus_tlie),
                        ("dias^tlie", lat.dias_cap_tlie),
                        ("dend+tlie", lat.dend_plus_tlie),
                        ("dend^tlie", lat.dend_cap_tlie),
                        ("dias+tjor", lat.dias_plus_tjor),
                        ("dias^tjor", lat.dias_cap_tjor),
                        ("dend+tjor", lat.dend_plus_tjor),
                        ("dend^tjor", lat.dend_cap_tjor),
                        ("dend+tlie+tjor", lat.dend_plus_tlie_plus_tjor),
                        ("dias+tlie+tjor", lat.dias_plus_tlie_plus_tjor),
                    ];
                    let mut s = String::new();
                    for (name, dim) in rows {
                        s.push_str(&format!("{name:<16}{dim}\n"));
                    }
                    emit(&s, None)?;
                }
            }
            Ok(true)
        }
        Command::Degree7 {
            op,
            partition,
            prime,
            jobs,
            out,
            tsv,
            no_extract,
            scale,
        } => {
            let op = OperationKind::parse(&op)
                .ok_or_else(|| Error::BadPolynomial(format!("unknown operation {op:?}")))?;
            let gf = prime.gf(7)?;
            let partition = partition.map(|s| Partition::parse(&s)).transpose()?;
            let opts = RunOptions {
                op,
                gf,
                partition,
                jobs,
                extract: !no_extract,
                extract_scale: scale,
            };
            let report = degree7::run_degree7(&opts)?;
            let ok = report.checks_passed;
            if let Some(path) = &tsv {
                std::fs::write(path, degree7::report_tsv(&report))?;
            }
            let mut json = serde_json::to_string_pretty(&report)?;
            json.push('\n');
            emit(&json, out.as_ref())?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: internal consistency checks failed");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
