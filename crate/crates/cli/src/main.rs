use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use clifford_kernel::report::{self, parse_signature};
use clifford_kernel::states::{annihilate, double, fuse, DoubleSign, StateVector};
use clifford_kernel::Signature;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Parser)]
#[command(name = "cliffk", version, about = "Exact Clifford algebra classification, factorization and state bookkeeping")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mod-8 type of Cl(p,q).
    Classify {
        p: usize,
        q: usize,
        /// Also compute the division ring from a primitive idempotent.
        #[arg(long)]
        oracle: bool,
    },
    /// Factor chains into two-dimensional algebras, or the odd decomposition.
    Factorize { p: usize, q: usize },
    /// A primitive idempotent and its minimal left ideal.
    Idempotent { p: usize, q: usize },
    /// Check Cl(target) against a tensor product of factors, e.g. `iso-check 1,3 1,1 0,2`.
    IsoCheck {
        target: String,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Composition table of the eight discrete symmetries on C⊗Cl(p,q).
    Cpt { p: usize, q: usize },
    /// Fuse two states, `|K,b,l,s⟩`, JSON or a name (nu, nubar, e-, e+, gamma, ...).
    Fuse { a: String, b: String },
    /// Complex doubling of a state with sign + or -.
    Double {
        state: String,
        #[arg(allow_hyphen_values = true)]
        sign: String,
    },
    /// Annihilation of a state with its conjugate.
    Annihilate { a: String, b: String },
    /// Representation cone up to k + r = max-m.
    Spectrum {
        #[arg(long)]
        max_m: u32,
    },
    /// Sweep every signature with p + q <= max-n and write a JSON atlas.
    Atlas {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Input(String),
    Disagreement(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Disagreement(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn signature(p: usize, q: usize) -> Result<Signature, Failure> {
    Signature::new(p, q).map_err(input)
}

fn state(s: &str) -> Result<StateVector, Failure> {
    StateVector::parse_any(s).map_err(input)
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
        Format::Table => table(value),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    match cli.command {
        Command::Classify { p, q, oracle } => {
            let r = report::classify_report(signature(p, q)?, oracle).map_err(input)?;
            let out = emit(fmt, &r, report::ClassifyReport::table);
            match &r.oracle {
                Some(o) if !o.agrees => Err(Failure::Disagreement(format!("{out}oracle disagrees: {} vs {}", r.ring, o.ring))),
                _ => Ok(out),
            }
        }
        Command::Factorize { p, q } => {
            let r = report::factorize_report(signature(p, q)?);
            let out = emit(fmt, &r, report::FactorizeReport::table);
            if r.verified {
                Ok(out)
            } else {
                Err(Failure::Disagreement(format!("{out}verification failed")))
            }
        }
        Command::Idempotent { p, q } => {
            let r = report::idempotent_report(signature(p, q)?).map_err(input)?;
            Ok(emit(fmt, &r, report::IdempotentReport::table))
        }
        Command::IsoCheck { target, factors } => {
            let t = parse_signature(&target).map_err(input)?;
            let fs = factors.iter().map(|f| parse_signature(f)).collect::<Result<Vec<_>, _>>().map_err(input)?;
            let r = report::iso_report(t, &fs);
            let out = emit(fmt, &r, report::IsoReport::table);
            if r.verified {
                Ok(out)
            } else {
                Err(Failure::Disagreement(out))
            }
        }
        Command::Cpt { p, q } => {
            let r = report::cpt_report(signature(p, q)?).map_err(input)?;
            Ok(emit(fmt, &r, report::CptReport::table))
        }
        Command::Fuse { a, b } => {
            let (a, b) = (state(&a)?, state(&b)?);
            let r = report::single_report("fuse", &[&a, &b], &fuse(&a, &b));
            Ok(emit(fmt, &r, report::StateOpReport::table))
        }
        Command::Double { state: s, sign } => {
            let s = state(&s)?;
            let sign: DoubleSign = sign.parse().map_err(input)?;
            let d = double(&s, sign).map_err(input)?;
            let r = report::single_report("double", &[&s], &d);
            Ok(emit(fmt, &r, report::StateOpReport::table))
        }
        Command::Annihilate { a, b } => {
            let (a, b) = (state(&a)?, state(&b)?);
            let sum = annihilate(&a, &b).map_err(input)?;
            let r = report::sum_report("annihilate", &[&a, &b], &sum);
            Ok(emit(fmt, &r, report::StateOpReport::table))
        }
        Command::Spectrum { max_m } => {
            let r = report::spectrum_report(max_m);
            Ok(emit(fmt, &r, report::SpectrumReport::table))
        }
        Command::Atlas { max_n, out } => {
            let sigs = report::atlas_signatures(max_n).map_err(input)?;
            let entries = sigs.into_par_iter().map(report::atlas_entry).collect();
            let atlas = report::assemble_atlas(max_n, entries);
            let json = serde_json::to_string_pretty(&atlas).expect("atlas serializes") + "\n";
            fs::write(&out, json).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            let summary = format!(
                "wrote {} signatures to {} ({})\n",
                atlas.count,
                out.display(),
                if atlas.all_verified { "all verified" } else { "some chains FAILED" }
            );
            if atlas.all_verified {
                Ok(summary)
            } else {
                Err(Failure::Disagreement(summary))
            }
        }
    }
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
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let code = f.code();
            match f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Disagreement(m) => println!("{m}"),
                Failure::Io(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(code)
        }
    }
}
