//! `tlrc`: construct, verify, classify and search ternary optimal LRCs.
//!
//! Exit codes: 0 success or found, 1 not optimal / not found / no class,
//! 2 usage or input error, 3 internal invariant failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ternary_lrc::code::LinearCode;
use ternary_lrc::constructions::{construct, OptimalClass};
use ternary_lrc::locality::code_locality;
use ternary_lrc::matrix_file;
use ternary_lrc::oracle::{exists_optimal_lrc, SearchMode, SearchTask};
use ternary_lrc::report::{class_table, verify_parity_check};
use ternary_lrc::{classify, Error, Gf3Matrix};

const NOT_OPTIMAL: u8 = 1;
const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tlrc",
    version,
    about = "Optimal ternary locally repairable codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the parity-check matrix of a class instance.
    Construct {
        /// Class id, 1 to 8.
        #[arg(long = "class")]
        class: u8,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Columns deleted from the length-13 Hamming code (class 2).
        #[arg(long)]
        g: Option<usize>,
        /// Number of locality blocks (classes 6 and 7).
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Report n, k, d, locality and optimality of a parity-check matrix file.
    Verify {
        path: PathBuf,
        /// Declared locality, reported next to the exact one.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide which optimal class, if any, has parameters (n, k, r).
    Classify { n: usize, k: usize, r: usize },
    /// Exhaustively search systematic [n, k] codes for d = n-k-ceil(k/r)+2 and locality r.
    Search {
        n: usize,
        k: usize,
        r: usize,
        /// Largest candidate count allowed, as an integer or "3^e".
        #[arg(long, value_parser = parse_cap, default_value = "3^16")]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Mode::FindFirst)]
        mode: Mode,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Output file for the witness parity-check matrix; stdout when omitted.
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Construct and verify every class instance of the optimal-class table.
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    FindFirst,
    CountAll,
}

fn parse_cap(s: &str) -> Result<u64, String> {
    let bad = || format!("cap {s:?} is neither an integer nor \"3^e\"");
    match s.split_once('^') {
        Some((base, exp)) => {
            let base: u64 = base.trim().parse().map_err(|_| bad())?;
            let exp: u32 = exp.trim().parse().map_err(|_| bad())?;
            base.checked_pow(exp)
                .ok_or_else(|| format!("cap {s} overflows 64 bits"))
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

/// A failure with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(USAGE, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn need(v: Option<usize>, flag: &str, class: u8) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure(USAGE, format!("class {class} needs --{flag}")))
}

fn class_from_flags(
    class: u8,
    k: Option<usize>,
    r: Option<usize>,
    g: Option<usize>,
    l: Option<usize>,
    n: Option<usize>,
) -> Result<OptimalClass, Failure> {
    Ok(match class {
        1 => OptimalClass::SingleParityBlocks {
            k: need(k, "k", 1)?,
            r: need(r, "r", 1)?,
        },
        2 => OptimalClass::ShortenedHamming {
            g: need(g, "g", 2)?,
        },
        3 => OptimalClass::PairedRepetition {
            k: need(k, "k", 3)?,
        },
        4 => OptimalClass::Length8Distance6,
        5 => OptimalClass::NearMds {
            n: need(n, "n", 5)?,
            k: need(k, "k", 5)?,
        },
        6 => OptimalClass::WeightFourBlocks {
            l: need(l, "l", 6)?,
        },
        7 => OptimalClass::WeightThreeBlocks {
            l: need(l, "l", 7)?,
        },
        8 => OptimalClass::Length12Distance6,
        other => {
            return Err(Failure(
                USAGE,
                format!("class must be 1 to 8 (got {other})"),
            ))
        }
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Construct {
            class,
            k,
            r,
            g,
            l,
            n,
            output,
        } => {
            let class = class_from_flags(class, k, r, g, l, n)?;
            let h = construct(&class)?.parity_check().clone();
            match output {
                Some(path) => {
                    matrix_file::write(&path, &h)?;
                    let p = class.params();
                    eprintln!(
                        "wrote {}x{} parity-check matrix of {class}: n={} k={} d={} r={}",
                        h.rows(),
                        h.cols(),
                        p.n,
                        p.k,
                        p.d,
                        p.r
                    );
                }
                None => print!("{}", matrix_file::serialize(&h)),
            }
            Ok(0)
        }
        Command::Verify { path, r, format } => {
            let h = matrix_file::read(&path)?;
            let report = verify_parity_check(&h, r)?;
            match format {
                Format::Text => println!("{report}"),
                Format::Kv => print!("{}", report.to_kv()),
            }
            Ok(if report.optimal { 0 } else { NOT_OPTIMAL })
        }
        Command::Classify { n, k, r } => {
            let verdict = classify(n, k, r)?;
            println!("{verdict}");
            for c in &verdict.matches {
                println!("  {c}");
            }
            for b in &verdict.explanation {
                println!("  {b}");
            }
            if let Some(note) = verdict.note {
                println!("  {note}");
            }
            Ok(if verdict.exists { 0 } else { NOT_OPTIMAL })
        }
        Command::Search {
            n,
            k,
            r,
            cap,
            mode,
            workers,
            output,
        } => {
            if r == 0 {
                return Err(Failure(USAGE, "locality must be at least 1".into()));
            }
            let task = SearchTask {
                cap,
                workers,
                mode: match mode {
                    Mode::FindFirst => SearchMode::FindFirst,
                    Mode::CountAll => SearchMode::CountAll,
                },
                ..SearchTask::optimal(n, k, r)
            };
            let res = exists_optimal_lrc(&task)?;
            let secs = res.elapsed.as_secs_f64();
            if !res.found {
                println!("NOT FOUND ({} examined)", res.examined);
                eprintln!("target d={} r={}, {secs:.2}s", task.target_d, r);
                return Ok(NOT_OPTIMAL);
            }
            match task.mode {
                SearchMode::FindFirst => println!("FOUND ({} examined)", res.examined),
                SearchMode::CountAll => {
                    println!(
                        "FOUND ({} witnesses, {} examined)",
                        res.witnesses, res.examined
                    )
                }
            }
            eprintln!("target d={} r={}, {secs:.2}s", task.target_d, r);
            let g = res.witness.expect("found implies a witness");
            // written as a parity-check matrix so `verify` reads it back
            let h = check_witness(&g, &task)?;
            match output {
                Some(path) => matrix_file::write(&path, &h)?,
                None => print!("{}", matrix_file::serialize(&h)),
            }
            Ok(0)
        }
        Command::Table => {
            let rows = class_table()?;
            let mut all = true;
            for row in &rows {
                println!("{row}");
                all &= row.verified();
            }
            println!("{} rows", rows.len());
            if all {
                Ok(0)
            } else {
                Err(Failure(
                    INTERNAL,
                    "a table row does not match its class formula".into(),
                ))
            }
        }
    }
}

fn check_witness(g: &Gf3Matrix, task: &SearchTask) -> Result<Gf3Matrix, Failure> {
    let broken = |what: String| Failure(INTERNAL, format!("witness check failed: {what}"));
    let code = LinearCode::from_generator(g).map_err(|e| broken(e.to_string()))?;
    let d = code.min_distance().map_err(|e| broken(e.to_string()))?;
    let r = code_locality(&code)
        .map_err(|e| broken(e.to_string()))?
        .code_locality();
    if (d as i64) < task.target_d || r > task.r || code.k() != task.k {
        return Err(broken(format!("k={} d={d} r={r}", code.k())));
    }
    Ok(code.parity_check().clone())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
