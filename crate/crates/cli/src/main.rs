//! Command-line front end: parse inputs, run the dimension pipelines, emit
//! tables and verification reports.
//!
//! Exit codes: 0 on success, 1 when a verification found mismatches,
//! 2 on malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use liedim::elimination::{self, EliminationInput};
use liedim::freelie::ContextPool;
use liedim::gkm::{
    auto_split, fpc_dims, root_multiplicities, CommutationGraph, MatrixFile, Method, SplitChoice,
};
use liedim::lyndon::{lyndon_words_of_multidegree, lyndon_words_up_to, Alphabet, MultiDegree};
use liedim::presentation::Presentation;
use liedim::series::{witt_dim, GradedDims};

#[derive(Parser)]
#[command(name = "liedim", version, about = "Exact graded dimensions of finitely presented Lie algebras")]
struct Cli {
    /// Output format: json (machine) or tsv (human)
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// List Lyndon words over k letters
    Lyndon(LyndonArgs),
    /// The dimension of one free Lie algebra component
    Witt {
        /// Comma-separated multidegree, e.g. 2,1
        #[arg(long)]
        multidegree: String,
    },
    /// Graded dimensions of a presented quotient (brute-force oracle)
    Dims {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = DimsMethod::Oracle)]
        method: DimsMethod,
    },
    /// Elimination pipeline: predicted dims, optionally verified against
    /// the oracle
    Eliminate {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Also run the brute-force oracle and report mismatches
        #[arg(long)]
        verify: bool,
    },
    /// Root multiplicity table of a Borcherds-Cartan matrix
    Gkm {
        #[arg(long)]
        matrix: PathBuf,
        /// Use the split recorded in the matrix file
        #[arg(long, conflicts_with = "auto_split")]
        split_from_file: bool,
        /// Compute the greedy default split
        #[arg(long)]
        auto_split: bool,
        /// Bound on the total root height
        #[arg(long, default_value_t = 6)]
        max_height: u32,
        #[arg(long, value_enum)]
        method: GkmMethod,
    },
    /// Graded dimensions of a free partially commutative Lie algebra
    Fpc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Run the built-in invariant suite
    Selfcheck,
}

#[derive(Args)]
struct LyndonArgs {
    /// Alphabet size
    #[arg(long)]
    letters: usize,
    /// List words of total degree up to this bound
    #[arg(long)]
    max_degree: u32,
    /// Restrict to one multidegree, e.g. 2,1 (overrides --max-degree)
    #[arg(long)]
    multidegree: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DimsMethod {
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum GkmMethod {
    Theorem,
    Oracle,
    Both,
}

impl From<GkmMethod> for Method {
    fn from(m: GkmMethod) -> Method {
        match m {
            GkmMethod::Theorem => Method::Theorem,
            GkmMethod::Oracle => Method::Oracle,
            GkmMethod::Both => Method::Both,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Lyndon(args) => {
            let words = match &args.multidegree {
                Some(spec) => {
                    let alpha = parse_multidegree(spec)?;
                    if alpha.len() != args.letters {
                        return Err(format!(
                            "--multidegree has {} slots but --letters is {}",
                            alpha.len(),
                            args.letters
                        ));
                    }
                    lyndon_words_of_multidegree(&alpha)
                }
                None => lyndon_words_up_to(args.letters, args.max_degree),
            };
            let alphabet = Alphabet::latin(args.letters.min(26).max(1));
            let formatted: Vec<String> =
                words.iter().map(|w| alphabet.format_word(w)).collect();
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&formatted).unwrap()),
                Format::Tsv => {
                    for w in formatted {
                        println!("{w}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Witt { multidegree } => {
            let alpha = parse_multidegree(multidegree)?;
            if alpha.is_zero() {
                return Err("--multidegree must not be all zero".into());
            }
            println!("{}", witt_dim(&alpha));
            Ok(ExitCode::SUCCESS)
        }

        Command::Dims { presentation, max_degree, method: DimsMethod::Oracle } => {
            let p = read_presentation(presentation)?;
            let compiled = p.compile().map_err(|e| e.to_string())?;
            let mut pool = ContextPool::new();
            let dims = liedim::oracle::quotient_dims(
                pool.ctx(compiled.alphabet.len()),
                &compiled.relations,
                *max_degree,
            )
            .map_err(|e| e.to_string())?;
            print_dims(cli.format, &dims);
            Ok(ExitCode::SUCCESS)
        }

        Command::Eliminate { presentation, max_degree, verify } => {
            let p = read_presentation(presentation)?;
            let input = EliminationInput::new(&p).map_err(|e| e.to_string())?;
            let mut pool = ContextPool::new();
            let report = elimination::run(&input, &mut pool, *max_degree, *verify)
                .map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap())
                }
                Format::Tsv => print!("{}", report.tsv()),
            }
            if *verify && !report.mismatches.is_empty() {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }

        Command::Gkm { matrix, split_from_file, auto_split: auto, max_height, method } => {
            let file: MatrixFile = read_json(matrix)?;
            let m = file.to_matrix().map_err(|e| e.to_string())?;
            let split = if *split_from_file {
                file.split.clone().ok_or_else(|| {
                    format!("{}: --split-from-file but the file has no \"split\"", matrix.display())
                })?
            } else if *auto {
                auto_split(&m).map_err(|e| e.to_string())?
            } else {
                SplitChoice::trivial(m.size())
            };
            let mut pool = ContextPool::new();
            let table =
                root_multiplicities(&m, &split, &mut pool, *max_height, (*method).into())
                    .map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&table).unwrap()),
                Format::Tsv => print!("{}", table.tsv()),
            }
            if !table.mismatches.is_empty() {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }

        Command::Fpc { graph, max_degree } => {
            let g: CommutationGraph = read_json(graph)?;
            let mut pool = ContextPool::new();
            let dims = fpc_dims(&g, &mut pool, *max_degree).map_err(|e| e.to_string())?;
            print_dims(cli.format, &dims);
            Ok(ExitCode::SUCCESS)
        }

        Command::Selfcheck => {
            let mut all_ok = true;
            for check in liedim::selfcheck::run_all() {
                if check.passed {
                    println!("ok   {} - {}", check.name, check.detail);
                } else {
                    println!("FAIL {} - {}", check.name, check.detail);
                    all_ok = false;
                }
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn parse_multidegree(spec: &str) -> Result<MultiDegree, String> {
    let counts: Vec<u32> = spec
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad multidegree entry `{part}` in `{spec}`"))
        })
        .collect::<Result<_, _>>()?;
    if counts.is_empty() {
        return Err("empty multidegree".into());
    }
    Ok(MultiDegree::new(counts))
}

fn read_presentation(path: &Path) -> Result<Presentation, String> {
    read_json(path)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_dims(format: Format, dims: &GradedDims) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(dims).unwrap()),
        Format::Tsv => {
            println!("degree\tdim");
            for (alpha, d) in dims.iter() {
                println!("{alpha}\t{d}");
            }
        }
    }
}
