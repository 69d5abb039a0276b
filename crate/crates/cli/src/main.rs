use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use svand::modules::{graded_frobenius, supercoinvariant_frobenius, BigradedFrobenius, Grading, ModuleSpec};
use svand::superspace::super_vandermonde;
use svand::verify::{self, Format, Params, Status, SuiteOptions};

/// Superspace Vandermondes, their closure modules and the check suite.
///
/// The worker thread count is read from SVAND_THREADS (default: all cores).
#[derive(Parser)]
#[command(name = "svand", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Δ_n(a).
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_seq, default_value = "")]
        a: Seq,
    },
    /// Build a module and print its piece dimensions.
    Build {
        #[command(flatten)]
        space: SpaceArgs,
        /// Also print a basis of every piece.
        #[arg(long)]
        basis: bool,
    },
    /// Print the bigraded Hilbert matrix (rows: θ- or y-degree, columns: x-degree).
    Hilb {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Print the bigraded Frobenius image.
    Frob {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t = FrobBasis::Schur)]
        basis: FrobBasis,
        #[arg(long, value_enum, default_value_t = FrobFormat::Text)]
        format: FrobFormat,
    },
    /// Run one registered check.
    Check {
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_parser = parse_seq)]
        a: Option<Seq>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        cases: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the default grid of every check up to `--max-n`.
    Suite {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Comma-separated check ids; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Include W-spaces at n = 6 and SR_4.
        #[arg(long)]
        large: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the registered checks.
    List,
}

/// A comma-separated sequence such as `2,1`; the empty string is the empty
/// sequence.
type Seq = Vec<u32>;

fn parse_seq(s: &str) -> std::result::Result<Seq, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|e| format!("`{t}`: {e}")))
        .collect()
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(long, value_enum)]
    space: SpaceKind,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_seq, default_value = "")]
    a: Seq,
    /// Largest x-degree computed for SR.
    #[arg(long)]
    cap: Option<u32>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceKind {
    #[value(name = "V")]
    V,
    #[value(name = "W")]
    W,
    #[value(name = "M")]
    M,
    #[value(name = "VV")]
    VV,
    /// The supercoinvariant quotient.
    #[value(name = "SR")]
    SR,
}

#[derive(Clone, Copy, ValueEnum)]
enum FrobBasis {
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum FrobFormat {
    Text,
    Latex,
    Json,
}

enum Built {
    Module(svand::qlinalg::GradedSubspace, Grading),
    Quotient(BigradedFrobenius),
}

fn build(args: &SpaceArgs) -> Result<Built> {
    let (n, a) = (args.n, args.a.clone());
    let spec = match args.space {
        SpaceKind::V => ModuleSpec::V { n, a },
        SpaceKind::W => ModuleSpec::W { n, a },
        SpaceKind::M => ModuleSpec::M { n },
        SpaceKind::VV => ModuleSpec::VV { n, a },
        SpaceKind::SR => {
            let cap = args.cap.unwrap_or((n * n.saturating_sub(1) / 2 + 2) as u32);
            let sr = supercoinvariant_frobenius(n, cap)?;
            if !sr.vanishes_near_cap() {
                eprintln!("warning: pieces near x-degree {cap} are nonzero; raise --cap");
            }
            return Ok(Built::Quotient(sr.frobenius));
        }
    };
    Ok(Built::Module(spec.build()?, spec.grading()))
}

fn frobenius(built: &Built) -> Result<BigradedFrobenius> {
    Ok(match built {
        Built::Module(space, grading) => graded_frobenius(space, *grading)?,
        Built::Quotient(f) => f.clone(),
    })
}

fn print_matrix(m: &[Vec<u64>]) {
    for row in m {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        println!("{}", cells.join(" "));
    }
}

fn write_reports(reports: &[verify::CheckReport], output: &OutputArgs) -> Result<bool> {
    let format: Format = output.format.parse()?;
    let doc = verify::emit(reports, format)?;
    match &output.out {
        Some(path) => std::fs::write(path, doc).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{doc}"),
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let skipped = reports.iter().filter(|r| r.status == Status::Skipped).count();
    eprintln!("{} reports: {} failed, {} skipped", reports.len(), failed, skipped);
    Ok(failed == 0)
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("SVAND_THREADS") {
        let threads: usize = v.parse().with_context(|| format!("SVAND_THREADS={v}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    configure_threads()?;
    match cli.command {
        Command::Delta { n, a } => {
            if a.len() > n {
                bail!("a has {} entries but n = {n}", a.len());
            }
            println!("{}", super_vandermonde(n, &a)?);
        }
        Command::Build { space, basis } => match build(&space)? {
            Built::Module(m, _) => {
                println!("dim {}", m.dim());
                for (d, piece) in m.pieces() {
                    println!("{d} {}", piece.dim());
                    if basis {
                        for f in piece.elements() {
                            println!("  {f}");
                        }
                    }
                }
            }
            Built::Quotient(f) => {
                if basis {
                    eprintln!("note: SR is computed as a quotient; no basis is printed");
                }
                let h = f.hilbert()?;
                println!("dim {}", h.values().sum::<u64>());
                for ((i, j), c) in h {
                    println!("({i},{j}) {c}");
                }
            }
        },
        Command::Hilb { space } => print_matrix(&frobenius(&build(&space)?)?.hilbert_matrix()?),
        Command::Frob { space, basis: FrobBasis::Schur, format } => {
            let f = frobenius(&build(&space)?)?;
            match format {
                FrobFormat::Text => {
                    for ((i, j), g) in f.pieces() {
                        println!("({i},{j}) {g}");
                    }
                }
                FrobFormat::Latex => println!("{}", f.latex()),
                FrobFormat::Json => println!("{}", serde_json::to_string_pretty(&f.to_json())?),
            }
        }
        Command::Check { id, n, k, s, r, a, seed, cases, output } => {
            let params = Params { n, k, s, r, a, seed, cases };
            let report = verify::run_check(&id, &params)?;
            return write_reports(&[report], &output);
        }
        Command::Suite { max_n, only, large, seed, output } => {
            let mut opts = SuiteOptions::new(max_n);
            opts.only = only;
            opts.large = large;
            if let Some(seed) = seed {
                opts.seed = seed;
            }
            let reports = verify::run_suite(&opts)?;
            return write_reports(&reports, &output);
        }
        Command::List => {
            for def in verify::registry() {
                let kind = match def.kind {
                    verify::CheckKind::Theorem => "theorem",
                    verify::CheckKind::Conjecture => "conjecture",
                };
                println!("{:<22} {:<10} {}\n{:<33} default grid: {}", def.id, kind, def.citation, "", def.scope);
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
