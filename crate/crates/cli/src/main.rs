use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lorenz_core::braid::{alexander_polynomial, lorenz_braid};
use lorenz_core::grid::{build_grid, export, ExportFormat, GridError};
use lorenz_core::harness::{
    enumerate_words, verify_corpus, verify_word, Execution, VerificationReport,
};
use lorenz_core::invariants::closed_form_invariants;
use lorenz_core::unknotting::unknotting_set;
use lorenz_core::{GridDiagram, LorenzWord, OrbitCombinatorics};

const VERIFICATION_FAILURE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "lorenz",
    version,
    about = "Unknotting numbers and grid diagrams of Lorenz knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit data and closed-form invariants of a word.
    Analyze {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the certified grid diagram.
    Grid {
        word: String,
        /// ascii, svg or json.
        #[arg(long, default_value = "ascii")]
        format: String,
    },
    /// List the crossings to change to reach the unknot.
    Unknot {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the Lorenz braid.
    Braid {
        word: String,
        #[arg(long)]
        alexander: bool,
    },
    /// List one word per primitive necklace.
    Enumerate {
        #[arg(long)]
        max_len: usize,
        /// Include words of trip number one.
        #[arg(long)]
        include_t1: bool,
    },
    /// Run every cross-check on one word or on all words up to a length.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "max_len", conflicts_with = "max_len")]
    word: Option<String>,
    #[arg(long)]
    max_len: Option<usize>,
    /// Worker threads; 1 runs serially.
    #[arg(long, requires = "max_len")]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
}

fn parse_word(text: &str) -> Result<LorenzWord> {
    text.parse()
        .with_context(|| format!("invalid word {text:?}"))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

#[derive(Serialize)]
struct CrossingCounts {
    #[serde(rename = "A")]
    a: usize,
    #[serde(rename = "B")]
    b: usize,
    #[serde(rename = "C")]
    c: usize,
    total: usize,
}

#[derive(Serialize)]
struct Analysis {
    word: String,
    canonical: LorenzWord,
    a: usize,
    b: usize,
    t: usize,
    alpha: Vec<usize>,
    beta: Vec<usize>,
    mu: Vec<usize>,
    nu: Vec<usize>,
    grid_number: usize,
    crossings: CrossingCounts,
    unknotting: usize,
    alexander_x_minus: i64,
}

fn analyze(text: &str, json: bool) -> Result<ExitCode> {
    let word = parse_word(text)?;
    let oc = OrbitCombinatorics::new(&word);
    let r = closed_form_invariants(&oc)?;
    let analysis = Analysis {
        word: text.to_string(),
        canonical: word,
        a: oc.a(),
        b: oc.b(),
        t: oc.t(),
        alpha: oc.alpha(),
        beta: oc.beta(),
        mu: oc.mu().to_vec(),
        nu: oc.nu().to_vec(),
        grid_number: r.grid_number,
        crossings: CrossingCounts {
            a: r.crossings_a,
            b: r.crossings_b,
            c: r.crossings_c,
            total: r.crossings_total,
        },
        unknotting: r.unknotting,
        alexander_x_minus: r.alexander_x_minus,
    };
    if json {
        print_json(&analysis)?;
    } else {
        let a = &analysis;
        println!("word        {} (canonical {})", a.word, a.canonical);
        println!("a, b, t     {}, {}, {}", a.a, a.b, a.t);
        println!("alpha       {:?}", a.alpha);
        println!("beta        {:?}", a.beta);
        println!("mu          {:?}", a.mu);
        println!("nu          {:?}", a.nu);
        println!("grid        {0} x {0}", a.grid_number);
        println!(
            "crossings   {} (A {}, B {}, C {})",
            a.crossings.total, a.crossings.a, a.crossings.b, a.crossings.c
        );
        println!("unknotting  {}", a.unknotting);
        println!("A(x-)       {}", a.alexander_x_minus);
    }
    Ok(ExitCode::SUCCESS)
}

/// A failed postcondition is a verification failure, not bad input.
fn certified_grid(word: &LorenzWord) -> Result<GridDiagram, GridError> {
    build_grid(&OrbitCombinatorics::new(word))
}

fn grid(text: &str, format: &str) -> Result<ExitCode> {
    let format: ExportFormat = format.parse()?;
    let word = parse_word(text)?;
    match certified_grid(&word) {
        Ok(g) => {
            print!("{}", export(&g, format));
            if format == ExportFormat::Json {
                println!();
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(VERIFICATION_FAILURE))
        }
    }
}

fn unknot(text: &str, json: bool) -> Result<ExitCode> {
    let word = parse_word(text)?;
    let g = match certified_grid(&word) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(VERIFICATION_FAILURE));
        }
    };
    let report = match unknotting_set(&g) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(VERIFICATION_FAILURE));
        }
    };
    if json {
        print_json(&report)?;
    } else {
        println!(
            "U = {} (u_AC = {}, u_BC = {}, N_A = {}, N_B = {})",
            report.total, report.u_ac, report.u_bc, report.n_a, report.n_b
        );
        for c in report.changes() {
            println!(
                "change row {:>3} col {:>3}  region {:?}  strings {} over {}",
                c.row + 1,
                c.col + 1,
                c.region,
                c.strings.0,
                c.strings.1
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn braid(text: &str, alexander: bool) -> Result<ExitCode> {
    let word = parse_word(text)?;
    let b = lorenz_braid(&OrbitCombinatorics::new(&word));
    println!("strands    {}", b.strands);
    println!("crossings  {}", b.k);
    println!("word       {}", b.word_string());
    if alexander {
        match alexander_polynomial(&b) {
            Ok(delta) => println!("alexander  {delta}"),
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(ExitCode::from(VERIFICATION_FAILURE));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(max_len: usize, include_t1: bool) -> Result<ExitCode> {
    for w in enumerate_words(max_len, include_t1)? {
        println!("{w}");
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &VerificationReport) {
    for c in &report.checks {
        let status = if c.passed { "pass" } else { "FAIL" };
        match &c.detail {
            Some(d) => println!("{status}  {}: {d}", c.name),
            None => println!("{status}  {}", c.name),
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<ExitCode> {
    let ok = if let Some(text) = &args.word {
        let report = verify_word(&parse_word(text)?);
        if args.json {
            print_json(&report)?;
        } else {
            print_report(&report);
        }
        report.passed()
    } else {
        let max_len = args
            .max_len
            .context("either a word or --max-len is required")?;
        let execution = match args.jobs {
            Some(0) => anyhow::bail!("--jobs must be at least 1"),
            Some(1) => Execution::Serial,
            jobs => Execution::Parallel { jobs },
        };
        let summary = verify_corpus(max_len, execution)?;
        if args.json {
            print_json(&summary)?;
        } else {
            println!(
                "{} words, {} passed, {} failed",
                summary.words, summary.passed, summary.failed
            );
            println!(
                "start-dependent trace counts: {} words",
                summary.start_dependent_words
            );
            for f in &summary.failures {
                println!(
                    "FAIL {} at {}: {}",
                    f.word,
                    f.check,
                    f.detail.as_deref().unwrap_or("")
                );
                println!("     rerun: {}", f.repro);
            }
        }
        summary.all_passed
    };
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERIFICATION_FAILURE)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Analyze { word, json } => analyze(word, *json),
        Command::Grid { word, format } => grid(word, format),
        Command::Unknot { word, json } => unknot(word, *json),
        Command::Braid { word, alexander } => braid(word, *alexander),
        Command::Enumerate {
            max_len,
            include_t1,
        } => enumerate(*max_len, *include_t1),
        Command::Verify(args) => verify(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
