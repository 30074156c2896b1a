//! Command-line driver: `analyze`, `evaluate`, `validate`, `q`.
//!
//! Exit codes are a stable contract: 0 success, 1 usage/input error,
//! 2 iteration budget exhausted (or an unverified eigenpair), 3 ledger
//! validation failure.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ntpack::algorithms::{
    basic_computation, compute_q, guess_and_check, main_algorithm, TraceStep,
};
use ntpack::cone::{Coords, PLPoint};
use ntpack::rational::{parse_rat, render_rat_short};
use ntpack::validate::validate_ledger;
use ntpack::{Error, Ledger, RatVector, Triple, Word};

use output::{grid_text, matrix_grid, OutputRecord};

#[derive(Parser)]
#[command(name = "ntpack", version, about = "Exact stretch factors and invariant foliations from piecewise-integral-linear ledger actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Guess,
    #[value(name = "main-q")]
    MainQ,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the stretch factor and invariant foliation of a word.
    Analyze(AnalyzeArgs),
    /// Evaluate a word at a point and report the acting triple.
    Evaluate(EvaluateArgs),
    /// Run the ledger consistency checks.
    Validate(ValidateArgs),
    /// Print the iteration constant Q(S) and its ladder.
    Q(QArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Built-in ledger name (`b3`, `ydelta`) or a path to a ledger file.
    #[arg(long)]
    ledger: String,
    /// The word, e.g. "s2 s1' s2 s1 s1 s1" (leftmost letter applied last).
    #[arg(long)]
    word: String,
    #[arg(long, value_enum, default_value = "guess")]
    strategy: StrategyArg,
    /// Override the power used by the main-q strategy.
    #[arg(long)]
    q: Option<u64>,
    /// Iteration budget for the guess strategy.
    #[arg(long, default_value_t = 64)]
    max_k: usize,
    /// Wall on total letter applications for the main-q strategy.
    #[arg(long, default_value_t = 10_000_000)]
    max_letters: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Significant digits for decimal renderings.
    #[arg(long, default_value_t = 30)]
    digits: usize,
}

#[derive(Args)]
struct EvaluateArgs {
    #[arg(long)]
    ledger: String,
    #[arg(long)]
    word: String,
    /// Start point as "cell:coords", e.g. "V1:1,2"; defaults to the ledger
    /// basepoint.
    #[arg(long)]
    point: Option<String>,
    /// Apply the word this many times.
    #[arg(long, default_value_t = 1)]
    power: u64,
    /// Print the per-step table (step, point, piece, letter, codomain,
    /// matrix, image).
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long)]
    ledger: String,
    /// Relator pair "lhs=rhs", repeatable.
    #[arg(long)]
    relator: Vec<String>,
    /// Sample points per (generator, cell).
    #[arg(long, default_value_t = 200)]
    samples: usize,
}

#[derive(Args)]
struct QArgs {
    #[arg(long)]
    genus: i64,
    #[arg(long)]
    punctures: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze(args) => cmd_analyze(&args),
        Command::Evaluate(args) => cmd_evaluate(&args),
        Command::Validate(args) => cmd_validate(&args),
        Command::Q(args) => cmd_q(&args),
    };
    match code {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_class(&e))
        }
    }
}

/// 1 usage/input, 2 budget/verification, 3 ledger validation.
fn exit_class(e: &Error) -> u8 {
    match e {
        Error::BudgetExhausted { .. }
        | Error::VerificationFailed
        | Error::LetterBudgetExceeded { .. }
        | Error::ZeroInvariantSubspace => 2,
        Error::Parse(_) | Error::Validation(_) | Error::ImageOutsideCodomain { .. } => 3,
        _ => 1,
    }
}

fn resolve_ledger(name: &str) -> ntpack::Result<Ledger> {
    match name {
        "b3" => Ok(ntpack::builtin_b3()),
        "ydelta" => Ok(ntpack::builtin_ydelta()),
        path => ntpack::load_ledger(&PathBuf::from(path)),
    }
}

fn parse_point(ledger: &Ledger, spec: &str) -> ntpack::Result<PLPoint> {
    let (cell_name, coords) = spec
        .split_once(':')
        .ok_or_else(|| Error::WordSyntax(format!("point `{spec}` is not `cell:coords`")))?;
    let cell = ledger.cell_by_name(cell_name.trim())?;
    let entries = coords
        .split(',')
        .map(parse_rat)
        .collect::<ntpack::Result<Vec<_>>>()
        .map_err(|_| Error::WordSyntax(format!("bad coordinates in `{spec}`")))?;
    if entries.len() != cell.cone.ambient_dim {
        return Err(Error::WordSyntax(format!(
            "cell {} has dimension {}, point has {}",
            cell.name,
            cell.cone.ambient_dim,
            entries.len()
        )));
    }
    let p = PLPoint::rational(cell.id, RatVector::new(entries));
    if !cell.cone.contains(&p.coords)? {
        return Err(Error::PointOutsideCell);
    }
    Ok(p)
}

fn cmd_analyze(args: &AnalyzeArgs) -> ntpack::Result<()> {
    let ledger = resolve_ledger(&args.ledger)?;
    let word = Word::parse(&args.word, &ledger.generator_names())?;
    let started = Instant::now();
    let result = match args.strategy {
        StrategyArg::Guess => guess_and_check(&ledger, &word, args.max_k)?,
        StrategyArg::MainQ => main_algorithm(&ledger, &word, args.q, args.max_letters)?,
    };
    let elapsed = started.elapsed().as_millis();
    let record = OutputRecord::from_analysis(&args.word, &ledger, &result, args.digits, elapsed)?;
    match args.format {
        Format::Text => print!("{}", record.render_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&record).unwrap()),
    }
    Ok(())
}

#[derive(Serialize)]
struct PointRecord {
    cell: String,
    coords: Vec<String>,
}

#[derive(Serialize)]
struct StepRecord {
    step: String,
    point: PointRecord,
    piece: String,
    letter: String,
    codomain: String,
    matrix: Vec<Vec<String>>,
    image: PointRecord,
}

#[derive(Serialize)]
struct EvaluateRecord {
    word: String,
    ledger: String,
    power: String,
    start: PointRecord,
    end: PointRecord,
    triple: TripleRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<Vec<StepRecord>>,
}

#[derive(Serialize)]
struct TripleRecord {
    matrix: Vec<Vec<String>>,
    domain: String,
    codomain: String,
}

fn point_record(ledger: &Ledger, p: &PLPoint) -> PointRecord {
    let coords = match &p.coords {
        Coords::Rat(v) => v.entries().iter().map(render_rat_short).collect(),
        Coords::Alg(_) => vec!["<algebraic>".to_string()],
    };
    PointRecord {
        cell: ledger.cell(p.cell).name.clone(),
        coords,
    }
}

fn point_text(ledger: &Ledger, p: &PLPoint) -> String {
    let r = point_record(ledger, p);
    format!("({}) in {}", r.coords.join(", "), r.cell)
}

fn cmd_evaluate(args: &EvaluateArgs) -> ntpack::Result<()> {
    let ledger = resolve_ledger(&args.ledger)?;
    let word = Word::parse(&args.word, &ledger.generator_names())?;
    let start = match &args.point {
        Some(spec) => parse_point(&ledger, spec)?,
        None => ledger.basepoint.clone(),
    };
    let mut current = start.clone();
    let mut steps: Vec<TraceStep> = Vec::new();
    let mut acting: Option<Triple> = None;
    for _ in 0..args.power {
        let ev = basic_computation(&ledger, &word, &current, args.trace)?;
        let offset = steps.len();
        steps.extend(ev.steps.into_iter().map(|mut s| {
            s.index += offset;
            s
        }));
        acting = Some(match acting {
            None => ev.triple,
            Some(prev) => Triple {
                matrix: ntpack::mat_mul(&ev.triple.matrix, &prev.matrix)?,
                domain_cell: prev.domain_cell,
                codomain_cell: ev.triple.codomain_cell,
            },
        });
        current = ev.end;
    }
    let triple = acting.unwrap_or_else(|| Triple {
        matrix: ntpack::RatMatrix::identity(ledger.cell(start.cell).cone.ambient_dim),
        domain_cell: start.cell,
        codomain_cell: start.cell,
    });
    match args.format {
        Format::Text => {
            println!("end point: {}", point_text(&ledger, &current));
            println!(
                "triple:    {} : {} -> {}",
                grid_text(&matrix_grid(&triple.matrix)),
                ledger.cell(triple.domain_cell).name,
                ledger.cell(triple.codomain_cell).name
            );
            if args.trace {
                println!("trace:");
                println!("  l | c_(l-1) | piece | letter | V_j | matrix | c_l");
                for s in &steps {
                    println!(
                        "  {} | {} | {} | {} | {} | {} | {}",
                        s.index,
                        point_text(&ledger, &s.input),
                        s.piece_label,
                        ledger.signed_gen_name(s.letter),
                        ledger.cell(s.codomain_cell).name,
                        grid_text(&matrix_grid(&s.matrix)),
                        point_text(&ledger, &s.output),
                    );
                }
            }
        }
        Format::Json => {
            let record = EvaluateRecord {
                word: args.word.clone(),
                ledger: ledger.name.clone(),
                power: args.power.to_string(),
                start: point_record(&ledger, &start),
                end: point_record(&ledger, &current),
                triple: TripleRecord {
                    matrix: matrix_grid(&triple.matrix),
                    domain: ledger.cell(triple.domain_cell).name.clone(),
                    codomain: ledger.cell(triple.codomain_cell).name.clone(),
                },
                steps: args.trace.then(|| {
                    steps
                        .iter()
                        .map(|s| StepRecord {
                            step: s.index.to_string(),
                            point: point_record(&ledger, &s.input),
                            piece: s.piece_label.clone(),
                            letter: ledger.signed_gen_name(s.letter),
                            codomain: ledger.cell(s.codomain_cell).name.clone(),
                            matrix: matrix_grid(&s.matrix),
                            image: point_record(&ledger, &s.output),
                        })
                        .collect()
                }),
            };
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
    }
    Ok(())
}

fn cmd_validate(args: &ValidateArgs) -> ntpack::Result<()> {
    let ledger = resolve_ledger(&args.ledger)?;
    let names = ledger.generator_names();
    let relators = args
        .relator
        .iter()
        .map(|spec| {
            let (lhs, rhs) = spec
                .split_once('=')
                .ok_or_else(|| Error::WordSyntax(format!("relator `{spec}` is not `w1=w2`")))?;
            Ok((Word::parse(lhs, &names)?, Word::parse(rhs, &names)?))
        })
        .collect::<ntpack::Result<Vec<_>>>()?;
    let report = validate_ledger(&ledger, &relators, args.samples, 0x5eed)?;
    for check in &report.checks {
        println!(
            "check {:<20} {}",
            check.name,
            if check.passed { "PASS" } else { "FAIL" }
        );
        for witness in &check.failures {
            println!("    witness: {witness}");
        }
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Error::Validation("ledger checks failed".into()))
    }
}

fn cmd_q(args: &QArgs) -> ntpack::Result<()> {
    let c = compute_q(args.genus, args.punctures)?;
    match args.format {
        Format::Text => {
            println!("xi      = {}", c.xi);
            println!("K       = {}", c.k);
            println!("D       = {}", c.d);
            println!("E       = {}", c.e);
            println!("Qcurve  = {}", c.q_curve);
            println!("Qtrack  = {}", c.q_track);
            println!("Qforce  = {}", c.q_force);
            println!("Qfit    = {}", c.q_fit);
            println!("Qdt     = {}", c.q_dt);
            println!("Q       = {}", c.q);
        }
        Format::Json => {
            let v = serde_json::json!({
                "xi": c.xi.to_string(),
                "K": c.k.to_string(),
                "D": c.d.to_string(),
                "E": c.e.to_string(),
                "Qcurve": c.q_curve.to_string(),
                "Qtrack": c.q_track.to_string(),
                "Qforce": c.q_force.to_string(),
                "Qfit": c.q_fit.to_string(),
                "Qdt": c.q_dt.to_string(),
                "Q": c.q.to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
    Ok(())
}
