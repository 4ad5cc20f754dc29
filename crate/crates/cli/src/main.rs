//! `whitebind`: decide whether elements of a free group bind it or lie in a
//! proper free factor, with machine-checkable certificates.
//!
//! Exit codes: 0 = binds / true / ok, 1 = separable / false / unsound,
//! 2 = input error, 3 = resource limit, 4 = oracle disagreement (debug).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use whitebind::automorphism::{self, AutomorphismWitness};
use whitebind::error::Error;
use whitebind::graph::WhiteheadGraph;
use whitebind::handlebody::{self, HandlebodyContext};
use whitebind::separability::{
    brute_force_oracle, decide, is_power_of_primitive, is_primitive, minimize, verify_verdict,
    Limits, OracleOutcome, Verdict, VerdictKind,
};
use whitebind::word::{CyclicWord, Rank, Word};

const EXIT_TRUE: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_ORACLE_DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "whitebind",
    version,
    about = "Free-group binding/separability decisions with verifiable certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy, Default)]
struct LimitArgs {
    /// Cap on level-set members (env WHITEBIND_MAX_LEVEL_SET overrides the
    /// default; this flag overrides both)
    #[arg(long)]
    max_level_set: Option<usize>,
    /// Cap on elementary move applications
    #[arg(long)]
    max_moves: Option<u64>,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Ok(text) = std::env::var("WHITEBIND_MAX_LEVEL_SET") {
            if let Ok(n) = text.parse() {
                limits.max_level_set_members = n;
            }
        }
        if let Some(n) = self.max_level_set {
            limits.max_level_set_members = n;
        }
        if let Some(n) = self.max_moves {
            limits.max_move_applications = n;
        }
        limits
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether WORD binds the rank-g free group (exit 0) or lies in
    /// a proper free factor (exit 1)
    Binds {
        word: String,
        #[arg(long)]
        rank: Option<u32>,
        /// Emit the full verdict with certificate as JSON
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: LimitArgs,
        /// Debug: cross-check the verdict against the brute-force oracle at
        /// this depth; disagreement exits 4
        #[arg(long)]
        oracle_depth: Option<u32>,
    },
    /// Export the Whitehead graph of WORD
    Wgraph {
        word: String,
        #[arg(long)]
        rank: Option<u32>,
        /// DOT output (default)
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// JSON output
        #[arg(long)]
        json: bool,
    },
    /// Whitehead-minimize WORD over its automorphism orbit
    Minimize {
        word: String,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Test whether WORD is a primitive element
    Primitive {
        word: String,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Test whether WORD is a power of a primitive element
    PowerOfPrimitive {
        word: String,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Test whether WORDS form a basis of the rank-g free group
    Basis {
        words: Vec<String>,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Whether the knot class of WORD fills up the genus-g handlebody
    FillsUp {
        word: String,
        /// Genus of the handlebody (defaults like --rank)
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Replay a verdict JSON (file or `-` for stdin) and confirm soundness
    VerifyCertificate {
        file: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Process a JSONL file of records {"word", "rank"?, "op"?}; one result
    /// line per input line, in order
    Batch {
        file: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    exit_for(e)
}

/// Compact words imply rank = max letter index unless --rank raises it.
fn parse_ranked(text: &str, rank: Option<u32>) -> Result<(Word, Rank), Error> {
    match rank {
        Some(g) => {
            let rank = Rank::new(g)?;
            Ok((Word::parse(text, rank)?, rank))
        }
        None => {
            let probe = Word::parse(text, Rank::new(u32::MAX)?)?;
            let g = probe.max_generator().ok_or_else(|| {
                Error::Syntax("cannot infer a rank from the identity; pass --rank".into())
            })?;
            Ok((probe, Rank::new(g)?))
        }
    }
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Binds {
            word,
            rank,
            json,
            limits,
            oracle_depth,
        } => cmd_binds(&word, rank, json, limits.limits(), oracle_depth),
        Command::Wgraph {
            word,
            rank,
            dot: _,
            json,
        } => cmd_wgraph(&word, rank, json),
        Command::Minimize {
            word,
            rank,
            json,
            limits,
        } => cmd_minimize(&word, rank, json, limits.limits()),
        Command::Primitive {
            word,
            rank,
            json,
            limits,
        } => cmd_primitive(&word, rank, json, limits.limits()),
        Command::PowerOfPrimitive {
            word,
            rank,
            json,
            limits,
        } => cmd_power_of_primitive(&word, rank, json, limits.limits()),
        Command::Basis { words, rank, json } => cmd_basis(&words, rank, json),
        Command::FillsUp {
            word,
            rank,
            json,
            limits,
        } => cmd_fills_up(&word, rank, json, limits.limits()),
        Command::VerifyCertificate { file, limits } => {
            cmd_verify_certificate(&file, limits.limits())
        }
        Command::Batch { file, limits } => cmd_batch(&file, limits.limits()),
    }
}

fn cmd_binds(
    text: &str,
    rank: Option<u32>,
    json: bool,
    limits: Limits,
    oracle_depth: Option<u32>,
) -> u8 {
    let (word, rank) = match parse_ranked(text, rank) {
        Ok(x) => x,
        Err(e) => return fail(&e),
    };
    let verdict = match decide(&word, rank, &limits) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    if json {
        println!("{}", verdict.to_json());
    } else {
        println!(
            "{}",
            match verdict.kind {
                VerdictKind::Binds => "binds",
                VerdictKind::Separable => "separable",
            }
        );
    }
    if let Some(depth) = oracle_depth {
        let outcome = match brute_force_oracle(&word, rank, depth) {
            Ok(o) => o,
            Err(e) => return fail(&e),
        };
        let oracle_separable = matches!(outcome, OracleOutcome::SeparableWitnessFound { .. });
        if oracle_separable != (verdict.kind == VerdictKind::Separable) {
            eprintln!(
                "oracle disagreement: verdict {:?} vs oracle {:?}",
                verdict.kind, outcome
            );
            return EXIT_ORACLE_DISAGREEMENT;
        }
    }
    match verdict.kind {
        VerdictKind::Binds => EXIT_TRUE,
        VerdictKind::Separable => EXIT_FALSE,
    }
}

fn cmd_wgraph(text: &str, rank: Option<u32>, json: bool) -> u8 {
    let built = parse_ranked(text, rank).and_then(|(word, rank)| {
        let (core, _) = CyclicWord::reduce(&word, rank)?;
        WhiteheadGraph::build(&core)
    });
    match built {
        Ok(graph) => {
            if json {
                println!("{}", graph.to_json());
            } else {
                print!("{}", graph.to_dot());
            }
            EXIT_TRUE
        }
        Err(e) => fail(&e),
    }
}

fn cmd_minimize(text: &str, rank: Option<u32>, json: bool, limits: Limits) -> u8 {
    let result = parse_ranked(text, rank).and_then(|(word, rank)| {
        let (core, _) = CyclicWord::reduce(&word, rank)?;
        Ok((minimize(&core, &limits)?, rank))
    });
    match result {
        Ok((m, rank)) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "word": text,
                        "rank": rank.get(),
                        "minimal": m.minimal.to_string(),
                        "original_length": m.original_length,
                        "minimal_length": m.minimal_length,
                        "witness": serde_json::from_str::<serde_json::Value>(&m.witness.to_json()).unwrap(),
                    })
                );
            } else {
                println!("minimal word: {}", m.minimal);
                println!("length: {} -> {}", m.original_length, m.minimal_length);
            }
            EXIT_TRUE
        }
        Err(e) => fail(&e),
    }
}

fn cmd_primitive(text: &str, rank: Option<u32>, json: bool, limits: Limits) -> u8 {
    let result = parse_ranked(text, rank)
        .and_then(|(word, rank)| Ok((is_primitive(&word, rank, &limits)?, rank)));
    match result {
        Ok((primitive, rank)) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({"word": text, "rank": rank.get(), "primitive": primitive})
                );
            } else {
                println!("primitive: {primitive}");
            }
            if primitive {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => fail(&e),
    }
}

fn cmd_power_of_primitive(text: &str, rank: Option<u32>, json: bool, limits: Limits) -> u8 {
    let result = parse_ranked(text, rank)
        .and_then(|(word, rank)| Ok((is_power_of_primitive(&word, rank, &limits)?, rank)));
    match result {
        Ok(((flag, exponent), rank)) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "word": text,
                        "rank": rank.get(),
                        "power_of_primitive": flag,
                        "exponent": exponent,
                    })
                );
            } else {
                println!("power of primitive: {flag} (exponent {exponent})");
            }
            if flag {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => fail(&e),
    }
}

fn cmd_basis(texts: &[String], rank: Option<u32>, json: bool) -> u8 {
    if texts.is_empty() {
        eprintln!("error: no words given");
        return EXIT_INPUT;
    }
    let result = (|| -> Result<(bool, Option<AutomorphismWitness>, Rank), Error> {
        let g = match rank {
            Some(g) => g,
            None => {
                let mut max = 0;
                for t in texts {
                    let w = Word::parse(t, Rank::new(u32::MAX)?)?;
                    max = max.max(w.max_generator().unwrap_or(0));
                }
                max
            }
        };
        let rank = Rank::new(g)?;
        let words = texts
            .iter()
            .map(|t| Word::parse(t, rank))
            .collect::<Result<Vec<_>, _>>()?;
        let (yes, witness) = automorphism::is_basis(&words, rank)?;
        Ok((yes, witness, rank))
    })();
    match result {
        Ok((yes, witness, rank)) => {
            let witness_json = witness
                .as_ref()
                .map(|w| w.to_json())
                .unwrap_or_else(|| "null".into());
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "words": texts,
                        "rank": rank.get(),
                        "basis": yes,
                        "witness": serde_json::from_str::<serde_json::Value>(&witness_json).unwrap(),
                    })
                );
            } else {
                println!("basis: {yes}");
                if witness.is_some() {
                    println!("witness: {witness_json}");
                }
            }
            if yes {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => fail(&e),
    }
}

fn cmd_fills_up(text: &str, rank: Option<u32>, json: bool, limits: Limits) -> u8 {
    let result = parse_ranked(text, rank).and_then(|(word, rank)| {
        let ctx = HandlebodyContext::new(rank.get())?;
        Ok((handlebody::fills_up(&ctx, &word, &limits)?, rank))
    });
    match result {
        Ok(((fills, citations), rank)) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "word": text,
                        "genus": rank.get(),
                        "fills_up": fills,
                        "citations": citations,
                    })
                );
            } else {
                println!("fills up: {fills}");
                for c in &citations {
                    println!("  {c}");
                }
            }
            if fills {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => fail(&e),
    }
}

fn cmd_verify_certificate(file: &str, limits: Limits) -> u8 {
    let text = if file == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            eprintln!("error: cannot read stdin: {e}");
            return EXIT_INPUT;
        }
        buf
    } else {
        match std::fs::read_to_string(file) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {file}: {e}");
                return EXIT_INPUT;
            }
        }
    };
    let verdict = match Verdict::from_json(text.trim()) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    match verify_verdict(&verdict, &limits) {
        Ok(()) => {
            println!("certificate: ok");
            EXIT_TRUE
        }
        Err(Error::CertificateUnsound(msg)) => {
            eprintln!("certificate: unsound: {msg}");
            EXIT_FALSE
        }
        Err(e) => fail(&e),
    }
}

#[derive(Deserialize)]
struct BatchRecord {
    word: String,
    rank: Option<u32>,
    op: Option<String>,
}

fn cmd_batch(file: &str, limits: Limits) -> u8 {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {file}: {e}");
            return EXIT_INPUT;
        }
    };
    for (idx, line) in text.lines().enumerate() {
        let number = idx + 1;
        if line.trim().is_empty() {
            println!(
                "{}",
                serde_json::json!({"line": number, "error": "empty line"})
            );
            continue;
        }
        match batch_line(line, &limits) {
            Ok(result) => println!("{result}"),
            Err(e) => {
                println!(
                    "{}",
                    serde_json::json!({"line": number, "error": e.to_string()})
                );
            }
        }
    }
    EXIT_TRUE
}

fn batch_line(line: &str, limits: &Limits) -> Result<String, Error> {
    let record: BatchRecord =
        serde_json::from_str(line).map_err(|e| Error::Syntax(format!("bad batch record: {e}")))?;
    let (word, rank) = parse_ranked(&record.word, record.rank)?;
    match record.op.as_deref().unwrap_or("binds") {
        "binds" => Ok(decide(&word, rank, limits)?.to_json()),
        "minimize" => {
            let (core, _) = CyclicWord::reduce(&word, rank)?;
            let m = minimize(&core, limits)?;
            Ok(serde_json::json!({
                "word": record.word,
                "rank": rank.get(),
                "minimal": m.minimal.to_string(),
                "original_length": m.original_length,
                "minimal_length": m.minimal_length,
            })
            .to_string())
        }
        "primitive" => {
            let primitive = is_primitive(&word, rank, limits)?;
            Ok(serde_json::json!({
                "word": record.word,
                "rank": rank.get(),
                "primitive": primitive,
            })
            .to_string())
        }
        "power_of_primitive" => {
            let (flag, exponent) = is_power_of_primitive(&word, rank, limits)?;
            Ok(serde_json::json!({
                "word": record.word,
                "rank": rank.get(),
                "power_of_primitive": flag,
                "exponent": exponent,
            })
            .to_string())
        }
        other => Err(Error::Syntax(format!("unknown op {other:?}"))),
    }
}
