//! `coserial`: classify, localize, and draw Auslander-Reiten data for
//! valued quivers of serial coalgebras.
//!
//! Exit codes: 0 success (serial where that matters), 1 a negative
//! mathematical verdict (non-serial input, failed suite), 2 usage or
//! parse errors.

use clap::{Parser, Subcommand};
use coserial_core::arquiver::{
    ar_sequence, build_ar_quiver, tau_orbit_report, verify_almost_split,
};
use coserial_core::classify::classification_report;
use coserial_core::field::Rat;
use coserial_core::fixtures;
use coserial_core::localize::{localize_quiver, LocalizationResult, VertexSubset};
use coserial_core::oracles::{run_suite, SUITE_NAMES};
use coserial_core::quiver::{parse_quiver, ValuedQuiver, VertexId};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

const DEFAULT_SEED: u64 = 0xC05E71A1;

#[derive(Parser)]
#[command(
    name = "coserial",
    version,
    about = "workbench for serial coalgebra quivers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a quiver file: shapes, seriality, obstruction verdict
    Classify {
        file: PathBuf,
        /// treat the coalgebra as finite dimensional
        #[arg(long)]
        finite_dimensional: bool,
    },
    /// Localize a quiver at a kept vertex subset
    Localize {
        /// comma-separated kept vertex names
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<String>,
        file: PathBuf,
    },
    /// Build the depth-bounded Auslander-Reiten quiver
    Arq {
        /// socle depth bound (required; the quiver may be infinite)
        #[arg(long)]
        depth: usize,
        /// verify every generated sequence is almost split
        #[arg(long)]
        verify: bool,
        /// write DOT output to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        file: PathBuf,
    },
    /// Run a named oracle suite (or "all")
    Verify {
        #[arg(long)]
        suite: String,
        /// fuzzing seed; falls back to COSERIAL_SEED, then a fixed default
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Emit a named fixture quiver in the DSL
    Gen { name: String },
}

fn load(file: &PathBuf) -> Result<ValuedQuiver, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {}", file.display(), e))?;
    parse_quiver(&text).map_err(|e| format!("{}: {}", file.display(), e))
}

fn cmd_classify(file: &PathBuf, finite_dimensional: bool) -> Result<u8, String> {
    let q = load(file)?;
    let report = classification_report(&q, finite_dimensional).map_err(|e| e.to_string())?;
    let serial = report.components.iter().all(|c| c.witness.is_none());
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(if serial { 0 } else { 1 })
}

fn cmd_localize(file: &PathBuf, keep: &[String]) -> Result<u8, String> {
    let q = load(file)?;
    let w = VertexSubset::new(keep.iter().map(VertexId::new));
    match localize_quiver(&q, &w).map_err(|e| e.to_string())? {
        LocalizationResult::Finite { quiver, evidence } => {
            print!("{}", quiver.emit_dsl());
            let ev: BTreeMap<String, _> = evidence
                .into_iter()
                .map(|((x, z), paths)| (format!("{} -> {}", x, z), paths))
                .collect();
            let dump = serde_json::json!({ "infinite": false, "evidence": ev });
            println!(
                "{}",
                serde_json::to_string_pretty(&dump).expect("evidence serializes")
            );
            Ok(0)
        }
        LocalizationResult::Infinite { pairs } => {
            let dump = serde_json::json!({
                "infinite": true,
                "pairs": pairs,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&dump).expect("pairs serialize")
            );
            Ok(0)
        }
    }
}

fn cmd_arq(
    file: &PathBuf,
    depth: usize,
    verify: bool,
    dot: Option<&PathBuf>,
) -> Result<u8, String> {
    if depth == 0 {
        return Err("--depth must be at least 1".into());
    }
    let q = load(file)?;
    let arq = match build_ar_quiver(&q, depth) {
        Ok(arq) => arq,
        Err(coserial_core::arquiver::ArError::NotSerialInput) => {
            let report = classification_report(&q, true).map_err(|e| e.to_string())?;
            eprintln!("input quiver is not serial:");
            for c in &report.components {
                if let Some(w) = &c.witness {
                    eprintln!("  {}", w);
                }
            }
            return Ok(1);
        }
        Err(e) => return Err(e.to_string()),
    };
    if verify {
        for (_, left_node) in &arq.tau {
            let seq = ar_sequence::<Rat>(&q, left_node).map_err(|e| e.to_string())?;
            let (ok, failure) =
                verify_almost_split(&q, &seq, depth + 1).map_err(|e| e.to_string())?;
            if !ok {
                return Err(format!(
                    "sequence at {} is not almost split: {}",
                    left_node.display_name(),
                    failure.unwrap_or_default()
                ));
            }
        }
    }
    if let Some(path) = dot {
        std::fs::write(path, arq.emit_dot()).map_err(|e| format!("{}: {}", path.display(), e))?;
    }
    let orbits = tau_orbit_report(&arq);
    let dump = serde_json::json!({
        "nodes": arq.nodes,
        "arrows": arq.arrows,
        "tau": arq.tau,
        "tube_rank": arq.tube_rank,
        "orbits": orbits,
        "verified": verify,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&dump).expect("quiver serializes")
    );
    Ok(0)
}

fn cmd_verify(suite: &str, seed: Option<u64>) -> Result<u8, String> {
    let seed = match seed {
        Some(s) => s,
        None => match std::env::var("COSERIAL_SEED") {
            Ok(v) => v
                .parse()
                .map_err(|_| format!("COSERIAL_SEED is not a u64: {}", v))?,
            Err(_) => DEFAULT_SEED,
        },
    };
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&suite) {
        vec![suite]
    } else {
        return Err(format!(
            "unknown suite {:?}; available: all, {}",
            suite,
            SUITE_NAMES.join(", ")
        ));
    };
    let mut all_passed = true;
    for name in names {
        let report = run_suite(name, seed).expect("name checked above");
        println!(
            "suite {:<16} [{}] {}",
            report.name,
            if report.passed { "PASS" } else { "FAIL" },
            report.detail
        );
        all_passed &= report.passed;
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn cmd_gen(name: &str) -> Result<u8, String> {
    match fixtures::by_name(name) {
        Some(q) => {
            print!("{}", q.emit_dsl());
            Ok(0)
        }
        None => Err(format!(
            "unknown fixture {:?}; available: {}",
            name,
            fixtures::fixture_names().join(", ")
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Classify {
            file,
            finite_dimensional,
        } => cmd_classify(file, *finite_dimensional),
        Cmd::Localize { keep, file } => cmd_localize(file, keep),
        Cmd::Arq {
            file,
            depth,
            verify,
            dot,
        } => cmd_arq(file, *depth, *verify, dot.as_ref()),
        Cmd::Verify { suite, seed } => cmd_verify(suite, *seed),
        Cmd::Gen { name } => cmd_gen(name),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
