//! The JSON envelope and the mapping from outcomes to exit codes.

use serde_json::{json, Value};

use umrow::Error;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// A finished computation: its JSON result and the exit code it implies.
pub struct Report {
    pub result: Value,
    pub exit: u8,
}

impl Report {
    pub fn ok(result: Value) -> Report {
        Report { result, exit: EXIT_OK }
    }

    /// Exit code from a yes/no/unknown verdict string.
    pub fn verdict(result: Value, verdict: &str) -> Report {
        let exit = match verdict {
            "no" | "not_nice" | "differ" => EXIT_NEGATIVE,
            "unknown" => EXIT_BUDGET,
            _ => EXIT_OK,
        };
        Report { result, exit }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub exit: u8,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure { kind: "usage", message: message.into(), exit: EXIT_USAGE }
    }

    pub fn io(path: &std::path::Path, err: std::io::Error) -> Failure {
        Failure { kind: "io", message: format!("{}: {err}", path.display()), exit: EXIT_USAGE }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let (kind, exit) = match &e {
            Error::BudgetExceeded(_) => ("budget_exceeded", EXIT_BUDGET),
            Error::NoWitnessWithinBound(_) => ("no_witness_within_bound", EXIT_BUDGET),
            Error::NotUnimodular => ("not_unimodular", EXIT_NEGATIVE),
            Error::NotRelUnimodular => ("not_rel_unimodular", EXIT_NEGATIVE),
            Error::NoModularInverse => ("no_modular_inverse", EXIT_NEGATIVE),
            Error::NotInIdeal(_) => ("not_in_ideal", EXIT_NEGATIVE),
            Error::CertificateInvalid(_) => ("certificate_invalid", EXIT_NEGATIVE),
            Error::HypothesisFailed(_) => ("hypothesis_failed", EXIT_NEGATIVE),
            Error::BfsFailure(_) => ("bfs_failure", EXIT_NEGATIVE),
            Error::TailMismatch => ("tail_mismatch", EXIT_USAGE),
            Error::MixedRings => ("mixed_rings", EXIT_USAGE),
            Error::EmptyRow => ("empty_row", EXIT_USAGE),
            Error::InfiniteRing => ("infinite_ring", EXIT_USAGE),
            Error::DiagonalIndex(_) => ("diagonal_index", EXIT_USAGE),
            Error::IndexOutOfRange { .. } => ("index_out_of_range", EXIT_USAGE),
            Error::OddSize(_) => ("odd_size", EXIT_USAGE),
            Error::SizeMismatch { .. } => ("size_mismatch", EXIT_USAGE),
            Error::UnsupportedBase(_) => ("unsupported_base", EXIT_USAGE),
            Error::InvalidRing(_) => ("invalid_ring", EXIT_USAGE),
            Error::Parse(_) => ("parse", EXIT_USAGE),
        };
        Failure { kind, message: e.to_string(), exit }
    }
}

pub fn envelope(command: &str, body: (&str, Value)) -> Value {
    let mut out = json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "command": command,
    });
    out[body.0] = body.1;
    out
}

/// Prints the envelope on stdout (and failures on stderr) and returns the exit code.
pub fn emit(command: &str, outcome: Result<Report, Failure>) -> u8 {
    let (doc, exit) = match outcome {
        Ok(report) => (envelope(command, ("result", report.result)), report.exit),
        Err(f) => {
            eprintln!("umrow {command}: {}", f.message);
            (envelope(command, ("error", json!({"kind": f.kind, "message": f.message}))), f.exit)
        }
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
    exit
}
