//! Command-line front end: generate states, compute reductions, run the
//! entanglement check, run the verification suite.
//!
//! Exit codes: `check` uses 0 for an entangled verdict and 1 for
//! inconclusive so pipelines can branch on the verdict without parsing;
//! 2 is a usage error, 3 an invalid input matrix. `verify` exits 0 only
//! when every check passes.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use tripartite_ppt::criterion::{entanglement_criterion, ReductionKind, DEFAULT_TOLERANCE};
use tripartite_ppt::io::{
    read_matrix_file, reduction_from_file, state_from_file, write_matrix_file, MatrixFile,
};
use tripartite_ppt::states;
use tripartite_ppt::verify;
use tripartite_ppt::Error;

#[derive(Parser)]
#[command(name = "tripartite-ppt", version, about = "Entanglement detection for three-qubit states via bipartite reductions and the PPT test")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a state and write it as a matrix file.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Compute one of the six bipartite reductions of a state file.
    Reduce {
        /// Input matrix file (8x8), `-` for stdin.
        input: String,
        /// Reduction kind: ab, ac, bc, a-bc, b-ca, c-ab.
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the entanglement criterion on a state file.
    Check {
        /// Input matrix file (8x8), `-` for stdin.
        input: String,
        /// Eigenvalues below -tol count as negative.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// Emit a machine-readable JSON report instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suite.
    Verify {
        /// Number of seeds for the property-based checks.
        #[arg(long, default_value_t = 1000)]
        seeds: u64,
        /// Emit the JSON summary on stdout (per-check lines move to stderr).
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Output path; omitted means stdout.
    #[arg(long)]
    out: Option<String>,
    /// Optional label stored in the file.
    #[arg(long)]
    label: Option<String>,
}

#[derive(Subcommand)]
enum Family {
    /// The GHZ state (|000> + |111>)/sqrt(2).
    Ghz {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Werner-type family x R + (1-x)/8 I; its a-bc reduction is the
    /// two-qubit Werner state with parameter x.
    Werner {
        #[arg(long)]
        x: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Embed a two-qubit state through one of the six slots (1-3 invert
    /// the cut reductions, 4-6 the partial traces).
    Embed {
        #[arg(long)]
        slot: usize,
        /// 4x4 matrix file to embed, `-` for stdin.
        #[arg(long)]
        input: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Mixture of pair-entangled states with weights p-ab, p-bc, p-ac.
    Molecule {
        #[arg(long = "p-ab")]
        p_ab: f64,
        #[arg(long = "p-bc")]
        p_bc: f64,
        #[arg(long = "p-ac")]
        p_ac: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The bound-entangled state built on an unextendible product basis.
    Upb {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded random density matrix (normalized G G^dagger).
    Random {
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded random separable mixture of k product states.
    Separable {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Errors about flag values are usage errors (2); anything touching file
/// content is an input error (3).
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ParamOutOfRange(_) | Error::InvalidSlot(_) => 2,
        _ => 3,
    }
}

#[derive(Serialize)]
struct JsonReduction {
    kind: &'static str,
    min_pt_eigenvalue: f64,
}

#[derive(Serialize)]
struct JsonReport {
    verdict: &'static str,
    tolerance: f64,
    reductions: Vec<JsonReduction>,
}

fn run_gen(family: Family) -> Result<(), Error> {
    let (matrix, output, default_label) = match family {
        Family::Ghz { output } => (states::ghz().into_matrix(), output, "ghz".to_string()),
        Family::Werner { x, output } => (
            states::werner_embedded(x)?.into_matrix(),
            output,
            format!("werner x={x}"),
        ),
        Family::Embed { slot, input, output } => {
            let r = reduction_from_file(&read_matrix_file(&input)?)?;
            (
                states::embed_bipartite(&r, slot)?.into_matrix(),
                output,
                format!("embedded slot={slot}"),
            )
        }
        Family::Molecule { p_ab, p_bc, p_ac, output } => {
            let p = states::MoleculeParams::new(p_ab, p_bc, p_ac)?;
            (
                states::molecule_state(&p).into_matrix(),
                output,
                format!("molecule p=({p_ab},{p_bc},{p_ac})"),
            )
        }
        Family::Upb { output } => (states::upb_state().into_matrix(), output, "upb".to_string()),
        Family::Random { seed, output } => (
            states::random_density(seed).into_matrix(),
            output,
            format!("random seed={seed}"),
        ),
        Family::Separable { seed, k, output } => (
            states::random_separable(seed, k)?.1.into_matrix(),
            output,
            format!("separable seed={seed} k={k}"),
        ),
    };
    let label = output.label.clone().or(Some(default_label));
    let file = MatrixFile::from_matrix(&matrix, label);
    write_matrix_file(&file, output.out.as_deref())
}

fn run_reduce(input: &str, kind: &str, output: OutputArgs) -> Result<(), Error> {
    let kind = ReductionKind::parse(kind).ok_or_else(|| {
        Error::ParamOutOfRange(format!(
            "unknown reduction kind {kind:?} (expected ab, ac, bc, a-bc, b-ca, c-ab)"
        ))
    })?;
    let state = state_from_file(&read_matrix_file(input)?)?;
    let reduction = tripartite_ppt::criterion::reduce(&state, kind)?;
    let label = output
        .label
        .clone()
        .or(Some(format!("reduction {}", kind.name())));
    let file = MatrixFile::from_matrix(reduction.matrix(), label);
    write_matrix_file(&file, output.out.as_deref())
}

fn run_check(input: &str, tol: f64, json: bool) -> Result<ExitCode, Error> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::ParamOutOfRange(format!("tol = {tol} must be non-negative")));
    }
    let state = state_from_file(&read_matrix_file(input)?)?;
    let report = entanglement_criterion(&state, tol);
    if json {
        let out = JsonReport {
            verdict: if report.is_entangled() { "entangled" } else { "inconclusive" },
            tolerance: report.tolerance,
            reductions: report
                .reductions
                .iter()
                .map(|e| JsonReduction {
                    kind: e.kind.name(),
                    min_pt_eigenvalue: e.min_pt_eigenvalue,
                })
                .collect(),
        };
        println!("{}", serde_json::to_string(&out).expect("report serializes"));
    } else {
        println!("{:<6} {:>22}  witness", "kind", "min PT eigenvalue");
        for e in &report.reductions {
            let marker = if e.min_pt_eigenvalue < -report.tolerance { "*" } else { "" };
            println!("{:<6} {:>22.15}  {}", e.kind.name(), e.min_pt_eigenvalue, marker);
        }
        if report.is_entangled() {
            let names: Vec<&str> = report.witnesses().iter().map(|k| k.name()).collect();
            println!("ENTANGLED (witnesses: {})", names.join(", "));
        } else {
            println!("INCONCLUSIVE");
        }
    }
    Ok(if report.is_entangled() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_verify(seeds: u64, json: bool) -> ExitCode {
    let checks = verify::run_all(seeds);
    for check in &checks {
        if json {
            eprintln!("{}", check.line());
        } else {
            println!("{}", check.line());
        }
    }
    let summary = verify::summarize(checks);
    if json {
        println!("{}", serde_json::to_string(&summary).expect("summary serializes"));
    } else {
        println!("{} checks, {} passed, {} failed", summary.total, summary.passed, summary.failed);
    }
    if summary.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<ExitCode, Error> = match cli.cmd {
        Cmd::Gen { family } => run_gen(family).map(|()| ExitCode::SUCCESS),
        Cmd::Reduce { input, kind, output } => {
            run_reduce(&input, &kind, output).map(|()| ExitCode::SUCCESS)
        }
        Cmd::Check { input, tol, json } => run_check(&input, tol, json),
        Cmd::Verify { seeds, json } => Ok(run_verify(seeds, json)),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
