//! `hcycle`: batch front end for hcycle-core.
//!
//! Exit codes: 0 success, 1 internal error or failed certificate, 2 parse or
//! usage error, 3 `∂∂ ≠ 0`, 4 homological condition violated, 5 enumeration
//! cap exceeded, 6 input is not a (co)cycle.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hcycle_core::cycletrees::{enumerate_cycletrees, enumerate_dual_cycletrees, CycletreeSummary};
use hcycle_core::forests::{
    dual_tree_number, enumerate_dual_trees, enumerate_trees, sum_of_squared_weights, tree_number, TreeSummary,
};
use hcycle_core::graph::{count_cycletrees_complete, cycle_length_profile, laplacian_length_limit, DEFAULT_T_VALUES};
use hcycle_core::harmonic::{
    build_certificate, cutting_homology_check, cutting_number, standard_harmonic_cycle, winding_homology_check,
    winding_number, CertificateOptions, Mode, WindingFrame,
};
use hcycle_core::homology::require_unicycle;
use hcycle_core::io::{load, parse_chain, to_dot};
use hcycle_core::{ChainComplex, Error, DEFAULT_CAP};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use report::{emit_json, join, labels};

#[derive(Parser)]
#[command(
    name = "hcycle",
    version,
    about = "Harmonic cycles, winding numbers and high-dimensional trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Complex file: JSON chain format or one simplicial facet per line.
    path: PathBuf,
    #[arg(long, default_value_t = 1)]
    dim: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Listing {
    #[command(flatten)]
    common: Common,
    /// Largest number of subsets to enumerate.
    #[arg(long, env = "HH_CAP", default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Include zero-weight rows.
    #[arg(long)]
    all: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check that consecutive boundaries compose to zero.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Standard harmonic cycle and cocycle with the identity residual table.
    Harmonic {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "both", value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, env = "HH_CAP", default_value_t = DEFAULT_CAP)]
        cap: u128,
        /// Write a DOT drawing labeled by λ (graphs only).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Weighted spanning trees.
    Trees(Listing),
    /// Weighted cycletrees.
    Cycletrees(Listing),
    /// Weighted dual trees, or dual cycletrees with --cycletrees.
    Dual {
        #[command(flatten)]
        listing: Listing,
        #[arg(long)]
        cycletrees: bool,
    },
    /// Winding number of a cycle.
    Winding {
        #[command(flatten)]
        common: Common,
        /// Coefficients, comma or space separated.
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
    },
    /// Cutting number of a cocycle.
    Cutting {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
    },
    /// Number of cycletrees of the complete graph K_n.
    Kn {
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Cycle-length profile of a connected graph.
    Profile {
        path: PathBuf,
        #[arg(long, env = "HH_CAP", default_value_t = DEFAULT_CAP)]
        cap: u128,
        #[arg(long)]
        json: bool,
    },
    /// Small-phase Laplacian determinant limit of a connected graph.
    Spectrum {
        path: PathBuf,
        /// Decreasing positive phases.
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<f64>>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Lib(Error),
    Invalid(String),
    Report(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::ShapeMismatch(_)
        | Error::DimensionOutOfRange { .. }
        | Error::InvalidSelection(_)
        | Error::EmptyInput(_) => 2,
        Error::Condition(_) => 4,
        Error::CapExceeded { .. } => 5,
        Error::NotACycle { .. } | Error::NotACocycle { .. } => 6,
        Error::Internal(_) => 1,
    }
}

/// Loads a complex and refuses it unless `∂∂ = 0`.
fn load_valid(path: &PathBuf) -> Result<ChainComplex, Failure> {
    let file = load(path)?;
    let v = file.complex.validate();
    if let Some(f) = v.failure {
        return Err(Failure::Invalid(format!(
            "∂_{}∂_{} ≠ 0: entry ({}, {}) is {} (dim {}, row {}, col {})",
            f.dim - 1,
            f.dim,
            f.row,
            f.col,
            f.value,
            f.dim,
            f.row,
            f.col
        )));
    }
    Ok(file.complex)
}

fn validate(path: &PathBuf, as_json: bool) -> Outcome {
    let file = load(path)?;
    let v = file.complex.validate();
    if as_json {
        emit_json(&json!({
            "path": file.path,
            "dims": file.complex.top_dim(),
            "cells": (0..=file.complex.top_dim()).map(|d| file.complex.cell_count(d as isize)).collect::<Vec<_>>(),
            "validation": v,
        }));
    } else if v.ok {
        let counts: Vec<String> = (0..=file.complex.top_dim())
            .map(|d| format!("{} {d}-cells", file.complex.cell_count(d as isize)))
            .collect();
        println!("{}: ∂∂ = 0 ({})", file.path, counts.join(", "));
    }
    match v.failure {
        None => Ok(()),
        Some(f) => {
            let msg = format!(
                "{}: ∂_{}∂_{} ≠ 0 at (dim {}, row {}, col {}), entry {}",
                file.path,
                f.dim - 1,
                f.dim,
                f.dim,
                f.row,
                f.col,
                f.value
            );
            if !as_json {
                println!("{msg}");
            }
            Err(Failure::Invalid(msg))
        }
    }
}

fn harmonic(common: &Common, mode: Mode, cap: u128, dot: Option<&PathBuf>) -> Outcome {
    let x = load_valid(&common.path)?;
    let opts = CertificateOptions {
        mode,
        cap,
        ..CertificateOptions::default()
    };
    let cert = build_certificate(&x, common.dim, &opts)?;
    if let Some(path) = dot {
        let text = to_dot(&x, Some(&cert.lambda))?;
        std::fs::write(path, text).map_err(|e| Failure::Report(format!("cannot write {}: {e}", path.display())))?;
    }
    if common.json {
        emit_json(&json!({ "path": common.path.display().to_string(), "certificate": cert }));
    } else {
        let i = common.dim;
        println!("cells:  {}", x.cells(i).join(" "));
        println!("λ  = ({})", join(&cert.lambda.coeffs));
        println!("λ* = ({})", join(&cert.lambda_star.coeffs));
        println!("k_{i} = {}", cert.k_i);
        println!("k^{i} = {}", cert.k_upper_i);
        println!("|H̃_{}| = {}", i as isize - 1, cert.h_below);
        println!("|H̃^{}| = {}", i + 1, cert.h_above);
        println!("residuals ({} mode):", report::mode_name(cert.mode));
        let width = cert.identity_residuals.keys().map(String::len).max().unwrap_or(0);
        for (name, r) in &cert.identity_residuals {
            println!("  {name:<width$}  {r}");
        }
        println!(
            "energy: {} perturbations, {} trivial, {} violations",
            cert.energy.trials, cert.energy.trivial_perturbations, cert.energy.violations
        );
        println!("basis fingerprint: {}", cert.basis_fingerprint);
        println!(
            "{}",
            if cert.ok {
                "certificate OK"
            } else {
                "certificate FAILED"
            }
        );
    }
    if cert.ok {
        Ok(())
    } else {
        Err(Failure::Report(format!(
            "identities failed: {}",
            cert.failures().join(", ")
        )))
    }
}

fn print_trees(x: &ChainComplex, listing: &Listing, rows: &[TreeSummary], k_name: &str, k: &BigInt) -> Outcome {
    let shown: Vec<&TreeSummary> = rows.iter().filter(|t| listing.all || !t.weight.is_zero()).collect();
    let s = sum_of_squared_weights(rows);
    let ok = &s == k;
    if listing.common.json {
        let rows: Vec<_> = shown
            .iter()
            .map(|t| json!({ "cells": labels(x, &t.selection), "indices": t.selection.indices(), "weight": t.weight.to_string() }))
            .collect();
        emit_json(&json!({ k_name: k.to_string(), "rows": rows, "sum_of_squared_weights": s.to_string(), "ok": ok }));
    } else {
        println!("{k_name} = {k}");
        for t in &shown {
            println!("{:>6}  {}", t.weight, labels(x, &t.selection).join(" "));
        }
        println!(
            "Σ wt² = {s} {} {k_name} {}",
            if ok { "=" } else { "≠" },
            if ok { "OK" } else { "FAILED" }
        );
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Report(format!("Σ wt² = {s} but {k_name} = {k}")))
    }
}

fn trees(listing: &Listing, dual: bool) -> Outcome {
    let x = load_valid(&listing.common.path)?;
    let i = listing.common.dim;
    if dual {
        let rows = enumerate_dual_trees(&x, i, listing.cap)?;
        print_trees(&x, listing, &rows, &format!("k^{i}"), &dual_tree_number(&x, i)?)
    } else {
        let rows = enumerate_trees(&x, i, listing.cap)?;
        print_trees(&x, listing, &rows, &format!("k_{i}"), &tree_number(&x, i)?)
    }
}

fn cycletrees(listing: &Listing, dual: bool) -> Outcome {
    let x = load_valid(&listing.common.path)?;
    let i = listing.common.dim;
    let (rows, k_name, k) = if dual {
        (
            enumerate_dual_cycletrees(&x, i, listing.cap)?,
            format!("k^{i}"),
            dual_tree_number(&x, i)?,
        )
    } else {
        (
            enumerate_cycletrees(&x, i, listing.cap)?,
            format!("k_{i}"),
            tree_number(&x, i)?,
        )
    };
    let shown: Vec<&CycletreeSummary> = rows.iter().filter(|u| listing.all || !u.weight.is_zero()).collect();
    let nonzero = rows.iter().filter(|u| !u.weight.is_zero()).count();

    // λ∘λ = k_i Σ w(C_U)², available when the unicycle condition holds
    let mut identity = None;
    if !dual && require_unicycle(&x, i).is_ok() {
        let frame = WindingFrame::new(&x, i)?;
        let mut w2 = BigInt::zero();
        for u in &rows {
            let w = frame.winding(&u.cycle_part)?;
            w2 += &w * &w;
        }
        let lambda = standard_harmonic_cycle(&x, i, Mode::Fast, listing.cap)?;
        identity = Some((lambda.dot(&lambda), &k * w2));
    }

    if listing.common.json {
        let out: Vec<_> = shown
            .iter()
            .map(|u| {
                json!({
                    "cells": labels(&x, &u.selection),
                    "indices": u.selection.indices(),
                    "cycle_part": u.cycle_part.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "content": u.content.to_string(),
                    "weight": u.weight.to_string(),
                })
            })
            .collect();
        let mut v = json!({ k_name.as_str(): k.to_string(), "nonzero": nonzero, "rows": out });
        if let Some((a, b)) = &identity {
            v["norm_identity"] =
                json!({ "lambda_norm": a.to_string(), "k_times_winding_squares": b.to_string(), "ok": a == b });
        }
        emit_json(&v);
    } else {
        println!("{k_name} = {k}");
        for u in &shown {
            println!(
                "{:>6}  {}  [{}]",
                u.weight,
                labels(&x, &u.selection).join(" "),
                join(&u.cycle_part.coeffs)
            );
        }
        println!(
            "nonzero {}: {nonzero}",
            if dual { "dual cycletrees" } else { "cycletrees" }
        );
        if let Some((a, b)) = &identity {
            let ok = if a == b { "OK" } else { "FAILED" };
            println!("λ∘λ = {a}, {k_name} Σ w(C_U)² = {b} {ok}");
        }
    }
    match identity {
        Some((a, b)) if a != b => Err(Failure::Report(format!("λ∘λ = {a} but k Σ w² = {b}"))),
        _ => Ok(()),
    }
}

fn winding(common: &Common, chain: &str, cutting: bool) -> Outcome {
    let x = load_valid(&common.path)?;
    let z = parse_chain(chain, common.dim)?;
    let (value, check, name, group) = if cutting {
        let c = cutting_number(&x, common.dim, &z)?;
        (
            c,
            cutting_homology_check(&x, common.dim, &z)?,
            "c",
            format!("|H̃^{}(X ⊕ e)|", common.dim),
        )
    } else {
        let w = winding_number(&x, common.dim, &z)?;
        (
            w,
            winding_homology_check(&x, common.dim, &z)?,
            "w",
            format!("|H̃_{}(X ⊕ e)|", common.dim),
        )
    };
    if common.json {
        emit_json(&json!({ name: value.to_string(), "check": check }));
    } else {
        println!("{name} = {value}");
        println!(
            "{group} = {} {}",
            check.order,
            if check.agrees { "OK" } else { "FAILED" }
        );
    }
    if check.agrees {
        Ok(())
    } else {
        Err(Failure::Report(format!(
            "|{name}| = {} but {group} = {}",
            check.value, check.order
        )))
    }
}

fn kn(n: u64, as_json: bool) -> Outcome {
    let count = count_cycletrees_complete(n)?;
    if as_json {
        emit_json(&json!({ "n": n, "cycletrees": count.to_string() }));
    } else {
        println!("{count}");
    }
    Ok(())
}

fn profile(path: &PathBuf, cap: u128, as_json: bool) -> Outcome {
    let g = load_valid(path)?;
    let p = cycle_length_profile(&g, cap)?;
    let ok = p.edge_identity_holds();
    if as_json {
        emit_json(&json!({
            "profile": p,
            "edge_identity": { "lhs": p.edge_identity_lhs().to_string(), "rhs": p.edge_identity_rhs().to_string(), "ok": ok },
            "squared_length_sum": p.squared_length_sum().to_string(),
        }));
    } else {
        let parts: Vec<String> = p.l.iter().map(|(j, c)| format!("l{j}={c}")).collect();
        println!(
            "{}; identity {}={} {}",
            parts.join(" "),
            p.edge_identity_lhs(),
            p.edge_identity_rhs(),
            if ok { "OK" } else { "FAILED" }
        );
        println!("Σ l_j j² = {}", p.squared_length_sum());
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Report("edge identity failed".into()))
    }
}

fn spectrum(path: &PathBuf, t: Option<&[f64]>, as_json: bool) -> Outcome {
    let g = load_valid(path)?;
    let est = laplacian_length_limit(&g, t.unwrap_or(&DEFAULT_T_VALUES))?;
    if as_json {
        emit_json(&json!({ "limit": est }));
    } else {
        for s in &est.samples {
            println!("t = {:e}: det = {:.12e} {:+.3e}i", s.t, s.re, s.im);
        }
        println!("estimate: {:.9}", est.estimate);
        println!("extrapolation error: {:.3e}", est.error);
        println!("imaginary residual: {:.3e}", est.imaginary_residual);
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { path, json } => validate(path, *json),
        Command::Harmonic { common, mode, cap, dot } => harmonic(common, *mode, *cap, dot.as_ref()),
        Command::Trees(l) => trees(l, false),
        Command::Cycletrees(l) => cycletrees(l, false),
        Command::Dual {
            listing,
            cycletrees: true,
        } => cycletrees(listing, true),
        Command::Dual {
            listing,
            cycletrees: false,
        } => trees(listing, true),
        Command::Winding { common, chain } => winding(common, chain, false),
        Command::Cutting { common, chain } => winding(common, chain, true),
        Command::Kn { n, json } => kn(*n, *json),
        Command::Profile { path, cap, json } => profile(path, *cap, *json),
        Command::Spectrum { path, t, json } => spectrum(path, t.as_deref(), *json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Report(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
