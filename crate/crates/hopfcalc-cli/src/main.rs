//! Command-line front end: build catalog algebras, analyze algebras from
//! JSON, and run the exact verification suites.

mod report;
mod suites;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use hopfcalc_core::charint::{char_ring, integrals, irr_characters, matrix_coalgebras, center_basis};
use hopfcalc_core::cyclotomic::set_conductor_limit;
use hopfcalc_core::groups::catalog_hopf;
use hopfcalc_core::indres::{c1_c2, equivalence_classes, indres_data, verify_induction_identities};
use hopfcalc_core::interchange::{hopf_from_json, hopf_to_json, sub_from_json, CoeffJson, HopfJson, SubJson};
use hopfcalc_core::subnormal::is_normal;

use report::{Reporter, Status};

#[derive(Parser)]
#[command(name = "hopfcalc", version, about = "Exact semisimple Hopf algebra computations")]
struct Cli {
    /// Largest cyclotomic conductor allowed during scalar arithmetic.
    /// Overrides the HOPFCALC_CONDUCTOR_MAX environment variable.
    #[arg(long, global = true)]
    conductor_max: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a catalog algebra as interchange JSON.
    Build {
        /// Catalog name, e.g. S3, dual:S3, double:C3.
        #[arg(long)]
        catalog: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify and summarize an algebra given as interchange JSON.
    Analyze {
        /// Path to the algebra JSON.
        #[arg(long)]
        hopf: PathBuf,
        /// Optional subalgebra specification (subgroup labels or a basis).
        #[arg(long)]
        sub: Option<PathBuf>,
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over the built-in catalog.
    Verify {
        /// One of: axioms, fourier, double, normality, indres, all.
        #[arg(long)]
        suite: String,
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limit = cli.conductor_max.or_else(|| {
        std::env::var("HOPFCALC_CONDUCTOR_MAX")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(limit) = limit {
        set_conductor_limit(limit);
    }
    let result = match cli.command {
        Command::Build { catalog, out } => cmd_build(&catalog, out.as_deref()),
        Command::Analyze { hopf, sub, out } => cmd_analyze(&hopf, sub.as_deref(), out.as_deref()),
        Command::Verify { suite, out } => cmd_verify(&suite, out.as_deref()),
    };
    match result {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn hash_file(path: &Path) -> anyhow::Result<(String, Vec<u8>)> {
    let bytes =
        std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let digest = hex::encode(Sha256::digest(&bytes));
    Ok((digest, bytes))
}

fn cmd_build(catalog: &str, out: Option<&Path>) -> anyhow::Result<bool> {
    let h = catalog_hopf(catalog).map_err(|e| anyhow!(e.to_string()))?;
    let json = hopf_to_json(&h);
    let text = serde_json::to_string_pretty(&json)?;
    emit(out, &text)?;
    if let Some(path) = out {
        eprintln!(
            "wrote {} ({}-dimensional, conductor {})",
            path.display(),
            h.dim(),
            h.conductor()
        );
    }
    Ok(true)
}

fn cmd_analyze(hopf_path: &Path, sub_path: Option<&Path>, out: Option<&Path>) -> anyhow::Result<bool> {
    let mut inputs = BTreeMap::new();
    let (hash, bytes) = hash_file(hopf_path)?;
    inputs.insert(hopf_path.display().to_string(), hash);
    let parsed: HopfJson = serde_json::from_slice(&bytes)
        .with_context(|| format!("parsing {}", hopf_path.display()))?;

    let mut rep = Reporter::new();
    let mut algebra_summary = None;
    let mut sub_summary = None;

    let h = match hopf_from_json(&parsed) {
        Ok(h) => {
            rep.record("input-axioms", "algebra", Status::Pass, None, 0);
            Some(h)
        }
        Err(e) => {
            rep.record("input-axioms", "algebra", Status::Fail, Some(e.to_string()), 0);
            None
        }
    };

    if let Some(h) = &h {
        let mut summary = serde_json::json!({
            "dim": h.dim(),
            "labels": h.labels(),
            "conductor": h.conductor(),
            "commutative": h.is_commutative(),
            "cocommutative": h.is_cocommutative(),
        });
        rep.run("integrals-exist", "algebra", || {
            let ints = integrals(h).map_err(|e| anyhow!(e.to_string()))?;
            summary["integral_lambda"] = serde_json::to_value(
                ints.lambda.iter().map(CoeffJson::encode).collect::<Vec<_>>(),
            )?;
            summary["integral_t"] = serde_json::to_value(
                ints.t.iter().map(CoeffJson::encode).collect::<Vec<_>>(),
            )?;
            Ok(None)
        });
        rep.run("character-theory", "algebra", || {
            let irr = irr_characters(h).map_err(|e| anyhow!(e.to_string()))?;
            let ring = char_ring(h, &irr).map_err(|e| anyhow!(e.to_string()))?;
            let degrees: Vec<serde_json::Value> = irr
                .iter()
                .map(|c| serde_json::to_value(CoeffJson::encode(&c.degree)))
                .collect::<Result<_, _>>()?;
            summary["irr_degrees"] = serde_json::Value::Array(degrees);
            summary["char_ring_dim"] = ring.space.dim().into();
            summary["center_dim"] = center_basis(h).len().into();
            let mcs = matrix_coalgebras(h).map_err(|e| anyhow!(e.to_string()))?;
            summary["simple_subcoalgebras"] = mcs.len().into();
            Ok(Some(format!("{} irreducible characters", irr.len())))
        });
        algebra_summary = Some(summary);
    }

    if let (Some(h), Some(path)) = (&h, sub_path) {
        let (hash, bytes) = hash_file(path)?;
        inputs.insert(path.display().to_string(), hash);
        let spec: SubJson = serde_json::from_slice(&bytes)
            .with_context(|| format!("parsing {}", path.display()))?;
        match sub_from_json(h, &spec) {
            Err(e) => {
                rep.record("subalgebra-build", "subalgebra", Status::Fail, Some(e.to_string()), 0);
            }
            Ok(k) => {
                rep.record("subalgebra-build", "subalgebra", Status::Pass, None, 0);
                let mut summary = serde_json::json!({ "dim": k.dim() });
                let normal = match is_normal(&k).and_then(|r| r.verdict()) {
                    Ok(v) => {
                        rep.record(
                            "subalgebra-normality",
                            "subalgebra",
                            Status::Pass,
                            Some(format!("normal = {v}")),
                            0,
                        );
                        summary["normal"] = v.into();
                        Some(v)
                    }
                    Err(e) => {
                        rep.record(
                            "subalgebra-normality",
                            "subalgebra",
                            Status::Fail,
                            Some(e.to_string()),
                            0,
                        );
                        None
                    }
                };
                rep.run("induction-restriction", "subalgebra", || {
                    let data = indres_data(&k).map_err(|e| anyhow!(e.to_string()))?;
                    verify_induction_identities(&data).map_err(|e| anyhow!(e.to_string()))?;
                    summary["index"] = serde_json::to_value(CoeffJson::encode(&data.index()))?;
                    summary["restriction_matrix"] = serde_json::to_value(&data.res_matrix)?;
                    if normal == Some(true) {
                        let classes =
                            equivalence_classes(&data).map_err(|e| anyhow!(e.to_string()))?;
                        let (c1, c2) = c1_c2(&data).map_err(|e| anyhow!(e.to_string()))?;
                        summary["restriction_classes"] = classes.c_classes.len().into();
                        summary["c1_dim"] = c1.dim().into();
                        summary["c2_dim"] = c2.dim().into();
                    }
                    Ok(None)
                });
                if normal != Some(true) {
                    rep.skip(
                        "normal-restriction-formulas",
                        "subalgebra",
                        "subalgebra is not normal",
                    );
                }
                sub_summary = Some(summary);
            }
        }
    }

    let passed = rep.all_passed();
    let mut report = rep.into_report(inputs);
    report.algebra = algebra_summary;
    report.sub = sub_summary;
    emit(out, &serde_json::to_string_pretty(&report)?)?;
    Ok(passed)
}

fn cmd_verify(suite: &str, out: Option<&Path>) -> anyhow::Result<bool> {
    let mut rep = Reporter::new();
    suites::run_suite(&mut rep, suite)?;
    let passed = rep.all_passed();
    let summary = rep.summary();
    eprintln!(
        "suite {suite}: {} passed, {} failed, {} skipped",
        summary.passed, summary.failed, summary.skipped
    );
    let report = rep.into_report(BTreeMap::new());
    emit(out, &serde_json::to_string_pretty(&report)?)?;
    Ok(passed)
}
