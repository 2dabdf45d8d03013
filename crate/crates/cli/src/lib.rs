//! Command-line front end for `qpcert-core`.
//!
//! [`run`] does all the work against caller-supplied streams so tests can
//! drive it in-process; `main` only wires it to the real ones.
//!
//! Exit codes: 0 success or certified, 1 refuted (or an unverified fit, or
//! a failed probe), 2 usage, parse or input error.

pub mod args;
pub mod report;
pub mod values;

use std::fs::File;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::Parser;
use num_bigint::BigInt;
use qpcert_core::certify::{self, min_fit_samples, FitError, Verdict};
use qpcert_core::triangles::{self, PAPER_CHECK_UPTO};
use qpcert_core::{parse, RationalGF};
use serde_json::{json, Value};

use crate::args::{CertifyArgs, Cli, CoeffsArgs, Command, FitArgs, GfArgs, TrianglesCommand};
use crate::report::{coeff_strings, quasi_poly_json, strings, Csv, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Result of a command: the payload plus its exit code.
pub struct Outcome {
    pub report: Report,
    pub exit: i32,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report,
            exit: EXIT_OK,
        }
    }
}

/// Bad flags, unparsable expressions, unreadable inputs.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{rendered}");
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        EXIT_USAGE
                    } else {
                        EXIT_OK
                    }
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };

    match execute(&cli.command, stdin) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.report.render(cli.format).as_bytes());
            outcome.exit
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

pub fn execute(command: &Command, stdin: &mut dyn Read) -> Result<Outcome, UsageError> {
    match command {
        Command::Coeffs(a) => cmd_coeffs(a).map(Outcome::ok),
        Command::Certify(a) => cmd_certify(a),
        Command::Triangles { action } => cmd_triangles(action).map(Outcome::ok),
        Command::Fit(a) => cmd_fit(a, stdin),
        Command::Paper => Ok(cmd_paper()),
    }
}

fn build_gf(a: &GfArgs) -> Result<RationalGF, UsageError> {
    if a.parts.contains(&0) {
        return Err(UsageError("--parts must be positive integers".into()));
    }
    let gf = match (&a.num, a.shift) {
        (Some(num), None) => RationalGF::new(num.clone(), a.parts.clone())?,
        (None, Some(shift)) => RationalGF::from_parts(&a.parts, shift)?,
        _ => return Err(UsageError("give exactly one of --num or --shift".into())),
    };
    Ok(gf)
}

fn gf_inputs(gf: &RationalGF) -> Value {
    json!({
        "parts": strings(gf.parts()),
        "numerator": strings(gf.numerator()),
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    strings(items).join(" ")
}

pub fn cmd_coeffs(a: &CoeffsArgs) -> Result<Report, UsageError> {
    let gf = build_gf(&a.gf)?;
    let coeffs = gf.coeffs(a.upto);
    let mut csv = Csv::new(&["n", "coefficient"]);
    for (n, c) in coeffs.iter().enumerate() {
        csv.row([n.to_string(), c.to_string()]);
    }
    let mut inputs = gf_inputs(&gf);
    inputs["upto"] = json!(a.upto.to_string());
    Ok(Report {
        command: "coeffs",
        inputs,
        result: json!({ "coefficients": strings(&coeffs) }),
        text: join(&coeffs),
        csv,
    })
}

pub fn cmd_certify(a: &CertifyArgs) -> Result<Outcome, UsageError> {
    let gf = build_gf(&a.gf)?;
    let expr = parse(&a.expr)?;
    let cert = certify::certify(&gf, &expr, a.onset)?;

    let verdict = if cert.verdict.is_certified() {
        "certified"
    } else {
        "refuted"
    };
    let mut fields: Vec<(&str, String)> = vec![
        ("verdict", verdict.to_string()),
        ("degree_bound", cert.degree_bound.to_string()),
        ("period", cert.period.to_string()),
        ("onset", cert.onset.to_string()),
        ("window_start", cert.window.start.to_string()),
        ("window_end", cert.window.end.to_string()),
        ("checks", cert.checks().to_string()),
    ];

    let witness = match &cert.verdict {
        Verdict::Certified => Value::Null,
        Verdict::Refuted { n, lhs, rhs } => {
            fields.push(("witness_n", n.to_string()));
            fields.push(("witness_lhs", lhs.to_string()));
            fields.push(("witness_rhs", rhs.to_string()));
            json!({ "n": n.to_string(), "lhs": lhs.to_string(), "rhs": rhs.to_string() })
        }
    };

    let mut exit = if cert.verdict.is_certified() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    };
    let probe = match a.probe {
        Some(k) if cert.verdict.is_certified() => {
            let passed = certify::soundness_probe(&cert, k, a.probe_max, a.seed);
            if !passed {
                exit = EXIT_REFUTED;
            }
            fields.push(("probe_count", k.to_string()));
            fields.push(("probe_max", a.probe_max.to_string()));
            fields.push(("probe_seed", a.seed.to_string()));
            fields.push(("probe_passed", passed.to_string()));
            json!({
                "probes": k.to_string(),
                "n_max": a.probe_max.to_string(),
                "seed": a.seed.to_string(),
                "passed": passed,
            })
        }
        _ => Value::Null,
    };

    let mut text = String::new();
    let mut csv = Csv::new(&["field", "value"]);
    for (k, v) in &fields {
        text.push_str(&format!("{k}: {v}\n"));
        csv.row([k.to_string(), v.clone()]);
    }

    let mut inputs = gf_inputs(&gf);
    inputs["expr"] = json!(a.expr);
    inputs["onset"] = json!(a.onset.map(|v| v.to_string()));
    inputs["probe"] = json!(a.probe.map(|v| v.to_string()));
    inputs["probe_max"] = json!(a.probe_max.to_string());
    inputs["seed"] = json!(a.seed.to_string());

    let result = json!({
        "verdict": verdict,
        "degree_bound": cert.degree_bound.to_string(),
        "period": cert.period.to_string(),
        "onset": cert.onset.to_string(),
        "window": { "start": cert.window.start.to_string(), "end": cert.window.end.to_string() },
        "checks": cert.checks().to_string(),
        "expr": cert.expr.to_string(),
        "model": quasi_poly_json(&cert.model),
        "witness": witness,
        "probe": probe,
    });

    Ok(Outcome {
        report: Report {
            command: "certify",
            inputs,
            result,
            text,
            csv,
        },
        exit,
    })
}

fn perimeter(p: i64) -> Result<u64, UsageError> {
    u64::try_from(p).map_err(|_| UsageError(format!("--perimeter must be non-negative, got {p}")))
}

pub fn cmd_triangles(action: &TrianglesCommand) -> Result<Report, UsageError> {
    match action {
        TrianglesCommand::Count(a) => {
            let n = perimeter(a.perimeter)?;
            let count = triangles::count_bruteforce(n);
            let mut csv = Csv::new(&["perimeter", "count"]);
            csv.row([n, count]);
            Ok(Report {
                command: "triangles count",
                inputs: json!({ "perimeter": n.to_string() }),
                result: json!({ "count": count.to_string() }),
                text: count.to_string(),
                csv,
            })
        }
        TrianglesCommand::List(a) => {
            let n = perimeter(a.perimeter)?;
            let list = triangles::list_triangles(n);
            let mut csv = Csv::new(&["x", "y", "z"]);
            let mut text = String::new();
            for t in &list {
                csv.row([t.x, t.y, t.z]);
                text.push_str(&format!("{t}\n"));
            }
            let sides: Vec<Vec<String>> = list.iter().map(|t| strings([t.x, t.y, t.z])).collect();
            Ok(Report {
                command: "triangles list",
                inputs: json!({ "perimeter": n.to_string() }),
                result: json!({ "count": list.len().to_string(), "triangles": sides }),
                text,
                csv,
            })
        }
    }
}

pub fn cmd_fit(a: &FitArgs, stdin: &mut dyn Read) -> Result<Outcome, UsageError> {
    let samples: Vec<BigInt> = match &a.values {
        Some(path) => {
            let file = File::open(path)
                .map_err(|e| UsageError(format!("cannot open {}: {e}", path.display())))?;
            values::read_values(file)?
        }
        None => values::read_values(stdin)?,
    };
    let holdout = a.holdout.unwrap_or(a.lmax);
    let fit = match certify::fit_quasipoly(&samples, a.dmax, a.lmax, holdout) {
        Ok(fit) => fit,
        Err(FitError::InsufficientSamples { have, need }) => {
            return Err(UsageError(format!(
                "insufficient samples: got {have}, need at least {need} (lmax {} + holdout {holdout})",
                a.lmax
            )))
        }
        Err(e) => return Err(e.into()),
    };

    let summary = [
        ("period", fit.period.to_string()),
        ("degree", fit.degree.to_string()),
        ("holdout_verified", fit.holdout_verified.to_string()),
        ("samples_used", fit.samples_used.to_string()),
    ];
    let mut text = String::new();
    for (k, v) in &summary {
        text.push_str(&format!("{k}: {v}\n"));
    }
    text.push_str(&format!("holdout_matches: {}/{}\n", fit.holdout_matches, fit.holdout_len));
    let mut csv = Csv::new(&[
        "period",
        "degree",
        "holdout_verified",
        "samples_used",
        "residue",
        "power",
        "coefficient",
    ]);
    for (r, p) in fit.model.constituents().iter().enumerate() {
        let cs = coeff_strings(p);
        text.push_str(&format!("constituent {r}: {}\n", cs.join(" ")));
        for (k, c) in cs.iter().enumerate() {
            let mut row: Vec<String> = summary.iter().map(|(_, v)| v.clone()).collect();
            row.extend([r.to_string(), k.to_string(), c.clone()]);
            csv.row(row);
        }
    }

    let inputs = json!({
        "samples": samples.len().to_string(),
        "dmax": a.dmax.to_string(),
        "lmax": a.lmax.to_string(),
        "holdout": holdout.to_string(),
        "min_samples": min_fit_samples(a.lmax, holdout).to_string(),
    });
    let result = json!({
        "period": fit.period.to_string(),
        "degree": fit.degree.to_string(),
        "holdout_verified": fit.holdout_verified,
        "samples_used": fit.samples_used.to_string(),
        "holdout_matches": fit.holdout_matches.to_string(),
        "holdout_len": fit.holdout_len.to_string(),
        "constituents": fit.model.constituents().iter().map(coeff_strings).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        exit: if fit.holdout_verified { EXIT_OK } else { EXIT_REFUTED },
        report: Report {
            command: "fit",
            inputs,
            result,
            text,
            csv,
        },
    })
}

pub fn cmd_paper() -> Outcome {
    let gf = triangles::triangle_gf();
    let expr = triangles::andrews_expr();
    let (coeffs, formula) = triangles::side_by_side(&gf, &expr, PAPER_CHECK_UPTO);
    let equal = coeffs == formula;

    let mut text = String::from("n coefficient formula\n");
    let mut csv = Csv::new(&["n", "coefficient", "formula", "match"]);
    for (n, (c, f)) in coeffs.iter().zip(&formula).enumerate() {
        text.push_str(&format!("{n} {c} {f}\n"));
        csv.row([n.to_string(), c.to_string(), f.to_string(), (c == f).to_string()]);
    }
    text.push_str(&format!("{equal}\n"));

    let inputs = json!({
        "parts": strings(gf.parts()),
        "numerator": strings(gf.numerator()),
        "expr": triangles::ANDREWS_FORMULA,
        "upto": PAPER_CHECK_UPTO.to_string(),
    });
    Outcome {
        exit: if equal { EXIT_OK } else { EXIT_REFUTED },
        report: Report {
            command: "paper",
            inputs,
            result: json!({
                "coefficients": strings(&coeffs),
                "formula": strings(&formula),
                "equal": equal,
            }),
            text,
            csv,
        },
    }
}
