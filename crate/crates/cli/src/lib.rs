//! `twistlab` command line: compute Λ, verify the twist-site count, check
//! PD fixtures, and compose diagrams.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use twistlab_core::diagram::{parse_pd, parse_pd_records};
use twistlab_core::kauffman::{top_rows, truncate};
use twistlab_core::notation::enumerate_standard;
use twistlab_core::{
    ConwayCode, LambdaEngine, LaurentPoly2, LinkDiagram, PdRecord, TruncatedLambda, UTriple,
    VerificationReport, Verifier,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "twistlab",
    version,
    about = "Kauffman polynomial of rational links and twist-site checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Λ and its truncation for the numerator closure of a Conway code.
    Compute {
        /// Conway code, e.g. "2 1 1 1 2" (separate arguments also work).
        #[arg(required = true, num_args = 1..)]
        code: Vec<String>,
    },
    /// Check the twist-site count for one code or for every code up to a size.
    Verify(VerifyArgs),
    /// Truncations of PD-coded diagrams (JSON lines, a JSON array or PD[X[..],..]).
    Pd {
        #[arg(long)]
        file: PathBuf,
        /// Expected coefficients as u-,u0,u+: the a^-2, a^0 and a^2 entries of
        /// the z^(c-2) row. Applied to every record in the file.
        #[arg(long, value_name = "U-,U0,U+")]
        expect: Option<UTriple>,
    },
    /// Connected sum of two numerator closures.
    Sum { code1: String, code2: String },
    /// Mirror image of a numerator closure.
    Mirror {
        #[arg(required = true, num_args = 1..)]
        code: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(num_args = 0.., conflicts_with = "enumerate", required_unless_present = "enumerate")]
    pub code: Vec<String>,
    /// Sweep every standard code with 2..=N crossings.
    #[arg(long, requires = "max_crossings")]
    pub enumerate: bool,
    #[arg(long, value_name = "N")]
    pub max_crossings: Option<usize>,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn finished(stdout: String, pass: bool) -> Self {
        Outcome {
            code: if pass { EXIT_OK } else { EXIT_FAILED },
            stdout,
            stderr: String::new(),
        }
    }
}

/// JSON shape of `compute`, `sum` and `mirror`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeOutput {
    pub input: String,
    pub crossings: usize,
    pub components: usize,
    pub lambda: LaurentPoly2,
    pub truncated: Option<TruncatedLambda>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<VerificationReport>,
}

/// JSON shape of `verify --enumerate`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub codes: usize,
    pub passed: usize,
    pub reports: Vec<VerificationReport>,
}

/// JSON shape of one `pd` record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PdOutput {
    pub report: VerificationReport,
    pub lambda: LaurentPoly2,
    pub u0_excess: Option<i64>,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    let mut verifier = Verifier::new(LambdaEngine::from_env());
    match execute(&cli, &mut verifier) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::input_error(message),
    }
}

fn parse_code(parts: &[String]) -> Result<ConwayCode, String> {
    parts.join(" ").parse().map_err(|e| format!("{e}"))
}

fn execute(cli: &Cli, v: &mut Verifier) -> Result<Outcome, String> {
    match &cli.command {
        Command::Compute { code } => {
            let code = parse_code(code)?;
            let d = LinkDiagram::build_standard(&code);
            let out = compute_output(v, code.to_string(), &d, None);
            Ok(Outcome::finished(render_compute(&out, cli.json), true))
        }
        Command::Verify(args) if args.enumerate => {
            let max = args.max_crossings.unwrap_or(0);
            if max < 2 {
                return Err(format!("--max-crossings must be at least 2, got {max}"));
            }
            sweep(v, max, cli.json)
        }
        Command::Verify(args) => {
            let code = parse_code(&args.code)?;
            let report = v.verify_all(&code).map_err(|e| e.to_string())?;
            let text = if cli.json {
                format!("{}\n", report.to_json())
            } else {
                report.to_string()
            };
            Ok(Outcome::finished(text, report.overall))
        }
        Command::Pd { file, expect } => pd(v, file, *expect, cli.json),
        Command::Sum { code1, code2 } => {
            let (k1, k2) = (
                parse_code(std::slice::from_ref(code1))?,
                parse_code(std::slice::from_ref(code2))?,
            );
            let report = v
                .verify_connected_sum(&k1, &k2)
                .map_err(|e| e.to_string())?;
            let d = LinkDiagram::connected_sum(
                &LinkDiagram::build_standard(&k1),
                &LinkDiagram::build_standard(&k2),
            )
            .map_err(|e| e.to_string())?;
            let pass = report.overall;
            let out = compute_output(v, report.input.clone(), &d, Some(report));
            Ok(Outcome::finished(render_compute(&out, cli.json), pass))
        }
        Command::Mirror { code } => {
            let code = parse_code(code)?;
            let report = v.verify_mirror(&code).map_err(|e| e.to_string())?;
            let d = LinkDiagram::build_standard(&code).mirror();
            let pass = report.overall;
            let out = compute_output(v, report.input.clone(), &d, Some(report));
            Ok(Outcome::finished(render_compute(&out, cli.json), pass))
        }
    }
}

fn compute_output(
    v: &mut Verifier,
    input: String,
    d: &LinkDiagram,
    report: Option<VerificationReport>,
) -> ComputeOutput {
    let lambda = v.lambda(d);
    let c = d.crossing_count();
    ComputeOutput {
        input,
        crossings: c,
        components: d.components(),
        truncated: truncate(&lambda, c).ok(),
        lambda,
        report,
    }
}

fn render_compute(out: &ComputeOutput, json: bool) -> String {
    if json {
        return format!(
            "{}\n",
            serde_json::to_string(out).expect("output serializes")
        );
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}  c={}  components={}",
        out.input, out.crossings, out.components
    );
    let _ = writeln!(s, "Λ = {}", out.lambda);
    match &out.truncated {
        Some(t) => {
            let _ = writeln!(
                s,
                "Λ̃ (z^{} and z^{} columns):",
                t.crossings as i32 - 2,
                t.crossings as i32 - 1
            );
            s.push_str(&t.to_poly().render_staggered());
            let _ = writeln!(
                s,
                "(u-, u0, u+) = ({}, {}, {})",
                t.u.minus, t.u.zero, t.u.plus
            );
        }
        None => {
            let rows = top_rows(&out.lambda, out.crossings);
            let _ = writeln!(s, "top rows: {rows}");
        }
    }
    if let Some(r) = &out.report {
        s.push_str(&r.to_string());
    }
    s
}

fn sweep(v: &mut Verifier, max: usize, json: bool) -> Result<Outcome, String> {
    let mut reports = vec![];
    for c in 2..=max {
        for code in enumerate_standard(c) {
            reports.push(v.verify_all(&code).map_err(|e| e.to_string())?);
        }
    }
    let passed = reports.iter().filter(|r| r.overall).count();
    let out = SweepOutput {
        codes: reports.len(),
        passed,
        reports,
    };
    let pass = out.passed == out.codes;
    let text = if json {
        format!(
            "{}\n",
            serde_json::to_string(&out).expect("output serializes")
        )
    } else {
        let mut s = String::new();
        for r in out.reports.iter().filter(|r| !r.overall) {
            s.push_str(&r.to_string());
        }
        let _ = writeln!(s, "{} codes, {} passed", out.codes, out.passed);
        s
    };
    Ok(Outcome::finished(text, pass))
}

struct Entry {
    name: String,
    diagram: LinkDiagram,
    expected: Option<UTriple>,
    twist_sites: Option<usize>,
}

fn read_entries(text: &str) -> Result<Vec<Entry>, String> {
    let records = match parse_pd_records(text) {
        Ok(records) => records,
        Err(_) => {
            let diagram = parse_pd(text).map_err(|e| e.to_string())?;
            return Ok(vec![Entry {
                name: "diagram".into(),
                diagram,
                expected: None,
                twist_sites: None,
            }]);
        }
    };
    records
        .into_iter()
        .map(|r: PdRecord| {
            let diagram = r.diagram().map_err(|e| format!("{}: {e}", r.name))?;
            Ok(Entry {
                diagram,
                expected: r.expected_u,
                twist_sites: r.twist_sites,
                name: r.name,
            })
        })
        .collect()
}

fn pd(
    v: &mut Verifier,
    file: &PathBuf,
    expect: Option<UTriple>,
    json: bool,
) -> Result<Outcome, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let entries = read_entries(&text)?;
    if entries.is_empty() {
        return Err(format!("{}: no PD records", file.display()));
    }
    let mut s = String::new();
    let mut pass = true;
    for e in entries {
        let d = e.diagram;
        let report = v
            .check_external(&e.name, &d, expect.or(e.expected))
            .map_err(|err| format!("{}: {err}", e.name))?;
        pass &= report.overall;
        let u0_excess = e
            .twist_sites
            .zip(report.computed_u)
            .map(|(t, u)| u.zero - t as i64);
        let out = PdOutput {
            lambda: v.lambda(&d),
            report,
            u0_excess,
        };
        if json {
            let _ = writeln!(
                s,
                "{}",
                serde_json::to_string(&out).expect("output serializes")
            );
        } else {
            s.push_str(&out.report.to_string());
            if let Some(x) = out.u0_excess {
                let _ = writeln!(s, "  u0 excess over twist sites: {x}");
            }
        }
    }
    Ok(Outcome::finished(s, pass))
}
