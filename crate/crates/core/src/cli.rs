//! Command-line frontend.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{
    audit_with, enumerate_perturbations_with, operator_table_with, verdicts_markdown, CheckOptions,
};
use crate::error::{Error, Result};
use crate::hammodel::{load_model, random_momenta, zoo, HamiltonianModel, ZOO_NAMES};
use crate::matcore::DEFAULT_TOL;
use crate::symsolve::{
    defining_residual, solve_with_tol, SymmetryKind, SymmetryQuery, SymmetrySolution,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Markdown,
}

#[derive(Debug, Parser)]
#[command(
    name = "diracsym",
    version,
    about = "Discrete symmetries of Dirac Hamiltonians"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Override the model's mass.
    #[arg(long, global = true)]
    pub mass: Option<f64>,

    /// Drop the mass term.
    #[arg(long, global = true)]
    pub massless: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,

    /// Tolerance for residual checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Seed for the random momenta used in verification.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve every symmetry at both mass settings and check their relations.
    Audit { model: String },
    /// Solve a single symmetry.
    Solve {
        model: String,
        /// One of P_x, P_y, P, T, C, M, chi.
        #[arg(long)]
        symmetry: String,
    },
    /// Rebuild the two-flavour operator table and compare every entry.
    Table,
    /// Grade every Pauli-string perturbation up to the given momentum degree.
    Perturb {
        model: String,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        max_degree: u8,
    },
    /// Eigenvalues at one momentum.
    Spectrum {
        model: String,
        /// Comma-separated momentum components.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Resolves a zoo name or a JSON model file.
pub fn resolve_model(source: &str) -> Result<HamiltonianModel> {
    if ZOO_NAMES.contains(&source) {
        return zoo(source);
    }
    let path = Path::new(source);
    if path.is_file() {
        return load_model(path);
    }
    Err(Error::UnknownModel {
        name: source.to_string(),
        valid: ZOO_NAMES.iter().map(|s| s.to_string()).collect(),
    })
}

fn parse_momentum(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim().parse::<f64>().map_err(|_| {
                Error::InvalidModel(format!("momentum component `{s}` is not a real number"))
            })
        })
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

impl CliConfig {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            seed: self.seed,
            tol: self.tol,
            ..CheckOptions::default()
        }
    }

    fn model(&self, source: &str) -> Result<HamiltonianModel> {
        let mut m = resolve_model(source)?;
        if let Some(mass) = self.mass {
            m = m.with_mass(mass)?;
        }
        if self.massless {
            m = m.massless();
        }
        Ok(m)
    }

    fn execute(&self) -> std::result::Result<String, (Failure, String)> {
        let wrap = |e: Error| (Failure::from(e), String::new());
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err((
                Failure::Usage("--tol must be positive".to_string()),
                String::new(),
            ));
        }
        let opts = self.options();
        match &self.command {
            Command::Audit { model } => {
                let model = self.model(model).map_err(wrap)?;
                let report = audit_with(&model, &opts);
                let text = match self.format {
                    Format::Json => to_json(&report).map_err(wrap)?,
                    Format::Markdown => report.to_markdown(),
                };
                if report.all_verified() {
                    Ok(text)
                } else {
                    Err((
                        Failure::Verification(audit_failures(&report, opts.tol)),
                        text,
                    ))
                }
            }
            Command::Solve { model, symmetry } => {
                let kind: SymmetryKind = symmetry.parse().map_err(wrap)?;
                let mut model = resolve_model(model).map_err(wrap)?;
                if let Some(mass) = self.mass {
                    model = model.with_mass(mass).map_err(wrap)?;
                }
                let query = SymmetryQuery::new(kind, model.dim(), self.massless).map_err(wrap)?;
                let solution = solve_with_tol(&model, &query, opts.tol);
                let checked = verify_solution(&model, &solution, &opts);
                let text = match self.format {
                    Format::Json => to_json(&SolveOutput {
                        model: model.name(),
                        solution: &solution,
                        max_residual: checked,
                    })
                    .map_err(wrap)?,
                    Format::Markdown => solve_markdown(&model, &solution, checked),
                };
                if checked <= opts.tol {
                    Ok(text)
                } else {
                    Err((
                        Failure::Verification(format!(
                            "representative residual {checked:.3e} exceeds {:.1e}",
                            opts.tol
                        )),
                        text,
                    ))
                }
            }
            Command::Table => {
                let table = operator_table_with(&opts).map_err(wrap)?;
                let text = match self.format {
                    Format::Json => to_json(&table).map_err(wrap)?,
                    Format::Markdown => table.to_markdown(),
                };
                if table.all_matched() {
                    Ok(text)
                } else {
                    let mut msg = format!("{}/{} entries matched", table.matched, table.total);
                    for c in table.cells.iter().filter(|c| !c.matched) {
                        let _ = write!(
                            msg,
                            "\n{}: expected {}, found {}, residual {:.3e}",
                            c.operator, c.expected, c.found, c.residual
                        );
                    }
                    Err((Failure::Verification(msg), text))
                }
            }
            Command::Perturb { model, max_degree } => {
                let model = self.model(model).map_err(wrap)?;
                let verdicts = enumerate_perturbations_with(&model, *max_degree as usize, &opts)
                    .map_err(wrap)?;
                let text = match self.format {
                    Format::Json => to_json(&verdicts).map_err(wrap)?,
                    Format::Markdown => verdicts_markdown(model.name(), &verdicts),
                };
                let unstable: Vec<String> = verdicts
                    .iter()
                    .flat_map(|v| {
                        v.verdicts
                            .iter()
                            .filter(|r| !r.lambda_independent)
                            .map(move |r| {
                                format!(
                                    "{}·{} vs {}: residuals {:?}",
                                    v.monomial,
                                    v.term,
                                    r.column(),
                                    r.residuals
                                )
                            })
                    })
                    .collect();
                if unstable.is_empty() {
                    Ok(text)
                } else {
                    Err((
                        Failure::Verification(format!(
                            "verdicts depend on λ:\n{}",
                            unstable.join("\n")
                        )),
                        text,
                    ))
                }
            }
            Command::Spectrum { model, p } => {
                let model = self.model(model).map_err(wrap)?;
                let p = parse_momentum(p).map_err(wrap)?;
                let eigenvalues = model.spectrum(&p).map_err(wrap)?;
                let text = match self.format {
                    Format::Json => to_json(&SpectrumOutput {
                        model: model.name(),
                        p: &p,
                        eigenvalues: &eigenvalues,
                    })
                    .map_err(wrap)?,
                    Format::Markdown => {
                        let list: Vec<String> =
                            eigenvalues.iter().map(|e| format!("{e:.12}")).collect();
                        format!("{} at p = {:?}: {}\n", model.name(), p, list.join(", "))
                    }
                };
                Ok(text)
            }
        }
    }
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    model: &'a str,
    solution: &'a SymmetrySolution,
    max_residual: f64,
}

#[derive(Serialize)]
struct SpectrumOutput<'a> {
    model: &'a str,
    p: &'a [f64],
    eigenvalues: &'a [f64],
}

fn verify_solution(model: &HamiltonianModel, sol: &SymmetrySolution, opts: &CheckOptions) -> f64 {
    let momenta = random_momenta(model.dim(), opts.samples, opts.seed);
    sol.representatives
        .iter()
        .flat_map(|r| {
            let d = r.matrix();
            momenta
                .iter()
                .map(move |p| {
                    defining_residual(model, &sol.query, &d, p, None).unwrap_or(f64::INFINITY)
                })
                .collect::<Vec<_>>()
        })
        .fold(0.0, f64::max)
}

fn solve_markdown(model: &HamiltonianModel, sol: &SymmetrySolution, residual: f64) -> String {
    let mut out = String::new();
    let setting = if sol.query.massless {
        "massless"
    } else {
        "massive"
    };
    let _ = writeln!(
        out,
        "# {} on {} ({setting})\n",
        sol.query.kind,
        model.name()
    );
    let _ = writeln!(out, "exists: {}", sol.exists);
    let _ = writeln!(out, "nullity: {}", sol.nullity);
    for r in &sol.representatives {
        let _ = writeln!(
            out,
            "representative: {} (square {})",
            r.string,
            r.square.label()
        );
    }
    if !sol.representatives.is_empty() {
        let _ = writeln!(out, "max residual: {residual:.1e}");
    }
    out
}

fn audit_failures(report: &crate::classify::SymmetryReport, tol: f64) -> String {
    let mut lines = Vec::new();
    for e in &report.entries {
        for r in e
            .massive
            .representatives
            .iter()
            .chain(&e.massless.representatives)
        {
            if !r.verified {
                lines.push(format!(
                    "{} {}: residual {:.3e} > {tol:.1e}",
                    e.symmetry, r.string, r.max_residual
                ));
            }
        }
    }
    for r in report.relations.failures() {
        lines.push(format!("relation {} fails: {:?}", r.relation, r.status));
    }
    if let Some(rot) = report
        .rotation
        .as_ref()
        .filter(|r| !r.full_turn_is_minus_identity)
    {
        lines.push(format!(
            "exp(2πi S_z) differs from -I by {:.3e}",
            rot.full_turn_defect
        ));
    }
    lines.join("\n")
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code: 0 on success, 1 when a verification fails and 2 on
/// usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match config.execute() {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err((Failure::Usage(msg), _)) => {
            let _ = writeln!(
                err,
                "error: {msg}\n\n{}",
                CliConfig::command().render_usage()
            );
            2
        }
        Err((Failure::Verification(msg), text)) => {
            let _ = write!(out, "{text}");
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
    }
}
