//! `ag2cms`: run the verification catalog, export operators, evaluate coefficients.

pub mod json;
pub mod latex;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use ag2_core::cmsbuild::Cms;
use ag2_core::exactfield::{Exponent, FieldError, MPoly, RatFunc, Rational, Semantics};
use ag2_core::ratlimit::RationalModel;
use ag2_core::verifysuite::{run_suite, Model, Suite, VerificationReport};
use ag2_core::weylops::DiffOp;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "ag2cms", version, about = "Exact checks for the AG2 intertwiner")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_parser = parse_rational)]
        m: Option<Rational>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print an operator in normal order.
    Emit {
        #[arg(long, value_enum)]
        target: EmitTarget,
        #[arg(long, value_enum, default_value_t = EmitFormat::Json)]
        format: EmitFormat,
        #[arg(long, value_parser = parse_rational)]
        m: Option<Rational>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a coefficient function at a rational point.
    Eval {
        #[arg(long, value_parser = parse_eval_target)]
        target: EvalTarget,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        z1: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        z2: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        m: Option<Rational>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitFormat {
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitTarget {
    #[value(name = "H")]
    H,
    #[value(name = "H0")]
    H0,
    #[value(name = "D")]
    D,
    #[value(name = "Dstar")]
    Dstar,
    #[value(name = "I6")]
    I6,
    #[value(name = "Hr")]
    Hr,
    #[value(name = "H0r")]
    H0r,
    #[value(name = "Dr")]
    Dr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalTarget {
    X,
    Y,
    F(usize),
    G(usize),
    H,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

fn parse_eval_target(s: &str) -> Result<EvalTarget, String> {
    let idx = |c: &str| match c {
        "1" => Some(0),
        "2" => Some(1),
        "3" => Some(2),
        _ => None,
    };
    match s {
        "X" => return Ok(EvalTarget::X),
        "Y" => return Ok(EvalTarget::Y),
        "h" => return Ok(EvalTarget::H),
        _ => {}
    }
    let t = s.strip_prefix('f').and_then(idx).map(EvalTarget::F);
    t.or_else(|| s.strip_prefix('g').and_then(idx).map(EvalTarget::G))
        .ok_or_else(|| format!("unknown target `{s}` (expected X, Y, f1..f3, g1..g3, h)"))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Pool(String),
}

/// Exit status of a completed command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

#[derive(Serialize)]
struct ReportEntry<'a> {
    id: &'a str,
    pass: bool,
    residual_size: usize,
}

#[derive(Serialize)]
struct Report<'a> {
    suite: &'a str,
    m: Option<String>,
    results: Vec<ReportEntry<'a>>,
    timing: BTreeMap<&'a str, f64>,
}

fn cms(m: Option<Rational>) -> Cms {
    match m {
        Some(v) => Cms::new().specialize(v),
        None => Cms::new(),
    }
}

pub fn render_reports(suite: Suite, m: Option<&Rational>, reports: &[VerificationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!("{r}\n"));
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            s.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
            s
        }
        ReportFormat::Json => {
            let report = Report {
                suite: suite.name(),
                m: m.map(|v| v.to_string()),
                results: reports
                    .iter()
                    .map(|r| ReportEntry { id: &r.check_id, pass: r.pass, residual_size: r.residual.size() })
                    .collect(),
                timing: reports.iter().map(|r| (r.check_id.as_str(), r.elapsed.as_secs_f64())).collect(),
            };
            serde_json::to_string_pretty(&report).expect("plain data") + "\n"
        }
    }
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn operator(target: EmitTarget, m: Option<Rational>) -> DiffOp {
    let rational = || RationalModel::build(m.clone(), Default::default());
    match target {
        EmitTarget::Hr => rational().hr,
        EmitTarget::H0r => rational().h0r,
        EmitTarget::Dr => rational().dr,
        _ => {
            let c = cms(m.clone());
            match target {
                EmitTarget::H => c.hamiltonians().0,
                EmitTarget::H0 => c.hamiltonians().1,
                EmitTarget::D => c.intertwiner(),
                EmitTarget::Dstar => c.intertwiner().adjoint(),
                _ => {
                    let d = c.intertwiner();
                    &d * &d.adjoint()
                }
            }
        }
    }
}

/// Value of an `eval` target; `m` stays symbolic when not given.
pub fn evaluate(target: EvalTarget, z1: &Rational, z2: &Rational, m: Option<Rational>) -> Result<RatFunc, FieldError> {
    let c = cms(m);
    let parts = c.parts();
    let f = match target {
        EvalTarget::X => parts.x.clone(),
        EvalTarget::Y => parts.y.clone(),
        EvalTarget::F(i) => parts.f[i].clone(),
        EvalTarget::G(i) => parts.g(i),
        EvalTarget::H => parts.h(),
    };
    let num = eval_at(f.num(), z1, z2)?;
    let den = eval_at(f.den(), z1, z2)?;
    if den.is_zero() {
        return Err(FieldError::Pole);
    }
    RatFunc::new(num, den)
}

/// Substitutes `t1 = z1`, `t2 = z2`, leaving `m` free.
fn eval_at(p: &MPoly, z1: &Rational, z2: &Rational) -> Result<MPoly, FieldError> {
    let mut terms = Vec::with_capacity(p.len());
    for (e, c) in p.terms() {
        let v = &(c * &z1.powi(e.t1)?) * &z2.powi(e.t2)?;
        terms.push((Exponent::new(e.m, 0, 0), v));
    }
    MPoly::from_terms(Semantics::Rational, terms)
}

pub fn run(cli: Cli) -> Result<Status, CliError> {
    match cli.command {
        Command::Verify { suite, m, jobs, out, format } => {
            let model = Model::new(cms(m.clone()));
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs as usize)
                .build()
                .map_err(|e| CliError::Pool(e.to_string()))?;
            let reports = pool.install(|| run_suite(&model, suite, jobs > 1));
            write_out(&out, &render_reports(suite, m.as_ref(), &reports, format))?;
            Ok(if reports.iter().all(|r| r.pass) { Status::Ok } else { Status::Failed })
        }
        Command::Emit { target, format, m, out } => {
            let op = operator(target, m);
            let text = match format {
                EmitFormat::Json => serde_json::to_string(&json::to_json(&op))? + "\n",
                EmitFormat::Latex => latex::render(&op),
            };
            write_out(&out, &text)?;
            Ok(Status::Ok)
        }
        Command::Eval { target, z1, z2, m } => {
            let v = evaluate(target, &z1, &z2, m)?;
            println!("{v}");
            Ok(Status::Ok)
        }
    }
}
