//! The verification catalog: every identity of the construction as an exact check.
//!
//! A check is a list of identities; it passes when every `lhs - rhs` normalizes
//! to zero. Operator identities are kept as expression trees so that the
//! evaluation oracle can re-check them without normal ordering.

mod integrals;
mod lemmas;
pub mod oracle;
mod orders;
mod section3;

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::ag2config::{dir_apply, Frame, Hyper, Vec2Form};
use crate::cmsbuild::{Cms, IntertwinerParts, PotentialSet};
use crate::exactfield::{FieldError, RatFunc, Rational, Semantics};
use crate::ratlimit::{self, RationalModel};
use crate::weylops::DiffOp;

pub use lemmas::{lemma_identities, LEMMA_IDS};
pub use oracle::{oracle_compare, OpExpr, OracleOutcome};

const TRIG: Semantics = Semantics::Trig;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Groups of checks selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Lemmas,
    Section3,
    Orders,
    Intertwine,
    Integral,
    Rational,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Lemmas, Suite::Section3, Suite::Orders, Suite::Intertwine, Suite::Integral, Suite::Rational, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Section3 => "section3",
            Suite::Orders => "orders",
            Suite::Intertwine => "intertwine",
            Suite::Integral => "integral",
            Suite::Rational => "rational",
            Suite::All => "all",
        }
    }

    fn contains(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.iter().copied().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// What is left after subtracting the two sides.
#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    Func(RatFunc),
    Op(DiffOp),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Func(f) => f.is_zero(),
            Residual::Op(d) => d.is_zero(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Residual::Func(f) => f.size(),
            Residual::Op(d) => d.size(),
        }
    }
}

/// One side-by-side identity.
#[derive(Clone, Debug)]
pub enum Identity {
    Func { lhs: RatFunc, rhs: RatFunc },
    Op { sem: Semantics, lhs: OpExpr, rhs: OpExpr },
}

impl Identity {
    pub fn func(lhs: RatFunc, rhs: RatFunc) -> Self {
        Identity::Func { lhs, rhs }
    }

    pub fn op(lhs: OpExpr, rhs: OpExpr) -> Self {
        Identity::Op { sem: TRIG, lhs, rhs }
    }

    pub fn op_in(sem: Semantics, lhs: OpExpr, rhs: OpExpr) -> Self {
        Identity::Op { sem, lhs, rhs }
    }

    pub fn residual(&self) -> Result<Residual, FieldError> {
        Ok(match self {
            Identity::Func { lhs, rhs } => Residual::Func(lhs.checked_sub(rhs)?),
            Identity::Op { sem, lhs, rhs } => {
                let (l, r) = rayon::join(|| lhs.normalize(*sem), || rhs.normalize(*sem));
                Residual::Op(l?.checked_sub(&r?)?)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub check_id: String,
    pub pass: bool,
    pub residual: Residual,
    pub elapsed: Duration,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "pass" } else { "FAIL" };
        write!(f, "{status} {}", self.check_id)?;
        if !self.pass {
            write!(f, " (residual size {})", self.residual.size())?;
        }
        Ok(())
    }
}

type Builder = dyn Fn(&Model) -> Vec<Identity> + Send + Sync;

/// A named entry of the catalog.
#[derive(Clone)]
pub struct Check {
    pub id: String,
    pub suite: Suite,
    build: Arc<Builder>,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Check({}, {})", self.id, self.suite.name())
    }
}

impl Check {
    pub fn new(id: impl Into<String>, suite: Suite, build: impl Fn(&Model) -> Vec<Identity> + Send + Sync + 'static) -> Self {
        Check { id: id.into(), suite, build: Arc::new(build) }
    }

    pub fn identities(&self, model: &Model) -> Vec<Identity> {
        (self.build)(model)
    }

    pub fn run(&self, model: &Model) -> VerificationReport {
        let start = Instant::now();
        let mut first: Option<Residual> = None;
        let mut failed: Option<Residual> = None;
        for ident in self.identities(model) {
            let r = match ident.residual() {
                Ok(r) => r,
                Err(e) => panic!("check {} hit a field error: {e}", self.id),
            };
            if !r.is_zero() && failed.is_none() {
                failed = Some(r.clone());
            }
            first.get_or_insert(r);
        }
        let pass = failed.is_none();
        let residual = failed.or(first).unwrap_or(Residual::Func(RatFunc::zero(TRIG)));
        VerificationReport { check_id: self.id.clone(), pass, residual, elapsed: start.elapsed() }
    }
}

/// Everything the checks need, built once.
pub struct Model {
    pub cms: Cms,
    pub pots: PotentialSet,
    pub parts: IntertwinerParts,
    pub h: DiffOp,
    pub h0: DiffOp,
    pub d: DiffOp,
    residual: OnceLock<DiffOp>,
    rational: OnceLock<RationalModel>,
}

impl Model {
    pub fn new(cms: Cms) -> Self {
        let pots = cms.potentials();
        let parts = cms.parts();
        let (h, h0) = cms.hamiltonians();
        let d = cms.intertwiner_from(&parts);
        Model { cms, pots, parts, h, h0, d, residual: OnceLock::new(), rational: OnceLock::new() }
    }

    /// `H∘𝒟 − 𝒟∘H0`, normal-ordered.
    pub fn intertwining_residual(&self) -> &DiffOp {
        self.residual.get_or_init(|| {
            let (hd, dh) = rayon::join(|| &self.h * &self.d, || &self.d * &self.h0);
            &hd - &dh
        })
    }

    pub fn rational(&self) -> &RationalModel {
        self.rational.get_or_init(|| RationalModel::build(self.cms.m_value().cloned(), self.cms.mutation()))
    }

    fn frame(&self) -> &Frame {
        self.cms.frame()
    }

    fn b(&self, i: usize) -> Vec2Form {
        self.frame().b[i]
    }

    fn db(&self, i: usize) -> DiffOp {
        self.cms.dbeta(i)
    }

    fn dbp(&self, idx: &[usize]) -> DiffOp {
        self.cms.dbeta_prod(idx)
    }

    /// `∂_{β_i}` applied to a function.
    fn dbf(&self, i: usize, f: &RatFunc) -> RatFunc {
        dir_apply(self.b(i), f)
    }

    fn dbfs(&self, idx: &[usize], f: &RatFunc) -> RatFunc {
        idx.iter().rev().fold(f.clone(), |acc, &i| self.dbf(i, &acc))
    }

    fn bb(&self, i: usize, j: usize) -> Rational {
        self.frame().bb(i, j)
    }

    fn hb(&self, i: usize, k: Hyper) -> RatFunc {
        self.frame().hb(i, k)
    }

    fn isq(&self, i: usize) -> RatFunc {
        self.hb(i, Hyper::InvSinhSq)
    }

    fn icq(&self, i: usize) -> RatFunc {
        self.hb(i, Hyper::InvCoshSq)
    }

    fn isq2(&self, i: usize) -> RatFunc {
        self.frame().h2b(i, Hyper::InvSinhSq)
    }

    fn mp(&self, c: &[i64]) -> RatFunc {
        self.cms.mpoly(c)
    }

    fn sum(&self, f: impl Fn(usize) -> RatFunc) -> RatFunc {
        (0..3).fold(RatFunc::zero(TRIG), |acc, i| &acc + &f(i))
    }

    fn sum_except(&self, skip: usize, f: impl Fn(usize) -> RatFunc) -> RatFunc {
        (0..3).filter(|&j| j != skip).fold(RatFunc::zero(TRIG), |acc, j| &acc + &f(j))
    }

    fn sum_uh(&self) -> RatFunc {
        self.sum(|j| self.pots.u_hat[j].clone())
    }

    fn vu(&self, i: usize) -> RatFunc {
        &self.pots.v[i] + &self.pots.u[i]
    }
}

/// The full ordered catalog.
pub fn catalog() -> Vec<Check> {
    let mut out = lemmas::checks();
    out.extend(section3::checks());
    out.extend(orders::checks());
    out.extend(integrals::checks());
    out.extend(ratlimit::checks());
    out
}

pub fn find_check(id: &str) -> Result<Check, VerifyError> {
    catalog().into_iter().find(|c| c.id == id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))
}

/// Runs every check of a suite; the report order is the catalog order.
pub fn run_suite(model: &Model, suite: Suite, parallel: bool) -> Vec<VerificationReport> {
    let checks: Vec<Check> = catalog().into_iter().filter(|c| suite.contains(c.suite)).collect();
    if parallel {
        checks.par_iter().map(|c| c.run(model)).collect()
    } else {
        checks.iter().map(|c| c.run(model)).collect()
    }
}

pub fn run_all(model: &Model, parallel: bool) -> Vec<VerificationReport> {
    run_suite(model, Suite::All, parallel)
}

pub fn check_trig_lemma(model: &Model, id: &str) -> Result<VerificationReport, VerifyError> {
    checked_in(model, id, Suite::Lemmas)
}

pub fn check_section3_lemma(model: &Model, id: &str) -> Result<VerificationReport, VerifyError> {
    checked_in(model, id, Suite::Section3)
}

pub fn check_order(model: &Model, k: u32) -> VerificationReport {
    find_check(&format!("order{k}")).expect("orders 0..5 are catalogued").run(model)
}

pub fn check_zero_order_decomposition(model: &Model) -> Vec<VerificationReport> {
    catalog().iter().filter(|c| c.id.starts_with("zero.")).map(|c| c.run(model)).collect()
}

pub fn check_intertwining(model: &Model) -> VerificationReport {
    find_check("intertwining").expect("catalogued").run(model)
}

pub fn check_integrals(model: &Model) -> Vec<VerificationReport> {
    run_suite(model, Suite::Integral, false)
}

fn checked_in(model: &Model, id: &str, suite: Suite) -> Result<VerificationReport, VerifyError> {
    let c = find_check(id)?;
    if c.suite != suite {
        return Err(VerifyError::UnknownCheck(id.to_string()));
    }
    Ok(c.run(model))
}

/// Symbolic verdict and oracle verdict of every operator identity of a check.
pub fn oracle_agreement(model: &Model, check: &Check, seed: u64) -> Result<Vec<(bool, OracleOutcome)>, FieldError> {
    let mut out = Vec::new();
    for (k, ident) in check.identities(model).into_iter().enumerate() {
        if let Identity::Op { sem, lhs, rhs } = &ident {
            let symbolic = ident.residual()?.is_zero();
            let outcome = oracle_compare(lhs, rhs, *sem, seed ^ (k as u64) << 32)?;
            out.push((symbolic, outcome));
        }
    }
    Ok(out)
}
