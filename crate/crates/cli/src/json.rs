//! Operator interchange format.

use ag2_core::exactfield::{Exponent, MPoly, RatFunc, Rational, Semantics};
use ag2_core::weylops::DiffOp;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct OpJson {
    pub semantics: String,
    pub order: i64,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct TermJson {
    pub dy1: u32,
    pub dy2: u32,
    pub num: PolyJson,
    pub den: PolyJson,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct PolyJson {
    pub terms: Vec<MonoJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct MonoJson {
    pub coeff: String,
    pub m: i32,
    pub t1: i32,
    pub t2: i32,
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("unknown semantics `{0}`")]
    Semantics(String),
    #[error(transparent)]
    Field(#[from] ag2_core::exactfield::FieldError),
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
}

fn coeff_str(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn poly_json(p: &MPoly) -> PolyJson {
    PolyJson {
        terms: p
            .terms()
            .iter()
            .map(|(e, c)| MonoJson { coeff: coeff_str(c), m: e.m, t1: e.t1, t2: e.t2 })
            .collect(),
    }
}

pub fn to_json(op: &DiffOp) -> OpJson {
    OpJson {
        semantics: op.semantics().name().to_string(),
        order: op.order().map_or(-1, i64::from),
        terms: op
            .terms()
            .map(|(&(dy1, dy2), f)| TermJson { dy1, dy2, num: poly_json(f.num()), den: poly_json(f.den()) })
            .collect(),
    }
}

fn poly_from(sem: Semantics, p: &PolyJson) -> Result<MPoly, JsonError> {
    let mut terms = Vec::with_capacity(p.terms.len());
    for t in &p.terms {
        terms.push((Exponent::new(t.m, t.t1, t.t2), t.coeff.parse::<Rational>()?));
    }
    Ok(MPoly::from_terms(sem, terms)?)
}

pub fn from_json(j: &OpJson) -> Result<DiffOp, JsonError> {
    let sem = match j.semantics.as_str() {
        "trig" => Semantics::Trig,
        "rational" => Semantics::Rational,
        other => return Err(JsonError::Semantics(other.to_string())),
    };
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        let f = RatFunc::new(poly_from(sem, &t.num)?, poly_from(sem, &t.den)?)?;
        terms.push(((t.dy1, t.dy2), f));
    }
    Ok(DiffOp::from_terms(sem, terms)?)
}

pub fn parse_operator(s: &str) -> Result<DiffOp, JsonError> {
    from_json(&serde_json::from_str(s)?)
}
