//! LaTeX rendering of normal-ordered operators.

use ag2_core::exactfield::{MPoly, RatFunc, Semantics};
use ag2_core::weylops::DiffOp;

fn power(name: &str, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{{{e}}}"),
    }
}

fn poly(p: &MPoly, sem: Semantics) -> String {
    let (v1, v2) = match sem {
        Semantics::Trig => ("z_1", "z_2"),
        Semantics::Rational => ("w_1", "w_2"),
    };
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().iter().enumerate() {
        let mono: Vec<String> =
            [power("m", e.m), power(v1, e.t1), power(v2, e.t2)].into_iter().filter(|s| !s.is_empty()).collect();
        let neg = c.signum() < 0;
        let a = c.abs();
        if k > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let coeff = if a.is_integer() {
            a.to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
        };
        if mono.is_empty() {
            out.push_str(&coeff);
        } else {
            if !a.is_one() {
                out.push_str(&coeff);
                out.push(' ');
            }
            out.push_str(&mono.join(" "));
        }
    }
    out
}

fn ratfunc(f: &RatFunc) -> String {
    let sem = f.semantics();
    if f.den().is_one() {
        format!("\\left({}\\right)", poly(f.num(), sem))
    } else {
        format!("\\frac{{{}}}{{{}}}", poly(f.num(), sem), poly(f.den(), sem))
    }
}

/// One `\partial` per coordinate occurring in a term.
fn derivs((a, b): (u32, u32)) -> String {
    let one = |i: u32, e: u32| match e {
        0 => String::new(),
        1 => format!(" \\partial_{{y_{i}}}"),
        _ => format!(" \\partial_{{y_{i}}}^{{{e}}}"),
    };
    format!("{}{}", one(1, a), one(2, b))
}

pub fn render(op: &DiffOp) -> String {
    if op.is_zero() {
        return "0".into();
    }
    let lines: Vec<String> = op.terms().map(|(&alpha, f)| format!("{}{}", ratfunc(f), derivs(alpha))).collect();
    lines.join("\n+ ") + "\n"
}

/// Number of `\partial` factors `render` produces.
pub fn derivative_factors(op: &DiffOp) -> usize {
    op.terms().map(|(&(a, b), _)| usize::from(a > 0) + usize::from(b > 0)).sum()
}
