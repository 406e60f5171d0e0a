use std::process::Command;

use ag2_cli::json::{parse_operator, to_json};
use ag2_cli::latex::{derivative_factors, render};
use ag2_cli::{evaluate, operator, EmitTarget, EvalTarget};
use ag2_core::cmsbuild::Cms;
use ag2_core::exactfield::Rational;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ag2cms"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn eval_x_at_two_three() {
    let (code, out, _) = run(&["eval", "--target", "X", "--z1", "2", "--z2", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(12) / (5)");
}

#[test]
fn eval_matches_library_value() {
    let h = evaluate(EvalTarget::H, &Rational::from_int(2), &Rational::from_int(3), Some(Rational::new(1, 2))).unwrap();
    let parts = Cms::new().specialize(Rational::new(1, 2)).parts();
    let direct = parts.h().eval(&Rational::zero(), &Rational::from_int(2), &Rational::from_int(3)).unwrap();
    assert_eq!(h.constant_value(), Some(direct));
}

#[test]
fn eval_keeps_m_symbolic() {
    let (code, out, _) = run(&["eval", "--target", "f1", "--z1", "2", "--z2", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains('m'));
}

#[test]
fn pole_and_bad_literals_exit_two() {
    assert_eq!(run(&["eval", "--target", "X", "--z1", "1", "--z2", "3"]).0, 2);
    assert_eq!(run(&["eval", "--target", "X", "--z1", "0.5", "--z2", "3"]).0, 2);
    assert_eq!(run(&["eval", "--target", "q7", "--z1", "2", "--z2", "3"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(run(&["verify", "--jobs", "0"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn verify_intertwine_specialized_passes() {
    let (code, out, _) = run(&["verify", "--suite", "intertwine", "--m", "0"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("pass intertwining"));
}

#[test]
fn verify_lemmas_lists_every_id() {
    let (code, out, _) = run(&["verify", "--suite", "lemmas", "--jobs", "2"]);
    assert_eq!(code, 0);
    for id in ag2_core::verifysuite::LEMMA_IDS {
        assert!(out.lines().any(|l| l == format!("pass {id}")), "{id} missing");
    }
}

#[test]
fn json_report_is_stable_apart_from_timing() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for k in 0..2 {
        let p = dir.path().join(format!("r{k}.json"));
        let p_str = p.to_str().unwrap();
        let (code, _, _) = run(&["verify", "--suite", "rational", "--m", "2/5", "--format", "json", "--out", p_str]);
        assert_eq!(code, 0);
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
        assert!(v["timing"].is_object());
        v.as_object_mut().unwrap().remove("timing");
        bodies.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    assert!(bodies[0].contains("\"rat.intertwining\""));
}

#[test]
fn emitted_operators_round_trip() {
    for t in [EmitTarget::D, EmitTarget::H, EmitTarget::Dr, EmitTarget::H0r] {
        let op = operator(t, None);
        let text = serde_json::to_string(&to_json(&op)).unwrap();
        assert_eq!(parse_operator(&text).unwrap(), op);
    }
}

#[test]
fn emit_cli_json_round_trips_d() {
    let (code, out, _) = run(&["emit", "--target", "D", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(parse_operator(&out).unwrap(), Cms::new().intertwiner());
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["semantics"], "trig");
    assert_eq!(v["order"], 3);
    let c = v["terms"][0]["num"]["terms"][0]["coeff"].as_str().unwrap();
    assert!(c.contains('/'));
}

#[test]
fn latex_partial_count_matches_structure() {
    let h = operator(EmitTarget::H, None);
    let tex = render(&h);
    assert_eq!(tex.matches("\\partial").count(), derivative_factors(&h));
    assert_eq!(derivative_factors(&h), 4);
}

#[test]
fn i6_has_order_six() {
    let (code, out, _) = run(&["emit", "--target", "I6", "--m", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 6);
}
