#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use gasylv_cli::literal::blade_name;
use gasylv_core::{Blade, Multivector, Rational, Signature};

pub fn fixture_dir(example: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures/golden")
        .join(example)
}

pub fn expr(example: &str, name: &str) -> String {
    let path = fixture_dir(example).join(format!("{name}.expr"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{path:?}: {e}"))
        .trim()
        .to_string()
}

/// Reads a `MASK NUM/DEN` fixture.
pub fn fixture(sig: Signature, example: &str, name: &str) -> Multivector<Rational> {
    let path = fixture_dir(example).join(format!("{name}.txt"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    let terms = text.lines().filter(|l| !l.trim().is_empty()).map(|line| {
        let (mask, coef) = line.split_once(' ').expect("MASK COEF");
        (
            mask.parse::<u32>().unwrap(),
            coef.trim().parse::<Rational>().unwrap(),
        )
    });
    Multivector::from_terms(sig, terms).unwrap()
}

/// Blade name → coefficient string, as the JSON output encodes it.
pub fn as_json_map(mv: &Multivector<Rational>) -> serde_json::Map<String, serde_json::Value> {
    let mut terms: Vec<(Blade, &Rational)> = mv.terms().collect();
    terms.sort_by(|a, b| a.0.display_cmp(b.0));
    terms
        .into_iter()
        .map(|(b, c)| {
            (
                blade_name(b, mv.sig()),
                serde_json::Value::String(c.to_string()),
            )
        })
        .collect()
}

pub fn gasylv(args: &[&str]) -> Output {
    gasylv_env(args, &[])
}

pub fn gasylv_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gasylv"));
    cmd.args(args)
        .env_remove("GASYLV_SCALAR")
        .env_remove("GASYLV_TOL");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn gasylv")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

pub fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(out)))
}
