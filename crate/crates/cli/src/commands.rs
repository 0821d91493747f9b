use std::fmt::Write as _;

use gasylv_core::charpoly::{char_poly_with, generalized_coeffs_with, inverse_with};
use gasylv_core::sylvester::{solve_with, Method, SylvesterProblem};
use gasylv_core::{Multivector, Rational, Ring, Scalar, Signature};
use serde_json::{json, Value};

use crate::bench;
use crate::config::{Command, Format, RunArgs};
use crate::error::CliError;
use crate::literal::{format_multivector, multivector_json, parse_multivector, Coefficient};

/// A finished command: both renderings plus warnings for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
        }
    }
}

pub fn format_of(command: &Command) -> Format {
    match command {
        Command::Solve { run, .. } => run.format,
        Command::Det(e) | Command::Inverse(e) => e.run.format,
        Command::Charpoly { element, .. } => element.run.format,
        Command::Bench { format, .. } => *format,
    }
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Solve {
            run,
            a,
            b,
            c,
            method,
        } => match run.scalar {
            Ring::Rational => solve::<Rational>(run, [a, b, c], *method),
            Ring::F64 => solve::<f64>(run, [a, b, c], *method),
        },
        Command::Det(e) => match e.run.scalar {
            Ring::Rational => det::<Rational>(&e.run, &e.b),
            Ring::F64 => det::<f64>(&e.run, &e.b),
        },
        Command::Inverse(e) => match e.run.scalar {
            Ring::Rational => inverse::<Rational>(&e.run, &e.b),
            Ring::F64 => inverse::<f64>(&e.run, &e.b),
        },
        Command::Charpoly {
            element: e,
            generalized: g,
        } => match (e.run.scalar, *g) {
            (Ring::Rational, false) => charpoly::<Rational>(&e.run, &e.b),
            (Ring::F64, false) => charpoly::<f64>(&e.run, &e.b),
            (Ring::Rational, true) => generalized::<Rational>(&e.run, &e.b),
            (Ring::F64, true) => generalized::<f64>(&e.run, &e.b),
        },
        Command::Bench { sizes, scalar, .. } => Ok(bench::run(&sizes.0, *scalar)),
    }
}

fn parse<S: Coefficient>(
    name: &'static str,
    text: &str,
    sig: Signature,
) -> Result<Multivector<S>, CliError> {
    parse_multivector(text, sig).map_err(|source| CliError::Literal { name, source })
}

fn sig_json(sig: Signature) -> Value {
    json!({ "p": sig.p(), "q": sig.q() })
}

fn to_f64<S: Scalar>(mv: &Multivector<S>) -> Multivector<f64> {
    Multivector::from_coeffs(mv.sig(), mv.coeffs().iter().map(Scalar::to_f64).collect())
        .expect("same length")
}

/// Renders an exact result, or its decimal approximation with `--decimal`.
fn show<S: Coefficient>(mv: &Multivector<S>, decimal: bool) -> (String, Value) {
    if decimal && S::is_exact() {
        let f = to_f64(mv);
        (format_multivector(&f), multivector_json(&f))
    } else {
        (format_multivector(mv), multivector_json(mv))
    }
}

fn solve<S: Coefficient>(
    run: &RunArgs,
    [a, b, c]: [&String; 3],
    method: Option<Method>,
) -> Result<Report, CliError> {
    let sig = run.signature;
    let prob = SylvesterProblem::new(
        parse::<S>("--a", a, sig)?,
        parse("--b", b, sig)?,
        parse("--c", c, sig)?,
    )?;
    let sol = solve_with(&prob, method, &run.tolerance())?;

    let x_text = if S::is_exact() && !run.decimal {
        if sol.numerator.is_zero() {
            "0".to_string()
        } else {
            let (num, q) = if sol.q.is_negative() {
                (-sol.numerator.clone(), -sol.q.clone())
            } else {
                (sol.numerator.clone(), sol.q.clone())
            };
            format!("(1/{q})({})", format_multivector(&num))
        }
    } else {
        show(&sol.x, run.decimal).0
    };
    let residual = if S::is_exact() {
        sol.residual.to_string()
    } else {
        format!("{:e}", sol.residual.to_f64())
    };

    let mut text = String::new();
    writeln!(text, "signature {sig}").unwrap();
    writeln!(text, "method    {}", sol.method).unwrap();
    writeln!(text, "Q         {}", sol.q).unwrap();
    writeln!(text, "D         {}", format_multivector(&sol.d)).unwrap();
    writeln!(text, "F         {}", format_multivector(&sol.f)).unwrap();
    writeln!(text, "X         {x_text}").unwrap();
    write!(text, "residual  {residual}").unwrap();

    let json = json!({
        "signature": sig_json(sig),
        "method": sol.method.name(),
        "Q": sol.q.to_json(),
        "D": multivector_json(&sol.d),
        "F": multivector_json(&sol.f),
        "X": show(&sol.x, run.decimal).1,
        "residual": sol.residual.to_json(),
        "low_confidence": sol.low_confidence,
    });
    let mut warnings = Vec::new();
    if sol.low_confidence {
        warnings.push(format!(
            "residual {residual} exceeds the acceptance bound; solution is low-confidence"
        ));
    }
    Ok(Report {
        text,
        json,
        warnings,
    })
}

fn det<S: Coefficient>(run: &RunArgs, b: &str) -> Result<Report, CliError> {
    let b = parse::<S>("--b", b, run.signature)?;
    let det = char_poly_with(&b, &run.tolerance())?.determinant();
    Ok(Report {
        text: det.to_string(),
        json: json!({ "signature": sig_json(run.signature), "det": det.to_json() }),
        warnings: Vec::new(),
    })
}

fn inverse<S: Coefficient>(run: &RunArgs, b: &str) -> Result<Report, CliError> {
    let b = parse::<S>("--b", b, run.signature)?;
    let inv = inverse_with(&b, &run.tolerance())?;
    let (text, value) = show(&inv, run.decimal);
    Ok(Report {
        text,
        json: json!({ "signature": sig_json(run.signature), "inverse": value }),
        warnings: Vec::new(),
    })
}

fn charpoly<S: Coefficient>(run: &RunArgs, b: &str) -> Result<Report, CliError> {
    let b = parse::<S>("--b", b, run.signature)?;
    let cp = char_poly_with(&b, &run.tolerance())?;
    let mut text = String::new();
    for k in 1..=cp.degree() {
        writeln!(text, "b({k}) = {}", cp.coeff(k)).unwrap();
    }
    write!(text, "Det = {}", cp.determinant()).unwrap();
    Ok(Report {
        text,
        json: json!({
            "signature": sig_json(run.signature),
            "b": cp.coeffs().iter().map(Coefficient::to_json).collect::<Vec<_>>(),
            "det": cp.determinant().to_json(),
        }),
        warnings: Vec::new(),
    })
}

fn generalized<S: Coefficient>(run: &RunArgs, b: &str) -> Result<Report, CliError> {
    let b = parse::<S>("--b", b, run.signature)?;
    let g = generalized_coeffs_with(&b, &run.tolerance())?;
    let mut text = String::new();
    let mut values = Vec::new();
    for k in 1..=g.len() {
        let c = g.coeff(k);
        writeln!(text, "b'({k}) = {}", format_multivector(&c)).unwrap();
        values.push(multivector_json(&c));
    }
    text.pop();
    Ok(Report {
        text,
        json: json!({ "signature": sig_json(run.signature), "b_prime": values }),
        warnings: Vec::new(),
    })
}
