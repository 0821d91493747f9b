use std::hint::black_box;
use std::time::Instant;

use gasylv_core::{Multivector, Rational, Ring, Scalar, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::commands::Report;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub n: usize,
    pub ops: u64,
    pub ns_per_op: f64,
}

/// Times products of random dense multivectors, one row per dimension.
///
/// Repetitions shrink by 4x per extra generator so every row costs about
/// the same wall time.
pub fn run(sizes: &[usize], ring: Ring) -> Report {
    let rows: Vec<Row> = sizes
        .iter()
        .map(|&n| match ring {
            Ring::Rational => time_products::<Rational>(n, 18),
            Ring::F64 => time_products::<f64>(n, 24),
        })
        .collect();

    let mut text = String::new();
    if !rows.is_empty() {
        text.push_str(&format!("{:>3} {:>10} {:>14}", "n", "ops", "ns_per_op"));
        for r in &rows {
            text.push_str(&format!("\n{:>3} {:>10} {:>14.1}", r.n, r.ops, r.ns_per_op));
        }
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "n": r.n, "ops": r.ops, "ns_per_op": r.ns_per_op }))
        .collect();
    Report {
        text,
        json: json!({ "scalar": ring.to_string(), "rows": json_rows }),
        warnings: Vec::new(),
    }
}

fn time_products<S: Scalar>(n: usize, budget_log2: usize) -> Row {
    let sig = Signature::new(n - n / 2, n / 2).expect("size checked by the parser");
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let mut random = || {
        let coeffs = (0..sig.blade_count())
            .map(|_| S::from_i64(rng.gen_range(-9..=9)))
            .collect();
        Multivector::from_coeffs(sig, coeffs).expect("full length")
    };
    let (a, b) = (random(), random());
    let ops = 1u64 << budget_log2.saturating_sub(2 * n);
    let start = Instant::now();
    for _ in 0..ops {
        black_box(black_box(&a) * black_box(&b));
    }
    let elapsed = start.elapsed().as_nanos() as f64;
    Row {
        n,
        ops,
        ns_per_op: elapsed / ops as f64,
    }
}
