#![allow(dead_code)]

use std::path::PathBuf;

use gasylv_core::{Blade, Multivector, Rational, Scalar, Signature};
use num_traits::{One, Zero};
use rand::Rng;

pub type Mv = Multivector<Rational>;

pub fn fixture_dir(example: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures/golden")
        .join(example)
}

/// Reads a `MASK NUM/DEN` file into a multivector over `sig`.
pub fn read_fixture(sig: Signature, example: &str, name: &str) -> Mv {
    let path = fixture_dir(example).join(format!("{name}.txt"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    let terms = text.lines().filter(|l| !l.trim().is_empty()).map(|line| {
        let (mask, coef) = line.split_once(' ').expect("MASK COEF");
        (
            mask.parse::<u32>().unwrap(),
            coef.trim().parse::<Rational>().unwrap(),
        )
    });
    Mv::from_terms(sig, terms).unwrap()
}

pub fn read_scalar(example: &str, name: &str) -> Rational {
    let sig = Signature::new(1, 0).unwrap();
    read_fixture(sig, example, name).scalar_part().clone()
}

pub fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

/// Dense random element with integer coefficients in `[-bound, bound]`.
pub fn random_int<S: Scalar, R: Rng>(rng: &mut R, sig: Signature, bound: i64) -> Multivector<S> {
    let coeffs = (0..sig.blade_count())
        .map(|_| S::from_i64(rng.gen_range(-bound..=bound)))
        .collect();
    Multivector::from_coeffs(sig, coeffs).unwrap()
}

/// Product by symbol-string rewriting: concatenate index words, bubble-sort
/// with a sign flip per swap, contract equal neighbours with `η_aa`.
pub fn oracle_product(a: &Mv, b: &Mv) -> Mv {
    let s = a.sig();
    let mut out = Mv::zero(s);
    for (ba, ca) in a.terms() {
        for (bb, cb) in b.terms() {
            let mut word: Vec<usize> = ba.indices().chain(bb.indices()).collect();
            let mut sign = 1i64;
            let mut i = 0;
            while i + 1 < word.len() {
                if word[i] > word[i + 1] {
                    word.swap(i, i + 1);
                    sign = -sign;
                    i = i.saturating_sub(1);
                } else if word[i] == word[i + 1] {
                    sign *= s.metric(word[i]) as i64;
                    word.drain(i..i + 2);
                    i = i.saturating_sub(1);
                } else {
                    i += 1;
                }
            }
            let mask = word.iter().fold(0u32, |m, &a| m | 1 << (a - 1));
            let mut c = ca.clone() * cb;
            c *= &<Rational as Scalar>::from_i64(sign);
            out = &out + &Mv::from_terms(s, [(mask, c)]).unwrap();
        }
    }
    out
}

/// Conjugation sets of the center-projection table for `n <= 15`, as
/// combinations of (hat, tilde, triangle, square), with the normalizing
/// denominator.
pub fn center_table(n: usize) -> (i64, Vec<[bool; 4]>) {
    const F: bool = false;
    const T: bool = true;
    // Each entry: [hat, tilde, triangle, square].
    match n {
        2 | 3 => (2, vec![[F, F, F, F], [T, T, F, F]]),
        4 | 5 => (
            4,
            vec![[F, F, F, F], [F, T, F, F], [T, F, T, F], [T, T, T, F]],
        ),
        6 | 7 => (
            4,
            vec![[F, F, F, F], [T, T, F, F], [T, F, T, F], [F, T, T, F]],
        ),
        8 | 9 => (
            8,
            vec![
                [F, F, F, F],
                [T, F, F, T],
                [F, T, F, F],
                [T, T, F, T],
                [F, F, T, F],
                [T, F, T, T],
                [F, T, T, F],
                [T, T, T, T],
            ],
        ),
        // The last term is B̂̃^△; with an extra □ grade 8 leaks through.
        10 | 11 => (
            8,
            vec![
                [F, F, F, F],
                [T, F, F, T],
                [F, T, F, T],
                [T, T, F, F],
                [F, F, T, F],
                [T, F, T, T],
                [F, T, T, T],
                [T, T, T, F],
            ],
        ),
        12 | 13 => (
            8,
            vec![
                [F, F, F, F],
                [T, F, F, T],
                [F, T, F, F],
                [T, T, F, T],
                [F, F, T, T],
                [T, F, T, F],
                [F, T, T, T],
                [T, T, T, F],
            ],
        ),
        14 | 15 => (
            8,
            vec![
                [F, F, F, F],
                [T, F, F, T],
                [F, T, F, T],
                [T, T, F, F],
                [F, F, T, T],
                [T, F, T, F],
                [F, T, T, F],
                [T, T, T, T],
            ],
        ),
        _ => panic!("no table entry for n = {n}"),
    }
}

/// Evaluates the table expression for `⟨B⟩_cen` with explicit conjugation calls.
pub fn center_via_table<S: Scalar>(b: &Multivector<S>) -> Multivector<S> {
    use gasylv_core::ConjugationKind as K;
    let (den, rows) = center_table(b.sig().dim());
    let kinds = [K::Hat, K::Tilde, K::Triangle, K::Square];
    let mut sum = Multivector::zero(b.sig());
    for row in rows {
        let mut term = b.clone();
        for (use_it, kind) in row.iter().zip(kinds) {
            if *use_it {
                term = term.conjugate(kind);
            }
        }
        sum += &term;
    }
    sum.div_scalar(&S::from_i64(den))
}

/// Matrix of `X ↦ b X` on the blade basis (column `j` is `b e_j`).
pub fn left_matrix(b: &Mv) -> Vec<Vec<Rational>> {
    mult_matrix(b, true)
}

/// Matrix of `X ↦ X b`.
pub fn right_matrix(b: &Mv) -> Vec<Vec<Rational>> {
    mult_matrix(b, false)
}

fn mult_matrix(b: &Mv, left: bool) -> Vec<Vec<Rational>> {
    let s = b.sig();
    let size = s.blade_count();
    let columns: Vec<Mv> = (0..size)
        .map(|j| {
            let ej = Mv::blade(s, Blade::new(j as u32), Rational::one()).unwrap();
            if left {
                b * &ej
            } else {
                &ej * b
            }
        })
        .collect();
    (0..size)
        .map(|i| columns.iter().map(|col| col.coeffs()[i].clone()).collect())
        .collect()
}

/// Fraction-exact Gaussian elimination. Returns `det` and, when `rhs` is
/// given and the matrix is regular, the solution.
pub fn gauss(
    mut m: Vec<Vec<Rational>>,
    mut rhs: Option<Vec<Rational>>,
) -> (Rational, Option<Vec<Rational>>) {
    let size = m.len();
    let mut det = Rational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return (Rational::zero(), None);
        };
        if pivot != col {
            m.swap(pivot, col);
            if let Some(r) = rhs.as_mut() {
                r.swap(pivot, col);
            }
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for row in col + 1..size {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &p;
            let (upper, lower) = m.split_at_mut(row);
            for (target, pivot_entry) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= &factor * pivot_entry;
            }
            if let Some(r) = rhs.as_mut() {
                let delta = &factor * &r[col];
                r[row] -= delta;
            }
        }
    }
    let solution = rhs.map(|mut r| {
        for row in (0..size).rev() {
            let mut acc = r[row].clone();
            for k in row + 1..size {
                acc -= &m[row][k] * &r[k];
            }
            r[row] = acc / &m[row][row];
        }
        r
    });
    (det, solution)
}

/// Solves `AX - XB = C` as a `2^n × 2^n` linear system.
pub fn brute_force_sylvester(a: &Mv, b: &Mv, c: &Mv) -> Option<Mv> {
    let la = left_matrix(a);
    let rb = right_matrix(b);
    let m: Vec<Vec<Rational>> = la
        .iter()
        .zip(&rb)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect())
        .collect();
    let (det, sol) = gauss(m, Some(c.coeffs().to_vec()));
    if det.is_zero() {
        return None;
    }
    Some(Mv::from_coeffs(a.sig(), sol.unwrap()).unwrap())
}
