//! Basis-free solvers for the Sylvester equation `AX - XB = C` in Cl(p,q).
//!
//! All methods share one shape: find an element `D` and a right-hand side
//! `F` with `D X = F`, then `X = Adj(D) F / Det(D)`. They differ only in how
//! `D`, `F` and `Adj(D)` are written down:
//!
//! - closed forms for `n = 1 … 5`, built from products and conjugations of
//!   `A`, `B`, `C` only;
//! - the general recursion, `D = φ_B(A)` with the characteristic polynomial
//!   of `B` and `F = Σ A^(N-j) C (B(j-1) - b(j-1))`;
//! - for odd `n`, the same with the `N/2` central generalized coefficients.
//!
//! The reported `Q` is always `Det(D)`, and `X = numerator / Q`.

use std::fmt;
use std::str::FromStr;

use crate::charpoly::{
    char_poly_with, closed_form_adjugate, closed_form_det_from_adjugate, generalized_coeffs_with,
    inverse_with, negligible, CharPoly, ExplicitFactors, N4Variant,
};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::{Scalar, Tolerance};
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedN1,
    ClosedN2,
    ClosedN3,
    /// `n = 4` with `Q = D D̂~ D♮`.
    ClosedN4V1,
    /// `n = 4` with `Q = D D̃ D♯`.
    ClosedN4V2,
    ClosedN5,
    General,
    GeneralOdd,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::ClosedN1,
        Method::ClosedN2,
        Method::ClosedN3,
        Method::ClosedN4V1,
        Method::ClosedN4V2,
        Method::ClosedN5,
        Method::General,
        Method::GeneralOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedN1 => "closed-n1",
            Method::ClosedN2 => "closed-n2",
            Method::ClosedN3 => "closed-n3",
            Method::ClosedN4V1 => "closed-n4-v1",
            Method::ClosedN4V2 => "closed-n4-v2",
            Method::ClosedN5 => "closed-n5",
            Method::General => "general",
            Method::GeneralOdd => "general-odd",
        }
    }

    /// The dimension a closed form is written for; `None` for the recursions.
    pub fn closed_dim(self) -> Option<usize> {
        match self {
            Method::ClosedN1 => Some(1),
            Method::ClosedN2 => Some(2),
            Method::ClosedN3 => Some(3),
            Method::ClosedN4V1 | Method::ClosedN4V2 => Some(4),
            Method::ClosedN5 => Some(5),
            Method::General | Method::GeneralOdd => None,
        }
    }

    pub fn applies_to(self, sig: Signature) -> bool {
        match self {
            Method::General => true,
            Method::GeneralOdd => sig.is_odd(),
            closed => closed.closed_dim() == Some(sig.dim()),
        }
    }

    /// Every method usable for `sig`.
    pub fn applicable(sig: Signature) -> Vec<Method> {
        Method::ALL
            .into_iter()
            .filter(|m| m.applies_to(sig))
            .collect()
    }

    /// Closed forms up to `n = 5` (`n = 4` uses the second variant), the odd
    /// recursion for larger odd `n`, the general recursion otherwise.
    pub fn default_for(sig: Signature) -> Method {
        match sig.dim() {
            1 => Method::ClosedN1,
            2 => Method::ClosedN2,
            3 => Method::ClosedN3,
            4 => Method::ClosedN4V2,
            5 => Method::ClosedN5,
            _ if sig.is_odd() => Method::GeneralOdd,
            _ => Method::General,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        Method::ALL
            .into_iter()
            .find(|m| m.name() == wanted)
            .ok_or_else(|| {
                let names: Vec<_> = Method::ALL.iter().map(|m| m.name()).collect();
                format!(
                    "unknown method `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

/// `AX - XB = C` with all three elements in the same algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct SylvesterProblem<S> {
    pub a: Multivector<S>,
    pub b: Multivector<S>,
    pub c: Multivector<S>,
}

impl<S: Scalar> SylvesterProblem<S> {
    pub fn new(a: Multivector<S>, b: Multivector<S>, c: Multivector<S>) -> Result<Self> {
        a.sig().ensure_same(b.sig())?;
        a.sig().ensure_same(c.sig())?;
        Ok(SylvesterProblem { a, b, c })
    }

    pub fn sig(&self) -> Signature {
        self.a.sig()
    }

    /// `AX - XB - C`.
    pub fn residual(&self, x: &Multivector<S>) -> Multivector<S> {
        &(&(&self.a * x) - &(x * &self.b)) - &self.c
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SylvesterSolution<S> {
    pub x: Multivector<S>,
    /// `Adj(D) F`, so that `X = numerator / Q`.
    pub numerator: Multivector<S>,
    /// `Det(D)`.
    pub q: S,
    pub d: Multivector<S>,
    pub f: Multivector<S>,
    pub method: Method,
    /// Max-norm of `AX - XB - C`.
    pub residual: S,
    /// Float mode only: the residual exceeded the acceptance bound.
    pub low_confidence: bool,
}

/// Solves with the default method for the problem's dimension.
pub fn solve<S: Scalar>(prob: &SylvesterProblem<S>) -> Result<SylvesterSolution<S>> {
    solve_with(prob, None, &Tolerance::default())
}

pub fn solve_with<S: Scalar>(
    prob: &SylvesterProblem<S>,
    method: Option<Method>,
    tol: &Tolerance,
) -> Result<SylvesterSolution<S>> {
    let method = method.unwrap_or_else(|| Method::default_for(prob.sig()));
    if !method.applies_to(prob.sig()) {
        return Err(Error::UnsupportedDimension {
            op: method.name(),
            dim: prob.sig().dim(),
            reason: "method does not apply to this dimension",
        });
    }
    let (d, f, adj_and_q) = match method {
        Method::General => {
            let cp = char_poly_with(&prob.b, tol)?;
            let powers = powers(&prob.a, cp.degree());
            let d = d_from_charpoly(&powers, &cp);
            let f = f_from_charpoly(&powers, &prob.c, &cp);
            (d, f, None)
        }
        Method::GeneralOdd => {
            let (d, f) = odd_d_and_f(prob, tol)?;
            (d, f, None)
        }
        closed => {
            let (d, f, variant) = closed_d_and_f(prob, closed);
            let adj = closed_form_adjugate(&d, variant)?;
            let q = closed_form_det_from_adjugate(&d, &adj)?;
            (d, f, Some((adj, q)))
        }
    };
    let (adj, q) = match adj_and_q {
        Some(pair) => pair,
        None => {
            let dcp = char_poly_with(&d, tol)?;
            (dcp.adjugate(), dcp.determinant())
        }
    };
    finish(prob, method, d, f, adj, q, tol)
}

/// General recursion, any `n`.
pub fn solve_general<S: Scalar>(prob: &SylvesterProblem<S>) -> Result<SylvesterSolution<S>> {
    solve_with(prob, Some(Method::General), &Tolerance::default())
}

/// Recursion on the generalized central coefficients, odd `n` only.
pub fn solve_general_odd<S: Scalar>(prob: &SylvesterProblem<S>) -> Result<SylvesterSolution<S>> {
    solve_with(prob, Some(Method::GeneralOdd), &Tolerance::default())
}

/// Closed form for `n <= 5`; `method` must be one of the `Closed*` variants
/// and match the dimension.
pub fn solve_closed<S: Scalar>(
    prob: &SylvesterProblem<S>,
    method: Method,
) -> Result<SylvesterSolution<S>> {
    if method.closed_dim().is_none() {
        return Err(Error::UnsupportedDimension {
            op: method.name(),
            dim: prob.sig().dim(),
            reason: "not a closed-form method",
        });
    }
    solve_with(prob, Some(method), &Tolerance::default())
}

fn finish<S: Scalar>(
    prob: &SylvesterProblem<S>,
    method: Method,
    d: Multivector<S>,
    f: Multivector<S>,
    adj: Multivector<S>,
    q: S,
    tol: &Tolerance,
) -> Result<SylvesterSolution<S>> {
    let big_n = prob.sig().matrix_size();
    if negligible(&q, &d.max_abs(), big_n, tol.zero) {
        return Err(Error::SingularProblem {
            q: q.to_string(),
            d: format!(
                "[{}]",
                d.coeffs()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        });
    }
    let numerator = &adj * &f;
    let x = numerator.div_scalar(&q);
    let residual = verify_residual(prob, &x);
    let low_confidence = if S::is_exact() {
        if !residual.is_zero() {
            return Err(Error::ResidualCheckFailed {
                residual: residual.to_string(),
            });
        }
        false
    } else {
        let xn = x.max_abs().to_f64();
        let bound =
            tol.residual * (1.0 + prob.a.max_abs().to_f64() * xn + xn * prob.b.max_abs().to_f64());
        let r = residual.to_f64();
        r.is_nan() || r > bound
    };
    Ok(SylvesterSolution {
        x,
        numerator,
        q,
        d,
        f,
        method,
        residual,
        low_confidence,
    })
}

/// `max |AX - XB - C|` over all coefficients.
pub fn verify_residual<S: Scalar>(prob: &SylvesterProblem<S>, x: &Multivector<S>) -> S {
    prob.residual(x).max_abs()
}

/// `[e, A, A², …, A^k]`.
pub fn powers<S: Scalar>(a: &Multivector<S>, k: usize) -> Vec<Multivector<S>> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(Multivector::one(a.sig()));
    for i in 1..=k {
        let next = &out[i - 1] * a;
        out.push(next);
    }
    out
}

/// `D = -Σ_{j=0}^{N} A^(N-j) b(j)`: the characteristic polynomial of `B`
/// evaluated at `A`.
pub fn build_d_general<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Multivector<S>> {
    a.sig().ensure_same(b.sig())?;
    let cp = char_poly_with(b, &Tolerance::default())?;
    Ok(d_from_charpoly(&powers(a, cp.degree()), &cp))
}

/// `F = Σ_{j=1}^{N} A^(N-j) C (B(j-1) - b(j-1))`.
pub fn build_f_general<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
) -> Result<Multivector<S>> {
    a.sig().ensure_same(b.sig())?;
    a.sig().ensure_same(c.sig())?;
    let cp = char_poly_with(b, &Tolerance::default())?;
    Ok(f_from_charpoly(&powers(a, cp.degree()), c, &cp))
}

fn d_from_charpoly<S: Scalar>(powers: &[Multivector<S>], cp: &CharPoly<S>) -> Multivector<S> {
    let big_n = cp.degree();
    let mut d = powers[big_n].clone();
    for j in 1..=big_n {
        d -= &powers[big_n - j].scale(&cp.coeff(j));
    }
    d
}

fn f_from_charpoly<S: Scalar>(
    powers: &[Multivector<S>],
    c: &Multivector<S>,
    cp: &CharPoly<S>,
) -> Multivector<S> {
    let big_n = cp.degree();
    let mut f = Multivector::zero(c.sig());
    for j in 1..=big_n {
        let right = c * &cp.shifted_iterate(j - 1);
        f += &(&powers[big_n - j] * &right);
    }
    f
}

fn odd_d_and_f<S: Scalar>(
    prob: &SylvesterProblem<S>,
    tol: &Tolerance,
) -> Result<(Multivector<S>, Multivector<S>)> {
    let g = generalized_coeffs_with(&prob.b, tol)?;
    let half = g.len();
    let powers = powers(&prob.a, half);
    let mut d = powers[half].clone();
    let mut f = Multivector::zero(prob.sig());
    for j in 1..=half {
        d -= &(&powers[half - j] * &g.coeff(j));
        let right = &prob.c * &g.shifted_iterate(j - 1);
        f += &(&powers[half - j] * &right);
    }
    Ok((d, f))
}

fn closed_d_and_f<S: Scalar>(
    prob: &SylvesterProblem<S>,
    method: Method,
) -> (Multivector<S>, Multivector<S>, N4Variant) {
    let (a, b, c) = (&prob.a, &prob.b, &prob.c);
    match method {
        Method::ClosedN1 => (a - b, c.clone(), N4Variant::Natural),
        Method::ClosedN2 | Method::ClosedN3 => {
            // D = A² - (B + B̂~) A + B B̂~,  F = A C - C B̂~.
            let r1 = b.hat_tilde();
            let d = &(&(a * a) - &(&(b + &r1) * a)) + &(b * &r1);
            let f = &(a * c) - &(c * &r1);
            (d, f, N4Variant::Natural)
        }
        Method::ClosedN4V1 | Method::ClosedN4V2 | Method::ClosedN5 => {
            let variant = if method == Method::ClosedN4V1 {
                N4Variant::Natural
            } else {
                N4Variant::Sharp
            };
            let ExplicitFactors { r1, r2, r3 } = ExplicitFactors::new(b, variant);
            let pw = powers(a, 4);
            let mut d = pw[4].clone();
            d -= &(&pw[3] * &(b + &r1));
            d += &(&pw[2] * &(&(b * &r1) + &r2));
            d -= &(&pw[1] * &(&(b * &r2) + &r3));
            d += &(b * &r3);

            let mut f = &pw[3] * c;
            f -= &(&(&pw[2] * c) * &r1);
            f += &(&(&pw[1] * c) * &r2);
            f -= &(c * &r3);
            (d, f, variant)
        }
        Method::General | Method::GeneralOdd => unreachable!("not a closed form"),
    }
}

/// The two-term equation `K X L + M X N = P`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoTermProblem<S> {
    pub k: Multivector<S>,
    pub l: Multivector<S>,
    pub m: Multivector<S>,
    pub n: Multivector<S>,
    pub p: Multivector<S>,
}

impl<S: Scalar> TwoTermProblem<S> {
    /// `K X L + M X N - P`.
    pub fn residual(&self, x: &Multivector<S>) -> Multivector<S> {
        &(&(&(&self.k * x) * &self.l) + &(&(&self.m * x) * &self.n)) - &self.p
    }

    /// Rewrites as `AX - XB = C` with `A = M⁻¹K`, `B = -N L⁻¹`,
    /// `C = M⁻¹ P L⁻¹`. Needs `M` and `L` invertible.
    pub fn reduce(&self) -> Result<SylvesterProblem<S>> {
        reduce_two_term(&self.k, &self.l, &self.m, &self.n, &self.p)
    }
}

pub fn reduce_two_term<S: Scalar>(
    k: &Multivector<S>,
    l: &Multivector<S>,
    m: &Multivector<S>,
    n: &Multivector<S>,
    p: &Multivector<S>,
) -> Result<SylvesterProblem<S>> {
    let sig = k.sig();
    for other in [l, m, n, p] {
        sig.ensure_same(other.sig())?;
    }
    let tol = Tolerance::default();
    let m_inv = inverse_with(m, &tol)?;
    let l_inv = inverse_with(l, &tol)?;
    let a = &m_inv * k;
    let b = -(n * &l_inv);
    let c = &(&m_inv * p) * &l_inv;
    SylvesterProblem::new(a, b, c)
}
