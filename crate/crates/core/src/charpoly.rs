//! Characteristic polynomial, determinant, adjugate and inverse of a
//! multivector.
//!
//! With `N = 2^⌊(n+1)/2⌋` the coefficients follow the recursion
//!
//! ```text
//! B(1) = B,   b(k) = (N/k) ⟨B(k)⟩₀,   B(k+1) = B (B(k) - b(k)),
//! ```
//!
//! with the conventions `B(0) = 0`, `b(0) = -1`. Then
//! `φ_B(λ) = λ^N - b(1) λ^(N-1) - … - b(N)`, `Det(B) = -b(N)` and
//! `Adj(B) = b(N-1) - B(N-1)`. The last iterate `B(N)` is a pure scalar.
//!
//! For odd `n` the generalized coefficients replace `⟨·⟩₀` by the projection
//! onto the center and run only `N/2` steps.
//!
//! The closed forms for `n <= 5` are provided as independent cross-checks and
//! as building blocks for the closed-form Sylvester solvers.

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::{Scalar, Tolerance};
use crate::signature::Signature;

/// Iterates and coefficients of the characteristic-polynomial recursion.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly<S> {
    sig: Signature,
    /// `B(1) … B(N)`.
    iterates: Vec<Multivector<S>>,
    /// `b(1) … b(N)`.
    coeffs: Vec<S>,
}

impl<S: Scalar> CharPoly<S> {
    pub fn sig(&self) -> Signature {
        self.sig
    }

    /// Number of coefficients, `N`.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `b(k)` for `0 <= k <= N`, with `b(0) = -1`.
    pub fn coeff(&self, k: usize) -> S {
        if k == 0 {
            -S::one()
        } else {
            self.coeffs[k - 1].clone()
        }
    }

    /// `b(1) … b(N)`.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// `B(k)` for `0 <= k <= N`, with `B(0) = 0`.
    pub fn iterate(&self, k: usize) -> Multivector<S> {
        if k == 0 {
            Multivector::zero(self.sig)
        } else {
            self.iterates[k - 1].clone()
        }
    }

    /// `B(k) - b(k)`; equals `e` for `k = 0`.
    pub fn shifted_iterate(&self, k: usize) -> Multivector<S> {
        if k == 0 {
            Multivector::one(self.sig)
        } else {
            self.iterates[k - 1].sub_scalar(&self.coeffs[k - 1])
        }
    }

    pub fn determinant(&self) -> S {
        -self.coeff(self.degree())
    }

    pub fn adjugate(&self) -> Multivector<S> {
        -self.shifted_iterate(self.degree() - 1)
    }

    /// Coefficients of `φ_B(λ)` from the leading term down:
    /// `[1, -b(1), …, -b(N)]`.
    pub fn polynomial(&self) -> Vec<S> {
        (0..=self.degree()).map(|k| -self.coeff(k)).collect()
    }
}

/// Threshold check shared by the singularity and degradation tests.
///
/// Exact scalars compare with zero. Floats use
/// `|value| <= tol · (1 + scale^power)`.
pub(crate) fn negligible<S: Scalar>(value: &S, scale: &S, power: usize, tol: f64) -> bool {
    if S::is_exact() {
        value.is_zero()
    } else {
        value.to_f64().abs() <= float_bound(scale, power, tol)
    }
}

fn float_bound<S: Scalar>(scale: &S, power: usize, tol: f64) -> f64 {
    tol * (1.0 + scale.to_f64().abs().powi(power as i32))
}

pub fn char_poly<S: Scalar>(b: &Multivector<S>) -> Result<CharPoly<S>> {
    char_poly_with(b, &Tolerance::default())
}

pub fn char_poly_with<S: Scalar>(b: &Multivector<S>, tol: &Tolerance) -> Result<CharPoly<S>> {
    let sig = b.sig();
    let big_n = sig.matrix_size();
    let mut iterates = Vec::with_capacity(big_n);
    let mut coeffs = Vec::with_capacity(big_n);
    let mut current = b.clone();
    for k in 1..=big_n {
        let mut bk = current.scalar_part().clone();
        bk *= &S::from_ratio(big_n as i64, k as i64);
        if k < big_n {
            let next = b * &current.sub_scalar(&bk);
            iterates.push(std::mem::replace(&mut current, next));
        } else {
            iterates.push(current.clone());
        }
        coeffs.push(bk);
    }

    let last = &iterates[big_n - 1];
    let residue = last.non_scalar_max_abs();
    if S::is_exact() {
        if !residue.is_zero() {
            return Err(Error::Consistency(format!(
                "last characteristic-polynomial iterate is not scalar (residue {residue})"
            )));
        }
    } else if !negligible(&residue, &b.max_abs(), big_n, tol.zero) {
        return Err(Error::NumericalDegradation {
            residue: residue.to_f64(),
            bound: float_bound(&b.max_abs(), big_n, tol.zero),
        });
    }

    Ok(CharPoly {
        sig,
        iterates,
        coeffs,
    })
}

pub fn determinant<S: Scalar>(b: &Multivector<S>) -> Result<S> {
    Ok(char_poly(b)?.determinant())
}

pub fn adjugate<S: Scalar>(b: &Multivector<S>) -> Result<Multivector<S>> {
    Ok(char_poly(b)?.adjugate())
}

pub fn inverse<S: Scalar>(b: &Multivector<S>) -> Result<Multivector<S>> {
    inverse_with(b, &Tolerance::default())
}

/// `B⁻¹ = Adj(B) / Det(B)`; fails with [`Error::SingularElement`] when the
/// determinant is zero (exact) or below the float threshold.
pub fn inverse_with<S: Scalar>(b: &Multivector<S>, tol: &Tolerance) -> Result<Multivector<S>> {
    let cp = char_poly_with(b, tol)?;
    let det = cp.determinant();
    if negligible(&det, &b.max_abs(), cp.degree(), tol.zero) {
        return Err(Error::SingularElement {
            det: det.to_string(),
        });
    }
    Ok(cp.adjugate().div_scalar(&det))
}

/// Central-valued coefficients for odd `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedCoeffs<S> {
    sig: Signature,
    /// `B'(1) … B'(N/2)`.
    iterates: Vec<Multivector<S>>,
    /// `b'(1) … b'(N/2)`, each in `Cl⁰ ⊕ Clⁿ`.
    coeffs: Vec<Multivector<S>>,
}

impl<S: Scalar> GeneralizedCoeffs<S> {
    /// `N/2`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `b'(k)` for `0 <= k <= N/2`, with `b'(0) = -e`.
    pub fn coeff(&self, k: usize) -> Multivector<S> {
        if k == 0 {
            -Multivector::one(self.sig)
        } else {
            self.coeffs[k - 1].clone()
        }
    }

    pub fn coeffs(&self) -> &[Multivector<S>] {
        &self.coeffs
    }

    /// `B'(k)` for `0 <= k <= N/2`, with `B'(0) = 0`.
    pub fn iterate(&self, k: usize) -> Multivector<S> {
        if k == 0 {
            Multivector::zero(self.sig)
        } else {
            self.iterates[k - 1].clone()
        }
    }

    /// `B'(k) - b'(k)`; equals `e` for `k = 0`.
    pub fn shifted_iterate(&self, k: usize) -> Multivector<S> {
        if k == 0 {
            Multivector::one(self.sig)
        } else {
            &self.iterates[k - 1] - &self.coeffs[k - 1]
        }
    }
}

/// Generalized coefficients `b'(k) = ((N/2)/k) ⟨B'(k)⟩_cen`,
/// `B'(k+1) = B (B'(k) - b'(k))`, `k = 1 … N/2`, for odd `n`.
pub fn generalized_coeffs<S: Scalar>(b: &Multivector<S>) -> Result<GeneralizedCoeffs<S>> {
    generalized_coeffs_with(b, &Tolerance::default())
}

pub fn generalized_coeffs_with<S: Scalar>(
    b: &Multivector<S>,
    tol: &Tolerance,
) -> Result<GeneralizedCoeffs<S>> {
    let sig = b.sig();
    if !sig.is_odd() {
        return Err(Error::UnsupportedDimension {
            op: "generalized_coeffs",
            dim: sig.dim(),
            reason: "generalized coefficients need odd n",
        });
    }
    let half = sig.matrix_size() / 2;
    let mut iterates = Vec::with_capacity(half);
    let mut coeffs = Vec::with_capacity(half);
    let mut current = b.clone();
    for k in 1..=half {
        let bk = current
            .center_project()
            .scale(&S::from_ratio(half as i64, k as i64));
        if k < half {
            let next = b * &(&current - &bk);
            iterates.push(std::mem::replace(&mut current, next));
        } else {
            iterates.push(current.clone());
        }
        coeffs.push(bk);
    }

    // The last iterate must already be central.
    let last = &iterates[half - 1];
    let residue = (last - &last.center_project()).max_abs();
    if S::is_exact() {
        if !residue.is_zero() {
            return Err(Error::Consistency(format!(
                "last generalized iterate is not central (residue {residue})"
            )));
        }
    } else if !negligible(&residue, &b.max_abs(), half, tol.zero) {
        return Err(Error::NumericalDegradation {
            residue: residue.to_f64(),
            bound: float_bound(&b.max_abs(), half, tol.zero),
        });
    }

    Ok(GeneralizedCoeffs {
        sig,
        iterates,
        coeffs,
    })
}

/// Which of the two equivalent `n = 4` coefficient lists to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum N4Variant {
    /// Built from `B̂~`, `B̂^△`, `B̃^△` and `B♮`.
    Natural,
    /// Built from `B̃`, `B̂^△`, `B̂~^△` and `B♯`; also valid (with central
    /// values) for `n = 5`.
    Sharp,
}

/// Right factors `R1, R2, R3` of the explicit `n = 4` coefficient lists.
///
/// `B(k) - b(k) = (-1)^k R_k`, hence `b(1) = B + R1`, `b(2) = -(B R1 + R2)`,
/// `b(3) = B R2 + R3`, `b(4) = -B R3`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExplicitFactors<S> {
    pub r1: Multivector<S>,
    pub r2: Multivector<S>,
    pub r3: Multivector<S>,
}

impl<S: Scalar> ExplicitFactors<S> {
    /// Closed-form conjugation expressions, no recursion involved.
    pub fn new(b: &Multivector<S>, variant: N4Variant) -> Self {
        let hat_tri = b.hat().triangle();
        match variant {
            N4Variant::Natural => {
                let ht = b.hat_tilde();
                let tilde_tri = b.tilde().triangle();
                let nat = b.natural();
                ExplicitFactors {
                    r1: &(&ht + &hat_tri) + &tilde_tri,
                    r2: &(&(&ht * &hat_tri) + &(&ht * &tilde_tri)) + &nat,
                    r3: &ht * &nat,
                }
            }
            N4Variant::Sharp => {
                let t = b.tilde();
                let ht_tri = b.hat_tilde().triangle();
                let sh = b.sharp();
                ExplicitFactors {
                    r1: &(&t + &hat_tri) + &ht_tri,
                    r2: &(&(&t * &hat_tri) + &(&t * &ht_tri)) + &sh,
                    r3: &t * &sh,
                }
            }
        }
    }

    /// `[b(1), b(2), b(3), b(4)]` as multivectors (scalar for `n = 4`,
    /// central for `n = 5` with the sharp variant).
    pub fn coeffs(&self, b: &Multivector<S>) -> [Multivector<S>; 4] {
        [
            b + &self.r1,
            -(&(b * &self.r1) + &self.r2),
            &(b * &self.r2) + &self.r3,
            -(b * &self.r3),
        ]
    }
}

/// Adjugate from the per-dimension closed forms, `n <= 5`.
///
/// `variant` selects the `n = 4` form and is ignored otherwise.
pub fn closed_form_adjugate<S: Scalar>(
    d: &Multivector<S>,
    variant: N4Variant,
) -> Result<Multivector<S>> {
    let adj = match d.sig().dim() {
        1 => d.hat(),
        2 => d.hat_tilde(),
        3 => &(&d.hat() * &d.tilde()) * &d.hat_tilde(),
        4 => match variant {
            N4Variant::Natural => &d.hat_tilde() * &d.natural(),
            N4Variant::Sharp => &d.tilde() * &d.sharp(),
        },
        5 => {
            let partial = &d.tilde() * &d.sharp();
            let inner = (d * &partial).triangle();
            &partial * &inner
        }
        n => {
            return Err(Error::UnsupportedDimension {
                op: "closed-form adjugate",
                dim: n,
                reason: "closed forms exist only for n <= 5",
            })
        }
    };
    Ok(adj)
}

/// Determinant from the per-dimension closed forms, `n <= 5`:
///
/// | n | `Det(D)` |
/// |---|----------|
/// | 1 | `D D̂` |
/// | 2 | `D D̂~` |
/// | 3 | `D D̂ D̃ D̂~` |
/// | 4 | `D D̂~ (D̂ D̃)^△` |
/// | 5 | `D D̃ (D̂ D̂~)^△ (D D̃ (D̂ D̂~)^△)^△` |
pub fn closed_form_det<S: Scalar>(d: &Multivector<S>) -> Result<S> {
    let adj = closed_form_adjugate(d, N4Variant::Natural)?;
    closed_form_det_from_adjugate(d, &adj)
}

pub(crate) fn closed_form_det_from_adjugate<S: Scalar>(
    d: &Multivector<S>,
    adj: &Multivector<S>,
) -> Result<S> {
    let det = d * adj;
    if S::is_exact() && !det.is_scalar() {
        return Err(Error::Consistency(
            "closed-form determinant is not a scalar".into(),
        ));
    }
    Ok(det.scalar_part().clone())
}
