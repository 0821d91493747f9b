//! Coefficient rings.
//!
//! Two rings are supported: exact rationals over arbitrary-precision integers
//! and IEEE binary64. The ring is a type parameter of every multivector, so
//! mixing rings is rejected at compile time. Runtime selection (the CLI) goes
//! through [`Ring`].

use std::fmt;
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::blade::blade_mul;
use crate::signature::Signature;
use crate::Blade;

/// Exact rational scalar, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Rational,
    F64,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Rational => "rational",
            Ring::F64 => "f64",
        })
    }
}

impl FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rational" | "exact" => Ok(Ring::Rational),
            "f64" | "float" => Ok(Ring::F64),
            other => Err(format!(
                "unknown scalar ring `{other}` (expected rational or f64)"
            )),
        }
    }
}

/// Zero-test and residual tolerances used in float mode.
///
/// Exact scalars ignore both values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Relative threshold for treating a determinant-like scalar as zero:
    /// `|x| <= zero * (1 + scale^N)`.
    pub zero: f64,
    /// Relative threshold for accepting a float Sylvester solution.
    pub residual: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            zero: 1e-9,
            residual: 1e-8,
        }
    }
}

/// A coefficient ring for multivectors.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    const RING: Ring;

    fn from_i64(v: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn abs(&self) -> Self;

    /// Approximate magnitude, used only for tolerance scaling and reports.
    fn to_f64(&self) -> f64;

    fn is_exact() -> bool {
        Self::RING == Ring::Rational
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out *= rhs;
        out
    }

    /// Dense geometric product of two coefficient arrays over `sig`.
    fn product_kernel(sig: Signature, lhs: &[Self], rhs: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); lhs.len()];
        let rhs_nz: Vec<(u32, &Self)> = nonzero_terms(rhs).collect();
        for (i, a) in nonzero_terms(lhs) {
            for &(j, b) in &rhs_nz {
                let (sign, blade) = blade_mul(Blade::new(i), Blade::new(j), sig);
                let term = a.mul_ref(b);
                let slot = &mut out[blade.mask() as usize];
                if sign < 0 {
                    *slot -= &term;
                } else {
                    *slot += &term;
                }
            }
        }
        out
    }
}

fn nonzero_terms<S: Zero>(coeffs: &[S]) -> impl Iterator<Item = (u32, &S)> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32, c))
}

impl Scalar for f64 {
    const RING: Ring = Ring::F64;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    const RING: Ring = Ring::Rational;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    // Clears denominators so the inner loop runs on integers only, then
    // normalizes each output coefficient once.
    fn product_kernel(sig: Signature, lhs: &[Self], rhs: &[Self]) -> Vec<Self> {
        let (lhs_int, lhs_den) = clear_denominators(lhs);
        let (rhs_int, rhs_den) = clear_denominators(rhs);
        let mut out = vec![BigInt::zero(); lhs.len()];
        let rhs_nz: Vec<(u32, &BigInt)> = nonzero_terms(&rhs_int).collect();
        for (i, a) in nonzero_terms(&lhs_int) {
            for &(j, b) in &rhs_nz {
                let (sign, blade) = blade_mul(Blade::new(i), Blade::new(j), sig);
                let term = a * b;
                let slot = &mut out[blade.mask() as usize];
                if sign < 0 {
                    *slot -= term;
                } else {
                    *slot += term;
                }
            }
        }
        let den = lhs_den * rhs_den;
        if den.is_one() {
            out.into_iter().map(Rational::from_integer).collect()
        } else {
            out.into_iter()
                .map(|num| Rational::new(num, den.clone()))
                .collect()
        }
    }
}

/// Scales `coeffs` by the lcm of their denominators.
fn clear_denominators(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let lcm = coeffs
        .iter()
        .filter(|c| !c.denom().is_one())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = if lcm.is_one() {
        coeffs.iter().map(|c| c.numer().clone()).collect()
    } else {
        coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    };
    (ints, lcm)
}
