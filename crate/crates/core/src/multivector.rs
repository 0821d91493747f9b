use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::blade::Blade;
use crate::conjugation::ConjugationKind;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// A dense element of Cl(p,q): one coefficient per blade, indexed by mask.
///
/// Arithmetic operators panic on signature mismatch; use
/// [`Multivector::product`] and friends for a checked variant.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<S> {
    sig: Signature,
    coeffs: Vec<S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![S::zero(); sig.blade_count()],
        }
    }

    /// The identity `e`.
    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        let mut out = Self::zero(sig);
        out.coeffs[0] = value;
        out
    }

    pub fn from_i64(sig: Signature, value: i64) -> Self {
        Self::scalar(sig, S::from_i64(value))
    }

    /// `coeff · blade`.
    pub fn blade(sig: Signature, blade: Blade, coeff: S) -> Result<Self> {
        let blade = Blade::checked(blade.mask(), sig)?;
        let mut out = Self::zero(sig);
        out.coeffs[blade.mask() as usize] = coeff;
        Ok(out)
    }

    /// The generator `e_a` (1-based).
    pub fn generator(sig: Signature, a: usize) -> Result<Self> {
        if a == 0 || a > sig.dim() {
            return Err(Error::BladeOutOfRange {
                mask: 1u32
                    .checked_shl(a.wrapping_sub(1) as u32)
                    .unwrap_or(u32::MAX),
                dim: sig.dim(),
            });
        }
        Self::blade(sig, Blade::from_indices(&[a]), S::one())
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientCount {
                expected: sig.blade_count(),
                got: coeffs.len(),
            });
        }
        Ok(Multivector { sig, coeffs })
    }

    /// Builds from `(mask, coefficient)` pairs; repeated masks accumulate.
    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, S)>,
    {
        let mut out = Self::zero(sig);
        for (mask, c) in terms {
            let blade = Blade::checked(mask, sig)?;
            out.coeffs[blade.mask() as usize] += &c;
        }
        Ok(out)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [S] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> &S {
        &self.coeffs[blade.mask() as usize]
    }

    /// `⟨U⟩₀` as a scalar.
    pub fn scalar_part(&self) -> &S {
        &self.coeffs[0]
    }

    /// Nonzero `(blade, coefficient)` pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (Blade::new(m as u32), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every non-identity coefficient is zero.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in the center: grade 0 for even `n`,
    /// grades 0 and `n` for odd `n`.
    pub fn is_central(&self) -> bool {
        let top = self.sig.blade_count() - 1;
        self.coeffs
            .iter()
            .enumerate()
            .all(|(m, c)| m == 0 || (self.sig.is_odd() && m == top) || c.is_zero())
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> S {
        self.coeffs
            .iter()
            .map(Scalar::abs)
            .fold(S::zero(), |acc, c| if c > acc { c } else { acc })
    }

    /// Largest absolute coefficient outside the identity blade.
    pub fn non_scalar_max_abs(&self) -> S {
        self.coeffs[1..]
            .iter()
            .map(Scalar::abs)
            .fold(S::zero(), |acc, c| if c > acc { c } else { acc })
    }

    /// Checked geometric product.
    pub fn product(&self, rhs: &Self) -> Result<Self> {
        self.sig.ensure_same(rhs.sig)?;
        Ok(Multivector {
            sig: self.sig,
            coeffs: S::product_kernel(self.sig, &self.coeffs, &rhs.coeffs),
        })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.sig.ensure_same(rhs.sig)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.sig.ensure_same(rhs.sig)?;
        Ok(self - rhs)
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = self.clone();
        out.scale_in_place(factor);
        out
    }

    pub fn scale_in_place(&mut self, factor: &S) {
        for c in &mut self.coeffs {
            *c *= factor;
        }
    }

    /// Divides every coefficient by `divisor` (caller guarantees nonzero).
    pub fn div_scalar(&self, divisor: &S) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c /= divisor;
        }
        out
    }

    /// `self + value·e`.
    pub fn add_scalar(&self, value: &S) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += value;
        out
    }

    /// `self - value·e`.
    pub fn sub_scalar(&self, value: &S) -> Self {
        let mut out = self.clone();
        out.coeffs[0] -= value;
        out
    }

    /// `⟨U⟩ₖ`.
    pub fn grade_project(&self, grade: usize) -> Result<Self> {
        if grade > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade,
                dim: self.sig.dim(),
            });
        }
        Ok(self.filter_blades(|b| b.grade() == grade))
    }

    /// `⟨U⟩_cen`: `⟨U⟩₀` for even `n`, `⟨U⟩₀ + ⟨U⟩ₙ` for odd `n`.
    pub fn center_project(&self) -> Self {
        let n = self.sig.dim();
        let odd = self.sig.is_odd();
        self.filter_blades(|b| b.grade() == 0 || (odd && b.grade() == n))
    }

    fn filter_blades(&self, keep: impl Fn(Blade) -> bool) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if keep(Blade::new(m as u32)) {
                    c.clone()
                } else {
                    S::zero()
                }
            })
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    /// The scalar part computed as an average of conjugations:
    /// `⟨U⟩₀ = 2^-m Σ_{T ⊆ {1..m}} U^{△_T}` where `△_T` composes the `△ⱼ`
    /// for `j ∈ T`.
    ///
    /// Equal to [`Multivector::scalar_part`]; kept as an independent route.
    pub fn scalar_via_conjugations(&self) -> S {
        let m = self.sig.conjugation_count() as u32;
        let mut sum = Self::zero(self.sig);
        for subset in 0u32..(1 << m) {
            let mut term = self.clone();
            for j in (1..=m).filter(|j| subset & (1 << (j - 1)) != 0) {
                term.conjugate_in_place(ConjugationKind::TriangleJ(j));
            }
            sum += &term;
        }
        let mut out = sum.coeffs.swap_remove(0);
        out /= &S::from_i64(1 << m);
        out
    }
}

impl<S: Scalar> AddAssign<&Multivector<S>> for Multivector<S> {
    fn add_assign(&mut self, rhs: &Multivector<S>) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in addition");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl<S: Scalar> SubAssign<&Multivector<S>> for Multivector<S> {
    fn sub_assign(&mut self, rhs: &Multivector<S>) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in subtraction");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;

    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;

    fn add(mut self, rhs: Multivector<S>) -> Multivector<S> {
        self += &rhs;
        self
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;

    fn sub(mut self, rhs: Multivector<S>) -> Multivector<S> {
        self -= &rhs;
        self
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        -&self
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;

    /// Geometric product. Panics on signature mismatch.
    fn mul(self, rhs: &Multivector<S>) -> Multivector<S> {
        self.product(rhs)
            .expect("signature mismatch in geometric product")
    }
}

impl<S: Scalar> Mul for Multivector<S> {
    type Output = Multivector<S>;

    fn mul(self, rhs: Multivector<S>) -> Multivector<S> {
        &self * &rhs
    }
}
