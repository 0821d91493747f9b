//! Grade-wise conjugations.
//!
//! Every operation here multiplies the grade-`k` part of a multivector by a
//! sign `±1` that depends only on `k`. The family `△ⱼ` has sign
//! `(-1)^C(k, 2^(j-1))`; by Lucas' theorem that binomial is odd exactly when
//! bit `j-1` of `k` is set, so each sign is a single bit test.
//!
//! | kind        | sign                        | equals |
//! |-------------|-----------------------------|--------|
//! | `Hat`       | `(-1)^k`                    | `△₁`   |
//! | `Tilde`     | `(-1)^(k(k-1)/2)`           | `△₂`   |
//! | `Triangle`  | `(-1)^(k(k-1)(k-2)(k-3)/4!)`| `△₃`   |
//! | `Square`    | `(-1)^(k(k-1)…(k-7)/8!)`    | `△₄`   |
//!
//! Only `Hat` (automorphism) and `Tilde` (anti-automorphism) respect the
//! product; `Triangle` and `Square` do not.

use crate::multivector::Multivector;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjugationKind {
    /// Grade involution.
    Hat,
    /// Reversion.
    Tilde,
    Triangle,
    Square,
    /// `△ⱼ` for `j >= 1`.
    TriangleJ(u32),
}

impl ConjugationKind {
    /// The equivalent `j` in the `△ⱼ` family.
    pub fn family_index(self) -> u32 {
        match self {
            ConjugationKind::Hat => 1,
            ConjugationKind::Tilde => 2,
            ConjugationKind::Triangle => 3,
            ConjugationKind::Square => 4,
            ConjugationKind::TriangleJ(j) => j,
        }
    }

    /// Whether grade `k` changes sign.
    ///
    /// # Panics
    /// If called on `TriangleJ(0)`.
    #[inline]
    pub fn flips(self, grade: usize) -> bool {
        let j = self.family_index();
        assert!(j >= 1, "△ⱼ requires j >= 1");
        let bit = j - 1;
        bit < usize::BITS && (grade >> bit) & 1 == 1
    }

    pub fn sign(self, grade: usize) -> i8 {
        if self.flips(grade) {
            -1
        } else {
            1
        }
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn conjugate(&self, kind: ConjugationKind) -> Multivector<S> {
        let mut out = self.clone();
        out.conjugate_in_place(kind);
        out
    }

    pub fn conjugate_in_place(&mut self, kind: ConjugationKind) {
        // Sign per grade, looked up by popcount.
        let flips: Vec<bool> = (0..=self.sig().dim()).map(|k| kind.flips(k)).collect();
        for (mask, c) in self.coeffs_mut().iter_mut().enumerate() {
            if flips[mask.count_ones() as usize] && !c.is_zero() {
                *c = -std::mem::replace(c, S::zero());
            }
        }
    }

    /// Grade involution `Û`.
    pub fn hat(&self) -> Multivector<S> {
        self.conjugate(ConjugationKind::Hat)
    }

    /// Reversion `Ũ`.
    pub fn tilde(&self) -> Multivector<S> {
        self.conjugate(ConjugationKind::Tilde)
    }

    pub fn triangle(&self) -> Multivector<S> {
        self.conjugate(ConjugationKind::Triangle)
    }

    pub fn square(&self) -> Multivector<S> {
        self.conjugate(ConjugationKind::Square)
    }

    /// `Û~`: grade involution composed with reversion (the two commute).
    pub fn hat_tilde(&self) -> Multivector<S> {
        let mut out = self.hat();
        out.conjugate_in_place(ConjugationKind::Tilde);
        out
    }

    /// `B♮ = (B̂ B̃)^△`.
    pub fn natural(&self) -> Multivector<S> {
        (&self.hat() * &self.tilde()).triangle()
    }

    /// `B♯ = (B̂ B̂~)^△`.
    pub fn sharp(&self) -> Multivector<S> {
        let hat = self.hat();
        (&hat * &hat.tilde()).triangle()
    }
}
