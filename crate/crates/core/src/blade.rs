//! Basis blades as generator bitmasks.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::signature::Signature;

/// A basis blade `e_{a1 a2 ... ak}` with `a1 < a2 < ... < ak`.
///
/// Bit `a - 1` of the mask is set when generator `e_a` is a factor. Mask 0 is
/// the identity `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn new(mask: u32) -> Blade {
        Blade(mask)
    }

    /// Blade from 1-based generator indices. Order and repeats are not
    /// checked here; callers that care validate first.
    pub fn from_indices(indices: &[usize]) -> Blade {
        Blade(indices.iter().fold(0, |m, &a| m | (1 << (a - 1))))
    }

    pub fn checked(mask: u32, sig: Signature) -> Result<Blade> {
        if (mask as u64) < (1u64 << sig.dim()) {
            Ok(Blade(mask))
        } else {
            Err(Error::BladeOutOfRange {
                mask,
                dim: sig.dim(),
            })
        }
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Ascending 1-based generator indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
    }

    /// Display order: by grade, then lexicographically by index list
    /// (`e, e1, e2, …, e12, e13, e14, e23, …`).
    pub fn display_cmp(self, other: Blade) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }

    /// All `2^n` blades of `sig` in display order.
    pub fn all_in_display_order(sig: Signature) -> Vec<Blade> {
        let mut blades: Vec<Blade> = (0..sig.blade_count() as u32).map(Blade).collect();
        blades.sort_by(|a, b| a.display_cmp(*b));
        blades
    }
}

/// Geometric product of two basis blades: `e_a e_b = sign · e_out`.
///
/// `out` is `a XOR b`. The sign counts the transpositions needed to sort the
/// concatenated index list, plus one factor `η_ii` for every shared generator.
#[inline]
pub fn blade_mul(a: Blade, b: Blade, sig: Signature) -> (i8, Blade) {
    let mut swaps = 0u32;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    swaps += (a.0 & b.0 & sig.negative_mask()).count_ones();
    let sign = if swaps & 1 == 0 { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}
