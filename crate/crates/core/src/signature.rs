use crate::error::{Error, Result};

/// The signature `(p, q)` of Cl(p,q): `p` generators square to `+1`, the
/// remaining `q` to `-1`. Generators `e1..ep` are the positive ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    /// Largest supported `n = p + q`. A dense element then has 65536 coefficients.
    pub const MAX_DIM: usize = 16;

    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 || n > Self::MAX_DIM {
            return Err(Error::SignatureOutOfRange {
                p,
                q,
                max: Self::MAX_DIM,
            });
        }
        Ok(Signature {
            p: p as u8,
            q: q as u8,
        })
    }

    pub fn p(self) -> usize {
        self.p as usize
    }

    pub fn q(self) -> usize {
        self.q as usize
    }

    /// `n = p + q`.
    pub fn dim(self) -> usize {
        self.p() + self.q()
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Size `N = 2^⌊(n+1)/2⌋` of the matrix representation; also the degree
    /// of the characteristic polynomial.
    pub fn matrix_size(self) -> usize {
        1 << self.dim().div_ceil(2)
    }

    /// `m = ⌊log2 n⌋ + 1`: how many `△ⱼ` conjugations are needed to isolate
    /// the scalar part.
    pub fn conjugation_count(self) -> usize {
        (usize::BITS - self.dim().leading_zeros()) as usize
    }

    pub fn is_odd(self) -> bool {
        self.dim() % 2 == 1
    }

    /// Mask of the generators squaring to `-1`.
    pub fn negative_mask(self) -> u32 {
        let all = (1u32 << self.dim()) - 1;
        let positive = (1u32 << self.p()) - 1;
        all & !positive
    }

    /// `η_aa` for the 1-based generator index `a`.
    pub fn metric(self, a: usize) -> i8 {
        debug_assert!((1..=self.dim()).contains(&a));
        if a <= self.p() {
            1
        } else {
            -1
        }
    }

    pub(crate) fn ensure_same(self, other: Signature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: (self.p(), self.q()),
                right: (other.p(), other.q()),
            })
        }
    }

    /// Every signature with `p + q = n`.
    pub fn all_with_dim(n: usize) -> impl Iterator<Item = Signature> {
        (0..=n).filter_map(move |p| Signature::new(p, n - p).ok())
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}
