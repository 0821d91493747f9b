//! Computations in the real Clifford (geometric) algebra Cl(p,q).
//!
//! Elements are stored densely: a [`Multivector`] holds one coefficient per
//! basis blade, indexed by the blade's generator bitmask. Coefficients live in
//! a [`Scalar`] ring, either exact big rationals ([`Rational`]) or `f64`.
//!
//! On top of the product kernel the crate provides
//!
//! - the grade-wise conjugations (grade involution, reversion and the
//!   higher `△ⱼ` family) in [`conjugation`],
//! - characteristic polynomial coefficients, determinant, adjugate and inverse
//!   of a multivector in [`charpoly`],
//! - basis-free solvers for the Sylvester equation `AX - XB = C` in
//!   [`sylvester`], valid for every dimension `n = p + q` up to
//!   [`Signature::MAX_DIM`].
//!
//! ```
//! use gasylv_core::{Multivector, Rational, Signature, sylvester};
//!
//! let sig = Signature::new(1, 3).unwrap();
//! let a = Multivector::<Rational>::from_i64(sig, 2);
//! let b = Multivector::one(sig);
//! let c = Multivector::from_i64(sig, 5);
//! let problem = sylvester::SylvesterProblem::new(a, b, c).unwrap();
//! let solution = sylvester::solve(&problem).unwrap();
//! assert_eq!(solution.x, Multivector::from_i64(sig, 5));
//! ```

pub mod blade;
pub mod charpoly;
pub mod conjugation;
mod error;
pub mod multivector;
pub mod scalar;
pub mod signature;
pub mod sylvester;

pub use blade::{blade_mul, Blade};
pub use conjugation::ConjugationKind;
pub use error::{Error, Result};
pub use multivector::Multivector;
pub use scalar::{Rational, Ring, Scalar, Tolerance};
pub use signature::Signature;
