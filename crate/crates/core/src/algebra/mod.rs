//! Scalars, formal linear combinations, tensors and the generic machinery
//! (pairings, convolution, bialgebra axioms, exact rank) shared by every
//! algebra in the crate.

mod convolution;
mod linalg;
mod lincomb;
mod structure;

pub use convolution::{convolve, convolve_at, ConvolutionPowers};
pub use linalg::rank;
pub use lincomb::{kronecker, pair_eval, LinComb, Tensor, Tensor3};
pub use structure::{Bialgebra, HopfAlgebra};

use num_bigint::BigInt;
use num_traits::One;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; displays as `p/q`, or `p` when `q = 1`.
pub type Rational = num_rational::BigRational;

/// `n / d` as a rational. Panics when `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * qi(k as i64))
}
