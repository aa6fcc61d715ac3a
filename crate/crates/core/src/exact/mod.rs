//! Exact rational layer.
//!
//! Everything here is computed in ℚ (or ℚ[π, π⁻¹]) with no rounding.

mod bernoulli;
mod combinatorics;
mod difference;
mod families;
mod pi;
mod poly;
pub mod series;

pub use bernoulli::{
    bernoulli_numbers, bernoulli_poly, modified_norlund, modified_norlund_poly, norlund_poly,
    norlund_table,
};
pub use combinatorics::{binom_poly, binomial, factorial, harmonic, stirling_first};
pub use difference::{forward_difference, forward_difference_fn, uniform_average};
pub use families::{airault_q, chebyshev, choi_p, p_polys, ChebyshevKind};
pub use pi::PiScalar;
pub use poly::{horner, Coefficient, Poly};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;

/// `n / d` as a [`Rational`].
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
