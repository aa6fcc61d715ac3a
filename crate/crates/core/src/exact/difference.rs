//! Forward differences `Δf(x) = f(x+1) − f(x)` and the uniform average
//! `f(x+U) = ∫₀¹ f(x+u) du`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::combinatorics::binomial;
use super::poly::{Coefficient, Poly};
use super::{int, Rational};

/// `Δ^order p` computed exactly as `Σ_j (−1)^{order−j} C(order,j) p(x+j)`.
pub fn forward_difference<C: Coefficient>(p: &Poly<C>, order: u32) -> Poly<C> {
    (0..=order).fold(Poly::zero(p.var()), |acc, j| {
        let w = signed_binomial(order, j);
        let shifted = p.translate(&C::from_rational(int(i64::from(j))));
        &acc + &shifted.scale(&C::from_rational(Rational::from_integer(w)))
    })
}

/// Numeric `Δ^order f(x)` by the same binomial sum (order+1 evaluations).
pub fn forward_difference_fn(f: impl Fn(f64) -> f64, order: u32, x: f64) -> f64 {
    (0..=order)
        .map(|j| {
            let w = signed_binomial(order, j).to_f64().unwrap_or(f64::NAN);
            w * f(x + f64::from(j))
        })
        .sum()
}

fn signed_binomial(order: u32, j: u32) -> BigInt {
    let c = binomial(order, j);
    if (order - j).is_multiple_of(2) {
        c
    } else {
        -c
    }
}

/// `∫₀¹ p(x+u) du`, i.e. `ΔP(x)` for an antiderivative `P` of `p`.
pub fn uniform_average(p: &Poly<Rational>) -> Poly<Rational> {
    forward_difference(&p.antiderivative(), 1)
}
