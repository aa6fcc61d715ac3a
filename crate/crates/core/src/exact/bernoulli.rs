//! Bernoulli numbers and polynomials, Nörlund polynomials and their
//! Zagier-style modification.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::combinatorics::{binomial, factorial};
use super::poly::Poly;
use super::{int, Rational};

/// `[B_0, …, B_{n_max}]` from `Σ_{k=0}^{n} C(n+1,k) B_k = 0`, with `B_1 = −1/2`.
pub fn bernoulli_numbers(n_max: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n_max as usize + 1);
    b.push(Rational::one());
    for n in 1..=n_max {
        let sum = (0..n).fold(Rational::zero(), |acc, k| {
            acc + Rational::from_integer(binomial(n + 1, k)) * &b[k as usize]
        });
        b.push(-sum / Rational::from_integer((n + 1).into()));
    }
    b
}

/// `B_n(x) = Σ_k C(n,k) B_k x^{n−k}`.
pub fn bernoulli_poly(n: u32) -> Poly<Rational> {
    let b = bernoulli_numbers(n);
    let coeffs = (0..=n)
        .map(|deg| Rational::from_integer(binomial(n, deg)) * &b[(n - deg) as usize])
        .collect();
    Poly::new(coeffs, "x")
}

/// Nörlund polynomials `B_0^{(α)}, …, B_{n_max}^{(α)}` as polynomials in α.
///
/// With `G(z) = z/(e^z − 1)` and `L = log G = Σ c_k z^k`, the series
/// `F = G^α = exp(αL)` satisfies `F' = αL'F`, i.e.
/// `n f_n = α Σ_{k=1}^{n} k c_k f_{n−k}`; then `B_n^{(α)} = n! f_n`.
/// Here `c_1 = −1/2` and `c_k = −B_k/(k·k!)` for `k ≥ 2`.
pub fn norlund_table(n_max: u32) -> Vec<Poly<Rational>> {
    let b = bernoulli_numbers(n_max);
    let log_coeffs: Vec<Rational> = (0..=n_max)
        .map(|k| match k {
            0 => Rational::zero(),
            1 => Rational::new((-1).into(), 2.into()),
            _ => -&b[k as usize] / Rational::from_integer(factorial(k) * k),
        })
        .collect();
    let alpha = Poly::identity("alpha");
    let mut f: Vec<Poly<Rational>> = vec![Poly::one("alpha")];
    for n in 1..=n_max as usize {
        let mut acc = Poly::zero("alpha");
        for k in 1..=n {
            let w = &log_coeffs[k] * int(k as i64);
            if !w.is_zero() {
                acc = &acc + &f[n - k].scale(&w);
            }
        }
        f.push((&alpha * &acc).scale(&Rational::new(1.into(), (n as u64).into())));
    }
    f.iter()
        .enumerate()
        .map(|(n, p)| p.scale(&Rational::from_integer(factorial(n as u32))))
        .collect()
}

/// `B_n^{(α)}` as an exact polynomial in α of degree `n`.
pub fn norlund_poly(n: u32) -> Poly<Rational> {
    norlund_table(n).pop().expect("table has n+1 entries")
}

/// `B_n^{(α)*} = Σ_{r=0}^{n} C(n+r, 2r) B_r^{(α)} / (n+r)` as a polynomial in α.
///
/// # Panics
/// If `n == 0`; the modification is only defined for `n ≥ 1`.
pub fn modified_norlund_poly(n: u32) -> Poly<Rational> {
    assert!(n >= 1, "modified Nörlund polynomials start at n = 1");
    let table = norlund_table(n);
    (0..=n).fold(Poly::zero("alpha"), |acc, r| {
        let w = Rational::new(binomial(n + r, 2 * r), (n + r).into());
        &acc + &table[r as usize].scale(&w)
    })
}

/// `B_n^{(α)*}` at a rational α. `α = 1` gives Zagier's modified Bernoulli numbers.
pub fn modified_norlund(n: u32, alpha: &Rational) -> Rational {
    modified_norlund_poly(n).eval(alpha)
}
