use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::{int, Rational};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u32) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| {
        acc + Rational::new(1.into(), k.into())
    })
}

/// Signed Stirling number of the first kind, defined by
/// `x(x−1)⋯(x−n+1) = Σ_k s(n,k) x^k`. Zero when `k > n`.
pub fn stirling_first(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(stirling_row(n)[k as usize].clone())
}

fn stirling_row(n: u32) -> Vec<BigInt> {
    // Coefficients of the falling factorial, built one linear factor at a time.
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * m;
        }
        row = next;
    }
    row
}

/// `binom(x+p, ℓ) = (x+p)(x+p−1)⋯(x+p−ℓ+1)/ℓ!` as a polynomial in `x`.
pub fn binom_poly(p: i64, ell: u32) -> Poly<Rational> {
    let mut acc = Poly::one("x");
    for i in 0..ell as i64 {
        acc = &acc * &Poly::new(vec![int(p - i), int(1)], "x");
    }
    acc.scale(&Rational::new(1.into(), factorial(ell)))
}
