//! Truncated power series over ℚ.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::bernoulli::bernoulli_numbers;
use super::combinatorics::factorial;
use super::Rational;

/// `a · b` keeping terms below `len`.
pub fn mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Multiplicative inverse; requires a nonzero constant term.
pub fn inverse(a: &[Rational], len: usize) -> Vec<Rational> {
    assert!(!a[0].is_zero(), "series inverse needs a unit constant term");
    let inv0 = a[0].recip();
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    out.push(inv0.clone());
    for n in 1..len {
        let mut s = Rational::zero();
        for k in 1..=n.min(a.len() - 1) {
            s += &a[k] * &out[n - k];
        }
        out.push(-s * &inv0);
    }
    out
}

/// `a^k` for any integer `k` (negative powers go through [`inverse`]).
pub fn pow(a: &[Rational], k: i32, len: usize) -> Vec<Rational> {
    let base = if k < 0 {
        inverse(a, len)
    } else {
        a[..a.len().min(len)].to_vec()
    };
    let mut out = vec![Rational::zero(); len];
    out[0] = Rational::one();
    for _ in 0..k.unsigned_abs() {
        out = mul(&out, &base, len);
    }
    out
}

/// Coefficients of `tanh(s)/s` in powers of `s`, `len` terms (odd ones zero).
///
/// Uses `tanh s = Σ_{n≥1} 2^{2n}(2^{2n}−1) B_{2n} s^{2n−1} / (2n)!`.
pub fn tanh_over_s(len: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(len as u32 + 2);
    let mut out = vec![Rational::zero(); len];
    for (m, slot) in out.iter_mut().enumerate().step_by(2) {
        let n = (m / 2 + 1) as u32;
        let p = num_bigint::BigInt::from(1) << (2 * n);
        let num = &p * (&p - 1u32);
        *slot = Rational::from_integer(num) * &b[(2 * n) as usize]
            / Rational::from_integer(factorial(2 * n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use num_traits::ToPrimitive;

    #[test]
    fn tanh_series_head() {
        let t = tanh_over_s(6);
        assert_eq!(t[0], int(1));
        assert_eq!(t[2], ratio(-1, 3));
        assert_eq!(t[4], ratio(2, 15));
        assert_eq!(t[1], int(0));
    }

    #[test]
    fn tanh_series_converges_to_libm() {
        let t = tanh_over_s(60);
        let s = 0.6f64;
        let approx: f64 = t
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().unwrap() * s.powi(k as i32))
            .sum();
        assert!((approx - libm::tanh(s) / s).abs() < 1e-15);
    }

    #[test]
    fn inverse_and_pow_agree() {
        let a = vec![int(1), ratio(1, 2), ratio(-1, 3)];
        let inv = inverse(&a, 8);
        let prod = mul(&a, &inv, 8);
        assert_eq!(prod[0], int(1));
        assert!(prod[1..].iter().all(|c| c.is_zero()));
        assert_eq!(pow(&a, -2, 8), mul(&inv, &inv, 8));
    }
}
