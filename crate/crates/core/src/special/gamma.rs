//! Log-gamma, digamma and polygamma for positive real arguments.

use core::f64::consts::PI;

use crate::error::{domain, Error, Result};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// B_2, B_4, …, B_22.
pub(crate) const BERNOULLI_EVEN: [f64; 11] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
];

const MAX_ORDER: u32 = 12;

fn check_positive(function: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(domain(function, x, "x > 0"))
    }
}

/// `log Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    check_positive("ln_gamma", x)?;
    let mut y = x;
    let mut shift = 0.0;
    while y < 10.0 {
        shift += libm::log(y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
        let n = 2.0 * (j as f64 + 1.0);
        series += b / (n * (n - 1.0)) * pow;
        pow *= inv2;
    }
    Ok((y - 0.5) * libm::log(y) - y + 0.5 * libm::log(2.0 * PI) + series - shift)
}

/// ψ(x) = d/dx log Γ(x), `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    polygamma(0, x)
}

/// ψ^(k)(x) for `0 ≤ k ≤ 12`, `x > 0`.
///
/// Recurses upward until `x ≥ 8 + 2k`, then sums the asymptotic series.
pub fn polygamma(k: u32, x: f64) -> Result<f64> {
    check_positive("polygamma", x)?;
    if k > MAX_ORDER {
        return Err(Error::InvalidArgument(alloc::format!(
            "polygamma order {k} exceeds {MAX_ORDER}"
        )));
    }
    let kf = k as f64;
    let threshold = 8.0 + 2.0 * kf;
    let kfact = factorial_f64(k);
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };

    // ψ^(k)(x) = ψ^(k)(x+1) − (−1)^k k! x^{−k−1}
    let mut y = x;
    let mut acc = 0.0;
    while y < threshold {
        acc -= sign * kfact * libm::pow(y, -(kf + 1.0));
        y += 1.0;
    }

    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let tail = if k == 0 {
        let mut s = libm::log(y) - 0.5 * inv;
        let mut pow = inv2;
        for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
            let term = b / (2.0 * (j as f64 + 1.0)) * pow;
            s -= term;
            if term.abs() < 1e-18 * s.abs() {
                break;
            }
            pow *= inv2;
        }
        s
    } else {
        // (−1)^{k+1} [ (k−1)!/y^k + k!/(2y^{k+1}) + Σ B_{2j}(2j+k−1)!/((2j)! y^{2j+k}) ]
        let yk = libm::pow(y, -kf);
        let mut s = factorial_f64(k - 1) * yk + 0.5 * kfact * yk * inv;
        let mut pow = yk * inv2;
        // ratio (2j+k−1)!/(2j)!, updated incrementally
        let mut ratio = kfact; // j = 1: (k+1)!/2!
        ratio *= (k + 1) as f64 / 2.0;
        for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
            let jj = j as f64 + 1.0;
            let term = b * ratio * pow;
            s += term;
            if term.abs() < 1e-18 * s.abs() {
                break;
            }
            let n = 2.0 * jj;
            // advance (2j+k−1)!/(2j)! to j+1
            ratio *= (n + kf) * (n + kf + 1.0) / ((n + 1.0) * (n + 2.0));
            pow *= inv2;
        }
        -sign * s
    };
    Ok(acc + tail)
}

fn factorial_f64(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZETA3: f64 = 1.202_056_903_159_594_3;

    #[test]
    fn digamma_known_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-14);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-14);
        let half = -EULER_GAMMA - 2.0 * core::f64::consts::LN_2;
        assert!((digamma(0.5).unwrap() - half).abs() < 1e-13);
    }

    #[test]
    fn digamma_matches_harmonic_limit() {
        // ψ(n+1) = H_n − γ
        let h: f64 = (1..=50).map(|k| 1.0 / k as f64).sum();
        assert!((digamma(51.0).unwrap() - (h - EULER_GAMMA)).abs() < 1e-13);
    }

    #[test]
    fn polygamma_known_values() {
        assert!((polygamma(1, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-13);
        assert!((polygamma(2, 1.0).unwrap() + 2.0 * ZETA3).abs() < 1e-12);
        // ψ'''(1) = 6ζ(4) = π⁴/15
        assert!((polygamma(3, 1.0).unwrap() - PI.powi(4) / 15.0).abs() < 1e-11);
    }

    #[test]
    fn polygamma_matches_direct_sum() {
        // ψ^(k)(x) = (−1)^{k+1} k! Σ_n (x+n)^{−k−1}, summed with a tail integral
        for k in 1..=12u32 {
            for &x in &[0.3, 1.7, 6.0] {
                let n = 20_000;
                let kf = k as f64;
                let mut s: f64 = (0..n).map(|i| libm::pow(x + i as f64, -(kf + 1.0))).sum();
                let a = x + n as f64;
                s += libm::pow(a, -kf) / kf + 0.5 * libm::pow(a, -(kf + 1.0));
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                let expected = sign * factorial_f64(k) * s;
                let got = polygamma(k, x).unwrap();
                assert!(
                    ((got - expected) / expected).abs() < 1e-10,
                    "k={k} x={x}: {got} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn recurrence_holds() {
        for &x in &[0.5, 1.0, 2.5, 10.0] {
            let r = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
            assert!(r.abs() < 1e-12);
        }
    }

    #[test]
    fn ln_gamma_values() {
        assert!(ln_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(ln_gamma(2.0).unwrap().abs() < 1e-14);
        assert!((ln_gamma(0.5).unwrap() - 0.5 * libm::log(PI)).abs() < 1e-14);
        assert!((ln_gamma(11.0).unwrap() - libm::log(3_628_800.0)).abs() < 1e-12);
    }

    #[test]
    fn bernoulli_table_is_exact() {
        use num_traits::ToPrimitive;
        let b = crate::exact::bernoulli_numbers(22);
        for (j, v) in BERNOULLI_EVEN.iter().enumerate() {
            assert_eq!(*v, b[2 * j + 2].to_f64().unwrap());
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(digamma(0.0).is_err());
        assert!(polygamma(1, -1.5).is_err());
        assert!(ln_gamma(f64::NAN).is_err());
        assert!(polygamma(13, 1.0).is_err());
    }
}
