//! Hurwitz zeta for complex shift and the equal-weight Barnes zeta.

use num_traits::ToPrimitive;

use super::gamma::BERNOULLI_EVEN;
use crate::error::{domain, Result};
use crate::exact::choi_p;

pub type Complex = num_complex::Complex<f64>;

/// ζ(s, w) = Σ_{n≥0} (n+w)^{−s} for integer `s ≥ 2` and `Re w > 0`.
///
/// Direct summation until `|w + M| ≥ max(10, 2s)`, then Euler–Maclaurin with
/// corrections through B₁₂.
pub fn hurwitz_zeta(s: u32, w: Complex) -> Result<Complex> {
    if !(w.re > 0.0) || !w.im.is_finite() {
        return Err(domain("hurwitz_zeta", w.re, "Re(w) > 0"));
    }
    if s < 2 {
        return Err(domain("hurwitz_zeta", s as f64, "s >= 2"));
    }
    let si = s as i32;
    let radius = f64::max(10.0, 2.0 * s as f64);
    let mut sum = Complex::new(0.0, 0.0);
    let mut a = w;
    while a.norm() < radius {
        sum += a.powi(-si);
        a += 1.0;
    }
    // ∫_a^∞ x^{−s} dx + a^{−s}/2 + Σ_j B_{2j}/(2j)! (s)_{2j−1} a^{−s−2j+1}
    let inv = a.inv();
    let inv2 = inv * inv;
    let a_pow = a.powi(-si);
    sum += a_pow * a / (s as f64 - 1.0) + a_pow * 0.5;
    let mut rising = s as f64; // (s)_1
    let mut fact = 2.0; // (2j)! for j = 1
    let mut pow = a_pow * inv;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(6) {
        sum += pow * (b / fact * rising);
        let n = 2.0 * (j as f64 + 1.0);
        let sf = s as f64;
        rising *= (sf + n - 1.0) * (sf + n);
        fact *= (n + 1.0) * (n + 2.0);
        pow *= inv2;
    }
    Ok(sum)
}

/// ζ_ℓ(s, w | 1,…,1) = Σ_{m∈ℕ^ℓ} (w + m₁ + ⋯ + m_ℓ)^{−s}, for `s > ℓ`.
///
/// Reduced to Hurwitz zetas: Σ_{j<ℓ} p_{ℓ,j}(w) ζ(s−j, w).
pub fn barnes_zeta(ell: u32, s: u32, w: Complex) -> Result<Complex> {
    if ell == 0 {
        return Err(domain("barnes_zeta", 0.0, "ell >= 1"));
    }
    if s <= ell {
        return Err(domain("barnes_zeta", s as f64, "s > ell"));
    }
    let mut total = Complex::new(0.0, 0.0);
    for j in 0..ell {
        let p = choi_p(ell, j);
        let mut pw = Complex::new(0.0, 0.0);
        for c in p.coeffs().iter().rev() {
            pw = pw * w + c.to_f64().unwrap_or(f64::NAN);
        }
        total += pw * hurwitz_zeta(s - j, w)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn reduces_to_riemann_zeta() {
        let z = hurwitz_zeta(2, c(1.0, 0.0)).unwrap();
        assert!((z.re - PI * PI / 6.0).abs() < 1e-14 && z.im == 0.0);
        let z = hurwitz_zeta(2, c(2.0, 0.0)).unwrap();
        assert!((z.re - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn complex_shift_against_brute_force() {
        let w = c(1.0, 1.0);
        let n = 1_000_000;
        let mut s = Complex::new(0.0, 0.0);
        for k in (0..n).rev() {
            s += (w + k as f64).powi(-3);
        }
        // tail ∫ ≈ a^{-2}/2 with a = w + n
        let a = w + n as f64;
        s += a.powi(-2) * 0.5 + a.powi(-3) * 0.5;
        let z = hurwitz_zeta(3, w).unwrap();
        assert!((z - s).norm() < 1e-9);
    }

    #[test]
    fn shift_identity_and_conjugation() {
        for s in 2..=4u32 {
            for w in [c(1.0, 0.0), c(2.0, 1.0), c(0.5, 3.0)] {
                let lhs = hurwitz_zeta(s, w + 1.0).unwrap() - hurwitz_zeta(s, w).unwrap()
                    + w.powi(-(s as i32));
                assert!(lhs.norm() < 1e-10);
                let conj = hurwitz_zeta(s, w.conj()).unwrap() - hurwitz_zeta(s, w).unwrap().conj();
                assert!(conj.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn barnes_one_is_hurwitz() {
        let w = c(0.7, 0.4);
        let a = barnes_zeta(1, 4, w).unwrap();
        let b = hurwitz_zeta(4, w).unwrap();
        assert!((a - b).norm() < 1e-15);
    }

    #[test]
    fn barnes_two_three_one_is_zeta_two() {
        let z = barnes_zeta(2, 3, c(1.0, 0.0)).unwrap();
        assert!((z.re - PI * PI / 6.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(hurwitz_zeta(2, c(0.0, 1.0)).is_err());
        assert!(hurwitz_zeta(1, c(1.0, 0.0)).is_err());
        assert!(barnes_zeta(2, 2, c(1.0, 0.0)).is_err());
    }
}
