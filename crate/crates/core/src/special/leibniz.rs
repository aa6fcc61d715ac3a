//! Derivatives of `binom(x−1, ℓ−1) ψ(x−c)` expanded by the Leibniz rule.

use num_traits::ToPrimitive;

use super::gamma::polygamma;
use crate::error::{domain, Result};
use crate::exact::{binom_poly, binomial, harmonic};

/// d^{ℓ−1}/dx^{ℓ−1} [ binom(x−1, ℓ−1) ψ(x − shift) ].
///
/// The polynomial factor is differentiated exactly; only ψ and its
/// derivatives are floating point.
pub fn leibniz_derivative(ell: u32, x: f64, shift: f64) -> Result<f64> {
    if ell == 0 {
        return Err(domain("leibniz_derivative", 0.0, "ell >= 1"));
    }
    let arg = x - shift;
    if !(arg > 0.0) {
        return Err(domain("leibniz_derivative", x, "x - shift > 0"));
    }
    let order = ell - 1;
    let mut p = binom_poly(-1, order);
    let mut total = 0.0;
    for k in 0..=order {
        if p.is_zero() {
            break;
        }
        let weight = binomial(order, k).to_f64().unwrap_or(f64::NAN);
        total += weight * p.eval_f64(x) * polygamma(order - k, arg)?;
        p = p.derivative();
    }
    Ok(total)
}

/// −H_{ℓ−1} + d^{ℓ−1}/dx^{ℓ−1} [ binom(x−1, ℓ−1) ψ(x − ⌊ℓ/2⌋) ].
pub fn leibniz_rhs(ell: u32, x: f64) -> Result<f64> {
    if ell == 0 {
        return Err(domain("leibniz_rhs", 0.0, "ell >= 1"));
    }
    let h = harmonic(ell - 1).to_f64().unwrap_or(f64::NAN);
    Ok(leibniz_derivative(ell, x, (ell / 2) as f64)? - h)
}

/// Closed form of the generating function Σ_n B_n^{(ℓ)*} zⁿ:
/// −½ log z − ½ leibniz_rhs(ℓ, z + 1/z + ℓ − 2), for `0 < z < 1`.
pub fn genfun_modified_norlund(ell: u32, z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(domain("genfun_modified_norlund", z, "0 < z < 1"));
    }
    let x = z + 1.0 / z + ell as f64 - 2.0;
    Ok(-0.5 * libm::log(z) - 0.5 * leibniz_rhs(ell, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::digamma;

    #[test]
    fn low_orders_match_hand_expansion() {
        for &x in &[2.5, 3.0, 7.25] {
            assert!((leibniz_rhs(1, x).unwrap() - digamma(x).unwrap()).abs() < 1e-15);
            let two = digamma(x - 1.0).unwrap() + (x - 1.0) * polygamma(1, x - 1.0).unwrap() - 1.0;
            assert!((leibniz_rhs(2, x).unwrap() - two).abs() < 1e-14);
        }
    }

    #[test]
    fn genfun_ell_one() {
        let z: f64 = 0.1;
        let expected = -0.5 * libm::log(z) - 0.5 * digamma(9.1).unwrap();
        assert!((genfun_modified_norlund(1, z).unwrap() - expected).abs() < 1e-15);
        assert!(genfun_modified_norlund(1, 1.0).is_err());
    }

    #[test]
    fn domain_is_enforced() {
        assert!(leibniz_rhs(3, 1.0).is_err());
        assert!(leibniz_rhs(3, 1.5).is_ok());
    }
}
