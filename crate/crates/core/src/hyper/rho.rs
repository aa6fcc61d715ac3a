//! Closed forms of the densities ρ_ℓ.

use super::expr::{HyperExpr, SPoly};
use crate::error::{domain, Result};
use crate::exact::{airault_q, factorial, ratio, PiScalar, Rational};

/// Largest ℓ built by [`rho_closed_form`].
pub const DEFAULT_ELL_MAX: u32 = 8;

fn rho1() -> HyperExpr {
    // (π/2) sech²(πx) = (π/2)(1 − t²)
    (&HyperExpr::t_pow(0) - &HyperExpr::t_pow(2)).scale(&PiScalar::term(ratio(1, 2), 1))
}

fn rho2() -> HyperExpr {
    // π (s coth s − 1) csch² s
    let a = &(&HyperExpr::s() * &HyperExpr::t_pow(-1)) - &HyperExpr::t_pow(0);
    let b = &HyperExpr::t_pow(-2) - &HyperExpr::t_pow(0);
    (&a * &b).scale(&PiScalar::pi_pow(1))
}

/// ρ_ℓ from the Airault derivative formulas (ℓ ≥ 1):
/// ρ_{2m}   = π^{1−2m}/(2(2m−1)!) · d^{2m}/dx^{2m}   [Q_{2m−1}(s) coth s],
/// ρ_{2m+1} = π^{−2m}/(2(2m)!)    · d^{2m+1}/dx^{2m+1} [Q_{2m}(s) tanh s].
pub fn airault_form(ell: u32) -> HyperExpr {
    let n = ell - 1;
    let q: SPoly = airault_q(n).with_var("s");
    let (seed_power, pi_power) = if ell.is_multiple_of(2) {
        (-1, 1 - ell as i32)
    } else {
        (1, 1 - ell as i32)
    };
    let seed = HyperExpr::term(seed_power, q);
    let prefactor = PiScalar::term(Rational::new(1.into(), factorial(n) * 2u32), pi_power);
    seed.differentiate(ell).scale(&prefactor)
}

/// Exact closed form of ρ_ℓ for `1 ≤ ℓ ≤ DEFAULT_ELL_MAX`.
pub fn rho_closed_form(ell: u32) -> Result<HyperExpr> {
    rho_closed_form_bounded(ell, DEFAULT_ELL_MAX)
}

/// As [`rho_closed_form`] with an explicit upper bound on ℓ.
pub fn rho_closed_form_bounded(ell: u32, ell_max: u32) -> Result<HyperExpr> {
    if ell < 1 {
        return Err(domain("rho_closed_form", ell as f64, "ell >= 1"));
    }
    if ell > ell_max {
        return Err(domain("rho_closed_form", ell as f64, "ell <= ell_max"));
    }
    Ok(match ell {
        1 => rho1(),
        2 => rho2(),
        _ => airault_form(ell),
    })
}

/// ρ_ℓ (ℓ ≥ 3) by stepping the second-order recurrence up from ρ₁ or ρ₂:
/// l(l+1) ρ_{l+2} = ((4x² + l²)/4) ρ_l'' + 2x(l+2) ρ_l' + (l+1)(l+2) ρ_l.
pub fn rho_from_recurrence(ell: u32) -> Result<HyperExpr> {
    if ell < 3 {
        return Err(domain("rho_from_recurrence", ell as f64, "ell >= 3"));
    }
    let mut rho = if ell % 2 == 1 { rho1() } else { rho2() };
    let mut l = if ell % 2 == 1 { 1u32 } else { 2 };
    let x = HyperExpr::x();
    while l + 2 <= ell {
        let lf = l as i64;
        let d1 = rho.derivative();
        let d2 = d1.derivative();
        let c2 = &(&x * &x) + &HyperExpr::constant(PiScalar::rational(ratio(lf * lf, 4)));
        let c1 = x.scale(&PiScalar::from_ratio(2 * (lf + 2), 1));
        let c0 = PiScalar::from_ratio((lf + 1) * (lf + 2), 1);
        let sum = &(&(&c2 * &d2) + &(&c1 * &d1)) + &rho.scale(&c0);
        rho = sum.scale(&PiScalar::from_ratio(1, lf * (lf + 1)));
        l += 2;
    }
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn general_formula_reproduces_low_cases() {
        assert_eq!(airault_form(1), rho1());
        assert_eq!(airault_form(2), rho2());
    }

    #[test]
    fn recurrence_matches_closed_form_exactly() {
        for ell in 3..=6 {
            assert_eq!(
                rho_from_recurrence(ell).unwrap(),
                rho_closed_form(ell).unwrap(),
                "ell={ell}"
            );
        }
    }

    #[test]
    fn densities_are_even() {
        for ell in 1..=6 {
            assert!(rho_closed_form(ell).unwrap().is_structurally_even());
        }
    }

    #[test]
    fn rho1_values() {
        let r = rho_closed_form(1).unwrap();
        let x: f64 = 0.5;
        let c = libm::cosh(PI * x);
        assert!((r.eval_direct(x) - PI / 2.0 / (c * c)).abs() < 1e-15);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(rho_closed_form(0).is_err());
        assert!(rho_closed_form(9).is_err());
        assert!(rho_closed_form_bounded(9, 9).is_ok());
        assert!(rho_from_recurrence(2).is_err());
    }
}
