use std::f64::consts::PI;

use norlund_core::special::{
    barnes_zeta, digamma, genfun_modified_norlund, hurwitz_zeta, leibniz_rhs, ln_gamma, polygamma,
    Complex, EULER_GAMMA,
};
use proptest::prelude::*;

#[test]
fn digamma_known_values() {
    assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
    // ψ(½) = −γ − 2 log 2
    assert!((digamma(0.5).unwrap() + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-14);
    assert!((polygamma(1, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
    assert!((ln_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-14);
    assert!(digamma(0.0).is_err());
    assert!(digamma(-2.0).is_err());
}

#[test]
fn hurwitz_matches_riemann() {
    let z = hurwitz_zeta(2, Complex::new(1.0, 0.0)).unwrap();
    assert!((z.re - PI * PI / 6.0).abs() < 1e-14 && z.im.abs() < 1e-16);
    let z = hurwitz_zeta(4, Complex::new(1.0, 0.0)).unwrap();
    assert!((z.re - PI.powi(4) / 90.0).abs() < 1e-14);
    assert!(hurwitz_zeta(1, Complex::new(1.0, 0.0)).is_err());
    assert!(hurwitz_zeta(3, Complex::new(-1.0, 0.0)).is_err());
}

#[test]
fn barnes_reduces_to_hurwitz() {
    // ζ_2(s, w) = ζ(s−1, w) + (1 − w) ζ(s, w)
    let w = Complex::new(1.3, 0.7);
    let lhs = barnes_zeta(2, 4, w).unwrap();
    let rhs =
        hurwitz_zeta(3, w).unwrap() + (Complex::new(1.0, 0.0) - w) * hurwitz_zeta(4, w).unwrap();
    assert!((lhs - rhs).norm() < 1e-14);
}

#[test]
fn genfun_is_formal_series_closed_form() {
    let z: f64 = 0.1;
    let w = z + 1.0 / z - 1.0;
    let g = genfun_modified_norlund(1, z).unwrap();
    assert!((g - (-0.5 * z.ln() - 0.5 * digamma(w).unwrap())).abs() < 1e-14);
    assert!(leibniz_rhs(2, 1.0).is_err());
}

proptest! {
    #[test]
    fn digamma_recurrence(x in 0.05f64..40.0) {
        let lhs = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        prop_assert!((lhs - 1.0 / x).abs() < 1e-12 * (1.0 / x).max(1.0));
    }

    #[test]
    fn polygamma_recurrence(k in 1u32..6, x in 0.3f64..20.0) {
        // ψ^{(k)}(x+1) − ψ^{(k)}(x) = (−1)^k k! x^{−k−1}
        let fact: f64 = (1..=k).map(f64::from).product();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let expected = sign * fact / x.powi(k as i32 + 1);
        let got = polygamma(k, x + 1.0).unwrap() - polygamma(k, x).unwrap();
        prop_assert!((got - expected).abs() < 1e-11 * expected.abs().max(1.0));
    }

    #[test]
    fn digamma_duplication(x in 0.1f64..30.0) {
        // ψ(2x) = ½ψ(x) + ½ψ(x+½) + log 2
        let lhs = digamma(2.0 * x).unwrap();
        let rhs = 0.5 * digamma(x).unwrap() + 0.5 * digamma(x + 0.5).unwrap() + 2f64.ln();
        prop_assert!((lhs - rhs).abs() < 1e-13 * lhs.abs().max(1.0));
    }

    #[test]
    fn hurwitz_shift(s in 2u32..8, re in 0.2f64..6.0, im in -8.0f64..8.0) {
        let w = Complex::new(re, im);
        let d = hurwitz_zeta(s, w).unwrap() - hurwitz_zeta(s, w + 1.0).unwrap();
        let expected = w.powi(-(s as i32));
        prop_assert!((d - expected).norm() < 1e-12 * expected.norm().max(1.0));
    }
}
