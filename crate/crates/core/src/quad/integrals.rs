//! The specific integrals over ρ_ℓ used by the identity checks.

use core::f64::consts::PI;

use super::{integrate_semi_infinite, QuadConfig, QuadResult, TailMode};
use crate::error::{domain, Result};
use crate::hyper::{rho_closed_form, CompiledHyper};

/// `(y / sinh y)^ℓ`, stable at 0 and for large `y`.
pub fn sech_kernel_ratio(y: f64, ell: u32) -> f64 {
    let y = y.abs();
    let r = if y < 1e-4 {
        1.0 - y * y / 6.0
    } else if y < 20.0 {
        y / libm::sinh(y)
    } else {
        2.0 * y * libm::exp(-y) / (1.0 - libm::exp(-2.0 * y))
    };
    libm::pow(r, ell as f64)
}

/// ρ_ℓ(x) = (2/π) ∫_0^∞ (y/sinh y)^ℓ cos(2xy) dy.
pub fn fourier_density(ell: u32, x: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    if ell == 0 {
        return Err(domain("fourier_density", 0.0, "ell >= 1"));
    }
    // (y/sinh y)^ℓ < 1e−22 beyond this point
    let cutoff = 60.0 / ell as f64 + 10.0;
    let cfg = cfg
        .with_tail(TailMode::Oscillatory(2.0 * x))
        .with_cutoff(f64::min(cfg.tail_cutoff, cutoff));
    let r = integrate_semi_infinite(|y| sech_kernel_ratio(y, ell) * libm::cos(2.0 * x * y), &cfg)?;
    Ok(scale(r, 2.0 / PI))
}

fn scale(r: QuadResult, c: f64) -> QuadResult {
    QuadResult {
        value: r.value * c,
        error_estimate: r.error_estimate * c.abs(),
        ..r
    }
}

fn check_b(b: f64) -> Result<()> {
    if b > 0.0 && b.is_finite() {
        Ok(())
    } else {
        Err(domain("log_moment", b, "b > 0"))
    }
}

/// z_ℓ(b) = ∫_0^∞ log(1 + b u²) ρ_ℓ(u) du.
pub fn log_moment(ell: u32, b: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    let rho = CompiledHyper::new(&rho_closed_form(ell)?);
    log_moment_with(&rho, b, cfg)
}

/// As [`log_moment`] with a precompiled density.
pub fn log_moment_with(rho: &CompiledHyper, b: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    check_b(b)?;
    let cfg = cfg.with_tail(TailMode::Exponential);
    integrate_semi_infinite(|u| libm::log1p(b * u * u) * rho.eval(u), &cfg)
}

/// `[∫u²ρ/(1+bu²), ∫u²ρ/(1+bu²)², ∫ρ/(1+bu²)²]`, all over `(0, ∞)`.
pub fn moment_fraction_integrals(ell: u32, b: f64, cfg: &QuadConfig) -> Result<[QuadResult; 3]> {
    let rho = CompiledHyper::new(&rho_closed_form(ell)?);
    moment_fraction_integrals_with(&rho, b, cfg)
}

/// As [`moment_fraction_integrals`] with a precompiled density.
pub fn moment_fraction_integrals_with(
    rho: &CompiledHyper,
    b: f64,
    cfg: &QuadConfig,
) -> Result<[QuadResult; 3]> {
    check_b(b)?;
    let cfg = cfg.with_tail(TailMode::Exponential);
    let d = |u: f64| 1.0 + b * u * u;
    let first = integrate_semi_infinite(|u| u * u * rho.eval(u) / d(u), &cfg)?;
    let second = integrate_semi_infinite(|u| u * u * rho.eval(u) / (d(u) * d(u)), &cfg)?;
    let third = integrate_semi_infinite(|u| rho.eval(u) / (d(u) * d(u)), &cfg)?;
    Ok([first, second, third])
}
