//! Agreement between the routes to ρ_ℓ and basic facts about the density.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::report::VerificationReport;
use super::VerifyContext;
use crate::density::DensityMethod;
use crate::error::{domain, Result};
use crate::quad::{integrate_semi_infinite, sech_kernel_ratio, TailMode};
use crate::special::{barnes_zeta, Complex};

fn run(
    report: VerificationReport,
    body: impl FnOnce(&mut VerificationReport) -> Result<()>,
) -> VerificationReport {
    let mut r = report.clone();
    match body(&mut r) {
        Ok(()) => r.finish(),
        Err(e) => report.failed(&e),
    }
}

fn ells_param(ells: &[u32]) -> Vec<f64> {
    ells.iter().map(|l| f64::from(*l)).collect()
}

/// Every available route against the closed form, for each ℓ and x.
/// Also requires the conjugate Barnes pair to have cancelling imaginary
/// parts (to 1e−12).
pub fn verify_density_cross_validation(
    ctx: &VerifyContext,
    ells: &[u32],
    xs: &[f64],
) -> VerificationReport {
    let report = VerificationReport::new("density-cross-validation", ctx.tol(1e-7))
        .param("ell", ells_param(ells))
        .param("x", xs);
    run(report, |r| {
        let engine = ctx.engine()?;
        let mut worst_imag: f64 = 0.0;
        for &ell in ells {
            for &x in xs {
                let reference = engine.density(ell, x, DensityMethod::ClosedForm)?.value;
                for method in DensityMethod::ALL {
                    if method == DensityMethod::ClosedForm || !method.supports(ell) {
                        continue;
                    }
                    let v = engine.density(ell, x, method)?;
                    if let Some(e) = v.error_estimate {
                        r.quadrature_errors.push(e);
                    }
                    r.compare(v.value, reference);
                }
                let (a, b) = crate::density::barnes_pair(ell, x)?;
                worst_imag = worst_imag.max((a + b).im.abs());
            }
        }
        r.note(&format!(
            "Barnes pair imaginary parts cancel to {worst_imag:.1e}"
        ));
        if worst_imag > 1e-12 {
            r.residual = f64::MAX;
        }
        Ok(())
    })
}

/// 2∫_0^∞ ρ_ℓ = 1 and 2∫_0^∞ u² ρ_ℓ = ℓ/12 (the variance of a sum of ℓ
/// independent sech² variables).
pub fn verify_density_normalization(ctx: &VerifyContext, ells: &[u32]) -> VerificationReport {
    let report = VerificationReport::new("density-normalization", ctx.tol(1e-9))
        .param("ell", ells_param(ells));
    run(report, |r| {
        let cfg = ctx.quad().with_tail(TailMode::Exponential);
        for &ell in ells {
            let rho = ctx.compiled(ell)?;
            let mass = integrate_semi_infinite(|u| rho.eval(u), &cfg)?;
            r.quad(&mass);
            r.compare(2.0 * mass.value, 1.0);
            let var = integrate_semi_infinite(|u| u * u * rho.eval(u), &cfg)?;
            r.quad(&var);
            r.compare(2.0 * var.value, f64::from(ell) / 12.0);
        }
        Ok(())
    })
}

/// ρ_ℓ(x) = 2φ_ℓ(2x) with φ_ℓ(t) = (1/2π)∫_ℝ (y/sinh y)^ℓ e^{ity} dy,
/// the closed form against an independent quadrature, for ℓ ≤ 4.
pub fn verify_phi_transform_relation(
    ctx: &VerifyContext,
    cases: &[(u32, f64)],
) -> VerificationReport {
    let report = VerificationReport::new("phi-transform-relation", ctx.tol(1e-9))
        .param(
            "ell",
            cases.iter().map(|c| f64::from(c.0)).collect::<Vec<_>>(),
        )
        .param("x", cases.iter().map(|c| c.1).collect::<Vec<_>>());
    run(report, |r| {
        for &(ell, x) in cases {
            if !(1..=4).contains(&ell) {
                return Err(domain(
                    "phi-transform-relation",
                    ell.into(),
                    "1 <= ell <= 4",
                ));
            }
            let t = 2.0 * x;
            let cfg = ctx
                .quad()
                .with_tail(TailMode::Oscillatory(t))
                .with_cutoff(80.0);
            // the integrand is even in y; the sine part cancels
            let half =
                integrate_semi_infinite(|y| sech_kernel_ratio(y, ell) * libm::cos(t * y), &cfg)?;
            r.quad(&half);
            let phi = half.value / PI;
            r.compare(ctx.compiled(ell)?.eval(x), 2.0 * phi);
        }
        Ok(())
    })
}

/// Σ_{n≥0} C(n+ℓ−1, ℓ−1)(n+w)^{−s} summed for n < n_max.
fn multiplicity_sum(ell: u32, s: u32, w: Complex, n_max: usize) -> Complex {
    let mut total = Complex::new(0.0, 0.0);
    for n in 0..n_max {
        let mut mult = 1.0;
        for i in 1..ell {
            mult *= (n as f64 + i as f64) / i as f64;
        }
        total += (w + n as f64).inv().powu(s) * mult;
    }
    total
}

/// The Hurwitz reduction of ζ_ℓ(s, w | 1,…,1) against the defining lattice
/// sum grouped by multiplicity, at s = ℓ+1 (Richardson-extrapolated in the
/// truncation point) and s = ℓ+2.
pub fn verify_barnes_choi(ctx: &VerifyContext, ells: &[u32]) -> VerificationReport {
    const N: usize = 100_000;
    let report =
        VerificationReport::new("barnes-choi", ctx.tol(1e-7)).param("ell", ells_param(ells));
    run(report, |r| {
        for &ell in ells {
            let w = Complex::new(f64::from(ell) / 2.0, 0.3);
            let s = ell + 1;
            let coarse = multiplicity_sum(ell, s, w, N);
            let fine = multiplicity_sum(ell, s, w, 2 * N);
            let extrapolated = fine * 2.0 - coarse;
            let z = barnes_zeta(ell, s, w)?;
            r.compare(extrapolated.re, z.re);
            r.compare(extrapolated.im, z.im);
            let z = barnes_zeta(ell, s + 1, w)?;
            let direct = multiplicity_sum(ell, s + 1, w, 2 * N);
            r.compare(direct.re, z.re);
            r.compare(direct.im, z.im);
        }
        Ok(())
    })
}
