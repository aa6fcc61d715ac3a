//! Single-integral and finite-difference identities for ψ, the cosh kernel
//! and the generating function of the modified Nörlund polynomials.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::ToPrimitive;

use super::report::VerificationReport;
use super::VerifyContext;
use crate::error::{domain, Error, Result};
use crate::exact::{binom_poly, binomial, harmonic, int, modified_norlund};
use crate::quad::{integrate_semi_infinite, tanh_sinh, TailMode};
use crate::special::{digamma, genfun_modified_norlund, leibniz_rhs, polygamma, EULER_GAMMA};

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

/// sech²(y), overflow-free.
fn sech2(y: f64) -> f64 {
    let e = libm::exp(-2.0 * y.abs());
    4.0 * e / ((1.0 + e) * (1.0 + e))
}

/// ψ(x) = π ∫_0^∞ log((x−½)² + u²)/2 · sech²(πu) du for x > ½, and
/// ∫_0^1 ψ(x+t) dt = log x for x > 0.
pub fn verify_psi_log_pair(ctx: &VerifyContext, xs: &[f64]) -> VerificationReport {
    let report = VerificationReport::new("psi-log-pair", ctx.tol(1e-8)).param("x", xs);
    run(report, |r| {
        let cfg = ctx
            .quad()
            .with_tail(TailMode::Exponential)
            .with_cutoff(40.0);
        for &x in xs {
            if !(x > 0.5) {
                return Err(domain("psi-log-pair", x, "x > 1/2"));
            }
            let h = x - 0.5;
            let re =
                integrate_semi_infinite(|u| 0.5 * libm::log(h * h + u * u) * sech2(PI * u), &cfg)?;
            r.quad(&re);
            r.compare(PI * re.value, digamma(x)?);
            // the imaginary part pairs arg(h+iu) with arg(h−iu)
            let im = integrate_semi_infinite(
                |u| (libm::atan2(u, h) + libm::atan2(-u, h)) * sech2(PI * u),
                &cfg,
            )?;
            r.compare(PI * im.value, 0.0);
            let avg = tanh_sinh(|t| digamma(x + t).unwrap_or(f64::NAN), 0.0, 1.0, ctx.quad())?;
            r.quad(&avg);
            r.compare(avg.value, libm::log(x));
        }
        Ok(())
    })
}

/// The ψ values shared by the log-moment closed form at ℓ = 1 and the ψ–log
/// pair agree: leibniz_rhs(1, x) = ψ(x), to 1e−12.
pub fn verify_digamma_consistency(ctx: &VerifyContext, xs: &[f64]) -> VerificationReport {
    let report = VerificationReport::new("digamma-consistency", ctx.tol(1e-12)).param("x", xs);
    run(report, |r| {
        for &x in xs {
            r.compare(leibniz_rhs(1, x)?, digamma(x)?);
        }
        if xs.contains(&1.0) {
            r.compare(digamma(1.0)?, -EULER_GAMMA);
        }
        Ok(())
    })
}

/// ∫_0^∞ cos(ax)/cosh²(βx) dx = πa/(2β² sinh(πa/(2β))) and
/// 2∫_0^∞ ρ₁(x) cos(2πξx) dx = πξ/sinh(πξ).
pub fn verify_cosh_fourier_integrals(ctx: &VerifyContext) -> VerificationReport {
    const PAIRS: [(f64, f64); 3] = [(1.0, 1.0), (2.0, 0.5), (0.3, 2.0)];
    const XIS: [f64; 4] = [0.0, 0.5, 1.0, 2.0];
    let report = VerificationReport::new("cosh-fourier-integrals", ctx.tol(1e-9))
        .param(
            "a_beta",
            PAIRS.iter().flat_map(|(a, b)| [*a, *b]).collect::<Vec<_>>(),
        )
        .param("xi", &XIS[..]);
    run(report, |r| {
        for (a, beta) in PAIRS {
            let cfg = ctx
                .quad()
                .with_tail(TailMode::Oscillatory(a))
                .with_cutoff(40.0 / beta);
            let q = integrate_semi_infinite(|x| libm::cos(a * x) * sech2(beta * x), &cfg)?;
            r.quad(&q);
            let t = PI * a / (2.0 * beta);
            r.compare(q.value, PI * a / (2.0 * beta * beta * libm::sinh(t)));
        }
        let rho1 = ctx.compiled(1)?;
        for xi in XIS {
            let w = 2.0 * PI * xi;
            let cfg = ctx
                .quad()
                .with_tail(TailMode::Oscillatory(w))
                .with_cutoff(15.0);
            let q = integrate_semi_infinite(|x| rho1.eval(x) * libm::cos(w * x), &cfg)?;
            r.quad(&q);
            let rhs = if xi == 0.0 {
                1.0
            } else {
                PI * xi / libm::sinh(PI * xi)
            };
            r.compare(2.0 * q.value, rhs);
        }
        Ok(())
    })
}

/// Δ^ℓ[binom(x+p, ℓ) ψ(x)] = H_ℓ + ψ(x+p+1), the difference taken as the
/// binomial sum Σ_k (−1)^{ℓ−k} C(ℓ,k) binom(x+k+p, ℓ) ψ(x+k).
///
/// `p = None` checks every admissible p in −1..=ℓ−1.
pub fn verify_delta_digamma(
    ctx: &VerifyContext,
    ell: u32,
    p: Option<i64>,
    xs: &[f64],
) -> VerificationReport {
    let mut report = VerificationReport::new("delta-digamma", ctx.tol(1e-10))
        .param("ell", ell)
        .param("x", xs);
    report = match p {
        Some(p) => report.param("p", p),
        None => report.param("p", "all"),
    };
    run(report, |r| {
        if ell == 0 {
            return Err(Error::InvalidArgument("ell must be positive".into()));
        }
        let ps: Vec<i64> = match p {
            Some(p) if (-1..ell as i64).contains(&p) => alloc::vec![p],
            Some(p) => return Err(domain("delta-digamma", p as f64, "-1 <= p <= ell-1")),
            None => (-1..ell as i64).collect(),
        };
        let h = harmonic(ell).to_f64().unwrap_or(f64::NAN);
        for &p in &ps {
            let factor = binom_poly(p, ell);
            for &x in xs {
                if !(x > 0.0 && x + p as f64 + 1.0 > 0.0) {
                    return Err(domain("delta-digamma", x, "x > 0 and x + p + 1 > 0"));
                }
                let mut lhs = 0.0;
                for k in 0..=ell {
                    let sign = if (ell - k).is_multiple_of(2) {
                        1.0
                    } else {
                        -1.0
                    };
                    let c = binomial(ell, k).to_f64().unwrap_or(f64::NAN);
                    let y = x + k as f64;
                    lhs += sign * c * factor.eval_f64(y) * digamma(y)?;
                }
                r.compare(lhs, h + digamma(x + p as f64 + 1.0)?);
            }
        }
        Ok(())
    })
}

/// Least-squares slope of log R against log z.
fn loglog_slope(zs: &[f64], rs: &[f64]) -> f64 {
    let n = zs.len() as f64;
    let lx: Vec<f64> = zs.iter().map(|z| libm::log(*z)).collect();
    let ly: Vec<f64> = rs.iter().map(|r| libm::log(*r)).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Default z-list of the asymptotic-order check: 0.05 · 0.7^k, k = 0..3.
pub const GENFUN_Z_LIST: [f64; 4] = [0.05, 0.035, 0.0245, 0.01715];

/// Asymptotic-order check of Σ_n B_n^{(ℓ)*} zⁿ against its closed form:
/// the truncation residual after N terms must scale like z^{N+1}, i.e. the
/// fitted log-log slope lies in [N+½, N+3/2]. The series is formal, so no
/// convergence is asserted.
pub fn verify_genfun_asymptotic(
    ctx: &VerifyContext,
    ell: u32,
    n: u32,
    zs: &[f64],
) -> VerificationReport {
    let report = VerificationReport::new("genfun-asymptotic", ctx.tol(0.5))
        .param("ell", ell)
        .param("N", n)
        .param("z", zs);
    run(report, |r| {
        if n > 12 {
            return Err(domain("genfun-asymptotic", n as f64, "N <= 12"));
        }
        if zs.len() < 2 || zs.iter().any(|z| !(*z > 0.0 && *z <= 0.25)) {
            return Err(Error::InvalidArgument(
                "need at least two z values in (0, 1/4]".into(),
            ));
        }
        let alpha = int(ell.into());
        let coeffs: Vec<f64> = (1..=n)
            .map(|k| modified_norlund(k, &alpha).to_f64().unwrap_or(f64::NAN))
            .collect();
        let mut residuals = Vec::new();
        for &z in zs {
            let series: f64 = coeffs.iter().rev().fold(0.0, |acc, c| (acc + c) * z);
            residuals.push((genfun_modified_norlund(ell, z)? - series).abs());
        }
        if residuals.iter().any(|x| !(*x > 0.0)) {
            return Err(Error::InvalidArgument(
                "zero residual; slope undefined".into(),
            ));
        }
        let slope = loglog_slope(zs, &residuals);
        r.compare(slope, f64::from(n) + 1.0);
        r.note(&format!(
            "residuals {residuals:?}; asymptotic-order check, not a convergence test"
        ));
        Ok(())
    })
}

/// The generating-function closed form at ℓ = 1 and ℓ = 2 against the
/// hand-reduced expressions −½log z − ½ψ(w) and
/// −½log z − ½{ψ(w) + wψ′(w) − 1}, with w = z + 1/z − 1.
pub fn verify_genfun_closed_forms(ctx: &VerifyContext, z: f64) -> VerificationReport {
    let report = VerificationReport::new("genfun-closed-forms", ctx.tol(1e-12)).param("z", z);
    run(report, |r| {
        let w = z + 1.0 / z - 1.0;
        let lz = libm::log(z);
        r.compare(
            genfun_modified_norlund(1, z)?,
            -0.5 * lz - 0.5 * digamma(w)?,
        );
        let two = -0.5 * lz - 0.5 * (digamma(w)? + w * polygamma(1, w)? - 1.0);
        r.compare(genfun_modified_norlund(2, z)?, two);
        Ok(())
    })
}

/// x coth x − 1, and x²/sinh²x, both stable on [0, ∞).
fn coth_parts(x: f64) -> (f64, f64) {
    if x < 0.05 {
        let x2 = x * x;
        let a = x2 * (1.0 / 3.0 + x2 * (-1.0 / 45.0 + x2 * (2.0 / 945.0 - x2 / 4725.0)));
        let b = 1.0 - x2 * (1.0 / 3.0 - x2 * (1.0 / 15.0 - x2 * 2.0 / 189.0));
        return (a, b);
    }
    let e = libm::exp(-2.0 * x);
    let om = -libm::expm1(-2.0 * x);
    let coth = (1.0 + e) / om;
    (x * coth - 1.0, x * x * 4.0 * e / (om * om))
}

/// I(a) = ∫_0^∞ (x coth x − 1) log(1 + a²x²)/sinh²x dx
///      = −log c − 1 + ψ(c) + cψ′(c), c = 1/(π|a|),
/// with the two partial integrals
/// I₁ = ∫ x(1 − coth x)/(1 + a²x²) = (ψ(c) + πa/2 + log(πa))/a² and
/// I₂ = ∫ x²/((1 + a²x²) sinh²x) = −π/(2a) − 1/a² + ψ′(c)/(πa³).
pub fn verify_integral_i_a(ctx: &VerifyContext, a_list: &[f64]) -> VerificationReport {
    let report = VerificationReport::new("integral-I-a", ctx.tol(1e-8)).param("a", a_list);
    run(report, |r| {
        let cfg = ctx
            .quad()
            .with_tail(TailMode::Exponential)
            .with_cutoff(60.0);
        for &a in a_list {
            if a == 0.0 || !a.is_finite() {
                return Err(domain("integral-I-a", a, "a != 0"));
            }
            let a = a.abs();
            let c = 1.0 / (PI * a);
            let rhs = -libm::log(c) - 1.0 + digamma(c)? + c * polygamma(1, c)?;
            let q = integrate_semi_infinite(
                |x| {
                    let (num, s2) = coth_parts(x);
                    // (x coth x − 1)/sinh²x = num · (x²/sinh²x)/x²
                    let w = if x == 0.0 { 0.0 } else { num * s2 / (x * x) };
                    w * libm::log1p(a * a * x * x)
                },
                &cfg,
            )?;
            r.quad(&q);
            r.compare(q.value, rhs);

            let d = |x: f64| 1.0 + a * a * x * x;
            let i1 = integrate_semi_infinite(
                |x| {
                    let g = if x < 1e-8 {
                        1.0 - x
                    } else {
                        2.0 * x / libm::expm1(2.0 * x)
                    };
                    -g / d(x)
                },
                &cfg,
            )?;
            r.quad(&i1);
            r.compare(
                i1.value,
                (digamma(c)? + PI * a / 2.0 + libm::log(PI * a)) / (a * a),
            );
            let i2 = integrate_semi_infinite(|x| coth_parts(x).1 / d(x), &cfg)?;
            r.quad(&i2);
            r.compare(
                i2.value,
                -PI / (2.0 * a) - 1.0 / (a * a) + polygamma(1, c)? / (PI * a * a * a),
            );
        }
        if a_list.iter().any(|a| (a.abs() - 1.0 / PI).abs() < 1e-15) {
            let spot = -1.0 - EULER_GAMMA + PI * PI / 6.0;
            let c: f64 = 1.0;
            let rhs = -libm::log(c) - 1.0 + digamma(c)? + c * polygamma(1, c)?;
            r.compare(rhs, spot);
            r.note("I(1/pi) = -1 - gamma + pi^2/6 checked");
        }
        // a → 0⁺: the right-hand side tends to 0 with I(a)
        let c = 1.0 / (PI * 1e-3);
        let small = -libm::log(c) - 1.0 + digamma(c)? + c * polygamma(1, c)?;
        if small.abs() > 1e-4 {
            r.residual = f64::MAX;
            r.note(&format!("limit a = 1e-3 gives {small}"));
        } else {
            r.note(&format!("limit a = 1e-3: right-hand side {small:.3e}"));
        }
        Ok(())
    })
}
