//! Identities for the log-moments z_ℓ(b) = ∫_0^∞ log(1 + bu²) ρ_ℓ(u) du and
//! the integrals derived from them.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::{One, ToPrimitive, Zero};

use super::report::{Value, VerificationReport};
use super::VerifyContext;
use crate::error::{domain, Error, Result};
use crate::exact::{
    binomial, chebyshev, harmonic, p_polys, stirling_first, ChebyshevKind, Poly, Rational,
};
use crate::quad::{
    integrate_semi_infinite, log_moment_with, moment_fraction_integrals_with, TailMode,
};
use crate::special::{digamma, hurwitz_zeta, leibniz_derivative, leibniz_rhs, polygamma, Complex};

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

fn h(n: u32) -> f64 {
    harmonic(n).to_f64().unwrap_or(f64::NAN)
}

/// z_ℓ(b) at b = (x − ℓ/2)^{−2} equals leibniz_rhs(ℓ, x) − log|x − ℓ/2|,
/// checked for x > ℓ.
///
/// For odd ℓ one point with ⌊ℓ/2⌋ < x < ℓ/2 is also evaluated; its
/// residual is only recorded in the notes.
pub fn verify_log_moment(ctx: &VerifyContext, ell: u32, xs: &[f64]) -> VerificationReport {
    let report = VerificationReport::new("log-moment", ctx.tol(1e-8))
        .param("ell", ell)
        .param("x", xs);
    run(report, |r| {
        let rho = ctx.compiled(ell)?;
        let half = f64::from(ell) / 2.0;
        for &x in xs {
            if !(x > f64::from(ell)) {
                return Err(domain("log-moment", x, "x > ell"));
            }
            let q = log_moment_with(&rho, libm::pow(x - half, -2.0), ctx.quad())?;
            r.quad(&q);
            r.compare(q.value, leibniz_rhs(ell, x)? - libm::log(x - half));
        }
        if ell % 2 == 1 {
            let x = half - 0.25;
            let q = log_moment_with(&rho, 16.0, ctx.quad())?;
            let rhs = leibniz_rhs(ell, x)? - libm::log(0.25);
            r.note(&format!(
                "reflection point x = {x}: residual {:.3e} (not part of the pass rule)",
                (q.value - rhs).abs()
            ));
        } else {
            r.note("even ell: no reflection point with a positive psi argument");
        }
        Ok(())
    })
}

/// z₁ at x = 3 is ψ(3) − log 2.5 and z₂ at x = 3 is ψ(2) + 2ψ′(2) − 1 − log 2.
pub fn verify_log_moment_spot_values(ctx: &VerifyContext) -> VerificationReport {
    let report = VerificationReport::new("log-moment-spot-values", ctx.tol(1e-8)).param("x", 3.0);
    run(report, |r| {
        let q = log_moment_with(&*ctx.compiled(1)?, 1.0 / 6.25, ctx.quad())?;
        r.quad(&q);
        r.compare(q.value, digamma(3.0)? - libm::log(2.5));
        let q = log_moment_with(&*ctx.compiled(2)?, 0.25, ctx.quad())?;
        r.quad(&q);
        r.compare(
            q.value,
            digamma(2.0)? + 2.0 * polygamma(1, 2.0)? - 1.0 - libm::log(2.0),
        );
        Ok(())
    })
}

struct Residuals {
    worst: f64,
    lhs: f64,
    rhs: f64,
}

impl Residuals {
    fn new() -> Self {
        Residuals {
            worst: 0.0,
            lhs: 0.0,
            rhs: 0.0,
        }
    }

    fn push(&mut self, lhs: f64, rhs: f64) {
        let d = (lhs - rhs).abs();
        let d = if d.is_nan() { f64::MAX } else { d };
        if d >= self.worst {
            *self = Residuals { worst: d, lhs, rhs };
        }
    }
}

/// The differential-difference equation linking y_ℓ(x) = z_ℓ((x − ℓ/2)^{−2})
/// with y_{ℓ+2}(x+1). Two coefficient variants are evaluated:
///
/// * x-form: ℓ(ℓ+1) y_{ℓ+2}(x+1) = x(x−ℓ) y″ + 2(ℓ+1)(x−ℓ/2) y′ + ℓ(ℓ+1) y + ℓ²/(4(x−ℓ/2)²)
/// * b-form: ℓ(ℓ+2) z_{ℓ+2} = b²(4 − bℓ²) z″ + 2b(1 − 2ℓ − 3bℓ²/4) z′ + ℓ(ℓ+1) z + bℓ²/4
///
/// The report passes when exactly one variant is within tolerance at every
/// grid point; the notes name it.
pub fn verify_dde(ctx: &VerifyContext, ell: u32, xs: &[f64]) -> VerificationReport {
    let report = VerificationReport::new("dde", ctx.tol(1e-6))
        .param("ell", ell)
        .param("x", xs);
    let tol = report.tolerance;
    run(report, |r| {
        if ell == 0 {
            return Err(Error::InvalidArgument("ell must be positive".into()));
        }
        let rho = ctx.compiled(ell)?;
        let rho2 = ctx.compiled(ell + 2)?;
        let l = f64::from(ell);
        let mut x_form = Residuals::new();
        let mut b_form = Residuals::new();
        let mut fraction_check: f64 = 0.0;
        for &x in xs {
            if !(x > l / 2.0) {
                return Err(domain("dde", x, "x > ell/2"));
            }
            let xx = x - l / 2.0;
            let b = 1.0 / (xx * xx);
            let z = log_moment_with(&rho, b, ctx.quad())?;
            let [j1, j2, j3] = moment_fraction_integrals_with(&rho, b, ctx.quad())?;
            let z_next = log_moment_with(&rho2, b, ctx.quad())?;
            for q in [&z, &j1, &j2, &j3, &z_next] {
                r.quad(q);
            }
            let (z, j1, j2, j3, z_next) = (z.value, j1.value, j2.value, j3.value, z_next.value);
            let dz = j1;
            let d2z = (j2 - j1) / b;
            fraction_check = fraction_check.max((j3 - (0.5 - b * j1 - b * j2)).abs());
            let dy = dz * (-2.0 / (xx * xx * xx));
            let d2y = d2z * 4.0 / libm::pow(xx, 6.0) + dz * 6.0 / libm::pow(xx, 4.0);

            x_form.push(
                l * (l + 1.0) * z_next,
                x * (x - l) * d2y
                    + 2.0 * (l + 1.0) * xx * dy
                    + l * (l + 1.0) * z
                    + l * l / (4.0 * xx * xx),
            );
            b_form.push(
                l * (l + 2.0) * z_next,
                b * b * (4.0 - b * l * l) * d2z
                    + 2.0 * b * (1.0 - 2.0 * l - 0.75 * b * l * l) * dz
                    + l * (l + 1.0) * z
                    + b * l * l / 4.0,
            );
        }
        let x_ok = x_form.worst <= tol;
        let b_ok = b_form.worst <= tol;
        let winner = match (x_ok, b_ok) {
            (true, false) => "x-form with left coefficient l(l+1)",
            (false, true) => "b-form with left coefficient l(l+2)",
            (true, true) => "both variants",
            (false, false) => "neither variant",
        };
        r.note(&format!(
            "x-form l(l+1): max residual {:.3e}; b-form l(l+2): max residual {:.3e}; satisfied by: {winner}",
            x_form.worst, b_form.worst
        ));
        r.note(&format!(
            "fraction-integral consistency {fraction_check:.1e}"
        ));
        let best = if x_form.worst <= b_form.worst {
            x_form
        } else {
            b_form
        };
        r.residual = best.worst;
        r.lhs = Value::number(best.lhs);
        r.rhs = Value::number(best.rhs);
        if x_ok == b_ok {
            r.residual = f64::MAX;
        }
        Ok(())
    })
}

/// Which of the two Chebyshev integral identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevIdentity {
    /// ∫_0^∞ {uP₁(u) coth(πu) − u^{2ℓ−1}} T_{2ℓ}(X/√(u²+X²)) (u²+X²)^{−ℓ} du, X = x − ℓ.
    First,
    /// ∫_0^∞ {tanh(πu) P₂(u) − u^{2ℓ}} U_{2ℓ}(X/√(u²+X²)) u (u²+X²)^{−ℓ−1} du, X = x − ℓ − ½.
    Second,
}

impl ChebyshevIdentity {
    pub fn as_str(self) -> &'static str {
        match self {
            ChebyshevIdentity::First => "first",
            ChebyshevIdentity::Second => "second",
        }
    }
}

/// The Chebyshev integrals against (−1)^ℓ(log X + H − D), where D is the
/// Leibniz derivative of order 2ℓ (first) or 2ℓ+1 (second) with ψ shifted
/// by ℓ.
///
/// For the second identity the residual obtained with ψ shifted by ℓ + ½
/// instead is recorded in the notes.
pub fn verify_chebyshev_integrals(
    ctx: &VerifyContext,
    ell: u32,
    which: ChebyshevIdentity,
    xs: &[f64],
) -> VerificationReport {
    let report = VerificationReport::new("chebyshev-integrals", ctx.tol(1e-6))
        .param("ell", ell)
        .param("identity", which.as_str())
        .param("x", xs);
    run(report, |r| {
        if ell == 0 {
            return Err(Error::InvalidArgument("ell must be positive".into()));
        }
        let l = f64::from(ell);
        let (p1, p2) = p_polys(ell);
        let sign = if ell.is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut shifted_half: f64 = 0.0;
        for &x in xs {
            let (xx, cfg) = match which {
                ChebyshevIdentity::First => {
                    let cfg = if ell == 1 {
                        ctx.quad().with_tail(TailMode::Exponential)
                    } else {
                        ctx.quad().with_tail(TailMode::Algebraic(3.0))
                    };
                    (x - l, cfg)
                }
                ChebyshevIdentity::Second => {
                    (x - l - 0.5, ctx.quad().with_tail(TailMode::Algebraic(3.0)))
                }
            };
            if !(xx > 0.0) {
                return Err(domain(
                    "chebyshev-integrals",
                    x,
                    "x above the identity's threshold",
                ));
            }
            let value = match which {
                ChebyshevIdentity::First => {
                    let lead = &p1 - &Poly::monomial(Rational::one(), 2 * ell as usize - 2, "u");
                    let t = chebyshev(ChebyshevKind::First, 2 * ell);
                    integrate_semi_infinite(
                        |u| {
                            let d = u * u + xx * xx;
                            let bracket = u * lead.eval_f64(u)
                                + p1.eval_f64(u) * 2.0 * u / libm::expm1(2.0 * PI * u);
                            let bracket = if u == 0.0 {
                                p1.eval_f64(0.0) / PI
                            } else {
                                bracket
                            };
                            bracket * t.eval_f64(xx / libm::sqrt(d)) / libm::pow(d, l)
                        },
                        &cfg,
                    )?
                }
                ChebyshevIdentity::Second => {
                    let lead = &p2 - &Poly::monomial(Rational::one(), 2 * ell as usize, "u");
                    let uu = chebyshev(ChebyshevKind::Second, 2 * ell);
                    integrate_semi_infinite(
                        |u| {
                            let d = u * u + xx * xx;
                            let bracket = lead.eval_f64(u)
                                - p2.eval_f64(u) * 2.0 / (libm::exp(2.0 * PI * u) + 1.0);
                            bracket * uu.eval_f64(xx / libm::sqrt(d)) * u / libm::pow(d, l + 1.0)
                        },
                        &cfg,
                    )?
                }
            };
            r.quad(&value);
            let rhs = match which {
                ChebyshevIdentity::First => {
                    sign * (libm::log(xx) + h(2 * ell - 1) - leibniz_derivative(2 * ell, x, l)?)
                }
                ChebyshevIdentity::Second => {
                    let alt = sign
                        * (libm::log(xx) + h(2 * ell)
                            - leibniz_derivative(2 * ell + 1, x, l + 0.5)?);
                    shifted_half = shifted_half.max((value.value - alt).abs());
                    sign * (libm::log(xx) + h(2 * ell) - leibniz_derivative(2 * ell + 1, x, l)?)
                }
            };
            r.compare(value.value, rhs);
        }
        if which == ChebyshevIdentity::Second {
            r.note(&format!(
                "with psi shifted by ell + 1/2 the residual is {shifted_half:.3e}"
            ));
        }
        Ok(())
    })
}

/// Weighted sums of the complex integrals
/// z(m,j) = 2 Re ∫_0^∞ (c+iu)^{m−j} ζ(n+1−j, c+iu) log(1 + u²/X²) du,
/// with c = ℓ, n = 2ℓ, X = x − ℓ (first) or c = ℓ + ½, n = 2ℓ+1, X = x − ℓ − ½
/// (second), against −(2π/n)(log X + H_{n−1} − D), D the Leibniz derivative
/// of order n with ψ shifted by ℓ.
///
/// Before integrating, the weighted integrand sum is compared pointwise at
/// u = ½ with (2π/n) ρ_n(u), to 1e−8.
pub fn verify_hurwitz_sums(
    ctx: &VerifyContext,
    ell: u32,
    which: ChebyshevIdentity,
    xs: &[f64],
) -> VerificationReport {
    let report = VerificationReport::new("hurwitz-sums", ctx.tol(1e-5))
        .param("ell", ell)
        .param("identity", which.as_str())
        .param("x", xs);
    run(report, |r| {
        if ell == 0 {
            return Err(Error::InvalidArgument("ell must be positive".into()));
        }
        let l = f64::from(ell);
        let (n, c, odd) = match which {
            ChebyshevIdentity::First => (2 * ell, l, false),
            ChebyshevIdentity::Second => (2 * ell + 1, l + 0.5, true),
        };
        // (m, j, weight) with weight (−1)^{j−1} C(m,j) s(n, m+1), negated for the second identity
        let mut terms: Vec<(u32, u32, f64)> = Vec::new();
        for j in 0..n {
            for m in j..n {
                let w = Rational::from_integer(binomial(m, j)) * stirling_first(n, m + 1);
                if w.is_zero() {
                    continue;
                }
                let mut w = w.to_f64().unwrap_or(f64::NAN);
                if j % 2 == 0 {
                    w = -w;
                }
                if odd {
                    w = -w;
                }
                terms.push((m, j, w));
            }
        }
        let kernel = |m: u32, j: u32, u: f64| -> Result<f64> {
            let a = Complex::new(c, u);
            let z = hurwitz_zeta(n + 1 - j, a)?;
            Ok(2.0 * (a.powu(m - j) * z).re)
        };
        let rho_n = ctx.compiled(n)?;
        let mut g = 0.0;
        for &(m, j, w) in &terms {
            g += w * kernel(m, j, 0.5)?;
        }
        let pointwise = (g - 2.0 * PI / f64::from(n) * rho_n.eval(0.5)).abs();
        r.note(&format!(
            "pointwise integrand check at u = 0.5: {pointwise:.1e}"
        ));
        if pointwise > ctx.tol(1e-8) {
            r.residual = f64::MAX;
            return Ok(());
        }
        let cfg = ctx.quad().with_tail(TailMode::Algebraic(2.0));
        for &x in xs {
            let xx = x - c;
            if !(xx > 0.0) {
                return Err(domain(
                    "hurwitz-sums",
                    x,
                    "x above the identity's threshold",
                ));
            }
            let mut total = 0.0;
            for &(m, j, w) in &terms {
                let err = core::cell::RefCell::new(None);
                let q = integrate_semi_infinite(
                    |u| match kernel(m, j, u) {
                        Ok(k) => k * libm::log1p(u * u / (xx * xx)),
                        Err(e) => {
                            err.borrow_mut().get_or_insert(e);
                            0.0
                        }
                    },
                    &cfg,
                )?;
                if let Some(e) = err.into_inner() {
                    return Err(e);
                }
                r.quad(&q);
                total += w * q.value;
            }
            let rhs = -2.0 * PI / f64::from(n)
                * (libm::log(xx) + h(n - 1) - leibniz_derivative(n, x, l)?);
            r.compare(total, rhs);
        }
        r.note(&format!("{} integrals per x", terms.len()));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_moment_reports_pass() {
        let ctx = VerifyContext::default();
        let r = verify_log_moment(&ctx, 2, &[3.0, 5.0]);
        assert!(r.passed, "{r:?}");
        let r = verify_log_moment_spot_values(&ctx);
        assert!(r.passed, "{r:?}");
        let r = verify_log_moment(&ctx, 2, &[1.5]);
        assert!(!r.passed);
    }

    #[test]
    fn dde_picks_one_variant() {
        let ctx = VerifyContext::default();
        let r = verify_dde(&ctx, 1, &[2.0, 3.0]);
        assert!(r.passed, "{r:?}");
        assert!(r.notes.contains("satisfied by: x-form"), "{}", r.notes);
    }

    #[test]
    fn chebyshev_integrals_hold() {
        let ctx = VerifyContext::default();
        for which in [ChebyshevIdentity::First, ChebyshevIdentity::Second] {
            let r = verify_chebyshev_integrals(&ctx, 1, which, &[3.0]);
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn hurwitz_sum_ell_one() {
        let ctx = VerifyContext::default();
        let r = verify_hurwitz_sums(&ctx, 1, ChebyshevIdentity::First, &[3.0]);
        assert!(r.passed, "{r:?}");
    }
}
