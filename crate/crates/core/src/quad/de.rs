//! tanh-sinh and exp-sinh rules and the semi-infinite driver.

use core::f64::consts::FRAC_PI_2;

use super::{QuadConfig, QuadResult, TailMode};
use crate::error::{domain, Error, Result};

/// Half-width of the t-range; beyond it the weights are below 1e−80.
const T_MAX: f64 = 4.0;
const MIN_LEVEL: u32 = 3;
const MAX_LEVELS: u32 = 16;

fn check(cfg: &QuadConfig) -> Result<()> {
    if !(cfg.abs_tol > 0.0 && cfg.rel_tol > 0.0) {
        return Err(Error::InvalidArgument("tolerances must be positive".into()));
    }
    if cfg.max_levels > MAX_LEVELS {
        return Err(Error::InvalidArgument(
            "max_levels must be at most 16".into(),
        ));
    }
    Ok(())
}

/// Runs the level-doubling loop. `node(t)` returns `(weight, f)` contributions
/// (already multiplied together) or `None` to skip the abscissa.
fn drive(cfg: &QuadConfig, mut node: impl FnMut(f64) -> Result<Option<f64>>) -> Result<QuadResult> {
    check(cfg)?;
    let mut evals = 0usize;
    let mut sum = 0.0;
    let n0 = T_MAX as i64;
    for j in -n0..=n0 {
        if let Some(v) = node(j as f64)? {
            sum += v;
            evals += 1;
        }
    }
    let mut h = 1.0;
    let mut prev = sum * h;
    let mut err = f64::INFINITY;
    let mut level = 0;
    while level < cfg.max_levels {
        level += 1;
        h *= 0.5;
        let count = (T_MAX / h) as i64;
        let mut j = -count + if count % 2 == 0 { 1 } else { 0 };
        while j <= count {
            if let Some(v) = node(j as f64 * h)? {
                sum += v;
                evals += 1;
            }
            j += 2;
        }
        let cur = sum * h;
        err = (cur - prev).abs();
        prev = cur;
        if level >= MIN_LEVEL && err <= cfg.target(cur) {
            return Ok(QuadResult {
                value: cur,
                error_estimate: err,
                evaluations: evals,
                converged: true,
            });
        }
    }
    Ok(QuadResult {
        value: prev,
        error_estimate: err,
        evaluations: evals,
        converged: false,
    })
}

fn finite(v: f64, x: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { abscissa: x })
    }
}

/// ∫_a^b f by the tanh-sinh rule. Endpoints are never evaluated.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(domain("tanh_sinh", a, "finite a < b"));
    }
    let len = b - a;
    drive(cfg, |t| {
        let u = FRAC_PI_2 * libm::sinh(t);
        let ch = libm::cosh(u);
        let w = FRAC_PI_2 * libm::cosh(t) / (ch * ch) * 0.5 * len;
        if w == 0.0 {
            return Ok(None);
        }
        // distance to the nearer endpoint, computed without cancellation
        let x = if t >= 0.0 {
            b - len / (1.0 + libm::exp(2.0 * u))
        } else {
            a + len / (1.0 + libm::exp(-2.0 * u))
        };
        if x <= a || x >= b {
            return Ok(None);
        }
        Ok(Some(w * finite(f(x), x)?))
    })
}

/// ∫_a^∞ f by the exp-sinh rule; abscissas beyond `cfg.tail_cutoff` are
/// dropped, so `f` must be negligible there.
pub fn exp_sinh(f: impl Fn(f64) -> f64, a: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    if !a.is_finite() {
        return Err(domain("exp_sinh", a, "finite lower limit"));
    }
    drive(cfg, |t| {
        let e = libm::exp(FRAC_PI_2 * libm::sinh(t));
        let x = a + e;
        if x > cfg.tail_cutoff || x <= a {
            return Ok(None);
        }
        let w = FRAC_PI_2 * libm::cosh(t) * e;
        Ok(Some(w * finite(f(x), x)?))
    })
}

/// ∫_0^∞ f, with the tail handled according to `cfg.tail_mode`.
pub fn integrate_semi_infinite(f: impl Fn(f64) -> f64, cfg: &QuadConfig) -> Result<QuadResult> {
    check(cfg)?;
    match cfg.tail_mode {
        TailMode::Exponential => exp_sinh(f, 0.0, cfg),
        TailMode::Algebraic(p) => algebraic(&f, p, cfg),
        TailMode::Oscillatory(w) => oscillatory(&f, w, cfg),
    }
}

/// Panels on `[0, C]` with geometric breakpoints, then the tail `[C, ∞)`
/// through `u = C v^{−1/(p−1)}`, which makes a `u^{−p}` integrand constant.
fn algebraic(f: &impl Fn(f64) -> f64, p: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    if !(p > 1.0) {
        return Err(domain("integrate_semi_infinite", p, "algebraic power > 1"));
    }
    let c = cfg.tail_cutoff;
    if !(c > 0.0) {
        return Err(domain("integrate_semi_infinite", c, "tail_cutoff > 0"));
    }
    let mut total = QuadResult::zero();
    let mut lo = 0.0;
    let mut hi = f64::min(1.0, c);
    loop {
        total = total.combine(tanh_sinh(f, lo, hi, cfg)?);
        if hi >= c {
            break;
        }
        lo = hi;
        hi = f64::min(hi * 10.0, c);
    }
    let e = 1.0 / (p - 1.0);
    let tail = tanh_sinh(
        |v| {
            let u = c * libm::pow(v, -e);
            f(u) * c * e * libm::pow(v, -e - 1.0)
        },
        0.0,
        1.0,
        cfg,
    )?;
    Ok(total.combine(tail))
}

/// Half-period panels summed until the cutoff, for integrands with a
/// `cos(ωu)`-type factor and (at least) exponential decay.
fn oscillatory(f: &impl Fn(f64) -> f64, omega: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    let omega = omega.abs();
    if omega * cfg.tail_cutoff <= 20.0 {
        return exp_sinh(f, 0.0, cfg);
    }
    let half = core::f64::consts::PI / omega;
    let mut total = QuadResult::zero();
    let mut lo = 0.0;
    while lo < cfg.tail_cutoff {
        let hi = lo + half;
        total = total.combine(tanh_sinh(f, lo, hi, cfg)?);
        lo = hi;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn finite_interval() {
        let r = tanh_sinh(|x| x * x, 0.0, 1.0, &QuadConfig::default()).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-14 && r.converged);
        // endpoint singularity
        let r = tanh_sinh(|x| 1.0 / libm::sqrt(x), 0.0, 1.0, &QuadConfig::default()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn exponential_tail() {
        let r = integrate_semi_infinite(|u| libm::exp(-u), &QuadConfig::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12 && r.converged);
        let r = integrate_semi_infinite(
            |u| {
                let c = libm::cosh(PI * u);
                PI / 2.0 / (c * c)
            },
            &QuadConfig::default(),
        )
        .unwrap();
        assert!((r.value - 0.5).abs() < 1e-12);
    }

    #[test]
    fn cosine_over_cosh_squared() {
        let expected = PI / (2.0 * libm::sinh(PI / 2.0));
        let f = |u: f64| {
            let c = libm::cosh(u);
            libm::cos(u) / (c * c)
        };
        let r = integrate_semi_infinite(f, &QuadConfig::default()).unwrap();
        assert!((r.value - expected).abs() < 1e-12);
        let cfg = QuadConfig::default()
            .with_tail(TailMode::Oscillatory(1.0))
            .with_cutoff(60.0);
        let r = integrate_semi_infinite(f, &cfg).unwrap();
        assert!((r.value - expected).abs() < 1e-12);
    }

    #[test]
    fn algebraic_tail() {
        // ∫_0^∞ du/(1+u)^3 = 1/2 ; ∫_0^∞ log(1+u)/(1+u)^2 du = 1
        let cfg = QuadConfig::default().with_tail(TailMode::Algebraic(3.0));
        let r = integrate_semi_infinite(|u| libm::pow(1.0 + u, -3.0), &cfg).unwrap();
        assert!((r.value - 0.5).abs() < 1e-12, "{r:?}");
        let cfg = QuadConfig::default().with_tail(TailMode::Algebraic(2.0));
        let r =
            integrate_semi_infinite(|u| libm::log1p(u) / ((1.0 + u) * (1.0 + u)), &cfg).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11, "{r:?}");
    }

    #[test]
    fn non_finite_is_reported() {
        let e = tanh_sinh(
            |x| if x > 0.5 { f64::NAN } else { 1.0 },
            0.0,
            1.0,
            &QuadConfig::default(),
        );
        match e {
            Err(Error::NonFinite { abscissa }) => assert!(abscissa > 0.5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn config_is_validated() {
        let cfg = QuadConfig {
            max_levels: 17,
            ..QuadConfig::default()
        };
        assert!(integrate_semi_infinite(|u| libm::exp(-u), &cfg).is_err());
        let cfg = QuadConfig::default().with_tol(0.0, 1e-10);
        assert!(integrate_semi_infinite(|u| libm::exp(-u), &cfg).is_err());
    }
}
