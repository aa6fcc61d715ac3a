//! Identities checked in exact arithmetic.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, ToPrimitive, Zero};

use super::report::{Value, VerificationReport};
use super::VerifyContext;
use crate::error::{Error, Result};
use crate::exact::{
    bernoulli_numbers, binom_poly, chebyshev, factorial, int, norlund_table, ratio,
    uniform_average, ChebyshevKind, Poly, Rational,
};

/// ∫_0^1 B_n(x+u) du = x^n as exact polynomials for every n ≤ n_max.
pub fn verify_umbral_inversion(n_max: u32) -> VerificationReport {
    let report = VerificationReport::new("umbral-inversion", 0.0).param("n_max", n_max);
    if n_max > 30 {
        return report.failed(&Error::InvalidArgument(format!(
            "n_max = {n_max} exceeds 30"
        )));
    }
    let mut report = report;
    let mut last = Poly::zero("x");
    for n in 0..=n_max {
        let avg = uniform_average(&crate::exact::bernoulli_poly(n));
        let target = Poly::monomial(Rational::one(), n as usize, "x");
        if avg != target {
            report.residual = n as f64;
            report.lhs = Value::Exact(format!("{avg}"));
            report.rhs = Value::Exact(format!("{target}"));
            report.note(&format!("first failing n = {n}"));
            return report.finish_exact(false);
        }
        last = avg;
    }
    report.lhs = Value::Exact(format!("{last}"));
    report.rhs = Value::Exact(format!("x^{n_max}"));
    report.note(&format!("exact equality for n = 0..={n_max}"));
    report.finish_exact(true)
}

/// Nörlund table against the five listed polynomials, B_n^{(1)} = B_n,
/// odd Bernoulli vanishing, degree and leading term, and the Pascal rule
/// binom(x+1, ℓ+1) = binom(x, ℓ+1) + binom(x, ℓ).
pub fn verify_norlund_table(n_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("norlund-table", 0.0).param("n_max", n_max);
    let table = norlund_table(n_max.max(4));
    let a = |c: &[Rational]| Poly::new(c.to_vec(), "alpha");
    let listed = [
        a(&[int(1)]),
        a(&[int(0), ratio(-1, 2)]),
        a(&[int(0), ratio(-1, 12), ratio(1, 4)]),
        a(&[int(0), int(0), ratio(1, 8), ratio(-1, 8)]),
        a(&[
            int(0),
            ratio(1, 120),
            ratio(1, 48),
            ratio(-1, 8),
            ratio(1, 16),
        ]),
    ];
    let mut failures = Vec::new();
    for (n, p) in listed.iter().enumerate() {
        if table[n] != *p {
            failures.push(format!("listed n={n}"));
        }
    }
    let b = bernoulli_numbers(n_max);
    for n in 0..=n_max as usize {
        let p = &table[n];
        if p.eval(&int(1)) != b[n] {
            failures.push(format!("B_{n}^(1) != B_{n}"));
        }
        if p.degree() != Some(n) {
            failures.push(format!("degree of B_{n}^(alpha)"));
        }
        // leading coefficient (−1/2)^n, the α^n term of (−α/2)^n
        let lead = num_traits::pow(ratio(-1, 2), n);
        if p.leading() != Some(&lead) {
            failures.push(format!("leading term of B_{n}^(alpha)"));
        }
        if n >= 3 && n % 2 == 1 && !b[n].is_zero() {
            failures.push(format!("B_{n} != 0"));
        }
    }
    for ell in 0..=n_max.min(20) {
        let lhs = binom_poly(1, ell + 1);
        let rhs = &binom_poly(0, ell + 1) + &binom_poly(0, ell);
        if lhs != rhs {
            failures.push(format!("Pascal rule at ell={ell}"));
        }
    }
    report.lhs = Value::Exact(format!("{}", table[2]));
    report.rhs = Value::Exact(format!("{}", listed[2]));
    if failures.is_empty() {
        report.note(&format!("all exact checks hold up to n = {n_max}"));
        report.finish_exact(true)
    } else {
        report.residual = failures.len() as f64;
        report.note(&failures.join(", "));
        report.finish_exact(false)
    }
}

/// Derivatives of log(1+bu²) of orders 2ℓ and 2ℓ+1 against the Chebyshev
/// closed forms: exactly (b taken as the exact binary value) and numerically
/// on `u_grid`.
pub fn verify_log_derivative_chebyshev(
    ctx: &VerifyContext,
    ell: u32,
    b: f64,
    u_grid: &[f64],
) -> VerificationReport {
    let report = VerificationReport::new("log-derivative-chebyshev", ctx.tol(1e-9))
        .param("ell", ell)
        .param("b", b)
        .param("u", u_grid);
    match log_derivative_check(ell, b, u_grid, report.clone()) {
        Ok(r) => r,
        Err(e) => report.failed(&e),
    }
}

fn log_derivative_check(
    ell: u32,
    b: f64,
    u_grid: &[f64],
    mut report: VerificationReport,
) -> Result<VerificationReport> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be positive".into()));
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(crate::error::domain("log-derivative-chebyshev", b, "b > 0"));
    }
    let bq = Rational::from_float(b).expect("finite b");
    let u = |c: Vec<Rational>| Poly::new(c, "u");
    let d = u(alloc::vec![int(1), int(0), bq.clone()]);
    let d_prime = d.derivative();

    // (d/du)^n log D = N_n / D^n
    let mut numer = u(alloc::vec![int(0), &bq * int(2)]);
    let mut derivs = alloc::vec![(1u32, numer.clone())];
    for k in 1..(2 * ell + 1) {
        let kk = Rational::from_integer(k.into());
        numer = &(&numer.derivative() * &d) - &(&numer * &d_prime).scale(&kk);
        derivs.push((k + 1, numer.clone()));
    }
    let mut exact_ok = true;
    for (order, kind) in [
        (2 * ell, ChebyshevKind::First),
        (2 * ell + 1, ChebyshevKind::Second),
    ] {
        let n = &derivs[order as usize - 1].1;
        let cheb = chebyshev(kind, 2 * ell);
        // Σ_i c_{2i} D^{ℓ−i}: the Chebyshev factor over the common denominator
        let mut sum = Poly::zero("u");
        for (i, c) in cheb.coeffs().iter().enumerate().step_by(2) {
            let i = (i / 2) as u32;
            sum = &sum + &d.pow(ell - i).scale(c);
        }
        let sign = if (order / 2) % 2 == 1 {
            int(1)
        } else {
            int(-1)
        };
        let (k, extra) = if order % 2 == 0 {
            // 2(−1)^{ℓ−1} b^ℓ (2ℓ−1)! T_{2ℓ}/D^ℓ
            (
                num_traits::pow(bq.clone(), ell as usize)
                    * Rational::from_integer(factorial(2 * ell - 1)),
                Poly::one("u"),
            )
        } else {
            // 2(−1)^ℓ b^{ℓ+1} (2ℓ)! u U_{2ℓ}/D^{ℓ+1}
            (
                num_traits::pow(bq.clone(), ell as usize + 1)
                    * Rational::from_integer(factorial(2 * ell)),
                Poly::identity("u"),
            )
        };
        let sign = if order % 2 == 0 { sign } else { -sign };
        let formula = (&sum * &extra).scale(&(k * int(2) * sign));
        // the formula's denominator is D^{2ℓ} (even) or D^{2ℓ+1} (odd) = D^order
        if formula != *n {
            exact_ok = false;
            report.note(&format!("exact mismatch at order {order}"));
        }
        for &uu in u_grid {
            let dd = 1.0 + b * uu * uu;
            let lhs = n.eval_f64(uu) / libm::pow(dd, order as f64);
            let y = 1.0 / libm::sqrt(dd);
            let poly = chebyshev(kind, 2 * ell).eval_f64(y);
            let kf = k_float(ell, b, order);
            let rhs = if order % 2 == 0 {
                kf / libm::pow(dd, ell as f64) * poly
            } else {
                kf * uu / libm::pow(dd, ell as f64 + 1.0) * poly
            };
            report.compare(lhs, rhs);
        }
    }
    if exact_ok {
        report.note("exact rational-function identity holds for both orders");
    } else {
        report.residual = f64::MAX;
    }
    Ok(report.finish())
}

fn k_float(ell: u32, b: f64, order: u32) -> f64 {
    let f = |n: u32| factorial(n).to_f64().unwrap_or(f64::NAN);
    if order.is_multiple_of(2) {
        let sign = if ell % 2 == 1 { 1.0 } else { -1.0 };
        2.0 * sign * libm::pow(b, ell as f64) * f(2 * ell - 1)
    } else {
        let sign = if ell.is_multiple_of(2) { 1.0 } else { -1.0 };
        2.0 * sign * libm::pow(b, ell as f64 + 1.0) * f(2 * ell)
    }
}

impl VerificationReport {
    pub(crate) fn finish_exact(mut self, ok: bool) -> Self {
        self.passed = ok;
        if ok {
            self.residual = 0.0;
        }
        self
    }
}
