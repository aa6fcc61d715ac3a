//! Cancellation-free numeric evaluation of [`HyperExpr`].
//!
//! Two exact re-expansions are prepared once per expression:
//!
//! * near `s = 0`, the Laurent series in `s` obtained from
//!   `tanh s = s·T(s²)`; negative powers cancel exactly for expressions
//!   with only removable singularities;
//! * elsewhere, the expansion in `q = e^{−2|s|}` from
//!   `tanh s = ±(1−q)/(1+q)`, whose coefficients are polynomials in `s`.
//!   Any exact cancellation of the leading behaviour (exponential decay)
//!   happens symbolically.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Zero;

use super::expr::{spoly_eval_f64, HyperExpr};
use crate::exact::{horner, series, PiScalar, Rational};

/// Candidate truncation orders of the Laurent series, tried in turn.
const SERIES_ORDERS: [usize; 3] = [64, 128, 192];
/// Maximal number of q-terms.
const Q_TERMS: usize = 200;

/// A [`HyperExpr`] prepared for fast, accurate repeated evaluation.
#[derive(Clone, Debug)]
pub struct CompiledHyper {
    expr: HyperExpr,
    /// Coefficients of s⁰, s¹, …, or `None` if a genuine pole at 0.
    series: Option<Vec<f64>>,
    /// q-expansion coefficients split by parity of the t-power.
    q_even: Vec<Vec<f64>>,
    q_odd: Vec<Vec<f64>>,
    max_power: i32,
    /// |s| below which the Laurent series is used.
    switch: f64,
}

impl CompiledHyper {
    pub fn new(expr: &HyperExpr) -> Self {
        let max_power = expr
            .t_range()
            .map(|(lo, hi)| lo.abs().max(hi.abs()))
            .unwrap_or(0);
        let mut series = None;
        let mut switch = 1.0;
        for order in SERIES_ORDERS {
            series = laurent_series(expr, order);
            match &series {
                None => break,
                Some(c) => {
                    if let Some(r) = switch_radius(c, max_power) {
                        switch = r;
                        break;
                    }
                }
            }
        }
        let (q_even, q_odd) = q_expansion(expr, max_power, q_terms_needed(switch, max_power));
        CompiledHyper {
            expr: expr.clone(),
            series,
            q_even,
            q_odd,
            max_power,
            switch,
        }
    }

    pub fn expr(&self) -> &HyperExpr {
        &self.expr
    }

    /// False if the expression has a genuine pole at `x = 0`.
    pub fn is_regular_at_zero(&self) -> bool {
        self.series.is_some()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let s = PI * x;
        if !s.is_finite() {
            return self.eval_q(s);
        }
        if s.abs() < self.switch {
            match &self.series {
                Some(c) => horner(c, s),
                None => self.expr.eval_direct(x),
            }
        } else {
            self.eval_q(s)
        }
    }

    fn eval_q(&self, s: f64) -> f64 {
        let q = libm::exp(-2.0 * s.abs());
        let odd_sign = if s < 0.0 { -1.0 } else { 1.0 };
        let k = self.max_power.max(1) as f64;
        let mut total = 0.0;
        let mut qn = 1.0;
        for n in 0..self.q_even.len() {
            if n > 1 {
                let bound = qn / q * libm::pow(n as f64 + 1.0, k);
                if bound < 1e-18 {
                    break;
                }
            }
            let d = horner(&self.q_even[n], s) + odd_sign * horner(&self.q_odd[n], s);
            total += d * qn;
            qn *= q;
            if qn == 0.0 {
                break;
            }
        }
        total
    }
}

/// Numeric value of `e` at `x`. Compiles on every call; use
/// [`CompiledHyper`] for repeated evaluation.
pub fn eval_hyper(e: &HyperExpr, x: f64) -> f64 {
    CompiledHyper::new(e).eval(x)
}

/// Where to hand over from the s-series to the q-expansion.
///
/// The q-expansion loses about log10 max_n (n+1)^K q^n digits to
/// cancellation, so it is only used once that factor is small; the series
/// is kept up to there provided its truncated tail is still negligible.
/// `None` if even `|s| = 1` is beyond the series' reach at this order.
fn switch_radius(series: &[f64], max_power: i32) -> Option<f64> {
    let k = max_power.max(1) as f64;
    let q_loss = |s: f64| {
        let q = libm::exp(-2.0 * s);
        (0..Q_TERMS)
            .map(|n| libm::pow(n as f64 + 1.0, k) * libm::pow(q, n as f64))
            .fold(0.0, f64::max)
    };
    let series_ok = |s: f64| {
        let abs_sum: f64 = series
            .iter()
            .enumerate()
            .map(|(n, a)| (a * libm::pow(s, n as i32 as f64)).abs())
            .sum();
        let n = series.len();
        series[n - 8..]
            .iter()
            .enumerate()
            .all(|(i, a)| (a * libm::pow(s, (n - 8 + i) as f64)).abs() <= 1e-18 * abs_sum)
    };
    if !series_ok(1.0) {
        return None;
    }
    let mut r = 1.0;
    while q_loss(r) > 10.0 && series_ok(r + 0.125) && r < 8.0 {
        r += 0.125;
    }
    Some(r)
}

/// Number of q-terms so that the neglected part is below 1e−20 at the
/// switch radius.
fn q_terms_needed(switch: f64, max_power: i32) -> usize {
    let k = max_power.max(1) as f64;
    let lq = -2.0 * switch;
    (4..Q_TERMS)
        .find(|&n| (n as f64) * lq + k * libm::log(n as f64 + 1.0) < -46.0)
        .unwrap_or(Q_TERMS)
}

fn laurent_series(expr: &HyperExpr, order: usize) -> Option<Vec<f64>> {
    let (kmin, kmax) = match expr.t_range() {
        Some(r) => r,
        None => return Some(vec![0.0]),
    };
    // All series below are in u = s²; T(u) = tanh(s)/s.
    let shift = (-kmin).max(0) as usize;
    let len_u = (order + shift) / 2 + 1;
    let t_full = series::tanh_over_s(2 * len_u);
    let t_u: Vec<Rational> = t_full.into_iter().step_by(2).collect();
    let t_inv = series::inverse(&t_u, len_u);

    let offset = shift as i64;
    let width = order + shift + 1;
    let mut acc: Vec<PiScalar> = vec![PiScalar::zero(); width];

    // T^k for kmin ≤ k ≤ kmax, built incrementally from T^0.
    let mut unit = vec![Rational::zero(); len_u];
    unit[0] = Rational::from_integer(1.into());
    let mut powers: alloc::collections::BTreeMap<i32, Vec<Rational>> = Default::default();
    let mut up = unit.clone();
    for k in 0..=kmax.max(0) {
        if k > 0 {
            up = series::mul(&up, &t_u, len_u);
        }
        if k >= kmin {
            powers.insert(k, up.clone());
        }
    }
    let mut down = unit;
    for k in 1..=(-kmin).max(0) {
        down = series::mul(&down, &t_inv, len_u);
        if -k <= kmax {
            powers.insert(-k, down.clone());
        }
    }

    for k in kmin..=kmax {
        let c = match expr.coefficient(k) {
            Some(c) => c,
            None => continue,
        };
        let tk = &powers[&k];
        for (d, a) in c.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, r) in tk.iter().enumerate() {
                let e = d as i64 + k as i64 + 2 * m as i64 + offset;
                if e < 0 || e as usize >= width {
                    if e >= width as i64 {
                        break;
                    }
                    continue;
                }
                if r.is_zero() {
                    continue;
                }
                let slot = &mut acc[e as usize];
                *slot = core::mem::take(slot) + a.clone() * PiScalar::rational(r.clone());
            }
        }
    }

    if acc[..shift].iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(acc[shift..].iter().map(PiScalar::to_f64).collect())
}

fn q_expansion(expr: &HyperExpr, max_power: i32, n_terms: usize) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let degree = expr
        .terms()
        .map(|(_, c)| c.coeffs().len())
        .max()
        .unwrap_or(0);
    let mut even = vec![vec![PiScalar::zero(); degree]; n_terms];
    let mut odd = vec![vec![PiScalar::zero(); degree]; n_terms];

    let one = Rational::from_integer(1.into());
    let mut unit = vec![Rational::zero(); n_terms];
    unit[0] = one;
    let mut up = unit.clone(); // ((1−q)/(1+q))^k, k ≥ 0
    let mut down = unit; // ((1+q)/(1−q))^k
    for k in 0..=max_power {
        for (sign, coeffs) in [(1i32, &up), (-1i32, &down)] {
            let kk = sign * k;
            if sign < 0 && k == 0 {
                continue;
            }
            let c = match expr.coefficient(kk) {
                Some(c) => c,
                None => continue,
            };
            let target = if kk.rem_euclid(2) == 0 {
                &mut even
            } else {
                &mut odd
            };
            for (n, e) in coeffs.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let e = PiScalar::rational(e.clone());
                for (d, a) in c.coeffs().iter().enumerate() {
                    let slot = &mut target[n][d];
                    *slot = core::mem::take(slot) + a.clone() * e.clone();
                }
            }
        }
        up = times_ratio(&up, -1);
        down = times_ratio(&down, 1);
    }
    let to_f64 = |v: Vec<Vec<PiScalar>>| -> Vec<Vec<f64>> {
        v.into_iter()
            .map(|p| p.iter().map(PiScalar::to_f64).collect())
            .collect()
    };
    (to_f64(even), to_f64(odd))
}

/// Multiplies a q-series by `(1−q)/(1+q)` (`sign = −1`) or `(1+q)/(1−q)`
/// (`sign = +1`). Both factors are `1 + 2Σ_{j≥1} (sign)^j q^j`.
fn times_ratio(f: &[Rational], sign: i32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(f.len());
    // running Σ_{j≤n} sign^{n−j} f_j
    let mut run = Rational::zero();
    for fn_ in f {
        run = if sign < 0 { fn_ - &run } else { fn_ + &run };
        out.push(&run * Rational::from_integer(2.into()) - fn_);
    }
    out
}

/// Reference value of `e` at `x` via the raw t-expansion; used by tests.
#[doc(hidden)]
pub fn eval_naive(e: &HyperExpr, x: f64) -> f64 {
    e.terms()
        .map(|(k, c)| {
            let s = PI * x;
            spoly_eval_f64(c, s) * num_traits::Float::powi(libm::tanh(s), k)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::rho_closed_form;

    #[test]
    fn ratio_multiplication() {
        let mut f = vec![Rational::zero(); 6];
        f[0] = Rational::from_integer(1.into());
        let g = times_ratio(&f, -1);
        let back = times_ratio(&g, 1);
        assert_eq!(back, f);
        let expect = [1, -2, 2, -2, 2, -2];
        for (a, b) in g.iter().zip(expect) {
            assert_eq!(*a, Rational::from_integer(b.into()));
        }
    }

    #[test]
    fn origin_values() {
        let r1 = CompiledHyper::new(&rho_closed_form(1).unwrap());
        assert!((r1.eval(0.0) - PI / 2.0).abs() < 1e-15);
        let r2 = CompiledHyper::new(&rho_closed_form(2).unwrap());
        assert!(r2.is_regular_at_zero());
        assert!((r2.eval(0.0) - PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn tail_decays() {
        let r1 = CompiledHyper::new(&rho_closed_form(1).unwrap());
        let v = r1.eval(10.0);
        let expected = 2.0 * PI * libm::exp(-20.0 * PI);
        assert!(v < 1e-20 && ((v - expected) / expected).abs() < 1e-12);
    }

    #[test]
    fn agrees_with_direct_sum_at_moderate_x() {
        for ell in 1..=6 {
            let e = rho_closed_form(ell).unwrap();
            let c = CompiledHyper::new(&e);
            for &x in &[0.2, 0.3, 0.35, 0.5] {
                let a = c.eval(x);
                let b = e.eval_direct(x);
                assert!((a - b).abs() < 1e-9, "ell={ell} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn pole_is_detected() {
        let c = CompiledHyper::new(&HyperExpr::t_pow(-1));
        assert!(!c.is_regular_at_zero());
        let x = 0.1;
        assert!((c.eval(x) - 1.0 / libm::tanh(PI * x)).abs() < 1e-12);
    }
}
