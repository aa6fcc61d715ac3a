//! Double-exponential quadrature with error estimates.

mod de;
mod integrals;

pub use de::{exp_sinh, integrate_semi_infinite, tanh_sinh};
pub use integrals::{
    fourier_density, log_moment, log_moment_with, moment_fraction_integrals,
    moment_fraction_integrals_with, sech_kernel_ratio,
};

/// How the integrand behaves as `u → ∞`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TailMode {
    /// Decays at least exponentially; abscissas beyond `tail_cutoff` are dropped.
    Exponential,
    /// Decays like `u^{−power}` (`power > 1`), possibly times logarithms.
    Algebraic(f64),
    /// Contains a factor oscillating with angular frequency `frequency`.
    Oscillatory(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// At most 16.
    pub max_levels: u32,
    pub tail_cutoff: f64,
    pub tail_mode: TailMode,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            abs_tol: 1e-13,
            rel_tol: 1e-13,
            max_levels: 12,
            tail_cutoff: 1e3,
            tail_mode: TailMode::Exponential,
        }
    }
}

impl QuadConfig {
    pub fn with_tail(mut self, mode: TailMode) -> Self {
        self.tail_mode = mode;
        self
    }

    pub fn with_cutoff(mut self, cutoff: f64) -> Self {
        self.tail_cutoff = cutoff;
        self
    }

    pub fn with_tol(mut self, abs_tol: f64, rel_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self.rel_tol = rel_tol;
        self
    }

    pub(crate) fn target(&self, value: f64) -> f64 {
        f64::max(self.abs_tol, self.rel_tol * value.abs())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadResult {
    pub(crate) fn zero() -> Self {
        QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
            converged: true,
        }
    }

    /// Sum of two independent pieces of one integral.
    pub(crate) fn combine(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }
}
