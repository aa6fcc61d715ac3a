//! Symbolic algebra for functions of the form Σ_k c_k(πx) tanh(πx)^k.
//!
//! Coefficients are polynomials in `s = πx` over ℚ[π, π⁻¹], so every
//! derivative of a density stays exact until numeric evaluation.

mod eval;
mod expr;
mod rho;

pub use eval::{eval_hyper, eval_naive, CompiledHyper};
pub use expr::{HyperExpr, SPoly};
pub use rho::{rho_closed_form, rho_closed_form_bounded, rho_from_recurrence, DEFAULT_ELL_MAX};
