//! Numerical and exact checks of the identities around ρ_ℓ, each producing
//! a [`VerificationReport`].
//!
//! Identity ids are descriptive (`log-moment`, `dde`, …); [`IDENTITY_IDS`]
//! lists them in suite order.

mod analytic;
mod densities;
mod exact_checks;
mod moments;
mod report;
mod suite;

use alloc::borrow::Cow;
use core::cell::OnceCell;

pub use analytic::{
    verify_cosh_fourier_integrals, verify_delta_digamma, verify_digamma_consistency,
    verify_genfun_asymptotic, verify_genfun_closed_forms, verify_integral_i_a, verify_psi_log_pair,
};
pub use densities::{
    verify_barnes_choi, verify_density_cross_validation, verify_density_normalization,
    verify_phi_transform_relation,
};
pub use exact_checks::{
    verify_log_derivative_chebyshev, verify_norlund_table, verify_umbral_inversion,
};
pub use moments::{
    verify_chebyshev_integrals, verify_dde, verify_hurwitz_sums, verify_log_moment,
    verify_log_moment_spot_values, ChebyshevIdentity,
};
pub use report::{ParamValue, Value, VerificationReport};
pub use suite::{run_identity, run_suite, Overrides, IDENTITY_IDS};

use crate::density::DensityEngine;
use crate::error::Result;
use crate::hyper::{rho_closed_form, CompiledHyper};
use crate::quad::QuadConfig;

/// Largest ℓ compiled up front by the shared engine.
pub const ENGINE_ELL_MAX: u32 = 6;

/// Shared state of a verification run: tolerance scaling, quadrature
/// settings, and a lazily built density engine.
#[derive(Debug)]
pub struct VerifyContext {
    tolerance_scale: f64,
    quad: QuadConfig,
    engine: OnceCell<DensityEngine>,
}

impl Default for VerifyContext {
    fn default() -> Self {
        VerifyContext::new(1.0)
    }
}

impl VerifyContext {
    /// `tolerance_scale` multiplies every tolerance.
    pub fn new(tolerance_scale: f64) -> Self {
        VerifyContext {
            tolerance_scale,
            quad: QuadConfig::default(),
            engine: OnceCell::new(),
        }
    }

    pub fn tolerance_scale(&self) -> f64 {
        self.tolerance_scale
    }

    pub fn quad(&self) -> &QuadConfig {
        &self.quad
    }

    pub fn tol(&self, base: f64) -> f64 {
        base * self.tolerance_scale
    }

    pub fn engine(&self) -> Result<&DensityEngine> {
        if let Some(e) = self.engine.get() {
            return Ok(e);
        }
        let e = DensityEngine::new(ENGINE_ELL_MAX)?.with_quad_config(self.quad);
        Ok(self.engine.get_or_init(|| e))
    }

    /// Compiled closed form of ρ_ℓ, from the engine when it covers `ell`.
    pub fn compiled(&self, ell: u32) -> Result<Cow<'_, CompiledHyper>> {
        if (1..=ENGINE_ELL_MAX).contains(&ell) {
            Ok(Cow::Borrowed(self.engine()?.compiled(ell)?))
        } else {
            Ok(Cow::Owned(CompiledHyper::new(&rho_closed_form(ell)?)))
        }
    }
}
