//! The registry of identity ids and the default parameter grids.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::analytic::*;
use super::densities::*;
use super::exact_checks::*;
use super::moments::*;
use super::report::VerificationReport;
use super::VerifyContext;
use crate::error::{Error, Result};

/// All identity ids, in suite order.
pub const IDENTITY_IDS: [&str; 19] = [
    "umbral-inversion",
    "norlund-table",
    "psi-log-pair",
    "digamma-consistency",
    "cosh-fourier-integrals",
    "delta-digamma",
    "log-moment",
    "log-moment-spot-values",
    "genfun-asymptotic",
    "genfun-closed-forms",
    "density-cross-validation",
    "density-normalization",
    "phi-transform-relation",
    "barnes-choi",
    "dde",
    "integral-I-a",
    "log-derivative-chebyshev",
    "chebyshev-integrals",
    "hurwitz-sums",
];

/// Parameter overrides for [`run_identity`]. Unset fields keep the defaults;
/// fields an identity does not use are ignored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overrides {
    pub ell: Option<u32>,
    pub x: Option<Vec<f64>>,
    pub n: Option<u32>,
    pub p: Option<i64>,
    pub identity: Option<ChebyshevIdentity>,
    pub a: Option<Vec<f64>>,
    pub b: Option<f64>,
    pub z: Option<Vec<f64>>,
}

impl Overrides {
    fn ells(&self, default: &[u32]) -> Vec<u32> {
        match self.ell {
            Some(l) => vec![l],
            None => default.to_vec(),
        }
    }

    fn xs(&self, default: impl Into<Vec<f64>>) -> Vec<f64> {
        self.x.clone().unwrap_or_else(|| default.into())
    }
}

/// Every identity with its default grid, in [`IDENTITY_IDS`] order.
pub fn run_suite(ctx: &VerifyContext) -> Vec<VerificationReport> {
    let none = Overrides::default();
    IDENTITY_IDS
        .iter()
        .flat_map(|id| run_identity(ctx, id, &none).expect("registered id"))
        .collect()
}

/// Runs one identity; families (several ℓ or variants) give several reports.
///
/// # Errors
/// [`Error::InvalidArgument`] for an unknown id. Failures inside a check
/// are reported as failed reports, not errors.
pub fn run_identity(
    ctx: &VerifyContext,
    id: &str,
    o: &Overrides,
) -> Result<Vec<VerificationReport>> {
    let reports = match id {
        "umbral-inversion" => vec![verify_umbral_inversion(o.n.unwrap_or(20))],
        "norlund-table" => vec![verify_norlund_table(o.n.unwrap_or(30))],
        "psi-log-pair" => vec![verify_psi_log_pair(ctx, &o.xs([1.0, 2.0, 3.7]))],
        "digamma-consistency" => vec![verify_digamma_consistency(ctx, &o.xs([1.0, 2.0, 3.0, 3.7]))],
        "cosh-fourier-integrals" => vec![verify_cosh_fourier_integrals(ctx)],
        "delta-digamma" => o
            .ells(&[1, 2, 3, 4, 5])
            .into_iter()
            .map(|l| verify_delta_digamma(ctx, l, o.p, &o.xs([1.2, 2.5, 7.3])))
            .collect(),
        "log-moment" => o
            .ells(&[1, 2, 3, 4, 5])
            .into_iter()
            .map(|l| {
                let l_f = f64::from(l);
                verify_log_moment(
                    ctx,
                    l,
                    &o.xs([l_f + 0.5, l_f + 1.0, l_f + 3.0, 2.0 * l_f + 4.0]),
                )
            })
            .collect(),
        "log-moment-spot-values" => vec![verify_log_moment_spot_values(ctx)],
        "genfun-asymptotic" => {
            let zs = o.z.clone().unwrap_or_else(|| GENFUN_Z_LIST.to_vec());
            let cases = match (o.ell, o.n) {
                (None, None) => vec![(1, 6), (2, 6), (3, 4)],
                (l, n) => vec![(l.unwrap_or(1), n.unwrap_or(6))],
            };
            cases
                .into_iter()
                .map(|(l, n)| verify_genfun_asymptotic(ctx, l, n, &zs))
                .collect()
        }
        "genfun-closed-forms" => {
            let z = o.z.as_ref().and_then(|z| z.first().copied()).unwrap_or(0.1);
            vec![verify_genfun_closed_forms(ctx, z)]
        }
        "density-cross-validation" => o
            .ells(&[1, 2, 3, 4, 5, 6])
            .into_iter()
            .map(|l| verify_density_cross_validation(ctx, &[l], &o.xs([0.0, 0.25, 0.5, 1.0, 2.0])))
            .collect(),
        "density-normalization" => vec![verify_density_normalization(
            ctx,
            &o.ells(&[1, 2, 3, 4, 5, 6]),
        )],
        "phi-transform-relation" => {
            let cases = match (o.ell, &o.x) {
                (None, None) => vec![(1, 0.0), (2, 1.0), (3, 0.5)],
                (l, xs) => {
                    let l = l.unwrap_or(1);
                    xs.clone()
                        .unwrap_or_else(|| vec![0.5])
                        .into_iter()
                        .map(|x| (l, x))
                        .collect()
                }
            };
            vec![verify_phi_transform_relation(ctx, &cases)]
        }
        "barnes-choi" => vec![verify_barnes_choi(ctx, &o.ells(&[2, 3]))],
        "dde" => o
            .ells(&[1, 2, 3])
            .into_iter()
            .map(|l| {
                let l_f = f64::from(l);
                verify_dde(ctx, l, &o.xs([l_f + 1.0, l_f + 2.0, l_f + 4.0]))
            })
            .collect(),
        "integral-I-a" => {
            let a = o.a.clone().unwrap_or_else(|| vec![0.1, 1.0 / PI, 1.0, 5.0]);
            vec![verify_integral_i_a(ctx, &a)]
        }
        "log-derivative-chebyshev" => o
            .ells(&[1, 2, 3, 4])
            .into_iter()
            .map(|l| {
                verify_log_derivative_chebyshev(ctx, l, o.b.unwrap_or(0.7), &[0.0, 0.3, 1.0, 2.5])
            })
            .collect(),
        "chebyshev-integrals" => {
            let kinds = match o.identity {
                Some(k) => vec![k],
                None => vec![ChebyshevIdentity::First, ChebyshevIdentity::Second],
            };
            let mut out = Vec::new();
            for l in o.ells(&[1, 2]) {
                for &k in &kinds {
                    let l_f = f64::from(l);
                    out.push(verify_chebyshev_integrals(
                        ctx,
                        l,
                        k,
                        &o.xs([l_f + 2.0, l_f + 3.0]),
                    ));
                }
            }
            out
        }
        "hurwitz-sums" => {
            let cases = match (o.ell, o.identity) {
                (None, None) => vec![
                    (1, ChebyshevIdentity::First),
                    (1, ChebyshevIdentity::Second),
                    (2, ChebyshevIdentity::First),
                ],
                (l, k) => vec![(l.unwrap_or(1), k.unwrap_or(ChebyshevIdentity::First))],
            };
            cases
                .into_iter()
                .map(|(l, k)| verify_hurwitz_sums(ctx, l, k, &o.xs([f64::from(l) + 2.0])))
                .collect()
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown identity id '{other}'"
            )))
        }
    };
    Ok(reports)
}
