//! Every route to ρ_ℓ(x) behind one interface.

use alloc::vec::Vec;
use core::cell::{Cell, RefCell};
use core::f64::consts::PI;
use core::fmt;
use core::str::FromStr;

use num_traits::ToPrimitive;

use crate::error::{domain, Error, Result};
use crate::exact::factorial;
use crate::hyper::{rho_closed_form_bounded, rho_from_recurrence, CompiledHyper};
use crate::quad::{exp_sinh, fourier_density, QuadConfig};
use crate::special::{barnes_zeta, Complex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DensityMethod {
    /// Airault derivative formula, exact symbolic expression.
    ClosedForm,
    /// Stepped up from ρ₁ or ρ₂ with the second-order recurrence.
    Recurrence,
    /// Fourier inversion of the characteristic function (y/sinh y)^ℓ.
    Fourier,
    /// (ℓ!/π) Re ζ_ℓ(ℓ+1, ℓ/2 + ix) through Hurwitz zetas.
    BarnesZeta,
    /// Iterated convolution ρ_ℓ = ρ_{ℓ−1} ∗ ρ₁ by quadrature (ℓ ≤ 3).
    ConvolutionOracle,
}

impl DensityMethod {
    pub const ALL: [DensityMethod; 5] = [
        DensityMethod::ClosedForm,
        DensityMethod::Recurrence,
        DensityMethod::Fourier,
        DensityMethod::BarnesZeta,
        DensityMethod::ConvolutionOracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DensityMethod::ClosedForm => "closed_form",
            DensityMethod::Recurrence => "recurrence",
            DensityMethod::Fourier => "fourier",
            DensityMethod::BarnesZeta => "barnes_zeta",
            DensityMethod::ConvolutionOracle => "convolution_oracle",
        }
    }

    /// Whether this route is available for `ell`.
    pub fn supports(self, ell: u32) -> bool {
        match self {
            DensityMethod::ConvolutionOracle => (1..=3).contains(&ell),
            _ => ell >= 1,
        }
    }
}

impl fmt::Display for DensityMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DensityMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: alloc::string::String =
            s.chars().map(|c| if c == '-' { '_' } else { c }).collect();
        DensityMethod::ALL
            .into_iter()
            .find(|m| m.as_str() == norm)
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown density method '{s}'")))
    }
}

/// A density value with the quadrature error estimate, when one applies.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityValue {
    pub value: f64,
    pub error_estimate: Option<f64>,
}

/// Precompiled closed forms for `1 ≤ ℓ ≤ ell_max`. Immutable after
/// construction, so one engine can be shared between threads.
#[derive(Clone, Debug)]
pub struct DensityEngine {
    closed: Vec<CompiledHyper>,
    /// `None` where the recurrence output is identical to the closed form
    /// (the compiled closed form is then reused).
    recurrence: Vec<Option<CompiledHyper>>,
    cfg: QuadConfig,
}

impl DensityEngine {
    pub fn new(ell_max: u32) -> Result<Self> {
        if ell_max == 0 {
            return Err(domain("DensityEngine::new", 0.0, "ell_max >= 1"));
        }
        let mut closed = Vec::new();
        let mut recurrence = Vec::new();
        for ell in 1..=ell_max {
            let e = rho_closed_form_bounded(ell, ell_max)?;
            let compiled = CompiledHyper::new(&e);
            let rec = if ell >= 3 {
                let r = rho_from_recurrence(ell)?;
                if r == e {
                    None
                } else {
                    Some(CompiledHyper::new(&r))
                }
            } else {
                None
            };
            closed.push(compiled);
            recurrence.push(rec);
        }
        Ok(DensityEngine {
            closed,
            recurrence,
            cfg: QuadConfig::default(),
        })
    }

    pub fn ell_max(&self) -> u32 {
        self.closed.len() as u32
    }

    pub fn quad_config(&self) -> &QuadConfig {
        &self.cfg
    }

    pub fn with_quad_config(mut self, cfg: QuadConfig) -> Self {
        self.cfg = cfg;
        self
    }

    /// Compiled closed form of ρ_ℓ.
    pub fn compiled(&self, ell: u32) -> Result<&CompiledHyper> {
        if ell == 0 || ell > self.ell_max() {
            return Err(Error::Unsupported {
                method: "closed_form",
                ell,
            });
        }
        Ok(&self.closed[ell as usize - 1])
    }

    /// ρ_ℓ(x) through the closed form.
    pub fn rho(&self, ell: u32, x: f64) -> Result<f64> {
        Ok(self.compiled(ell)?.eval(x))
    }

    pub fn density(&self, ell: u32, x: f64, method: DensityMethod) -> Result<DensityValue> {
        if !method.supports(ell) {
            return Err(Error::Unsupported {
                method: method.as_str(),
                ell,
            });
        }
        if !x.is_finite() {
            return Err(domain("density", x, "finite x"));
        }
        let exact = |value| DensityValue {
            value,
            error_estimate: None,
        };
        match method {
            DensityMethod::ClosedForm => Ok(exact(self.rho(ell, x)?)),
            DensityMethod::Recurrence => {
                if ell < 3 {
                    // the recurrence starts from ρ₁ and ρ₂ themselves
                    return Ok(exact(self.rho(ell, x)?));
                }
                self.compiled(ell)?;
                Ok(exact(match &self.recurrence[ell as usize - 1] {
                    Some(c) => c.eval(x),
                    None => self.closed[ell as usize - 1].eval(x),
                }))
            }
            DensityMethod::Fourier => {
                let r = fourier_density(ell, x, &self.cfg)?;
                Ok(DensityValue {
                    value: r.value,
                    error_estimate: Some(r.error_estimate),
                })
            }
            DensityMethod::BarnesZeta => Ok(exact(barnes_density(ell, x)?)),
            DensityMethod::ConvolutionOracle => {
                let (value, err) = convolution(ell, x, &self.cfg)?;
                Ok(DensityValue {
                    value,
                    error_estimate: Some(err),
                })
            }
        }
    }
}

/// One-shot evaluation without a prebuilt engine.
pub fn density(ell: u32, x: f64, method: DensityMethod) -> Result<f64> {
    match method {
        DensityMethod::ClosedForm | DensityMethod::Recurrence => DensityEngine::new(ell.max(1))?
            .density(ell, x, method)
            .map(|d| d.value),
        DensityMethod::Fourier => Ok(fourier_density(ell, x, &QuadConfig::default())?.value),
        DensityMethod::BarnesZeta => barnes_density(ell, x),
        DensityMethod::ConvolutionOracle => {
            if !method.supports(ell) {
                return Err(Error::Unsupported {
                    method: method.as_str(),
                    ell,
                });
            }
            Ok(convolution(ell, x, &QuadConfig::default())?.0)
        }
    }
}

/// `ζ_ℓ(ℓ+1, ℓ/2 + ix)`; its real part times ℓ!/π is ρ_ℓ(x).
pub fn barnes_pair(ell: u32, x: f64) -> Result<(Complex, Complex)> {
    let w = Complex::new(ell as f64 / 2.0, x);
    Ok((
        barnes_zeta(ell, ell + 1, w)?,
        barnes_zeta(ell, ell + 1, w.conj())?,
    ))
}

fn barnes_density(ell: u32, x: f64) -> Result<f64> {
    if ell == 0 {
        return Err(domain("density", 0.0, "ell >= 1"));
    }
    let (a, b) = barnes_pair(ell, x)?;
    let f = factorial(ell).to_f64().unwrap_or(f64::NAN);
    Ok(f / (2.0 * PI) * (a + b).re)
}

fn sech2_density(x: f64) -> f64 {
    // (π/2) sech²(πx), written to avoid overflow
    let e = libm::exp(-2.0 * PI * x.abs());
    2.0 * PI * e / ((1.0 + e) * (1.0 + e))
}

/// ρ_ℓ(x) = ∫ ρ_{ℓ−1}(u) ρ₁(x−u) du, substituting u = x/2 ± v.
fn convolution(ell: u32, x: f64, cfg: &QuadConfig) -> Result<(f64, f64)> {
    if ell == 1 {
        return Ok((sech2_density(x), 0.0));
    }
    let cfg = cfg.with_cutoff(60.0);
    let inner_err = Cell::new(0.0f64);
    let failure = RefCell::new(None);
    let r = exp_sinh(
        |v| {
            let piece = |u: f64| -> f64 {
                match convolution(ell - 1, u, &cfg) {
                    Ok((val, err)) => {
                        inner_err.set(inner_err.get().max(err));
                        val * sech2_density(x - u)
                    }
                    Err(e) => {
                        failure.borrow_mut().get_or_insert(e);
                        0.0
                    }
                }
            };
            piece(x / 2.0 + v) + piece(x / 2.0 - v)
        },
        0.0,
        &cfg,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok((r.value, r.error_estimate + inner_err.get()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn methods_parse() {
        assert_eq!(
            "closed-form".parse::<DensityMethod>().unwrap(),
            DensityMethod::ClosedForm
        );
        assert_eq!(
            "barnes_zeta".parse::<DensityMethod>().unwrap(),
            DensityMethod::BarnesZeta
        );
        assert!("nope".parse::<DensityMethod>().is_err());
    }

    #[test]
    fn routes_agree_for_small_ell() {
        let engine = DensityEngine::new(3).unwrap();
        for ell in 1..=3 {
            for &x in &[0.0, 0.3, 1.0] {
                let reference = engine.rho(ell, x).unwrap();
                for m in DensityMethod::ALL {
                    let v = engine.density(ell, x, m).unwrap().value;
                    assert!(
                        (v - reference).abs() < 1e-8,
                        "{m} ell={ell} x={x}: {v} vs {reference}"
                    );
                }
            }
        }
    }

    #[test]
    fn convolution_limited_to_three() {
        let engine = DensityEngine::new(4).unwrap();
        assert!(matches!(
            engine.density(4, 0.1, DensityMethod::ConvolutionOracle),
            Err(Error::Unsupported { .. })
        ));
        assert!(engine.density(5, 0.1, DensityMethod::ClosedForm).is_err());
    }
}
