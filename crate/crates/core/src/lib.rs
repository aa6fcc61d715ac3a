//! Nörlund polynomials and their Zagier-style modification, the ℓ-fold
//! convolutions ρ_ℓ of the squared hyperbolic secant density, and numerical
//! machinery to check the integral and generating-function identities that
//! connect them.
//!
//! The crate is `no_std` and needs only `alloc`. It is split into:
//!
//! * [`exact`]: rational arithmetic, polynomials, Bernoulli / Nörlund /
//!   Stirling / Chebyshev families and finite differences.
//! * [`special`]: digamma, polygamma, Hurwitz and Barnes zeta, and the
//!   Leibniz-expanded derivative that closes the log-moment formula.
//! * [`hyper`]: a symbolic algebra in `t = tanh(πx)` used to build the
//!   densities in closed form.
//! * [`quad`]: double-exponential quadrature with error estimates.
//! * [`density`]: one facade over every route to ρ_ℓ.
//! * [`verify`]: one checker per identity, each producing a
//!   [`verify::VerificationReport`].
#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod density;
pub mod error;
pub mod exact;
pub mod hyper;
pub mod quad;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
