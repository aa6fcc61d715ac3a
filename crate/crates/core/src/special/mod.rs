//! Binary64 special functions: log-gamma, digamma/polygamma, Hurwitz and
//! Barnes zeta, and the derivative expressions built from them.

mod gamma;
mod leibniz;
mod zeta;

pub use gamma::{digamma, ln_gamma, polygamma, EULER_GAMMA};
pub use leibniz::{genfun_modified_norlund, leibniz_derivative, leibniz_rhs};
pub use zeta::{barnes_zeta, hurwitz_zeta, Complex};
