//! Exact scalars in ℚ[π, π⁻¹].

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::poly::Coefficient;
use super::Rational;

/// Laurent polynomial in π with rational coefficients, `Σ r_k π^k`.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality (π is transcendental).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PiScalar {
    terms: BTreeMap<i32, Rational>,
}

impl PiScalar {
    pub fn rational(r: Rational) -> Self {
        Self::term(r, 0)
    }

    /// `r · π^k`.
    pub fn term(r: Rational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(k, r);
        }
        PiScalar { terms }
    }

    pub fn pi_pow(k: i32) -> Self {
        Self::term(Rational::one(), k)
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::rational(Rational::new(n.into(), d.into()))
    }

    /// Multiplies by `π^k`.
    pub fn mul_pi_pow(&self, k: i32) -> Self {
        PiScalar {
            terms: self.terms.iter().map(|(p, r)| (p + k, r.clone())).collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(k, r)| (*k, r))
    }

    /// Nearest binary64 value.
    ///
    /// A single term is rounded directly. Several terms can cancel heavily,
    /// so they are summed exactly against a 75-digit rational π first.
    pub fn to_f64(&self) -> f64 {
        match self.terms.len() {
            0 => 0.0,
            1 => {
                let (&k, r) = self.terms.iter().next().unwrap();
                r.to_f64().unwrap_or(f64::NAN) * pi_powi(k)
            }
            _ => {
                let pi = pi_rational();
                let inv = pi.recip();
                let mut total = Rational::zero();
                for (&k, r) in &self.terms {
                    let base = if k < 0 { &inv } else { &pi };
                    let mut p = Rational::one();
                    for _ in 0..k.unsigned_abs() {
                        p *= base;
                    }
                    total += r * p;
                }
                total.to_f64().unwrap_or(f64::NAN)
            }
        }
    }

    /// Returns the rational value if no π power other than π⁰ occurs.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn insert_add(&mut self, k: i32, r: Rational) {
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += r;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }
}

const PI_DIGITS: &str =
    "3141592653589793238462643383279502884197169399375105820974944592307816406286";

fn pi_rational() -> Rational {
    let num: num_bigint::BigInt = PI_DIGITS.parse().expect("digit string");
    let den = num_bigint::BigInt::from(10u32).pow((PI_DIGITS.len() - 1) as u32);
    Rational::new(num, den)
}

pub(crate) fn pi_powi(k: i32) -> f64 {
    num_traits::Float::powi(core::f64::consts::PI, k)
}

impl Zero for PiScalar {
    fn zero() -> Self {
        PiScalar::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PiScalar {
    fn one() -> Self {
        PiScalar::pi_pow(0)
    }
}

impl Add for PiScalar {
    type Output = PiScalar;

    fn add(mut self, rhs: Self) -> PiScalar {
        for (k, r) in rhs.terms {
            self.insert_add(k, r);
        }
        self
    }
}

impl Sub for PiScalar {
    type Output = PiScalar;

    fn sub(self, rhs: Self) -> PiScalar {
        self + (-rhs)
    }
}

impl Neg for PiScalar {
    type Output = PiScalar;

    fn neg(self) -> PiScalar {
        PiScalar {
            terms: self.terms.into_iter().map(|(k, r)| (k, -r)).collect(),
        }
    }
}

impl Mul for PiScalar {
    type Output = PiScalar;

    fn mul(self, rhs: Self) -> PiScalar {
        let mut out = PiScalar::zero();
        for (a, ra) in &self.terms {
            for (b, rb) in &rhs.terms {
                out.insert_add(a + b, ra * rb);
            }
        }
        out
    }
}

impl Coefficient for PiScalar {
    fn from_rational(r: Rational) -> Self {
        PiScalar::rational(r)
    }

    fn is_negative(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(num_traits::Signed::is_negative)
    }

    fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for PiScalar {
    /// Ascending π powers, every power explicit: `1/2*pi^1`, `1*pi^0 + 1/4*pi^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, r)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{r}*pi^{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let a = PiScalar::from_ratio(1, 2).mul_pi_pow(2);
        let b = a.clone() - a;
        assert!(b.is_zero());
    }

    #[test]
    fn laurent_product() {
        // (π + π⁻¹)² = π² + 2 + π⁻²
        let a = PiScalar::pi_pow(1) + PiScalar::pi_pow(-1);
        let sq = a.clone() * a;
        assert_eq!(sq.terms().count(), 3);
        assert_eq!(sq.as_rational(), None);
        let pi = core::f64::consts::PI;
        assert!((sq.to_f64() - (pi * pi + 2.0 + 1.0 / (pi * pi))).abs() < 1e-13);
    }
}
