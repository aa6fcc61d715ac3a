//! Dense univariate polynomials over an exact coefficient ring.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Operations a coefficient ring must provide for [`Poly`].
pub trait Coefficient:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + fmt::Display
{
    /// Embeds a rational number into the ring.
    fn from_rational(r: Rational) -> Self;

    /// Used only for pretty-printing signs.
    fn is_negative(&self) -> bool {
        false
    }

    /// True when printing needs parentheses around the coefficient.
    fn is_compound(&self) -> bool {
        false
    }
}

impl Coefficient for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Dense polynomial `Σ coeffs[k] · var^k`.
///
/// Trailing zero coefficients are never stored; the zero polynomial has an
/// empty coefficient vector. The variable name is informational and ignored
/// by equality.
#[derive(Clone, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
    var: &'static str,
}

impl<C: Coefficient> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<C: Coefficient + Eq> Eq for Poly<C> {}

impl<C: Coefficient> Poly<C> {
    pub fn new(mut coeffs: Vec<C>, var: &'static str) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn zero(var: &'static str) -> Self {
        Poly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn constant(c: C, var: &'static str) -> Self {
        Self::new(vec![c], var)
    }

    pub fn one(var: &'static str) -> Self {
        Self::constant(C::one(), var)
    }

    /// The polynomial `var` itself.
    pub fn identity(var: &'static str) -> Self {
        Self::new(vec![C::zero(), C::one()], var)
    }

    pub fn monomial(c: C, degree: usize, var: &'static str) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs, var)
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn with_var(mut self, var: &'static str) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `var^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            self.var,
        )
    }

    /// Multiplies by `var^k`.
    pub fn shift_degree(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.var)
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| C::from_rational(Rational::from_integer(k.into())) * c.clone())
            .collect();
        Self::new(coeffs, self.var)
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            let inv = Rational::new(1.into(), (k as u64 + 1).into());
            coeffs.push(C::from_rational(inv) * c.clone());
        }
        Self::new(coeffs, self.var)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.var), |acc, _| &acc * self)
    }

    /// `self(inner(var))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.var), |acc, c| {
                &(&acc * inner) + &Self::constant(c.clone(), self.var)
            })
    }

    /// `self(var + c)`.
    pub fn translate(&self, c: &C) -> Self {
        self.compose(&Self::new(vec![c.clone(), C::one()], self.var))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect(), self.var)
    }
}

impl Poly<Rational> {
    /// Coefficients rounded to binary64.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        horner(&self.to_f64_coeffs(), x)
    }
}

/// Horner evaluation of `Σ coeffs[k] x^k`.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

impl<C: Coefficient> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: Self) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::new(coeffs, self.var)
    }
}

impl<C: Coefficient> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: Self) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(coeffs, self.var)
    }
}

impl<C: Coefficient> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: Self) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs, self.var)
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect(), self.var)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Self) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    /// Highest degree first, e.g. `x^2 - x + 1/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude.is_one();
            if k == 0 || !unit {
                if magnitude.is_compound() {
                    write!(f, "({magnitude})")?;
                } else {
                    write!(f, "{magnitude}")?;
                }
                if k > 0 {
                    f.write_str("*")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str(self.var)?,
                _ => write!(f, "{}^{}", self.var, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn p(cs: &[(i64, i64)]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&(n, d)| q(n, d)).collect(), "x")
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = p(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(a.degree(), Some(0));
        assert_eq!(p(&[(0, 1)]).degree(), None);
    }

    #[test]
    fn display_matches_conventional_form() {
        assert_eq!(p(&[(1, 6), (-1, 1), (1, 1)]).to_string(), "x^2 - x + 1/6");
        assert_eq!(
            p(&[(0, 1), (-1, 12), (1, 4)]).to_string(),
            "1/4*x^2 - 1/12*x"
        );
        assert_eq!(Poly::<Rational>::zero("x").to_string(), "0");
    }

    #[test]
    fn translate_and_compose() {
        // (x+1)^2 = x^2 + 2x + 1
        let sq = p(&[(0, 1), (0, 1), (1, 1)]);
        assert_eq!(sq.translate(&q(1, 1)), p(&[(1, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn derivative_and_antiderivative_invert() {
        let a = p(&[(3, 2), (-1, 3), (5, 7), (2, 1)]);
        assert_eq!(a.antiderivative().derivative(), a);
        assert_eq!(a.nth_derivative(4), Poly::zero("x"));
    }
}
