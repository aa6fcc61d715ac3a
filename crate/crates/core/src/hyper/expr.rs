use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::exact::{PiScalar, Poly, Rational};

/// Polynomial in `s` with coefficients in ℚ[π, π⁻¹].
pub type SPoly = Poly<PiScalar>;

/// Laurent polynomial in `t = tanh(s)`, `s = πx`, with [`SPoly`] coefficients.
///
/// The value at `x` is `Σ_k c_k(πx) · tanh(πx)^k`. Zero coefficient
/// polynomials are never stored, so structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HyperExpr {
    terms: BTreeMap<i32, SPoly>,
}

impl HyperExpr {
    pub fn zero() -> Self {
        HyperExpr::default()
    }

    /// `c(s) · t^k`.
    pub fn term(k: i32, c: SPoly) -> Self {
        let mut e = HyperExpr::zero();
        e.add_term(k, c);
        e
    }

    pub fn constant(c: PiScalar) -> Self {
        Self::term(0, SPoly::constant(c, "s"))
    }

    /// `t^k`.
    pub fn t_pow(k: i32) -> Self {
        Self::term(k, SPoly::one("s"))
    }

    /// The variable `s = πx`.
    pub fn s() -> Self {
        Self::term(0, SPoly::identity("s"))
    }

    /// The variable `x = s/π`.
    pub fn x() -> Self {
        Self::s().scale(&PiScalar::pi_pow(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &SPoly)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, k: i32) -> Option<&SPoly> {
        self.terms.get(&k)
    }

    fn add_term(&mut self, k: i32, c: SPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&k) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum.with_var("s"));
        }
    }

    pub fn scale(&self, c: &PiScalar) -> Self {
        let mut out = HyperExpr::zero();
        for (&k, p) in &self.terms {
            out.add_term(k, p.scale(c));
        }
        out
    }

    /// Multiplies every coefficient by the polynomial `p(s)`.
    pub fn mul_spoly(&self, p: &SPoly) -> Self {
        let mut out = HyperExpr::zero();
        for (&k, c) in &self.terms {
            out.add_term(k, c * p);
        }
        out
    }

    /// Exact d/dx, using ds/dx = π and dt/ds = 1 − t².
    pub fn derivative(&self) -> Self {
        let mut out = HyperExpr::zero();
        for (&k, c) in &self.terms {
            out.add_term(k, c.derivative());
            if k != 0 {
                let kc = c.scale(&PiScalar::rational(Rational::from_integer(k.into())));
                out.add_term(k - 1, kc.clone());
                out.add_term(k + 1, -kc);
            }
        }
        out.scale(&PiScalar::pi_pow(1))
    }

    /// The `order`-th x-derivative.
    pub fn differentiate(&self, order: u32) -> Self {
        (0..order).fold(self.clone(), |e, _| e.derivative())
    }

    /// Numeric value by direct summation. Accurate away from `x = 0`
    /// (negative t-powers) and away from the tails (cancellation);
    /// [`super::CompiledHyper`] is the robust evaluator.
    pub fn eval_direct(&self, x: f64) -> f64 {
        let s = core::f64::consts::PI * x;
        let t = libm::tanh(s);
        self.terms
            .iter()
            .map(|(&k, c)| spoly_eval_f64(c, s) * num_traits::Float::powi(t, k))
            .sum()
    }

    /// True when every term `s^d t^k` has `d + k` even, i.e. the expression
    /// is an even function of `x` by construction.
    pub fn is_structurally_even(&self) -> bool {
        self.terms.iter().all(|(&k, c)| {
            c.coeffs()
                .iter()
                .enumerate()
                .all(|(d, a)| a.is_zero() || (d as i64 + k as i64) % 2 == 0)
        })
    }

    /// Smallest and largest t-power present.
    pub fn t_range(&self) -> Option<(i32, i32)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }
}

pub(crate) fn spoly_eval_f64(p: &SPoly, s: f64) -> f64 {
    let c: Vec<f64> = p.coeffs().iter().map(PiScalar::to_f64).collect();
    crate::exact::horner(&c, s)
}

impl Add for &HyperExpr {
    type Output = HyperExpr;

    fn add(self, rhs: &HyperExpr) -> HyperExpr {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &HyperExpr {
    type Output = HyperExpr;

    fn sub(self, rhs: &HyperExpr) -> HyperExpr {
        self + &(-rhs)
    }
}

impl Neg for &HyperExpr {
    type Output = HyperExpr;

    fn neg(self) -> HyperExpr {
        HyperExpr {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &HyperExpr {
    type Output = HyperExpr;

    fn mul(self, rhs: &HyperExpr) -> HyperExpr {
        let mut out = HyperExpr::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for HyperExpr {
            type Output = HyperExpr;
            fn $f(self, rhs: HyperExpr) -> HyperExpr {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Canonical text: terms by ascending t-power, each coefficient as a sum
/// of `r*pi^k*s^d` by ascending s-degree then π-power.
/// Example: `t^0 * (1/2*pi^1*s^0) + t^2 * (-1/2*pi^1*s^0)`.
impl fmt::Display for HyperExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "t^{k} * (")?;
            let mut first = true;
            for (d, a) in c.coeffs().iter().enumerate() {
                for (p, r) in a.terms() {
                    if !first {
                        f.write_str(" + ")?;
                    }
                    first = false;
                    write!(f, "{r}*pi^{p}*s^{d}")?;
                }
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
