//! Fixed polynomial families: Chebyshev, the products P₁/P₂ attached to the
//! Chebyshev integrals, the product polynomials Q_k in the closed forms of
//! the densities, and the coefficient polynomials of the Barnes-to-Hurwitz
//! reduction.

use alloc::vec;

use num_traits::Zero;

use super::combinatorics::{binomial, factorial, stirling_first};
use super::pi::PiScalar;
use super::poly::Poly;
use super::{int, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    First,
    Second,
}

/// `T_n` or `U_n` from `P_{n+1} = 2x P_n − P_{n−1}`.
pub fn chebyshev(kind: ChebyshevKind, n: u32) -> Poly<Rational> {
    let two_x = Poly::new(vec![int(0), int(2)], "x");
    let mut prev = Poly::one("x");
    let mut cur = match kind {
        ChebyshevKind::First => Poly::identity("x"),
        ChebyshevKind::Second => two_x.clone(),
    };
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(P₁, P₂)` with `P₁ = Π_{j=1}^{ℓ−1}(u² + j²)` and
/// `P₂ = Π_{j=1}^{ℓ}(u² + (j − 1/2)²)`.
pub fn p_polys(ell: u32) -> (Poly<Rational>, Poly<Rational>) {
    let factor = |c: Rational| Poly::new(vec![c, int(0), int(1)], "u");
    let p1 = (1..ell).fold(Poly::one("u"), |acc, j| {
        &acc * &factor(int(i64::from(j) * i64::from(j)))
    });
    let p2 = (1..=ell).fold(Poly::one("u"), |acc, j| {
        let h = ratio(2 * i64::from(j) - 1, 2);
        &acc * &factor(&h * &h)
    });
    (p1, p2)
}

/// `Q_k` with coefficients in ℚ[π²]:
/// `Q_{2m}(x) = Π_{j odd, j ≤ 2m−1}(x² + π²j²/4)` and
/// `Q_{2m+1}(x) = x Π_{j=1}^{m}(x² + j²π²)`; `Q_0 = 1` (empty product).
pub fn airault_q(k: u32) -> Poly<PiScalar> {
    let factor =
        |c: PiScalar| Poly::new(vec![c, PiScalar::zero(), PiScalar::from_ratio(1, 1)], "x");
    let m = k / 2;
    if k.is_multiple_of(2) {
        (1..=m).fold(Poly::one("x"), |acc, i| {
            let j = 2 * i64::from(i) - 1;
            &acc * &factor(PiScalar::term(ratio(j * j, 4), 2))
        })
    } else {
        (1..=m).fold(Poly::identity("x"), |acc, j| {
            let j = i64::from(j);
            &acc * &factor(PiScalar::term(int(j * j), 2))
        })
    }
}

/// `p_{ℓ,j}(w) = ((−1)^{ℓ+1−j}/(ℓ−1)!) Σ_{m=j}^{ℓ−1} C(m,j) s(ℓ, m+1) w^{m−j}`,
/// the weight of `ζ(s−j, w)` when `ζ_ℓ(s, w | 1,…,1)` is expanded in Hurwitz zetas.
///
/// # Panics
/// If `ell == 0` or `j >= ell`.
pub fn choi_p(ell: u32, j: u32) -> Poly<Rational> {
    assert!(ell >= 1 && j < ell, "choi_p needs 0 <= j < ell");
    let sign = if (ell + 1 - j).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let norm = Rational::new(sign.into(), factorial(ell - 1));
    let mut coeffs = vec![Rational::zero(); (ell - j) as usize];
    for m in j..ell {
        coeffs[(m - j) as usize] =
            Rational::from_integer(binomial(m, j)) * stirling_first(ell, m + 1) * &norm;
    }
    Poly::new(coeffs, "w")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_poly(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| int(c)).collect(), "x")
    }

    #[test]
    fn chebyshev_low_orders() {
        assert_eq!(chebyshev(ChebyshevKind::First, 0), x_poly(&[1]));
        assert_eq!(chebyshev(ChebyshevKind::First, 2), x_poly(&[-1, 0, 2]));
        assert_eq!(chebyshev(ChebyshevKind::Second, 0), x_poly(&[1]));
        assert_eq!(chebyshev(ChebyshevKind::Second, 1), x_poly(&[0, 2]));
        assert_eq!(chebyshev(ChebyshevKind::Second, 2), x_poly(&[-1, 0, 4]));
    }

    #[test]
    fn chebyshev_matches_trigonometric_definition() {
        for n in 0..12u32 {
            let t = chebyshev(ChebyshevKind::First, n);
            let u = chebyshev(ChebyshevKind::Second, n);
            for &theta in &[0.3f64, 1.1, 2.5] {
                let x = libm::cos(theta);
                let nf = f64::from(n);
                assert!((t.eval_f64(x) - libm::cos(nf * theta)).abs() < 1e-11);
                let want = libm::sin((nf + 1.0) * theta) / libm::sin(theta);
                assert!((u.eval_f64(x) - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn p_polys_small_cases() {
        let (p1, p2) = p_polys(1);
        assert_eq!(p1, Poly::one("u"));
        assert_eq!(p2, Poly::new(vec![ratio(1, 4), int(0), int(1)], "u"));
        let (p1, _) = p_polys(2);
        assert_eq!(p1, Poly::new(vec![int(1), int(0), int(1)], "u"));
    }

    #[test]
    fn airault_q_small_cases() {
        let zero = PiScalar::zero();
        let one = PiScalar::from_ratio(1, 1);
        assert_eq!(
            airault_q(1),
            Poly::new(vec![zero.clone(), one.clone()], "x")
        );
        assert_eq!(
            airault_q(2),
            Poly::new(
                vec![PiScalar::term(ratio(1, 4), 2), zero.clone(), one.clone()],
                "x"
            )
        );
        assert_eq!(
            airault_q(3),
            Poly::new(vec![zero.clone(), PiScalar::pi_pow(2), zero, one], "x")
        );
    }

    #[test]
    fn choi_p_small_cases() {
        assert_eq!(choi_p(1, 0), Poly::one("w"));
        assert_eq!(choi_p(2, 1), Poly::one("w"));
        // ζ₂(s,w) = Σ_k (k+1)(k+w)^{−s} = ζ(s−1,w) + (1−w)ζ(s,w)
        assert_eq!(choi_p(2, 0), Poly::new(vec![int(1), int(-1)], "w"));
    }

    #[test]
    fn choi_p_reproduces_lattice_multiplicity() {
        // Σ_j p_{ℓ,j}(w) (k+w)^j must equal C(k+ℓ−1, ℓ−1), the number of
        // lattice points with m₁+…+m_ℓ = k, as a polynomial identity in w.
        for ell in 1..7u32 {
            for k in 0..6i64 {
                for w in [int(1), ratio(3, 2), int(-2)] {
                    let n = &w + int(k);
                    let total = (0..ell).fold(Rational::zero(), |acc, j| {
                        let mut np = int(1);
                        for _ in 0..j {
                            np *= &n;
                        }
                        acc + choi_p(ell, j).eval(&w) * np
                    });
                    let want = Rational::from_integer(binomial(k as u32 + ell - 1, ell - 1));
                    assert_eq!(total, want, "ell={ell} k={k}");
                }
            }
        }
    }
}
