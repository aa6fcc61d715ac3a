use norlund_core::exact::{
    airault_q, bernoulli_numbers, bernoulli_poly, binom_poly, chebyshev, choi_p,
    forward_difference, harmonic, int, modified_norlund, norlund_poly, norlund_table, p_polys,
    ratio, stirling_first, uniform_average, ChebyshevKind, PiScalar, Poly, Rational,
};
use proptest::prelude::*;

fn x_poly(cs: &[Rational]) -> Poly<Rational> {
    Poly::new(cs.to_vec(), "x")
}

#[test]
fn bernoulli_examples() {
    assert_eq!(bernoulli_numbers(0), vec![int(1)]);
    assert_eq!(
        bernoulli_numbers(2),
        vec![int(1), ratio(-1, 2), ratio(1, 6)]
    );
    assert_eq!(bernoulli_numbers(4)[4], ratio(-1, 30));
    assert_eq!(bernoulli_poly(0), x_poly(&[int(1)]));
    assert_eq!(bernoulli_poly(1), x_poly(&[ratio(-1, 2), int(1)]));
    assert_eq!(bernoulli_poly(2), x_poly(&[ratio(1, 6), int(-1), int(1)]));
}

#[test]
fn norlund_examples() {
    let a = |cs: &[Rational]| Poly::new(cs.to_vec(), "alpha");
    assert_eq!(norlund_poly(1), a(&[int(0), ratio(-1, 2)]));
    assert_eq!(norlund_poly(2), a(&[int(0), ratio(-1, 12), ratio(1, 4)]));
    // α(15α³ − 30α² + 5α + 2)/240
    assert_eq!(
        norlund_poly(4),
        a(&[
            int(0),
            ratio(2, 240),
            ratio(5, 240),
            ratio(-30, 240),
            ratio(15, 240)
        ])
    );
    assert_eq!(modified_norlund(1, &int(1)), ratio(3, 4));
    assert_eq!(modified_norlund(1, &int(2)), ratio(1, 2));
    assert_eq!(modified_norlund(1, &int(0)), int(1));
}

#[test]
fn modified_norlund_coefficients() {
    let cases: [(i64, &[(i64, i64)]); 3] = [
        (
            1,
            &[
                (3, 4),
                (1, 24),
                (-1, 4),
                (-27, 80),
                (-1, 4),
                (-29, 1260),
                (1, 4),
                (451, 1120),
            ],
        ),
        (
            2,
            &[
                (1, 2),
                (-7, 24),
                (-5, 12),
                (-37, 240),
                (7, 30),
                (251, 630),
                (2, 21),
                (-1711, 3360),
            ],
        ),
        (
            3,
            &[
                (1, 4),
                (-1, 2),
                (-7, 24),
                (19, 80),
                (2, 5),
                (-61, 630),
                (-55, 84),
            ],
        ),
    ];
    for (ell, coeffs) in cases {
        for (i, &(p, q)) in coeffs.iter().enumerate() {
            assert_eq!(
                modified_norlund(i as u32 + 1, &int(ell)),
                ratio(p, q),
                "ell={ell} n={}",
                i + 1
            );
        }
    }
}

#[test]
fn combinatorial_examples() {
    assert_eq!(harmonic(0), int(0));
    assert_eq!(harmonic(3), ratio(11, 6));
    assert_eq!(stirling_first(3, 2), int(-3));
    assert_eq!(stirling_first(3, 3), int(1));
    assert_eq!(stirling_first(4, 1), int(-6));
    assert_eq!(binom_poly(0, 1), x_poly(&[int(0), int(1)]));
    assert_eq!(binom_poly(-1, 1), x_poly(&[int(-1), int(1)]));
    assert_eq!(
        binom_poly(0, 2),
        x_poly(&[int(0), ratio(-1, 2), ratio(1, 2)])
    );
}

#[test]
fn polynomial_family_examples() {
    assert_eq!(
        chebyshev(ChebyshevKind::First, 2),
        x_poly(&[int(-1), int(0), int(2)])
    );
    assert_eq!(
        chebyshev(ChebyshevKind::Second, 1),
        x_poly(&[int(0), int(2)])
    );
    assert_eq!(chebyshev(ChebyshevKind::First, 0), x_poly(&[int(1)]));

    let sq = Poly::new(vec![int(0), int(0), int(1)], "x");
    assert_eq!(forward_difference(&sq, 1), x_poly(&[int(1), int(2)]));
    let x4 = Poly::monomial(ratio(1, 24), 4, "x");
    assert_eq!(forward_difference(&x4, 4), x_poly(&[int(1)]));
    assert!(forward_difference(&x_poly(&[int(7)]), 1).is_zero());

    let pi2 = |r: Rational| PiScalar::term(r, 2);
    let one = PiScalar::from_ratio(1, 1);
    let zero = PiScalar::from_ratio(0, 1);
    assert_eq!(
        airault_q(1),
        Poly::new(vec![zero.clone(), one.clone()], "x")
    );
    assert_eq!(
        airault_q(2),
        Poly::new(vec![pi2(ratio(1, 4)), zero.clone(), one.clone()], "x")
    );
    assert_eq!(
        airault_q(3),
        Poly::new(vec![zero.clone(), pi2(int(1)), zero, one], "x")
    );

    let w = |cs: &[Rational]| Poly::new(cs.to_vec(), "w");
    assert_eq!(choi_p(1, 0), w(&[int(1)]));
    assert_eq!(choi_p(2, 1), w(&[int(1)]));
    assert_eq!(choi_p(2, 0), w(&[int(1), int(-1)]));

    let u = |cs: &[Rational]| Poly::new(cs.to_vec(), "u");
    assert_eq!(
        p_polys(1),
        (u(&[int(1)]), u(&[ratio(1, 4), int(0), int(1)]))
    );
    assert_eq!(p_polys(2).0, u(&[int(1), int(0), int(1)]));
}

#[test]
fn uniform_average_inverts_bernoulli() {
    for n in 0..=20 {
        assert_eq!(
            uniform_average(&bernoulli_poly(n)),
            Poly::monomial(int(1), n as usize, "x")
        );
    }
}

#[test]
fn norlund_at_one_is_bernoulli() {
    let table = norlund_table(30);
    let b = bernoulli_numbers(30);
    for n in 0..=30 {
        assert_eq!(table[n].eval(&int(1)), b[n]);
    }
}

proptest! {
    #[test]
    fn bernoulli_difference(n in 1u32..25) {
        // B_n(x+1) − B_n(x) = n x^{n−1}
        let d = forward_difference(&bernoulli_poly(n), 1);
        prop_assert_eq!(d, Poly::monomial(int(n.into()), n as usize - 1, "x"));
    }

    #[test]
    fn norlund_addition(n in 0u32..12, a in -4i64..6, b in -4i64..6) {
        // B_n^{(α+β)} = Σ_k C(n,k) B_k^{(α)} B_{n−k}^{(β)}
        let t = norlund_table(n);
        let lhs = t[n as usize].eval(&int(a + b));
        let rhs = (0..=n).fold(int(0), |acc, k| {
            acc + Rational::from_integer(norlund_core::exact::binomial(n, k))
                * t[k as usize].eval(&int(a))
                * t[(n - k) as usize].eval(&int(b))
        });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binom_difference(p in -5i64..5, ell in 1u32..10) {
        prop_assert_eq!(forward_difference(&binom_poly(p, ell), 1), binom_poly(p, ell - 1));
    }

    #[test]
    fn stirling_rows_sum_to_zero(n in 2u32..30) {
        let s = (0..=n).fold(int(0), |acc, k| acc + stirling_first(n, k));
        prop_assert_eq!(s, int(0));
    }

    #[test]
    fn chebyshev_trig(n in 0u32..12, theta in 0.0f64..3.1) {
        let t = chebyshev(ChebyshevKind::First, n).eval_f64(theta.cos());
        prop_assert!((t - (n as f64 * theta).cos()).abs() < 1e-10);
        if theta > 0.05 {
            let u = chebyshev(ChebyshevKind::Second, n).eval_f64(theta.cos());
            let expected = ((n + 1) as f64 * theta).sin() / theta.sin();
            prop_assert!((u - expected).abs() < 1e-8 * expected.abs().max(1.0));
        }
    }

    #[test]
    fn odd_bernoulli_vanish(k in 1u32..20) {
        prop_assert_eq!(bernoulli_numbers(2 * k + 1)[2 * k as usize + 1].clone(), int(0));
    }
}
