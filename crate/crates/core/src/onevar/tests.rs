use num_complex::Complex;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::exactnum::{int, rat, ChebPoly, QRat};
use crate::rootdata::{RootSystem, Weight};

fn factorial(n: usize) -> Rational {
    (1..=n).map(|i| int(i as i64)).product()
}

#[test]
fn bessel_series_reduce_to_cos_and_sinc() {
    let n = 30;
    let c0 = bessel_coeffs(0, n);
    let c1 = bessel_coeffs(1, n);
    for d in 0..=n {
        let sign = if (d / 2) % 2 == 0 { int(1) } else { int(-1) };
        let (cos_d, sinc_d) = if d % 2 == 0 {
            (sign.clone() / factorial(d), sign / factorial(d + 1))
        } else {
            (Rational::zero(), Rational::zero())
        };
        assert_eq!(c0.coeff(d), re(cos_d), "cos, degree {d}");
        assert_eq!(c1.coeff(d), re(sinc_d), "sinc, degree {d}");
    }
    for k in 0..4 {
        assert_eq!(bessel_coeffs(k, 4).coeff(0), re(int(1)));
    }
}

#[test]
fn gen_exp_at_zero_multiplicity_is_the_exponential() {
    let e = gen_exp_coeffs(0, 20);
    let mut ipow = Complex::new(int(1), int(0));
    for d in 0..=20 {
        assert_eq!(e.coeff(d), ipow.clone() / re(factorial(d)));
        ipow = i_times(&ipow);
    }
}

#[test]
fn dunkl1d_on_u() {
    for k in 0..4 {
        let u = TruncatedSeries::new(vec![Complex::zero(), re(int(1))]);
        let d = dunkl1d_apply(k, &u).unwrap();
        assert_eq!(d.coeffs(), &[re(int(1 + 2 * k as i64))]);
    }
    assert!(dunkl1d_apply(1, &TruncatedSeries::new(vec![re(int(1))])).is_err());
}

#[test]
fn tower_identities_to_order_30() {
    for k in 0..=3 {
        let rep = tower_report(k, 30).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
}

#[test]
fn bessel_eval_known_values() {
    assert!((bessel_eval(0, std::f64::consts::PI, 1e-13).unwrap() + 1.0).abs() < 1e-12);
    assert!(bessel_eval(1, std::f64::consts::PI, 1e-13).unwrap().abs() < 1e-12);
    for k in 0..3 {
        assert_eq!(bessel_eval(k, 0.0, 1e-10).unwrap(), 1.0);
    }
    assert!((bessel_eval(0, 2.5, 1e-14).unwrap() - 2.5f64.cos()).abs() < 1e-13);
    assert!((bessel_eval(1, 2.5, 1e-14).unwrap() - 2.5f64.sin() / 2.5).abs() < 1e-13);
    assert!(bessel_eval(0, 1.0, 0.0).is_err());
    assert!(bessel_eval(0, 1.0, -1.0).is_err());
    assert!(bessel_eval(0, 2e3, 1e-12).is_err());
    assert!(bessel_eval(0, 1.0, 1e-30).is_err());
    assert!((bessel_eval(0, 40.0, 1e-14).unwrap() - 40f64.cos()).abs() < 1e-13);
}

#[test]
fn gegenbauer_examples() {
    let x = ChebPoly::var();
    for k in 0..4 {
        assert_eq!(gegenbauer(1, k).unwrap().cheb, x.scale(&int(2)));
    }
    assert_eq!(
        gegenbauer(2, 2).unwrap().cheb,
        ChebPoly::from_terms([(2, int(4)), (0, rat(-2, 3))])
    );
    // k = 0 gives 2 T_n.
    let t5 = ChebPoly::from_terms([(5, int(16)), (3, int(-20)), (1, int(5))]);
    assert_eq!(gegenbauer(5, 0).unwrap().cheb, t5.scale(&int(2)));
}

#[test]
fn gegenbauer_differential_equation() {
    for k in 0..=3 {
        for n in 0..=8 {
            assert!(gegenbauer_ode_holds(&gegenbauer(n, k).unwrap()), "n={n} k={k}");
        }
    }
}

#[test]
fn chebyshev_round_trip() {
    let p = ChebPoly::from_terms([(0, rat(1, 3)), (3, int(-2)), (4, int(5))]);
    assert_eq!(laurent_to_cheb(&cheb_to_laurent(&p)).unwrap(), p);
}

#[test]
fn shift_pair_and_norm_ratio() {
    for k in 0..=3 {
        for n in 1..=6 {
            let sp = shift_pair(n, k).unwrap();
            assert_eq!(
                norm_ratio_by_shift(n, k).unwrap(),
                direct_norm_ratio(n, k).unwrap(),
                "n={n} k={k}"
            );
            assert!(sp.a > Rational::zero());
        }
    }
    assert_eq!(norm_ratio_by_shift(1, 0).unwrap(), int(4));
    assert!(shift_pair(0, 1).is_err());
    assert!(direct_norm_ratio(0, 1).is_err());
    // S₊ on degree one is a constant.
    let c = s_plus(&gegenbauer(1, 2).unwrap().cheb);
    assert_eq!(c.degree(), Some(0));
}

#[test]
fn shift_recursion_reproduces_constant_term_norms() {
    let a1 = RootSystem::parse("A1").unwrap();
    assert_eq!(norm_by_shift_recursion(2, 1).unwrap(), int(2));
    for k in 0..=2 {
        for n in 0..=5 {
            let p = gegenbauer(n, k).unwrap().trig;
            assert_eq!(
                norm_by_shift_recursion(n, k).unwrap(),
                crate::orthopoly::squared_norm(&a1, &p).unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn shift_adjointness() {
    for k in 0..=3 {
        let rep = adjointness_report(k, 6);
        assert_eq!(rep.failures, 0, "{rep:?}");
        assert_eq!(rep.checks, 49);
    }
}

#[test]
fn transported_form_matches_a1_norms() {
    let g = gegenbauer(2, 1).unwrap();
    // <P, P> = 2 under CT(P bar P δ_1); the transported form divides by 4.
    assert_eq!(transported_form(&g.cheb, &g.cheb, 1), rat(1, 2));
    assert_eq!(transported_form(&ChebPoly::one(), &ChebPoly::one(), 0), int(1));
}

#[test]
fn qdiff_eigenvalues() {
    for k in 0..=2 {
        let mut seen: Vec<QRat> = Vec::new();
        for n in 0..=8 {
            let p = qultra(n, k).unwrap();
            let e = qdiff_check(&p).unwrap();
            assert_eq!(e, qdiff_expected(n, k));
            assert!(!seen.contains(&e));
            seen.push(e);
        }
    }
    assert_eq!(qdiff_expected(0, 2), &QRat::one() + &QRat::q_pow(2));
}

#[test]
fn qdiff_rejects_non_eigenfunctions() {
    let mut p = qultra(2, 1).unwrap();
    let rs = RootSystem::parse("A1").unwrap();
    let bumped = crate::orthopoly::OrthoPoly::from_coeffs(
        p.lambda,
        p.k,
        vec![
            (Weight::new(&[0]), QRat::constant(int(5))),
            (p.lambda, QRat::one()),
        ],
    );
    assert!(qdiff_check(&bumped).is_err());
    p = qultra(0, 1).unwrap();
    let f = p.to_laurent(&rs);
    assert_eq!(qdiff_apply(1, &f).unwrap(), f.scale(&qdiff_expected(0, 1)));
}

#[test]
fn q_to_one_limits() {
    for k in 0..=2 {
        for n in 0..=8 {
            let row = limit_q_to_1(n, k).unwrap();
            assert!(row.equal, "{row:?}");
        }
    }
    let row = limit_q_to_1(2, 2).unwrap();
    assert_eq!(row.coeffs[0], (0, "4/3".to_string(), "4/3".to_string()));
}

#[test]
fn normalized_recurrence_matches_exact_polynomials() {
    for k in 0..=3 {
        for n in 0..=8 {
            let g = gegenbauer(n, k).unwrap().cheb;
            let at_one = g.eval_f64(1.0);
            for t in [-0.9, -0.3, 0.0, 0.4, 0.95] {
                let exact = g.eval_f64(t) / at_one;
                assert!((gegenbauer_normalized_f64(n, k, t) - exact).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn ultraspherical_to_bessel() {
    let row = limit_ultra_to_bessel(0, 1.0, 1.0, 200).unwrap();
    assert!(row.gap < 1e-3, "{row:?}");
    let z = limit_ultra_to_bessel(2, 1.0, 0.0, 200).unwrap();
    assert!(z.gap < 1e-15);
    let fine = limit_ultra_to_bessel(1, 1.0, 1.0, 20_000).unwrap();
    let coarse = limit_ultra_to_bessel(1, 1.0, 1.0, 200).unwrap();
    assert!(fine.gap < coarse.gap);
    assert!(limit_ultra_to_bessel(1, 1.0, 1.0, 0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dunkl1d_is_linear(a in prop::collection::vec(-5i64..5, 6), b in prop::collection::vec(-5i64..5, 6), k in 0u32..4) {
        let sa = TruncatedSeries::new(a.iter().map(|&x| re(int(x))).collect());
        let sb = TruncatedSeries::new(b.iter().map(|&x| re(int(x))).collect());
        let lhs = dunkl1d_apply(k, &sa.add(&sb)).unwrap();
        let rhs = dunkl1d_apply(k, &sa).unwrap().add(&dunkl1d_apply(k, &sb).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bessel_eval_agrees_with_closed_forms(x in -12.0f64..12.0) {
        let c = bessel_eval(0, x, 1e-12).unwrap();
        prop_assert!((c - x.cos()).abs() < 1e-11);
        if x.abs() > 1e-3 {
            let s = bessel_eval(1, x, 1e-12).unwrap();
            prop_assert!((s - x.sin() / x).abs() < 1e-11);
        }
    }

    #[test]
    fn transported_form_is_symmetric(
        a in prop::collection::vec(-3i64..3, 1..5),
        b in prop::collection::vec(-3i64..3, 1..5),
        k in 0u32..3,
    ) {
        let f = ChebPoly::new(a.iter().map(|&x| int(x)).collect());
        let g = ChebPoly::new(b.iter().map(|&x| int(x)).collect());
        prop_assert_eq!(transported_form(&f, &g, k), transported_form(&g, &f, k));
        if !f.is_zero() {
            prop_assert!(transported_form(&f, &f, k) > Rational::zero());
        }
    }
}
