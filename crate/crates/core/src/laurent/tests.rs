use proptest::prelude::*;

use super::*;
use crate::exactnum::{int, rat, QRat, VPoly};

type LP = LaurentPoly<Rational>;

fn a1() -> RootSystem {
    RootSystem::parse("A1").unwrap()
}

fn c2() -> RootSystem {
    RootSystem::parse("C2").unwrap()
}

fn x1(n: i32) -> LP {
    LP::x(Weight::new(&[n]))
}

#[test]
fn products_and_constant_terms() {
    let alpha = Weight::new(&[2]);
    let a = x1(2);
    assert_eq!(a.mul(&x1(-2)), LP::one(1));
    let f = LP::one(1).mul_one_minus(&alpha);
    let g = LP::one(1).mul_one_minus(&-alpha);
    let prod = f.mul(&g);
    let expect = LP::from_terms(
        1,
        [
            (Weight::new(&[0]), int(2)),
            (Weight::new(&[2]), int(-1)),
            (Weight::new(&[-2]), int(-1)),
        ],
    );
    assert_eq!(prod, expect);
    assert_eq!(prod.constant_term(), int(2));
    assert!(f.mul(&LP::zero(1)).is_zero());
    assert_eq!(a.constant_term(), int(0));
}

#[test]
fn bar_is_involution() {
    let f = LP::from_terms(2, [(Weight::new(&[1, -2]), int(3)), (Weight::new(&[0, 1]), int(-1))]);
    assert_eq!(f.bar().coeff(&Weight::new(&[-1, 2])), int(3));
    assert_eq!(f.bar().bar(), f);
}

#[test]
fn geometric_division() {
    let rs = a1();
    // (1 - X^{-2α}) / (1 - X^{-α}) = 1 + X^{-α}
    let f = x1(0).sub(&x1(-4));
    let q = f.div_exact(&rs, 0).unwrap();
    assert_eq!(q, x1(0).add(&x1(-2)));
    // X^μ - X^{s_α μ} with n = 1
    let f = x1(1).sub(&x1(-1));
    assert_eq!(f.div_exact(&rs, 0).unwrap(), x1(1));
    // X^α + 1 is not divisible
    let f = x1(2).add(&x1(0));
    assert!(matches!(f.div_exact(&rs, 0), Err(Error::NotDivisible(_))));
}

#[test]
fn division_in_rank_two_with_negative_direction() {
    let rs = c2();
    for idx in 0..rs.positive_roots().len() {
        let f = LP::from_terms(
            2,
            [
                (Weight::new(&[3, -1]), int(2)),
                (Weight::new(&[0, 2]), int(-5)),
                (Weight::new(&[-1, 0]), int(1)),
            ],
        );
        let beta = -rs.positive_roots()[idx].weight;
        let prod = f.mul_one_minus(&beta);
        assert_eq!(prod.div_exact(&rs, idx).unwrap(), f);
    }
}

#[test]
fn deriv_on_a1() {
    let rs = a1();
    // ξ with <α,ξ> = 2 is ϖ itself
    let xi = vec![int(1)];
    assert!(LP::one(1).deriv(&rs, &xi).is_zero());
    for n in -3..=3 {
        assert_eq!(x1(n).deriv(&rs, &xi), x1(n).scale_rational(&int(n as i64)));
    }
}

#[test]
fn invariance() {
    let rs = c2();
    let lam = Weight::new(&[1, 1]);
    let m: LP = LP::from_terms(2, rs.weyl_orbit(&lam).into_iter().map(|w| (w, int(1))));
    assert_eq!(m.len(), 8);
    assert!(m.is_invariant(&rs));
    assert!(!LP::x(lam).is_invariant(&rs));
    assert!(LP::one(2).is_invariant(&rs));
    for idx in 0..rs.positive_roots().len() {
        assert!(m.sub(&m.reflect(&rs, idx)).is_zero());
    }
}

#[test]
fn json_round_trip_and_latex() {
    let f = LP::from_terms(2, [(Weight::new(&[1, -2]), rat(3, 4)), (Weight::new(&[0, 0]), int(-1))]);
    let j = f.to_json();
    let text = serde_json::to_string(&j).unwrap();
    assert_eq!(
        text,
        r#"{"terms":[{"exp":[1,-2],"coeff":"3/4"},{"exp":[0,0],"coeff":"-1"}]}"#
    );
    let back: LaurentJson = serde_json::from_str(&text).unwrap();
    assert_eq!(LP::from_json(&back, 2).unwrap(), f);
    assert_eq!(
        f.to_latex(),
        "\\frac{3}{4}\\,e^{i\\langle \\varpi_1-2\\varpi_2, x\\rangle} - 1"
    );

    let q: LaurentPoly<QRat> = LaurentPoly::constant(
        1,
        QRat::new(VPoly::var(), VPoly::new(vec![int(1), int(1)])).unwrap(),
    );
    let back = LaurentPoly::<QRat>::from_json(
        &serde_json::from_str(&serde_json::to_string(&q.to_json()).unwrap()).unwrap(),
        1,
    )
    .unwrap();
    assert_eq!(back, q);
}

#[test]
fn parallel_product_matches_sequential() {
    let f = LP::from_terms(2, (0..80).map(|i| (Weight::new(&[i % 9 - 4, i / 9 - 4]), int(i as i64 - 7))));
    let g = LP::from_terms(2, (0..90).map(|i| (Weight::new(&[i / 10 - 4, i % 10 - 5]), rat(1, i as i64 + 1))));
    assert_eq!(f.mul_exec(&g, Exec::Parallel), f.mul_exec(&g, Exec::Sequential));
}

fn small_poly(rank: usize) -> impl Strategy<Value = LP> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, rank), -4i64..=4), 0..6).prop_map(
        move |ts| LP::from_terms(rank, ts.into_iter().map(|(e, c)| (Weight::new(&e), int(c)))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in small_poly(2), g in small_poly(2), h in small_poly(2)) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn ct_symmetry(f in small_poly(2), g in small_poly(2)) {
        prop_assert_eq!(f.mul(&g.bar()).constant_term(), g.mul(&f.bar()).constant_term());
    }

    #[test]
    fn weyl_action_is_automorphism(f in small_poly(2), g in small_poly(2)) {
        let rs = c2();
        for w in rs.weyl_group() {
            prop_assert_eq!(f.mul(&g).weyl_act(&rs, &w), f.weyl_act(&rs, &w).mul(&g.weyl_act(&rs, &w)));
            prop_assert_eq!(f.weyl_act(&rs, &w).constant_term(), f.constant_term());
        }
    }

    #[test]
    fn division_inverts_multiplication(f in small_poly(2)) {
        let rs = c2();
        for idx in 0..rs.positive_roots().len() {
            let beta = -rs.positive_roots()[idx].weight;
            prop_assert_eq!(f.mul_one_minus(&beta).div_exact(&rs, idx).unwrap(), f.clone());
        }
    }

    #[test]
    fn deriv_is_derivation(f in small_poly(2), g in small_poly(2)) {
        let rs = c2();
        let xi = vec![rat(1, 3), int(-2)];
        let lhs = f.mul(&g).deriv(&rs, &xi);
        let rhs = f.deriv(&rs, &xi).mul(&g).add(&f.mul(&g.deriv(&rs, &xi)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ct_pairing_matches_expanded_product(f in small_poly(2), g in small_poly(2), d in small_poly(2)) {
        let direct = f.mul(&g.bar()).mul(&d).constant_term();
        prop_assert_eq!(f.ct_pairing(&g, &d), direct);
    }
}
