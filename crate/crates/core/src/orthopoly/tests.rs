use num_traits::{One, Signed, Zero};

use super::*;
use crate::exactnum::{int, rat};
use crate::par::Exec;

fn w(c: &[i32]) -> Weight {
    Weight::new(c)
}

fn sys(name: &str) -> RootSystem {
    RootSystem::parse(name).unwrap()
}

#[test]
fn orbit_sums() {
    let a1 = sys("A1");
    let m0: LaurentPoly<Rational> = monomial_sym(&a1, &w(&[0])).unwrap();
    assert_eq!(m0, LaurentPoly::one(1));
    let m3: LaurentPoly<Rational> = monomial_sym(&a1, &w(&[3])).unwrap();
    assert_eq!(m3.len(), 2);
    assert_eq!(m3.coeff(&w(&[-3])), int(1));
    let c2 = sys("C2");
    assert_eq!(monomial_sym::<Rational>(&c2, &w(&[1, 1])).unwrap().len(), 8);
    assert!(matches!(
        monomial_sym::<Rational>(&c2, &w(&[1, -1])),
        Err(Error::NotDominant(_))
    ));
}

#[test]
fn weights_on_a1() {
    let a1 = sys("A1");
    assert_eq!(weight_delta_k(&a1, &MultiplicityFn::uniform(0)), LaurentPoly::one(1));
    let d1 = weight_delta_k(&a1, &MultiplicityFn::uniform(1));
    assert_eq!(d1.constant_term(), int(2));
    assert_eq!(d1.coeff(&w(&[2])), int(-1));
    assert_eq!(d1.len(), 3);
    // (X²;q)₂(X⁻²;q)₂ collects into five monomials
    let d2q = weight_delta_kq(&a1, &MultiplicityFn::uniform(2));
    assert_eq!(d2q.len(), 5);
    let at1 = d2q.map_coeffs(|c| c.eval(&int(1)));
    assert_eq!(at1, weight_delta_k(&a1, &MultiplicityFn::uniform(2)));
    // k = 1 is q-free
    let d1q = weight_delta_kq(&a1, &MultiplicityFn::uniform(1));
    assert_eq!(d1q, d1.map_coeffs(|c| VPoly::constant(c.clone())));
}

#[test]
fn weights_are_invariant_and_specialize() {
    for name in ["A2", "B2", "C2"] {
        let rs = sys(name);
        for k in [MultiplicityFn::uniform(1), MultiplicityFn::new(1, 2), MultiplicityFn::uniform(2)] {
            let d = weight_delta_k(&rs, &k);
            assert!(d.is_invariant(&rs));
            assert_eq!(d.bar(), d);
            assert!(d.constant_term().is_positive());
            let dq = weight_delta_kq(&rs, &k);
            assert!(dq.is_invariant(&rs));
            assert_eq!(dq.map_coeffs(|c| c.eval(&int(1))), d);
            for v in [rat(1, 2), rat(3, 4)] {
                assert!(dq.constant_term().eval(&v).is_positive());
            }
        }
    }
}

#[test]
fn inner_products_on_a1() {
    let a1 = sys("A1");
    let d1 = weight_delta_k(&a1, &MultiplicityFn::uniform(1));
    let one = LaurentPoly::<Rational>::one(1);
    assert_eq!(inner_product(&one, &one, &d1), int(2));
    let d0 = weight_delta_k(&a1, &MultiplicityFn::uniform(0));
    let m1: LaurentPoly<Rational> = monomial_sym(&a1, &w(&[1])).unwrap();
    assert_eq!(inner_product(&m1, &m1, &d0), int(2));
    assert_eq!(inner_product(&m1, &one, &d0), int(0));
}

#[test]
fn jacobi_on_a1() {
    let a1 = sys("A1");
    let k1 = MultiplicityFn::uniform(1);
    let p0 = jacobi(&a1, &w(&[0]), &k1).unwrap();
    assert_eq!(p0.coeffs(), &[(w(&[0]), int(1))]);
    let p = jacobi(&a1, &w(&[2]), &k1).unwrap();
    assert_eq!(p.coeff(&w(&[0])), int(1));
    assert_eq!(p.coeff(&w(&[2])), int(1));
    assert_eq!(squared_norm(&a1, &p).unwrap(), int(2));
    assert_eq!(norm_ratio(&a1, &p).unwrap(), int(1));
    let p = jacobi(&a1, &w(&[2]), &MultiplicityFn::uniform(2)).unwrap();
    assert_eq!(p.coeff(&w(&[0])), rat(4, 3));
    let json = serde_json::to_string(&jacobi(&a1, &w(&[2]), &k1).unwrap().to_json()).unwrap();
    assert_eq!(json, r#"{"lambda":[2],"coeffs":[{"mu":[0],"c":"1"},{"mu":[2],"c":"1"}]}"#);
}

#[test]
fn macdonald_limits_on_a1() {
    let a1 = sys("A1");
    let k2 = MultiplicityFn::uniform(2);
    let p = macdonald(&a1, &w(&[2]), &k2).unwrap();
    let c = p.coeff(&w(&[0]));
    assert!(!c.is_polynomial() || c.num().degree() > Some(0));
    let lim = macdonald_q1_limit(&p).unwrap();
    assert_eq!(lim.coeff(&w(&[0])), rat(4, 3));
    assert_eq!(coeff_map(&lim), coeff_map(&jacobi(&a1, &w(&[2]), &k2).unwrap()));
    let p0 = macdonald(&a1, &w(&[0]), &k2).unwrap();
    assert!(macdonald_q1_limit(&p0).unwrap().coeff(&w(&[0])).is_one());
}

#[test]
fn c2_orthogonality_small_box() {
    let c2 = sys("C2");
    let k = MultiplicityFn::uniform(1);
    let tops = c2.dominant_weights(2);
    let basis = OrthoBasis::<Rational>::new(&c2, &k, &tops, Exec::Parallel).unwrap();
    let (polys, rep) = basis
        .orthogonality_report(&tops, |v: &Rational| v.is_positive())
        .unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.incomparable_pairs > 0);
    for p in &polys {
        assert!(p.to_laurent(&c2).is_invariant(&c2));
        assert!(p.coeffs().iter().all(|(mu, _)| c2.dominance_leq(mu, &p.lambda)));
    }
    let printed = printed_condition_report(&basis, &polys).unwrap();
    assert_eq!(printed.swapped_violations, 0);
    assert!(printed.literal_violations > 0);
}

#[test]
fn c2_macdonald_small_box() {
    let c2 = sys("C2");
    let k = MultiplicityFn::new(1, 2);
    let tops = c2.dominant_weights(2);
    let basis = OrthoBasis::<QRat>::new(&c2, &k, &tops, Exec::Parallel).unwrap();
    let (polys, rep) = basis
        .orthogonality_report(&tops, |v: &QRat| {
            [rat(1, 2), rat(3, 4)]
                .iter()
                .all(|x| v.num().eval(x).is_positive() && v.den().eval(x).is_positive())
        })
        .unwrap();
    assert!(rep.passed(), "{rep:?}");
    let jac = OrthoBasis::<Rational>::new(&c2, &k, &tops, Exec::Sequential).unwrap();
    for p in &polys {
        let lim = macdonald_q1_limit(p).unwrap();
        assert_eq!(coeff_map(&lim), coeff_map(&jac.poly(&p.lambda).unwrap()));
    }
}

#[test]
fn printed_condition_counterexample_on_a1() {
    let a1 = sys("A1");
    let k = MultiplicityFn::uniform(1);
    let basis = OrthoBasis::<Rational>::new(&a1, &k, &[w(&[2])], Exec::Sequential).unwrap();
    let p0 = basis.poly(&w(&[0])).unwrap();
    assert_eq!(basis.pairing_with_orbit_sum(&p0, &w(&[2])).unwrap(), int(-2));
    assert!(!basis.pairing_with_orbit_sum(&p0, &w(&[2])).unwrap().is_zero());
}

#[test]
fn eigenvalues_separate_on_small_boxes() {
    for name in ["A2", "C2", "B3"] {
        let rs = sys(name);
        let rep = collision_report(&rs, &MultiplicityFn::uniform(1), &rs.dominant_weights(3)).unwrap();
        assert!(rep.collisions.is_empty(), "{name}: {:?}", rep.collisions);
    }
    assert_eq!(eigenvalue(&sys("A1"), &w(&[2]), &MultiplicityFn::uniform(1)), int(8));
}
