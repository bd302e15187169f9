use proptest::prelude::*;

use super::*;
use crate::exactnum::{int, rat};
use crate::orthopoly::{jacobi, OrthoBasis};
use crate::par::Exec;

fn rs(s: &str) -> RootSystem {
    RootSystem::parse(s).unwrap()
}

fn w(c: &[i32]) -> Weight {
    Weight::new(c)
}

fn fund(r: &RootSystem, i: usize) -> DirectionalSymbol {
    DirectionalSymbol::fundamental(r.rank(), i)
}

/// `t = <ϖ, x>/<ϖ, ϖ>` on A1 is `y/2`.
fn a1_t_power(n: u32) -> AmbientPoly {
    AmbientPoly::monomial(vec![n], rat(1, 1 << n))
}

#[test]
fn a1_rational_dunkl_on_low_degrees() {
    let a1 = rs("A1");
    let xi = fund(&a1, 0);
    for k in 0..4 {
        let m = MultiplicityFn::uniform(k);
        let d1 = rational_dunkl_apply(&a1, &m, &xi, &a1_t_power(1)).unwrap();
        assert_eq!(d1, AmbientPoly::constant(1, int(1 + 2 * k as i64)));
        let d2 = rational_dunkl_apply(&a1, &m, &xi, &a1_t_power(2)).unwrap();
        assert_eq!(d2, a1_t_power(1).scale(&int(2)));
        let d0 = rational_dunkl_apply(&a1, &m, &xi, &AmbientPoly::one(1)).unwrap();
        assert!(d0.is_zero());
    }
}

#[test]
fn a1_square_on_even_polynomials_is_radial_laplacian() {
    // t · D²p = t p'' + 2k p' for even p.
    let a1 = rs("A1");
    let xi = fund(&a1, 0);
    for k in 0..3 {
        let m = MultiplicityFn::uniform(k);
        for n in [0u32, 2, 4, 6] {
            let p = a1_t_power(n);
            let dd = rational_dunkl_apply(&a1, &m, &xi, &rational_dunkl_apply(&a1, &m, &xi, &p).unwrap())
                .unwrap();
            let lhs = dd.mul(&a1_t_power(1));
            let nn = int(n as i64);
            let rhs = if n == 0 {
                AmbientPoly::zero(1)
            } else {
                a1_t_power(n - 1)
                    .scale(&(&nn * (&nn - int(1)) + int(2 * k as i64) * &nn))
            };
            assert_eq!(lhs, rhs, "k = {k}, n = {n}");
        }
    }
}

#[test]
fn ambient_reflection_is_an_involution_and_fixes_its_root_up_to_sign() {
    for s in ["A2", "B3", "C2", "D4"] {
        let r = rs(s);
        let polys = AmbientPoly::monomials_up_to(r.rank(), 3);
        for idx in 0..r.positive_roots().len() {
            let root = &r.positive_roots()[idx];
            let l: Vec<Rational> = root.simple.iter().map(|&c| int(c)).collect();
            let lin = AmbientPoly::linear(&l);
            assert_eq!(ambient_reflect(&r, idx, &lin), lin.scale(&int(-1)));
            for p in &polys {
                assert_eq!(ambient_reflect(&r, idx, &ambient_reflect(&r, idx, p)), *p);
            }
        }
    }
}

#[test]
fn division_by_linear_form() {
    let l = vec![int(1), int(-2)];
    let lin = AmbientPoly::linear(&l);
    let q = AmbientPoly::var(2, 0).mul(&AmbientPoly::var(2, 1)).add(&AmbientPoly::one(2));
    assert_eq!(lin.mul(&q).div_linear(&l).unwrap(), q);
    assert!(matches!(
        q.div_linear(&l),
        Err(Error::NotDivisible(_))
    ));
}

#[test]
fn rational_commutators_vanish_and_lower_degree() {
    for s in ["A2", "B2", "C2", "A3"] {
        let r = rs(s);
        for k in [MultiplicityFn::uniform(1), MultiplicityFn::new(1, 2)] {
            let rep = commutator_report_rational(&r, &k, 4, Exec::Parallel).unwrap();
            assert!(rep.passed(), "{s} {k}: {:?}", rep.witness);
            for p in AmbientPoly::monomials_up_to(r.rank(), 3) {
                let d = rational_dunkl_apply(&r, &k, &fund(&r, 0), &p).unwrap();
                match (p.degree(), d.degree()) {
                    (Some(a), Some(b)) => assert!(b < a),
                    (_, None) => {}
                    (None, Some(_)) => panic!("zero input gave nonzero output"),
                }
            }
        }
    }
}

#[test]
fn cherednik_commutes_and_heckman_does_not() {
    for s in ["A2", "B2", "C2"] {
        let r = rs(s);
        let k = MultiplicityFn::uniform(1);
        let c = commutator_report_trig(&r, &k, OperatorKind::Cherednik, 2, Exec::Parallel).unwrap();
        assert!(c.passed(), "{s}: {:?}", c.witness);
        let h = commutator_report_trig(&r, &k, OperatorKind::Heckman, 2, Exec::Parallel).unwrap();
        assert!(!h.passed(), "{s}: Heckman operators unexpectedly commute");
        assert!(h.witness.is_some());
    }
}

#[test]
fn at_zero_multiplicity_both_families_are_derivations() {
    let r = rs("B2");
    let k = MultiplicityFn::uniform(0);
    let f = LaurentPoly::<Rational>::x(w(&[2, -1]));
    let xi = fund(&r, 1);
    assert_eq!(heckman_apply(&r, &k, &xi, &f).unwrap(), f.deriv(&r, xi.coords()));
    assert_eq!(cherednik_apply(&r, &k, &xi, &f).unwrap(), f.deriv(&r, xi.coords()));
    assert!(commutator_report_trig(&r, &k, OperatorKind::Heckman, 1, Exec::Sequential)
        .unwrap()
        .passed());
}

#[test]
fn heckman_is_equivariant_and_cherednik_is_not() {
    let r = rs("A2");
    let k = MultiplicityFn::uniform(1);
    let h = conjugation_report(&r, &k, OperatorKind::Heckman, 1, Exec::Parallel).unwrap();
    assert!(h.equivariant(), "{:?}", h.witness);
    let c = conjugation_report(&r, &k, OperatorKind::Cherednik, 1, Exec::Parallel).unwrap();
    assert!(!c.equivariant());
    assert!(c.witness.is_some());
}

#[test]
fn second_order_operator_on_a1() {
    let a1 = rs("A1");
    let k = MultiplicityFn::uniform(1);
    let p = jacobi(&a1, &w(&[2]), &k).unwrap();
    let f = p.to_laurent(&a1);
    assert_eq!(l_apply(&a1, &k, &f).unwrap(), f.scale_rational(&int(8)));
    let chk = eigen_check(&a1, &p).unwrap();
    assert!(chk.passed());
    assert_eq!(chk.expected, "8");
    let bad = LaurentPoly::<Rational>::x(w(&[1]));
    assert_eq!(l_apply(&a1, &k, &bad), Err(Error::NotInvariant));
}

#[test]
fn eigen_equation_on_c2_jacobi_family() {
    let r = rs("C2");
    let k = MultiplicityFn::new(1, 2);
    let basis = OrthoBasis::<Rational>::up_to_height(&r, &k, 3, Exec::Parallel).unwrap();
    for p in basis.polys(&r.dominant_weights(3)).unwrap() {
        let chk = eigen_check(&r, &p).unwrap();
        assert!(chk.passed(), "{chk:?}");
    }
}

#[test]
fn symmetrized_powers_on_c2() {
    let r = rs("C2");
    let k = MultiplicityFn::uniform(1);
    let lambdas = r.dominant_weights(3);
    let basis = OrthoBasis::<Rational>::up_to_height(&r, &k, 3, Exec::Parallel).unwrap();
    let polys = basis.polys(&lambdas).unwrap();
    let rep = joint_eigen_report(&r, &k, &fund(&r, 0), &[1, 2], &polys, Exec::Parallel).unwrap();
    assert!(rep.passed(), "{rep:?}");
    // The orbit of ξ sums to zero, so the first power vanishes identically.
    for (_, j, e) in &rep.eigenvalues {
        if *j == 1 {
            assert_eq!(e.as_deref(), Some("0"));
        }
    }
    let cas = casimir_relation(&r, &k, &fund(&r, 0), &polys).unwrap();
    assert!(cas.consistent, "{cas:?}");
}

#[test]
fn symmetrized_powers_on_a2_are_nontrivial() {
    let r = rs("A2");
    let k = MultiplicityFn::uniform(1);
    let lambdas = r.dominant_weights(3);
    let basis = OrthoBasis::<Rational>::up_to_height(&r, &k, 3, Exec::Parallel).unwrap();
    let polys = basis.polys(&lambdas).unwrap();
    let rep = joint_eigen_report(&r, &k, &fund(&r, 0), &[2, 3], &polys, Exec::Parallel).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep
        .eigenvalues
        .iter()
        .any(|(_, j, e)| *j == 3 && e.as_deref() != Some("0")));
}

#[test]
fn symmetrized_power_rejects_non_invariant_input() {
    let r = rs("B2");
    let f = LaurentPoly::<Rational>::x(w(&[1, 0]));
    assert_eq!(
        symmetrized_power(&r, &MultiplicityFn::uniform(1), &fund(&r, 0), 2, &f),
        Err(Error::NotInvariant)
    );
}

#[test]
fn operator_spec_dispatch() {
    let r = rs("A2");
    let k = MultiplicityFn::uniform(1);
    let f = LaurentPoly::<Rational>::x(w(&[1, 0]));
    let rat_op = OperatorSpec::new(OperatorKind::Rational, fund(&r, 0), k);
    assert!(matches!(rat_op.apply_laurent(&r, &f), Err(Error::InvalidArgument(_))));
    let ch = OperatorSpec::new(OperatorKind::Cherednik, fund(&r, 0), k);
    assert_eq!(ch.apply_laurent(&r, &f).unwrap(), cherednik_apply(&r, &k, &fund(&r, 0), &f).unwrap());
    assert!(ch.apply_ambient(&r, &AmbientPoly::one(2)).is_err());
    assert!(DirectionalSymbol::new(vec![int(0), int(0)]).is_err());
    let wrong_rank = DirectionalSymbol::fundamental(3, 0);
    assert!(matches!(
        heckman_apply(&r, &k, &wrong_rank, &f),
        Err(Error::RankMismatch { .. })
    ));
}

#[test]
fn sequential_and_parallel_reports_agree() {
    let r = rs("B2");
    let k = MultiplicityFn::new(2, 1);
    let a = commutator_report_trig(&r, &k, OperatorKind::Heckman, 2, Exec::Sequential).unwrap();
    let b = commutator_report_trig(&r, &k, OperatorKind::Heckman, 2, Exec::Parallel).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn ambient_json_round_trip() {
    let p = AmbientPoly::monomial(vec![2, 1], rat(-3, 4)).add(&AmbientPoly::one(2));
    assert_eq!(AmbientPoly::from_json(&p.to_json(), 2).unwrap(), p);
}

fn small_laurent(rank: usize) -> impl Strategy<Value = LaurentPoly<Rational>> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, rank), -3i64..=3), 1..5).prop_map(
        move |ts| LaurentPoly::from_terms(rank, ts.into_iter().map(|(e, c)| (Weight::new(&e), int(c)))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn trig_operators_are_linear(f in small_laurent(2), g in small_laurent(2), k in 0u32..3) {
        let r = rs("C2");
        let m = MultiplicityFn::new(k, 1);
        let xi = fund(&r, 1);
        for kind in [OperatorKind::Heckman, OperatorKind::Cherednik] {
            let op = OperatorSpec::new(kind, xi.clone(), m);
            let lhs = op.apply_laurent(&r, &f.add(&g)).unwrap();
            let rhs = op.apply_laurent(&r, &f).unwrap().add(&op.apply_laurent(&r, &g).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rational_operator_lowers_degree(e in prop::collection::vec(0u32..4, 3), k in 0u32..3) {
        let r = rs("B3");
        let p = AmbientPoly::monomial(e, int(1));
        let d = rational_dunkl_apply(&r, &MultiplicityFn::new(k, 2), &fund(&r, 2), &p).unwrap();
        if let Some(dd) = d.degree() {
            prop_assert!(dd < p.degree().unwrap());
        }
    }

    #[test]
    fn cherednik_pair_commutes_on_random_input(f in small_laurent(2), k in 0u32..3) {
        let r = rs("B2");
        let m = MultiplicityFn::new(1, k);
        let (a, b) = (fund(&r, 0), fund(&r, 1));
        let ab = cherednik_apply(&r, &m, &a, &cherednik_apply(&r, &m, &b, &f).unwrap()).unwrap();
        let ba = cherednik_apply(&r, &m, &b, &cherednik_apply(&r, &m, &a, &f).unwrap()).unwrap();
        prop_assert_eq!(ab, ba);
    }
}
