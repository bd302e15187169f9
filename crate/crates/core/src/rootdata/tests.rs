use proptest::prelude::*;

use super::*;
use crate::exactnum::{int, rat};

fn all_systems() -> Vec<RootSystem> {
    let mut out = Vec::new();
    for (t, ranks) in [
        (RootType::A, 1..=4),
        (RootType::B, 2..=4),
        (RootType::C, 2..=4),
        (RootType::D, 3..=4),
    ] {
        for r in ranks {
            out.push(RootSystem::build(t, r).unwrap());
        }
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn root_counts_and_group_orders() {
    for rs in all_systems() {
        let n = rs.rank();
        let (npos, order) = match rs.label() {
            RootType::A => (n * (n + 1) / 2, factorial(n + 1)),
            RootType::B | RootType::C => (n * n, (1 << n) * factorial(n)),
            RootType::D => (n * (n - 1), (1 << (n - 1)) * factorial(n)),
        };
        assert_eq!(rs.positive_roots().len(), npos, "{}", rs.name());
        assert_eq!(rs.weyl_group().len(), order, "{}", rs.name());
    }
}

#[test]
fn c2_roots_and_lengths() {
    let rs = RootSystem::parse("C2").unwrap();
    let simple: Vec<_> = rs.positive_roots().iter().map(|r| r.simple.clone()).collect();
    assert_eq!(simple, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1]]);
    let norms: Vec<_> = rs.positive_roots().iter().map(|r| r.norm.clone()).collect();
    assert_eq!(norms, vec![int(4), int(2), int(2), int(4)]);
    let classes: Vec<_> = rs.positive_roots().iter().map(|r| r.class).collect();
    assert_eq!(classes, vec![LONG, SHORT, SHORT, LONG]);
    assert_eq!(rs.fund_gram()[0][0], int(1));
    assert_eq!(rs.fund_gram()[1][1], int(2));
    assert_eq!(rs.fund_gram()[0][1], int(1));
}

#[test]
fn a1_normalization() {
    let rs = RootSystem::parse("A1").unwrap();
    let w = Weight::new(&[1]);
    assert_eq!(rs.inner_weights(&w, &w), int(1));
    let a = rs.simple_root(0);
    assert_eq!(a.coords(), &[2]);
    assert_eq!(rs.inner_weights(&a, &a), int(4));
}

#[test]
fn simply_laced_have_one_class() {
    for name in ["A2", "A3", "D4"] {
        assert_eq!(RootSystem::parse(name).unwrap().num_classes(), 1);
    }
    for name in ["B3", "C4"] {
        assert_eq!(RootSystem::parse(name).unwrap().num_classes(), 2);
    }
}

#[test]
fn unsupported_labels_rejected() {
    assert!(matches!(
        RootSystem::parse("E6"),
        Err(Error::UnsupportedRootSystem { .. })
    ));
    assert!(matches!(
        RootSystem::parse("A5"),
        Err(Error::UnsupportedRootSystem { .. })
    ));
    assert!(matches!(
        RootSystem::parse("D2"),
        Err(Error::UnsupportedRootSystem { .. })
    ));
    assert!(RootSystem::parse("C").is_err());
}

#[test]
fn lower_ideal_a1_and_c2() {
    let a1 = RootSystem::parse("A1").unwrap();
    let got = a1.lower_ideal(&Weight::new(&[4])).unwrap();
    assert_eq!(got, vec![Weight::new(&[0]), Weight::new(&[2]), Weight::new(&[4])]);

    let c2 = RootSystem::parse("C2").unwrap();
    let lam = Weight::new(&[2, 0]);
    let got = c2.lower_ideal(&lam).unwrap();
    assert_eq!(*got.last().unwrap(), lam);
    assert!(got.contains(&Weight::new(&[0, 0])));
    assert!(got.contains(&Weight::new(&[0, 1])));
    assert_eq!(got.len(), 3);
    assert!(matches!(
        c2.lower_ideal(&Weight::new(&[-1, 1])),
        Err(Error::NotDominant(_))
    ));
}

#[test]
fn rho_k_is_weighted_root_sum() {
    let c2 = RootSystem::parse("C2").unwrap();
    // Σ α over positive roots = 2ρ = (2, 2)
    assert_eq!(c2.rho_k(&MultiplicityFn::uniform(1)).coords(), &[2, 2]);
    let short_only = c2.rho_k(&MultiplicityFn::new(0, 1));
    let sum: Weight = c2
        .positive_roots()
        .iter()
        .filter(|r| r.class == SHORT)
        .fold(Weight::zero(2), |acc, r| acc + r.weight);
    assert_eq!(short_only, sum);
}

#[test]
fn rational_reflection_matches_integral() {
    let b3 = RootSystem::parse("B3").unwrap();
    let xi = vec![rat(1, 2), int(-3), rat(5, 3)];
    for idx in 0..b3.positive_roots().len() {
        let once = b3.reflect_rational(idx, &xi);
        assert_eq!(b3.reflect_rational(idx, &once), xi);
        assert_eq!(b3.inner(&once, &once), b3.inner(&xi, &xi));
    }
}

#[test]
fn info_serializes() {
    let info = RootSystem::parse("C2").unwrap().info();
    let json = serde_json::to_value(&info).unwrap();
    assert_eq!(json["type"], "C2");
    assert_eq!(json["positive_roots"][3], serde_json::json!([2, 1]));
    assert_eq!(json["root_class"], serde_json::json!([1, 2, 2, 1]));
}

fn box_weights(rank: usize, bound: i32) -> Vec<Weight> {
    let side = (2 * bound + 1) as usize;
    (0..side.pow(rank as u32))
        .map(|mut n| {
            let coords: Vec<i32> = (0..rank)
                .map(|_| {
                    let c = (n % side) as i32 - bound;
                    n /= side;
                    c
                })
                .collect();
            Weight::new(&coords)
        })
        .collect()
}

#[test]
fn every_orbit_in_the_box_has_one_dominant_element() {
    for rs in all_systems() {
        for w in box_weights(rs.rank(), 3) {
            let orbit = rs.weyl_orbit(&w);
            let dominant: Vec<_> = orbit.iter().filter(|x| x.is_dominant()).collect();
            assert_eq!(dominant.len(), 1, "{} {w:?}", rs.name());
            assert_eq!(*dominant[0], rs.dominant_rep(&w));
        }
    }
}

#[test]
fn dominance_order_is_a_partial_order() {
    for rs in all_systems().into_iter().filter(|rs| rs.rank() <= 2) {
        let ws = box_weights(rs.rank(), 2);
        for a in &ws {
            assert!(rs.dominance_leq(a, a));
            for b in &ws {
                let ab = rs.dominance_leq(a, b);
                if ab && rs.dominance_leq(b, a) {
                    assert_eq!(a, b);
                }
                if !ab {
                    continue;
                }
                for c in &ws {
                    if rs.dominance_leq(b, c) {
                        assert!(rs.dominance_leq(a, c), "{} {a:?} {b:?} {c:?}", rs.name());
                    }
                }
            }
        }
    }
}

#[test]
fn multiplicity_is_weyl_invariant() {
    let k = MultiplicityFn::new(3, 5);
    for rs in all_systems() {
        let roots = rs.positive_roots();
        for a in roots {
            for i in 0..rs.rank() {
                let img = rs.reflect_simple(i, &a.weight);
                let b = roots
                    .iter()
                    .find(|b| b.weight == img || b.weight == img.scaled(-1))
                    .expect("reflection permutes the roots");
                assert_eq!(k.of(a), k.of(b), "{}", rs.name());
                assert_eq!(a.norm, b.norm);
            }
        }
    }
}

fn system_strategy() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(all_systems())
}

fn weight_for(rank: usize, bound: i32) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-bound..=bound, rank).prop_map(|v| Weight::new(&v))
}

fn system_and_weight() -> impl Strategy<Value = (RootSystem, Weight)> {
    system_strategy().prop_flat_map(|rs| {
        let r = rs.rank();
        (Just(rs), weight_for(r, 4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_isometric_involutions((rs, w) in system_and_weight()) {
        for idx in 0..rs.positive_roots().len() {
            let img = rs.reflect(idx, &w);
            prop_assert_eq!(rs.reflect(idx, &img), w);
            prop_assert_eq!(rs.inner_weights(&img, &img), rs.inner_weights(&w, &w));
        }
    }

    #[test]
    fn dominant_rep_is_in_orbit((rs, w) in system_and_weight()) {
        let d = rs.dominant_rep(&w);
        prop_assert!(d.is_dominant());
        let orbit = rs.weyl_orbit(&w);
        prop_assert!(orbit.contains(&d));
        prop_assert_eq!(orbit.iter().filter(|x| x.is_dominant()).count(), 1);
    }

    #[test]
    fn group_action_respects_inverse((rs, w) in system_and_weight()) {
        for g in rs.weyl_group().iter().step_by(5) {
            prop_assert_eq!(g.inverse().act(&rs, &g.act(&rs, &w)), w);
        }
    }

    #[test]
    fn lower_ideal_is_dominant_and_below((rs, w) in system_and_weight()) {
        let lam = rs.dominant_rep(&w);
        let ideal = rs.lower_ideal(&lam).unwrap();
        prop_assert_eq!(*ideal.last().unwrap(), lam);
        for mu in &ideal {
            prop_assert!(mu.is_dominant());
            prop_assert!(rs.dominance_leq(mu, &lam));
        }
        // every dominant weight of bounded height below λ is listed
        for mu in rs.dominant_weights(lam.height().max(0) as u32) {
            if rs.dominance_leq(&mu, &lam) {
                prop_assert!(ideal.contains(&mu));
            }
        }
    }
}
