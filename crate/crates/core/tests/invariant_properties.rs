mod common;

use braidknot::braid::BraidWord;
use braidknot::families::{klink_braid, torus_braid, KLinkSpec, Validation};
use braidknot::invariants::{
    alexander, fingerprint, jones, jones_state_sum, positive_braid_genus, torus_alexander,
    torus_jones, Level, Limits,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let g = n as i32 - 1;
        prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
            let letters = v
                .into_iter()
                .map(|(i, pos)| if pos { i } else { -i })
                .collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

#[test]
fn fingerprints_survive_random_moves() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for trial in 0..500 {
        let w = common::random_word(&mut rng, 5, 12);
        let before = fingerprint(&w, Level::Full, &limits).unwrap();
        let mut v = w.clone();
        let mut trail = Vec::new();
        for _ in 0..10 {
            let m = common::random_move(&mut rng, &v, 8, 24);
            v = v.apply_move(&m).unwrap();
            trail.push(m);
        }
        let after = fingerprint(&v, Level::Full, &limits).unwrap();
        assert_eq!(before, after, "trial {trial}: {w} -> {v} via {trail:?}");
        assert!(before.jones.is_some() && after.jones.is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn alexander_cannot_see_mirrors(w in word(5, 12)) {
        prop_assert_eq!(alexander(&w).unwrap(), alexander(&w.mirror()).unwrap());
    }

    #[test]
    fn knot_alexander_is_palindromic(w in word(5, 12)) {
        prop_assume!(w.component_count() == 1);
        let a = alexander(&w).unwrap();
        prop_assert!(a.is_palindromic(), "{}", a);
        let at_one = a.eval_at_one();
        prop_assert!(at_one == BigInt::from(1) || at_one == BigInt::from(-1), "{}", at_one);
    }

    #[test]
    fn jones_mirror_and_value_at_one(w in word(5, 12)) {
        let lim = Limits::default();
        let v = jones(&w, &lim).unwrap();
        prop_assert_eq!(jones(&w.mirror(), &lim).unwrap(), v.mirror());
        let mu = w.component_count() as u32;
        prop_assert_eq!(v.eval_at_one(), BigInt::from(-2).pow(mu - 1));
    }

    #[test]
    fn temperley_lieb_matches_state_sum(w in word(6, 10)) {
        prop_assert_eq!(jones(&w, &Limits::default()).unwrap(), jones_state_sum(&w));
    }
}

#[test]
fn torus_closed_forms() {
    let lim = Limits::default();
    for p in 2..=7i64 {
        for q in 2..p {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let w = torus_braid(p, q).unwrap();
            assert_eq!(
                alexander(&w).unwrap(),
                torus_alexander(p, q).unwrap(),
                "T({p},{q})"
            );
            assert_eq!(
                jones(&w, &lim).unwrap(),
                torus_jones(p, q).unwrap(),
                "T({p},{q})"
            );
        }
    }
}

#[test]
fn positive_genus_is_half_alexander_span_on_klinks() {
    let mut checked = 0;
    for r1 in 3..=7i64 {
        for s1 in 1..=4i64 {
            for r2 in 2..r1 {
                for s2 in 1..=3i64 {
                    let w = klink_braid(
                        &KLinkSpec::new(vec![(r1, s1), (r2, s2)]),
                        Validation::Strict,
                    )
                    .unwrap();
                    if w.component_count() != 1 {
                        continue;
                    }
                    let span = alexander(&w).unwrap().span();
                    assert_eq!(2 * positive_braid_genus(&w).unwrap() as i64, span, "{w}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 40, "only {checked} knots in the corpus");
}
