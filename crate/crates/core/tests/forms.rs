use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tymod_core::abelian::{enumerate_subgroups, DEFAULT_BUDGET};
use tymod_core::battery::{groups_up_to, random_symmetric};
use tymod_core::classify::oracle::brute_force_lagrangians;
use tymod_core::forms::{gauss_sign, lagrangians, Sign};
use tymod_core::{Element, PhaseExp};

#[test]
fn double_perp_and_radical() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in groups_up_to(64) {
        let chi = loop {
            let c = random_symmetric(&g, &mut rng);
            if c.is_nondegenerate() {
                break c;
            }
        };
        let subs = enumerate_subgroups(&g, DEFAULT_BUDGET).unwrap();
        for s in subs.iter().step_by(1 + subs.len() / 40) {
            let p = chi.perp(s);
            assert_eq!(p.order() * s.order(), g.order(), "{g}");
            assert_eq!(chi.perp(&p), *s, "{g}");
            for a in p.elements() {
                assert!(s.elements().all(|b| chi.eval(&a, &b).is_zero()));
            }
        }
        let full = tymod_core::Subgroup::full(&g);
        assert_eq!(chi.perp(&full).order(), 1);
        // a random (possibly degenerate) form: radical = perp of everything
        let d = random_symmetric(&g, &mut rng);
        let rad: Vec<Element> = g.elements().filter(|a| g.elements().all(|b| d.eval(a, &b).is_zero())).collect();
        assert_eq!(d.left_kernel().elements().collect::<Vec<_>>(), rad);
        assert_eq!(d.perp(&full), d.left_kernel());
    }
}

#[test]
fn lagrangians_match_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for g in groups_up_to(16) {
        for _ in 0..3 {
            let chi = random_symmetric(&g, &mut rng);
            if !chi.is_nondegenerate() {
                continue;
            }
            let ours: Vec<Vec<usize>> = lagrangians(&chi, DEFAULT_BUDGET)
                .unwrap()
                .iter()
                .map(|l| l.indices().to_vec())
                .collect();
            assert_eq!(ours, brute_force_lagrangians(&chi), "{g}");
        }
    }
}

#[test]
fn gauss_signs() {
    let p = |n: i64, d: u64| PhaseExp::new(n, d);
    // magnitude sqrt 2 but not real
    assert!(gauss_sign(&[p(0, 1), p(1, 4)]).is_err());
    assert_eq!(gauss_sign(&[p(0, 1)]).unwrap(), Sign::Plus);
    assert_eq!(gauss_sign(&[p(0, 1), p(0, 1), p(0, 1), p(1, 2)]).unwrap(), Sign::Plus);
    assert_eq!(gauss_sign(&[p(1, 2), p(1, 2), p(1, 2), p(0, 1)]).unwrap(), Sign::Minus);
    // wrong magnitude
    assert!(gauss_sign(&[p(0, 1), p(0, 1)]).is_err());
}
