use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tymod_core::abelian::{enumerate_subgroups, quotient, solve_hom, DEFAULT_BUDGET};
use tymod_core::battery::groups_up_to;
use tymod_core::classify::oracle::brute_force_subgroups;
use tymod_core::{Element, FinAbGroup, Hom, PhaseExp};

/// Element-index set of the subgroup generated by `gens`, by closure.
fn closure(g: &FinAbGroup, gens: &[usize]) -> Vec<usize> {
    let mut members = BTreeSet::from([0usize]);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.add_index(x, s);
            if members.insert(y) {
                frontier.push(y);
            }
        }
    }
    members.into_iter().collect()
}

#[test]
fn subgroups_match_subset_scan() {
    for g in groups_up_to(16) {
        let ours: Vec<Vec<usize>> = enumerate_subgroups(&g, DEFAULT_BUDGET)
            .unwrap()
            .iter()
            .map(|s| s.indices().to_vec())
            .collect();
        let ours_set: BTreeSet<_> = ours.iter().cloned().collect();
        assert_eq!(ours.len(), ours_set.len(), "{g}: duplicates");
        let brute: BTreeSet<_> = brute_force_subgroups(&g).into_iter().collect();
        assert_eq!(ours_set, brute, "{g}");
    }
}

#[test]
fn subgroups_match_generated_by_rank_tuples() {
    // every subgroup of a group of rank r is generated by r elements
    for g in groups_up_to(64) {
        let n = g.order();
        if (g.rank() == 3 && n > 32) || g.rank() > 3 {
            continue;
        }
        let mut found = BTreeSet::new();
        let mut idx = vec![0usize; g.rank()];
        loop {
            found.insert(closure(&g, &idx));
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < n {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
        let ours: BTreeSet<Vec<usize>> = enumerate_subgroups(&g, DEFAULT_BUDGET)
            .unwrap()
            .iter()
            .map(|s| s.indices().to_vec())
            .collect();
        assert_eq!(ours, found, "{g}");
    }
}

#[test]
fn subgroup_basis_depends_only_on_elements() {
    let g = FinAbGroup::new(vec![4, 4]).unwrap();
    for s in enumerate_subgroups(&g, DEFAULT_BUDGET).unwrap() {
        let elems: Vec<Element> = s.elements().collect();
        for e in &elems {
            let gens: Vec<Element> = elems.iter().filter(|x| *x != e).cloned().collect();
            let t = tymod_core::Subgroup::generated(&g, &gens);
            if t.order() == s.order() {
                assert_eq!(t.basis(), s.basis());
                assert_eq!(t.group(), s.group());
            }
        }
        assert_eq!(s.group().order(), s.order());
    }
}

#[test]
fn quotients_have_the_right_kernel() {
    for g in groups_up_to(16) {
        for h in enumerate_subgroups(&g, DEFAULT_BUDGET).unwrap() {
            let q = quotient(&g, &h).unwrap();
            assert_eq!(q.group.order() * h.order(), g.order());
            let image: BTreeSet<Element> = g.elements().map(|a| q.proj.apply(&a)).collect();
            assert_eq!(image.len(), q.group.order(), "{g}/{h:?}: projection not onto");
            for (i, l) in q.lifts.iter().enumerate() {
                assert_eq!(q.proj.apply(l), q.group.generator(i));
            }
            for a in g.elements() {
                assert_eq!(q.proj.apply(&a).is_zero(), h.contains(&a));
            }
        }
    }
}

fn random_hom(rng: &mut ChaCha8Rng) -> Hom {
    let groups = groups_up_to(16);
    let src = groups[rng.gen_range(0..groups.len())].clone();
    let tgt = groups[rng.gen_range(0..groups.len())].clone();
    // generator images must be killed by the generator order
    let images: Vec<Element> = src
        .orders()
        .iter()
        .map(|&n| {
            let cands: Vec<Element> = tgt.elements().filter(|t| tgt.scale(t, n as i64).is_zero()).collect();
            cands[rng.gen_range(0..cands.len())].clone()
        })
        .collect();
    Hom::from_images(src, tgt, &images).unwrap()
}

#[test]
fn solve_hom_matches_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let f = random_hom(&mut rng);
        let kernel: Vec<usize> = f
            .source()
            .elements()
            .enumerate()
            .filter(|(_, x)| f.apply(x).is_zero())
            .map(|(i, _)| i)
            .collect();
        for t in f.target().elements() {
            let sol = solve_hom(&f, &t);
            let scan = f.source().elements().find(|x| f.apply(x) == t);
            assert_eq!(sol.solution, scan, "{f:?} at {t}");
            assert_eq!(sol.kernel.indices(), &kernel[..]);
        }
    }
}

#[test]
fn phase_arithmetic_matches_floats() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100_000 {
        let (d1, d2) = (rng.gen_range(1..=64u64), rng.gen_range(1..=64u64));
        let a = PhaseExp::new(rng.gen_range(-200..200), d1);
        let b = PhaseExp::new(rng.gen_range(-200..200), d2);
        let s = a + b;
        let f = (a.to_f64() + b.to_f64()).rem_euclid(1.0);
        let diff = (s.to_f64() - f).abs();
        assert!(diff < 1e-12 || (1.0 - diff) < 1e-12, "{a} + {b} = {s}");
        assert_eq!(a - a, PhaseExp::ZERO);
        assert_eq!(s - b, a);
        assert!(s.to_f64() >= 0.0 && s.to_f64() < 1.0);
        assert_eq!(num_integer::gcd(s.num(), s.den()), 1);
    }
}

proptest! {
    #[test]
    fn phase_parse_roundtrip(n in -1000i64..1000, d in 1u64..500) {
        let p = PhaseExp::new(n, d);
        let q: PhaseExp = p.to_string().parse().unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn element_index_roundtrip(o1 in 2u64..9, o2 in 2u64..9, i in 0usize..64) {
        let g = FinAbGroup::new(vec![o1, o2]).unwrap();
        let i = i % g.order();
        prop_assert_eq!(g.index(&g.element(i)), i);
    }
}
