use tymod_core::battery::{battery, battery_metrics, parse_sweep_line};
use tymod_core::classify::{
    analyze_all, enumerate_pairs, fiber_functors, is_group_theoretical, is_sigma_fixed, sigma_act, solve_nu,
    twisted_form, TMap,
};
use tymod_core::forms::{parse_bicharacter, Sign};
use tymod_core::{classify, ClassificationReport, ClassifyOptions, Element, Error, FinAbGroup, TyData};

fn ty(line: &str) -> TyData {
    parse_sweep_line(line).unwrap().unwrap()
}

fn run(line: &str) -> ClassificationReport {
    classify(&ty(line), &ClassifyOptions::default()).unwrap()
}

// (line, pairs, induced orbits, equivariant classes, obstructed fixed pairs,
//  fiber functors, group-theoretical, lagrangians)
type Row = (&'static str, usize, usize, usize, usize, usize, bool, usize);

const FROZEN: &[Row] = &[
    ("Z2|1/2|+", 2, 1, 0, 0, 0, false, 0),
    ("Z2|1/2|-", 2, 1, 0, 0, 0, false, 0),
    ("Z3|1/3|+", 2, 1, 0, 0, 0, false, 0),
    ("Z3|1/3|-", 2, 1, 0, 0, 0, false, 0),
    ("Z3|2/3|+", 2, 1, 0, 0, 0, false, 0),
    ("Z3|2/3|-", 2, 1, 0, 0, 0, false, 0),
    ("Z4|1/4|+", 3, 1, 1, 0, 0, true, 1),
    ("Z4|1/4|-", 3, 1, 0, 1, 0, true, 1),
    ("Z4|3/4|+", 3, 1, 1, 0, 0, true, 1),
    ("Z4|3/4|-", 3, 1, 0, 1, 0, true, 1),
    ("Z5|1/5|+", 2, 1, 0, 0, 0, false, 0),
    ("Z5|1/5|-", 2, 1, 0, 0, 0, false, 0),
    ("Z5|2/5|+", 2, 1, 0, 0, 0, false, 0),
    ("Z5|2/5|-", 2, 1, 0, 0, 0, false, 0),
    ("Z5|3/5|+", 2, 1, 0, 0, 0, false, 0),
    ("Z5|3/5|-", 2, 1, 0, 0, 0, false, 0),
    ("Z5|4/5|+", 2, 1, 0, 0, 0, false, 0),
    ("Z5|4/5|-", 2, 1, 0, 0, 0, false, 0),
    ("Z6|1/6|+", 4, 2, 0, 0, 0, false, 0),
    ("Z6|1/6|-", 4, 2, 0, 0, 0, false, 0),
    ("Z6|5/6|+", 4, 2, 0, 0, 0, false, 0),
    ("Z6|5/6|-", 4, 2, 0, 0, 0, false, 0),
    ("Z8|1/8|+", 4, 2, 0, 0, 0, false, 0),
    ("Z8|1/8|-", 4, 2, 0, 0, 0, false, 0),
    ("Z8|3/8|+", 4, 2, 0, 0, 0, false, 0),
    ("Z8|3/8|-", 4, 2, 0, 0, 0, false, 0),
    ("Z8|5/8|+", 4, 2, 0, 0, 0, false, 0),
    ("Z8|5/8|-", 4, 2, 0, 0, 0, false, 0),
    ("Z8|7/8|+", 4, 2, 0, 0, 0, false, 0),
    ("Z8|7/8|-", 4, 2, 0, 0, 0, false, 0),
    ("Z9|1/9|+", 3, 1, 1, 0, 0, true, 1),
    ("Z9|1/9|-", 3, 1, 0, 1, 0, true, 1),
    ("Z9|2/9|+", 3, 1, 1, 0, 0, true, 1),
    ("Z9|2/9|-", 3, 1, 0, 1, 0, true, 1),
    ("Z9|4/9|+", 3, 1, 1, 0, 0, true, 1),
    ("Z9|4/9|-", 3, 1, 0, 1, 0, true, 1),
    ("Z9|5/9|+", 3, 1, 1, 0, 0, true, 1),
    ("Z9|5/9|-", 3, 1, 0, 1, 0, true, 1),
    ("Z9|7/9|+", 3, 1, 1, 0, 0, true, 1),
    ("Z9|7/9|-", 3, 1, 0, 1, 0, true, 1),
    ("Z9|8/9|+", 3, 1, 1, 0, 0, true, 1),
    ("Z9|8/9|-", 3, 1, 0, 1, 0, true, 1),
    ("Z2xZ2|0,1/2;1/2,0|+", 6, 1, 6, 0, 3, true, 3),
    ("Z2xZ2|0,1/2;1/2,0|-", 6, 1, 1, 3, 1, true, 3),
    ("Z2xZ2|1/2,1/2;1/2,0|+", 6, 2, 2, 0, 1, true, 1),
    ("Z2xZ2|1/2,1/2;1/2,0|-", 6, 2, 0, 2, 0, true, 1),
    ("Z2xZ2|1/2,0;0,1/2|+", 6, 2, 2, 0, 1, true, 1),
    ("Z2xZ2|1/2,0;0,1/2|-", 6, 2, 0, 2, 0, true, 1),
    ("Z2xZ2|0,1/2;1/2,1/2|+", 6, 2, 2, 0, 1, true, 1),
    ("Z2xZ2|0,1/2;1/2,1/2|-", 6, 2, 0, 2, 0, true, 1),
    ("Z2xZ4|1/2,0;0,1/4|+", 10, 5, 0, 0, 0, false, 0),
    ("Z2xZ4|1/2,0;0,1/4|-", 10, 5, 0, 0, 0, false, 0),
    ("Z2xZ4|1/2,1/2;1/2,1/4|+", 10, 5, 0, 0, 0, false, 0),
    ("Z2xZ4|1/2,1/2;1/2,1/4|-", 10, 5, 0, 0, 0, false, 0),
    ("Z2xZ4|1/2,0;0,3/4|+", 10, 5, 0, 0, 0, false, 0),
    ("Z2xZ4|1/2,0;0,3/4|-", 10, 5, 0, 0, 0, false, 0),
    ("Z2xZ4|1/2,1/2;1/2,3/4|+", 10, 5, 0, 0, 0, false, 0),
    ("Z2xZ4|1/2,1/2;1/2,3/4|-", 10, 5, 0, 0, 0, false, 0),
    ("Z3xZ3|0,1/3;1/3,0|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|0,1/3;1/3,0|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|1/3,1/3;1/3,0|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|1/3,1/3;1/3,0|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|2/3,1/3;1/3,0|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|2/3,1/3;1/3,0|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|0,2/3;2/3,0|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|0,2/3;2/3,0|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|1/3,2/3;2/3,0|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|1/3,2/3;2/3,0|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|2/3,2/3;2/3,0|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|2/3,2/3;2/3,0|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|1/3,0;0,1/3|+", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|1/3,0;0,1/3|-", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|2/3,0;0,1/3|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|2/3,0;0,1/3|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|0,1/3;1/3,1/3|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|0,1/3;1/3,1/3|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|2/3,1/3;1/3,1/3|+", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|2/3,1/3;1/3,1/3|-", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|0,2/3;2/3,1/3|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|0,2/3;2/3,1/3|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|2/3,2/3;2/3,1/3|+", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|2/3,2/3;2/3,1/3|-", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|1/3,0;0,2/3|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|1/3,0;0,2/3|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|2/3,0;0,2/3|+", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|2/3,0;0,2/3|-", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|0,1/3;1/3,2/3|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|0,1/3;1/3,2/3|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|1/3,1/3;1/3,2/3|+", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|1/3,1/3;1/3,2/3|-", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|0,2/3;2/3,2/3|+", 8, 2, 4, 0, 2, true, 2),
    ("Z3xZ3|0,2/3;2/3,2/3|-", 8, 2, 0, 4, 0, true, 2),
    ("Z3xZ3|1/3,2/3;2/3,2/3|+", 8, 4, 0, 0, 0, false, 0),
    ("Z3xZ3|1/3,2/3;2/3,2/3|-", 8, 4, 0, 0, 0, false, 0),
];

#[test]
fn battery_counts_are_frozen() {
    assert_eq!(FROZEN.len(), battery().len());
    for &(line, pairs, induced, equiv, obstructed, ff, gt, lags) in FROZEN {
        let r = run(line);
        assert_eq!(
            (r.pair_count(), r.induced.len(), r.equivariant.len(), r.obstructed_fixed.len()),
            (pairs, induced, equiv, obstructed),
            "{line}"
        );
        assert_eq!((r.fiber_functor_count, r.group_theoretical, r.lagrangians.len()), (ff, gt, lags), "{line}");
        // every pair is accounted for exactly once
        let fixed = r.pairs.iter().filter(|p| p.is_fixed()).count();
        assert_eq!(2 * r.induced.len() + fixed, r.pair_count(), "{line}");
    }
}

#[test]
fn ising() {
    let r = run("Z2|1/2|+");
    assert_eq!(r.induced.len(), 1);
    assert!(r.equivariant.is_empty() && r.obstructed_fixed.is_empty());
    assert!(!r.group_theoretical);
    assert_eq!(r.fiber_functor_count, 0);
    assert_eq!(run("Z2|1/2|-").module_count(), 1);
}

#[test]
fn z4_depends_on_tau() {
    let plus = run("Z4|1/4|+");
    assert_eq!((plus.induced.len(), plus.equivariant.len(), plus.obstructed_fixed.len()), (1, 1, 0));
    let fixed = &plus.equivariant[0].pair;
    assert_eq!(fixed.h().order(), 2);
    let minus = run("Z4|1/4|-");
    assert_eq!((minus.induced.len(), minus.equivariant.len(), minus.obstructed_fixed.len()), (1, 0, 1));
    assert_eq!(&minus.obstructed_fixed[0], fixed);
}

#[test]
fn hyperbolic_plane_over_z2() {
    let plus = run("Z2xZ2|0,1/2;1/2,0|+");
    assert_eq!(plus.fiber_functor_count, 3);
    assert_eq!(plus.lagrangians.len(), 3);
    let minus = run("Z2xZ2|0,1/2;1/2,0|-");
    assert_eq!(minus.fiber_functor_count, 1);
    assert_eq!(minus.equivariant.len(), 1);
    assert_eq!(minus.obstructed_fixed.len(), 3);
    for r in [&plus, &minus] {
        assert!(r.equivariant.iter().all(|e| e.sign == r.ty.tau()));
    }
}

#[test]
fn tau_only_changes_sign_selection() {
    for t in battery_metrics() {
        let p = classify(&t, &ClassifyOptions::default()).unwrap();
        let m = classify(&t.with_tau(Sign::Minus), &ClassifyOptions::default()).unwrap();
        assert_eq!(p.induced, m.induced);
        assert_eq!(p.group_theoretical, m.group_theoretical);
        // each fixed pair contributes its classes to exactly one sign
        let total: usize = p.pairs.iter().filter_map(|x| x.nu.as_ref()).map(|n| n.classes.len()).sum();
        assert_eq!(p.equivariant.len() + m.equivariant.len(), total);
    }
}

#[test]
fn worker_count_does_not_change_output() {
    for line in ["Z3xZ3|0,1/3;1/3,0|+", "Z2xZ4|1/2,0;0,1/4|-"] {
        let a = classify(&ty(line), &ClassifyOptions::default().with_workers(1)).unwrap();
        let b = classify(&ty(line), &ClassifyOptions::default().with_workers(8)).unwrap();
        let key = |r: &ClassificationReport| {
            (
                r.induced.clone(),
                r.equivariant.iter().map(|e| (e.pair.clone(), e.nu.clone())).collect::<Vec<_>>(),
                r.obstructed_fixed.clone(),
            )
        };
        assert_eq!(key(&a), key(&b), "{line}");
    }
}

#[test]
fn sigma_is_an_involution_and_t_choice_is_irrelevant() {
    for t in battery_metrics() {
        for p in enumerate_pairs(t.group(), 1 << 12).unwrap() {
            let img = sigma_act(&t, &p).unwrap();
            assert_eq!(sigma_act(&t, &img).unwrap(), p);
            assert_eq!(is_sigma_fixed(&t, &p).unwrap().is_some(), img == p);
            let tmap = TMap::new(&t, &p);
            let h = p.h();
            let r = tmap.radical();
            if r.order() == 1 {
                continue;
            }
            let shift = h.coords_of(&r.elements().last().unwrap()).unwrap();
            let ts: Vec<Element> = tmap
                .domain()
                .basis()
                .iter()
                .map(|b| h.group().add(&tmap.t_coords(b).unwrap(), &shift))
                .collect();
            assert_eq!(&twisted_form(&p, tmap.domain(), &ts).unwrap(), img.xi());
        }
    }
}

#[test]
fn fixed_pair_data_is_consistent() {
    for t in battery_metrics() {
        for pa in analyze_all(&t, &ClassifyOptions::default()).unwrap() {
            let Some(fp) = &pa.fixed else { continue };
            // s is an involution of Hbar carrying xi_bar to chi_bar
            let hbar = fp.hbar();
            assert!(fp.s.compose(&fp.s).unwrap().is_identity());
            for a in hbar.elements() {
                for b in hbar.elements() {
                    assert_eq!(fp.xi_bar.eval(&fp.s.apply(&a), &b), fp.chi_bar.eval(&a, &b));
                }
            }
            let nu = solve_nu(fp).unwrap();
            for c in &nu.classes {
                for a in hbar.elements() {
                    // nu(a) + nu(s a) = 0
                    assert!((c.rep.get(&a) + c.rep.get(&fp.s.apply(&a))).is_zero());
                }
            }
        }
    }
}

#[test]
fn fiber_functor_helper_matches_report() {
    for t in battery() {
        let r = classify(&t, &ClassifyOptions::default()).unwrap();
        let ff = fiber_functors(&t).unwrap();
        assert_eq!(ff.count, r.fiber_functor_count);
        assert_eq!(ff.count, ff.tambara);
        let (gt, lags) = is_group_theoretical(&t, &ClassifyOptions::default()).unwrap();
        assert_eq!(gt, r.group_theoretical);
        assert_eq!(lags, r.lagrangians);
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    let g = FinAbGroup::new(vec![2, 2]).unwrap();
    let degenerate = parse_bicharacter("1/2,0;0,0", &g).unwrap();
    assert!(TyData::new(degenerate, Sign::Plus).is_err());
    let asym = parse_bicharacter("0,1/2;0,0", &g);
    assert!(asym.is_err() || TyData::new(asym.unwrap(), Sign::Plus).is_err());
    assert!(parse_bicharacter("1/3", &FinAbGroup::cyclic(2)).is_err());
    let big = ty("Z3xZ3|0,1/3;1/3,0|+");
    let res = classify(&big, &ClassifyOptions::default().with_budget(4));
    assert!(matches!(res, Err(Error::BudgetExceeded { .. })), "{res:?}");
}
