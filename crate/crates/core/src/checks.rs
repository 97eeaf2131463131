//! Property suites over the battery. Each returns a [`CheckOutcome`] instead
//! of panicking so that callers can print one line per suite.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{dual, enumerate_subgroups, Element, FinAbGroup, Subgroup, DEFAULT_BUDGET};
use crate::battery::{random_metric, random_symmetric};
use crate::classify::{
    analyze_all, enumerate_pairs, fiber_functors, is_sigma_fixed, oracle, sigma_act, solve_nu, solve_nu_from,
    twisted_form, ClassifyOptions, SigmaFormula, TMap,
};
use crate::error::{Error, Result};
use crate::forms::{
    alt_form, alternating_forms, lagrangians, solve_coboundary, solve_coboundary_bilinear, standard_cocycle,
    BilinearCocycle, CochainTable, Sign, GAUSS_TOLERANCE,
};
use crate::phase::PhaseExp;
use crate::tycat::TyData;

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Runs `body`, turning `Ok(Err(msg))` and `Err(e)` into failures.
fn run(name: &str, body: impl FnOnce() -> Result<std::result::Result<String, String>>) -> CheckOutcome {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome {
        name: name.to_string(),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

/// `σ² = id` on every pair, orbits of size 1 or 2, and independence of
/// `ψ̃` from the choice of `t` modulo the radical.
pub fn sigma_involution(metrics: &[TyData]) -> CheckOutcome {
    run("sigma involution", || {
        let (mut pairs_seen, mut fixed, mut moved, mut perturbed) = (0, 0, 0, 0);
        for ty in metrics {
            let pairs = enumerate_pairs(ty.group(), DEFAULT_BUDGET)?;
            for p in &pairs {
                pairs_seen += 1;
                let img = sigma_act(ty, p)?;
                if pairs.binary_search(&img).is_err() {
                    return Ok(Err(format!("{ty:?}: image {img} of {p} is not a pair")));
                }
                if sigma_act(ty, &img)? != *p {
                    return Ok(Err(format!("{}|{}: sigma^2 moves {p}", ty.group(), ty.chi())));
                }
                if img == *p {
                    fixed += 1;
                } else {
                    moved += 1;
                }
                let tmap = TMap::new(ty, p);
                let dom = tmap.domain();
                let base: Vec<Element> = dom.basis().iter().map(|b| tmap.t_coords(b)).collect::<Result<_>>()?;
                let h = p.h();
                for r in tmap.radical().elements().filter(|r| !r.is_zero()) {
                    let rc = h.coords_of(&r).expect("radical inside H");
                    let ts: Vec<Element> = base
                        .iter()
                        .enumerate()
                        .map(|(k, t)| h.group().add(t, &h.group().scale(&rc, k as i64 + 1)))
                        .collect();
                    if twisted_form(p, dom, &ts)? != *img.xi() {
                        return Ok(Err(format!("{p}: form depends on t modulo the radical")));
                    }
                    perturbed += 1;
                }
            }
        }
        if moved % 2 != 0 {
            return Ok(Err("moved pairs do not split into 2-orbits".into()));
        }
        Ok(Ok(format!(
            "{pairs_seen} pairs on {} metrics: {fixed} fixed, {} orbits of size 2; {perturbed} t-perturbations",
            metrics.len(),
            moved / 2
        )))
    })
}

/// `alt_form ∘ standard_cocycle = id` on every alternating form of every
/// subgroup type of the given groups, with the `∏ gcd` count.
pub fn alt_form_bijection(groups: &[FinAbGroup]) -> CheckOutcome {
    run("alternating-form bijection", || {
        let mut types = std::collections::BTreeSet::new();
        for g in groups {
            for s in enumerate_subgroups(g, DEFAULT_BUDGET)? {
                types.insert(s.group().clone());
            }
        }
        let mut forms_seen = 0;
        for t in &types {
            let forms = alternating_forms(t);
            let o = t.orders();
            let mut expected = 1u64;
            for i in 0..o.len() {
                for j in i + 1..o.len() {
                    expected *= num_integer::gcd(o[i], o[j]);
                }
            }
            if forms.len() as u64 != expected {
                return Ok(Err(format!("{t}: {} forms, expected {expected}", forms.len())));
            }
            let elems: Vec<Element> = t.elements().collect();
            for (k, xi) in forms.iter().enumerate() {
                forms_seen += 1;
                if forms[..k].contains(xi) {
                    return Ok(Err(format!("{t}: form {xi} listed twice")));
                }
                let psi = standard_cocycle(xi);
                if alt_form(&psi) != *xi {
                    return Ok(Err(format!("{t}: round trip fails for {xi}")));
                }
                for x in &elems {
                    if !xi.eval(x, x).is_zero() {
                        return Ok(Err(format!("{t}: xi({x},{x}) != 0 for {xi}")));
                    }
                }
                if elems.len() <= 16 {
                    for a in &elems {
                        for b in &elems {
                            for c in &elems {
                                let lhs = psi.eval(a, b) + psi.eval(&t.add(a, b), c);
                                let rhs = psi.eval(a, &t.add(b, c)) + psi.eval(b, c);
                                if lhs != rhs {
                                    return Ok(Err(format!("{t}: cocycle identity fails")));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Ok(format!("{} subgroup types, {forms_seen} forms", types.len())))
    })
}

/// `δ(solve(f)) = f` for random symmetric bilinear `f`; every nonzero
/// alternating perturbation is rejected.
pub fn coboundary_random(groups: &[FinAbGroup], per_group: usize, seed: u64) -> CheckOutcome {
    run("coboundary solver", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut solved, mut rejected) = (0, 0);
        for g in groups {
            let elems: Vec<Element> = g.elements().collect();
            let alts: Vec<_> = alternating_forms(g).into_iter().filter(|x| !x.is_zero()).collect();
            for k in 0..per_group {
                let f = random_symmetric(g, &mut rng);
                let f = BilinearCocycle::new(g.clone(), f.matrix().clone())?;
                let nu = solve_coboundary_bilinear(&f)?;
                let table = CochainTable::from_fn(g, |a, b| f.eval(a, b));
                let nu_t = solve_coboundary(&table)?;
                for a in &elems {
                    for b in &elems {
                        if nu.coboundary(a, b) != f.eval(a, b) || nu_t.coboundary(a, b) != f.eval(a, b) {
                            return Ok(Err(format!("{g}: delta nu != f at ({a},{b})")));
                        }
                    }
                }
                solved += 1;
                if k < 20 {
                    for xi in &alts {
                        let bad = f.add(&standard_cocycle(xi))?;
                        let t = CochainTable::from_fn(g, |a, b| bad.eval(a, b));
                        let both = (solve_coboundary_bilinear(&bad), solve_coboundary(&t));
                        if !matches!(both, (Err(Error::CoboundaryPrecondition(_)), Err(Error::CoboundaryPrecondition(_)))) {
                            return Ok(Err(format!("{g}: perturbation by {xi} was accepted")));
                        }
                        rejected += 1;
                    }
                }
            }
        }
        Ok(Ok(format!("{solved} random f solved exactly, {rejected} alternating perturbations rejected")))
    })
}

/// Class counts per sign from `solve_nu` against exhaustive enumeration,
/// for fixed pairs with `|H̄| <= max_hbar`.
pub fn nu_vs_bruteforce(metrics: &[TyData], max_hbar: usize) -> CheckOutcome {
    run("nu solver vs brute force", || {
        let (mut compared, mut classes) = (0, 0);
        for ty in metrics {
            for p in enumerate_pairs(ty.group(), DEFAULT_BUDGET)? {
                let Some(fp) = is_sigma_fixed(ty, &p)? else { continue };
                if fp.hbar().order() > max_hbar {
                    continue;
                }
                let nu = solve_nu(&fp)?;
                let brute = oracle::brute_force_nu(&fp.chi_bar, &fp.xi_bar);
                for tau in [Sign::Plus, Sign::Minus] {
                    if nu.admissible_count(tau) != brute.get(tau) {
                        return Ok(Err(format!(
                            "{}|{} {p} tau {tau}: solver {} vs brute force {}",
                            ty.group(),
                            ty.chi(),
                            nu.admissible_count(tau),
                            brute.get(tau)
                        )));
                    }
                }
                compared += 1;
                classes += brute.total();
            }
        }
        Ok(Ok(format!("{compared} fixed pairs with |Hbar| <= {max_hbar}, {classes} classes agree")))
    })
}

/// Class representatives do not depend on the particular solution.
pub fn nu_representative_independence(metrics: &[TyData], trials: usize, seed: u64) -> CheckOutcome {
    run("nu representative independence", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut runs = 0;
        for ty in metrics {
            for p in enumerate_pairs(ty.group(), DEFAULT_BUDGET)? {
                let Some(fp) = is_sigma_fixed(ty, &p)? else { continue };
                let base = solve_nu(&fp)?;
                let hbar = fp.hbar().clone();
                let elems: Vec<Element> = hbar.elements().collect();
                for _ in 0..trials {
                    let lambda = hbar.element(rng.gen_range(0..hbar.order()));
                    let nu0 = base.particular.add_fn(|i| dual::eval(&hbar, &lambda, &elems[i]));
                    let other = solve_nu_from(&fp, nu0)?;
                    let reps = |s: &crate::classify::NuSolution| -> Vec<(Vec<PhaseExp>, Sign)> {
                        s.classes.iter().map(|c| (c.rep.table().to_vec(), c.sign)).collect()
                    };
                    if reps(&base) != reps(&other) || base.presign_solvable != other.presign_solvable {
                        return Ok(Err(format!("{p}: classes change with the particular solution")));
                    }
                    runs += 1;
                }
            }
        }
        Ok(Ok(format!("{runs} re-solves with random particular solutions")))
    })
}

/// Gauss sums of every produced ν. The gated quantity is the sum over one
/// fixed point per norm coset; the literal full fixed-point sum is reported.
pub fn gauss_soundness(metrics: &[TyData]) -> CheckOutcome {
    run("Gauss-sign soundness", || {
        let (mut checked, mut literal_off) = (0, 0);
        let mut worst: f64 = 0.0;
        for ty in metrics {
            for p in enumerate_pairs(ty.group(), DEFAULT_BUDGET)? {
                let Some(fp) = is_sigma_fixed(ty, &p)? else { continue };
                let nu = solve_nu(&fp)?;
                let n_reduced = nu.fixed.reps.len() as f64;
                let n_full = nu.fixed.points.len() as f64;
                for c in &nu.classes {
                    let (re, im) = c.reduced_sum;
                    let dev = im.abs().max((re.abs() - n_reduced.sqrt()).abs());
                    worst = worst.max(dev);
                    if dev >= GAUSS_TOLERANCE {
                        return Ok(Err(format!("{p}: reduced sum {re}+{im}i, expected ±{}", n_reduced.sqrt())));
                    }
                    let (fr, fi) = c.full_sum;
                    if fi.abs() >= GAUSS_TOLERANCE || ((fr * fr + fi * fi).sqrt() - n_full.sqrt()).abs() >= GAUSS_TOLERANCE {
                        literal_off += 1;
                    }
                    checked += 1;
                }
            }
        }
        Ok(Ok(format!(
            "{checked} classes, max deviation {worst:.1e} over coset representatives; \
             {literal_off} classes where |sum over all fixed points| != sqrt(#fixed points)"
        )))
    })
}

/// `|E| = |A|`, σ² = id on `E`, obstruction triviality matches pre-sign
/// solvability.
pub fn e_group_checks(metrics: &[TyData]) -> CheckOutcome {
    run("E group", || {
        let (mut pairs, mut fixed, mut source_formula) = (0, 0, 0);
        for ty in metrics {
            for pa in analyze_all(ty, &ClassifyOptions::default())? {
                pairs += 1;
                let elems = pa.e.elements();
                let distinct: std::collections::HashSet<_> = elems.iter().map(|x| pa.e.to_snf(x)).collect();
                if pa.e.order() != ty.group().order() || distinct.len() != elems.len() {
                    return Ok(Err(format!("{}: |E| = {} for |A| = {}", pa.pair, pa.e.order(), ty.group().order())));
                }
                if let (Some(se), Some(nu)) = (&pa.sigma_e, &pa.nu) {
                    fixed += 1;
                    if !se.matrix.compose(&se.matrix)?.is_identity() {
                        return Ok(Err(format!("{}: sigma^2 != id on E", pa.pair)));
                    }
                    if se.obstruction_trivial != nu.presign_solvable {
                        return Ok(Err(format!("{}: obstruction and solvability disagree", pa.pair)));
                    }
                    if se.formula == SigmaFormula::Source {
                        source_formula += 1;
                    }
                }
            }
        }
        Ok(Ok(format!(
            "{pairs} pairs with |E| = |A|; {fixed} fixed pairs with sigma^2 = id and matching obstruction; \
             alternate formula needed {source_formula} times"
        )))
    })
}

/// Fiber-functor counts through `ν` and through `(s, μ)`.
pub fn tambara_agreement(battery: &[TyData]) -> CheckOutcome {
    run("fiber functors vs (s, mu)", || {
        let mut total = 0;
        for ty in battery {
            let ff = fiber_functors(ty)?;
            if ff.count != ff.tambara {
                return Ok(Err(format!("{}|{}|{}: {} vs {}", ty.group(), ty.chi(), ty.tau(), ff.count, ff.tambara)));
            }
            total += ff.count;
        }
        Ok(Ok(format!("{} categories, {total} fiber functors in total", battery.len())))
    })
}

/// Lagrangian existence against fixed-pair existence; Lagrangians also
/// against a subset-closure scan.
pub fn group_theoreticity(metrics: &[TyData], random: usize, max_order: u64, seed: u64) -> CheckOutcome {
    run("group-theoreticity iff", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cases: Vec<TyData> = metrics.to_vec();
        cases.extend((0..random).map(|_| random_metric(max_order, &mut rng)));
        let (mut yes, mut no) = (0, 0);
        for ty in &cases {
            let lags = lagrangians(ty.chi(), DEFAULT_BUDGET)?;
            let lag_idx: Vec<Vec<usize>> = lags.iter().map(|l: &Subgroup| l.indices().to_vec()).collect();
            if ty.group().order() <= 16 && lag_idx != oracle::brute_force_lagrangians(ty.chi()) {
                return Ok(Err(format!("{}|{}: Lagrangian scan disagrees", ty.group(), ty.chi())));
            }
            let mut any_fixed = false;
            for p in enumerate_pairs(ty.group(), DEFAULT_BUDGET)? {
                if is_sigma_fixed(ty, &p)?.is_some() {
                    any_fixed = true;
                    break;
                }
            }
            if any_fixed != !lags.is_empty() {
                return Ok(Err(format!(
                    "{}|{}: Lagrangian {} but fixed pair {any_fixed}",
                    ty.group(),
                    ty.chi(),
                    !lags.is_empty()
                )));
            }
            if any_fixed {
                yes += 1;
            } else {
                no += 1;
            }
        }
        Ok(Ok(format!(
            "{} metrics ({} random, |A| <= {max_order}): {yes} group-theoretical, {no} not",
            cases.len(),
            random
        )))
    })
}
