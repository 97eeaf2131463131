//! Equivariant structures on a σ-fixed pair. Solutions of `δν = f` with
//! `f(a,b) = ψ̄(a,b) - ψ̄(s b, s a)` form a torsor over the characters of
//! `H̄`; the twist condition `ν + ν∘s = 0` cuts this down to a coset of
//! `ker (1+s)^*`, and equivalence identifies solutions differing by
//! `η - η∘s`.

use crate::abelian::{dual, Element, FinAbGroup, Hom, Subgroup};
use crate::error::{Error, Result};
use crate::forms::{gauss_sign, gauss_sum, solve_coboundary_bilinear, BilinearCocycle, NuFunction, Sign};
use crate::phase::PhaseExp;

use super::sigma::FixedPair;

/// s-fixed points of `H̄` grouped into cosets of `{c + s c}`.
#[derive(Clone, Debug)]
pub struct FixedPoints {
    /// Indices of all `a` with `s a = a`.
    pub points: Vec<usize>,
    /// One index per coset of `{c + s c}` inside the fixed points.
    pub reps: Vec<usize>,
    /// `{c + s c : c ∈ H̄}`.
    pub norms: Subgroup,
}

impl FixedPoints {
    pub fn new(hbar: &FinAbGroup, s: &Hom) -> Result<Self> {
        let one_plus_s = Hom::identity(hbar).add(s)?;
        let norms = one_plus_s.image();
        let points: Vec<usize> = (0..hbar.order())
            .filter(|&i| {
                let a = hbar.element(i);
                s.apply(&a) == a
            })
            .collect();
        let mut seen = vec![false; hbar.order()];
        let mut reps = Vec::new();
        for &i in &points {
            if seen[i] {
                continue;
            }
            reps.push(i);
            for c in norms.indices() {
                let j = hbar.add_index(i, *c);
                if s.apply(&hbar.element(j)) != hbar.element(j) {
                    return Err(Error::Inconsistency("norm coset leaves the fixed points".into()));
                }
                seen[j] = true;
            }
        }
        Ok(FixedPoints { points, reps, norms })
    }
}

/// One equivalence class of solutions `ν`.
#[derive(Clone, Debug)]
pub struct NuClass {
    /// Lexicographically least table in the class.
    pub rep: NuFunction,
    pub sign: Sign,
    /// Gauss sum over one representative per norm coset of fixed points.
    pub reduced_sum: (f64, f64),
    /// Gauss sum over all fixed points.
    pub full_sum: (f64, f64),
}

#[derive(Clone, Debug)]
pub struct NuSolution {
    pub cocycle: BilinearCocycle,
    pub particular: NuFunction,
    /// `g(a) = ν₀(a) + ν₀(s a)` as a character of `H̄`.
    pub g: Element,
    pub presign_solvable: bool,
    /// Number of `ν` satisfying the coboundary and twist conditions.
    pub torsor_size: usize,
    /// `|{η - η∘s}|`.
    pub equivalence_size: usize,
    pub fixed: FixedPoints,
    /// All classes before the sign filter, ordered by representative.
    pub classes: Vec<NuClass>,
}

impl NuSolution {
    pub fn admissible(&self, tau: Sign) -> impl Iterator<Item = &NuClass> {
        self.classes.iter().filter(move |c| c.sign == tau)
    }

    pub fn admissible_count(&self, tau: Sign) -> usize {
        self.admissible(tau).count()
    }
}

/// `f(a, b) = ψ̄(a, b) - ψ̄(s b, s a)` as a bilinear cocycle on `H̄`.
pub fn twist_cocycle(fixed: &FixedPair) -> Result<BilinearCocycle> {
    let hbar = fixed.hbar();
    let s = &fixed.s;
    let r = hbar.rank();
    let psi = &fixed.psi_bar;
    let matrix = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let (a, b) = (hbar.generator(i), hbar.generator(j));
                    psi.eval(&a, &b) - psi.eval(&s.apply(&b), &s.apply(&a))
                })
                .collect()
        })
        .collect();
    BilinearCocycle::new(hbar.clone(), matrix)
}

pub fn solve_nu(fixed: &FixedPair) -> Result<NuSolution> {
    let f = twist_cocycle(fixed)?;
    let nu0 = solve_coboundary_bilinear(&f)?;
    solve_nu_from(fixed, nu0)
}

/// As [`solve_nu`], starting from a caller-supplied particular solution.
pub fn solve_nu_from(fixed: &FixedPair, nu0: NuFunction) -> Result<NuSolution> {
    let hbar = fixed.hbar().clone();
    let s = &fixed.s;
    let f = twist_cocycle(fixed)?;
    let elems: Vec<Element> = hbar.elements().collect();
    if nu0.domain() != &hbar {
        return Err(Error::Inconsistency("particular solution on the wrong group".into()));
    }
    for a in &elems {
        for b in &elems {
            if nu0.coboundary(a, b) != f.eval(a, b) {
                return Err(Error::Inconsistency(format!("particular solution fails at ({a}, {b})")));
            }
        }
    }

    let g_of = |a: &Element| nu0.get(a) + nu0.get(&s.apply(a));
    let g_vals: Vec<PhaseExp> = (0..hbar.rank()).map(|k| g_of(&hbar.generator(k))).collect();
    let g = dual::from_values(&hbar, &g_vals)
        .map_err(|_| Error::Inconsistency("nu0 + nu0∘s is not a character".into()))?;
    for a in &elems {
        if g_of(a) != dual::eval(&hbar, &g, a) {
            return Err(Error::Inconsistency(format!("nu0 + nu0∘s is not additive at {a}")));
        }
    }

    let id = Hom::identity(&hbar);
    let t = dual::dual_hom(&id.add(s)?);
    let q = dual::dual_hom(&id.add(&s.negate())?);
    let equivalence = q.image();
    let fixed_points = FixedPoints::new(&hbar, s)?;

    let sol = t.solve(&hbar.neg(&g));
    let kernel = sol.kernel;
    if !equivalence.is_subgroup_of(&kernel) {
        return Err(Error::Inconsistency("coboundaries of s violate the twist condition".into()));
    }
    let mut out = NuSolution {
        cocycle: f.clone(),
        particular: nu0.clone(),
        g,
        presign_solvable: sol.solution.is_some(),
        torsor_size: 0,
        equivalence_size: equivalence.order(),
        fixed: fixed_points,
        classes: Vec::new(),
    };
    let Some(lambda0) = sol.solution else {
        return Ok(out);
    };
    out.torsor_size = kernel.order();

    let with_char = |lambda: &Element| nu0.add_fn(|i| dual::eval(&hbar, lambda, &elems[i]));
    let mut seen = vec![false; hbar.order()];
    for k in kernel.elements() {
        let lambda = hbar.add(&lambda0, &k);
        let li = hbar.index(&lambda);
        if seen[li] {
            continue;
        }
        let mut best: Option<NuFunction> = None;
        for e in equivalence.elements() {
            let member = hbar.add(&lambda, &e);
            seen[hbar.index(&member)] = true;
            let nu = with_char(&member);
            if best.as_ref().is_none_or(|b| nu.table() < b.table()) {
                best = Some(nu);
            }
        }
        let rep = best.expect("equivalence subgroup is non-empty");
        check_conditions(&rep, &f, s)?;
        out.classes.push(classify_sign(rep, &out.fixed)?);
    }
    out.classes.sort_by(|a, b| a.rep.table().cmp(b.rep.table()));
    Ok(out)
}

fn check_conditions(nu: &NuFunction, f: &BilinearCocycle, s: &Hom) -> Result<()> {
    let g = nu.domain();
    for a in g.elements() {
        if !(nu.get(&a) + nu.get(&s.apply(&a))).is_zero() {
            return Err(Error::Inconsistency(format!("nu(a) + nu(s a) != 0 at {a}")));
        }
        for b in g.elements() {
            if nu.coboundary(&a, &b) != f.eval(&a, &b) {
                return Err(Error::Inconsistency(format!("delta nu != f at ({a}, {b})")));
            }
        }
    }
    Ok(())
}

fn classify_sign(rep: NuFunction, fixed: &FixedPoints) -> Result<NuClass> {
    let g = rep.domain();
    for &i in &fixed.points {
        let base = fixed
            .reps
            .iter()
            .find(|&&r| fixed.norms.contains(&g.sub(&g.element(i), &g.element(r))))
            .expect("every fixed point lies in some norm coset");
        if rep.at_index(i) != rep.at_index(*base) {
            return Err(Error::Inconsistency("nu is not constant on norm cosets".into()));
        }
    }
    let reduced: Vec<PhaseExp> = fixed.reps.iter().map(|&i| rep.at_index(i)).collect();
    let full: Vec<PhaseExp> = fixed.points.iter().map(|&i| rep.at_index(i)).collect();
    let sign = gauss_sign(&reduced)?;
    Ok(NuClass {
        sign,
        reduced_sum: gauss_sum(&reduced),
        full_sum: gauss_sum(&full),
        rep,
    })
}
