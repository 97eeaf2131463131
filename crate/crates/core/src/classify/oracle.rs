//! Exhaustive enumerations that recompute classification counts without
//! the linear-algebra shortcuts. Only practical for tiny groups.

use crate::abelian::{Element, FinAbGroup};
use crate::forms::{standard_cocycle, AlternatingForm, Bicharacter, Sign};
use crate::phase::PhaseExp;

/// Class counts per sign found by exhaustive search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BruteCount {
    pub plus: usize,
    pub minus: usize,
}

impl BruteCount {
    pub fn get(&self, tau: Sign) -> usize {
        match tau {
            Sign::Plus => self.plus,
            Sign::Minus => self.minus,
        }
    }

    pub fn total(&self) -> usize {
        self.plus + self.minus
    }
}

/// Every `f: G -> G` with `f(0) = 0`, as index tables, filtered by `keep`.
fn maps_fixing_zero(g: &FinAbGroup, mut keep: impl FnMut(&[usize]) -> bool) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    loop {
        if keep(&f) {
            out.push(f.clone());
        }
        let mut k = 1;
        while k < n {
            f[k] += 1;
            if f[k] < n {
                break;
            }
            f[k] = 0;
            k += 1;
        }
        if k >= n {
            return out;
        }
    }
}

fn is_additive(g: &FinAbGroup, f: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).all(|b| f[g.add_index(a, b)] == g.add_index(f[a], f[b])))
}

/// All additive maps `G -> (1/den)Z/Z` as value tables.
fn characters_into(g: &FinAbGroup, den: u64) -> Vec<Vec<PhaseExp>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut vals = vec![0u64; n];
    loop {
        let table: Vec<PhaseExp> = vals.iter().map(|&v| PhaseExp::new(v as i64, den)).collect();
        if (0..n).all(|a| (0..n).all(|b| table[g.add_index(a, b)] == table[a] + table[b])) {
            out.push(table);
        }
        let mut k = 1;
        while k < n {
            vals[k] += 1;
            if vals[k] < den {
                break;
            }
            vals[k] = 0;
            k += 1;
        }
        if k >= n {
            return out;
        }
    }
}

/// Counts classes of `ν: Ḡ -> (1/(4·exp))Z/Z` over all involutions `s`
/// with `ξ̄(s a, b) = χ̄(a, b)`, satisfying `δν(a,b) = ψ̄(a,b) - ψ̄(s b, s a)`,
/// `ν + ν∘s = 0`, with sign taken from the full fixed-point Gauss sum, up to
/// `ν ~ ν + η - η∘s`.
pub fn brute_force_nu(chi_bar: &Bicharacter, xi_bar: &AlternatingForm) -> BruteCount {
    let g = chi_bar.group();
    let n = g.order();
    let elems: Vec<Element> = g.elements().collect();
    let psi = standard_cocycle(xi_bar);
    let involutions = maps_fixing_zero(g, |s| {
        (0..n).all(|a| s[s[a]] == a)
            && is_additive(g, s)
            && (0..n).all(|a| (0..n).all(|b| xi_bar.eval(&elems[s[a]], &elems[b]) == chi_bar.eval(&elems[a], &elems[b])))
    });
    let den = 4 * g.exponent();
    let chars = characters_into(g, g.exponent());
    let mut count = BruteCount::default();
    for s in &involutions {
        let f = |a: usize, b: usize| psi.eval(&elems[a], &elems[b]) - psi.eval(&elems[s[b]], &elems[s[a]]);
        let mut solutions: Vec<(Vec<PhaseExp>, Sign)> = Vec::new();
        let mut vals = vec![0u64; n];
        loop {
            let nu: Vec<PhaseExp> = vals.iter().map(|&v| PhaseExp::new(v as i64, den)).collect();
            let ok = (0..n).all(|a| (nu[a] + nu[s[a]]).is_zero())
                && (0..n).all(|a| (0..n).all(|b| nu[a] + nu[b] - nu[g.add_index(a, b)] == f(a, b)));
            if ok {
                let (re, im) = (0..n)
                    .filter(|&a| s[a] == a)
                    .map(|a| std::f64::consts::TAU * nu[a].to_f64())
                    .fold((0.0, 0.0), |(x, y), t| (x + t.cos(), y + t.sin()));
                assert!(im.abs() < 1e-9 && re.abs() > 1e-9, "degenerate fixed-point sum");
                solutions.push((nu, if re > 0.0 { Sign::Plus } else { Sign::Minus }));
            }
            let mut k = 1;
            while k < n {
                vals[k] += 1;
                if vals[k] < den {
                    break;
                }
                vals[k] = 0;
                k += 1;
            }
            if k >= n {
                break;
            }
        }
        let shifts: Vec<Vec<PhaseExp>> = chars
            .iter()
            .map(|eta| (0..n).map(|a| eta[a] - eta[s[a]]).collect())
            .collect();
        let mut taken = vec![false; solutions.len()];
        for i in 0..solutions.len() {
            if taken[i] {
                continue;
            }
            taken[i] = true;
            for j in i + 1..solutions.len() {
                let equivalent = shifts
                    .iter()
                    .any(|d| (0..n).all(|a| solutions[j].0[a] - solutions[i].0[a] == d[a]));
                if equivalent {
                    assert_eq!(solutions[i].1, solutions[j].1, "sign is not a class invariant");
                    taken[j] = true;
                }
            }
            match solutions[i].1 {
                Sign::Plus => count.plus += 1,
                Sign::Minus => count.minus += 1,
            }
        }
    }
    count
}

/// Subgroups of `g` as sorted index lists, by closing every subset.
pub fn brute_force_subgroups(g: &FinAbGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "subset scan is exponential");
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| g.add_index(a, b)).collect()).collect();
    // every subset containing 0 that is closed under addition
    (0u32..(1u32 << n))
        .filter(|mask| mask & 1 == 1)
        .filter(|&mask| {
            (0..n).filter(|&a| mask >> a & 1 == 1).all(|a| {
                (0..n)
                    .filter(|&b| mask >> b & 1 == 1)
                    .all(|b| mask >> table[a][b] & 1 == 1)
            })
        })
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect::<std::collections::BTreeSet<Vec<usize>>>()
        .into_iter()
        .collect()
}

/// Subgroups `L` with `L = L^⊥`, found by scanning subset closures.
pub fn brute_force_lagrangians(chi: &Bicharacter) -> Vec<Vec<usize>> {
    let g = chi.group();
    let elems: Vec<Element> = g.elements().collect();
    brute_force_subgroups(g)
        .into_iter()
        .filter(|l| {
            let perp: Vec<usize> = (0..g.order())
                .filter(|&a| l.iter().all(|&b| chi.eval(&elems[a], &elems[b]).is_zero()))
                .collect();
            &perp == l
        })
        .collect()
}
