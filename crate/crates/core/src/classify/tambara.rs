//! Independent count of fiber functors through pairs `(s, μ)`: `μ` is a
//! quadratic map on the `Z_2`-space `V = H̄^s / H̄_s` refining the form
//! `χ̃` induced by `χ̄`, and contributes when its Gauss sign is `sign(τ)`.

use crate::error::{Error, Result};
use crate::forms::{gauss_sign, Sign};
use crate::phase::PhaseExp;

use super::nu::FixedPoints;
use super::sigma::FixedPair;

/// Number of refinements `μ` of each sign.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TambaraCount {
    pub plus: usize,
    pub minus: usize,
}

impl TambaraCount {
    pub fn get(&self, tau: Sign) -> usize {
        match tau {
            Sign::Plus => self.plus,
            Sign::Minus => self.minus,
        }
    }
}

pub fn tambara_cross_check(fixed: &FixedPair) -> Result<TambaraCount> {
    let hbar = fixed.hbar();
    let fp = FixedPoints::new(hbar, &fixed.s)?;
    let chi = &fixed.chi_bar;

    // position in `fp.reps` of the class of each fixed point
    let mut class_of = vec![usize::MAX; hbar.order()];
    for &i in &fp.points {
        let a = hbar.element(i);
        let k = fp
            .reps
            .iter()
            .position(|&r| fp.norms.contains(&hbar.sub(&a, &hbar.element(r))))
            .ok_or_else(|| Error::Inconsistency("fixed point outside every norm coset".into()))?;
        class_of[i] = k;
    }
    let n = fp.reps.len();
    let add = |x: usize, y: usize| class_of[hbar.add_index(fp.reps[x], fp.reps[y])];

    // χ̃ on V, with a well-definedness check over all coset members
    let mut form = vec![vec![PhaseExp::ZERO; n]; n];
    for &i in &fp.points {
        for &j in &fp.points {
            let v = chi.eval(&hbar.element(i), &hbar.element(j));
            let (x, y) = (class_of[i], class_of[j]);
            let canonical = chi.eval(&hbar.element(fp.reps[x]), &hbar.element(fp.reps[y]));
            if v != canonical || !v.scale(2).is_zero() {
                return Err(Error::Inconsistency(format!(
                    "induced form on fixed points is not well defined at ({}, {})",
                    hbar.element(i),
                    hbar.element(j)
                )));
            }
            form[x][y] = v;
        }
    }
    let zero = class_of[0];
    for x in 0..n {
        if add(x, x) != zero {
            return Err(Error::Inconsistency("fixed-point quotient is not 2-torsion".into()));
        }
    }

    // span V greedily; basis vectors and the order elements are reached in
    let mut basis = Vec::new();
    let mut span = vec![zero];
    let mut in_span = vec![false; n];
    in_span[zero] = true;
    for x in 0..n {
        if in_span[x] {
            continue;
        }
        basis.push(x);
        let new: Vec<usize> = span.iter().map(|&y| add(y, x)).collect();
        for &z in &new {
            in_span[z] = true;
        }
        span.extend(new);
    }

    let mut count = TambaraCount::default();
    for bits in 0u64..(1u64 << basis.len()) {
        let mut mu = vec![None; n];
        mu[zero] = Some(PhaseExp::ZERO);
        let mut reached = vec![zero];
        for (k, &b) in basis.iter().enumerate() {
            let vb = if bits >> k & 1 == 1 { PhaseExp::HALF } else { PhaseExp::ZERO };
            let mut next = Vec::new();
            for &x in &reached {
                let z = add(x, b);
                mu[z] = Some(mu[x].unwrap() + vb - form[x][b]);
                next.push(z);
            }
            reached.extend(next);
        }
        let mu: Vec<PhaseExp> = mu.into_iter().map(|v| v.expect("V is spanned")).collect();
        let refines = (0..n).all(|x| (0..n).all(|y| mu[x] + mu[y] - mu[add(x, y)] == form[x][y]));
        if !refines {
            continue;
        }
        match gauss_sign(&mu)? {
            Sign::Plus => count.plus += 1,
            Sign::Minus => count.minus += 1,
        }
    }
    Ok(count)
}
