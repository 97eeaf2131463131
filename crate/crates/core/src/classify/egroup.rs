//! The group `E = (A ⊕ Ĥ) / ⟨(h, -ξ(h, -)) : h ∈ H⟩` of invertible
//! bimodules supported on `Vec_A`, its σ-action for fixed pairs and the
//! class of the equivariance obstruction in `E^σ / (1+σ)E`.

use std::collections::HashMap;

use serde::Serialize;

use crate::abelian::snf::{mat_vec, snf, IntMatrix};
use crate::abelian::{dual, Element, FinAbGroup, Hom};
use crate::error::{Error, Result};
use crate::forms::NuFunction;
use crate::phase::PhaseExp;
use crate::tycat::TyData;

use super::pair::VecAPair;
use super::sigma::{FixedPair, TMap};

/// `(a, λ)` with `a` the least representative of its `H`-coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EElem {
    pub a: Element,
    pub lambda: Element,
}

#[derive(Clone, Debug)]
pub struct EGroup {
    pair: VecAPair,
    snf_type: FinAbGroup,
    /// Rows of `U` for the kept invariant factors.
    to_rows: IntMatrix,
    /// Columns of `U⁻¹` for the kept invariant factors.
    from_cols: Vec<Vec<i64>>,
    coset_reps: Vec<Element>,
}

impl EGroup {
    pub fn new(a: &FinAbGroup, pair: &VecAPair) -> Result<EGroup> {
        let h = pair.h();
        let hg = h.group();
        let (r, k) = (a.rank(), hg.rank());
        let n = r + k;
        // generators of A ⊕ Ĥ as rows; relation columns
        let mut m: IntMatrix = vec![Vec::new(); n];
        for (i, row) in m.iter_mut().enumerate() {
            for j in 0..n {
                let ord = if j < r { a.orders()[j] } else { hg.orders()[j - r] };
                row.push(if i == j { ord as i64 } else { 0 });
            }
        }
        for l in 0..k {
            let b = &h.basis()[l];
            let e = hg.generator(l);
            let vals: Vec<PhaseExp> = (0..k).map(|j| -pair.xi().eval(&e, &hg.generator(j))).collect();
            let lam = dual::from_values(hg, &vals)?;
            for i in 0..r {
                m[i].push(b.0[i] as i64);
            }
            for j in 0..k {
                m[r + j].push(lam.0[j] as i64);
            }
        }
        let s = snf(&m);
        let diag = s.diagonal();
        let keep: Vec<usize> = (0..n).filter(|&i| diag.get(i).copied().unwrap_or(0) != 1).collect();
        if keep.iter().any(|&i| diag.get(i).copied().unwrap_or(0) == 0) {
            return Err(Error::Inconsistency("E presentation has a free part".into()));
        }
        let orders: Vec<u64> = keep.iter().map(|&i| diag[i] as u64).collect();
        let snf_type = FinAbGroup::new(orders)?;
        let to_rows = keep.iter().map(|&i| s.u[i].clone()).collect();
        let from_cols = keep.iter().map(|&i| (0..n).map(|row| s.u_inv[row][i]).collect()).collect();
        let mut coset_reps: Vec<Element> = a.elements().map(|x| h.coset_rep(&x)).collect();
        coset_reps.sort();
        coset_reps.dedup();
        let e = EGroup {
            pair: pair.clone(),
            snf_type,
            to_rows,
            from_cols,
            coset_reps,
        };
        if e.snf_type.order() != a.order() {
            return Err(Error::Inconsistency(format!(
                "|E| = {} but |A| = {}",
                e.snf_type.order(),
                a.order()
            )));
        }
        Ok(e)
    }

    pub fn snf_type(&self) -> &FinAbGroup {
        &self.snf_type
    }

    pub fn order(&self) -> usize {
        self.snf_type.order()
    }

    fn ambient(&self) -> &FinAbGroup {
        self.pair.h().ambient()
    }

    fn hdual(&self) -> &FinAbGroup {
        self.pair.h().group()
    }

    pub fn coset_reps(&self) -> &[Element] {
        &self.coset_reps
    }

    /// Moves the `H`-part of `a` into the character via `(h, 0) ~ (0, ξ(h, -))`.
    pub fn canonicalize(&self, a: &Element, lambda: &Element) -> EElem {
        let h = self.pair.h();
        let hg = self.hdual();
        let rep = h.coset_rep(a);
        let diff = h.coords_of(&self.ambient().sub(a, &rep)).expect("difference lies in H");
        let vals: Vec<PhaseExp> = (0..hg.rank())
            .map(|j| self.pair.xi().eval(&diff, &hg.generator(j)))
            .collect();
        let shift = dual::from_values(hg, &vals).expect("xi(h, -) is a character");
        EElem {
            a: rep,
            lambda: hg.add(lambda, &shift),
        }
    }

    pub fn add(&self, x: &EElem, y: &EElem) -> EElem {
        self.canonicalize(&self.ambient().add(&x.a, &y.a), &self.hdual().add(&x.lambda, &y.lambda))
    }

    pub fn zero(&self) -> EElem {
        EElem {
            a: self.ambient().zero(),
            lambda: self.hdual().zero(),
        }
    }

    /// All elements in canonical form, ordered by `(a, λ)`.
    pub fn elements(&self) -> Vec<EElem> {
        let hg = self.hdual();
        let mut out = Vec::with_capacity(self.order());
        for a in &self.coset_reps {
            for l in hg.elements() {
                out.push(EElem {
                    a: a.clone(),
                    lambda: l,
                });
            }
        }
        out
    }

    pub fn to_snf(&self, x: &EElem) -> Element {
        let v: Vec<i64> = x.a.0.iter().chain(&x.lambda.0).map(|&c| c as i64).collect();
        self.snf_type.reduce(&mat_vec(&self.to_rows, &v))
    }

    pub fn from_snf(&self, y: &Element) -> EElem {
        let r = self.ambient().rank();
        let n = self.from_cols.first().map_or(0, |c| c.len());
        let mut v = vec![0i64; n];
        for (col, &c) in self.from_cols.iter().zip(&y.0) {
            for (vi, ci) in v.iter_mut().zip(col) {
                *vi += ci * c as i64;
            }
        }
        let a = self.ambient().reduce(&v[..r]);
        let l = self.hdual().reduce(&v[r..]);
        self.canonicalize(&a, &l)
    }
}

/// Which expression for the character part of `σ(a_i, λ)` was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaFormula {
    /// `-χ(a_i, -) + λ(t_-) + χ(a_j, t_-)`.
    Target,
    /// `-χ(a_i, -) + λ(t_-) + χ(a_i, t_-)`.
    Source,
}

#[derive(Clone, Debug)]
pub struct SigmaOnE {
    /// σ in the invariant-factor basis of `E`.
    pub matrix: Hom,
    pub formula: SigmaFormula,
    /// `(0, λ)` with `λ(h) = ν(h̄) + ν(s h̄)`.
    pub obstruction: EElem,
    pub obstruction_trivial: bool,
}

/// σ on `E` for a fixed pair, plus the obstruction class of `nu0`.
pub fn sigma_on_e(
    ty: &TyData,
    pair: &VecAPair,
    fixed: &FixedPair,
    e: &EGroup,
    nu0: &NuFunction,
) -> Result<SigmaOnE> {
    let tmap = TMap::new(ty, pair);
    let h = pair.h();
    let hg = h.group();
    let chi = ty.chi();
    let a = ty.group();
    let perp_basis = fixed.perp.basis();

    let key_of_rep = |x: &Element| -> Vec<PhaseExp> { perp_basis.iter().map(|r| chi.eval(x, r)).collect() };
    let by_key: HashMap<Vec<PhaseExp>, Element> =
        e.coset_reps().iter().map(|x| (key_of_rep(x), x.clone())).collect();
    if by_key.len() != e.coset_reps().len() {
        return Err(Error::Inconsistency("chi does not separate cosets of H".into()));
    }
    let ts: Vec<Element> = h.basis().iter().map(|b| tmap.t(b)).collect::<Result<_>>()?;
    let t_coords: Vec<Element> = ts.iter().map(|t| h.coords_of(t).expect("t in H")).collect();
    let perp_coords: Vec<Element> = perp_basis.iter().map(|r| h.coords_of(r).expect("perp in H")).collect();

    let act = |x: &EElem, formula: SigmaFormula| -> Result<EElem> {
        let key: Vec<PhaseExp> = perp_coords.iter().map(|r| -dual::eval(hg, &x.lambda, r)).collect();
        let aj = by_key
            .get(&key)
            .ok_or_else(|| Error::Inconsistency("no coset matches the character on H^perp".into()))?;
        let pivot = match formula {
            SigmaFormula::Target => aj,
            SigmaFormula::Source => &x.a,
        };
        let vals: Vec<PhaseExp> = (0..hg.rank())
            .map(|l| {
                -chi.eval(&x.a, &h.basis()[l]) + dual::eval(hg, &x.lambda, &t_coords[l]) + chi.eval(pivot, &ts[l])
            })
            .collect();
        let mu = dual::from_values(hg, &vals)?;
        Ok(e.canonicalize(aj, &mu))
    };

    let elems = e.elements();
    let try_formula = |formula: SigmaFormula| -> Result<Option<(Hom, HashMap<EElem, EElem>)>> {
        let mut table = HashMap::with_capacity(elems.len());
        for x in &elems {
            match act(x, formula) {
                Ok(y) => {
                    table.insert(x.clone(), y);
                }
                Err(Error::IllDefined { .. }) => return Ok(None),
                Err(err) => return Err(err),
            }
        }
        let q = e.snf_type();
        let images: Vec<Element> = (0..q.rank())
            .map(|i| e.to_snf(&table[&e.from_snf(&q.generator(i))]))
            .collect();
        let Ok(m) = Hom::from_images(q.clone(), q.clone(), &images) else {
            return Ok(None);
        };
        for x in &elems {
            if e.to_snf(&table[x]) != m.apply(&e.to_snf(x)) {
                return Ok(None);
            }
            if &table[&table[x]] != x {
                return Ok(None);
            }
        }
        Ok(Some((m, table)))
    };

    let (matrix, table, formula) = match try_formula(SigmaFormula::Target)? {
        Some((m, t)) => (m, t, SigmaFormula::Target),
        None => match try_formula(SigmaFormula::Source)? {
            Some((m, t)) => {
                log::warn!("sigma on E for {pair}: target form failed, source form used");
                (m, t, SigmaFormula::Source)
            }
            None => {
                return Err(Error::SigmaNotInvolution(format!(
                    "{pair} on {}: neither character formula gives an involutive automorphism",
                    a
                )))
            }
        },
    };

    let vals: Vec<PhaseExp> = h
        .basis()
        .iter()
        .map(|b| {
            let x = fixed.project(pair, b);
            nu0.get(&x) + nu0.get(&fixed.s.apply(&x))
        })
        .collect();
    let lambda = dual::from_values(hg, &vals)?;
    let obstruction = e.canonicalize(&a.zero(), &lambda);
    if table[&obstruction] != obstruction {
        return Err(Error::Inconsistency("obstruction class is not sigma-invariant".into()));
    }
    let obstruction_trivial = elems
        .iter()
        .any(|y| e.add(y, &table[y]) == obstruction);
    Ok(SigmaOnE {
        matrix,
        formula,
        obstruction,
        obstruction_trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::Subgroup;
    use crate::forms::Sign;

    fn ty(orders: Vec<u64>, m: &str) -> TyData {
        let g = FinAbGroup::new(orders).unwrap();
        TyData::new(crate::forms::parse_bicharacter(m, &g).unwrap(), Sign::Plus).unwrap()
    }

    #[test]
    fn orders_match() {
        let t = ty(vec![2], "1/2");
        for h in [Subgroup::trivial(t.group()), Subgroup::full(t.group())] {
            let e = EGroup::new(t.group(), &VecAPair::trivial_form(h)).unwrap();
            assert_eq!(e.snf_type().orders(), &[2]);
        }
        let t = ty(vec![2, 2], "0,1/2;1/2,0");
        let h = Subgroup::full(t.group());
        let xi = crate::forms::AlternatingForm::new(t.chi().restrict(&h)).unwrap();
        let e = EGroup::new(t.group(), &VecAPair::new(h, xi).unwrap()).unwrap();
        assert_eq!(e.order(), 4);
        for x in e.elements() {
            assert_eq!(e.from_snf(&e.to_snf(&x)), x);
        }
    }
}
