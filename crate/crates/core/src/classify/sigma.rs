use crate::abelian::{dual, Element, FinAbGroup, Hom, Quotient, Subgroup};
use crate::error::{Error, Result};
use crate::forms::{standard_cocycle, AlternatingForm, Bicharacter, BilinearCocycle};
use crate::phase::PhaseExp;
use crate::tycat::TyData;

use super::pair::VecAPair;

/// `a ↦ t_a` for a pair `(H, ξ)`: the element of `H` with
/// `ξ(t_a, -) = χ(a, -)` on `H`, canonical modulo `Rad(ξ)`.
pub struct TMap<'a> {
    ty: &'a TyData,
    pair: &'a VecAPair,
    radical: Subgroup,
    domain: Subgroup,
    adjoint: Hom,
}

impl<'a> TMap<'a> {
    pub fn new(ty: &'a TyData, pair: &'a VecAPair) -> Self {
        let h = pair.h();
        let radical_abs = pair.xi().radical();
        let radical_gens: Vec<Element> = radical_abs.basis().iter().map(|x| h.lift(x)).collect();
        let radical = Subgroup::generated(ty.group(), &radical_gens);
        let domain = ty.chi().perp(&radical);
        TMap {
            ty,
            pair,
            radical,
            domain,
            adjoint: pair.xi().as_bichar().adjoint(),
        }
    }

    /// `Rad(ξ)` as a subgroup of `A`.
    pub fn radical(&self) -> &Subgroup {
        &self.radical
    }

    /// `Rad(ξ)^⊥`, where `t` is defined.
    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    /// `t_a` in ambient coordinates, lexicographically least in its
    /// `Rad(ξ)`-coset.
    pub fn t(&self, a: &Element) -> Result<Element> {
        let h = self.pair.h();
        let vals: Vec<PhaseExp> = h.basis().iter().map(|b| self.ty.chi().eval(a, b)).collect();
        let target = dual::from_values(h.group(), &vals)?;
        let x = self.adjoint.solve(&target).solution.ok_or_else(|| {
            Error::Inconsistency(format!("chi({a}, -) restricted to H is not in the image of xi"))
        })?;
        Ok(self.radical.coset_rep(&h.lift(&x)))
    }

    /// Abstract `H`-coordinates of `t_a`.
    pub fn t_coords(&self, a: &Element) -> Result<Element> {
        let t = self.t(a)?;
        Ok(self.pair.h().coords_of(&t).expect("t_a lies in H"))
    }
}

/// Alternating form of `ψ̃(a, b) = ψ(t_b, t_a)` on `domain`, given the
/// `H`-coordinates of `t` on each basis element of `domain`.
pub fn twisted_form(pair: &VecAPair, domain: &Subgroup, ts: &[Element]) -> Result<AlternatingForm> {
    let psi = pair.psi();
    let n = ts.len();
    let matrix = (0..n)
        .map(|k| {
            (0..n)
                .map(|l| psi.eval(&ts[l], &ts[k]) - psi.eval(&ts[k], &ts[l]))
                .collect()
        })
        .collect();
    AlternatingForm::new(Bicharacter::new(domain.group().clone(), matrix)?)
}

/// `σ · M(H, ψ) = M(Rad(ψ)^⊥, ψ̃)`.
pub fn sigma_act(ty: &TyData, pair: &VecAPair) -> Result<VecAPair> {
    let tmap = TMap::new(ty, pair);
    let domain = tmap.domain().clone();
    let ts: Vec<Element> = domain
        .basis()
        .iter()
        .map(|b| tmap.t_coords(b))
        .collect::<Result<_>>()?;
    let xi = twisted_form(pair, &domain, &ts)?;
    VecAPair::new(domain, xi)
}

/// Data attached to a σ-fixed pair: `H̄ = H/H^⊥` with the descended forms
/// and the involution `s`.
#[derive(Clone, Debug)]
pub struct FixedPair {
    /// `H^⊥` inside `A`.
    pub perp: Subgroup,
    /// `H → H̄` on abstract `H`-coordinates.
    pub quotient: Quotient,
    pub chi_bar: Bicharacter,
    pub xi_bar: AlternatingForm,
    pub psi_bar: BilinearCocycle,
    /// `ξ̄(s(a), b) = χ̄(a, b)`.
    pub s: Hom,
}

impl FixedPair {
    pub fn hbar(&self) -> &FinAbGroup {
        &self.quotient.group
    }

    /// Image in `H̄` of an ambient element of `H`.
    pub fn project(&self, pair: &VecAPair, a: &Element) -> Element {
        let c = pair.h().coords_of(a).expect("element of H");
        self.quotient.proj.apply(&c)
    }
}

/// Returns the fixed-pair data when `σ` fixes `pair`, `None` otherwise.
pub fn is_sigma_fixed(ty: &TyData, pair: &VecAPair) -> Result<Option<FixedPair>> {
    let h = pair.h();
    let perp = ty.chi().perp(h);
    if !perp.is_subgroup_of(h) {
        return Ok(None);
    }
    let radical_gens: Vec<Element> = pair.xi().radical().basis().iter().map(|x| h.lift(x)).collect();
    let radical = Subgroup::generated(ty.group(), &radical_gens);
    if radical != perp {
        return Ok(None);
    }
    let perp_rel = h.relative(&perp)?;
    let chi_h = ty.chi().restrict(h);
    let (chi_bar, quotient) = chi_h.descend(&perp_rel)?;
    let (xi_bar, q2) = pair.xi().descend(&perp_rel)?;
    if q2.group != quotient.group || q2.proj.matrix() != quotient.proj.matrix() {
        return Err(Error::Inconsistency("descended forms live on different quotients".into()));
    }
    let hbar = quotient.group.clone();
    let xi_adj = xi_bar.as_bichar().adjoint();
    let chi_adj = chi_bar.adjoint();
    let mut images = Vec::with_capacity(hbar.rank());
    for k in 0..hbar.rank() {
        let target = chi_adj.apply(&hbar.generator(k));
        match xi_adj.solve(&target).solution {
            Some(x) => images.push(x),
            None => return Ok(None),
        }
    }
    let s = Hom::from_images(hbar.clone(), hbar.clone(), &images)?;
    if !s.compose(&s)?.is_identity() {
        return Ok(None);
    }
    let psi_bar = standard_cocycle(&xi_bar);
    Ok(Some(FixedPair {
        perp,
        quotient,
        chi_bar,
        xi_bar,
        psi_bar,
        s,
    }))
}
