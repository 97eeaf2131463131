use std::cmp::Ordering;
use std::fmt;

use crate::abelian::{enumerate_subgroups, FinAbGroup, Subgroup};
use crate::error::{Error, Result};
use crate::forms::{alternating_forms, standard_cocycle, AlternatingForm, BilinearCocycle};

/// The `Vec_A`-module category `M(H, ψ)`, stored as `(H, ξ_ψ)` with `ξ` in
/// the abstract basis of `H`. `psi` is the upper-triangular representative.
#[derive(Clone)]
pub struct VecAPair {
    h: Subgroup,
    xi: AlternatingForm,
    psi: BilinearCocycle,
}

impl VecAPair {
    pub fn new(h: Subgroup, xi: AlternatingForm) -> Result<Self> {
        if xi.group() != h.group() {
            return Err(Error::Inconsistency(format!(
                "form on {} attached to subgroup of type {}",
                xi.group(),
                h.group()
            )));
        }
        let psi = standard_cocycle(&xi);
        Ok(VecAPair { h, xi, psi })
    }

    pub fn trivial_form(h: Subgroup) -> Self {
        let xi = AlternatingForm::zero(h.group());
        VecAPair::new(h, xi).expect("zero form matches its own group")
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn xi(&self) -> &AlternatingForm {
        &self.xi
    }

    pub fn psi(&self) -> &BilinearCocycle {
        &self.psi
    }

    pub fn is_full(&self) -> bool {
        self.h.order() == self.h.ambient().order()
    }
}

impl PartialEq for VecAPair {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h && self.xi == other.xi
    }
}

impl Eq for VecAPair {}

impl std::hash::Hash for VecAPair {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.h.hash(state);
        self.xi.hash(state);
    }
}

// (|H|, element list, form matrix)
impl Ord for VecAPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.h.cmp(&other.h).then_with(|| self.xi.cmp(&other.xi))
    }
}

impl PartialOrd for VecAPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VecAPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}, [{}])", self.h, self.xi)
    }
}

impl fmt::Debug for VecAPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `(H, ξ)` on `a` in canonical order.
pub fn enumerate_pairs(a: &FinAbGroup, budget: usize) -> Result<Vec<VecAPair>> {
    let mut out = Vec::new();
    for h in enumerate_subgroups(a, budget)? {
        for xi in alternating_forms(h.group()) {
            out.push(VecAPair::new(h.clone(), xi)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Pairs with `H = A`.
pub fn full_pairs(a: &FinAbGroup) -> Result<Vec<VecAPair>> {
    let h = Subgroup::full(a);
    let mut out: Vec<VecAPair> = alternating_forms(h.group())
        .into_iter()
        .map(|xi| VecAPair::new(h.clone(), xi))
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}
