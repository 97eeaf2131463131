//! Tambara–Yamagami data `(A, χ, τ)` and the fusion ring `R_A`.

use serde::Serialize;

use crate::abelian::{Element, FinAbGroup};
use crate::error::{Error, Result};
use crate::forms::{Bicharacter, Sign};

/// `TY(A, χ, τ)` with `τ = tau_sign / √|A|`. Only the sign of `τ` matters
/// to classification, so the magnitude is never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TyData {
    group: FinAbGroup,
    chi: Bicharacter,
    tau: Sign,
}

/// Checks that `χ` is symmetric and nondegenerate, naming a witness if not.
pub fn validate(chi: &Bicharacter) -> Result<()> {
    let g = chi.group();
    if let Some((a, b)) = chi.symmetry_witness() {
        return Err(Error::NotSymmetric {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let ker = chi.left_kernel();
    if let Some(k) = ker.elements().find(|e| !e.is_zero()) {
        return Err(Error::Degenerate {
            kernel: if g.rank() == 1 { k.0[0].to_string() } else { k.to_string() },
        });
    }
    Ok(())
}

impl TyData {
    pub fn new(chi: Bicharacter, tau: Sign) -> Result<Self> {
        validate(&chi)?;
        Ok(TyData {
            group: chi.group().clone(),
            chi,
            tau,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn chi(&self) -> &Bicharacter {
        &self.chi
    }

    pub fn tau(&self) -> Sign {
        self.tau
    }

    pub fn with_tau(&self, tau: Sign) -> TyData {
        TyData { tau, ..self.clone() }
    }

    /// `τ` as a float, for display only.
    pub fn tau_value(&self) -> f64 {
        let mag = 1.0 / (self.group.order() as f64).sqrt();
        match self.tau {
            Sign::Plus => mag,
            Sign::Minus => -mag,
        }
    }
}

/// Element of the fusion ring: multiplicities of each `g ∈ A` (by index)
/// and of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FusionElement {
    group: FinAbGroup,
    pub group_part: Vec<u64>,
    pub m: u64,
}

impl FusionElement {
    pub fn zero(group: &FinAbGroup) -> Self {
        FusionElement {
            group: group.clone(),
            group_part: vec![0; group.order()],
            m: 0,
        }
    }

    pub fn simple(group: &FinAbGroup, g: &Element) -> Self {
        let mut x = Self::zero(group);
        x.group_part[group.index(g)] = 1;
        x
    }

    pub fn m(group: &FinAbGroup) -> Self {
        let mut x = Self::zero(group);
        x.m = 1;
        x
    }

    pub fn add(&self, other: &FusionElement) -> FusionElement {
        FusionElement {
            group: self.group.clone(),
            group_part: self.group_part.iter().zip(&other.group_part).map(|(a, b)| a + b).collect(),
            m: self.m + other.m,
        }
    }

    /// Frobenius–Perron dimension: `g ↦ 1`, `m ↦ √|A|`.
    pub fn fpdim(&self) -> f64 {
        self.group_part.iter().sum::<u64>() as f64 + self.m as f64 * (self.group.order() as f64).sqrt()
    }
}

/// Product in `R_A`: `g·h = gh`, `g·m = m·g = m`, `m·m = Σ_g g`.
pub fn fuse(x: &FusionElement, y: &FusionElement) -> FusionElement {
    let g = &x.group;
    let n = g.order();
    let mut out = FusionElement::zero(g);
    for (a, &xa) in x.group_part.iter().enumerate() {
        if xa == 0 {
            continue;
        }
        for (b, &yb) in y.group_part.iter().enumerate() {
            if yb != 0 {
                out.group_part[g.add_index(a, b)] += xa * yb;
            }
        }
    }
    let xg: u64 = x.group_part.iter().sum();
    let yg: u64 = y.group_part.iter().sum();
    out.m += xg * y.m + x.m * yg;
    if x.m * y.m > 0 {
        for c in 0..n {
            out.group_part[c] += x.m * y.m;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::PhaseExp;
    use rand::{Rng, SeedableRng};

    fn p(n: i64, d: u64) -> PhaseExp {
        PhaseExp::new(n, d)
    }

    #[test]
    fn validate_examples() {
        let ok = Bicharacter::new(FinAbGroup::cyclic(2), vec![vec![p(1, 2)]]).unwrap();
        assert!(TyData::new(ok, Sign::Plus).is_ok());
        let zero = Bicharacter::new(FinAbGroup::cyclic(2), vec![vec![p(0, 1)]]).unwrap();
        assert_eq!(
            TyData::new(zero, Sign::Plus).unwrap_err(),
            Error::Degenerate { kernel: "1".into() }
        );
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let asym = Bicharacter::new(g, vec![vec![p(0, 1), p(1, 2)], vec![p(0, 1), p(0, 1)]]).unwrap();
        assert!(matches!(TyData::new(asym, Sign::Plus), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn fusion_rules() {
        let z2 = FinAbGroup::cyclic(2);
        let m = FusionElement::m(&z2);
        let mm = fuse(&m, &m);
        assert_eq!(mm.group_part, vec![1, 1]);
        assert_eq!(mm.m, 0);
        let one = FusionElement::simple(&z2, &Element(vec![1]));
        assert_eq!(fuse(&one, &one), FusionElement::simple(&z2, &Element(vec![0])));
        assert_eq!(fuse(&one, &m), m);

        let z4 = FinAbGroup::cyclic(4);
        let m = FusionElement::m(&z4);
        let left = fuse(&fuse(&m, &m), &m);
        let right = fuse(&m, &fuse(&m, &m));
        assert_eq!(left, right);
        assert_eq!(left.m, 4);
        assert!(left.group_part.iter().all(|&c| c == 0));
    }

    fn random_element(g: &FinAbGroup, rng: &mut impl Rng) -> FusionElement {
        let mut x = FusionElement::zero(g);
        for c in x.group_part.iter_mut() {
            *c = rng.gen_range(0..3);
        }
        x.m = rng.gen_range(0..3);
        x
    }

    #[test]
    fn associative_and_fpdim_multiplicative() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for g in [FinAbGroup::cyclic(3), FinAbGroup::new(vec![2, 2]).unwrap(), FinAbGroup::cyclic(5)] {
            for _ in 0..1000 {
                let (x, y, z) = (random_element(&g, &mut rng), random_element(&g, &mut rng), random_element(&g, &mut rng));
                assert_eq!(fuse(&fuse(&x, &y), &z), fuse(&x, &fuse(&y, &z)));
                let xy = fuse(&x, &y);
                assert!((xy.fpdim() - x.fpdim() * y.fpdim()).abs() < 1e-9 * (1.0 + xy.fpdim()));
                assert_eq!(x.add(&y).m, x.m + y.m);
            }
        }
    }
}
