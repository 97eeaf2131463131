//! Classification of indecomposable module categories over `TY(A, χ, τ)`.
//!
//! Every pair `(H, ξ)` on `A` is analysed independently: its σ-image, and
//! for fixed pairs the involution `s`, the ν-classes, the group `E` with its
//! σ-action and the Tambara count. The results are then assembled into a
//! [`ClassificationReport`] in canonical order.

mod egroup;
mod nu;
pub mod oracle;
mod pair;
mod sigma;
mod tambara;

pub use egroup::{sigma_on_e, EElem, EGroup, SigmaFormula, SigmaOnE};
pub use nu::{solve_nu, solve_nu_from, twist_cocycle, FixedPoints, NuClass, NuSolution};
pub use pair::{enumerate_pairs, full_pairs, VecAPair};
pub use sigma::{is_sigma_fixed, sigma_act, twisted_form, FixedPair, TMap};
pub use tambara::{tambara_cross_check, TambaraCount};

use rayon::prelude::*;

use crate::abelian::{Hom, Subgroup, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::forms::{lagrangians, NuFunction, Sign};
use crate::tycat::TyData;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Largest `|A|` accepted.
    pub budget: usize,
    /// Worker threads; `0` uses the global rayon pool.
    pub workers: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            budget: DEFAULT_BUDGET,
            workers: 0,
        }
    }
}

impl ClassifyOptions {
    pub fn with_workers(self, workers: usize) -> Self {
        ClassifyOptions { workers, ..self }
    }

    pub fn with_budget(self, budget: usize) -> Self {
        ClassifyOptions { budget, ..self }
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        if self.workers == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.workers).build() {
            Ok(pool) => pool.install(f),
            Err(err) => {
                log::warn!("could not build a pool of {} workers: {err}", self.workers);
                f()
            }
        }
    }
}

/// A σ-orbit of pairs: one member if fixed, otherwise two in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaOrbit {
    pub members: Vec<VecAPair>,
}

impl SigmaOrbit {
    pub fn fixed(&self) -> bool {
        self.members.len() == 1
    }

    pub fn least(&self) -> &VecAPair {
        &self.members[0]
    }
}

/// One equivariant structure `(s, [ν])` on a σ-fixed pair.
#[derive(Clone, Debug)]
pub struct EquivariantStructure {
    pub pair: VecAPair,
    pub s: Hom,
    pub nu: NuFunction,
    pub sign: Sign,
    pub torsor_size: usize,
    pub equivalence_size: usize,
}

/// Everything computed for a single pair.
#[derive(Clone, Debug)]
pub struct PairAnalysis {
    pub pair: VecAPair,
    pub image: VecAPair,
    pub fixed: Option<FixedPair>,
    pub nu: Option<NuSolution>,
    pub e: EGroup,
    pub sigma_e: Option<SigmaOnE>,
    pub tambara: Option<TambaraCount>,
}

impl PairAnalysis {
    pub fn is_fixed(&self) -> bool {
        self.fixed.is_some()
    }

    /// `(E type, dual pointed)`.
    pub fn dual_report(&self) -> DualReport {
        DualReport {
            e_type: self.e.snf_type().orders().to_vec(),
            dual_pointed: self.is_fixed(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualReport {
    pub e_type: Vec<u64>,
    pub dual_pointed: bool,
}

pub fn analyze_pair(ty: &TyData, pair: &VecAPair) -> Result<PairAnalysis> {
    let image = sigma_act(ty, pair)?;
    let fixed = is_sigma_fixed(ty, pair)?;
    if fixed.is_some() != (image == *pair) {
        return Err(Error::Inconsistency(format!(
            "{pair}: fixed-pair test and sigma action disagree (image {image})"
        )));
    }
    let e = EGroup::new(ty.group(), pair)?;
    let (nu, sigma_e, tambara) = match &fixed {
        None => (None, None, None),
        Some(fp) => {
            let nu = solve_nu(fp)?;
            let se = sigma_on_e(ty, pair, fp, &e, &nu.particular)?;
            if se.obstruction_trivial != nu.presign_solvable {
                return Err(Error::Inconsistency(format!(
                    "{pair}: obstruction class in E disagrees with solvability of the twist condition"
                )));
            }
            let tam = if pair.is_full() { Some(tambara_cross_check(fp)?) } else { None };
            (Some(nu), Some(se), tam)
        }
    };
    Ok(PairAnalysis {
        pair: pair.clone(),
        image,
        fixed,
        nu,
        e,
        sigma_e,
        tambara,
    })
}

/// All pairs on `A`, analysed in parallel and returned in canonical order.
pub fn analyze_all(ty: &TyData, opts: &ClassifyOptions) -> Result<Vec<PairAnalysis>> {
    let pairs = enumerate_pairs(ty.group(), opts.budget)?;
    opts.run(|| pairs.par_iter().map(|p| analyze_pair(ty, p)).collect())
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub ty: TyData,
    pub pairs: Vec<PairAnalysis>,
    /// Orbits of size two.
    pub induced: Vec<SigmaOrbit>,
    pub equivariant: Vec<EquivariantStructure>,
    /// Fixed pairs with no admissible ν.
    pub obstructed_fixed: Vec<VecAPair>,
    pub group_theoretical: bool,
    pub lagrangians: Vec<Subgroup>,
    pub fiber_functor_count: usize,
}

impl ClassificationReport {
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Number of module categories listed: one per induced orbit, one per
    /// equivariant class and one per obstructed fixed pair.
    pub fn module_count(&self) -> usize {
        self.induced.len() + self.equivariant.len() + self.obstructed_fixed.len()
    }
}

/// Full classification.
pub fn classify(ty: &TyData, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let pairs = analyze_all(ty, opts)?;
    assemble(ty, pairs, opts)
}

fn assemble(ty: &TyData, pairs: Vec<PairAnalysis>, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let tau = ty.tau();
    let mut induced = Vec::new();
    let mut equivariant = Vec::new();
    let mut obstructed_fixed = Vec::new();
    let mut fiber_functor_count = 0;
    for pa in &pairs {
        let Some(nu) = &pa.nu else {
            if pa.image < pa.pair {
                continue;
            }
            if pairs.binary_search_by(|q| q.pair.cmp(&pa.image)).is_err() {
                return Err(Error::Inconsistency(format!("sigma image {} is not a pair", pa.image)));
            }
            induced.push(SigmaOrbit {
                members: vec![pa.pair.clone(), pa.image.clone()],
            });
            continue;
        };
        let fixed = pa.fixed.as_ref().expect("nu implies fixed");
        let before = equivariant.len();
        for class in nu.admissible(tau) {
            equivariant.push(EquivariantStructure {
                pair: pa.pair.clone(),
                s: fixed.s.clone(),
                nu: class.rep.clone(),
                sign: class.sign,
                torsor_size: nu.torsor_size,
                equivalence_size: nu.equivalence_size,
            });
        }
        let added = equivariant.len() - before;
        if added == 0 {
            obstructed_fixed.push(pa.pair.clone());
        }
        if pa.pair.is_full() {
            fiber_functor_count += added;
            let tam = pa.tambara.expect("full fixed pairs carry a Tambara count");
            if tam.get(tau) != added {
                return Err(Error::Inconsistency(format!(
                    "{}: {} fiber functors from nu, {} from (s, mu)",
                    pa.pair,
                    added,
                    tam.get(tau)
                )));
            }
        }
    }
    let (group_theoretical, lagrangians) = group_theoreticity(ty, &pairs, opts)?;
    Ok(ClassificationReport {
        ty: ty.clone(),
        pairs,
        induced,
        equivariant,
        obstructed_fixed,
        group_theoretical,
        lagrangians,
        fiber_functor_count,
    })
}

fn group_theoreticity(
    ty: &TyData,
    pairs: &[PairAnalysis],
    opts: &ClassifyOptions,
) -> Result<(bool, Vec<Subgroup>)> {
    let lags = lagrangians(ty.chi(), opts.budget)?;
    let any_fixed = pairs.iter().any(|p| p.is_fixed());
    if any_fixed != !lags.is_empty() {
        return Err(Error::Inconsistency(format!(
            "Lagrangian existence ({}) disagrees with fixed-pair existence ({any_fixed})",
            !lags.is_empty()
        )));
    }
    Ok((any_fixed, lags))
}

/// Group-theoreticity with its Lagrangian witnesses, cross-checked
/// against the existence of a σ-fixed pair.
pub fn is_group_theoretical(ty: &TyData, opts: &ClassifyOptions) -> Result<(bool, Vec<Subgroup>)> {
    let pairs = enumerate_pairs(ty.group(), opts.budget)?;
    let any_fixed = opts.run(|| {
        pairs
            .par_iter()
            .map(|p| is_sigma_fixed(ty, p).map(|f| f.is_some()))
            .collect::<Result<Vec<bool>>>()
    })?;
    let any_fixed = any_fixed.into_iter().any(|b| b);
    let lags = lagrangians(ty.chi(), opts.budget)?;
    if any_fixed != !lags.is_empty() {
        return Err(Error::Inconsistency(format!(
            "Lagrangian existence ({}) disagrees with fixed-pair existence ({any_fixed})",
            !lags.is_empty()
        )));
    }
    Ok((any_fixed, lags))
}

/// Fiber functors: equivariant classes on pairs with `H = A`.
#[derive(Clone, Debug)]
pub struct FiberFunctors {
    pub count: usize,
    pub classes: Vec<EquivariantStructure>,
    /// `(s, μ)` count per fixed full pair, for the sign `τ`.
    pub tambara: usize,
}

pub fn fiber_functors(ty: &TyData) -> Result<FiberFunctors> {
    let tau = ty.tau();
    let mut classes = Vec::new();
    let mut tambara = 0;
    for pair in full_pairs(ty.group())? {
        let Some(fixed) = is_sigma_fixed(ty, &pair)? else {
            continue;
        };
        let nu = solve_nu(&fixed)?;
        for class in nu.admissible(tau) {
            classes.push(EquivariantStructure {
                pair: pair.clone(),
                s: fixed.s.clone(),
                nu: class.rep.clone(),
                sign: class.sign,
                torsor_size: nu.torsor_size,
                equivalence_size: nu.equivalence_size,
            });
        }
        tambara += tambara_cross_check(&fixed)?.get(tau);
    }
    Ok(FiberFunctors {
        count: classes.len(),
        classes,
        tambara,
    })
}

/// `(E type, dual pointed)` for a single pair.
pub fn dual_report(ty: &TyData, pair: &VecAPair) -> Result<DualReport> {
    let e = EGroup::new(ty.group(), pair)?;
    Ok(DualReport {
        e_type: e.snf_type().orders().to_vec(),
        dual_pointed: is_sigma_fixed(ty, pair)?.is_some(),
    })
}
