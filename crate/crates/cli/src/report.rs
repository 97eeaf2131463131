//! Serializable views of core results. Field order here is the JSON field
//! order; every list is already in the canonical order produced by core.

use serde::Serialize;
use tymod_core::classify::{
    EquivariantStructure, FiberFunctors, PairAnalysis, SigmaFormula, SigmaOrbit, VecAPair,
};
use tymod_core::forms::render_matrix;
use tymod_core::{ClassificationReport, Element, FinAbGroup, NuFunction, Subgroup, TyData};

#[derive(Serialize)]
pub struct InputJson {
    pub group: String,
    pub orders: Vec<u64>,
    pub chi: String,
    pub tau: String,
}

impl InputJson {
    pub fn new(ty: &TyData) -> Self {
        InputJson {
            group: ty.group().to_string(),
            orders: ty.group().orders().to_vec(),
            chi: ty.chi().to_string(),
            tau: ty.tau().to_string(),
        }
    }
}

/// A subgroup as its sorted element list.
pub fn subgroup_elements(s: &Subgroup) -> Vec<Element> {
    s.elements().collect()
}

#[derive(Serialize)]
pub struct SubgroupJson {
    pub elements: Vec<Element>,
    #[serde(rename = "type")]
    pub group_type: Vec<u64>,
    /// Generators that `--xi` and `H`-coordinates refer to.
    pub basis: Vec<Element>,
}

impl SubgroupJson {
    pub fn new(s: &Subgroup) -> Self {
        SubgroupJson {
            elements: subgroup_elements(s),
            group_type: s.group().orders().to_vec(),
            basis: s.basis().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct PairJson {
    #[serde(rename = "H")]
    pub h: SubgroupJson,
    pub xi: String,
}

impl PairJson {
    pub fn new(p: &VecAPair) -> Self {
        PairJson {
            h: SubgroupJson::new(p.h()),
            xi: render_matrix(p.xi().matrix()),
        }
    }
}

#[derive(Serialize)]
pub struct InducedJson {
    pub members: Vec<PairJson>,
}

impl InducedJson {
    pub fn new(o: &SigmaOrbit) -> Self {
        InducedJson {
            members: o.members.iter().map(PairJson::new).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct EquivariantJson {
    pub pair: PairJson,
    pub hbar: Vec<u64>,
    pub s: Vec<Vec<i64>>,
    pub nu: NuFunction,
    pub sign: String,
    pub torsor_size: usize,
    pub equivalence_size: usize,
}

impl EquivariantJson {
    pub fn new(e: &EquivariantStructure) -> Self {
        EquivariantJson {
            pair: PairJson::new(&e.pair),
            hbar: e.s.source().orders().to_vec(),
            s: e.s.matrix().clone(),
            nu: e.nu.clone(),
            sign: e.sign.to_string(),
            torsor_size: e.torsor_size,
            equivalence_size: e.equivalence_size,
        }
    }
}

#[derive(Serialize)]
pub struct EGroupJson {
    pub pair: PairJson,
    pub e_type: Vec<u64>,
    pub order: usize,
    pub sigma_fixed: bool,
    pub dual_pointed: bool,
    pub sigma_formula: Option<&'static str>,
    pub obstruction_trivial: Option<bool>,
}

impl EGroupJson {
    pub fn new(pa: &PairAnalysis) -> Self {
        let d = pa.dual_report();
        EGroupJson {
            pair: PairJson::new(&pa.pair),
            e_type: d.e_type,
            order: pa.e.order(),
            sigma_fixed: pa.is_fixed(),
            dual_pointed: d.dual_pointed,
            sigma_formula: pa.sigma_e.as_ref().map(|s| match s.formula {
                SigmaFormula::Target => "target",
                SigmaFormula::Source => "source",
            }),
            obstruction_trivial: pa.sigma_e.as_ref().map(|s| s.obstruction_trivial),
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub input: InputJson,
    pub induced: Vec<InducedJson>,
    pub equivariant: Vec<EquivariantJson>,
    pub obstructed: Vec<PairJson>,
    pub group_theoretical: bool,
    pub lagrangians: Vec<Vec<Element>>,
    pub fiber_functor_count: usize,
    pub e_groups: Vec<EGroupJson>,
}

impl ClassifyJson {
    pub fn new(r: &ClassificationReport) -> Self {
        ClassifyJson {
            input: InputJson::new(&r.ty),
            induced: r.induced.iter().map(InducedJson::new).collect(),
            equivariant: r.equivariant.iter().map(EquivariantJson::new).collect(),
            obstructed: r.obstructed_fixed.iter().map(PairJson::new).collect(),
            group_theoretical: r.group_theoretical,
            lagrangians: r.lagrangians.iter().map(subgroup_elements).collect(),
            fiber_functor_count: r.fiber_functor_count,
            e_groups: r.pairs.iter().map(EGroupJson::new).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SubgroupsJson {
    pub group: String,
    pub subgroups: Vec<SubgroupJson>,
}

#[derive(Serialize)]
pub struct FormsJson {
    pub group: String,
    pub count: usize,
    pub forms: Vec<String>,
}

#[derive(Serialize)]
pub struct LagrangiansJson {
    pub input: InputJson,
    pub lagrangians: Vec<Vec<Element>>,
}

#[derive(Serialize)]
pub struct SigmaJson {
    pub input: InputJson,
    pub pair: PairJson,
    pub image: PairJson,
    pub fixed: bool,
    pub hbar: Option<Vec<u64>>,
    pub s: Option<Vec<Vec<i64>>>,
}

#[derive(Serialize)]
pub struct FiberJson {
    pub input: InputJson,
    pub count: usize,
    pub tambara_count: usize,
    pub classes: Vec<EquivariantJson>,
}

impl FiberJson {
    pub fn new(ty: &TyData, ff: &FiberFunctors) -> Self {
        FiberJson {
            input: InputJson::new(ty),
            count: ff.count,
            tambara_count: ff.tambara,
            classes: ff.classes.iter().map(EquivariantJson::new).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DualJson {
    pub input: InputJson,
    pub pair: PairJson,
    pub e_type: Vec<u64>,
    pub dual_pointed: bool,
}

/// One line of a sweep.
#[derive(Serialize)]
pub struct SweepJson {
    pub line: usize,
    pub input: Option<InputJson>,
    pub pairs: Option<usize>,
    pub induced: Option<usize>,
    pub equivariant: Option<usize>,
    pub obstructed: Option<usize>,
    pub fiber_functor_count: Option<usize>,
    pub group_theoretical: Option<bool>,
    pub lagrangians: Option<usize>,
    pub error: Option<String>,
}

impl SweepJson {
    pub fn ok(line: usize, r: &ClassificationReport) -> Self {
        SweepJson {
            line,
            input: Some(InputJson::new(&r.ty)),
            pairs: Some(r.pair_count()),
            induced: Some(r.induced.len()),
            equivariant: Some(r.equivariant.len()),
            obstructed: Some(r.obstructed_fixed.len()),
            fiber_functor_count: Some(r.fiber_functor_count),
            group_theoretical: Some(r.group_theoretical),
            lagrangians: Some(r.lagrangians.len()),
            error: None,
        }
    }

    pub fn err(line: usize, msg: String) -> Self {
        SweepJson {
            line,
            input: None,
            pairs: None,
            induced: None,
            equivariant: None,
            obstructed: None,
            fiber_functor_count: None,
            group_theoretical: None,
            lagrangians: None,
            error: Some(msg),
        }
    }
}

#[derive(Serialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// `{(0),(2)}`, the text form of an element list.
pub fn element_set(elems: &[Element]) -> String {
    let parts: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn group_name(orders: &[u64]) -> String {
    FinAbGroup::new(orders.to_vec()).map(|g| g.to_string()).unwrap_or_else(|_| "Z1".into())
}

/// `(x)->p/q` pairs joined by spaces.
pub fn nu_text(nu: &NuFunction) -> String {
    nu.as_map().iter().map(|(k, v)| format!("{k}->{v}")).collect::<Vec<_>>().join(" ")
}

pub fn int_matrix_text(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}
