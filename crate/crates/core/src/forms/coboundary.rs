//! Solving `δν = f` for symmetric 2-cocycles `f` on a finite abelian group,
//! with `δν(a,b) = ν(a) + ν(b) - ν(a+b)`.
//!
//! Symmetric cocycles with values in `Q/Z` are coboundaries, so a solution
//! always exists. It is built along coordinate paths: `ν(e_i)` is the least
//! root of `m_i·ν(e_i) = Σ_{k<m_i} f(k·e_i, e_i)` and `ν(a + e_i) = ν(a) +
//! ν(e_i) - f(a, e_i)` where `i` is the last nonzero coordinate. Of all
//! solutions (which differ by characters) this is the lexicographically
//! least table. The result is checked against `f` on every pair.

use std::collections::BTreeMap;

use serde::Serialize;

use super::BilinearCocycle;
use crate::abelian::{Element, FinAbGroup};
use crate::error::{Error, Result};
use crate::phase::PhaseExp;

/// A function `G -> Q/Z` stored as a table in element-index order, with
/// `ν(0) = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NuFunction {
    domain: FinAbGroup,
    table: Vec<PhaseExp>,
}

impl NuFunction {
    pub fn new(domain: FinAbGroup, table: Vec<PhaseExp>) -> Result<Self> {
        if table.len() != domain.order() {
            return Err(Error::DimensionMismatch {
                expected: domain.order(),
                got: table.len(),
            });
        }
        if !table[0].is_zero() {
            return Err(Error::Inconsistency("nu(0) must vanish".into()));
        }
        Ok(NuFunction { domain, table })
    }

    pub fn zero(domain: &FinAbGroup) -> Self {
        NuFunction {
            domain: domain.clone(),
            table: vec![PhaseExp::ZERO; domain.order()],
        }
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn table(&self) -> &[PhaseExp] {
        &self.table
    }

    pub fn get(&self, a: &Element) -> PhaseExp {
        self.table[self.domain.index(a)]
    }

    pub fn at_index(&self, i: usize) -> PhaseExp {
        self.table[i]
    }

    /// `ν + λ` for a function given on indices.
    pub fn add_fn(&self, f: impl Fn(usize) -> PhaseExp) -> NuFunction {
        NuFunction {
            domain: self.domain.clone(),
            table: self.table.iter().enumerate().map(|(i, &v)| v + f(i)).collect(),
        }
    }

    /// `δν(a, b)`.
    pub fn coboundary(&self, a: &Element, b: &Element) -> PhaseExp {
        self.get(a) + self.get(b) - self.get(&self.domain.add(a, b))
    }

    /// Table as an ordered map `"(x,y)" -> "p/q"`.
    pub fn as_map(&self) -> BTreeMap<String, String> {
        self.table
            .iter()
            .enumerate()
            .map(|(i, v)| (self.domain.element(i).to_string(), v.to_string()))
            .collect()
    }
}

impl Serialize for NuFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.table.len()))?;
        for (i, v) in self.table.iter().enumerate() {
            m.serialize_entry(&self.domain.element(i).to_string(), &v.to_string())?;
        }
        m.end()
    }
}

impl std::fmt::Debug for NuFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Nu{:?}", self.table)
    }
}

/// A 2-cochain given as a full table over `G × G`, index `a·|G| + b`.
#[derive(Clone, Debug)]
pub struct CochainTable {
    pub group: FinAbGroup,
    pub values: Vec<PhaseExp>,
}

impl CochainTable {
    pub fn from_fn(group: &FinAbGroup, f: impl Fn(&Element, &Element) -> PhaseExp) -> Self {
        let n = group.order();
        let elems: Vec<Element> = group.elements().collect();
        let mut values = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                values.push(f(a, b));
            }
        }
        CochainTable {
            group: group.clone(),
            values,
        }
    }

    pub fn get(&self, a: usize, b: usize) -> PhaseExp {
        self.values[a * self.group.order() + b]
    }
}

fn build<F: Fn(&Element, &Element) -> PhaseExp>(g: &FinAbGroup, f: F) -> NuFunction {
    let r = g.rank();
    let basis_vals: Vec<PhaseExp> = (0..r)
        .map(|i| {
            let e = g.generator(i);
            let m = g.orders()[i];
            let total: PhaseExp = (0..m).map(|k| f(&g.scale(&e, k as i64), &e)).sum();
            total.divide_least(m)
        })
        .collect();
    let n = g.order();
    let mut table = vec![PhaseExp::ZERO; n];
    for idx in 1..n {
        let a = g.element(idx);
        let i = (0..r).rev().find(|&i| a.0[i] != 0).expect("nonzero element");
        let e = g.generator(i);
        let prev = g.sub(&a, &e);
        table[idx] = table[g.index(&prev)] + basis_vals[i] - f(&prev, &e);
    }
    NuFunction {
        domain: g.clone(),
        table,
    }
}

/// General solver for a normalized symmetric cocycle given as a table.
pub fn solve_coboundary(f: &CochainTable) -> Result<NuFunction> {
    let g = &f.group;
    let n = g.order();
    if f.values.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: f.values.len(),
        });
    }
    for a in 0..n {
        if !f.get(0, a).is_zero() || !f.get(a, 0).is_zero() {
            return Err(Error::CoboundaryPrecondition(format!(
                "not normalized at {}",
                g.element(a)
            )));
        }
        for b in a + 1..n {
            if f.get(a, b) != f.get(b, a) {
                return Err(Error::CoboundaryPrecondition(format!(
                    "alternating part nonzero at ({}, {})",
                    g.element(a),
                    g.element(b)
                )));
            }
        }
    }
    let nu = build(g, |a, b| f.get(g.index(a), g.index(b)));
    for a in 0..n {
        for b in 0..n {
            let d = nu.at_index(a) + nu.at_index(b) - nu.at_index(g.add_index(a, b));
            if d != f.get(a, b) {
                return Err(Error::CoboundaryPrecondition(format!(
                    "not a cocycle: no solution matches at ({}, {})",
                    g.element(a),
                    g.element(b)
                )));
            }
        }
    }
    Ok(nu)
}

/// Pairs checked exhaustively up to this group order; beyond it the check
/// runs on generator rows only.
const FULL_CHECK_LIMIT: usize = 1024;

/// Solver for a symmetric bilinear `f`, without materializing the table.
pub fn solve_coboundary_bilinear(f: &BilinearCocycle) -> Result<NuFunction> {
    let g = f.group();
    if !f.is_symmetric() {
        let r = g.rank();
        let (i, j) = (0..r)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .find(|&(i, j)| f.matrix()[i][j] != f.matrix()[j][i])
            .expect("asymmetric entry");
        return Err(Error::CoboundaryPrecondition(format!(
            "alternating part nonzero at ({}, {})",
            g.generator(i),
            g.generator(j)
        )));
    }
    let nu = build(g, |a, b| f.eval(a, b));
    let n = g.order();
    let check_b: Vec<Element> = if n <= FULL_CHECK_LIMIT {
        g.elements().collect()
    } else {
        (0..g.rank()).map(|i| g.generator(i)).collect()
    };
    for a in g.elements() {
        for b in &check_b {
            if nu.coboundary(&a, b) != f.eval(&a, b) {
                return Err(Error::Inconsistency(format!("coboundary solver mismatch at ({a}, {b})")));
            }
        }
    }
    Ok(nu)
}
