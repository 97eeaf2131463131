use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use super::group::{Element, FinAbGroup};
use super::hom::Hom;
use super::snf::{mat_vec, snf, IntMatrix};
use crate::error::{Error, Result};

/// Default cap on `|A|` for enumeration-heavy operations.
pub const DEFAULT_BUDGET: usize = 4096;

/// A subgroup of a fixed ambient group.
///
/// Equality, hashing and ordering only look at the ambient group and the
/// sorted element list, so two subgroups built from different generators
/// compare equal. Ordering is by size, then by element list.
#[derive(Clone)]
pub struct Subgroup {
    ambient: FinAbGroup,
    indices: Vec<usize>,
    group: FinAbGroup,
    basis: Vec<Element>,
    // abstract index of indices[k]
    local: Vec<usize>,
}

impl Subgroup {
    pub fn trivial(ambient: &FinAbGroup) -> Subgroup {
        Subgroup::generated(ambient, &[])
    }

    pub fn full(ambient: &FinAbGroup) -> Subgroup {
        let gens: Vec<Element> = (0..ambient.rank()).map(|i| ambient.generator(i)).collect();
        Subgroup::generated(ambient, &gens)
    }

    /// Subgroup generated by `gens`.
    pub fn generated(ambient: &FinAbGroup, gens: &[Element]) -> Subgroup {
        let mut mark = vec![false; ambient.order()];
        let mut members = vec![0usize];
        mark[0] = true;
        let mut used = Vec::new();
        for g in gens {
            debug_assert!(ambient.contains(g));
            let gi = ambient.index(g);
            if mark[gi] {
                continue;
            }
            used.push(g.clone());
            // multiples of g until one lands back in the current subgroup
            let mut steps = vec![g.clone()];
            loop {
                let next = ambient.add(steps.last().unwrap(), g);
                if mark[ambient.index(&next)] {
                    break;
                }
                steps.push(next);
            }
            let base: Vec<Element> = members.iter().map(|&i| ambient.element(i)).collect();
            for step in &steps {
                for b in &base {
                    let idx = ambient.index(&ambient.add(b, step));
                    if !mark[idx] {
                        mark[idx] = true;
                        members.push(idx);
                    }
                }
            }
        }
        members.sort_unstable();
        Subgroup::with_members(ambient, members, &used)
    }

    /// Builds a subgroup from an explicit element set, rejecting sets that
    /// are not closed.
    pub fn from_elements(ambient: &FinAbGroup, elems: &[Element]) -> Result<Subgroup> {
        for e in elems {
            ambient.check(e)?;
        }
        let set: HashSet<usize> = elems.iter().map(|e| ambient.index(e)).collect();
        if !set.contains(&0) {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        let mut sorted: Vec<Element> = elems.to_vec();
        sorted.sort();
        sorted.dedup();
        // greedy generating set
        let mut gens = Vec::new();
        let mut cur = Subgroup::trivial(ambient);
        for e in &sorted {
            if !cur.contains(e) {
                gens.push(e.clone());
                cur = Subgroup::generated(ambient, &gens);
            }
        }
        if cur.order() != set.len() {
            return Err(Error::NotASubgroup(format!(
                "{} elements generate a subgroup of order {}",
                set.len(),
                cur.order()
            )));
        }
        Ok(cur)
    }

    fn with_members(ambient: &FinAbGroup, indices: Vec<usize>, _gens: &[Element]) -> Subgroup {
        let gens = canonical_generators(ambient, &indices);
        let (group, basis) = structure(ambient, &gens, indices.len());
        let embed = Hom::from_images(group.clone(), ambient.clone(), &basis)
            .expect("SNF basis respects orders");
        let mut pairs: Vec<(usize, usize)> = (0..group.order())
            .map(|k| (ambient.index(&embed.apply(&group.element(k))), k))
            .collect();
        pairs.sort_unstable();
        debug_assert_eq!(pairs.len(), indices.len());
        debug_assert!(pairs.iter().zip(&indices).all(|(p, &i)| p.0 == i));
        Subgroup {
            ambient: ambient.clone(),
            indices,
            group,
            basis,
            local: pairs.into_iter().map(|p| p.1).collect(),
        }
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    pub fn order(&self) -> usize {
        self.indices.len()
    }

    pub fn index(&self) -> usize {
        self.ambient.order() / self.order()
    }

    /// Sorted ambient indices.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.indices.iter().map(move |&i| self.ambient.element(i))
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.ambient.contains(e) && self.indices.binary_search(&self.ambient.index(e)).is_ok()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient && self.indices.iter().all(|&i| other.contains_index(i))
    }

    /// Invariant-factor type of the subgroup as an abstract group.
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Ambient images of the abstract generators.
    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn embed(&self) -> Hom {
        Hom::from_images(self.group.clone(), self.ambient.clone(), &self.basis)
            .expect("SNF basis respects orders")
    }

    /// Abstract coordinates of an ambient element lying in the subgroup.
    pub fn coords_of(&self, e: &Element) -> Option<Element> {
        if !self.ambient.contains(e) {
            return None;
        }
        self.indices
            .binary_search(&self.ambient.index(e))
            .ok()
            .map(|k| self.group.element(self.local[k]))
    }

    /// Ambient element with abstract coordinates `x`.
    pub fn lift(&self, x: &Element) -> Element {
        let mut acc = self.ambient.zero();
        for (c, b) in x.0.iter().zip(&self.basis) {
            acc = self.ambient.add(&acc, &self.ambient.scale(b, *c as i64));
        }
        acc
    }

    /// Re-expresses `sub` (a subgroup of the same ambient group contained in
    /// `self`) as a subgroup of the abstract group `self.group()`.
    pub fn relative(&self, sub: &Subgroup) -> Result<Subgroup> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup("not contained in the enclosing subgroup".into()));
        }
        let gens: Vec<Element> = sub
            .basis
            .iter()
            .map(|b| self.coords_of(b).expect("contained"))
            .collect();
        Ok(Subgroup::generated(&self.group, &gens))
    }

    /// Sum of two subgroups.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.basis.clone();
        gens.extend_from_slice(&other.basis);
        Subgroup::generated(&self.ambient, &gens)
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let common: Vec<Element> = self
            .indices
            .iter()
            .filter(|&&i| other.contains_index(i))
            .map(|&i| self.ambient.element(i))
            .collect();
        Subgroup::from_elements(&self.ambient, &common).expect("intersection of subgroups")
    }

    /// Lexicographically least element of the coset `a + self`.
    pub fn coset_rep(&self, a: &Element) -> Element {
        self.elements()
            .map(|h| self.ambient.add(a, &h))
            .min()
            .expect("subgroup is non-empty")
    }
}

/// Generators depending only on the element set: greedy over members
/// ordered by (support size, first nonzero coordinate, coordinates).
fn canonical_generators(ambient: &FinAbGroup, indices: &[usize]) -> Vec<Element> {
    let key = |e: &Element| {
        let support = e.0.iter().filter(|&&c| c != 0).count();
        let first = e.0.iter().position(|&c| c != 0).unwrap_or(0);
        (support, first, e.clone())
    };
    let mut cands: Vec<Element> = indices.iter().map(|&i| ambient.element(i)).collect();
    cands.sort_by_key(|e| key(e));
    let mut mark = vec![false; ambient.order()];
    mark[0] = true;
    let mut span = vec![0usize];
    let mut gens = Vec::new();
    for c in cands {
        if mark[ambient.index(&c)] {
            continue;
        }
        let ci = ambient.index(&c);
        let mut step = ci;
        let mut added = Vec::new();
        while !mark[step] {
            for &b in &span {
                let idx = ambient.add_index(b, step);
                if !mark[idx] {
                    mark[idx] = true;
                    added.push(idx);
                }
            }
            step = ambient.add_index(step, ci);
        }
        span.extend(added);
        gens.push(c);
    }
    gens
}

/// Invariant-factor type of `<gens>` and a matching basis. Generators that
/// already form a basis with orders in a divisibility chain are kept;
/// otherwise two Smith forms are used, one for the relation lattice and one
/// to diagonalize it.
fn structure(ambient: &FinAbGroup, gens: &[Element], order: usize) -> (FinAbGroup, Vec<Element>) {
    let t = gens.len();
    if t == 0 {
        return (FinAbGroup::trivial(), Vec::new());
    }
    let mut by_order: Vec<(u64, Element)> = gens.iter().map(|g| (ambient.element_order(g), g.clone())).collect();
    by_order.sort_by_key(|(o, _)| *o);
    let chain = by_order.windows(2).all(|w| w[1].0 % w[0].0 == 0);
    let product: usize = by_order.iter().map(|(o, _)| *o as usize).product();
    if chain && product == order {
        let orders = by_order.iter().map(|(o, _)| *o).collect::<Vec<_>>();
        let basis = by_order.into_iter().map(|(_, g)| g).collect();
        return (FinAbGroup::new(orders).expect("orders at least 2"), basis);
    }
    let r = ambient.rank();
    let big: IntMatrix = (0..r)
        .map(|i| {
            let mut row: Vec<i64> = gens.iter().map(|g| g.0[i] as i64).collect();
            row.extend((0..r).map(|k| if k == i { ambient.orders()[i] as i64 } else { 0 }));
            row
        })
        .collect();
    let s = snf(&big);
    let rank = s.rank();
    let rel: IntMatrix = (0..t)
        .map(|i| (rank..t + r).map(|j| s.v[i][j]).collect())
        .collect();
    let s2 = snf(&rel);
    let diag = s2.diagonal();
    assert_eq!(diag.len(), t, "relation lattice must have full rank");
    let mut orders = Vec::new();
    let mut basis = Vec::new();
    for (i, &d) in diag.iter().enumerate() {
        assert!(d > 0, "finite subgroup has nonzero invariant factors");
        if d == 1 {
            continue;
        }
        let col: Vec<i64> = (0..t).map(|k| s2.u_inv[k][i]).collect();
        let gmat: IntMatrix = (0..r)
            .map(|row| gens.iter().map(|g| g.0[row] as i64).collect())
            .collect();
        basis.push(ambient.reduce(&mat_vec(&gmat, &col)));
        orders.push(d as u64);
    }
    (FinAbGroup::new(orders).expect("positive orders"), basis)
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.indices == other.indices
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.indices.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices
            .len()
            .cmp(&other.indices.len())
            .then_with(|| self.indices.cmp(&other.indices))
            .then_with(|| self.ambient.cmp(&other.ambient))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({} in {}, type {})", self, self.ambient, self.group)
    }
}

/// Every subgroup of `g` exactly once, sorted by (order, element list).
///
/// Breadth-first: each known subgroup is extended by one element per coset.
pub fn enumerate_subgroups(g: &FinAbGroup, budget: usize) -> Result<Vec<Subgroup>> {
    if g.order() > budget {
        return Err(Error::BudgetExceeded {
            order: g.order(),
            budget,
        });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    let triv = Subgroup::trivial(g);
    seen.insert(triv.indices.clone());
    queue.push_back(triv);
    while let Some(s) = queue.pop_front() {
        let mut done = vec![false; g.order()];
        for &i in &s.indices {
            done[i] = true;
        }
        for x in 0..g.order() {
            if done[x] {
                continue;
            }
            let e = g.element(x);
            for h in s.elements() {
                done[g.index(&g.add(&e, &h))] = true;
            }
            let mut gens = s.basis.clone();
            gens.push(e);
            let t = Subgroup::generated(g, &gens);
            if seen.insert(t.indices.clone()) {
                queue.push_back(t);
            }
        }
        out.push(s);
    }
    out.sort();
    Ok(out)
}

/// `G/H` with its projection and a lift of each quotient generator.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FinAbGroup,
    pub proj: Hom,
    pub lifts: Vec<Element>,
}

/// Quotient by a subgroup; the kernel of the projection is recomputed and
/// compared with `h`.
pub fn quotient(g: &FinAbGroup, h: &Subgroup) -> Result<Quotient> {
    if h.ambient() != g {
        return Err(Error::NotASubgroup(format!(
            "subgroup of {} used as a subgroup of {}",
            h.ambient(),
            g
        )));
    }
    let r = g.rank();
    let m: IntMatrix = (0..r)
        .map(|i| {
            let mut row: Vec<i64> = (0..r)
                .map(|k| if k == i { g.orders()[i] as i64 } else { 0 })
                .collect();
            row.extend(h.basis().iter().map(|b| b.0[i] as i64));
            row
        })
        .collect();
    let s = snf(&m);
    let diag = s.diagonal();
    let keep: Vec<usize> = (0..r).filter(|&i| diag[i] != 1).collect();
    let orders: Vec<u64> = keep.iter().map(|&i| diag[i] as u64).collect();
    let q = FinAbGroup::new(orders)?;
    let rows: IntMatrix = keep.iter().map(|&i| s.u[i].clone()).collect();
    let proj = Hom::new(g.clone(), q.clone(), rows)?;
    let lifts: Vec<Element> = keep
        .iter()
        .map(|&i| {
            let col: Vec<i64> = (0..r).map(|k| s.u_inv[k][i]).collect();
            g.reduce(&col)
        })
        .collect();
    if q.order() * h.order() != g.order() {
        return Err(Error::Inconsistency("quotient order mismatch".into()));
    }
    let kernel: Vec<usize> = (0..g.order())
        .filter(|&i| proj.apply(&g.element(i)).is_zero())
        .collect();
    if kernel != h.indices() {
        return Err(Error::Inconsistency("quotient kernel differs from subgroup".into()));
    }
    Ok(Quotient {
        group: q,
        proj,
        lifts,
    })
}
