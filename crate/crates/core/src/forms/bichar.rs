use std::fmt;

use serde::Serialize;

use crate::abelian::{dual, quotient, Element, FinAbGroup, Hom, Quotient, Subgroup};
use crate::error::{Error, Result};
use crate::phase::PhaseExp;

/// Matrix of phases over the generator basis of a group.
pub type PhaseMatrix = Vec<Vec<PhaseExp>>;

/// `χ(a, b) = Σ a_i b_j B[i][j]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Bicharacter {
    group: FinAbGroup,
    matrix: PhaseMatrix,
}

fn check_matrix(group: &FinAbGroup, matrix: &PhaseMatrix) -> Result<()> {
    let r = group.rank();
    if matrix.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: matrix.len(),
        });
    }
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: row.len(),
            });
        }
        for (j, v) in row.iter().enumerate() {
            let (mi, mj) = (group.orders()[i], group.orders()[j]);
            if !v.scale(mi as i64).is_zero() || !v.scale(mj as i64).is_zero() {
                return Err(Error::IllDefined {
                    row: i,
                    col: j,
                    value: v.to_string(),
                    m_row: mi,
                    m_col: mj,
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn eval_matrix(matrix: &PhaseMatrix, a: &Element, b: &Element) -> PhaseExp {
    let mut acc = PhaseExp::ZERO;
    for (i, &x) in a.0.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.0.iter().enumerate() {
            if y == 0 {
                continue;
            }
            acc += matrix[i][j].scale((x as i128 * y as i128 % matrix[i][j].den() as i128) as i64);
        }
    }
    acc
}

impl Bicharacter {
    /// Validates shape and that every entry is killed by both generator orders.
    pub fn new(group: FinAbGroup, matrix: PhaseMatrix) -> Result<Self> {
        check_matrix(&group, &matrix)?;
        Ok(Bicharacter { group, matrix })
    }

    pub fn zero(group: &FinAbGroup) -> Self {
        let r = group.rank();
        Bicharacter {
            group: group.clone(),
            matrix: vec![vec![PhaseExp::ZERO; r]; r],
        }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn matrix(&self) -> &PhaseMatrix {
        &self.matrix
    }

    pub fn eval(&self, a: &Element, b: &Element) -> PhaseExp {
        eval_matrix(&self.matrix, a, b)
    }

    pub fn transpose(&self) -> Bicharacter {
        let r = self.group.rank();
        Bicharacter {
            group: self.group.clone(),
            matrix: (0..r).map(|i| (0..r).map(|j| self.matrix[j][i]).collect()).collect(),
        }
    }

    /// First generator pair `(e_i, e_j)` with `χ(e_i,e_j) ≠ χ(e_j,e_i)`.
    pub fn symmetry_witness(&self) -> Option<(Element, Element)> {
        let r = self.group.rank();
        for i in 0..r {
            for j in i + 1..r {
                if self.matrix[i][j] != self.matrix[j][i] {
                    return Some((self.group.generator(i), self.group.generator(j)));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_witness().is_none()
    }

    /// `χ(x, x) = 0` for all `x`; on matrices: zero diagonal and `B = -Bᵀ`.
    pub fn is_alternating(&self) -> bool {
        let r = self.group.rank();
        (0..r).all(|i| {
            self.matrix[i][i].is_zero() && (0..r).all(|j| self.matrix[i][j] == -self.matrix[j][i])
        })
    }

    /// Left adjoint `a ↦ χ(a, -)` into the character group.
    pub fn adjoint(&self) -> Hom {
        let g = &self.group;
        let images: Vec<Element> = (0..g.rank())
            .map(|j| {
                let vals: Vec<PhaseExp> = (0..g.rank()).map(|i| self.matrix[j][i]).collect();
                dual::from_values(g, &vals).expect("well-defined bicharacter")
            })
            .collect();
        Hom::from_images(g.clone(), dual::characters(g), &images).expect("adjoint is well defined")
    }

    /// `{a : χ(a, -) ≡ 0}`.
    pub fn left_kernel(&self) -> Subgroup {
        self.adjoint().kernel()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.left_kernel().order() == 1
    }

    /// `{a ∈ A : χ(a, s) = 0 for all s ∈ S}`.
    pub fn perp(&self, s: &Subgroup) -> Subgroup {
        let sg = s.group();
        let images: Vec<Element> = (0..self.group.rank())
            .map(|j| {
                let e = self.group.generator(j);
                let vals: Vec<PhaseExp> = s.basis().iter().map(|b| self.eval(&e, b)).collect();
                dual::from_values(sg, &vals).expect("restriction of a character")
            })
            .collect();
        Hom::from_images(self.group.clone(), dual::characters(sg), &images)
            .expect("pairing against a subgroup is well defined")
            .kernel()
    }

    /// Restriction to `H`, written in the abstract basis of `H`.
    pub fn restrict(&self, h: &Subgroup) -> Bicharacter {
        let b = h.basis();
        Bicharacter {
            group: h.group().clone(),
            matrix: b.iter().map(|x| b.iter().map(|y| self.eval(x, y)).collect()).collect(),
        }
    }

    /// Descends to `G/K`; `K` must pair trivially on both sides.
    pub fn descend(&self, k: &Subgroup) -> Result<(Bicharacter, Quotient)> {
        for x in k.basis() {
            for j in 0..self.group.rank() {
                let e = self.group.generator(j);
                if !self.eval(x, &e).is_zero() || !self.eval(&e, x).is_zero() {
                    return Err(Error::NotInRadical);
                }
            }
        }
        let q = quotient(&self.group, k)?;
        let l = &q.lifts;
        let matrix = l.iter().map(|x| l.iter().map(|y| self.eval(x, y)).collect()).collect();
        Ok((
            Bicharacter {
                group: q.group.clone(),
                matrix,
            },
            q,
        ))
    }
}

impl fmt::Display for Bicharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::render_matrix(&self.matrix))
    }
}

impl fmt::Debug for Bicharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bicharacter({} on {})", self, self.group)
    }
}

/// An alternating bicharacter; classifies a class in `H²(H, k*)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AlternatingForm(Bicharacter);

impl AlternatingForm {
    pub fn new(b: Bicharacter) -> Result<Self> {
        if !b.is_alternating() {
            return Err(Error::Inconsistency(format!("form {b} is not alternating")));
        }
        Ok(AlternatingForm(b))
    }

    pub fn zero(group: &FinAbGroup) -> Self {
        AlternatingForm(Bicharacter::zero(group))
    }

    pub fn as_bichar(&self) -> &Bicharacter {
        &self.0
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.0.group
    }

    pub fn matrix(&self) -> &PhaseMatrix {
        &self.0.matrix
    }

    pub fn eval(&self, a: &Element, b: &Element) -> PhaseExp {
        self.0.eval(a, b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.matrix.iter().flatten().all(|v| v.is_zero())
    }

    /// Radical `{h : ξ(h, -) ≡ 0}`.
    pub fn radical(&self) -> Subgroup {
        self.0.left_kernel()
    }

    pub fn descend(&self, k: &Subgroup) -> Result<(AlternatingForm, Quotient)> {
        let (b, q) = self.0.descend(k)?;
        Ok((AlternatingForm(b), q))
    }
}

impl fmt::Display for AlternatingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for AlternatingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlternatingForm({} on {})", self.0, self.0.group)
    }
}

impl PartialOrd for AlternatingForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlternatingForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .group
            .cmp(&other.0.group)
            .then_with(|| self.0.matrix.cmp(&other.0.matrix))
    }
}

/// Bilinear representative `ψ(a,b) = Σ a_i b_j P[i][j]` of a class in
/// `H²(G, k*)`. Not required to be symmetric.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BilinearCocycle {
    group: FinAbGroup,
    matrix: PhaseMatrix,
}

impl BilinearCocycle {
    pub fn new(group: FinAbGroup, matrix: PhaseMatrix) -> Result<Self> {
        check_matrix(&group, &matrix)?;
        Ok(BilinearCocycle { group, matrix })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn matrix(&self) -> &PhaseMatrix {
        &self.matrix
    }

    pub fn eval(&self, a: &Element, b: &Element) -> PhaseExp {
        eval_matrix(&self.matrix, a, b)
    }

    pub fn is_symmetric(&self) -> bool {
        let r = self.group.rank();
        (0..r).all(|i| (0..r).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    pub fn add(&self, other: &BilinearCocycle) -> Result<BilinearCocycle> {
        if self.group != other.group {
            return Err(Error::Inconsistency("adding cocycles on different groups".into()));
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| x + y).collect())
            .collect();
        Ok(BilinearCocycle {
            group: self.group.clone(),
            matrix,
        })
    }
}

impl fmt::Debug for BilinearCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearCocycle({} on {})", super::render_matrix(&self.matrix), self.group)
    }
}

/// `ξ_ψ = P - Pᵀ`.
pub fn alt_form(psi: &BilinearCocycle) -> AlternatingForm {
    let r = psi.group.rank();
    let m = (0..r)
        .map(|i| (0..r).map(|j| psi.matrix[i][j] - psi.matrix[j][i]).collect())
        .collect();
    AlternatingForm(Bicharacter {
        group: psi.group.clone(),
        matrix: m,
    })
}

/// Upper-triangular representative of the class with alternating form `ξ`.
pub fn standard_cocycle(xi: &AlternatingForm) -> BilinearCocycle {
    let r = xi.group().rank();
    let m = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if i < j { xi.matrix()[i][j] } else { PhaseExp::ZERO })
                .collect()
        })
        .collect();
    BilinearCocycle {
        group: xi.group().clone(),
        matrix: m,
    }
}

/// Every alternating form on `g`, in lexicographic matrix order. There are
/// `∏_{i<j} gcd(m_i, m_j)` of them.
pub fn alternating_forms(g: &FinAbGroup) -> Vec<AlternatingForm> {
    use num_integer::Integer;
    let r = g.rank();
    let slots: Vec<(usize, usize, u64)> = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, g.orders()[i].gcd(&g.orders()[j])))
        .collect();
    let mut out = Vec::new();
    let mut counter = vec![0u64; slots.len()];
    loop {
        let mut m = vec![vec![PhaseExp::ZERO; r]; r];
        for (&(i, j, d), &c) in slots.iter().zip(&counter) {
            let v = PhaseExp::new(c as i64, d);
            m[i][j] = v;
            m[j][i] = -v;
        }
        out.push(AlternatingForm(Bicharacter {
            group: g.clone(),
            matrix: m,
        }));
        // odometer, last slot fastest
        let mut k = slots.len();
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            counter[k] += 1;
            if counter[k] < slots[k].2 {
                break;
            }
            counter[k] = 0;
        }
    }
}

/// Subgroups `L` with `L^⊥ = L`.
pub fn lagrangians(chi: &Bicharacter, budget: usize) -> Result<Vec<Subgroup>> {
    Ok(crate::abelian::enumerate_subgroups(chi.group(), budget)?
        .into_iter()
        .filter(|l| chi.perp(l) == *l)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: i64, d: u64) -> PhaseExp {
        PhaseExp::new(n, d)
    }

    fn hyperbolic() -> Bicharacter {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        Bicharacter::new(g, vec![vec![p(0, 1), p(1, 2)], vec![p(1, 2), p(0, 1)]]).unwrap()
    }

    #[test]
    fn eval_examples() {
        let z2 = Bicharacter::new(FinAbGroup::cyclic(2), vec![vec![p(1, 2)]]).unwrap();
        assert_eq!(z2.eval(&Element(vec![1]), &Element(vec![1])), PhaseExp::HALF);
        assert_eq!(z2.eval(&Element(vec![0]), &Element(vec![1])), PhaseExp::ZERO);
        let z4 = Bicharacter::new(FinAbGroup::cyclic(4), vec![vec![p(1, 4)]]).unwrap();
        assert_eq!(z4.eval(&Element(vec![2]), &Element(vec![3])), PhaseExp::HALF);
    }

    #[test]
    fn well_definedness() {
        assert!(matches!(
            Bicharacter::new(FinAbGroup::cyclic(2), vec![vec![p(1, 3)]]),
            Err(Error::IllDefined { row: 0, col: 0, .. })
        ));
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        assert!(Bicharacter::new(g.clone(), vec![vec![p(0, 1), p(1, 4)], vec![p(0, 1), p(0, 1)]]).is_err());
        assert!(Bicharacter::new(g, vec![vec![p(0, 1)]]).is_err());
    }

    #[test]
    fn predicates() {
        let ising = Bicharacter::new(FinAbGroup::cyclic(2), vec![vec![p(1, 2)]]).unwrap();
        assert!(ising.is_symmetric() && ising.is_nondegenerate());
        assert!(!Bicharacter::zero(&FinAbGroup::cyclic(2)).is_nondegenerate());
        let h = hyperbolic();
        assert!(h.is_symmetric() && h.is_alternating() && h.is_nondegenerate());
        // kernel scan agrees with the adjoint
        for b in [ising, h] {
            let g = b.group().clone();
            let scan: Vec<Element> = g
                .elements()
                .filter(|a| g.elements().all(|x| b.eval(a, &x).is_zero()))
                .collect();
            assert_eq!(b.left_kernel().elements().collect::<Vec<_>>(), scan);
        }
    }

    #[test]
    fn perp_examples() {
        let z4 = Bicharacter::new(FinAbGroup::cyclic(4), vec![vec![p(1, 4)]]).unwrap();
        let g = z4.group().clone();
        assert_eq!(z4.perp(&Subgroup::trivial(&g)), Subgroup::full(&g));
        assert_eq!(z4.perp(&Subgroup::full(&g)), Subgroup::trivial(&g));
        let h = Subgroup::generated(&g, &[Element(vec![2])]);
        assert_eq!(z4.perp(&h), h);
    }

    #[test]
    fn restrict_and_descend() {
        let z4 = Bicharacter::new(FinAbGroup::cyclic(4), vec![vec![p(1, 4)]]).unwrap();
        let h = Subgroup::generated(z4.group(), &[Element(vec![2])]);
        let r = z4.restrict(&h);
        assert_eq!(r.matrix(), &vec![vec![PhaseExp::ZERO]]);

        let hyp = hyperbolic();
        let l = Subgroup::generated(hyp.group(), &[Element(vec![1, 0])]);
        assert!(hyp.restrict(&l).matrix().iter().flatten().all(|v| v.is_zero()));

        let triv = Bicharacter::zero(&FinAbGroup::new(vec![2, 4]).unwrap());
        let k = Subgroup::generated(triv.group(), &[Element(vec![0, 2])]);
        let (d, q) = triv.descend(&k).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(d.matrix().iter().flatten().all(|v| v.is_zero()));

        assert!(matches!(z4.descend(&h), Err(Error::NotInRadical)));
    }

    #[test]
    fn descend_is_representative_independent() {
        // Z2xZ4 with a form whose radical contains (0,2)
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        let b = Bicharacter::new(g.clone(), vec![vec![p(0, 1), p(1, 2)], vec![p(1, 2), p(1, 2)]]).unwrap();
        let k = Subgroup::generated(&g, &[Element(vec![0, 2])]);
        let (d, q) = b.descend(&k).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(d.eval(&q.proj.apply(&x), &q.proj.apply(&y)), b.eval(&x, &y));
            }
        }
    }

    #[test]
    fn lagrangian_examples() {
        let ising = Bicharacter::new(FinAbGroup::cyclic(2), vec![vec![p(1, 2)]]).unwrap();
        assert!(lagrangians(&ising, 4096).unwrap().is_empty());
        let z4 = Bicharacter::new(FinAbGroup::cyclic(4), vec![vec![p(1, 4)]]).unwrap();
        let l = lagrangians(&z4, 4096).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].elements().collect::<Vec<_>>(), vec![Element(vec![0]), Element(vec![2])]);
        assert_eq!(lagrangians(&hyperbolic(), 4096).unwrap().len(), 3);
    }

    #[test]
    fn alt_form_examples() {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let sym = BilinearCocycle::new(g.clone(), vec![vec![p(1, 2), p(1, 2)], vec![p(1, 2), p(0, 1)]]).unwrap();
        assert!(alt_form(&sym).is_zero());
        let up = BilinearCocycle::new(g.clone(), vec![vec![p(0, 1), p(1, 2)], vec![p(0, 1), p(0, 1)]]).unwrap();
        let xi = alt_form(&up);
        assert_eq!(xi.matrix()[0][1], PhaseExp::HALF);
        assert_eq!(xi.matrix()[1][0], PhaseExp::HALF);
        assert_eq!(standard_cocycle(&xi), up);
        // every bilinear P on Z4 has zero alternating part
        let z4 = FinAbGroup::cyclic(4);
        for k in 0..4 {
            let c = BilinearCocycle::new(z4.clone(), vec![vec![p(k, 4)]]).unwrap();
            assert!(alt_form(&c).is_zero());
        }
    }

    #[test]
    fn alternating_form_counts() {
        let cases: [(&[u64], usize); 5] = [(&[2, 2], 2), (&[4], 1), (&[2, 4], 2), (&[3, 3], 3), (&[2, 2, 2], 8)];
        for (orders, n) in cases {
            let g = FinAbGroup::new(orders.to_vec()).unwrap();
            let forms = alternating_forms(&g);
            assert_eq!(forms.len(), n, "{g}");
            for xi in &forms {
                assert_eq!(&alt_form(&standard_cocycle(xi)), xi);
                for x in g.elements() {
                    assert!(xi.eval(&x, &x).is_zero());
                }
            }
        }
    }

    #[test]
    fn radical_examples() {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        assert_eq!(AlternatingForm::zero(&g).radical(), Subgroup::full(&g));
        let nd = alternating_forms(&g).pop().unwrap();
        assert_eq!(nd.radical().order(), 1);
        // radical agrees with perp taken against the form itself
        for xi in alternating_forms(&FinAbGroup::new(vec![2, 4]).unwrap()) {
            assert_eq!(xi.radical(), xi.as_bichar().perp(&Subgroup::full(xi.group())));
        }
    }
}
