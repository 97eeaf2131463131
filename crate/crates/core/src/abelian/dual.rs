//! Pontryagin duals. A character `λ` of `⊕ Z_{m_i}` is stored as an element
//! of the same group; it sends `a` to `Σ λ_i a_i / m_i`.

use super::group::{Element, FinAbGroup};
use super::hom::Hom;
use crate::error::{Error, Result};
use crate::phase::PhaseExp;

/// The character group; as an abstract group it coincides with the original.
pub fn characters(g: &FinAbGroup) -> FinAbGroup {
    g.clone()
}

pub fn eval(g: &FinAbGroup, lambda: &Element, a: &Element) -> PhaseExp {
    lambda
        .0
        .iter()
        .zip(&a.0)
        .zip(g.orders())
        .map(|((&l, &x), &m)| PhaseExp::new(((l as u128 * x as u128) % m as u128) as i64, m))
        .sum()
}

/// Character coordinates of a homomorphism `G -> Q/Z` given by its values on
/// the generators. Fails if a value is not killed by the generator order.
pub fn from_values(g: &FinAbGroup, values: &[PhaseExp]) -> Result<Element> {
    if values.len() != g.rank() {
        return Err(Error::DimensionMismatch {
            expected: g.rank(),
            got: values.len(),
        });
    }
    let coords = values
        .iter()
        .zip(g.orders())
        .enumerate()
        .map(|(i, (v, &m))| {
            v.numerator_over(m).ok_or_else(|| Error::IllDefined {
                row: i,
                col: 0,
                value: v.to_string(),
                m_row: m,
                m_col: 1,
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(Element(coords))
}

/// Pullback `λ ↦ λ ∘ f`, a hom from the dual of the target to the dual of
/// the source.
pub fn dual_hom(f: &Hom) -> Hom {
    let src = f.source();
    let tgt = f.target();
    let images: Vec<Element> = (0..tgt.rank())
        .map(|i| {
            let lambda = tgt.generator(i);
            let values: Vec<PhaseExp> = (0..src.rank())
                .map(|j| eval(tgt, &lambda, &f.apply(&src.generator(j))))
                .collect();
            from_values(src, &values).expect("pullback of a character is a character")
        })
        .collect();
    Hom::from_images(characters(tgt), characters(src), &images).expect("pullback is well defined")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        let z2 = FinAbGroup::cyclic(2);
        let z4 = FinAbGroup::cyclic(4);
        assert_eq!(eval(&z2, &Element(vec![0]), &Element(vec![1])), PhaseExp::ZERO);
        assert_eq!(eval(&z2, &Element(vec![1]), &Element(vec![1])), PhaseExp::HALF);
        assert_eq!(eval(&z4, &Element(vec![1]), &Element(vec![3])), PhaseExp::new(3, 4));
    }

    #[test]
    fn biadditive_and_torsion() {
        let g = FinAbGroup::new(vec![2, 6]).unwrap();
        for l in g.elements() {
            for a in g.elements() {
                let v = eval(&g, &l, &a);
                assert_eq!(v.scale(g.element_order(&a) as i64), PhaseExp::ZERO);
                for b in g.elements() {
                    assert_eq!(eval(&g, &l, &g.add(&a, &b)), v + eval(&g, &l, &b));
                }
            }
        }
    }

    #[test]
    fn pullback() {
        let z4 = FinAbGroup::cyclic(4);
        let z2 = FinAbGroup::cyclic(2);
        let red = Hom::new(z4.clone(), z2.clone(), vec![vec![1]]).unwrap();
        let d = dual_hom(&red);
        // the nontrivial character of Z2 pulls back to a -> a/2 on Z4
        assert_eq!(d.apply(&Element(vec![1])), Element(vec![2]));
        for l in z2.elements() {
            for a in z4.elements() {
                assert_eq!(eval(&z4, &d.apply(&l), &a), eval(&z2, &l, &red.apply(&a)));
            }
        }
    }
}
