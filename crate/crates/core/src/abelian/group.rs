use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Z_{m_1} ⊕ … ⊕ Z_{m_r}` in the basis the user wrote it in.
///
/// Factors equal to one are dropped; the factor order is kept because
/// bicharacter matrices are written against it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

/// Coordinates of a group element, each reduced modulo its factor order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub Vec<u64>);

impl FinAbGroup {
    pub fn new(orders: impl Into<Vec<u64>>) -> Result<Self> {
        let orders: Vec<u64> = orders.into();
        if let Some(pos) = orders.iter().position(|&m| m == 0) {
            return Err(Error::NotAnElement(format!("factor {pos} has order 0")));
        }
        Ok(FinAbGroup {
            orders: orders.into_iter().filter(|&m| m > 1).collect(),
        })
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(vec![n]).expect("cyclic order must be positive")
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: Vec::new() }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> usize {
        self.orders.iter().product::<u64>() as usize
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &m| acc.lcm(&m))
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> Element {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        Element(c)
    }

    pub fn contains(&self, e: &Element) -> bool {
        e.0.len() == self.rank() && e.0.iter().zip(&self.orders).all(|(&c, &m)| c < m)
    }

    pub fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::NotAnElement(format!("{e} in {self}")))
        }
    }

    /// Reduce arbitrary integer coordinates.
    pub fn reduce(&self, coords: &[i64]) -> Element {
        debug_assert_eq!(coords.len(), self.rank());
        Element(
            coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
                .collect(),
        )
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &m)| (m - x) % m)
                .collect(),
        )
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Element, n: i64) -> Element {
        Element(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &m)| ((x as i128 * n as i128).rem_euclid(m as i128)) as u64)
                .collect(),
        )
    }

    pub fn element_order(&self, a: &Element) -> u64 {
        a.0.iter()
            .zip(&self.orders)
            .fold(1, |acc, (&x, &m)| acc.lcm(&(m / x.gcd(&m))))
    }

    /// Mixed-radix index; ascending index is lexicographic coordinate order.
    pub fn index(&self, e: &Element) -> usize {
        e.0.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    pub fn element(&self, mut idx: usize) -> Element {
        let mut c = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            let m = self.orders[i] as usize;
            c[i] = (idx % m) as u64;
            idx /= m;
        }
        Element(c)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    /// Index of `a + b` computed on indices.
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        self.index(&self.add(&self.element(a), &self.element(b)))
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut o = self.orders.clone();
        o.extend_from_slice(&other.orders);
        FinAbGroup { orders: o }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self.orders.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_unit_factors() {
        let g = FinAbGroup::new(vec![1, 2, 1, 4]).unwrap();
        assert_eq!(g.orders(), &[2, 4]);
        assert_eq!(g.order(), 8);
        assert_eq!(g.exponent(), 4);
        assert!(FinAbGroup::new(vec![0]).is_err());
        assert_eq!(FinAbGroup::new(vec![1]).unwrap().order(), 1);
    }

    #[test]
    fn index_is_lexicographic() {
        let g = FinAbGroup::new(vec![2, 3]).unwrap();
        let all: Vec<Element> = g.elements().collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        for (i, e) in all.iter().enumerate() {
            assert_eq!(g.index(e), i);
        }
    }

    #[test]
    fn arithmetic_reduces() {
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        let a = Element(vec![1, 3]);
        assert_eq!(g.add(&a, &a), Element(vec![0, 2]));
        assert_eq!(g.neg(&a), Element(vec![1, 1]));
        assert_eq!(g.scale(&a, -1), g.neg(&a));
        assert_eq!(g.element_order(&a), 4);
        assert_eq!(g.element_order(&g.zero()), 1);
    }

    #[test]
    fn display() {
        assert_eq!(FinAbGroup::new(vec![2, 4]).unwrap().to_string(), "Z2xZ4");
        assert_eq!(FinAbGroup::trivial().to_string(), "Z1");
    }
}
