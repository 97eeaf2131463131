use serde::Serialize;

use super::group::{Element, FinAbGroup};
use super::snf::{mat_vec, snf, IntMatrix};
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Homomorphism given by an integer matrix (target rank × source rank).
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Hom {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: IntMatrix,
}

/// Outcome of solving `f(x) = t`.
#[derive(Debug, Clone)]
pub struct Solution {
    /// Lexicographically least preimage, if any.
    pub solution: Option<Element>,
    pub kernel: Subgroup,
}

impl Hom {
    /// Checks that every column is killed by the order of its generator.
    pub fn new(source: FinAbGroup, target: FinAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.len() != target.rank() {
            return Err(Error::DimensionMismatch {
                expected: target.rank(),
                got: matrix.len(),
            });
        }
        for row in &matrix {
            if row.len() != source.rank() {
                return Err(Error::DimensionMismatch {
                    expected: source.rank(),
                    got: row.len(),
                });
            }
        }
        let matrix: IntMatrix = matrix
            .into_iter()
            .zip(target.orders())
            .map(|(row, &m)| row.into_iter().map(|x| x.rem_euclid(m as i64)).collect())
            .collect();
        for (j, &n) in source.orders().iter().enumerate() {
            for (i, &m) in target.orders().iter().enumerate() {
                if (matrix[i][j] as i128 * n as i128) % m as i128 != 0 {
                    return Err(Error::IllDefinedHom { col: j, order: n });
                }
            }
        }
        Ok(Hom {
            source,
            target,
            matrix,
        })
    }

    /// Homomorphism sending the `j`-th generator of `source` to `images[j]`.
    pub fn from_images(source: FinAbGroup, target: FinAbGroup, images: &[Element]) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::DimensionMismatch {
                expected: source.rank(),
                got: images.len(),
            });
        }
        let m: IntMatrix = (0..target.rank())
            .map(|i| images.iter().map(|e| e.0[i] as i64).collect())
            .collect();
        Hom::new(source, target, m)
    }

    pub fn identity(g: &FinAbGroup) -> Hom {
        let n = g.rank();
        let m = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Hom::new(g.clone(), g.clone(), m).expect("identity is well defined")
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Element {
        debug_assert!(self.source.contains(x));
        let xs: Vec<i64> = x.0.iter().map(|&c| c as i64).collect();
        self.target.reduce(&mat_vec(&self.matrix, &xs))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Hom) -> Result<Hom> {
        if inner.target != self.source {
            return Err(Error::Inconsistency(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        let images: Vec<Element> = (0..inner.source.rank())
            .map(|j| self.apply(&inner.apply(&inner.source.generator(j))))
            .collect();
        Hom::from_images(inner.source.clone(), self.target.clone(), &images)
    }

    /// Pointwise sum `self + other`.
    pub fn add(&self, other: &Hom) -> Result<Hom> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Inconsistency("adding homs with different signatures".into()));
        }
        let images: Vec<Element> = (0..self.source.rank())
            .map(|j| {
                let g = self.source.generator(j);
                self.target.add(&self.apply(&g), &other.apply(&g))
            })
            .collect();
        Hom::from_images(self.source.clone(), self.target.clone(), &images)
    }

    pub fn negate(&self) -> Hom {
        let images: Vec<Element> = (0..self.source.rank())
            .map(|j| self.target.neg(&self.apply(&self.source.generator(j))))
            .collect();
        Hom::from_images(self.source.clone(), self.target.clone(), &images).expect("negation is well defined")
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && *self == Hom::identity(&self.source)
    }

    /// Image as a subgroup of the target.
    pub fn image(&self) -> Subgroup {
        let gens: Vec<Element> = (0..self.source.rank())
            .map(|j| self.apply(&self.source.generator(j)))
            .collect();
        Subgroup::generated(&self.target, &gens)
    }

    pub fn kernel(&self) -> Subgroup {
        self.solve(&self.target.zero()).kernel
    }

    /// Solves `f(x) = t` through the Smith form of `[F | diag(m)]`, then picks
    /// the lexicographically least element of the solution coset.
    pub fn solve(&self, t: &Element) -> Solution {
        let n = self.source.rank();
        let r = self.target.rank();
        if r == 0 {
            return Solution {
                solution: Some(self.source.zero()),
                kernel: Subgroup::full(&self.source),
            };
        }
        // [F | diag(m)] : Z^{n + r} -> Z^r
        let big: IntMatrix = (0..r)
            .map(|i| {
                let mut row = self.matrix[i].clone();
                row.extend((0..r).map(|k| if k == i { self.target.orders()[i] as i64 } else { 0 }));
                row
            })
            .collect();
        let cols = n + r;
        let s = snf(&big);
        let diag = s.diagonal();
        let rank = diag.iter().filter(|&&d| d != 0).count();

        // Z-kernel of big: columns of v beyond the rank
        let kernel_gens: Vec<Element> = (rank..cols)
            .map(|j| {
                let col: Vec<i64> = (0..n).map(|i| s.v[i][j]).collect();
                self.source.reduce(&col)
            })
            .collect();
        let kernel = Subgroup::generated(&self.source, &kernel_gens);

        let ts: Vec<i64> = t.0.iter().map(|&c| c as i64).collect();
        let ut = mat_vec(&s.u, &ts);
        let mut z = vec![0i64; cols];
        let mut solvable = true;
        for (i, &val) in ut.iter().enumerate() {
            let d = if i < diag.len() { diag[i] } else { 0 };
            if d == 0 {
                if val != 0 {
                    solvable = false;
                    break;
                }
            } else if val % d != 0 {
                solvable = false;
                break;
            } else {
                z[i] = val / d;
            }
        }
        let solution = if solvable {
            let y = mat_vec(&s.v, &z);
            let x = self.source.reduce(&y[..n]);
            debug_assert_eq!(&self.apply(&x), t);
            kernel
                .elements()
                .map(|k| self.source.add(&x, &k))
                .min()
        } else {
            None
        };
        Solution { solution, kernel }
    }
}

impl std::fmt::Debug for Hom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hom({} -> {}, {:?})", self.source, self.target, self.matrix)
    }
}
