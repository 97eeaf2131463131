//! Smith normal form over the integers with tracked transforms.

/// Dense integer matrix, row major.
pub type IntMatrix = Vec<Vec<i64>>;

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal with
/// `d[i][i] | d[i+1][i+1]`. Inverses of both transforms are kept because
/// quotient and pushout code needs to move back and forth.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Diagonal entries, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<i64> {
        let n = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..n).map(|i| self.d[i][i]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0i64; cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] = checked(out[i][j] as i128 + x as i128 * b[k][j] as i128);
            }
        }
    }
    out
}

pub fn mat_vec(a: &IntMatrix, x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| checked(row.iter().zip(x).map(|(&r, &v)| r as i128 * v as i128).sum()))
        .collect()
}

fn checked(x: i128) -> i64 {
    i64::try_from(x).expect("integer overflow in Smith normal form arithmetic")
}

struct Work {
    a: Vec<Vec<i128>>,
    u: Vec<Vec<i128>>,
    u_inv: Vec<Vec<i128>>,
    v: Vec<Vec<i128>>,
    v_inv: Vec<Vec<i128>>,
    rows: usize,
    cols: usize,
}

impl Work {
    // row_i += k·row_j
    fn add_row(&mut self, i: usize, j: usize, k: i128) {
        if k == 0 {
            return;
        }
        for c in 0..self.cols {
            self.a[i][c] += k * self.a[j][c];
        }
        for c in 0..self.rows {
            self.u[i][c] += k * self.u[j][c];
        }
        for r in 0..self.rows {
            self.u_inv[r][j] -= k * self.u_inv[r][i];
        }
    }

    // col_i += k·col_j
    fn add_col(&mut self, i: usize, j: usize, k: i128) {
        if k == 0 {
            return;
        }
        for r in 0..self.rows {
            self.a[r][i] += k * self.a[r][j];
        }
        for r in 0..self.cols {
            self.v[r][i] += k * self.v[r][j];
        }
        for c in 0..self.cols {
            self.v_inv[j][c] -= k * self.v_inv[i][c];
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.u.swap(i, j);
        for r in 0..self.rows {
            self.u_inv[r].swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.a[r].swap(i, j);
        }
        for r in 0..self.cols {
            self.v[r].swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self.a[i][c] = -self.a[i][c];
        }
        for c in 0..self.rows {
            self.u[i][c] = -self.u[i][c];
        }
        for r in 0..self.rows {
            self.u_inv[r][i] = -self.u_inv[r][i];
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, i128)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let x = self.a[r][c].abs();
                if x != 0 && best.is_none_or(|(_, _, b)| x < b) {
                    best = Some((r, c, x));
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    fn step(&mut self, t: usize) -> bool {
        let Some((r, c)) = self.min_entry(t) else {
            return false;
        };
        self.swap_rows(t, r);
        self.swap_cols(t, c);
        loop {
            let mut dirty = false;
            for r in t + 1..self.rows {
                let q = self.a[r][t].div_euclid(self.a[t][t]);
                self.add_row(r, t, -q);
                if self.a[r][t] != 0 {
                    dirty = true;
                }
            }
            for c in t + 1..self.cols {
                let q = self.a[t][c].div_euclid(self.a[t][t]);
                self.add_col(c, t, -q);
                if self.a[t][c] != 0 {
                    dirty = true;
                }
            }
            if dirty {
                // move a smaller remainder into the pivot and go again
                let mut best = (t, t, self.a[t][t].abs());
                for r in t + 1..self.rows {
                    let x = self.a[r][t].abs();
                    if x != 0 && x < best.2 {
                        best = (r, t, x);
                    }
                }
                for c in t + 1..self.cols {
                    let x = self.a[t][c].abs();
                    if x != 0 && x < best.2 {
                        best = (t, c, x);
                    }
                }
                self.swap_rows(t, best.0);
                self.swap_cols(t, best.1);
                continue;
            }
            // divisibility of the remaining block
            let p = self.a[t][t];
            let mut offender = None;
            'scan: for r in t + 1..self.rows {
                for c in t + 1..self.cols {
                    if self.a[r][c] % p != 0 {
                        offender = Some(r);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(r) => self.add_row(t, r, 1),
                None => break,
            }
        }
        if self.a[t][t] < 0 {
            self.negate_row(t);
        }
        true
    }
}

/// Smith normal form of `m`.
pub fn snf(m: &IntMatrix) -> Snf {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let id = |n: usize| -> Vec<Vec<i128>> {
        (0..n)
            .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
            .collect()
    };
    let mut w = Work {
        a: m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect(),
        u: id(rows),
        u_inv: id(rows),
        v: id(cols),
        v_inv: id(cols),
        rows,
        cols,
    };
    for t in 0..rows.min(cols) {
        if !w.step(t) {
            break;
        }
    }
    let conv = |x: Vec<Vec<i128>>| -> IntMatrix {
        x.into_iter()
            .map(|r| r.into_iter().map(checked).collect())
            .collect()
    };
    Snf {
        u: conv(w.u),
        u_inv: conv(w.u_inv),
        d: conv(w.a),
        v: conv(w.v),
        v_inv: conv(w.v_inv),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> Snf {
        let s = snf(m);
        assert_eq!(mat_mul(&mat_mul(&s.u, m), &s.v), s.d);
        assert_eq!(mat_mul(&s.u, &s.u_inv), identity(m.len()));
        let c = m.first().map_or(0, |r| r.len());
        assert_eq!(mat_mul(&s.v, &s.v_inv), identity(c));
        for (i, row) in s.d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i != j {
                    assert_eq!(x, 0);
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[0] >= 0);
            if w[0] == 0 {
                assert_eq!(w[1], 0);
            } else {
                assert_eq!(w[1] % w[0], 0);
            }
        }
        s
    }

    #[test]
    fn worked_examples() {
        assert_eq!(check(&vec![vec![2, 0], vec![0, 2]]).diagonal(), vec![2, 2]);
        assert_eq!(check(&vec![vec![1, 1], vec![0, 1]]).diagonal(), vec![1, 1]);
        assert_eq!(check(&vec![vec![2, 4], vec![4, 8]]).diagonal(), vec![2, 0]);
        assert_eq!(check(&vec![vec![2, 0], vec![0, 3]]).diagonal(), vec![1, 6]);
        assert_eq!(check(&vec![vec![4, 0], vec![0, 6]]).diagonal(), vec![2, 12]);
    }

    #[test]
    fn rectangular_and_empty() {
        check(&vec![vec![2, 4, 6]]);
        check(&vec![vec![3], vec![6], vec![9]]);
        let s = check(&vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(s.rank(), 0);
        check(&vec![]);
    }

    proptest! {
        #[test]
        fn random_matrices(rows in 1usize..5, cols in 1usize..6, seed in proptest::collection::vec(-12i64..12, 30)) {
            let m: IntMatrix = (0..rows).map(|i| (0..cols).map(|j| seed[i * cols + j]).collect()).collect();
            check(&m);
        }
    }
}
