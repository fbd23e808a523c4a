//! Smith normal form over the integers.
//!
//! Pivot rule: the nonzero entry of smallest absolute value in the active
//! submatrix, ties broken by row-major position. Row operations are
//! accumulated into `U` and column operations into `V`, so `U·M·V = D`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal of `D`, length `min(rows, cols)`.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors()
            .iter()
            .filter(|x| !x.is_zero())
            .count()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row[dst] += k·row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let (d, s) = pair_mut(m, dst, src);
            for (x, y) in d.iter_mut().zip(s.iter()) {
                *x += k * y;
            }
        }
    }

    /// col[dst] += k·col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let delta = k * &row[src];
            row[dst] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
    }

    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in self.a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.a[bi][bj].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.to_nested(),
        u: IntMatrix::identity(rows).to_nested(),
        v: IntMatrix::identity(cols).to_nested(),
    };

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = w.pivot(t) else {
                return finish(w);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let p = w.a[t][t].clone();
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = -(&w.a[i][t] / &p);
                    w.add_row(i, t, &q);
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = -(&w.a[t][j] / &p);
                    w.add_col(j, t, &q);
                }
            }
            let dirty = (t + 1..rows).any(|i| !w.a[i][t].is_zero())
                || (t + 1..cols).any(|j| !w.a[t][j].is_zero());
            if dirty {
                continue;
            }

            // Row and column are clear; enforce divisibility of the rest.
            let offender = (t + 1..rows).find_map(|i| {
                (t + 1..cols)
                    .find(|&j| !w.a[i][j].is_multiple_of(&p))
                    .map(|_| i)
            });
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => {
                    if w.a[t][t].is_negative() {
                        w.negate_row(t);
                    }
                    break;
                }
            }
        }
    }
    finish(w)
}

fn finish(w: Work) -> SmithForm {
    SmithForm {
        d: IntMatrix::from_nested(w.a),
        u: IntMatrix::from_nested(w.u),
        v: IntMatrix::from_nested(w.v),
    }
}
