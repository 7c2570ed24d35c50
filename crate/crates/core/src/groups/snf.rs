//! Smith normal form over the integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal, `d[i][i] | d[i+1][i+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonnegative diagonal entries, `min(rows, cols)` of them.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len))).map(|i| self.d[i][i].clone()).collect()
    }
}

pub fn identity_matrix(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = alloc::vec![alloc::vec![BigInt::zero(); cols]; rows];
    for i in 0..rows {
        assert_eq!(a[i].len(), inner, "dimension mismatch");
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Fraction-free determinant (Bareiss).
pub fn determinant(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

struct State {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl State {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.d.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.d.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.d, &mut self.u] {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(src) {
                *x += q * s;
            }
        }
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.d, &mut self.v] {
            for row in m.iter_mut() {
                let s = row[j].clone();
                row[i] += q * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.d, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut s = State { d: a.clone(), u: identity_matrix(rows), v: identity_matrix(cols) };

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !s.d[i][j].is_zero() && best.is_none_or(|(bi, bj)| s.d[i][j].abs() < s.d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !s.d[i][t].is_zero() {
                    let q = -s.d[i][t].div_floor(&s.d[t][t]);
                    s.add_row(i, t, &q);
                    if !s.d[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !s.d[t][j].is_zero() {
                    let q = -s.d[t][j].div_floor(&s.d[t][t]);
                    s.add_col(j, t, &q);
                    if !s.d[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // a remainder smaller than the pivot is left; move it into place
                let mut best = (t, t);
                for i in t..rows {
                    if !s.d[i][t].is_zero() && s.d[i][t].abs() < s.d[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if !s.d[t][j].is_zero() && s.d[t][j].abs() < s.d[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                s.swap_rows(t, best.0);
                s.swap_cols(t, best.1);
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.d[i][j].is_multiple_of(&s.d[t][t])));
            match bad {
                Some(i) => s.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if s.d[t][t].is_negative() {
            s.negate_row(t);
        }
    }
    Snf { d: s.d, u: s.u, v: s.v }
}
