//! Smith normal form by repeated gcd reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::IntMatrix;

/// Invariant factors `d1 | d2 | ...` of an integer matrix, optionally with
/// unimodular `left`, `right` such that `left * M * right` is diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    #[serde(with = "crate::decimal::vec")]
    pub diag: Vec<BigInt>,
    pub rank: usize,
    #[serde(skip)]
    pub left: Option<IntMatrix>,
    #[serde(skip)]
    pub right: Option<IntMatrix>,
}

impl SmithForm {
    /// Invariant factors different from one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// Product of the nonzero invariant factors.
    pub fn product(&self) -> BigInt {
        self.diag.iter().product()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    left: Option<Vec<Vec<BigInt>>>,
    right: Option<Vec<Vec<BigInt>>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(l) = &mut self.left {
            l.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(r) = &mut self.right {
            for row in r {
                row.swap(i, j);
            }
        }
    }

    // row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
            let src_row = m[src].clone();
            for (d, s) in m[dst].iter_mut().zip(&src_row) {
                if !s.is_zero() {
                    *d += q * s;
                }
            }
        }
        apply(&mut self.a, dst, src, q);
        if let Some(l) = &mut self.left {
            apply(l, dst, src, q);
        }
    }

    // col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
            for row in m {
                if !row[src].is_zero() {
                    let s = row[src].clone();
                    row[dst] += q * s;
                }
            }
        }
        apply(&mut self.a, dst, src, q);
        if let Some(r) = &mut self.right {
            apply(r, dst, src, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in &mut self.a[i] {
            *v = -std::mem::take(v);
        }
        if let Some(l) = &mut self.left {
            for v in &mut l[i] {
                *v = -std::mem::take(v);
            }
        }
    }
}

/// Computes the Smith normal form. Pivots are the smallest nonzero entry in
/// absolute value, ties broken leftmost then topmost.
pub fn smith_normal_form(m: &IntMatrix, with_transforms: bool) -> SmithForm {
    let (rows, cols) = m.shape();
    let mut w = Work {
        a: m.to_rows(),
        left: with_transforms.then(|| IntMatrix::identity(rows).into_rows()),
        right: with_transforms.then(|| IntMatrix::identity(cols).into_rows()),
    };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&w.a, t) else {
            break;
        };
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.add_row(i, t, &-q);
                if !w.a[i][t].is_zero() {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.add_col(j, t, &-q);
                if !w.a[t][j].is_zero() {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the remaining block
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&w.a[t][t])));
            match bad_row {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        diag.push(w.a[t][t].clone());
        t += 1;
    }
    SmithForm {
        rank: diag.len(),
        diag,
        left: w.left.map(|l| IntMatrix::from_row_vecs(l, rows)),
        right: w.right.map(|r| IntMatrix::from_row_vecs(r, cols)),
    }
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut best: Option<(usize, usize)> = None;
    for c in t..cols {
        for (r, row) in a.iter().enumerate().take(rows).skip(t) {
            let v = &row[c];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| v.abs() < a[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}
