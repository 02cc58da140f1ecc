//! Integer lattices in canonical Hermite form: kernels, images and
//! coordinates with respect to a lattice basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form with the unimodular transform.
///
/// Returns `(H, U, rank)` with `U * B = H`; the first `rank` rows of `H` are
/// nonzero, in echelon form with positive pivots and entries above each pivot
/// reduced into `[0, pivot)`. The remaining rows of `H` are zero.
pub fn hermite_rows(b: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (nrows, ncols) = b.shape();
    let mut h = b.clone().into_rows();
    let mut u = IntMatrix::identity(nrows).into_rows();
    let mut r = 0;
    let mut pivots = Vec::new();

    fn sub_multiple(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
        let s = m[src].clone();
        for (d, x) in m[dst].iter_mut().zip(&s) {
            if !x.is_zero() {
                *d -= q * x;
            }
        }
    }

    for c in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            // leftmost column, smallest nonzero entry, topmost on ties
            let pick = (r..nrows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()).then(i.cmp(&j)));
            let Some(p) = pick else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..nrows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                sub_multiple(&mut h, i, r, &q);
                sub_multiple(&mut u, i, r, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for v in h[r].iter_mut().chain(u[r].iter_mut()) {
                *v = -std::mem::take(v);
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                sub_multiple(&mut h, i, r, &q);
                sub_multiple(&mut u, i, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (
        IntMatrix::from_row_vecs(h, ncols),
        IntMatrix::from_row_vecs(u, nrows),
        r,
    )
}

/// A sublattice of `Z^n` stored by its unique Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    // basis vectors as rows, Hermite-reduced
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    /// The lattice generated by the rows of `generators`.
    pub fn from_generators(ambient: usize, generators: &IntMatrix) -> Self {
        assert_eq!(generators.cols(), ambient);
        let (h, _, rank) = hermite_rows(generators);
        let rows: Vec<usize> = (0..rank).collect();
        Self::from_hermite(h.select_rows(&rows))
    }

    fn from_hermite(basis: IntMatrix) -> Self {
        let pivots = (0..basis.rows())
            .map(|r| {
                basis
                    .row(r)
                    .iter()
                    .position(|v| !v.is_zero())
                    .expect("hermite rows are nonzero")
            })
            .collect();
        Lattice {
            ambient: basis.cols(),
            basis,
            pivots,
        }
    }

    /// All integer vectors `x` with `M x = 0`.
    pub fn kernel_of(m: &IntMatrix) -> Self {
        let t = m.transpose();
        let (_, u, rank) = hermite_rows(&t);
        let kernel_rows: Vec<usize> = (rank..t.rows()).collect();
        Self::from_generators(m.cols(), &u.select_rows(&kernel_rows))
    }

    /// The integer span of the columns of `M`.
    pub fn column_span(m: &IntMatrix) -> Self {
        Self::from_generators(m.rows(), &m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn vectors(&self) -> Vec<Vec<BigInt>> {
        self.basis.to_rows()
    }

    pub fn vector(&self, k: usize) -> &[BigInt] {
        self.basis.row(k)
    }

    /// Basis vectors as the columns of an `ambient x rank` matrix.
    pub fn basis_columns(&self) -> IntMatrix {
        self.basis.transpose()
    }

    /// Integer coordinates of `v` in the basis, or `None` if `v` is not a
    /// lattice vector.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (k, &p) in self.pivots.iter().enumerate() {
            let row = self.basis.row(k);
            let (q, rem) = rest[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, b) in rest.iter_mut().zip(row) {
                    *x -= &q * b;
                }
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Coordinates of every column of `m`, as the columns of a `rank x cols`
    /// matrix.
    pub fn coordinates_of_columns(&self, m: &IntMatrix) -> Option<IntMatrix> {
        let cols: Option<Vec<Vec<BigInt>>> = m.columns().iter().map(|c| self.coordinates(c)).collect();
        Some(IntMatrix::from_columns(self.rank(), &cols?))
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// Basis of the integer kernel `{x : M x = 0}` in canonical Hermite form.
///
/// The vectors form a lattice basis (not merely a rational one), each is
/// primitive, and each has a positive first nonzero entry.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    Lattice::kernel_of(m).vectors()
}
