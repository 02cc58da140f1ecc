//! Fraction-free (Bareiss) elimination: rank, determinant and the
//! determinantal constructions built on top of them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Runs Bareiss elimination in place and returns `(rank, swaps)`.
///
/// After the call, the leading `rank x rank` pivot block is upper triangular
/// and its last pivot equals the determinant (up to the swap sign) of the
/// selected minor.
fn bareiss(rows: &mut [Vec<BigInt>], cols: usize) -> (usize, usize) {
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            rows.swap(p, rank);
            swaps += 1;
        }
        let pivot_row = rows[rank].clone();
        let pivot = pivot_row[c].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &row[j] * &pivot - &lead * &pivot_row[j];
                // exact by Sylvester's identity
                row[j] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    (rank, swaps)
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let mut rows = m.to_rows();
    bareiss(&mut rows, m.cols()).0
}

/// Exact determinant. The empty matrix has determinant 1.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "determinant of non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut rows = m.to_rows();
    let (rank, swaps) = bareiss(&mut rows, n);
    if rank < n {
        return Ok(BigInt::zero());
    }
    let d = rows[n - 1][n - 1].clone();
    Ok(if swaps % 2 == 1 { -d } else { d })
}

/// `det(M Mᵗ)`, the sum of squared maximal minors when `rows <= cols`.
pub fn gram_det(m: &IntMatrix) -> BigInt {
    let gram = m.mul(&m.transpose()).expect("shapes agree");
    det(&gram).expect("gram matrix is square")
}

/// For an `n x (n+1)` matrix `A`, the vector `v_k = (-1)^k det(A minus column k)`.
///
/// The result lies in the kernel of `A`, and it vanishes exactly when
/// `rank(A) < n`.
pub fn cofactor_kernel_vector(a: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = a.rows();
    if a.cols() != n + 1 {
        return Err(Error::ShapeMismatch(format!(
            "cofactor vector needs an n x (n+1) matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    (0..=n)
        .map(|k| {
            let keep: Vec<usize> = (0..=n).filter(|&j| j != k).collect();
            let d = det(&a.select_columns(&keep))?;
            Ok(if k % 2 == 1 { -d } else { d })
        })
        .collect()
}

/// Greatest common divisor of all entries; the zero vector has content 0.
pub fn content(v: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).abs()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len(), "dot product of unequal lengths");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
