//! Graph-specific counts: cycletrees of complete graphs, cycle-length
//! profiles and the small-phase Laplacian determinant.

use std::collections::BTreeMap;

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::complex::ChainComplex;
use crate::cycletrees::enumerate_cycletrees;
use crate::error::{Error, Result};
use crate::forests::tree_number;
use crate::homology::require_ranks;

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Number of cycletrees of `K_n`, `C(n-1, 2) e^n Γ(n-2, n)`, evaluated as
/// `C(n-1, 2) Σ_{k=0}^{n-3} n^k (n-3)!/k!`.
pub fn count_cycletrees_complete(n: u64) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::DimensionOutOfRange {
            dim: n as isize,
            min: 3,
            max: isize::MAX,
        });
    }
    let s = n - 3;
    let top = factorial(s);
    let mut sum = BigInt::zero();
    let mut power = BigInt::one();
    for k in 0..=s {
        sum += &power * (&top / factorial(k));
        power *= n;
    }
    let pairs = BigInt::from((n - 1) * (n - 2) / 2);
    Ok(pairs * sum)
}

/// Counts `l_j` of nonzero cycletrees whose cycle has length `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleLengthProfile {
    pub n: usize,
    pub m: usize,
    pub l: BTreeMap<usize, u64>,
    #[serde(with = "crate::decimal")]
    pub tree_number: BigInt,
}

impl CycleLengthProfile {
    pub fn total(&self) -> u64 {
        self.l.values().sum()
    }

    /// `(m - n + 1) k_1`.
    pub fn edge_identity_lhs(&self) -> BigInt {
        (BigInt::from(self.m) - BigInt::from(self.n) + 1) * &self.tree_number
    }

    /// `Σ l_j j`.
    pub fn edge_identity_rhs(&self) -> BigInt {
        self.l.iter().map(|(&j, &c)| BigInt::from(j) * c).sum()
    }

    pub fn edge_identity_holds(&self) -> bool {
        self.edge_identity_lhs() == self.edge_identity_rhs()
    }

    /// `Σ l_j j²`.
    pub fn squared_length_sum(&self) -> BigInt {
        self.l.iter().map(|(&j, &c)| BigInt::from(j * j) * c).sum()
    }
}

fn require_connected_graph(g: &ChainComplex) -> Result<()> {
    if g.top_dim() != 1 {
        return Err(Error::ShapeMismatch(format!(
            "expected a graph (top dimension 1), got top dimension {}",
            g.top_dim()
        )));
    }
    require_ranks(g, "graph must be connected", 0, &[(0, 0)])
}

pub fn cycle_length_profile(g: &ChainComplex, cap: u128) -> Result<CycleLengthProfile> {
    require_connected_graph(g)?;
    let mut l = BTreeMap::new();
    for u in enumerate_cycletrees(g, 1, cap)? {
        if !u.weight.is_zero() {
            *l.entry(u.cycle_length()).or_insert(0) += 1;
        }
    }
    Ok(CycleLengthProfile {
        n: g.cell_count(0),
        m: g.cell_count(1),
        l,
        tree_number: tree_number(g, 1)?,
    })
}

/// One evaluation of `det Δ(t)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sample {
    pub t: f64,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitEstimate {
    /// Extrapolated `lim det Δ(t) / t²`.
    pub estimate: f64,
    /// Difference between the last two extrapolants (or the last two raw
    /// quotients when only two samples exist).
    pub error: f64,
    /// Largest `|Im det Δ(t)|` over the samples.
    pub imaginary_residual: f64,
    pub samples: Vec<Sample>,
}

pub const DEFAULT_T_VALUES: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// The vertex Laplacian `∂_1 ∂_1ᵗ` with the off-diagonal entry of every edge
/// `u -> v` replaced by `-e^{it}` at `(u, v)` and `-e^{-it}` at `(v, u)`.
///
/// Every boundary column must be `head - tail` for two distinct vertices.
pub fn phase_laplacian(g: &ChainComplex, t: f64) -> Result<DMatrix<Complex<f64>>> {
    let d = g.boundary(1);
    let n = d.rows();
    let mut m = DMatrix::from_element(n, n, Complex::new(0.0, 0.0));
    let phase = Complex::new(t.cos(), t.sin());
    for e in 0..d.cols() {
        let col = d.column(e);
        let tail = col.iter().position(|c| *c == BigInt::from(-1));
        let head = col.iter().position(|c| c.is_one());
        let (Some(u), Some(v)) = (tail, head) else {
            return Err(Error::ShapeMismatch(format!("edge {e} is not an oriented vertex pair")));
        };
        if col.iter().filter(|c| !c.is_zero()).count() != 2 {
            return Err(Error::ShapeMismatch(format!("edge {e} is not an oriented vertex pair")));
        }
        m[(u, u)] += 1.0;
        m[(v, v)] += 1.0;
        m[(u, v)] -= phase;
        m[(v, u)] -= phase.conj();
    }
    Ok(m)
}

/// Estimates `lim_{t→0} det Δ(t) / t²` by Richardson extrapolation on the
/// `t²` error term, using the decreasing sequence `t_values`.
pub fn laplacian_length_limit(g: &ChainComplex, t_values: &[f64]) -> Result<LimitEstimate> {
    require_connected_graph(g)?;
    if t_values.len() < 2 {
        return Err(Error::EmptyInput("need at least two t values".into()));
    }
    if t_values.iter().any(|&t| t.is_nan() || t <= 0.0) || t_values.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Parse("t values must be positive and decreasing".into()));
    }
    let samples: Vec<Sample> = t_values
        .iter()
        .map(|&t| {
            let d = phase_laplacian(g, t)?.determinant();
            Ok(Sample { t, re: d.re, im: d.im })
        })
        .collect::<Result<_>>()?;
    let quotient: Vec<f64> = samples.iter().map(|s| s.re / (s.t * s.t)).collect();
    let extrapolants: Vec<f64> = samples
        .windows(2)
        .zip(quotient.windows(2))
        .map(|(s, q)| {
            let (a, b) = (s[0].t * s[0].t, s[1].t * s[1].t);
            (a * q[1] - b * q[0]) / (a - b)
        })
        .collect();
    let k = extrapolants.len();
    let estimate = extrapolants[k - 1];
    let error = if k >= 2 {
        (extrapolants[k - 1] - extrapolants[k - 2]).abs()
    } else {
        (quotient[1] - quotient[0]).abs()
    };
    let imaginary_residual = samples.iter().map(|s| s.im.abs()).fold(0.0, f64::max);
    Ok(LimitEstimate {
        estimate,
        error,
        imaginary_residual,
        samples,
    })
}
