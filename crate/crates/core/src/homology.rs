//! Integral (co)homology of chain complexes and of pairs via Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::complex::{ChainComplex, Selection};
use crate::error::{ConditionError, Error, Result};
use crate::linalg::{smith_normal_form, IntMatrix, Lattice};

/// Order of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(BigInt),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }

    /// The order, with infinite groups mapped to 0.
    pub fn weight(&self) -> BigInt {
        match self {
            Order::Finite(n) => n.clone(),
            Order::Infinite => BigInt::zero(),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | ... | t_k`, all `t > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub dim: isize,
    pub rank: usize,
    #[serde(with = "crate::decimal::vec")]
    pub torsion: Vec<BigInt>,
}

impl HomologySummary {
    pub fn order(&self) -> Order {
        if self.rank > 0 {
            Order::Infinite
        } else {
            Order::Finite(self.torsion.iter().product())
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `ker(outgoing) / im(incoming)`, with the image expressed in a lattice basis
/// of the kernel before taking the Smith form.
fn homology_at(dim: isize, incoming: &IntMatrix, outgoing: &IntMatrix) -> Result<HomologySummary> {
    let cycles = Lattice::kernel_of(outgoing);
    let coords = cycles.coordinates_of_columns(incoming).ok_or_else(|| {
        Error::Internal(format!(
            "boundaries in dimension {dim} are not cycles; the complex fails ∂∂ = 0"
        ))
    })?;
    let snf = smith_normal_form(&coords, false);
    Ok(HomologySummary {
        dim,
        rank: cycles.rank() - snf.rank,
        torsion: snf.diag.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

fn check(x: &ChainComplex, dim: isize) -> Result<()> {
    x.check_dim(dim, -1)
}

/// Homology of the (by default augmented) chain complex, i.e. reduced
/// homology. Dimension -1 is allowed.
pub fn reduced_homology(x: &ChainComplex, dim: isize) -> Result<HomologySummary> {
    check(x, dim)?;
    homology_at(dim, &x.boundary(dim + 1), &x.boundary(dim))
}

/// Cohomology `ker δ_dim / im δ_{dim-1}` of the cochain complex.
pub fn cohomology(x: &ChainComplex, dim: isize) -> Result<HomologySummary> {
    check(x, dim)?;
    homology_at(dim, &x.coboundary(dim - 1), &x.coboundary(dim))
}

/// `H_dim(X, X^{i-1} ∪ Y)` for a selection `Y` of `i`-cells.
pub fn relative_homology(x: &ChainComplex, y: &Selection, dim: isize) -> Result<HomologySummary> {
    check(x, dim)?;
    reduced_homology(&x.quotient(y)?, dim)
}

/// `H^dim(X, X^{i-1} ∪ Y)` for a selection `Y` of `i`-cells.
pub fn relative_cohomology(x: &ChainComplex, y: &Selection, dim: isize) -> Result<HomologySummary> {
    check(x, dim)?;
    cohomology(&x.quotient(y)?, dim)
}

/// Reduced homology of the subcomplex `X^{i-1} ∪ Y`.
pub fn subcomplex_homology(x: &ChainComplex, y: &Selection, dim: isize) -> Result<HomologySummary> {
    reduced_homology(&x.subcomplex(y)?, dim)
}

/// Fails with a [`ConditionError`] unless `rk H̃_d = want` for every
/// `(d, want)` pair. Dimensions outside the complex have rank zero.
pub fn require_ranks(x: &ChainComplex, requirement: &'static str, dim: usize, wants: &[(isize, usize)]) -> Result<()> {
    let mut ranks = Vec::with_capacity(wants.len());
    for &(d, want) in wants {
        let got = if d < -1 || d > x.top_dim() as isize {
            0
        } else {
            reduced_homology(x, d)?.rank
        };
        ranks.push((d, want, got));
    }
    if ranks.iter().any(|(_, w, g)| w != g) {
        return Err(ConditionError {
            requirement,
            dim,
            ranks,
        }
        .into());
    }
    Ok(())
}

/// `rk H̃_{i+1} = 0`, `rk H̃_i = 1`, `rk H̃_{i-1} = 0`.
pub fn require_unicycle(x: &ChainComplex, dim: usize) -> Result<()> {
    let i = dim as isize;
    x.check_dim(i, 0)?;
    require_ranks(x, "unicycle condition", dim, &[(i + 1, 0), (i, 1), (i - 1, 0)])
}

/// `|H̃_{i-1}(X)|`, infinite mapped to 0.
pub fn order_below(x: &ChainComplex, dim: usize) -> Result<BigInt> {
    Ok(reduced_homology(x, dim as isize - 1)?.order().weight())
}

/// `|H̃^{i+1}(X)|`, infinite mapped to 0; the group is trivial above the top
/// dimension.
pub fn order_above(x: &ChainComplex, dim: usize) -> Result<BigInt> {
    if dim >= x.top_dim() {
        return Ok(BigInt::one());
    }
    Ok(cohomology(x, dim as isize + 1)?.order().weight())
}

/// Ranks of `H̃_dim` for `dim = -1..=top_dim`.
pub fn betti_numbers(x: &ChainComplex) -> Result<Vec<usize>> {
    (-1..=x.top_dim() as isize)
        .map(|d| reduced_homology(x, d).map(|h| h.rank))
        .collect()
}
