//! High-dimensional spanning trees and dual spanning trees.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::complex::{complement, ChainComplex, Selection};
use crate::error::{Error, Result};
use crate::homology::{relative_homology, require_ranks, subcomplex_homology};
use crate::linalg::{det, gram_det, IntMatrix, Lattice};

/// A boundary (or coboundary) map written in a lattice basis of the space
/// that receives it.
///
/// For trees this is `[∂_i]_Z` with `Z` a basis of `Z_{i-1} = ker ∂_{i-1}`;
/// for dual trees it is `[δ_i]_Z` with `Z` a basis of `Z^{i+1} = ker δ_{i+1}`.
#[derive(Clone, Debug)]
pub struct Frame {
    pub dim: usize,
    pub basis: Lattice,
    pub coords: IntMatrix,
}

impl Frame {
    pub fn tree(x: &ChainComplex, dim: usize) -> Result<Self> {
        let i = dim as isize;
        x.check_dim(i, 0)?;
        let basis = Lattice::kernel_of(&x.boundary(i - 1));
        Self::build(dim, basis, &x.boundary(i))
    }

    pub fn dual(x: &ChainComplex, dim: usize) -> Result<Self> {
        let i = dim as isize;
        x.check_dim(i, 0)?;
        let basis = Lattice::kernel_of(&x.coboundary(i + 1));
        Self::build(dim, basis, &x.coboundary(i))
    }

    fn build(dim: usize, basis: Lattice, map: &IntMatrix) -> Result<Self> {
        let coords = basis
            .coordinates_of_columns(map)
            .ok_or_else(|| Error::Internal(format!("image of dimension {dim} is not inside the kernel lattice")))?;
        Ok(Frame { dim, basis, coords })
    }

    /// Size of a (dual) tree: the rank of the target lattice.
    pub fn size(&self) -> usize {
        self.coords.rows()
    }

    pub fn cells(&self) -> usize {
        self.coords.cols()
    }

    /// `|det|` of the square minor on the selected columns.
    pub fn minor_weight(&self, indices: &[usize]) -> BigInt {
        det(&self.coords.select_columns(indices))
            .expect("selection size equals frame size")
            .abs()
    }
}

/// Weighted tree or dual tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeSummary {
    pub selection: Selection,
    #[serde(with = "crate::decimal")]
    pub weight: BigInt,
}

/// Every `k`-subset of `0..n`, failing up front when there are more than `cap`.
pub fn subsets(n: usize, k: usize, cap: u128) -> Result<impl Iterator<Item = Vec<usize>>> {
    let needed = binomial(BigInt::from(n), BigInt::from(k))
        .to_u128()
        .unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(itertools::Itertools::combinations(0..n, k))
}

pub(crate) fn require_tree_condition(x: &ChainComplex, dim: usize) -> Result<()> {
    x.check_dim(dim as isize, 0)?;
    require_ranks(x, "trees require", dim, &[(dim as isize - 1, 0)])
}

pub(crate) fn require_dual_tree_condition(x: &ChainComplex, dim: usize) -> Result<()> {
    x.check_dim(dim as isize, 0)?;
    require_ranks(x, "dual trees require", dim, &[(dim as isize + 1, 0)])
}

fn enumerate(frame: &Frame, cap: u128) -> Result<Vec<TreeSummary>> {
    Ok(subsets(frame.cells(), frame.size(), cap)?
        .map(|idx| TreeSummary {
            weight: frame.minor_weight(&idx),
            selection: Selection::new(frame.dim, idx),
        })
        .collect())
}

/// All `rk Z_{i-1}`-subsets of `i`-cells with weight `|det [∂_i|_I]_Z|`;
/// zero-weight subsets are kept.
pub fn enumerate_trees(x: &ChainComplex, dim: usize, cap: u128) -> Result<Vec<TreeSummary>> {
    require_tree_condition(x, dim)?;
    enumerate(&Frame::tree(x, dim)?, cap)
}

/// `k_i = det([∂_i]_Z [∂_i]_Zᵗ)`.
pub fn tree_number(x: &ChainComplex, dim: usize) -> Result<BigInt> {
    require_tree_condition(x, dim)?;
    Ok(gram_det(&Frame::tree(x, dim)?.coords))
}

/// All `rk Z^{i+1}`-subsets of `i`-cells with weight `|det [δ_i|_I]_Z|`.
pub fn enumerate_dual_trees(x: &ChainComplex, dim: usize, cap: u128) -> Result<Vec<TreeSummary>> {
    require_dual_tree_condition(x, dim)?;
    enumerate(&Frame::dual(x, dim)?, cap)
}

/// `k^i = det([δ_i]_Z [δ_i]_Zᵗ)`.
pub fn dual_tree_number(x: &ChainComplex, dim: usize) -> Result<BigInt> {
    require_dual_tree_condition(x, dim)?;
    Ok(gram_det(&Frame::dual(x, dim)?.coords))
}

/// `Σ wt²` over a listing.
pub fn sum_of_squared_weights(trees: &[TreeSummary]) -> BigInt {
    trees.iter().map(|t| &t.weight * &t.weight).sum()
}

/// `|H̃_{i-1}(T)|` computed by Smith form, infinite mapped to 0.
pub fn tree_homology_weight(x: &ChainComplex, t: &Selection) -> Result<BigInt> {
    Ok(subcomplex_homology(x, t, t.dim as isize - 1)?.order().weight())
}

/// `|H_i(X, T̄*)|` computed by Smith form, infinite mapped to 0.
pub fn dual_tree_homology_weight(x: &ChainComplex, t: &Selection) -> Result<BigInt> {
    let rest = complement(x, t)?;
    Ok(relative_homology(x, &rest, t.dim as isize)?.order().weight())
}

/// Selections whose determinant weight disagrees with the homology order.
pub fn weight_mismatches(
    x: &ChainComplex,
    trees: &[TreeSummary],
    dual: bool,
) -> Result<Vec<(Selection, BigInt, BigInt)>> {
    let mut bad = Vec::new();
    for t in trees {
        let h = if dual {
            dual_tree_homology_weight(x, &t.selection)?
        } else {
            tree_homology_weight(x, &t.selection)?
        };
        if h != t.weight {
            bad.push((t.selection.clone(), t.weight.clone(), h));
        }
    }
    Ok(bad)
}

/// Nonzero-weight entries only.
pub fn nonzero(trees: &[TreeSummary]) -> impl Iterator<Item = &TreeSummary> {
    trees.iter().filter(|t| !t.weight.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, DEFAULT_CAP};
    use num_traits::One;

    fn weights(trees: &[TreeSummary]) -> Vec<i64> {
        trees.iter().map(|t| i64::try_from(&t.weight).unwrap()).collect()
    }

    #[test]
    fn triangle_trees() {
        let x = fixtures::triangle();
        let t = enumerate_trees(&x, 1, DEFAULT_CAP).unwrap();
        assert_eq!(weights(&t), vec![1, 1, 1]);
        assert_eq!(tree_number(&x, 1).unwrap(), BigInt::from(3));
        let d = enumerate_dual_trees(&x, 1, DEFAULT_CAP).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d[0].selection.is_empty());
        assert!(d[0].weight.is_one());
        assert!(dual_tree_number(&x, 1).unwrap().is_one());
    }

    #[test]
    fn complete_graph_k4() {
        let x = fixtures::complete_graph(4);
        let t = enumerate_trees(&x, 1, DEFAULT_CAP).unwrap();
        assert_eq!(t.len(), 20);
        assert_eq!(nonzero(&t).count(), 16);
        assert!(nonzero(&t).all(|t| t.weight.is_one()));
        assert_eq!(tree_number(&x, 1).unwrap(), BigInt::from(16));
        assert!(weight_mismatches(&x, &t, false).unwrap().is_empty());
    }

    #[test]
    fn cycle_graph_tree_number_is_n() {
        for n in 2..8 {
            assert_eq!(tree_number(&fixtures::cycle_graph(n), 1).unwrap(), BigInt::from(n));
        }
    }

    #[test]
    fn doubled_loop_trees() {
        let x = fixtures::doubled_loop();
        let t = enumerate_trees(&x, 1, DEFAULT_CAP).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].selection.is_empty());
        assert!(tree_number(&x, 1).unwrap().is_one());
        let d = enumerate_dual_trees(&x, 1, DEFAULT_CAP).unwrap();
        assert_eq!(
            d.iter().map(|t| t.selection.indices().to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );
        assert_eq!(weights(&d), vec![2, 0]);
        assert_eq!(dual_tree_number(&x, 1).unwrap(), BigInt::from(4));
        assert!(weight_mismatches(&x, &d, true).unwrap().is_empty());
    }

    #[test]
    fn disc_dual_trees() {
        let x = fixtures::disc();
        let d = enumerate_dual_trees(&x, 1, DEFAULT_CAP).unwrap();
        assert_eq!(weights(&d), vec![1, 1, 1]);
        assert_eq!(dual_tree_number(&x, 1).unwrap(), BigInt::from(3));
        assert!(weight_mismatches(&x, &d, true).unwrap().is_empty());
    }

    #[test]
    fn rp2_has_weight_two_tree() {
        let x = fixtures::rp2();
        let t = enumerate_trees(&x, 2, DEFAULT_CAP).unwrap();
        // all ten triangles form the only 2-tree
        assert_eq!(t.len(), 1);
        assert_eq!(weights(&t), vec![2]);
        assert_eq!(tree_number(&x, 2).unwrap(), BigInt::from(4));
        assert!(weight_mismatches(&x, &t, false).unwrap().is_empty());
        // 1-trees of RP² are the 6-vertex spanning trees of K6
        assert_eq!(tree_number(&x, 1).unwrap(), BigInt::from(6i64.pow(4)));
    }

    #[test]
    fn preconditions_and_cap() {
        let two_points = ChainComplex::new(
            vec![vec!["p".into(), "q".into()], vec![]],
            vec![IntMatrix::zeros(2, 0)],
            true,
        )
        .unwrap();
        assert!(matches!(tree_number(&two_points, 1), Err(Error::Condition(_))));
        assert!(matches!(
            dual_tree_number(&fixtures::triangle(), 0),
            Err(Error::Condition(_))
        ));
        let k6 = fixtures::complete_graph(6);
        assert!(matches!(
            enumerate_trees(&k6, 1, 100),
            Err(Error::CapExceeded { needed: 3003, cap: 100 })
        ));
    }

    #[test]
    fn vertex_trees_are_single_vertices() {
        let x = fixtures::triangle();
        let t = enumerate_trees(&x, 0, DEFAULT_CAP).unwrap();
        assert_eq!(weights(&t), vec![1, 1, 1]);
        assert_eq!(tree_number(&x, 0).unwrap(), BigInt::from(3));
    }
}
