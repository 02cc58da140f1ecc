//! Cycletrees and dual cycletrees, their minimal cycle parts, and the
//! complement bijections with dual trees and trees.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::complex::{complement, Chain, ChainComplex, Selection};
use crate::error::{Error, Result};
use crate::forests::{
    enumerate_dual_trees, enumerate_trees, require_dual_tree_condition, require_tree_condition, subsets, Frame,
};
use crate::harmonic::{CuttingFrame, WindingFrame};
use crate::homology::{order_above, order_below, relative_cohomology, require_unicycle, subcomplex_homology, Order};
use crate::linalg::{cofactor_kernel_vector, rank, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cycletree,
    Dual,
}

/// A cycletree (or dual cycletree) with its cycle (or cocycle) part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycletreeSummary {
    pub kind: Kind,
    pub selection: Selection,
    pub cycle_part: Chain,
    #[serde(with = "crate::decimal")]
    pub content: BigInt,
    #[serde(with = "crate::decimal")]
    pub weight: BigInt,
    pub primitive_part: Option<Chain>,
}

impl CycletreeSummary {
    fn from_frame(kind: Kind, frame: &Frame, indices: Vec<usize>) -> Self {
        let local = cofactor_kernel_vector(&frame.coords.select_columns(&indices))
            .expect("subset has one more column than the frame has rows");
        let mut coeffs = vec![BigInt::zero(); frame.cells()];
        for (&k, v) in indices.iter().zip(local) {
            coeffs[k] = v;
        }
        let cycle_part = Chain::new(frame.dim, coeffs);
        let g = cycle_part.content();
        let primitive_part =
            (!g.is_zero()).then(|| Chain::new(frame.dim, cycle_part.coeffs.iter().map(|c| c / &g).collect()));
        CycletreeSummary {
            kind,
            selection: Selection::new(frame.dim, indices),
            cycle_part,
            content: g.clone(),
            weight: g,
            primitive_part,
        }
    }

    /// Number of cells carrying the cycle part.
    pub fn cycle_length(&self) -> usize {
        self.cycle_part.support().len()
    }
}

fn enumerate(kind: Kind, frame: &Frame, cap: u128) -> Result<Vec<CycletreeSummary>> {
    let k = frame.size() + 1;
    if k > frame.cells() {
        return Ok(Vec::new());
    }
    Ok(subsets(frame.cells(), k, cap)?
        .map(|idx| CycletreeSummary::from_frame(kind, frame, idx))
        .collect())
}

/// Every `(rk Z_{i-1} + 1)`-subset with its cycle part `C_U`.
pub fn enumerate_cycletrees(x: &ChainComplex, dim: usize, cap: u128) -> Result<Vec<CycletreeSummary>> {
    require_tree_condition(x, dim)?;
    enumerate(Kind::Cycletree, &Frame::tree(x, dim)?, cap)
}

/// Every `(rk Z^{i+1} + 1)`-subset with its cocycle part `C_{U*}`.
pub fn enumerate_dual_cycletrees(x: &ChainComplex, dim: usize, cap: u128) -> Result<Vec<CycletreeSummary>> {
    require_dual_tree_condition(x, dim)?;
    enumerate(Kind::Dual, &Frame::dual(x, dim)?, cap)
}

/// The content of a cycle part against the order of the group that should
/// equal it, `H̃_{i-1}(U)` or `H^{i+1}(X, Ū*)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCheck {
    pub selection: Selection,
    #[serde(with = "crate::decimal")]
    pub content: BigInt,
    pub order: Order,
    pub agrees: bool,
}

pub fn cycle_part_weight_check(x: &ChainComplex, u: &CycletreeSummary) -> Result<WeightCheck> {
    let i = u.selection.dim as isize;
    let order = match u.kind {
        Kind::Cycletree => subcomplex_homology(x, &u.selection, i - 1)?.order(),
        Kind::Dual if i + 1 > x.top_dim() as isize => Order::Finite(BigInt::from(1)),
        Kind::Dual => relative_cohomology(x, &complement(x, &u.selection)?, i + 1)?.order(),
    };
    Ok(WeightCheck {
        selection: u.selection.clone(),
        content: u.content.clone(),
        agrees: order.weight() == u.content,
        order,
    })
}

/// Whether the support columns of `m` form a circuit: dependent, with every
/// proper subset independent.
fn is_circuit(m: &IntMatrix, support: &[usize]) -> bool {
    let s = support.len();
    if rank(&m.select_columns(support)) + 1 != s {
        return false;
    }
    (0..s).all(|k| {
        let rest: Vec<usize> = support
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &c)| c)
            .collect();
        rank(&m.select_columns(&rest)) == s - 1
    })
}

fn check_minimal_input(x: &ChainComplex, dim: usize, z: &Chain) -> Result<()> {
    if z.dim != dim {
        return Err(Error::ShapeMismatch(format!(
            "expected a {dim}-chain, got a {}-chain",
            z.dim
        )));
    }
    x.check_chain(z)?;
    if z.is_zero() {
        return Err(Error::EmptyInput("minimality is undefined for the zero chain".into()));
    }
    Ok(())
}

/// True iff no nonzero cycle has support strictly inside `supp(z)`.
pub fn is_minimal_cycle(x: &ChainComplex, dim: usize, z: &Chain) -> Result<bool> {
    check_minimal_input(x, dim, z)?;
    if !z.is_cycle(x) {
        return Err(Error::NotACycle { dim });
    }
    Ok(is_circuit(&x.boundary(dim as isize), &z.support()))
}

/// True iff no nonzero cocycle has support strictly inside `supp(z)`.
pub fn is_minimal_cocycle(x: &ChainComplex, dim: usize, z: &Chain) -> Result<bool> {
    check_minimal_input(x, dim, z)?;
    if !z.is_cocycle(x) {
        return Err(Error::NotACocycle { dim });
    }
    Ok(is_circuit(&x.coboundary(dim as isize), &z.support()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub target_minimal: bool,
    pub parts_minimal: Vec<bool>,
    pub sums_to_target: bool,
    pub ok: bool,
}

/// Verifies that `z` is either itself minimal, or the sum of the supplied
/// minimal cycles.
pub fn verify_minimal_decomposition(
    x: &ChainComplex,
    dim: usize,
    z: &Chain,
    parts: &[Chain],
) -> Result<DecompositionReport> {
    let target_minimal = is_minimal_cycle(x, dim, z)?;
    let parts_minimal = parts
        .iter()
        .map(|p| is_minimal_cycle(x, dim, p))
        .collect::<Result<Vec<_>>>()?;
    let sum = parts.iter().fold(Chain::zeros(dim, z.len()), |acc, p| acc.plus(p));
    let sums_to_target = !parts.is_empty() && sum == *z;
    let ok = if parts.is_empty() {
        target_minimal
    } else {
        sums_to_target && parts_minimal.iter().all(|&m| m)
    };
    Ok(DecompositionReport {
        target_minimal,
        parts_minimal,
        sums_to_target,
        ok,
    })
}

/// Outcome of checking both complement bijections.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub cycletrees: usize,
    pub dual_trees: usize,
    pub dual_cycletrees: usize,
    pub trees: usize,
    /// Objects checked with nonzero winding (resp. cutting) number.
    pub nonzero_pairs: usize,
    pub failures: Vec<String>,
    pub ok: bool,
}

/// Checks that `U ↦ Ū` sends cycletrees onto dual trees with
/// `|w(C_U)| = wt(Ū) |H̃_{i-1}(X)|`, and `U* ↦ Ū*` sends dual cycletrees onto
/// trees with `|c(C_{U*})| = wt(Ū*) |H̃^{i+1}(X)|`, including zero iff zero.
pub fn complement_bijection_check(x: &ChainComplex, dim: usize, cap: u128) -> Result<BijectionReport> {
    require_unicycle(x, dim)?;
    let h_below = order_below(x, dim)?;
    let h_above = order_above(x, dim)?;

    let mut report = BijectionReport::default();
    let winding = WindingFrame::new(x, dim)?;
    let cutting = CuttingFrame::new(x, dim)?;

    let cycletrees = enumerate_cycletrees(x, dim, cap)?;
    let dual_trees = enumerate_dual_trees(x, dim, cap)?;
    let dual_cycletrees = enumerate_dual_cycletrees(x, dim, cap)?;
    let trees = enumerate_trees(x, dim, cap)?;
    report.cycletrees = cycletrees.len();
    report.dual_trees = dual_trees.len();
    report.dual_cycletrees = dual_cycletrees.len();
    report.trees = trees.len();

    let dual_weights: BTreeMap<&Selection, &BigInt> = dual_trees.iter().map(|t| (&t.selection, &t.weight)).collect();
    let tree_weights: BTreeMap<&Selection, &BigInt> = trees.iter().map(|t| (&t.selection, &t.weight)).collect();

    if cycletrees.len() != dual_trees.len() {
        report.failures.push(format!(
            "{} cycletrees but {} dual trees",
            cycletrees.len(),
            dual_trees.len()
        ));
    }
    if dual_cycletrees.len() != trees.len() {
        report.failures.push(format!(
            "{} dual cycletrees but {} trees",
            dual_cycletrees.len(),
            trees.len()
        ));
    }

    for u in &cycletrees {
        let w = winding.winding(&u.cycle_part)?;
        let bar = complement(x, &u.selection)?;
        let Some(&wt) = dual_weights.get(&bar) else {
            report.failures.push(format!(
                "complement of cycletree {:?} is not a dual tree",
                u.selection.indices()
            ));
            continue;
        };
        if w.abs() != wt * &h_below {
            report.failures.push(format!(
                "cycletree {:?}: |w| = {} but wt(Ū) |H̃_{{i-1}}| = {} * {}",
                u.selection.indices(),
                w.abs(),
                wt,
                h_below
            ));
        }
        if w.is_zero() != wt.is_zero() {
            report
                .failures
                .push(format!("cycletree {:?}: zero-iff-zero fails", u.selection.indices()));
        }
        if u.weight.is_zero() && !w.is_zero() {
            report.failures.push(format!(
                "cycletree {:?}: zero weight but nonzero winding",
                u.selection.indices()
            ));
        }
        if !w.is_zero() {
            report.nonzero_pairs += 1;
        }
    }

    for u in &dual_cycletrees {
        let c = cutting.cutting(&u.cycle_part)?;
        let bar = complement(x, &u.selection)?;
        let Some(&wt) = tree_weights.get(&bar) else {
            report.failures.push(format!(
                "complement of dual cycletree {:?} is not a tree",
                u.selection.indices()
            ));
            continue;
        };
        if c.abs() != wt * &h_above {
            report.failures.push(format!(
                "dual cycletree {:?}: |c| = {} but wt(Ū*) |H̃^{{i+1}}| = {} * {}",
                u.selection.indices(),
                c.abs(),
                wt,
                h_above
            ));
        }
        if c.is_zero() != wt.is_zero() {
            report.failures.push(format!(
                "dual cycletree {:?}: zero-iff-zero fails",
                u.selection.indices()
            ));
        }
        if !c.is_zero() {
            report.nonzero_pairs += 1;
        }
    }

    report.ok = report.failures.is_empty();
    Ok(report)
}
