use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::certificate::Mode;
use super::winding::{CuttingFrame, WindingFrame};
use crate::complex::{Chain, ChainComplex, Cochain};
use crate::cycletrees::{enumerate_cycletrees, enumerate_dual_cycletrees, CycletreeSummary};
use crate::error::{Error, Result};
use crate::forests::{dual_tree_number, tree_number};
use crate::homology::require_unicycle;
use crate::linalg::{dot, Lattice};

/// Primitive integer generator of `ker Δ_i`, first nonzero entry positive.
pub fn harmonic_generator(x: &ChainComplex, dim: usize) -> Result<Vec<BigInt>> {
    require_unicycle(x, dim)?;
    let kernel = Lattice::kernel_of(&x.laplacian(dim));
    if kernel.rank() != 1 {
        return Err(Error::Internal(format!(
            "harmonic space has dimension {} under the unicycle condition",
            kernel.rank()
        )));
    }
    Ok(kernel.vector(0).to_vec())
}

pub(crate) fn cycle_from_cycletrees(
    frame: &WindingFrame,
    cycletrees: &[CycletreeSummary],
    len: usize,
) -> Result<Chain> {
    let mut lambda = Chain::zeros(frame.dim, len);
    for u in cycletrees.iter().filter(|u| !u.weight.is_zero()) {
        let w = frame.winding(&u.cycle_part)?;
        lambda = lambda.plus(&u.cycle_part.scaled(&w));
    }
    if lambda.is_zero() {
        return Err(Error::Internal("standard harmonic cycle vanished".into()));
    }
    Ok(lambda)
}

pub(crate) fn cocycle_from_dual_cycletrees(
    frame: &CuttingFrame,
    dual: &[CycletreeSummary],
    len: usize,
) -> Result<Cochain> {
    let mut lambda = Chain::zeros(frame.dim, len);
    for u in dual.iter().filter(|u| !u.weight.is_zero()) {
        let c = frame.cutting(&u.cycle_part)?;
        lambda = lambda.plus(&u.cycle_part.scaled(&c));
    }
    if lambda.is_zero() {
        return Err(Error::Internal("standard harmonic cocycle vanished".into()));
    }
    Ok(lambda)
}

/// `(value(v) k / (v ∘ h)) h` for the first basis vector with nonzero value.
fn scale_generator(
    dim: usize,
    h: &[BigInt],
    basis: &Lattice,
    k: &BigInt,
    value: impl Fn(&Chain) -> Result<BigInt>,
) -> Result<Chain> {
    for v in basis.vectors() {
        let v = Chain::new(dim, v);
        let val = value(&v)?;
        if val.is_zero() {
            continue;
        }
        let num = val * k;
        let den = dot(&v.coeffs, h);
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "harmonic representative is not integral: {num}/{den} times the generator"
            )));
        }
        return Ok(Chain::new(dim, h.to_vec()).scaled(&q));
    }
    Err(Error::Internal("every basis vector has zero winding".into()))
}

pub(crate) fn cycle_fast(x: &ChainComplex, frame: &WindingFrame, h: &[BigInt]) -> Result<Chain> {
    let k = tree_number(x, frame.dim)?;
    scale_generator(frame.dim, h, frame.cycles(), &k, |z| frame.winding(z))
}

pub(crate) fn cocycle_fast(x: &ChainComplex, frame: &CuttingFrame, h: &[BigInt]) -> Result<Cochain> {
    let k = dual_tree_number(x, frame.dim)?;
    scale_generator(frame.dim, h, frame.cocycles(), &k, |z| frame.cutting(z))
}

/// `λ = Σ_U w(C_U) C_U` over all cycletrees.
pub fn standard_harmonic_cycle_bruteforce(x: &ChainComplex, dim: usize, cap: u128) -> Result<Chain> {
    let frame = WindingFrame::new(x, dim)?;
    let cycletrees = enumerate_cycletrees(x, dim, cap)?;
    cycle_from_cycletrees(&frame, &cycletrees, x.cell_count(dim as isize))
}

/// `λ` from the kernel of `Δ_i`, scaled by `z ∘ λ = w(z) k_i`.
pub fn standard_harmonic_cycle_fast(x: &ChainComplex, dim: usize) -> Result<Chain> {
    let h = harmonic_generator(x, dim)?;
    cycle_fast(x, &WindingFrame::new(x, dim)?, &h)
}

/// `λ* = Σ_{U*} c(C_{U*}) C_{U*}` over all dual cycletrees.
pub fn standard_harmonic_cocycle_bruteforce(x: &ChainComplex, dim: usize, cap: u128) -> Result<Cochain> {
    let frame = CuttingFrame::new(x, dim)?;
    let dual = enumerate_dual_cycletrees(x, dim, cap)?;
    cocycle_from_dual_cycletrees(&frame, &dual, x.cell_count(dim as isize))
}

/// `λ*` from the kernel of `Δ_i`, scaled by `λ* ∘ x = c(x) k^i`.
pub fn standard_harmonic_cocycle_fast(x: &ChainComplex, dim: usize) -> Result<Cochain> {
    let h = harmonic_generator(x, dim)?;
    cocycle_fast(x, &CuttingFrame::new(x, dim)?, &h)
}

fn by_mode(mode: Mode, brute: impl FnOnce() -> Result<Chain>, fast: impl FnOnce() -> Result<Chain>) -> Result<Chain> {
    match mode {
        Mode::Brute => brute(),
        Mode::Fast => fast(),
        Mode::Both => {
            let (b, f) = (brute()?, fast()?);
            if b != f {
                return Err(Error::Internal(format!(
                    "routes disagree: enumeration gives {:?}, kernel gives {:?}",
                    b.coeffs, f.coeffs
                )));
            }
            Ok(f)
        }
    }
}

pub fn standard_harmonic_cycle(x: &ChainComplex, dim: usize, mode: Mode, cap: u128) -> Result<Chain> {
    by_mode(
        mode,
        || standard_harmonic_cycle_bruteforce(x, dim, cap),
        || standard_harmonic_cycle_fast(x, dim),
    )
}

pub fn standard_harmonic_cocycle(x: &ChainComplex, dim: usize, mode: Mode, cap: u128) -> Result<Cochain> {
    by_mode(
        mode,
        || standard_harmonic_cocycle_bruteforce(x, dim, cap),
        || standard_harmonic_cocycle_fast(x, dim),
    )
}

fn check_len(x: &ChainComplex, dim: usize, z: &Chain) -> Result<()> {
    if z.dim != dim {
        return Err(Error::ShapeMismatch(format!(
            "expected a {dim}-chain, got a {}-chain",
            z.dim
        )));
    }
    x.check_chain(z)
}

/// `z ∘ λ / k_i`, defined for every chain.
pub fn rational_winding(x: &ChainComplex, dim: usize, z: &Chain) -> Result<BigRational> {
    check_len(x, dim, z)?;
    let lambda = standard_harmonic_cycle_fast(x, dim)?;
    Ok(BigRational::new(z.dot(&lambda), tree_number(x, dim)?))
}

/// `z ∘ λ* / k^i`, defined for every cochain.
pub fn rational_cutting(x: &ChainComplex, dim: usize, z: &Cochain) -> Result<BigRational> {
    check_len(x, dim, z)?;
    let lambda = standard_harmonic_cocycle_fast(x, dim)?;
    Ok(BigRational::new(z.dot(&lambda), dual_tree_number(x, dim)?))
}
