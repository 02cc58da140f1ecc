use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::standard::harmonic_generator;
use crate::complex::{Chain, ChainComplex, Cochain};
use crate::cycletrees::CycletreeSummary;
use crate::error::{Error, Result};
use crate::homology::{cohomology, reduced_homology, relative_homology, require_unicycle, Order};
use crate::linalg::{det, dot, IntMatrix, Lattice};

/// Fixed data for `det([z]_Z | M)`: a lattice `Z`, the columns `M` of a
/// reduced map already written in `Z`-coordinates, and a sign.
#[derive(Clone, Debug)]
struct DetFrame {
    lattice: Lattice,
    reduced: IntMatrix,
    orientation: i8,
}

impl DetFrame {
    fn new(lattice: Lattice, image: &IntMatrix) -> Result<Self> {
        let image = Lattice::column_span(image);
        let reduced = lattice
            .coordinates_of_columns(&image.basis_columns())
            .ok_or_else(|| Error::Internal("image lattice is not inside the kernel".into()))?;
        if reduced.cols() + 1 != lattice.rank() {
            return Err(Error::Internal(format!(
                "frame is not square: kernel rank {}, image rank {}",
                lattice.rank(),
                reduced.cols()
            )));
        }
        Ok(DetFrame {
            lattice,
            reduced,
            orientation: 1,
        })
    }

    fn raw(&self, coords: &[BigInt]) -> BigInt {
        let mut cols = vec![coords.to_vec()];
        cols.extend(self.reduced.columns());
        det(&IntMatrix::from_columns(self.lattice.rank(), &cols)).expect("square frame")
    }

    /// Picks the sign making the value positive exactly when the vector has
    /// positive inner product with the harmonic generator `h`.
    fn orient(&mut self, h: &[BigInt]) -> Result<()> {
        for k in 0..self.lattice.rank() {
            let v = self.lattice.vector(k);
            let mut e = vec![BigInt::zero(); self.lattice.rank()];
            e[k] = BigInt::from(1);
            let raw = self.raw(&e);
            if raw.is_zero() {
                continue;
            }
            let inner = dot(v, h);
            if inner.is_zero() {
                return Err(Error::Internal(
                    "a vector with nonzero determinant is orthogonal to the harmonic space".into(),
                ));
            }
            self.orientation = if raw.is_positive() == inner.is_positive() {
                1
            } else {
                -1
            };
            return Ok(());
        }
        Err(Error::Internal("no basis vector has nonzero determinant".into()))
    }

    fn value(&self, v: &[BigInt]) -> Option<BigInt> {
        let coords = self.lattice.coordinates(v)?;
        Some(self.raw(&coords) * BigInt::from(self.orientation))
    }
}

/// Everything needed to evaluate `w(z) = ε det([z]_Z | [∂̄_{i+1}]_Z)`.
///
/// `Z` is the Hermite basis of `Z_i`, `∂̄_{i+1}` the Hermite basis of the
/// image lattice of `∂_{i+1}`, and `ε = ±1` is chosen so that `w(z)` has the
/// sign of `z ∘ h` for the primitive harmonic generator `h`.
#[derive(Clone, Debug)]
pub struct WindingFrame {
    pub dim: usize,
    frame: DetFrame,
}

impl WindingFrame {
    pub fn new(x: &ChainComplex, dim: usize) -> Result<Self> {
        require_unicycle(x, dim)?;
        let i = dim as isize;
        let mut frame = DetFrame::new(Lattice::kernel_of(&x.boundary(i)), &x.boundary(i + 1))?;
        frame.orient(&harmonic_generator(x, dim)?)?;
        Ok(WindingFrame { dim, frame })
    }

    pub fn cycles(&self) -> &Lattice {
        &self.frame.lattice
    }

    /// `[∂̄_{i+1}]_Z`.
    pub fn reduced(&self) -> &IntMatrix {
        &self.frame.reduced
    }

    pub fn orientation(&self) -> i8 {
        self.frame.orientation
    }

    pub fn winding(&self, z: &Chain) -> Result<BigInt> {
        if z.dim != self.dim || z.len() != self.frame.lattice.ambient_dim() {
            return Err(Error::ShapeMismatch(format!(
                "expected a {}-chain with {} coefficients",
                self.dim,
                self.frame.lattice.ambient_dim()
            )));
        }
        self.frame.value(&z.coeffs).ok_or(Error::NotACycle { dim: self.dim })
    }
}

/// Everything needed to evaluate `c(z) = ε* det([z]_Z | [δ̄_{i-1}]_Z)`, with
/// `Z` a basis of `Z^i` and `δ̄_{i-1}` a basis of the image lattice of
/// `δ_{i-1}`.
#[derive(Clone, Debug)]
pub struct CuttingFrame {
    pub dim: usize,
    frame: DetFrame,
}

impl CuttingFrame {
    pub fn new(x: &ChainComplex, dim: usize) -> Result<Self> {
        require_unicycle(x, dim)?;
        let i = dim as isize;
        let mut frame = DetFrame::new(Lattice::kernel_of(&x.coboundary(i)), &x.coboundary(i - 1))?;
        frame.orient(&harmonic_generator(x, dim)?)?;
        Ok(CuttingFrame { dim, frame })
    }

    pub fn cocycles(&self) -> &Lattice {
        &self.frame.lattice
    }

    /// `[δ̄_{i-1}]_Z`.
    pub fn reduced(&self) -> &IntMatrix {
        &self.frame.reduced
    }

    pub fn orientation(&self) -> i8 {
        self.frame.orientation
    }

    pub fn cutting(&self, z: &Cochain) -> Result<BigInt> {
        if z.dim != self.dim || z.len() != self.frame.lattice.ambient_dim() {
            return Err(Error::ShapeMismatch(format!(
                "expected a {}-cochain with {} coefficients",
                self.dim,
                self.frame.lattice.ambient_dim()
            )));
        }
        self.frame.value(&z.coeffs).ok_or(Error::NotACocycle { dim: self.dim })
    }
}

pub fn winding_number(x: &ChainComplex, dim: usize, z: &Chain) -> Result<BigInt> {
    x.check_chain(z)?;
    WindingFrame::new(x, dim)?.winding(z)
}

pub fn cutting_number(x: &ChainComplex, dim: usize, z: &Cochain) -> Result<BigInt> {
    x.check_chain(z)?;
    CuttingFrame::new(x, dim)?.cutting(z)
}

/// An integer compared against the order of a group (infinite read as 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyCheck {
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
    pub order: Order,
    pub agrees: bool,
}

impl HomologyCheck {
    fn new(value: BigInt, order: Order) -> Self {
        let agrees = value == order.weight();
        HomologyCheck { value, order, agrees }
    }
}

/// `|w(z)|` against `|H̃_i(X ⊕ e)|` for a virtual `(i+1)`-cell `e` with
/// boundary `z`.
pub fn winding_homology_check(x: &ChainComplex, dim: usize, z: &Chain) -> Result<HomologyCheck> {
    let w = winding_number(x, dim, z)?;
    let extended = x.adjoin_virtual_cell(dim + 1, z)?;
    let order = reduced_homology(&extended, dim as isize)?.order();
    Ok(HomologyCheck::new(w.abs(), order))
}

/// `|c(z)|` against `|H̃^i(X ⊕ e)|` for a virtual `(i-1)`-cell `e` with
/// coboundary `z`.
pub fn cutting_homology_check(x: &ChainComplex, dim: usize, z: &Cochain) -> Result<HomologyCheck> {
    if dim == 0 {
        return Err(Error::DimensionOutOfRange {
            dim: 0,
            min: 1,
            max: x.top_dim() as isize,
        });
    }
    let c = cutting_number(x, dim, z)?;
    let extended = x.adjoin_virtual_cocell(dim - 1, z)?;
    let order = cohomology(&extended, dim as isize)?.order();
    Ok(HomologyCheck::new(c.abs(), order))
}

/// `wt(U) |w(Ĉ_U)|` against `|H_i(X, U)| |H̃_{i-1}(X)|` for a cycletree `U`.
pub fn cycletree_winding_identity(
    x: &ChainComplex,
    frame: &WindingFrame,
    u: &CycletreeSummary,
) -> Result<HomologyCheck> {
    let i = frame.dim as isize;
    let lhs = frame.winding(&u.cycle_part)?.abs();
    let rel = relative_homology(x, &u.selection, i)?.order();
    let below = reduced_homology(x, i - 1)?.order();
    let order = match (rel, below) {
        (Order::Finite(a), Order::Finite(b)) => Order::Finite(a * b),
        _ => Order::Infinite,
    };
    Ok(HomologyCheck::new(lhs, order))
}
