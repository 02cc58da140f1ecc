//! Finite chain complexes given by integer boundary matrices.
//!
//! Dimensions run over `0..=top_dim`; dimension `-1` is the augmentation
//! (`C_{-1} = Z`, `∂_0` the all-ones row) when the complex is augmented.
//! Boundary matrices outside the stored range are zero maps of the
//! appropriate shape.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{content, dot, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    cells: Vec<Vec<String>>,
    // boundaries[j] is ∂_j : C_j -> C_{j-1}; boundaries[0] has one row when augmented
    boundaries: Vec<IntMatrix>,
}

/// First entry of a nonzero composite `∂_{dim-1} ∂_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationFailure {
    pub dim: usize,
    pub row: usize,
    pub col: usize,
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failure: Option<ValidationFailure>,
}

impl ChainComplex {
    /// Builds a complex from cell labels and the boundary matrices
    /// `∂_1, ..., ∂_d`. With `augmented`, `∂_0` is the all-ones row.
    pub fn new(cells: Vec<Vec<String>>, boundaries: Vec<IntMatrix>, augmented: bool) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptyInput("a complex needs at least dimension 0".into()));
        }
        let n0 = cells[0].len();
        let d0 = if augmented {
            IntMatrix::from_fn(1, n0, |_, _| BigInt::one())
        } else {
            IntMatrix::zeros(0, n0)
        };
        let mut all = Vec::with_capacity(cells.len());
        all.push(d0);
        all.extend(boundaries);
        Self::from_parts(cells, all)
    }

    /// Builds a complex from cell labels and every boundary `∂_0, ..., ∂_d`,
    /// where `∂_0` has at most one row.
    pub fn from_parts(cells: Vec<Vec<String>>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptyInput("a complex needs at least dimension 0".into()));
        }
        if boundaries.len() != cells.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} cell dimensions but {} boundary matrices",
                cells.len(),
                boundaries.len()
            )));
        }
        if boundaries[0].rows() > 1 {
            return Err(Error::ShapeMismatch("augmentation must have at most one row".into()));
        }
        for (j, b) in boundaries.iter().enumerate() {
            let rows = if j == 0 { b.rows() } else { cells[j - 1].len() };
            if b.shape() != (rows, cells[j].len()) {
                return Err(Error::ShapeMismatch(format!(
                    "∂_{j} is {}x{} but must be {}x{}",
                    b.rows(),
                    b.cols(),
                    rows,
                    cells[j].len()
                )));
            }
        }
        Ok(ChainComplex { cells, boundaries })
    }

    /// Builds the simplicial chain complex generated by `facets`.
    ///
    /// Vertices are ordered numerically when every name is an integer and
    /// lexicographically otherwise; faces of each dimension are sorted
    /// lexicographically by their vertex tuples.
    pub fn from_simplicial<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        if facets.is_empty() || facets.iter().any(Vec::is_empty) {
            return Err(Error::EmptyInput("simplicial complex needs nonempty facets".into()));
        }
        let names: BTreeSet<&str> = facets.iter().flatten().map(AsRef::as_ref).collect();
        let mut names: Vec<&str> = names.into_iter().collect();
        if names.iter().all(|n| n.parse::<i64>().is_ok()) {
            names.sort_by_key(|n| n.parse::<i64>().unwrap());
        }
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();

        let mut faces: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for facet in facets {
            let mut verts: Vec<usize> = facet.iter().map(|v| index[v.as_ref()]).collect();
            verts.sort_unstable();
            if verts.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse("facet repeats a vertex".into()));
            }
            let k = verts.len();
            if faces.len() < k {
                faces.resize_with(k, BTreeSet::new);
            }
            for mask in 1u64..(1 << k) {
                let face: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| verts[b]).collect();
                faces[face.len() - 1].insert(face);
            }
        }
        let faces: Vec<Vec<Vec<usize>>> = faces.into_iter().map(|s| s.into_iter().collect()).collect();
        let short = names.iter().all(|n| n.chars().count() == 1);
        let label = |face: &[usize]| -> String {
            let parts: Vec<&str> = face.iter().map(|&v| names[v]).collect();
            parts.join(if short { "" } else { "-" })
        };
        let cells: Vec<Vec<String>> = faces.iter().map(|fs| fs.iter().map(|f| label(f)).collect()).collect();

        let mut boundaries = Vec::new();
        for k in 1..faces.len() {
            let pos: BTreeMap<&[usize], usize> = faces[k - 1]
                .iter()
                .enumerate()
                .map(|(i, f)| (f.as_slice(), i))
                .collect();
            let mut m = IntMatrix::zeros(faces[k - 1].len(), faces[k].len());
            for (col, simplex) in faces[k].iter().enumerate() {
                for omit in 0..simplex.len() {
                    let face: Vec<usize> = simplex
                        .iter()
                        .enumerate()
                        .filter(|(p, _)| *p != omit)
                        .map(|(_, v)| *v)
                        .collect();
                    let sign = if omit % 2 == 0 { 1 } else { -1 };
                    m.set(pos[face.as_slice()], col, BigInt::from(sign));
                }
            }
            boundaries.push(m);
        }
        Self::new(cells, boundaries, true)
    }

    pub fn top_dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, dim: usize) -> &[String] {
        self.cells.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn all_cells(&self) -> &[Vec<String>] {
        &self.cells
    }

    pub fn is_augmented(&self) -> bool {
        let d0 = &self.boundaries[0];
        d0.rows() == 1 && d0.row(0).iter().all(One::is_one)
    }

    /// Number of generators of `C_dim`; dimension -1 is the augmentation.
    pub fn cell_count(&self, dim: isize) -> usize {
        match dim {
            -1 => self.boundaries[0].rows(),
            d if d >= 0 && (d as usize) < self.cells.len() => self.cells[d as usize].len(),
            _ => 0,
        }
    }

    /// `∂_dim : C_dim -> C_{dim-1}`, zero outside the stored range.
    pub fn boundary(&self, dim: isize) -> Cow<'_, IntMatrix> {
        if dim >= 0 && (dim as usize) < self.boundaries.len() {
            Cow::Borrowed(&self.boundaries[dim as usize])
        } else {
            Cow::Owned(IntMatrix::zeros(self.cell_count(dim - 1), self.cell_count(dim)))
        }
    }

    /// `δ_dim = ∂ᵗ_{dim+1} : C^dim -> C^{dim+1}`.
    pub fn coboundary(&self, dim: isize) -> IntMatrix {
        self.boundary(dim + 1).transpose()
    }

    /// Combinatorial Laplacian `∂ᵗ_i ∂_i + ∂_{i+1} ∂ᵗ_{i+1}` on `C_i`.
    pub fn laplacian(&self, dim: usize) -> IntMatrix {
        let i = dim as isize;
        let down = self.boundary(i);
        let up = self.boundary(i + 1);
        let a = down.transpose().mul(&down).expect("shapes agree");
        let b = up.mul(&up.transpose()).expect("shapes agree");
        a.add(&b).expect("shapes agree")
    }

    /// Checks `∂_{i-1} ∂_i = 0` for every `i`, including the augmentation.
    pub fn validate(&self) -> ValidationReport {
        for j in 1..self.boundaries.len() {
            let prod = self.boundaries[j - 1]
                .mul(&self.boundaries[j])
                .expect("shapes checked on construction");
            let first = prod.triples().next().map(|(r, c, v)| (r, c, v.clone()));
            if let Some((row, col, value)) = first {
                return ValidationReport {
                    ok: false,
                    failure: Some(ValidationFailure {
                        dim: j,
                        row,
                        col,
                        value,
                    }),
                };
            }
        }
        ValidationReport {
            ok: true,
            failure: None,
        }
    }

    pub(crate) fn check_dim(&self, dim: isize, min: isize) -> Result<()> {
        let max = self.top_dim() as isize;
        if dim < min || dim > max {
            return Err(Error::DimensionOutOfRange { dim, min, max });
        }
        Ok(())
    }

    fn fresh_label(&self, dim: usize) -> String {
        let taken: BTreeSet<&str> = self.cells(dim).iter().map(String::as_str).collect();
        (0..)
            .map(|k| {
                if k == 0 {
                    "virtual".to_string()
                } else {
                    format!("virtual{k}")
                }
            })
            .find(|l| !taken.contains(l.as_str()))
            .expect("unbounded label supply")
    }

    /// Adjoins a virtual `dim`-cell whose boundary is the `(dim-1)`-cycle `z`.
    pub fn adjoin_virtual_cell(&self, dim: usize, z: &Chain) -> Result<ChainComplex> {
        if dim == 0 || z.dim + 1 != dim {
            return Err(Error::ShapeMismatch(format!(
                "a virtual {dim}-cell needs a boundary chain of dimension {}",
                dim as isize - 1
            )));
        }
        self.check_chain(z)?;
        if !z.is_cycle(self) {
            return Err(Error::NotACycle { dim: z.dim });
        }
        let mut cells = self.cells.clone();
        let mut boundaries = self.boundaries.clone();
        let label = self.fresh_label(dim);
        if dim > self.top_dim() {
            cells.push(vec![label]);
            boundaries.push(IntMatrix::from_columns(z.len(), std::slice::from_ref(&z.coeffs)));
        } else {
            cells[dim].push(label);
            boundaries[dim] = boundaries[dim].push_column(&z.coeffs)?;
            if dim < self.top_dim() {
                let zero = vec![BigInt::zero(); boundaries[dim + 1].cols()];
                boundaries[dim + 1] = boundaries[dim + 1].push_row(&zero)?;
            }
        }
        Self::from_parts(cells, boundaries)
    }

    /// Adjoins a virtual `dim`-cell with zero boundary whose coboundary is the
    /// `(dim+1)`-cocycle `z`.
    pub fn adjoin_virtual_cocell(&self, dim: usize, z: &Cochain) -> Result<ChainComplex> {
        if z.dim != dim + 1 {
            return Err(Error::ShapeMismatch(format!(
                "a virtual {dim}-cell needs a coboundary cochain of dimension {}",
                dim + 1
            )));
        }
        self.check_chain(z)?;
        if !z.is_cocycle(self) {
            return Err(Error::NotACocycle { dim: z.dim });
        }
        let mut cells = self.cells.clone();
        let mut boundaries = self.boundaries.clone();
        cells[dim].push(self.fresh_label(dim));
        let zero = vec![BigInt::zero(); boundaries[dim].rows()];
        boundaries[dim] = boundaries[dim].push_column(&zero)?;
        boundaries[dim + 1] = boundaries[dim + 1].push_row(&z.coeffs)?;
        Self::from_parts(cells, boundaries)
    }

    /// The subcomplex `X^{i-1} ∪ Y` for a selection `Y` of `i`-cells.
    pub fn subcomplex(&self, y: &Selection) -> Result<ChainComplex> {
        self.check_selection(y)?;
        let i = y.dim;
        let mut cells: Vec<Vec<String>> = self.cells[..i].to_vec();
        cells.push(y.indices.iter().map(|&k| self.cells[i][k].clone()).collect());
        let mut boundaries: Vec<IntMatrix> = self.boundaries[..i].to_vec();
        boundaries.push(self.boundaries[i].select_columns(&y.indices));
        Self::from_parts(cells, boundaries)
    }

    /// The relative complex `C(X) / C(X^{i-1} ∪ Y)`.
    pub fn quotient(&self, y: &Selection) -> Result<ChainComplex> {
        self.check_selection(y)?;
        let i = y.dim;
        let rest = complement(self, y)?;
        let mut cells: Vec<Vec<String>> = vec![Vec::new(); i];
        cells.push(rest.indices.iter().map(|&k| self.cells[i][k].clone()).collect());
        cells.extend_from_slice(&self.cells[i + 1..]);
        let mut boundaries: Vec<IntMatrix> = (0..i).map(|_| IntMatrix::zeros(0, 0)).collect();
        boundaries.push(IntMatrix::zeros(0, rest.len()));
        if i < self.top_dim() {
            boundaries.push(self.boundaries[i + 1].select_rows(&rest.indices));
            boundaries.extend_from_slice(&self.boundaries[i + 2..]);
        }
        Self::from_parts(cells, boundaries)
    }

    pub(crate) fn check_selection(&self, y: &Selection) -> Result<()> {
        if y.dim > self.top_dim() {
            return Err(Error::InvalidSelection(format!(
                "dimension {} exceeds top dimension {}",
                y.dim,
                self.top_dim()
            )));
        }
        let n = self.cells[y.dim].len();
        if let Some(bad) = y.indices.iter().find(|&&k| k >= n) {
            return Err(Error::InvalidSelection(format!(
                "cell index {bad} out of range for {n} cells of dimension {}",
                y.dim
            )));
        }
        Ok(())
    }

    pub(crate) fn check_chain(&self, z: &Chain) -> Result<()> {
        let n = self.cell_count(z.dim as isize);
        if z.dim > self.top_dim() || z.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "chain of length {} in dimension {} does not match {} cells",
                z.len(),
                z.dim,
                n
            )));
        }
        Ok(())
    }
}

/// A set of `i`-cells, standing for the subcomplex `X^{i-1} ∪ Y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Selection {
    pub dim: usize,
    indices: Vec<usize>,
}

impl Selection {
    pub fn new(dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        Selection {
            dim,
            indices: set.into_iter().collect(),
        }
    }

    pub fn all(x: &ChainComplex, dim: usize) -> Self {
        Self::new(dim, 0..x.cell_count(dim as isize))
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.indices.binary_search(&k).is_ok()
    }

    pub fn labels<'a>(&self, x: &'a ChainComplex) -> Vec<&'a str> {
        self.indices.iter().map(|&k| x.cells(self.dim)[k].as_str()).collect()
    }
}

/// The complement of `y` among all cells of its dimension.
pub fn complement(x: &ChainComplex, y: &Selection) -> Result<Selection> {
    x.check_selection(y)?;
    let n = x.cell_count(y.dim as isize);
    Ok(Selection::new(y.dim, (0..n).filter(|&k| !y.contains(k))))
}

/// Integer chain (or cochain, via the standard inner product) in one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Chain {
    pub dim: usize,
    #[serde(with = "crate::decimal::vec")]
    pub coeffs: Vec<BigInt>,
}

pub type Cochain = Chain;

impl Chain {
    pub fn new(dim: usize, coeffs: Vec<BigInt>) -> Self {
        Chain { dim, coeffs }
    }

    pub fn from_i64(dim: usize, coeffs: &[i64]) -> Self {
        Chain::new(dim, coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zeros(dim: usize, len: usize) -> Self {
        Chain::new(dim, vec![BigInt::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| !self.coeffs[k].is_zero()).collect()
    }

    pub fn content(&self) -> BigInt {
        content(&self.coeffs)
    }

    /// The standard inner product, with cells as an orthonormal basis.
    pub fn dot(&self, other: &Chain) -> BigInt {
        dot(&self.coeffs, &other.coeffs)
    }

    pub fn scaled(&self, s: &BigInt) -> Chain {
        Chain::new(self.dim, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn plus(&self, other: &Chain) -> Chain {
        assert_eq!(self.len(), other.len());
        Chain::new(
            self.dim,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn is_cycle(&self, x: &ChainComplex) -> bool {
        x.boundary(self.dim as isize)
            .mul_vec(&self.coeffs)
            .is_ok_and(|v| v.iter().all(Zero::is_zero))
    }

    pub fn is_cocycle(&self, x: &ChainComplex) -> bool {
        x.coboundary(self.dim as isize)
            .mul_vec(&self.coeffs)
            .is_ok_and(|v| v.iter().all(Zero::is_zero))
    }
}

/// Boundary and coboundary matrices of `X^{i-1} ∪ Y` and of the pair
/// `(X, X^{i-1} ∪ Y)` in degree `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcomplexMaps {
    /// `∂_i` restricted to the columns of `Y`.
    pub sub_boundary: IntMatrix,
    pub sub_coboundary: IntMatrix,
    /// `∂_{i+1}` restricted to the rows outside `Y`.
    pub relative_boundary: IntMatrix,
    /// `δ_i` restricted to the columns outside `Y`.
    pub relative_coboundary: IntMatrix,
}

pub fn subcomplex_chain_maps(x: &ChainComplex, y: &Selection) -> Result<SubcomplexMaps> {
    let rest = complement(x, y)?;
    let i = y.dim as isize;
    let sub_boundary = x.boundary(i).select_columns(y.indices());
    let relative_boundary = x.boundary(i + 1).select_rows(rest.indices());
    Ok(SubcomplexMaps {
        sub_coboundary: sub_boundary.transpose(),
        relative_coboundary: relative_boundary.transpose(),
        sub_boundary,
        relative_boundary,
    })
}
