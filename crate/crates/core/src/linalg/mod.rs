//! Exact integer and rational linear algebra.

mod det;
mod lattice;
mod matrix;
mod smith;

pub use det::{cofactor_kernel_vector, content, det, dot, gram_det, rank};
pub use lattice::{hermite_rows, kernel_basis, Lattice};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithForm};

mod ratvec;
pub use ratvec::RatVector;
