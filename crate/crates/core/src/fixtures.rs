//! Small complexes used throughout the tests and the CLI examples.

use num_bigint::BigInt;

use crate::complex::ChainComplex;
use crate::linalg::IntMatrix;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Cycle graph on `n >= 2` vertices with edges `v_k -> v_{k+1 mod n}`, all
/// oriented the same way around the cycle.
pub fn cycle_graph(n: usize) -> ChainComplex {
    assert!(n >= 2, "a cycle graph needs at least two vertices");
    let vertices: Vec<String> = (0..n).map(|k| format!("v{k}")).collect();
    let edges: Vec<String> = (0..n).map(|k| format!("v{k}v{}", (k + 1) % n)).collect();
    let d1 = IntMatrix::from_fn(n, n, |r, c| {
        if r == c {
            BigInt::from(-1)
        } else if r == (c + 1) % n {
            BigInt::from(1)
        } else {
            BigInt::from(0)
        }
    });
    ChainComplex::new(vec![vertices, edges], vec![d1], true).expect("well-formed")
}

/// The triangle graph with edges `ab`, `bc`, `ca` oriented around the cycle.
pub fn triangle() -> ChainComplex {
    let d1 = IntMatrix::from_rows(&[[-1, 0, 1], [1, -1, 0], [0, 1, -1]]);
    ChainComplex::new(
        vec![labels(&["a", "b", "c"]), labels(&["ab", "bc", "ca"])],
        vec![d1],
        true,
    )
    .expect("well-formed")
}

/// The triangle graph with a 2-cell glued along `ab + bc + ca`.
pub fn disc() -> ChainComplex {
    let x = triangle();
    let d2 = IntMatrix::from_rows(&[[1], [1], [1]]);
    ChainComplex::new(
        vec![x.cells(0).to_vec(), x.cells(1).to_vec(), labels(&["f"])],
        vec![x.boundary(1).into_owned(), d2],
        true,
    )
    .expect("well-formed")
}

/// One vertex, two loops `a` and `b`, and a 2-cell `f` with boundary `2a`.
pub fn doubled_loop() -> ChainComplex {
    ChainComplex::new(
        vec![labels(&["v"]), labels(&["a", "b"]), labels(&["f"])],
        vec![IntMatrix::from_rows(&[[0, 0]]), IntMatrix::from_rows(&[[2], [0]])],
        true,
    )
    .expect("well-formed")
}

/// Facets of the six-vertex real projective plane.
pub const RP2_FACETS: [[u8; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 4],
    [2, 3, 5],
    [1, 3, 4],
    [1, 3, 5],
    [2, 4, 5],
];

/// The six-vertex triangulation of the real projective plane.
pub fn rp2() -> ChainComplex {
    ChainComplex::from_simplicial(&facets(&RP2_FACETS)).expect("well-formed")
}

/// Complete graph `K_n` as a simplicial 1-complex.
pub fn complete_graph(n: usize) -> ChainComplex {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push(vec![a.to_string(), b.to_string()]);
        }
    }
    ChainComplex::from_simplicial(&edges).expect("well-formed")
}

/// Path graph on `n >= 2` vertices.
pub fn path_graph(n: usize) -> ChainComplex {
    let edges: Vec<Vec<String>> = (1..n).map(|k| vec![(k - 1).to_string(), k.to_string()]).collect();
    ChainComplex::from_simplicial(&edges).expect("well-formed")
}

/// Triangulated annulus between the outer triangle 0,1,2 and the inner
/// triangle 3,4,5.
pub fn annulus() -> ChainComplex {
    let f = [[0, 1, 3], [1, 3, 4], [1, 2, 4], [2, 4, 5], [0, 2, 5], [0, 3, 5]];
    ChainComplex::from_simplicial(&facets(&f)).expect("well-formed")
}

fn facets<const K: usize>(f: &[[u8; K]]) -> Vec<Vec<String>> {
    f.iter().map(|s| s.iter().map(|v| v.to_string()).collect()).collect()
}
