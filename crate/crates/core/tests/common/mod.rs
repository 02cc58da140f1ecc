//! Deterministic random complexes for the integration suites.

#![allow(dead_code)]

use hcycle_core::homology::require_unicycle;
use hcycle_core::linalg::{kernel_basis, rank};
use hcycle_core::{ChainComplex, IntMatrix};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Instance {
    pub name: String,
    pub complex: ChainComplex,
    pub dim: usize,
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|k| format!("{prefix}{k}")).collect()
}

/// Column with entries in -2..=2 summing to zero (the augmentation kills it).
fn zero_sum_column(rng: &mut ChaCha8Rng, rows: usize) -> Vec<i64> {
    loop {
        let mut col = vec![0i64; rows];
        // mostly graph-like edges, sometimes heavier columns
        if rows >= 2 && rng.gen_bool(0.7) {
            let mut idx: Vec<usize> = (0..rows).collect();
            idx.shuffle(rng);
            let w = if rng.gen_bool(0.85) { 1 } else { 2 };
            col[idx[0]] = -w;
            col[idx[1]] = w;
        } else {
            for c in col.iter_mut().take(rows - 1) {
                *c = rng.gen_range(-2..=2);
            }
            col[rows - 1] = -col[..rows - 1].iter().sum::<i64>();
        }
        if col.iter().all(|c| c.abs() <= 2) {
            return col;
        }
    }
}

/// Random small integer combination of kernel vectors with entries in -2..=2.
fn kernel_column(rng: &mut ChaCha8Rng, kernel: &[Vec<BigInt>]) -> Option<Vec<i64>> {
    for _ in 0..50 {
        let terms = rng.gen_range(1..=2.min(kernel.len()));
        let mut col = vec![BigInt::from(0); kernel[0].len()];
        for _ in 0..terms {
            let v = kernel.choose(rng)?;
            let s: i64 = *[-2, -1, 1, 1, 2].choose(rng)?;
            for (c, x) in col.iter_mut().zip(v) {
                *c += x * s;
            }
        }
        let ints: Option<Vec<i64>> = col.iter().map(ToPrimitive::to_i64).collect();
        if let Some(ints) = ints {
            if ints.iter().any(|&c| c != 0) && ints.iter().all(|c| c.abs() <= 2) {
                return Some(ints);
            }
        }
    }
    None
}

fn matrix(rows: usize, cols: &[Vec<i64>]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = cols
        .iter()
        .map(|c| c.iter().copied().map(BigInt::from).collect())
        .collect();
    IntMatrix::from_columns(rows, &cols)
}

/// Independent columns from the kernel of `m`, `count` of them.
fn independent_kernel_columns(rng: &mut ChaCha8Rng, m: &IntMatrix, count: usize) -> Option<Vec<Vec<i64>>> {
    if count == 0 {
        return Some(Vec::new());
    }
    let kernel = kernel_basis(m);
    if kernel.is_empty() {
        return None;
    }
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for _ in 0..40 {
        if cols.len() == count {
            break;
        }
        let c = kernel_column(rng, &kernel)?;
        let mut trial = cols.clone();
        trial.push(c);
        if rank(&matrix(m.cols(), &trial)) == trial.len() {
            cols = trial;
        }
    }
    (cols.len() == count).then_some(cols)
}

fn connected_boundary(rng: &mut ChaCha8Rng, n0: usize, n1: usize) -> Option<IntMatrix> {
    for _ in 0..50 {
        let cols: Vec<Vec<i64>> = (0..n1).map(|_| zero_sum_column(rng, n0)).collect();
        let m = matrix(n0, &cols);
        if rank(&m) + 1 == n0 {
            return Some(m);
        }
    }
    None
}

fn unicycle_dim1(rng: &mut ChaCha8Rng) -> Option<ChainComplex> {
    let n0 = rng.gen_range(2..=5);
    let n1 = rng.gen_range(n0..=(n0 + 5).min(12));
    let d1 = connected_boundary(rng, n0, n1)?;
    // kill all but one independent cycle
    let d2 = independent_kernel_columns(rng, &d1, n1 - n0)?;
    let mut cells = vec![labels("v", n0), labels("e", n1)];
    let mut bs = vec![d1];
    if !d2.is_empty() {
        cells.push(labels("f", d2.len()));
        bs.push(matrix(n1, &d2));
    }
    ChainComplex::new(cells, bs, true).ok()
}

fn unicycle_dim2(rng: &mut ChaCha8Rng) -> Option<ChainComplex> {
    let n0 = rng.gen_range(2..=4);
    let n1 = rng.gen_range(n0..=n0 + 3);
    let d1 = connected_boundary(rng, n0, n1)?;
    let z1 = n1 - (n0 - 1);
    let n2 = rng.gen_range(z1 + 1..=(z1 + 4).min(12));
    // ∂_2 of rank z1, so H̃_1 = finite; then one surviving 2-cycle
    let mut d2 = independent_kernel_columns(rng, &d1, z1)?;
    let kernel = kernel_basis(&d1);
    for _ in z1..n2 {
        d2.push(kernel_column(rng, &kernel)?);
    }
    d2.shuffle(rng);
    let d2m = matrix(n1, &d2);
    if rank(&d2m) != z1 {
        return None;
    }
    let d3 = independent_kernel_columns(rng, &d2m, n2 - z1 - 1)?;
    let mut cells = vec![labels("v", n0), labels("e", n1), labels("f", n2)];
    let mut bs = vec![d1, d2m];
    if !d3.is_empty() {
        cells.push(labels("s", d3.len()));
        bs.push(matrix(n2, &d3));
    }
    ChainComplex::new(cells, bs, true).ok()
}

/// `per_dim` complexes each for `i = 1` and `i = 2`, all satisfying the
/// unicycle condition, with at most 12 `i`-cells and entries in -2..=2.
pub fn unicycle_corpus(per_dim: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for dim in [1usize, 2] {
        let mut made = 0;
        let mut attempts = 0;
        while made < per_dim {
            attempts += 1;
            assert!(attempts < 100_000, "corpus generation stalled");
            let x = if dim == 1 {
                unicycle_dim1(&mut rng)
            } else {
                unicycle_dim2(&mut rng)
            };
            let Some(x) = x else { continue };
            if !x.validate().ok || require_unicycle(&x, dim).is_err() {
                continue;
            }
            out.push(Instance {
                name: format!("random-{dim}-{made}"),
                complex: x,
                dim,
            });
            made += 1;
        }
    }
    out
}

/// Random connected simple graph with `m <= max_edges` edges.
pub fn connected_graph(rng: &mut ChaCha8Rng, max_edges: usize) -> ChainComplex {
    let n = rng.gen_range(3..=7);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
    }
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    all.shuffle(rng);
    let target = rng.gen_range(n - 1..=max_edges.min(n * (n - 1) / 2));
    for e in all {
        if edges.len() >= target {
            break;
        }
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    let facets: Vec<Vec<String>> = edges.iter().map(|&(a, b)| vec![a.to_string(), b.to_string()]).collect();
    ChainComplex::from_simplicial(&facets).expect("simple graph")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
