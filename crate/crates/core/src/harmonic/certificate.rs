use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::standard::{
    cocycle_fast, cocycle_from_dual_cycletrees, cycle_fast, cycle_from_cycletrees, harmonic_generator,
};
use super::winding::{CuttingFrame, WindingFrame};
use crate::complex::{Chain, ChainComplex};
use crate::cycletrees::{enumerate_cycletrees, enumerate_dual_cycletrees};
use crate::error::{Error, Result};
use crate::forests::{dual_tree_number, tree_number};
use crate::homology::{order_above, order_below, require_unicycle};
use crate::linalg::{IntMatrix, Lattice};
use crate::DEFAULT_CAP;

/// Which route computes `λ` and `λ*`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Sum over all (dual) cycletrees.
    Brute,
    /// Kernel of the Laplacian, scaled by one winding (cutting) number.
    Fast,
    /// Both, required to agree exactly.
    #[default]
    Both,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Mode::Brute),
            "fast" => Ok(Mode::Fast),
            "both" => Ok(Mode::Both),
            other => Err(Error::Parse(format!(
                "unknown mode {other:?}, expected brute, fast or both"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CertificateOptions {
    pub mode: Mode,
    pub cap: u128,
    pub energy_trials: usize,
    pub seed: u64,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions {
            mode: Mode::Both,
            cap: DEFAULT_CAP,
            energy_trials: 100,
            seed: 0x5eed,
        }
    }
}

/// Spot check of `λ ∘ λ <= (λ + ∂y) ∘ (λ + ∂y)` for random integer `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnergyReport {
    pub trials: usize,
    #[serde(with = "crate::decimal")]
    pub energy: BigInt,
    /// Trials where `∂y = 0`, so equality is expected.
    pub trivial_perturbations: usize,
    /// Trials that lowered the energy, or kept it equal with `∂y ≠ 0`.
    pub violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HarmonicCertificate {
    pub dim: usize,
    pub mode: Mode,
    pub lambda: Chain,
    pub lambda_star: Chain,
    #[serde(with = "crate::decimal")]
    pub k_i: BigInt,
    #[serde(rename = "k^i", with = "crate::decimal")]
    pub k_upper_i: BigInt,
    /// `|H̃_{i-1}(X)|`.
    #[serde(with = "crate::decimal")]
    pub h_below: BigInt,
    /// `|H̃^{i+1}(X)|`.
    #[serde(with = "crate::decimal")]
    pub h_above: BigInt,
    #[serde(with = "crate::decimal::rational_map")]
    pub identity_residuals: BTreeMap<String, BigRational>,
    pub energy: EnergyReport,
    pub basis_fingerprint: String,
    pub ok: bool,
}

impl HarmonicCertificate {
    /// Names of identities with a nonzero residual.
    pub fn failures(&self) -> Vec<&str> {
        self.identity_residuals
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

fn int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn l1(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

fn fingerprint(winding: &WindingFrame, cutting: &CuttingFrame) -> String {
    fn put(out: &mut String, name: &str, m: &IntMatrix) {
        let _ = write!(out, "{name}:{}x{}:", m.rows(), m.cols());
        for r in m.to_rows() {
            let row: Vec<String> = r.iter().map(ToString::to_string).collect();
            let _ = write!(out, "[{}]", row.join(","));
        }
        out.push(';');
    }
    fn lattice(l: &Lattice) -> IntMatrix {
        IntMatrix::from_columns(l.ambient_dim(), &l.vectors()).transpose()
    }
    let mut text = String::new();
    put(&mut text, "cycles", &lattice(winding.cycles()));
    put(&mut text, "reduced_boundary", winding.reduced());
    put(&mut text, "cocycles", &lattice(cutting.cocycles()));
    put(&mut text, "reduced_coboundary", cutting.reduced());
    let _ = write!(text, "orientation:{},{}", winding.orientation(), cutting.orientation());
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn energy_check(x: &ChainComplex, dim: usize, lambda: &Chain, opts: &CertificateOptions) -> EnergyReport {
    let up = x.boundary(dim as isize + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let energy = lambda.dot(lambda);
    let mut report = EnergyReport {
        trials: opts.energy_trials,
        energy: energy.clone(),
        trivial_perturbations: 0,
        violations: 0,
    };
    for _ in 0..opts.energy_trials {
        let y: Vec<BigInt> = (0..up.cols()).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect();
        let b = Chain::new(dim, up.mul_vec(&y).expect("shapes agree"));
        let perturbed = lambda.plus(&b);
        let e = perturbed.dot(&perturbed);
        let trivial = b.is_zero();
        if trivial {
            report.trivial_perturbations += 1;
        }
        if e < energy || (e == energy) != trivial {
            report.violations += 1;
        }
    }
    report
}

/// Computes `λ`, `λ*`, `k_i`, `k^i` and the torsion orders around dimension
/// `i`, and records the exact residual of every identity relating them.
pub fn build_certificate(x: &ChainComplex, dim: usize, opts: &CertificateOptions) -> Result<HarmonicCertificate> {
    require_unicycle(x, dim)?;
    let n = x.cell_count(dim as isize);
    let winding = WindingFrame::new(x, dim)?;
    let cutting = CuttingFrame::new(x, dim)?;
    let k_i = tree_number(x, dim)?;
    let k_upper_i = dual_tree_number(x, dim)?;
    let h_below = order_below(x, dim)?;
    let h_above = order_above(x, dim)?;

    let mut residuals: BTreeMap<String, BigRational> = BTreeMap::new();
    let mut put = |name: &str, r: BigRational| {
        residuals.insert(name.to_string(), r);
    };

    let fast = if opts.mode == Mode::Brute {
        None
    } else {
        let h = harmonic_generator(x, dim)?;
        Some((cycle_fast(x, &winding, &h)?, cocycle_fast(x, &cutting, &h)?))
    };
    let brute = if opts.mode == Mode::Fast {
        None
    } else {
        let cycletrees = enumerate_cycletrees(x, dim, opts.cap)?;
        let dual = enumerate_dual_cycletrees(x, dim, opts.cap)?;
        let lambda = cycle_from_cycletrees(&winding, &cycletrees, n)?;
        let lambda_star = cocycle_from_dual_cycletrees(&cutting, &dual, n)?;
        let mut w2 = BigInt::zero();
        for u in &cycletrees {
            let w = winding.winding(&u.cycle_part)?;
            w2 += &w * &w;
        }
        let mut c2 = BigInt::zero();
        for u in &dual {
            let c = cutting.cutting(&u.cycle_part)?;
            c2 += &c * &c;
        }
        Some((lambda, lambda_star, w2, c2))
    };

    let (lambda, lambda_star) = match (&fast, &brute) {
        (Some((l, ls)), _) => (l.clone(), ls.clone()),
        (None, Some((l, ls, _, _))) => (l.clone(), ls.clone()),
        (None, None) => unreachable!("every mode computes at least one route"),
    };
    let ll = lambda.dot(&lambda);
    let ss = lambda_star.dot(&lambda_star);

    if let (Some((fl, fs)), Some((bl, bs, _, _))) = (&fast, &brute) {
        put("brute_equals_fast_cycle", int(l1(&fl.coeffs, &bl.coeffs)));
        put("brute_equals_fast_cocycle", int(l1(&fs.coeffs, &bs.coeffs)));
    }
    if let Some((_, _, w2, c2)) = &brute {
        put("cycle_norm_by_cycletrees", int(&ll - &k_i * w2));
        put("tree_number_by_cutting", int(&k_i * &h_above * &h_above - c2));
    }

    let mut inner = BigInt::zero();
    for z in winding.cycles().vectors() {
        let z = Chain::new(dim, z);
        inner += (z.dot(&lambda) - winding.winding(&z)? * &k_i).abs();
    }
    put("cycle_inner_product", int(inner));
    let mut inner = BigInt::zero();
    for c in cutting.cocycles().vectors() {
        let c = Chain::new(dim, c);
        inner += (lambda_star.dot(&c) - cutting.cutting(&c)? * &k_upper_i).abs();
    }
    put("cocycle_inner_product", int(inner));

    put("cycle_norm", int(&ll - &k_upper_i * &k_i * &h_below * &h_below));
    put("cocycle_norm", int(&ss - &k_upper_i * &k_i * &h_above * &h_above));
    let hb = int(h_below.clone());
    let ha = int(h_above.clone());
    put(
        "normalized_norm",
        int(ll.clone()) / (&hb * &hb) - int(&k_i * &k_upper_i),
    );

    // λ/h_below = s λ*/h_above with one sign s for every coordinate
    let first = lambda
        .coeffs
        .iter()
        .zip(&lambda_star.coeffs)
        .find(|(a, _)| !a.is_zero());
    let sign = match first {
        Some((a, b)) if a.is_positive() != b.is_positive() => BigInt::from(-1),
        _ => BigInt::from(1),
    };
    let coherence: BigRational = lambda
        .coeffs
        .iter()
        .zip(&lambda_star.coeffs)
        .map(|(a, b)| (int(a.clone()) / &hb - int(&sign * b) / &ha).abs())
        .sum();
    put("normalized_sign_coherence", coherence);

    let lap = x.laplacian(dim);
    let harmonic: BigInt = lap.mul_vec(&lambda.coeffs)?.iter().map(|v| v.abs()).sum();
    put("cycle_harmonic", int(harmonic));
    let harmonic: BigInt = lap.mul_vec(&lambda_star.coeffs)?.iter().map(|v| v.abs()).sum();
    put("cocycle_harmonic", int(harmonic));

    let energy = energy_check(x, dim, &lambda, opts);
    let ok = residuals.values().all(Zero::is_zero) && energy.violations == 0;
    Ok(HarmonicCertificate {
        dim,
        mode: opts.mode,
        lambda,
        lambda_star,
        k_i,
        k_upper_i,
        h_below,
        h_above,
        identity_residuals: residuals,
        energy,
        basis_fingerprint: fingerprint(&winding, &cutting),
        ok,
    })
}
