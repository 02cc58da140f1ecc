//! Acceptance criteria, one test each. Every test prints a single
//! `PASS`/`FAIL` line before asserting.

mod common;

use std::time::{Duration, Instant};

use hcycle_core::cycletrees::{
    complement_bijection_check, cycle_part_weight_check, enumerate_cycletrees, enumerate_dual_cycletrees,
};
use hcycle_core::fixtures;
use hcycle_core::forests::{
    dual_tree_number, enumerate_dual_trees, enumerate_trees, sum_of_squared_weights, tree_number, weight_mismatches,
};
use hcycle_core::graph::{count_cycletrees_complete, cycle_length_profile, laplacian_length_limit, DEFAULT_T_VALUES};
use hcycle_core::harmonic::{
    build_certificate, standard_harmonic_cocycle_bruteforce, standard_harmonic_cocycle_fast,
    standard_harmonic_cycle_bruteforce, standard_harmonic_cycle_fast, CertificateOptions,
};
use hcycle_core::{Chain, DEFAULT_CAP};
use num_bigint::BigInt;

use common::{connected_graph, rng, unicycle_corpus, Instance};

const CORPUS_SEED: u64 = 20_240_611;

fn corpus() -> Vec<Instance> {
    unicycle_corpus(30, CORPUS_SEED)
}

fn report(name: &str, failures: &[String], detail: &str) {
    if failures.is_empty() {
        println!("PASS {name}: {detail}");
    } else {
        println!(
            "FAIL {name}: {detail}; {} failure(s), first: {}",
            failures.len(),
            failures[0]
        );
    }
    assert!(failures.is_empty(), "{name}: {failures:#?}");
}

const IDENTITIES: [&str; 7] = [
    "cycle_inner_product",
    "cocycle_inner_product",
    "cycle_norm",
    "cocycle_norm",
    "normalized_norm",
    "normalized_sign_coherence",
    "cycle_harmonic",
];

#[test]
fn exact_identity_suite() {
    let start = Instant::now();
    let corpus = corpus();
    let mut failures = Vec::new();
    let opts = CertificateOptions::default();
    let mut residuals = 0;
    for inst in &corpus {
        match build_certificate(&inst.complex, inst.dim, &opts) {
            Ok(cert) => {
                residuals += cert.identity_residuals.len();
                for name in
                    IDENTITIES
                        .iter()
                        .chain(&["cocycle_harmonic", "cycle_norm_by_cycletrees", "tree_number_by_cutting"])
                {
                    if !cert.identity_residuals.contains_key(*name) {
                        failures.push(format!("{}: residual {name} missing", inst.name));
                    }
                }
                for f in cert.failures() {
                    failures.push(format!("{}: {f} = {}", inst.name, cert.identity_residuals[f]));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}, limit 60s"));
    }
    report(
        "exact_identity_suite",
        &failures,
        &format!(
            "{} complexes, {residuals} residuals all zero, {elapsed:.2?}",
            corpus.len()
        ),
    );
}

#[test]
fn oracle_equivalence() {
    let mut failures = Vec::new();
    let corpus = corpus();
    for inst in &corpus {
        let (x, i) = (&inst.complex, inst.dim);
        let run = || -> hcycle_core::Result<Vec<String>> {
            let mut bad = Vec::new();
            if standard_harmonic_cycle_bruteforce(x, i, DEFAULT_CAP)? != standard_harmonic_cycle_fast(x, i)? {
                bad.push("λ by enumeration differs from λ by kernel".to_string());
            }
            if standard_harmonic_cocycle_bruteforce(x, i, DEFAULT_CAP)? != standard_harmonic_cocycle_fast(x, i)? {
                bad.push("λ* by enumeration differs from λ* by kernel".to_string());
            }
            let trees = enumerate_trees(x, i, DEFAULT_CAP)?;
            if sum_of_squared_weights(&trees) != tree_number(x, i)? {
                bad.push("k_i differs from the sum of squared tree weights".to_string());
            }
            let dual = enumerate_dual_trees(x, i, DEFAULT_CAP)?;
            if sum_of_squared_weights(&dual) != dual_tree_number(x, i)? {
                bad.push("k^i differs from the sum of squared dual tree weights".to_string());
            }
            for (sel, det, hom) in weight_mismatches(x, &trees, false)? {
                bad.push(format!("tree {:?}: minor {det}, homology {hom}", sel.indices()));
            }
            for (sel, det, hom) in weight_mismatches(x, &dual, true)? {
                bad.push(format!("dual tree {:?}: minor {det}, homology {hom}", sel.indices()));
            }
            Ok(bad)
        };
        match run() {
            Ok(bad) => failures.extend(bad.into_iter().map(|b| format!("{}: {b}", inst.name))),
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
    }
    report("oracle_equivalence", &failures, &format!("{} complexes", corpus.len()));
}

fn ints(c: &Chain) -> Vec<i64> {
    c.coeffs.iter().map(|v| i64::try_from(v).expect("small")).collect()
}

#[test]
fn hand_fixtures() {
    let mut failures = Vec::new();
    let opts = CertificateOptions::default();
    // (λ, λ*, k_i, k^i, |H̃_{i-1}|, |H̃^{i+1}|, λ∘λ, λ*∘λ*)
    type Expected<'a> = (&'a [i64], &'a [i64], [i64; 6]);
    let mut check =
        |name: &str, x: hcycle_core::ChainComplex, (lambda, lambda_star, numbers): Expected| match build_certificate(
            &x, 1, &opts,
        ) {
            Ok(c) => {
                let got = (
                    ints(&c.lambda),
                    ints(&c.lambda_star),
                    [
                        &c.k_i,
                        &c.k_upper_i,
                        &c.h_below,
                        &c.h_above,
                        &c.lambda.dot(&c.lambda),
                        &c.lambda_star.dot(&c.lambda_star),
                    ]
                    .map(|v| i64::try_from(v).expect("small")),
                );
                let want = (lambda.to_vec(), lambda_star.to_vec(), numbers);
                if got != want || !c.ok {
                    failures.push(format!("{name}: got {got:?}, want {want:?}, ok = {}", c.ok));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        };
    check(
        "triangle",
        fixtures::triangle(),
        (&[1, 1, 1], &[1, 1, 1], [3, 1, 1, 1, 3, 3]),
    );
    check(
        "doubled loop",
        fixtures::doubled_loop(),
        (&[0, 2], &[0, 4], [1, 4, 1, 2, 4, 16]),
    );
    match build_certificate(&fixtures::disc(), 1, &opts) {
        Ok(_) => failures.push("disc: accepted".into()),
        Err(e) if !e.to_string().contains("rk H̃_1 = 0 ≠ 1") => failures.push(format!("disc: wrong error {e}")),
        Err(_) => {}
    }
    report("hand_fixtures", &failures, "triangle, doubled loop, disc");
}

#[test]
fn complete_graph_counts() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 3..=6usize {
        let closed = count_cycletrees_complete(n as u64).expect("n >= 3");
        let g = fixtures::complete_graph(n);
        let enumerated = enumerate_cycletrees(&g, 1, DEFAULT_CAP)
            .expect("within cap")
            .iter()
            .filter(|u| u.weight != BigInt::from(0))
            .count();
        if BigInt::from(enumerated) != closed {
            failures.push(format!("K_{n}: closed form {closed}, enumeration {enumerated}"));
        }
        counts.push(closed.to_string());
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        failures.push(format!("took {elapsed:?}, limit 30s"));
    }
    report(
        "complete_graph_counts",
        &failures,
        &format!("K_3..K_6 = {}, {elapsed:.2?}", counts.join(", ")),
    );
}

#[test]
fn edge_identity() {
    let mut failures = Vec::new();
    let mut r = rng(CORPUS_SEED);
    let k4 = cycle_length_profile(&fixtures::complete_graph(4), DEFAULT_CAP).expect("K4");
    if k4.edge_identity_lhs() != BigInt::from(48) || k4.edge_identity_rhs() != BigInt::from(48) {
        failures.push(format!("K4: {} vs {}", k4.edge_identity_lhs(), k4.edge_identity_rhs()));
    }
    for k in 0..50 {
        let g = connected_graph(&mut r, 14);
        match cycle_length_profile(&g, DEFAULT_CAP) {
            Ok(p) if !p.edge_identity_holds() => failures.push(format!(
                "graph {k} (n = {}, m = {}): {} vs {}",
                p.n,
                p.m,
                p.edge_identity_lhs(),
                p.edge_identity_rhs()
            )),
            Ok(_) => {}
            Err(e) => failures.push(format!("graph {k}: {e}")),
        }
    }
    report(
        "edge_identity",
        &failures,
        "K4 (48 = 48) and 50 random connected graphs, m <= 14",
    );
}

#[test]
fn laplacian_limit() {
    let mut failures = Vec::new();
    let mut detail = Vec::new();
    let cases = [("K4", fixtures::complete_graph(4)), ("C5", fixtures::cycle_graph(5))];
    for (name, g) in cases {
        let want = cycle_length_profile(&g, DEFAULT_CAP)
            .expect("graph")
            .squared_length_sum();
        let want: f64 = want.to_string().parse().expect("small");
        let est = laplacian_length_limit(&g, &DEFAULT_T_VALUES).expect("graph");
        let rel = (est.estimate - want).abs() / want;
        detail.push(format!("{name} {:.6} (Σ l_j j² = {want})", est.estimate));
        if rel > 1e-6 {
            failures.push(format!(
                "{name}: estimate {} vs {want}, relative error {rel:.2e}",
                est.estimate
            ));
        }
        if est.imaginary_residual >= 1e-9 {
            failures.push(format!("{name}: imaginary residual {:.2e}", est.imaginary_residual));
        }
    }
    report("laplacian_limit", &failures, &detail.join(", "));
}

#[test]
fn complement_bijections() {
    let mut failures = Vec::new();
    let corpus = corpus();
    let mut pairs = 0;
    for inst in &corpus {
        match complement_bijection_check(&inst.complex, inst.dim, DEFAULT_CAP) {
            Ok(r) => {
                pairs += r.nonzero_pairs;
                failures.extend(r.failures.iter().map(|f| format!("{}: {f}", inst.name)));
                if !r.ok && r.failures.is_empty() {
                    failures.push(format!("{}: not ok", inst.name));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
    }
    report(
        "complement_bijections",
        &failures,
        &format!("{} complexes, {pairs} nonzero pairs", corpus.len()),
    );
}

#[test]
fn gcd_homology_agreement() {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut non_unit = 0;
    for inst in &corpus() {
        let (x, i) = (&inst.complex, inst.dim);
        let all = enumerate_cycletrees(x, i, DEFAULT_CAP).and_then(|mut a| {
            a.extend(enumerate_dual_cycletrees(x, i, DEFAULT_CAP)?);
            Ok(a)
        });
        let all = match all {
            Ok(a) => a,
            Err(e) => {
                failures.push(format!("{}: {e}", inst.name));
                continue;
            }
        };
        for u in &all {
            match cycle_part_weight_check(x, u) {
                Ok(w) => {
                    checked += 1;
                    if w.content > BigInt::from(1) {
                        non_unit += 1;
                    }
                    if !w.agrees {
                        failures.push(format!(
                            "{} {:?} {:?}: content {}, order {}",
                            inst.name,
                            u.kind,
                            u.selection.indices(),
                            w.content,
                            w.order
                        ));
                    }
                }
                Err(e) => failures.push(format!("{}: {e}", inst.name)),
            }
        }
    }
    report(
        "gcd_homology_agreement",
        &failures,
        &format!("{checked} cycle parts, {non_unit} with content > 1"),
    );
}

#[test]
fn energy_minimality() {
    let mut failures = Vec::new();
    let opts = CertificateOptions::default();
    let mut instances = corpus();
    for (name, x) in [
        ("triangle", fixtures::triangle()),
        ("doubled loop", fixtures::doubled_loop()),
    ] {
        instances.push(Instance {
            name: name.into(),
            complex: x,
            dim: 1,
        });
    }
    let mut trials = 0;
    for inst in &instances {
        match build_certificate(&inst.complex, inst.dim, &opts) {
            Ok(c) => {
                trials += c.energy.trials;
                if c.energy.violations > 0 {
                    failures.push(format!("{}: {} violations", inst.name, c.energy.violations));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
    }
    report(
        "energy_minimality",
        &failures,
        &format!("{} complexes, {trials} perturbations", instances.len()),
    );
}
