//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Run with `cargo test -p qc4-cli --test acceptance -- --nocapture`
//! to see the lines; criteria 1 and 3 honor QC4_ACCEPT_BZ_SECS (default
//! 120) as the per-code distance budget, and a budget-exhausted outcome
//! must bracket the published value rather than fake an exact one.

use std::time::Instant;

use num_bigint::BigUint;
use qc4::distance::{
    macwilliams_transform, min_distance_bruteforce, min_distance_bz, weight_enumerator_exhaustive,
    Budget, DistanceBound,
};
use qc4::linalg::{hermitian_inner_product, Gf4Matrix};
use qc4::poly::{Poly, QuotientContext};
use qc4::qc2::{
    build_qc_code, dual_containing_symbolic, dual_qc_code, verify_dual_containment, LinearCode,
    Qc2Spec,
};
use qc4::quantum::{
    compare_records, derive_closure, Derivation, QuantumParams, RecordStatus, RecordsDb,
};
use qc4_cli::catalog::{BASELINE_RECORDS_CSV, CATALOG, EXPECTED_IMPROVEMENTS};
use qc4_cli::reproduce::{reproduce, RowOutcome, RowSpec};
use qc4_cli::search::{search_nu, NuMode, SearchConfig};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

fn bz_budget_secs() -> f64 {
    std::env::var("QC4_ACCEPT_BZ_SECS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(120.0)
}

fn pass(criterion: u32, detail: &str) {
    println!("acceptance criterion {criterion}: PASS — {detail}");
}

fn random_divisor(rng: &mut impl Rng, factors: &[Poly]) -> Poly {
    let mut g = Poly::one();
    for f in factors {
        if rng.gen_bool(0.5) {
            g = &g * f;
        }
    }
    g
}

fn random_spec(rng: &mut impl Rng, n: usize) -> Qc2Spec {
    let ctx = QuotientContext::new(n).unwrap();
    let factors = ctx.factor_xn_minus_1().unwrap();
    let g1 = random_divisor(rng, &factors);
    let g2 = random_divisor(rng, &factors);
    let nu = Poly::from_coeffs((0..n).map(|_| rng.gen()).collect());
    Qc2Spec::new(n, &g1, &g2, &nu).unwrap()
}

fn random_code(rng: &mut impl Rng, k: usize, n: usize) -> LinearCode {
    loop {
        let mut m = Gf4Matrix::zeros(k, n);
        for r in 0..k {
            for c in 0..n {
                m.set(r, c, rng.gen());
            }
        }
        let code = LinearCode::from_generator(m);
        if code.dimension() == k {
            return code;
        }
    }
}

/// Criterion 1: the first bundled row parses, its generators divide x²¹−1,
/// the [42,26] code is dual-containing by the matrix oracle, its exact
/// distance is 9, and the Hermitian construction emits [[42,10,9]].
#[test]
fn criterion_1_row_one_reproduction() {
    let db = RecordsDb::from_reader(BASELINE_RECORDS_CSV.as_bytes()).unwrap();
    let rows = vec![RowSpec::from(&CATALOG[0])];
    let budget = bz_budget_secs().max(600.0);
    let report = reproduce(&rows, budget, &db);
    let RowOutcome::Completed(data) = &report.rows[0].outcome else {
        panic!("acceptance criterion 1: FAIL — row 1 did not complete: {:?}", report.rows[0]);
    };
    assert!(data.dimension_matches_claim, "computed dimensions differ");
    assert_eq!(data.dossier.classical.length, 42);
    assert_eq!(data.dossier.classical.dimension, 26);
    assert!(data.dossier.checks.dual_containing, "matrix oracle rejected");
    let d = data
        .dossier
        .classical
        .distance
        .as_ref()
        .and_then(|r| r.exact())
        .expect("exact distance within budget");
    assert_eq!(d, 9, "distance must be exactly 9");
    let q = data.dossier.quantum.as_ref().expect("quantum parameters");
    assert_eq!((q.n, q.k, q.d), (42, 10, 9));
    assert!(q.pure);
    pass(1, "[42,26] verified dual-containing, d = 9 exact, [[42,10,9]] emitted");
}

/// Criterion 2: exhaustive enumeration of the [42,16] dual followed by the
/// transform gives A₉ = 3486, A₁₀ = 22176, A₁₁ = 181566 exactly.
#[test]
fn criterion_2_weight_prefix() {
    let entry = &CATALOG[0];
    let spec = Qc2Spec::new(
        entry.n,
        &qc4::poly::parse_coeff_string(entry.g1).unwrap(),
        &qc4::poly::parse_coeff_string(entry.g2).unwrap(),
        &qc4::poly::parse_coeff_string(entry.nu).unwrap(),
    )
    .unwrap();
    let dual = dual_qc_code(&spec).unwrap();
    assert_eq!((dual.length(), dual.dimension()), (42, 16));
    let started = Instant::now();
    let dual_weights = weight_enumerator_exhaustive(&dual).unwrap();
    let elapsed = started.elapsed().as_secs_f64();
    assert_eq!(dual_weights.min_positive_weight(), Some(12), "dual minimum weight");
    let primal = macwilliams_transform(&dual_weights, 42, 16).unwrap();
    assert_eq!(primal.count(9), BigUint::from(3486u32));
    assert_eq!(primal.count(10), BigUint::from(22176u32));
    assert_eq!(primal.count(11), BigUint::from(181566u32));
    pass(
        2,
        &format!("A9/A10/A11 = 3486/22176/181566 exact; 4^16 enumeration took {elapsed:.0}s"),
    );
}

/// Criterion 3: rows 2–4. Exact distances must equal 7, 9, 9; a
/// budget-exhausted run must report bounds that bracket those values and
/// never a wrong exact claim.
#[test]
fn criterion_3_remaining_rows_distances() {
    let db = RecordsDb::from_reader(BASELINE_RECORDS_CSV.as_bytes()).unwrap();
    let budget = bz_budget_secs();
    let mut details = Vec::new();
    for index in [2usize, 3, 4] {
        let entry = CATALOG.iter().find(|e| e.index == index).unwrap();
        let rows = vec![RowSpec::from(entry)];
        let report = reproduce(&rows, budget, &db);
        let RowOutcome::Completed(data) = &report.rows[0].outcome else {
            panic!("acceptance criterion 3: FAIL — row {index} did not complete");
        };
        let claimed = entry.claimed.2;
        let result = data.dossier.classical.distance.as_ref().unwrap();
        match result.bound {
            DistanceBound::Exact { value } => {
                assert_eq!(
                    value, claimed,
                    "row {index}: exact distance {value} contradicts {claimed}"
                );
                details.push(format!("row {index}: d = {value} exact"));
                if let Some(q) = &data.dossier.quantum {
                    assert_eq!(
                        (q.n, q.k, q.d),
                        entry.claimed_quantum,
                        "row {index} quantum parameters"
                    );
                }
            }
            DistanceBound::Bounds { lower, upper } => {
                assert!(
                    lower <= claimed && claimed <= upper,
                    "row {index}: bounds {lower}..{upper} do not bracket {claimed}"
                );
                details.push(format!(
                    "row {index}: {lower} <= d <= {upper} (budget {budget:.0}s exhausted, brackets {claimed})"
                ));
            }
        }
    }
    pass(3, &details.join("; "));
}

/// Criterion 4: the closures of the four base codes, filtered through the
/// bundled records snapshot, flag exactly the 30 expected triples.
#[test]
fn criterion_4_records_closure() {
    let started = Instant::now();
    let db = RecordsDb::from_reader(BASELINE_RECORDS_CSV.as_bytes()).unwrap();
    assert_eq!(db.len(), 30);
    let mut candidates = Vec::new();
    for entry in &CATALOG {
        let (n, k, d) = entry.claimed_quantum;
        let base = QuantumParams {
            n,
            k,
            d,
            pure: true,
            provenance: Derivation {
                base: format!("row {}", entry.index),
                rules: Vec::new(),
            },
        };
        candidates.extend(derive_closure(&base, 8, entry.window));
    }
    let report = compare_records(&candidates, &db);
    let mut improvements: Vec<(u32, u32, u32)> = report
        .iter()
        .filter(|c| c.status == RecordStatus::Improves)
        .map(|c| (c.candidate.n, c.candidate.k, c.candidate.d))
        .collect();
    improvements.sort_unstable();
    let mut expected = EXPECTED_IMPROVEMENTS.to_vec();
    expected.sort_unstable();
    assert_eq!(improvements, expected, "improvement set mismatch");
    // no expected row may be worse or tie, and nothing extra may improve
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 1.0, "closure comparison took {elapsed:.3}s, budget is 1s");
    pass(4, &format!("exactly 30 improvements in {elapsed:.3}s"));
}

/// Criterion 5: 200 random specs with gcd(ν−1, xⁿ−1) = 1 all have rank
/// 2n − deg g₁ − deg g₂.
#[test]
fn criterion_5_dimension_theorem() {
    let started = Instant::now();
    let mut rng = ChaCha12Rng::seed_from_u64(0xc5);
    let lengths = [7usize, 9, 11, 13, 15];
    let mut checked = 0;
    while checked < 200 {
        let spec = random_spec(&mut rng, lengths[checked % lengths.len()]);
        if !spec.dimension_condition_holds() {
            continue;
        }
        let code = build_qc_code(&spec).unwrap();
        assert_eq!(
            code.dimension(),
            spec.expected_dimension(),
            "dimension theorem failed on {spec:?}"
        );
        checked += 1;
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "suite took {elapsed:.1}s, budget is 60s");
    pass(5, &format!("200 conditioned specs, zero failures, {elapsed:.1}s"));
}

/// Criterion 6: the oracle-agreement bundle — symbolic vs matrix verdicts,
/// exact-distance routes, the exchange law under the pinned adjoint, and
/// the transform involution.
#[test]
fn criterion_6_oracle_agreement() {
    let started = Instant::now();

    // symbolic vs matrix on 100 specs per length
    let mut rng = ChaCha12Rng::seed_from_u64(0xc6a);
    let mut positives = 0u32;
    for &n in &[7usize, 9, 11, 13, 15] {
        for _ in 0..100 {
            let spec = random_spec(&mut rng, n);
            let symbolic = dual_containing_symbolic(&spec).unwrap().holds;
            let matrix = verify_dual_containment(&spec).unwrap();
            assert_eq!(symbolic, matrix, "verdict disagreement on {spec:?}");
            positives += symbolic as u32;
        }
    }

    // BZ equals brute force on 50 random codes
    let mut rng = ChaCha12Rng::seed_from_u64(0xc6b);
    for _ in 0..50 {
        let k = rng.gen_range(2..=10);
        let n = rng.gen_range(k.max(3)..=20);
        let code = random_code(&mut rng, k, n);
        let bf = min_distance_bruteforce(&code).unwrap().exact().unwrap();
        let bz = min_distance_bz(&code, Budget::Unlimited).unwrap().exact().unwrap();
        assert_eq!(bf, bz, "distance routes disagree on a [{n},{k}] code");
    }

    // exchange law under the pinned adjoint, 1000 random triples
    let mut rng = ChaCha12Rng::seed_from_u64(0xc6c);
    for _ in 0..1000 {
        let n = *[7usize, 9, 15].iter().nth(rng.gen_range(0..3)).unwrap();
        let ctx = QuotientContext::new(n).unwrap();
        let f = Poly::from_coeffs((0..n).map(|_| rng.gen()).collect());
        let g = Poly::from_coeffs((0..n).map(|_| rng.gen()).collect());
        let h = Poly::from_coeffs((0..n).map(|_| rng.gen()).collect());
        let lhs = hermitian_inner_product(
            &ctx.mulmod(&f, &g).coeff_vector(n).unwrap(),
            &h.coeff_vector(n).unwrap(),
        )
        .unwrap();
        let rhs = hermitian_inner_product(
            &g.coeff_vector(n).unwrap(),
            &ctx.mulmod(&ctx.hermitian_adjoint(&f).unwrap(), &h)
                .coeff_vector(n)
                .unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs, "exchange law failed");
    }

    // transform involution on 100 random small codes
    let mut rng = ChaCha12Rng::seed_from_u64(0xc6d);
    for _ in 0..100 {
        let k = rng.gen_range(1..=5);
        let n = rng.gen_range(k..=10);
        let code = random_code(&mut rng, k, n);
        let primal = weight_enumerator_exhaustive(&code).unwrap();
        let dual = macwilliams_transform(&primal, n, k).unwrap();
        let back = macwilliams_transform(&dual, n, n - k).unwrap();
        assert_eq!(back, primal, "transform is not an involution");
    }

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 300.0, "suite took {elapsed:.1}s, budget is 300s");
    pass(
        6,
        &format!("500 verdict agreements ({positives} positive), 50 distance agreements, 1000 exchange-law triples, 100 involutions, {elapsed:.1}s"),
    );
}

/// Criterion 7: a fixed search config produces byte-identical JSON across
/// repeated runs and across worker counts 1 and 8.
#[test]
fn criterion_7_search_determinism() {
    let cfg = SearchConfig {
        n: 7,
        t1: vec![1],
        t2: vec![3],
        nu_mode: NuMode::RandomDense,
        trials: 48,
        seed: 20240,
        distance_budget_secs: 0.2,
        min_distance: None,
        workers: Some(1),
    };
    let one_a = serde_json::to_string_pretty(&search_nu(&cfg).unwrap()).unwrap();
    let one_b = serde_json::to_string_pretty(&search_nu(&cfg).unwrap()).unwrap();
    assert_eq!(one_a, one_b, "same config, same workers: outputs differ");
    let mut cfg8 = cfg.clone();
    cfg8.workers = Some(8);
    let eight = serde_json::to_string_pretty(&search_nu(&cfg8).unwrap()).unwrap();
    assert_eq!(one_a, eight, "outputs differ between 1 and 8 workers");
    assert!(!one_a.is_empty());
    pass(
        7,
        &format!("byte-identical output ({} bytes) across runs and worker counts", one_a.len()),
    );
}
