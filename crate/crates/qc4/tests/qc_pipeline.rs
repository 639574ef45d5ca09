//! End-to-end checks on the bundled n=21 construction: dimensions, dual
//! containment by both routes, the exact minimum distance, and the dual
//! weight distribution transformed back to the primal side.

use num_bigint::BigUint;
use qc4::distance::{
    low_weight_search, macwilliams_transform, min_distance_bz, weight_enumerator_exhaustive,
    Budget, DistanceBound,
};
use qc4::poly::parse_coeff_string;
use qc4::qc2::{build_qc_code, dual_containing_symbolic, dual_qc_code, verify_dual_containment, Qc2Spec};

fn row_1_spec() -> Qc2Spec {
    Qc2Spec::new(
        21,
        &parse_coeff_string("1101").unwrap(),
        &parse_coeff_string("3^{2}1^{2}(31)^{2}12(21)^{2}").unwrap(),
        &parse_coeff_string("1020231213^{2}23^{2}0332^{3}").unwrap(),
    )
    .unwrap()
}

#[test]
fn dimensions_and_containment() {
    let spec = row_1_spec();
    let code = build_qc_code(&spec).unwrap();
    let dual = dual_qc_code(&spec).unwrap();
    assert_eq!((code.length(), code.dimension()), (42, 26));
    assert_eq!((dual.length(), dual.dimension()), (42, 16));
    assert!(dual_containing_symbolic(&spec).unwrap().holds);
    assert!(verify_dual_containment(&spec).unwrap());
}

#[test]
fn low_weight_search_finds_a_weight_nine_word() {
    let spec = row_1_spec();
    let code = build_qc_code(&spec).unwrap();
    let word = low_weight_search(&code, 9, 400, 2024).unwrap();
    let word = word.expect("weight-9 words exist and ISD finds one");
    assert!(word.weight() <= 9);
}

#[test]
fn exact_distance_is_nine() {
    let spec = row_1_spec();
    let code = build_qc_code(&spec).unwrap();
    let start = std::time::Instant::now();
    let result = min_distance_bz(&code, Budget::Unlimited).unwrap();
    eprintln!(
        "[42,26] distance: {:?} after {} words in {:.1}s",
        result.bound,
        result.stats.codewords_enumerated,
        start.elapsed().as_secs_f64()
    );
    assert_eq!(result.exact(), Some(9));
}

#[test]
fn dual_enumerator_prefix_via_transform() {
    let spec = row_1_spec();
    let dual = dual_qc_code(&spec).unwrap();
    let start = std::time::Instant::now();
    let dual_weights = weight_enumerator_exhaustive(&dual).unwrap();
    eprintln!("4^16 enumeration: {:.1}s", start.elapsed().as_secs_f64());
    // dual minimum weight
    assert_eq!(dual_weights.min_positive_weight(), Some(12));
    // primal distribution prefix through the transform
    let primal = macwilliams_transform(&dual_weights, 42, 16).unwrap();
    assert_eq!(primal.count(0), BigUint::from(1u8));
    for w in 1..9 {
        assert_eq!(primal.count(w), BigUint::from(0u8), "A_{w}");
    }
    assert_eq!(primal.count(9), BigUint::from(3486u32));
    assert_eq!(primal.count(10), BigUint::from(22176u32));
    assert_eq!(primal.count(11), BigUint::from(181566u32));
    assert_eq!(primal.count(41), BigUint::from(356314153608u64));
    assert_eq!(primal.count(42), BigUint::from(25503008994u64));
    assert_eq!(primal.total(), BigUint::from(4u8).pow(26));
}

#[test]
fn bz_budget_bounds_bracket() {
    let spec = row_1_spec();
    let code = build_qc_code(&spec).unwrap();
    let result = min_distance_bz(&code, Budget::WorkUnits { limit: 100_000 }).unwrap();
    match result.bound {
        DistanceBound::Exact { value } => assert_eq!(value, 9),
        DistanceBound::Bounds { lower, upper } => {
            assert!(lower <= 9 && 9 <= upper, "bracket {lower}..{upper}");
        }
    }
}
