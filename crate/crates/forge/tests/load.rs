use reduct_core::partition::ind_partition;
use reduct_core::{builtin_seven_segment, Decision};
use reduct_forge::{load_csv, LoadOptions};

const SEVEN_SEGMENT: &str = include_str!("fixtures/seven_segment.csv");

#[test]
fn seven_segment_csv_matches_builtin() {
    let is = load_csv(SEVEN_SEGMENT.as_bytes(), &LoadOptions::default()).unwrap();
    assert_eq!(is.num_objects(), 10);
    assert_eq!(is.attributes(), ["a", "b", "c", "d", "e", "f", "g"]);
    let builtin = builtin_seven_segment();
    for a in ["a", "b", "c", "d", "e", "f", "g"] {
        assert_eq!(
            ind_partition(&is, &[a]).unwrap(),
            ind_partition(&builtin, &[a]).unwrap()
        );
    }
    assert_eq!(is, builtin);
}

#[test]
fn loading_is_deterministic() {
    let options = LoadOptions {
        has_header: true,
        decision: Decision::Attribute("g".into()),
    };
    let a = load_csv(SEVEN_SEGMENT.as_bytes(), &options).unwrap();
    let b = load_csv(SEVEN_SEGMENT.as_bytes(), &options).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.conditional_attributes(), ["a", "b", "c", "d", "e", "f"]);
}
