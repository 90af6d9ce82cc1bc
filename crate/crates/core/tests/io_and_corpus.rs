mod common;

use std::path::PathBuf;

use proptest::prelude::*;
use serde_json::Value as Json;

use colalg::constructions::{adjoint_bimodule, derive_ternary_from_binary};
use colalg::corpus::{generate_corpus, nonabelian_lie, worked_example};
use colalg::io::{parse_algebra, parse_document, serialize_algebra, serialize_bimodule, serialize_document};
use colalg::{check_identity, Error, Identity};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    std::fs::read_to_string(p).unwrap()
}

fn assert_no_floats(v: &Json) {
    match v {
        Json::Number(n) => assert!(!n.is_f64(), "float {n} in serialized output"),
        Json::Array(a) => a.iter().for_each(assert_no_floats),
        Json::Object(o) => o.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn example_fixture_is_the_serialized_corpus_member() {
    assert_eq!(fixture("worked_example.alg"), serialize_algebra(&worked_example()));
    assert_eq!(fixture("nonabelian_lie.alg"), serialize_algebra(&nonabelian_lie()));
}

#[test]
fn fixtures_round_trip_byte_for_byte() {
    for name in ["worked_example.alg", "broken.alg", "nonabelian_lie.alg"] {
        let text = fixture(name);
        let doc = parse_document(&text).unwrap();
        assert_eq!(serialize_document(&doc), text, "{name}");
    }
}

#[test]
fn broken_fixture_fails_leibniz_with_witness() {
    let obj = parse_algebra(&fixture("broken.alg")).unwrap();
    let r = check_identity(&obj, Identity::Leibniz2).unwrap();
    assert!(!r.passed());
    assert_eq!(r.witnesses[0].tuple, vec![1, 1, 1]);
}

#[test]
fn corpus_and_constructed_objects_round_trip() {
    for e in generate_corpus(4) {
        let text = serialize_algebra(&e.object);
        assert_no_floats(&serde_json::from_str(&text).unwrap());
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back, e.object, "{}", e.id);
        assert_eq!(serialize_algebra(&back), text, "{}", e.id);
    }
    let t = derive_ternary_from_binary(&nonabelian_lie()).unwrap();
    let b = adjoint_bimodule(&t, Identity::Bimodule3).unwrap();
    let text = serialize_bimodule(&b);
    assert_no_floats(&serde_json::from_str(&text).unwrap());
    let doc = parse_document(&text).unwrap();
    assert_eq!(doc.bimodule().unwrap(), &b);
    assert_eq!(serialize_document(&doc), text);
}

#[test]
fn corpus_is_deterministic_per_seed() {
    assert_eq!(generate_corpus(9), generate_corpus(9));
    let first = generate_corpus(0);
    assert!((1..8).any(|s| generate_corpus(s) != first), "seed has no effect");
    let ids: Vec<String> = first.iter().map(|e| e.id.clone()).collect();
    let mut unique = ids.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(unique.len(), ids.len());
    for fam in 'a'..='g' {
        assert!(first.iter().any(|e| e.family() == fam), "family {fam} missing");
    }
}

#[test]
fn parse_errors_carry_a_location() {
    let bad = fixture("worked_example.alg").replace("\"coef\": \"1\"", "\"coef\": \"one\"");
    match parse_document(&bad) {
        Err(Error::Parse { location, .. }) => assert!(location.contains("bracket2"), "{location}"),
        other => panic!("expected a parse error, got {other:?}"),
    }
    let float = fixture("worked_example.alg").replace("\"coef\": \"1\"", "\"coef\": 1.0");
    assert!(matches!(parse_document(&float), Err(Error::Parse { .. })));
    let ungraded = fixture("worked_example.alg").replace("\"out\": 0", "\"out\": 2");
    assert!(parse_document(&ungraded).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_objects_round_trip(seed in any::<u64>(), n in 1usize..5) {
        let obj = common::random_object(seed, n, &[("bracket2", 2), ("product2", 2), ("bracket3", 3)]);
        let text = serialize_algebra(&obj);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &obj);
        prop_assert_eq!(serialize_algebra(&back), text);
    }
}
