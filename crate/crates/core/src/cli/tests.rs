use super::*;

#[test]
fn report_exit_code_tracks_results() {
    let mut r = RunReport::new("x");
    assert_eq!(r.exit_code, EXIT_PASS);
    r.check("a", true, None);
    assert_eq!(r.exit_code, EXIT_PASS);
    r.check("b", false, Some(vec!["w".into()]));
    assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
    assert_eq!(r.failed(), vec!["b"]);
}

#[test]
fn unknown_fixture_is_an_input_error() {
    assert!(matches!(demo("nope", DEFAULT_SEED), Err(CliError::UnknownFixture(_))));
}

#[test]
fn random_samples_are_deterministic_and_cover_every_kind() {
    let a: Vec<_> = random_structures(7, 10).iter().map(|s| s.kind()).collect();
    let b: Vec<_> = random_structures(7, 10).iter().map(|s| s.kind()).collect();
    assert_eq!(a, b);
    for k in ["groupoid", "quantum groupoid", "GFA", "module", "Frobenius object"] {
        assert!(a.contains(&k));
    }
    assert_eq!(serialization_roundtrip(7, 10), None);
}
