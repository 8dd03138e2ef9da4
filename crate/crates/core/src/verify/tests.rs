use super::*;

fn cfg(filter: &str) -> SuiteConfig {
    SuiteConfig {
        filter: Some(filter.into()),
        ..SuiteConfig::default()
    }
}

#[test]
fn registry_ids_are_unique_and_anchored() {
    let all = registry();
    let ids: BTreeSet<&str> = all.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), all.len());
    assert!(all
        .iter()
        .all(|c| !c.anchor.is_empty() && !c.description.is_empty() && !c.modes.is_empty()));
    assert_eq!(all.iter().filter(|c| c.kind == Kind::Reported).count(), 2);
}

#[test]
fn filter_is_anchored() {
    assert_eq!(select(Some("lovelock.d_of_n")).unwrap().len(), 1);
    assert!(select(Some("d_of_n")).is_err());
    assert!(select(Some("lovelock\\..*")).unwrap().len() > 5);
    assert!(matches!(
        select(Some("no.such")),
        Err(Error::UnknownCheck(_))
    ));
    assert!(matches!(select(Some("(")), Err(Error::Config(_))));
}

#[test]
fn small_suite_passes_in_both_modes_and_is_deterministic() {
    let mut c = cfg("hierarchy\\.(ruse_lanczos|inversion_sphere4)|lovelock\\.d_of_n|reported\\..*");
    c.modes = ModeSelection::Both;
    let a = run_suite(&c).unwrap();
    assert_eq!(a.summary.total, 10);
    assert!(a.all_passed(), "{:#?}", a.failures().collect::<Vec<_>>());
    assert_eq!(a.summary.reported, 4);
    assert_eq!(a.to_json(), run_suite(&c).unwrap().to_json());
    let rational = a
        .checks
        .iter()
        .find(|c| c.id == "hierarchy.ruse_lanczos" && c.mode == Mode::Rational)
        .unwrap();
    assert_eq!(rational.residual, Some(0.0));
    assert_eq!(rational.tolerance, 0.0);
}

#[test]
fn reported_entries_show_the_discrepancies() {
    let r = run_suite(&cfg("reported\\..*")).unwrap();
    assert!(r
        .checks
        .iter()
        .all(|c| c.status == Status::Reported && c.residual.unwrap() > 0.0));
}

#[test]
fn corrupt_check_fails() {
    let mut c = cfg("lovelock.d_of_n");
    c.corrupt = true;
    let r = run_suite(&c).unwrap();
    assert!(!r.all_passed());
    let bad: Vec<_> = r.failures().map(|c| c.id.as_str()).collect();
    assert_eq!(bad, ["harness.self_test_corrupt"]);
}

#[test]
fn float_only_checks_run_in_float_under_rational_selection() {
    let r = run_suite(&cfg("geometry.christoffel_polar")).unwrap();
    assert_eq!(r.checks[0].mode, Mode::Float);
    assert!(r.all_passed());
}

#[test]
fn seed_changes_inputs() {
    let mut c = cfg("hierarchy.ruse_lanczos");
    let a = run_suite(&c).unwrap();
    c.seed = Some(7);
    let b = run_suite(&c).unwrap();
    assert_ne!(a.checks[0].inputs["seed"], b.checks[0].inputs["seed"]);
    assert_eq!(b.environment.seed, 7);
}
