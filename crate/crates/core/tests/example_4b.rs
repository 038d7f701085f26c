use krs_core::suites::{run_suite, RunConfig};
use krs_core::GridSize;

fn report() -> krs_core::report::Report {
    let cfg = RunConfig { timestamp: false, ..RunConfig::with_grid(GridSize::square(6).unwrap(), 6) };
    run_suite("examples-4b", &cfg).unwrap()
}

#[test]
fn corrected_reading_holds() {
    let r = report();
    for check in [
        "krs-monomial",
        "corrected:sigma-in-intersection",
        "corrected:krs-in-initial-ideal",
        "corrected:degree-shapes",
        "corrected:no-witness",
        "corrected:membership-routes",
    ] {
        assert_eq!(r.check_passed(check), Some(true), "{check}");
    }
}

#[test]
fn literal_reading_has_a_shape_411_witness() {
    let r = report();
    assert_eq!(r.check_passed("literal:no-witness"), Some(false));
    let s = serde_json::to_string(&r.slices).unwrap();
    assert!(s.contains("[2,3,4,5|1,2,5,6]·[1|4]·[6|3]"), "{s}");
}

#[test]
#[ignore = "the literal reading I_3^(2) ∩ I_4 admits a shape (4,1,1) witness"]
fn literal_reading_as_stated() {
    let r = report();
    assert_eq!(r.check_passed("literal:degree-shapes"), Some(true));
    assert_eq!(r.check_passed("literal:no-witness"), Some(true));
}
