//! Corrupt one fixture entry at a time and check that the report pins it.

use icosa_a5::fixtures::Fixtures;
use icosa_a5::verify::{CheckStatus, Verifier};

fn flagged(f: Fixtures) -> Vec<(String, CheckStatus)> {
    Verifier::new(f)
        .all()
        .checks
        .into_iter()
        .filter(|c| c.status != CheckStatus::Pass)
        .map(|c| (c.name, c.status))
        .collect()
}

fn errata(name: &str) -> Vec<(String, CheckStatus)> {
    vec![(name.to_string(), CheckStatus::Errata)]
}

#[test]
fn published_fixtures_are_clean() {
    let report = Verifier::published().all();
    assert!(report.passed());
    assert_eq!(report.summary.errata, 0);
    assert_eq!(report.summary.pass, report.summary.total);
}

#[test]
fn vertex_row_typo() {
    let mut f = Fixtures::published();
    let row = f.table1.iter_mut().find(|r| r.name == "B").unwrap();
    row.images.swap(0, 1);
    assert_eq!(flagged(f), errata("table1/B"));
}

#[test]
fn three_cycle_typo() {
    let mut f = Fixtures::published();
    f.table2[4].cycle = "(2,5,3)".into();
    assert_eq!(flagged(f), errata("table2/B"));
}

#[test]
fn edge_axis_typo() {
    let mut f = Fixtures::published();
    f.table3[14].second = ["3+".into(), "2''".into()];
    assert_eq!(flagged(f), errata("table3/TD"));
}

#[test]
fn double_transposition_typo() {
    let mut f = Fixtures::published();
    f.table4[0].result = "(3,5)(1,4)(2)".into();
    assert_eq!(flagged(f), errata("table4/CZ"));
}

#[test]
fn trivial_cycle_must_be_fixed() {
    let mut f = Fixtures::published();
    f.table4[0].result = "(3,4)(1,5)(3)".into();
    assert_eq!(flagged(f), errata("table4/CZ"));
}

#[test]
fn vertex_rotation_typo() {
    let mut f = Fixtures::published();
    f.table5[3].fixed = ["1".into(), "2''".into()];
    assert_eq!(flagged(f), errata("table5/W^2A"));
}

#[test]
fn five_cycle_factor_typo() {
    let mut f = Fixtures::published();
    f.table6[4].product = "(2,3,5)(1,4,3)".into();
    assert_eq!(flagged(f), errata("table6/S5"));
}

#[test]
fn power_row_typo() {
    let mut f = Fixtures::published();
    // Q6^3 becomes Q6^2: the row is wrong, and Q6^3 is no longer listed.
    f.table7[0].exponent = 2;
    let flagged = flagged(f);
    assert!(flagged.contains(&("table7/(1,2,3,4,5)".to_string(), CheckStatus::Errata)));
    assert!(flagged.iter().all(|(_, s)| *s == CheckStatus::Errata));
}

#[test]
fn broken_generator_fails() {
    let mut f = Fixtures::published();
    let d = f.table1.iter_mut().find(|r| r.name == "D").unwrap();
    d.images.swap(0, 1);
    let report = Verifier::new(f).all();
    assert!(!report.passed());
    assert!(report.summary.fail > 0);
}

#[test]
fn false_relation_fails() {
    let mut f = Fixtures::published();
    f.relations[3] = "(DT)^3=I".into();
    assert_eq!(
        flagged(f),
        vec![("relations/(DT)^3=I".to_string(), CheckStatus::Fail)]
    );
}

#[test]
fn report_counts_add_up() {
    let mut f = Fixtures::published();
    f.table2[0].cycle = "(1,5,4)".into();
    let report = Verifier::new(f).all();
    let s = &report.summary;
    assert_eq!(s.total, report.checks.len());
    assert_eq!(s.pass + s.fail + s.errata, s.total);
    assert_eq!(s.errata, 1);
    assert!(report.passed());
}
