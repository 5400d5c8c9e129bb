//! Suite-level integration: the smoke grid passes, reports serialize
//! deterministically, and every registered check fails (with a witness)
//! under its negative-control mutation.

use schurpf::verify::suite::run_suite_with;
use schurpf::verify::{registry_ids, run_suite, Status, SuiteLevel};

#[test]
fn smoke_suite_all_pass() {
    let reports = run_suite(SuiteLevel::Smoke, 1);
    assert!(reports.len() >= 18, "{} reports", reports.len());
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{}", r.human_line());
    }
}

#[test]
fn smoke_suite_reports_are_seed_deterministic() {
    let a = run_suite(SuiteLevel::Smoke, 7);
    let b = run_suite(SuiteLevel::Smoke, 7);
    let norm = |rs: &[schurpf::verify::VerificationReport]| -> String {
        let list: Vec<_> = rs.iter().map(|r| r.normalized()).collect();
        serde_json::to_string(&list).unwrap()
    };
    assert_eq!(norm(&a), norm(&b));
}

#[test]
fn every_check_fails_under_its_mutation() {
    for id in registry_ids() {
        let reports = run_suite_with(SuiteLevel::Smoke, 1, Some(id));
        let failed: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).collect();
        assert_eq!(
            failed.len(),
            1,
            "tampering {id} should fail exactly once, got {:?}",
            failed.iter().map(|r| &r.id).collect::<Vec<_>>()
        );
        assert_eq!(failed[0].id, id);
        assert!(
            failed[0].witness.is_some(),
            "tampered {id} must carry a witness"
        );
    }
}

#[test]
fn tampered_sundquist_fails_with_point_witness() {
    let reports = run_suite_with(SuiteLevel::Smoke, 1, Some("sundquist-1"));
    let bad = reports
        .iter()
        .find(|r| r.status == Status::Fail)
        .expect("one failure");
    assert_eq!(bad.id, "sundquist-1");
    match &bad.witness {
        Some(schurpf::verify::Witness::Point { assignment, .. }) => {
            assert!(!assignment.is_empty());
        }
        other => panic!("expected a point witness, got {other:?}"),
    }
}
