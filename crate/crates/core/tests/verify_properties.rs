mod common;

use braidknot::braid::BraidWord;
use braidknot::families::{cable_braid, klink_braid, torus_braid, KLinkSpec, Validation};
use braidknot::invariants::{Level, Limits};
use braidknot::verify::{
    check_equivalent, run_suite, scan_conjecture, CaseKind, RunOptions, ScanStatus, Status, SuiteId,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn klink(pairs: &[(i64, i64)]) -> BraidWord {
    klink_braid(&KLinkSpec::new(pairs.to_vec()), Validation::Relaxed).unwrap()
}

fn shuffle(w: &BraidWord, rng: &mut ChaCha8Rng) -> BraidWord {
    let mut v = w.clone();
    for _ in 0..6 {
        let m = common::random_move(rng, &v, w.strands() + 1, w.len() + 8);
        v = v.apply_move(&m).unwrap();
    }
    v
}

#[test]
fn consistent_verdicts_survive_presentation_changes() {
    let lim = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pairs = [
        (klink(&[(5, 2), (2, 2)]), torus_braid(2, 7).unwrap()),
        (klink(&[(3, 3), (2, 2)]), klink(&[(5, 2), (3, 1)])),
        (klink(&[(6, 2), (4, 3)]), klink(&[(4, 5), (3, 1)])),
        (
            klink(&[(5, 4), (2, 2)]),
            cable_braid(&BraidWord::new(2, vec![1; 3]).unwrap(), 2, 5).unwrap(),
        ),
    ];
    for (a, b) in &pairs {
        let base = check_equivalent(a, b, Level::Full, &lim);
        assert_eq!(base.status, Status::Consistent, "{a} vs {b}");
        for _ in 0..4 {
            let (x, y) = (shuffle(a, &mut rng), shuffle(b, &mut rng));
            let v = check_equivalent(&x, &y, Level::Full, &lim);
            assert_eq!(v.status, Status::Consistent, "{x} vs {y}");
            // genus only appears for positive words, so compare the rest
            let core = |e: &Vec<braidknot::verify::Evidence>| -> Vec<_> {
                e.iter()
                    .filter(|x| x.invariant != "genus")
                    .cloned()
                    .collect()
            };
            assert_eq!(core(&v.evidence), core(&base.evidence), "{x} vs {y}");
        }
    }
}

#[test]
fn every_suite_has_distinct_negative_controls() {
    let opts = RunOptions::default();
    for id in SuiteId::ALL {
        let params = match id {
            SuiteId::MorimotoYamada => vec![vec![8, 3]],
            SuiteId::LemmaSymmetry => vec![vec![8, 3]],
            SuiteId::AnswerMorimoto => vec![vec![1], vec![2]],
            _ => Vec::new(),
        };
        let report = run_suite(id, &params, &opts).unwrap();
        let controls: Vec<_> = report
            .cases
            .iter()
            .filter(|c| c.kind == CaseKind::NegativeControl)
            .collect();
        assert!(!controls.is_empty(), "{id} has no negative control");
        for c in controls {
            assert_eq!(c.status, Status::Distinct, "{id}: {}", c.case);
        }
        for c in &report.cases {
            assert_ne!(
                c.left, c.right,
                "{id}: {} compares an object with itself",
                c.case
            );
            assert_ne!(c.status, Status::Skipped, "{id}: {}", c.case);
        }
    }
}

#[test]
fn declared_cases_appear_once_in_order() {
    let opts = RunOptions::default();
    let r = run_suite(SuiteId::TorusLemma, &[], &opts).unwrap();
    // five stated cases and one control after the first
    assert_eq!(r.cases.len(), 6);
    assert_eq!(r.cases[1].kind, CaseKind::NegativeControl);
    let ps: Vec<i64> = r
        .cases
        .iter()
        .filter(|c| c.kind == CaseKind::Stated)
        .map(|c| c.params["p"])
        .collect();
    assert_eq!(ps, [5, 5, 7, 7, 4]);
    assert!(r.all_expected());
}

#[test]
fn framing_corrected_cases_hold_where_stated_ones_fail() {
    let opts = RunOptions::default();
    for (id, params) in [
        (SuiteId::AnswerMorimoto, vec![vec![1], vec![2]]),
        (SuiteId::Theorem5, vec![vec![2, 1]]),
    ] {
        let r = run_suite(id, &params, &opts).unwrap();
        for c in &r.cases {
            match c.kind {
                CaseKind::FramingCorrected => {
                    assert_eq!(c.status, Status::Consistent, "{}", c.case)
                }
                CaseKind::Stated => assert_eq!(c.status, Status::Distinct, "{}", c.case),
                CaseKind::NegativeControl => assert_eq!(c.status, Status::Distinct),
            }
        }
    }
}

#[test]
fn lemma_symmetry_reports_mirror_chirality() {
    let r = run_suite(
        SuiteId::LemmaSymmetry,
        &[vec![8, 3]],
        &RunOptions::default(),
    )
    .unwrap();
    let c = &r.cases[0];
    assert_eq!(c.status, Status::Consistent);
    assert_eq!(c.chirality, Some(braidknot::verify::Chirality::Mirror));
}

#[test]
fn scan_examples() {
    let lim = Limits::default();
    let r = scan_conjecture(9, 8, 200, &lim).unwrap();
    let row = r.rows.iter().find(|row| row.knot == "T(5,4;2,1)").unwrap();
    assert_eq!(row.status, ScanStatus::Flagged);
    assert_eq!(row.blackboard_cable_s, Some(1));

    let r = scan_conjecture(7, 2, 200, &lim).unwrap();
    assert!(!r.rows.is_empty());
    assert!(r
        .rows
        .iter()
        .all(|row| row.seifert_cable_s.is_none() && row.blackboard_cable_s.is_none()));

    assert!(scan_conjecture(2, 8, 200, &lim).unwrap().rows.is_empty());
    assert!(scan_conjecture(1000, 8, 200, &lim).is_err());
}
