//! End-to-end checks of the classification run: verdicts, the candidate
//! table, trace replayability and determinism.

use cohomog7::catalog;
use cohomog7::classify::report::group_display;
use cohomog7::classify::trace::{replay, FilterCheck, Outcome};
use cohomog7::classify::{enumerate_cases, run_classification, validate_diagram};
use cohomog7::obstructions::{HSide, VerdictKind};
use cohomog7::CompactAlgebra;

#[test]
fn verdict_summary() {
    let report = run_classification().unwrap();
    let mut verdicts = Vec::new();
    for group in &report.groups {
        for case in &group.cases {
            verdicts.push((case.g_compact.clone(), format!("{:?}", case.verdict.kind)));
        }
    }
    assert_eq!(
        verdicts,
        vec![
            ("g2".to_string(), "DiffeoSphere".to_string()),
            ("b2".to_string(), "Impossible".to_string()),
            ("a2".to_string(), "DiffeoSphere".to_string()),
            ("3a1".to_string(), "Impossible".to_string()),
            ("a1+a2".to_string(), "Impossible".to_string()),
            ("a1+b2".to_string(), "DiffeoSphere".to_string()),
            ("a3".to_string(), "Impossible".to_string()),
            ("b3".to_string(), "DiffeoSphere".to_string()),
            ("t1+a2".to_string(), "DiffeoSphere".to_string()),
            ("3a1".to_string(), "DiffeoSphere".to_string()),
            ("t1+2a1".to_string(), "Impossible".to_string()),
            ("2a1".to_string(), "Survivor".to_string()),
        ]
    );
}

#[test]
fn candidate_table_rows() {
    let report = run_classification().unwrap();
    let rows: Vec<(u32, String, String)> = report
        .table
        .iter()
        .map(|r| (r.n, r.g_display.clone(), r.k_display.clone()))
        .collect();
    assert_eq!(
        rows,
        vec![
            (1, "T^1 x SU(3)".to_string(), "SU(2)".to_string()),
            (2, "SU(2)^3".to_string(), "SU(2)".to_string()),
            (3, "T^1 x SU(2)^2".to_string(), "T^1".to_string()),
            (4, "SU(2)^2".to_string(), "{1}".to_string()),
        ]
    );
}

#[test]
fn unique_survivor() {
    let report = run_classification().unwrap();
    assert_eq!(report.survivors, vec!["2a1 / trivial".to_string()]);
    for group in &report.groups {
        for case in &group.cases {
            if case.verdict.kind == VerdictKind::Survivor {
                assert!(case.verdict.reasons.is_empty());
                assert_eq!(case.g_compact, "2a1");
            } else {
                assert!(
                    !case.verdict.reasons.is_empty(),
                    "({}, {})",
                    case.g,
                    case.k_name
                );
            }
        }
    }
}

#[test]
fn semisimple_threshold() {
    let report = run_classification().unwrap();
    for group in &report.groups {
        for case in &group.cases {
            let g = CompactAlgebra::parse(&case.g).unwrap();
            if g.semisimple_dim() > 6 {
                assert_ne!(case.verdict.kind, VerdictKind::Survivor, "{}", case.g);
            }
        }
    }
}

#[test]
fn every_trace_step_replays() {
    let report = run_classification().unwrap();
    let mut steps = 0;
    let mut check = |s: &cohomog7::classify::trace::TraceStep| {
        assert_eq!(
            replay(&s.filter),
            s.outcome,
            "replay drifted for {:?}",
            s.filter
        );
        steps += 1;
    };
    for s in &report.preamble {
        check(s);
    }
    for group in &report.groups {
        for s in &group.notes {
            check(s);
        }
        for case in &group.cases {
            for s in &case.trace {
                check(s);
            }
        }
    }
    assert!(
        steps > 60,
        "expected a substantial trace, got {steps} steps"
    );
}

#[test]
fn reports_are_deterministic() {
    let a = run_classification().unwrap().to_json();
    let b = run_classification().unwrap().to_json();
    assert_eq!(a, b);
    assert!(a.ends_with('\n'));
}

#[test]
fn verdict_reasons_carry_citations() {
    let report = run_classification().unwrap();
    for group in &report.groups {
        for case in &group.cases {
            for r in &case.verdict.reasons {
                assert!(!r.citation.is_empty());
            }
        }
    }
}

#[test]
fn enumeration_covers_every_admissible_pair() {
    // brute-force re-derivation of the case list from the catalog
    let enumeration = enumerate_cases(7).unwrap();
    let listed: Vec<(String, String)> = enumeration
        .groups
        .iter()
        .flat_map(|g| g.keys.iter().map(|k| (k.g.render(), k.k.sub.render())))
        .collect();
    // d = 0: every semisimple g of rank 2..3 with a maximal-rank isotropy
    for rank in 2..=3u32 {
        for dim in 6..=21u32 {
            for g in cohomog7::enumerate_algebras(rank, dim).unwrap() {
                if !g.is_semisimple() {
                    continue;
                }
                for k in cohomog7::classify::max_rank_isotropy_candidates(&g, g.dim() - 6) {
                    assert!(
                        listed.contains(&(g.render(), k.sub.render())),
                        "missing d=0 case ({}, {})",
                        g.render(),
                        k.sub.render()
                    );
                }
            }
        }
    }
    // d = 2: the rank-drop-two pairs
    for (k_rank, k_dims) in [(0u32, vec![0u32]), (1, vec![1, 3])] {
        for k_dim in k_dims {
            for g_rank in 2..=3u32 {
                if g_rank < k_rank + 2 {
                    continue;
                }
                if g_rank - k_rank != 2 {
                    continue;
                }
                for g in cohomog7::enumerate_algebras(g_rank, k_dim + 6).unwrap() {
                    assert!(
                        listed.iter().any(|(lg, _)| *lg == g.render()),
                        "missing d=2 case for {}",
                        g.render()
                    );
                }
            }
        }
    }
}

#[test]
fn diagram_checks() {
    let g = CompactAlgebra::parse("a2").unwrap();
    let k = catalog::lookup("t2_in_a2").unwrap();
    let u2 = HSide::Emb(catalog::lookup("u2_in_su3").unwrap());
    assert!(validate_diagram(&g, &k, &u2, &u2, (2, 2)).is_ok());

    let diagram = cohomog7::classify::GroupDiagram {
        g: CompactAlgebra::parse("g2").unwrap(),
        k: catalog::lookup("a2_in_g2").unwrap(),
        h: HSide::Group,
        h_prime: HSide::Group,
        sphere_dims: (6, 6),
    };
    assert!(diagram.validate().is_ok());

    // principal isotropy containing an ideal is rejected
    let g3 = CompactAlgebra::parse("3a1").unwrap();
    let bad_k = catalog::lookup("su2_factor0_in_3su2").unwrap();
    let h = HSide::Emb(catalog::lookup("su2xt2_in_3su2").unwrap());
    assert!(validate_diagram(&g3, &bad_k, &h, &h, (2, 2)).is_err());
}

#[test]
fn survivor_trace_has_no_fired_filters() {
    let report = run_classification().unwrap();
    let survivor = report
        .groups
        .iter()
        .flat_map(|g| g.cases.iter())
        .find(|c| c.verdict.kind == VerdictKind::Survivor)
        .unwrap();
    for step in &survivor.trace {
        assert!(
            matches!(step.filter, FilterCheck::Assumption { .. }),
            "survivor trace must not contain fired filters, found {:?}",
            step.filter
        );
    }
}

#[test]
fn table_feeding_enumerations() {
    // the slots the candidate table is read from
    assert_eq!(
        cohomog7::enumerate_algebras(2, 6).unwrap(),
        vec![CompactAlgebra::parse("2a1").unwrap()]
    );
    assert_eq!(
        cohomog7::enumerate_algebras(3, 7).unwrap(),
        vec![CompactAlgebra::parse("t1+2a1").unwrap()]
    );
    assert_eq!(
        cohomog7::enumerate_algebras(3, 9).unwrap(),
        vec![
            CompactAlgebra::parse("3a1").unwrap(),
            CompactAlgebra::parse("t1+a2").unwrap()
        ]
    );
}

#[test]
fn discrepancy_notes_present() {
    let report = run_classification().unwrap();
    let case3 = report
        .groups
        .iter()
        .flat_map(|g| g.cases.iter())
        .find(|c| c.g_compact == "t1+2a1")
        .unwrap();
    let invariant_step = case3
        .trace
        .iter()
        .find(|s| {
            s.filter
                == FilterCheck::InvariantCount {
                    expr: "sym2(V0+V2)*V2".into(),
                }
        })
        .expect("the invariant count is part of the trace");
    assert_eq!(invariant_step.outcome, Outcome::Count(1));
    assert!(invariant_step
        .note
        .as_deref()
        .unwrap()
        .starts_with("discrepancy"));
    // the independent fundamental-group fact closes the branch
    assert!(case3.trace.iter().any(|s| matches!(
        s.filter,
        FilterCheck::CurvatureFact {
            tag: cohomog7::obstructions::FactTag::S1xS3Pi1
        }
    )));
    assert_eq!(case3.verdict.kind, VerdictKind::Impossible);

    // the sp(2)-type singular orbit of a1+b2 is flagged too
    let a1b2 = report
        .groups
        .iter()
        .flat_map(|g| g.cases.iter())
        .find(|c| c.g_compact == "a1+b2")
        .unwrap();
    assert!(a1b2.trace.iter().any(|s| s
        .note
        .as_deref()
        .map(|n| n.starts_with("discrepancy"))
        .unwrap_or(false)));
}

#[test]
fn display_names() {
    let g = CompactAlgebra::parse("t1+2a1").unwrap();
    assert_eq!(group_display(&g), "T^1 x SU(2)^2");
    let g = CompactAlgebra::parse("b3").unwrap();
    assert_eq!(group_display(&g), "Spin(7)");
}
