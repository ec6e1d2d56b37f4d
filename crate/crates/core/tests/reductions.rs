use kinfluence::catalog::{all_graphs_up_to, connected_graphs_up_to};
use kinfluence::graph::{named, Graph};
use kinfluence::oracles::{decide_influence, is_clique, SearchConfig};
use kinfluence::propagation::propagate;
use kinfluence::reductions::{
    basic_reduction, clique_reduction, constant_threshold_instance, dks_reduction,
    majority_hardness_instance, verify_reduction, Fault, ReductionKind, ReductionOutput,
    VerifyParams,
};

fn assert_provenance_total(out: &ReductionOutput) {
    let n = out.instance.graph.n();
    assert_eq!(out.labels.len(), n);
    assert_eq!(out.params.expected_vertices, n);
    let text = out.provenance_text();
    assert_eq!(text.lines().count(), n);
    for (i, line) in text.lines().enumerate() {
        assert!(line.starts_with(&format!("{i} ")));
    }
    assert!(out.image.iter().all(|&v| v < n));
}

#[test]
fn every_construction_labels_every_vertex() {
    for g in connected_graphs_up_to(4).iter().filter(|g| g.n() >= 2) {
        assert_provenance_total(&basic_reduction(g).unwrap());
        assert_provenance_total(&majority_hardness_instance(g, 2, 2).unwrap());
        assert_provenance_total(&constant_threshold_instance(g, 2, 2, 3).unwrap());
        assert_provenance_total(&clique_reduction(g, 2).unwrap());
        assert_provenance_total(&dks_reduction(g, 1).unwrap());
    }
}

#[test]
fn small_equivalences_hold() {
    let cfg = SearchConfig::default();
    for g in all_graphs_up_to(4).iter().flatten() {
        for k in 1..=3 {
            if g.is_connected() {
                let r =
                    verify_reduction(ReductionKind::Basic, g, VerifyParams::new(k), &cfg).unwrap();
                assert_eq!(r.agree, Some(true), "basic {g:?} k={k}");
            }
            if k >= 2 {
                let r =
                    verify_reduction(ReductionKind::Clique, g, VerifyParams::new(k), &cfg).unwrap();
                assert_eq!(r.agree, Some(true), "clique {g:?} k={k}");
            }
            if k < g.n() {
                let r =
                    verify_reduction(ReductionKind::Dks, g, VerifyParams::new(k), &cfg).unwrap();
                assert_eq!(r.agree, Some(true), "dks {g:?} k={k}");
            }
        }
    }
}

#[test]
fn clique_forward_map_reaches_target() {
    let k4 = named::complete(4);
    for k in 2..=4 {
        let out = clique_reduction(&k4, k).unwrap();
        let clique: Vec<usize> = (0..k).collect();
        assert!(is_clique(&k4, &clique));
        let s = out.forward_map(&clique).unwrap();
        let tr = propagate(&out.instance.graph, &out.instance.thresholds, &s);
        assert!(tr.open_value() >= out.instance.ell.unwrap());
    }
}

#[test]
fn fault_injection_is_detected() {
    let cfg = SearchConfig::default();
    let mut params = VerifyParams::new(2);
    params.fault = Some(Fault {
        vertex: 5,
        threshold: 3,
    });
    let r = verify_reduction(ReductionKind::Basic, &named::g5(), params, &cfg).unwrap();
    assert!(r.faulted);
    assert_eq!(r.agree, Some(false));
}

#[test]
fn unsupported_verifications_are_errors() {
    let cfg = SearchConfig::default();
    let g = named::path(3);
    assert!(verify_reduction(ReductionKind::Majority, &g, VerifyParams::new(1), &cfg).is_err());
    assert!(verify_reduction(ReductionKind::Dks, &g, VerifyParams::new(3), &cfg).is_err());
    assert!(majority_hardness_instance(&Graph::empty(2), 1, 1).is_err());
    assert!(constant_threshold_instance(&Graph::empty(1), 1, 1, 1).is_err());
}

#[test]
fn clique_no_instance_has_no_witness() {
    let out = clique_reduction(&named::cycle(5), 3).unwrap();
    let r = decide_influence(&out.instance, &SearchConfig::default()).unwrap();
    assert!(!r.answer);
    assert!(r.witness.is_none());
}
