//! The shipped fixture corpus must match what the library generates.
//! Run with FIXTURE_WRITE=1 to regenerate the files under fixtures/.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Serialize;
use sftc_core::correspondence::{Correspondence, RawCorrespondence};
use sftc_core::covering::{
    cyclic_cover, lind_marcus_build, BijectionPolicy, CoverSide, CoveringMap, RawCovering,
};
use sftc_core::equivalence::ShiftEquivalenceWitness;
use sftc_core::graph::{
    cycle_graph, full_shift, golden_mean_graph, graph_from_adjacency, RawEdge, RawGraph,
};
use sftc_core::matrix::int_matrix;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn canonical<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

fn check_or_write(name: &str, content: &str, failures: &mut Vec<String>) {
    let path = fixtures_dir().join(name);
    if std::env::var("FIXTURE_WRITE").is_ok() {
        std::fs::create_dir_all(fixtures_dir()).unwrap();
        std::fs::write(&path, content).unwrap();
        return;
    }
    match std::fs::read_to_string(&path) {
        Ok(found) if found == content => {}
        Ok(_) => failures.push(format!("{name}: content drifted from generator")),
        Err(e) => failures.push(format!("{name}: {e}")),
    }
}

/// The distinguished H-equivalent-but-not-isomorphic partner to the
/// lexicographic build of F=[2] over the full 2-shift: the matching that
/// pairs each outgoing label with the same incoming label produces two
/// disjoint 2-loop components.
fn disconnected_partner() -> RawCorrespondence {
    let full2 = full_shift(2).to_raw();
    let fa = "F:v:v:0";
    let fb = "F:v:v:1";
    let edge = |src: &str, dst: &str, label: &str| RawEdge {
        id: format!("{src}>{dst}[{label},{label}]"),
        src: src.to_string(),
        dst: dst.to_string(),
    };
    let m = RawGraph {
        vertices: vec![fa.to_string(), fb.to_string()],
        edges: vec![
            edge(fa, fa, "e0"),
            edge(fa, fa, "e1"),
            edge(fb, fb, "e0"),
            edge(fb, fb, "e1"),
        ],
    };
    let vertex_map: BTreeMap<String, String> = [(fa, "v"), (fb, "v")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let edge_map: BTreeMap<String, String> = m
        .edges
        .iter()
        .map(|e| {
            let label = if e.id.contains("[e0") { "e0" } else { "e1" };
            (e.id.clone(), label.to_string())
        })
        .collect();
    RawCorrespondence {
        g: full2.clone(),
        h: full2,
        m,
        theta_u: RawCovering {
            side: CoverSide::Right,
            vertex_map: vertex_map.clone(),
            edge_map: edge_map.clone(),
        },
        theta_s: RawCovering {
            side: CoverSide::Left,
            vertex_map,
            edge_map,
        },
    }
}

#[test]
fn shipped_fixtures_match_generator() {
    let mut failures = Vec::new();

    for (name, graph) in [
        ("full2.json", full_shift(2)),
        ("full3.json", full_shift(3)),
        ("full4.json", full_shift(4)),
        ("full6.json", full_shift(6)),
        ("cycle2.json", cycle_graph(2)),
        ("cycle3.json", cycle_graph(3)),
        ("golden.json", golden_mean_graph()),
        (
            "b0220.json",
            graph_from_adjacency(&int_matrix(&[&[0, 2], &[2, 0]])),
        ),
        (
            "b22.json",
            graph_from_adjacency(&int_matrix(&[&[2, 2], &[2, 2]])),
        ),
    ] {
        check_or_write(name, &canonical(&graph.to_raw()), &mut failures);
    }

    check_or_write("f2.json", &canonical(&int_matrix(&[&[2]])), &mut failures);

    // Double cover of the full 2-shift as a correspondence.
    let (cover, hom) = cyclic_cover(2, 2);
    let dc = Correspondence::new(
        full_shift(2),
        full_shift(2),
        cover,
        CoveringMap::verify(hom.clone(), CoverSide::Right).unwrap(),
        CoveringMap::verify(hom, CoverSide::Left).unwrap(),
    )
    .unwrap();
    check_or_write("double_cover.json", &canonical(&dc.to_raw()), &mut failures);

    // H-equivalent pair with non-isomorphic middle shifts.
    let lex = Correspondence::from_lind_marcus(
        &lind_marcus_build(
            &int_matrix(&[&[2]]),
            &full_shift(2),
            &full_shift(2),
            BijectionPolicy::Lex,
        )
        .unwrap(),
    )
    .unwrap();
    check_or_write("corr_he_a.json", &canonical(&lex.to_raw()), &mut failures);
    let partner_raw = disconnected_partner();
    let partner = Correspondence::from_raw(&partner_raw).unwrap();
    check_or_write(
        "corr_he_b.json",
        &canonical(&partner.to_raw()),
        &mut failures,
    );
    // The pair really is the advertised phenomenon.
    assert!(sftc_core::correspondence::h_equivalent(&lex, &partner).unwrap());
    assert!(
        sftc_core::correspondence::presented_isomorphic_corr(&lex, &partner)
            .unwrap()
            .is_none()
    );

    for (name, witness) in [
        (
            "witness_full2.json",
            ShiftEquivalenceWitness {
                r: int_matrix(&[&[1]]),
                s: int_matrix(&[&[2]]),
                lag: 1,
            },
        ),
        (
            "witness_full4_b22.json",
            ShiftEquivalenceWitness {
                r: int_matrix(&[&[1, 1]]),
                s: int_matrix(&[&[2], &[2]]),
                lag: 1,
            },
        ),
    ] {
        check_or_write(name, &canonical(&witness), &mut failures);
    }

    assert!(failures.is_empty(), "fixture drift:\n{}", failures.join("\n"));
}
