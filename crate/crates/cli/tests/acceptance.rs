//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Everything here is exact; no tolerances beyond explicit interval widths.

use std::path::PathBuf;
use std::process::Command;

use sftc_core::correspondence::{compose, h_equivalent, Correspondence};
use sftc_core::covering::{cyclic_cover, lind_marcus_build, BijectionPolicy, CoverSide, CoveringMap};
use sftc_core::dimension::{DimGroupPres, LaggedHom, Side};
use sftc_core::equivalence::{
    find_intertwiner, h_inverse_pair_from_se, same_entropy, shift_equivalence_search,
    shift_equivalence_verify, ShiftEquivalenceWitness,
};
use sftc_core::graph::{
    cycle_graph, full_shift, golden_mean_graph, graph_from_adjacency, period, trim_essential,
    Graph,
};
use sftc_core::invariants::{count_closed_walks, kunneth_check, periodic_counts, zeta, zeta_series_check};
use sftc_core::linalg::{
    charpoly, compare_perron, isolate_max_real_root, refine_to_width,
};
use sftc_core::matrix::int_matrix;
use sftc_core::{Int, IntMatrix, Matrix, Rat};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn b0220() -> Graph {
    graph_from_adjacency(&int_matrix(&[&[0, 2], &[2, 0]]))
}

fn b22() -> Graph {
    graph_from_adjacency(&int_matrix(&[&[2, 2], &[2, 2]]))
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic supply of irreducible essential graphs with at most
/// `max_vertices` vertices.
fn random_irreducible(state: &mut u64, max_vertices: usize) -> Graph {
    loop {
        let n = 1 + (splitmix(state) % max_vertices as u64) as usize;
        let a = IntMatrix::from_fn(n, n, |_, _| Int::from((splitmix(state) % 3) as i64));
        let trimmed = trim_essential(&graph_from_adjacency(&a)).graph;
        if !trimmed.is_empty() && trimmed.is_irreducible() {
            return trimmed;
        }
    }
}

/// Randomized (F, G, H) instances with `F A_G = A_H F`, `F` nonzero
/// nonnegative with entries at most 3 and dimensions at most 4x4.
fn intertwined_instances(count: usize) -> Vec<(IntMatrix, Graph, Graph)> {
    let mut state = 0x5EED_0001u64;
    let mut out = Vec::new();
    let three = Int::from(3);
    while out.len() < count {
        let g = random_irreducible(&mut state, 4);
        let h = random_irreducible(&mut state, 4);
        let search = find_intertwiner(&g, &h, 2);
        if let Some(f) = search.intertwiner {
            if f.entries().iter().all(|e| *e <= three) {
                out.push((f, g.clone(), h.clone()));
            }
        }
        // A second, different intertwiner when the lattice is richer: scale
        // the least one by 2 if it stays within the entry bound.
        if let Some((f, _, _)) = out.last() {
            let doubled = f.scale(&Int::from(2));
            if doubled.entries().iter().all(|e| *e <= three) && out.len() < count {
                out.push((doubled, g, h));
            }
        }
    }
    out
}

#[test]
fn criterion_01_de_equals_f() {
    let instances = intertwined_instances(50);
    assert!(instances.len() >= 50);
    for (f, g, h) in &instances {
        let lm = lind_marcus_build(f, g, h, BijectionPolicy::Lex)
            .unwrap_or_else(|e| panic!("build failed for F={f} on {g:?}/{h:?}: {e}"));
        assert_eq!(&lm.d.mul(&lm.e), f, "D*E != F for F={f}");
    }
    println!(
        "ACCEPTANCE 1 (D*E = F on {} randomized instances): PASS",
        instances.len()
    );
}

#[test]
fn criterion_02_choice_invariance() {
    let instances = intertwined_instances(50);
    for (f, g, h) in &instances {
        let lex = lind_marcus_build(f, g, h, BijectionPolicy::Lex).unwrap();
        for seed in [1u64, 2] {
            let seeded = lind_marcus_build(f, g, h, BijectionPolicy::Seeded(seed)).unwrap();
            assert_eq!(lex.mid.vertex_ids(), seeded.mid.vertex_ids());
            assert_eq!(lex.d, seeded.d);
            assert_eq!(lex.e, seeded.e);
            let c_lex = Correspondence::from_lind_marcus(&lex).unwrap();
            let c_seeded = Correspondence::from_lind_marcus(&seeded).unwrap();
            assert!(h_equivalent(&c_lex, &c_seeded).unwrap());
        }
    }
    println!("ACCEPTANCE 2 (choice-invariance of the construction): PASS");
}

#[test]
fn criterion_03_functoriality_of_composition() {
    // Pool of graphs grouped by entropy; intertwiners exist inside groups.
    let pool = vec![
        full_shift(2),
        full_shift(3),
        full_shift(4),
        cycle_graph(2),
        cycle_graph(3),
        b0220(),
        b22(),
        golden_mean_graph(),
    ];
    let mut correspondences: Vec<Correspondence> = Vec::new();
    for g in &pool {
        for h in &pool {
            let search = find_intertwiner(g, h, 2);
            if let Some(f) = search.intertwiner {
                let lm = lind_marcus_build(&f, g, h, BijectionPolicy::Lex).unwrap();
                correspondences.push(Correspondence::from_lind_marcus(&lm).unwrap());
                let doubled = f.scale(&Int::from(2));
                let lm2 = lind_marcus_build(&doubled, g, h, BijectionPolicy::Lex).unwrap();
                correspondences.push(Correspondence::from_lind_marcus(&lm2).unwrap());
            }
        }
    }
    let mut checked = 0usize;
    'outer: for c1 in &correspondences {
        for c2 in &correspondences {
            if c1.right() != c2.left() {
                continue;
            }
            let composite = compose(c1, c2).unwrap().result.expect("nonempty composite");
            let maps = composite.induced_maps().unwrap();
            let expected_s = LaggedHom::compose(
                &c2.induced_maps().unwrap().s_map,
                &c1.induced_maps().unwrap().s_map,
            )
            .unwrap();
            assert!(maps.s_map.equal(&expected_s).unwrap());
            let expected_u = LaggedHom::compose(
                &c1.induced_maps().unwrap().u_map,
                &c2.induced_maps().unwrap().u_map,
            )
            .unwrap();
            assert!(maps.u_map.equal(&expected_u).unwrap());
            checked += 1;
            if checked >= 40 {
                break 'outer;
            }
        }
    }
    assert!(checked >= 30, "only {checked} composable pairs exercised");
    println!("ACCEPTANCE 3 (functoriality on {checked} composable pairs): PASS");
}

#[test]
fn criterion_04_n_to_one_lemma() {
    for k in [2usize, 3] {
        for n in [2u32, 3, 4] {
            let (_, hom) = cyclic_cover(k, n as usize);
            let left = CoveringMap::verify(hom.clone(), CoverSide::Left).unwrap();
            let right = CoveringMap::verify(hom, CoverSide::Right).unwrap();
            let composite =
                LaggedHom::compose(&left.induced_hom().unwrap(), &right.induced_hom().unwrap())
                    .unwrap();
            let base = DimGroupPres::from_graph(&full_shift(k), Side::Stable).unwrap();
            let n_id = LaggedHom::new(
                base.clone(),
                base,
                Matrix::identity(1).scale(&Int::from(n)),
                0,
            )
            .unwrap();
            assert!(
                composite.equal(&n_id).unwrap(),
                "D∘E != {n}·id for k={k}, n={n}"
            );
        }
    }
    println!("ACCEPTANCE 4 (n-to-one composite equals n·id for n=2,3,4; k=2,3): PASS");
}

#[test]
fn criterion_05_shift_equivalence_realization() {
    let cases = [
        (
            full_shift(2),
            full_shift(2),
            ShiftEquivalenceWitness {
                r: int_matrix(&[&[1]]),
                s: int_matrix(&[&[2]]),
                lag: 1,
            },
        ),
        (
            full_shift(4),
            b22(),
            ShiftEquivalenceWitness {
                r: int_matrix(&[&[1, 1]]),
                s: int_matrix(&[&[2], &[2]]),
                lag: 1,
            },
        ),
    ];
    for (g, h, w) in &cases {
        assert!(shift_equivalence_verify(g, h, w).unwrap().all());
        let pair = h_inverse_pair_from_se(g, h, w).unwrap();
        assert_eq!(pair.verified, [true; 4], "identities failed for {w:?}");
    }
    println!("ACCEPTANCE 5 (H-invertibility identities for both hand witnesses): PASS");
}

#[test]
fn criterion_06_entropy_trichotomy() {
    let fixtures = [
        full_shift(2),
        full_shift(3),
        full_shift(4),
        golden_mean_graph(),
        b0220(),
        cycle_graph(2),
    ];
    let width = Rat::new(Int::from(1), {
        let mut d = Int::from(1);
        for _ in 0..40 {
            d *= Int::from(2);
        }
        d
    });
    let mut pairs = 0usize;
    for i in 0..fixtures.len() {
        for j in i + 1..fixtures.len() {
            let (g, h) = (&fixtures[i], &fixtures[j]);
            // Ground truth: refine both Perron intervals to width 2^-40;
            // disjoint intervals separate the roots, and otherwise the gcd
            // of the squarefree parts must exhibit the shared root.
            let pa = charpoly(&g.adjacency()).unwrap().to_rational();
            let pb = charpoly(&h.adjacency()).unwrap().to_rational();
            let mut ia = isolate_max_real_root(&pa).unwrap();
            let mut ib = isolate_max_real_root(&pb).unwrap();
            refine_to_width(&mut ia, &width).unwrap();
            refine_to_width(&mut ib, &width).unwrap();
            let truth = if ia.hi <= ib.lo || ib.hi <= ia.lo {
                false
            } else {
                let shared = pa
                    .squarefree_part()
                    .gcd_monic(&pb.squarefree_part())
                    .primitive_normalized();
                assert!(
                    shared.degree().unwrap_or(0) >= 1,
                    "overlapping intervals need a common factor"
                );
                let chain = sftc_core::linalg::SturmChain::new(&shared.squarefree_part());
                let lo = if ia.lo < ib.lo { ia.lo.clone() } else { ib.lo.clone() };
                let hi = if ia.hi > ib.hi { ia.hi.clone() } else { ib.hi.clone() };
                assert_eq!(chain.count_in(&lo, &hi), 1, "shared root must be exhibited");
                true
            };
            let cmp = compare_perron(&g.adjacency(), &h.adjacency()).unwrap();
            assert_eq!(cmp.equal, truth, "pair ({i},{j}) decided wrongly");
            assert!(
                cmp.bisections <= 64,
                "pair ({i},{j}) used {} bisections",
                cmp.bisections
            );
            pairs += 1;
        }
    }
    assert_eq!(pairs, 15);
    println!("ACCEPTANCE 6 (entropy decisions on all 15 fixture pairs, <=64 bisections): PASS");
}

#[test]
fn criterion_07_zeta_consistency() {
    let fixtures = [
        full_shift(2),
        full_shift(3),
        full_shift(4),
        full_shift(6),
        cycle_graph(2),
        cycle_graph(3),
        golden_mean_graph(),
        b0220(),
        b22(),
    ];
    for g in &fixtures {
        assert!(zeta_series_check(g, 12), "series mismatch for {g:?}");
        let counts = periodic_counts(g, 6);
        for n in 1..=6u32 {
            assert_eq!(
                counts[(n - 1) as usize],
                count_closed_walks(g, n),
                "closed-walk count mismatch at n={n} for {g:?}"
            );
        }
    }
    println!("ACCEPTANCE 7 (zeta series to order 12; walk counts to n=6): PASS");
}

#[test]
fn criterion_08_kunneth_on_all_pairs() {
    let fixtures = [
        full_shift(2),
        full_shift(3),
        full_shift(4),
        golden_mean_graph(),
        b0220(),
        cycle_graph(2),
    ];
    let mut pairs = 0usize;
    for i in 0..fixtures.len() {
        for j in i + 1..fixtures.len() {
            let report = kunneth_check(&fixtures[i], &fixtures[j]);
            assert!(report.all(), "pair ({i},{j}) failed: {report:?}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, 15);
    println!("ACCEPTANCE 8 (Kronecker consistency on all 15 fixture pairs): PASS");
}

#[test]
fn criterion_09_hierarchy_arrows() {
    // Every pair with a verified H-invertible witness must agree on zeta
    // away from zero, period, and entropy.
    let pool = [
        full_shift(2),
        full_shift(3),
        full_shift(4),
        b0220(),
        b22(),
        cycle_graph(2),
        golden_mean_graph(),
    ];
    let mut verified_pairs = 0usize;
    for g in &pool {
        for h in &pool {
            let Some(w) = shift_equivalence_search(g, h, 2, 3).unwrap() else {
                continue;
            };
            let pair = h_inverse_pair_from_se(g, h, &w).unwrap();
            if pair.verified != [true; 4] {
                continue;
            }
            verified_pairs += 1;
            // Zeta away from zero: det(I - tA) already ignores nilpotent
            // directions, so compare denominators directly.
            assert_eq!(
                zeta(g).denominator(),
                zeta(h).denominator(),
                "zeta mismatch for an H-invertible pair"
            );
            assert_eq!(period(g).unwrap(), period(h).unwrap());
            assert!(same_entropy(g, h).unwrap());
        }
    }
    assert!(
        verified_pairs >= 8,
        "too few H-invertible pairs exercised: {verified_pairs}"
    );
    println!(
        "ACCEPTANCE 9 (hierarchy arrows on {verified_pairs} H-invertible pairs, no counterexample): PASS"
    );
}

#[test]
fn criterion_10_negative_control() {
    let g = full_shift(2);
    let h = golden_mean_graph();
    assert!(!same_entropy(&g, &h).unwrap());
    assert_eq!(find_intertwiner(&g, &h, 5).intertwiner, None);
    assert_eq!(shift_equivalence_search(&g, &h, 3, 3).unwrap(), None);

    // Exit code semantics of the binary: 0 decided, 2 unknown-within-bounds,
    // 1 error.
    let bin = env!("CARGO_BIN_EXE_sftc");
    let f = fixtures();
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs")
    };
    let full2 = f.join("full2.json");
    let golden = f.join("golden.json");
    let out = run(&[
        "entropy-cmp",
        "--g",
        full2.to_str().unwrap(),
        "--h",
        golden.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "entropy-cmp must decide");
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"verdict\": \"no\""));

    let out = run(&[
        "intertwiner",
        "--g",
        full2.to_str().unwrap(),
        "--h",
        golden.to_str().unwrap(),
        "--bound",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2), "empty bounded search exits 2");

    let out = run(&[
        "se-search",
        "--g",
        full2.to_str().unwrap(),
        "--h",
        golden.to_str().unwrap(),
        "--lag-max",
        "3",
        "--bound",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["period", "--g", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(1), "errors exit 1");

    println!("ACCEPTANCE 10 (negative control and exit-code semantics): PASS");
}
