//! Acceptance suite: ten numbered criteria covering closed forms, the two
//! independent genus-polynomial routes, the sweep identities, determinism,
//! and performance. Each test prints one "criterion N: PASS" line (visible
//! with `cargo test --test acceptance -- --nocapture`); a failed assertion
//! fails the corresponding test.

use std::process::Command;
use std::time::Instant;

use pdgp_core::bialgebra::{eval_on_projection, MultiplicativeInvariant};
use pdgp_core::chord::enumerate_diagrams;
use pdgp_core::gf2::Gf2Matrix;
use pdgp_core::graph::{
    complete_bipartite, complete_graph, enumerate_labeled_graphs, random_graph, SimpleGraph,
};
use pdgp_core::invariants::{
    four_term_defect, kmn_closed, kn_closed, pdgp, pdgp_capped, pdgp_k, pdgp_recursive,
    pdgp_refined, rank_invariant, skew_char, FourTermInvariant, FOUR_TERM_INVARIANTS,
};
use pdgp_core::poly::UniPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn criterion_01_closed_forms() {
    let start = Instant::now();
    for n in 1..=12 {
        assert_eq!(
            pdgp(&complete_graph(n).unwrap()).unwrap(),
            kn_closed(n).unwrap(),
            "complete graph n={n}"
        );
    }
    for m in 1..=6 {
        for n in 1..=6 {
            assert_eq!(
                pdgp(&complete_bipartite(m, n).unwrap()).unwrap(),
                kmn_closed(m, n).unwrap(),
                "complete bipartite m={m} n={n}"
            );
        }
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 30.0, "closed forms took {secs:.2}s, budget 30s");
    println!("criterion 1: PASS (K_n closed form n<=12, K_mn closed form m,n<=6, {secs:.2}s)");
}

#[test]
fn criterion_02_face_tracing_equals_rank_route() {
    let start = Instant::now();
    let mut diagrams = 0u64;
    for m in 0..=6 {
        for d in enumerate_diagrams(m).unwrap() {
            diagrams += 1;
            assert_eq!(
                d.pdgp_via_ribbon().unwrap(),
                pdgp(&d.intersection_graph()).unwrap(),
                "word={:?}",
                d.word()
            );
        }
    }
    let secs = start.elapsed().as_secs_f64();
    assert_eq!(diagrams, 1 + 1 + 3 + 15 + 105 + 945 + 10395);
    assert!(secs < 60.0, "diagram sweep took {secs:.2}s, budget 60s");
    println!("criterion 2: PASS ({diagrams} diagrams m<=6 agree across both routes, {secs:.2}s)");
}

#[test]
fn criterion_03_boundary_count_is_corank_plus_one() {
    let mut diagrams = 0u64;
    for m in 0..=6 {
        for d in enumerate_diagrams(m).unwrap() {
            diagrams += 1;
            let faces = d.boundary_components(d.full_mask());
            let rank = Gf2Matrix::from_graph(&d.intersection_graph()).rank();
            assert_eq!(faces, m - rank + 1, "word={:?}", d.word());
        }
    }
    println!("criterion 3: PASS (face count = corank + 1 on {diagrams} diagrams m<=6)");
}

#[test]
fn criterion_04_spanning_surface_genus_equals_subset_rank() {
    let mut checks = 0u64;
    for m in 0..=5 {
        for d in enumerate_diagrams(m).unwrap() {
            let mat = Gf2Matrix::from_graph(&d.intersection_graph());
            for a in 0u64..(1u64 << m) {
                assert_eq!(
                    d.euler_genus_spanning(a),
                    mat.rank_of_subset(a),
                    "word={:?} a={a:b}",
                    d.word()
                );
                checks += 1;
            }
        }
    }
    println!("criterion 4: PASS (spanning genus = subset rank, {checks} subset checks m<=5)");
}

#[test]
fn criterion_05_four_term_relation() {
    let start = Instant::now();
    let mut cases = 0u64;
    for n in 2..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    for f in FOUR_TERM_INVARIANTS {
                        assert!(
                            four_term_defect(f, &g, a, b).unwrap().is_zero(),
                            "{f:?} n={n} a={a} b={b} edges={:?}",
                            g.edges()
                        );
                    }
                    cases += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(n, rng.gen_range(0.1..0.9), rng.gen()).unwrap();
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        for f in FOUR_TERM_INVARIANTS {
            assert!(four_term_defect(f, &g, a, b).unwrap().is_zero(), "{f:?} random");
        }
        cases += 1;
    }
    // The unrefined skew characteristic polynomial is not part of the sweep:
    // it fails the relation, e.g. on this witness. The refined version and
    // the rank monomial stand in for it above.
    let witness = SimpleGraph::from_edge_list(4, &[(0, 1), (0, 2)]).unwrap();
    assert!(!four_term_defect(FourTermInvariant::SkewChar, &witness, 3, 1)
        .unwrap()
        .is_zero());
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 300.0, "four-term sweep took {secs:.2}s, budget 300s");
    println!(
        "criterion 5: PASS (defect zero for pdgp, refined pdgp, refined skew, rank on {cases} \
         graph/pair cases; unrefined skew excluded, nonzero witness pinned; {secs:.2}s)"
    );
}

#[test]
fn criterion_06_recurrence_matches_enumeration() {
    for n in 0..=6 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            assert_eq!(pdgp_recursive(&g).unwrap(), pdgp(&g).unwrap(), "n={n} edges={:?}", g.edges());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for case in 0..200 {
        let base_n = rng.gen_range(1..14);
        let base = random_graph(base_n, rng.gen_range(0.1..0.7), rng.gen()).unwrap();
        let mut edges = base.edges();
        edges.push((rng.gen_range(0..base_n), base_n));
        let g = SimpleGraph::from_edge_list(base_n + 1, &edges).unwrap();
        assert!((0..g.n()).any(|v| g.degree(v) == 1));
        assert_eq!(pdgp_recursive(&g).unwrap(), pdgp(&g).unwrap(), "case={case}");
    }
    println!("criterion 6: PASS (recurrence = enumeration, all graphs n<=6 plus 200 random n<=14)");
}

#[test]
fn criterion_07_structural_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..=6 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            let p = pdgp(&g).unwrap();
            assert_eq!(p.coefficient_sum().unwrap(), 1i128 << n, "mass n={n}");
            assert!(p.terms().all(|(e, _)| e % 2 == 0), "parity n={n}");
        }
    }
    for _ in 0..40 {
        let n = rng.gen_range(0..=8);
        let g = random_graph(n, rng.gen_range(0.1..0.9), rng.gen()).unwrap();
        assert_eq!(pdgp_refined(&g).unwrap().eval_w_at_one().unwrap(), pdgp(&g).unwrap());
    }
    for _ in 0..25 {
        let g = random_graph(rng.gen_range(0..=4), 0.5, rng.gen()).unwrap();
        let h = random_graph(rng.gen_range(0..=4), 0.5, rng.gen()).unwrap();
        let u = g.disjoint_union(&h).unwrap();
        assert_eq!(pdgp(&u).unwrap(), pdgp(&g).unwrap().mul(&pdgp(&h).unwrap()).unwrap());
    }
    for _ in 0..25 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(n, rng.gen_range(0.1..0.9), rng.gen()).unwrap();
        let expected = pdgp(&g)
            .unwrap()
            .sub(&rank_invariant(&g).scale(2).unwrap())
            .unwrap();
        assert_eq!(pdgp_k(&g, 2).unwrap(), expected, "two-part identity n={n}");
    }
    println!(
        "criterion 7: PASS (mass 2^n, even exponents, w=1 specialization, multiplicativity, \
         two-part identity)"
    );
}

#[test]
fn criterion_08_thread_count_determinism() {
    let exe = env!("CARGO_BIN_EXE_pdgp");
    let mut outputs = Vec::new();
    for threads in ["1", "2", "8"] {
        let out = Command::new(exe)
            .args(["compute", "--gen", "random:20,0.4,77", "--threads", threads])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "threads={threads}");
        outputs.push(out.stdout);
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
    assert!(!outputs[0].is_empty());
    println!("criterion 8: PASS (n=20 output byte-identical across 1, 2, 8 threads)");
}

#[test]
fn criterion_09_performance() {
    let g = random_graph(22, 0.5, 99).unwrap();
    let single_pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let serial = single_pool.install(|| pdgp_capped(&g, 22).unwrap());
    let serial_secs = start.elapsed().as_secs_f64();

    let eight_pool = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();
    let start = Instant::now();
    let parallel = eight_pool.install(|| pdgp_capped(&g, 22).unwrap());
    let parallel_secs = start.elapsed().as_secs_f64();

    assert_eq!(serial, parallel);
    assert!(serial_secs <= 120.0, "single-thread n=22 took {serial_secs:.2}s, budget 120s");
    assert!(parallel_secs <= 40.0, "8-thread n=22 took {parallel_secs:.2}s, budget 40s");
    println!(
        "criterion 9: PASS (n=22 pdgp, 1 thread {serial_secs:.2}s <= 120s, 8 threads \
         {parallel_secs:.2}s <= 40s)"
    );
}

#[test]
fn criterion_10_projection_tooling() {
    let mut connected = 0u64;
    for n in 1..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            if !g.is_connected() {
                continue;
            }
            connected += 1;
            eval_on_projection(MultiplicativeInvariant::Pdgp, &g).unwrap();
            let skew_value = eval_on_projection(MultiplicativeInvariant::SkewChar, &g).unwrap();
            // reported, not asserted constant
            let _ = skew_value.is_constant();
        }
    }
    let k2 = complete_graph(2).unwrap();
    let mut expect_pdgp = UniPoly::constant(-2);
    expect_pdgp.add_term(2, 2).unwrap();
    assert_eq!(
        eval_on_projection(MultiplicativeInvariant::Pdgp, &k2).unwrap(),
        pdgp_core::invariants::PolyValue::Uni(expect_pdgp)
    );
    let mut expect_skew = UniPoly::zero();
    expect_skew.add_term(1, -2).unwrap();
    expect_skew.add_term(2, -1).unwrap();
    assert_eq!(
        eval_on_projection(MultiplicativeInvariant::SkewChar, &k2).unwrap(),
        pdgp_core::invariants::PolyValue::Uni(expect_skew)
    );
    assert_eq!(skew_char(&k2).unwrap(), UniPoly::one());
    println!(
        "criterion 10: PASS (projection evaluated on {connected} connected graphs n<=5, K_2 \
         spot values exact)"
    );
}
