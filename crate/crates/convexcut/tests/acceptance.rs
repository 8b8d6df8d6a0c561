//! Acceptance suite: one test per shipped guarantee, each ending in a
//! single PASS line (visible with `--nocapture`; the test name itself is
//! the pass/fail line in normal runs).

use convexcut::alternating::{alternating_paths, arrange, eap_cut};
use convexcut::bipartite::{bipartite_convex_cuts, BipartiteOptions};
use convexcut::corpus::{
    free_trees, labeled_connected_bipartite, random_connected_bipartite, random_two_sided_partition,
};
use convexcut::cuts::{cut_edges, Cut};
use convexcut::embedding::PlaneEmbedding;
use convexcut::families::{generate, Family};
use convexcut::graph::Graph;
use convexcut::io::{parse_graph, serialize_graph};
use convexcut::oracle::{
    enumerate_convex_cuts, is_convex_cut, is_partial_cube, PartialCubeOutcome,
};
use convexcut::plane::{plane_convex_cuts, PlaneOptions};
use convexcut::relations::EdgeCompatibility;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::{Duration, Instant};

fn embedded(f: &Family) -> (Graph, PlaneEmbedding) {
    let gen = generate(f).unwrap();
    (gen.graph, gen.embedding.expect("family has an embedding"))
}

fn plane_corpus() -> Vec<Family> {
    vec![
        Family::Cycle(3),
        Family::Cycle(4),
        Family::Cycle(5),
        Family::Cycle(6),
        Family::Cycle(7),
        Family::Cycle(8),
        Family::Complete(4),
        Family::Wheel(4),
        Family::Wheel(5),
        Family::Wheel(6),
        Family::Grid(2, 2),
        Family::Grid(2, 3),
        Family::Grid(3, 3),
        Family::Grid(3, 4),
        Family::Hypercube(2),
        Family::Hypercube(3),
        Family::CompleteBipartite(2, 3),
        Family::CompleteBipartite(2, 4),
    ]
}

#[test]
fn criterion_1_bipartite_enumeration_matches_oracle() {
    let mut checked = 0usize;
    for n in 1..=6 {
        for g in labeled_connected_bipartite(n) {
            let got = bipartite_convex_cuts(&g, BipartiteOptions::default()).unwrap();
            let want = enumerate_convex_cuts(&g);
            assert_eq!(got.cuts, want, "exhaustive n={n}");
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20260815);
    for _ in 0..200 {
        let n = rng.gen_range(4..=14);
        let g = random_connected_bipartite(n, &mut rng);
        let got = bipartite_convex_cuts(&g, BipartiteOptions::default()).unwrap();
        let want = enumerate_convex_cuts(&g);
        assert_eq!(got.cuts, want, "random n={n} edges={:?}", g.edges());
        checked += 1;
    }
    println!("criterion 1 (bipartite enumeration vs oracle, {checked} graphs): PASS");
}

#[test]
fn criterion_2_plane_enumeration_matches_oracle() {
    let mut checked = 0usize;
    for fam in plane_corpus() {
        let (g, emb) = embedded(&fam);
        let got = plane_convex_cuts(&g, &emb, PlaneOptions::default()).unwrap();
        let got_cuts: Vec<Cut> = got.cuts.iter().map(|pc| pc.cut.clone()).collect();
        let want = enumerate_convex_cuts(&g);
        assert_eq!(got_cuts, want, "{fam:?}");
        checked += 1;
    }
    for seed in 0..50 {
        let n = 5 + (seed as usize % 6);
        let fam = Family::RandomPlane { vertices: n, seed };
        let (g, emb) = embedded(&fam);
        let got = plane_convex_cuts(&g, &emb, PlaneOptions::default()).unwrap();
        let got_cuts: Vec<Cut> = got.cuts.iter().map(|pc| pc.cut.clone()).collect();
        let want = enumerate_convex_cuts(&g);
        assert_eq!(got_cuts, want, "random plane n={n} seed={seed}");
        checked += 1;
    }
    println!("criterion 2 (plane enumeration vs oracle, {checked} graphs): PASS");
}

#[test]
fn criterion_3_named_graphs_have_expected_cut_counts() {
    let cases: Vec<(Family, usize)> = vec![
        (Family::Cycle(3), 3),
        (Family::Cycle(4), 2),
        (Family::Cycle(5), 5),
        (Family::Cycle(6), 3),
        (Family::Complete(4), 7),
        (Family::Wheel(4), 4),
        (Family::Wheel(5), 5),
        (Family::Grid(2, 3), 3),
        (Family::Grid(3, 3), 4),
        (Family::Grid(3, 4), 5),
        (Family::CompleteBipartite(2, 3), 0),
        (Family::Hypercube(3), 3),
    ];
    for (fam, want) in &cases {
        let (g, emb) = embedded(fam);
        let cuts = plane_convex_cuts(&g, &emb, PlaneOptions::default()).unwrap();
        assert_eq!(cuts.cuts.len(), *want, "{fam:?}");
    }
    // The four-dimensional hypercube is handled by the bipartite algorithm.
    let q4 = generate(&Family::Hypercube(4)).unwrap().graph;
    let cuts = bipartite_convex_cuts(&q4, BipartiteOptions::default()).unwrap();
    assert_eq!(cuts.cuts.len(), 4);
    // Every edge of a tree is a convex cut by itself, and nothing else is.
    for g in free_trees(7) {
        let want = enumerate_convex_cuts(&g);
        assert_eq!(want.len(), g.edge_count());
        assert!(want.iter().all(|c| c.edges().len() == 1));
    }
    println!(
        "criterion 3 (named cut counts, {} named + trees): PASS",
        cases.len() + 1
    );
}

#[test]
fn criterion_4_pairwise_compatibility_characterizes_convex_cuts() {
    let mut convex_pairs = 0usize;
    let mut non_convex = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for fam in plane_corpus() {
        let (g, _) = embedded(&fam);
        let compat = EdgeCompatibility::compute(&g);
        assert_eq!(
            compat.exclusivity_violation(g.edge_count()),
            None,
            "{fam:?}"
        );
        for cut in enumerate_convex_cuts(&g) {
            let edges = cut.edges();
            for (i, &e) in edges.iter().enumerate() {
                for &f in &edges[i + 1..] {
                    assert!(compat.compatible(e, f), "{fam:?} convex pair ({e},{f})");
                    // Exactly one mechanism grants compatibility.
                    assert!(
                        compat.has_child_theta_pair(e, f) != compat.tau.get(e, f),
                        "{fam:?} pair ({e},{f}) should satisfy exactly one relation"
                    );
                    convex_pairs += 1;
                }
            }
        }
        // Sampled connected bipartitions that are not convex must contain an
        // incompatible pair.
        let mut attempts = 0;
        while non_convex < 1000 && attempts < 200 {
            attempts += 1;
            let Some(side) = random_two_sided_partition(&g, &mut rng) else {
                continue;
            };
            if is_convex_cut(&g, &side).is_convex() {
                continue;
            }
            let edges = cut_edges(&g, &side);
            let found = edges
                .iter()
                .enumerate()
                .any(|(i, &e)| edges[i + 1..].iter().any(|&f| !compat.compatible(e, f)));
            assert!(
                found,
                "{fam:?} non-convex cut {edges:?} lacks an incompatible pair"
            );
            non_convex += 1;
        }
    }
    assert!(non_convex >= 1000, "only {non_convex} non-convex samples");
    println!(
        "criterion 4 (compatibility law, {convex_pairs} convex pairs, {non_convex} non-convex cuts): PASS"
    );
}

#[test]
fn criterion_5_partial_cube_recognition_and_labels() {
    let mut accepted = 0usize;
    let mut positives: Vec<Graph> = Vec::new();
    for n in [4, 6, 8, 10, 12] {
        positives.push(generate(&Family::Cycle(n)).unwrap().graph);
    }
    for d in 1..=4 {
        positives.push(generate(&Family::Hypercube(d)).unwrap().graph);
    }
    for n in 2..=9 {
        positives.push(generate(&Family::Path(n)).unwrap().graph);
        positives.extend(free_trees(n));
    }
    for g in &positives {
        let PartialCubeOutcome::PartialCube(cert) = is_partial_cube(g) else {
            panic!("expected a partial cube: {:?}", g.edges());
        };
        let table = g.distance_table();
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                assert_eq!(
                    cert.label_distance(u, v),
                    table.get(u, v),
                    "label distance mismatch at ({u},{v})"
                );
            }
        }
        accepted += 1;
    }

    let mut rejected = 0usize;
    for n in [3, 5, 7, 9] {
        let g = generate(&Family::Cycle(n)).unwrap().graph;
        let PartialCubeOutcome::NotBipartite { odd_cycle } = is_partial_cube(&g) else {
            panic!("odd cycle accepted");
        };
        assert_eq!(odd_cycle.len() % 2, 1);
        rejected += 1;
    }
    let k4 = generate(&Family::Complete(4)).unwrap().graph;
    assert!(matches!(
        is_partial_cube(&k4),
        PartialCubeOutcome::NotBipartite { .. }
    ));
    rejected += 1;
    let k23 = generate(&Family::CompleteBipartite(2, 3)).unwrap().graph;
    let PartialCubeOutcome::ThetaNotTransitive { e, f, h } = is_partial_cube(&k23) else {
        panic!("K2,3 accepted");
    };
    let table = k23.distance_table();
    let ee = k23.endpoints(e);
    let ff = k23.endpoints(f);
    let hh = k23.endpoints(h);
    use convexcut::relations::theta_related;
    assert!(theta_related(&table, ee, ff));
    assert!(theta_related(&table, ff, hh));
    assert!(!theta_related(&table, ee, hh));
    rejected += 1;
    println!(
        "criterion 5 (partial cubes: {accepted} accepted with exact labels, {rejected} rejected): PASS"
    );
}

#[test]
fn criterion_6_alternating_paths_and_arrangement() {
    let verdicts = [
        (Family::Cycle(4), true),
        (Family::Cycle(5), true),
        (Family::Cycle(6), true),
        (Family::Grid(3, 3), true),
        (Family::Grid(3, 4), true),
        (Family::Wheel(5), true),
        (Family::Complete(4), true),
        (Family::Hypercube(3), false),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (fam, want) in &verdicts {
        let (g, emb) = embedded(fam);
        let sys = alternating_paths(&g, &emb).unwrap();
        assert!(sys.coverage.iter().all(|&c| c == 2), "{fam:?} coverage");
        let count: usize = sys.paths.iter().map(|p| p.multiplicity as usize).sum();
        let mut order: Vec<usize> = (0..count).collect();
        let report = arrange(&g, &emb, &sys, &order);
        assert_eq!(report.well_arranged, *want, "{fam:?}");
        // The verdict is stable under seating order and reflection.
        use rand::seq::SliceRandom;
        for _ in 0..10 {
            order.shuffle(&mut rng);
            assert_eq!(
                arrange(&g, &emb, &sys, &order).well_arranged,
                *want,
                "{fam:?} reordered"
            );
        }
        let reflected = emb.reflected(&g);
        let sys_r = alternating_paths(&g, &reflected).unwrap();
        let count_r: usize = sys_r.paths.iter().map(|p| p.multiplicity as usize).sum();
        let order_r: Vec<usize> = (0..count_r).collect();
        assert_eq!(
            arrange(&g, &reflected, &sys_r, &order_r).well_arranged,
            *want,
            "{fam:?} reflected"
        );
        // On well-arranged graphs every open path induces a convex cut.
        if *want {
            for p in sys.paths.iter().filter(|p| !p.closed) {
                let cut = eap_cut(&g, p).unwrap();
                assert!(
                    is_convex_cut(&g, cut.side()).is_convex(),
                    "{fam:?} path {:?}",
                    p.edges
                );
            }
        }
    }
    println!(
        "criterion 6 (alternating layer on {} graphs, order/reflection stable): PASS",
        verdicts.len()
    );
}

#[test]
fn criterion_7_running_times_stay_polynomial() {
    // Timed twice, keeping the faster run, to damp scheduler noise.
    fn time_bipartite(g: &Graph) -> Duration {
        let mut best = Duration::MAX;
        for _ in 0..2 {
            let start = Instant::now();
            let cuts = bipartite_convex_cuts(g, BipartiteOptions::default()).unwrap();
            assert!(!cuts.cuts.is_empty());
            best = best.min(start.elapsed());
        }
        best
    }

    // Edge counts roughly doubling: 264, 480, 1012, 1984.
    let sizes = [12usize, 16, 23, 32];
    let mut times = Vec::new();
    for &k in &sizes {
        let g = generate(&Family::Grid(k, k)).unwrap().graph;
        let t = time_bipartite(&g);
        times.push((g.edge_count(), t));
    }
    let largest = times.last().unwrap();
    assert!(
        largest.1 < Duration::from_secs(60),
        "bipartite on {} edges took {:?}",
        largest.0,
        largest.1
    );
    for pair in times.windows(2) {
        let base = pair[0].1.max(Duration::from_millis(25));
        assert!(
            pair[1].1 <= base * 4,
            "time jumped from {:?} ({} edges) to {:?} ({} edges)",
            pair[0].1,
            pair[0].0,
            pair[1].1,
            pair[1].0
        );
    }

    let gen = generate(&Family::Grid(20, 20)).unwrap();
    let emb = gen.embedding.unwrap();
    let start = Instant::now();
    let cuts = plane_convex_cuts(&gen.graph, &emb, PlaneOptions::default()).unwrap();
    let plane_time = start.elapsed();
    assert_eq!(cuts.cuts.len(), 38);
    assert!(
        plane_time < Duration::from_secs(60),
        "plane on the 20x20 grid took {plane_time:?}"
    );
    println!(
        "criterion 7 (timings: bipartite {:?} on {} edges, plane {:?} on 20x20 grid): PASS",
        largest.1, largest.0, plane_time
    );
}

#[test]
fn criterion_8_cli_output_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_convexcut");
    let dir = std::env::temp_dir();
    let stamp = std::process::id();

    let write_gen = |name: &str, args: &[&str]| -> std::path::PathBuf {
        let out = Command::new(exe).args(args).output().unwrap();
        assert!(out.status.success(), "{args:?}");
        let path = dir.join(format!("convexcut-acc-{stamp}-{name}.txt"));
        std::fs::write(&path, &out.stdout).unwrap();
        path
    };
    let c6 = write_gen("c6", &["gen", "cycle", "6"]);
    let w5 = write_gen("w5", &["gen", "wheel", "5"]);
    let rp = write_gen("rp", &["gen", "random-plane", "9", "--seed", "7"]);

    let commands: Vec<Vec<&str>> = vec![
        vec!["bipartite", c6.to_str().unwrap()],
        vec!["bipartite", c6.to_str().unwrap(), "--parallel"],
        vec!["plane", w5.to_str().unwrap()],
        vec!["plane", rp.to_str().unwrap(), "--json"],
        vec!["oracle", w5.to_str().unwrap(), "--dot"],
        vec!["partial-cube", c6.to_str().unwrap(), "--json"],
        vec!["well-arranged", w5.to_str().unwrap()],
        vec!["alternating", rp.to_str().unwrap()],
        vec!["label", c6.to_str().unwrap()],
    ];
    for args in &commands {
        let a = Command::new(exe).args(args).output().unwrap();
        let b = Command::new(exe).args(args).output().unwrap();
        assert!(a.status.success(), "{args:?}: {:?}", a);
        assert_eq!(a.stdout, b.stdout, "{args:?} output differs across runs");
        assert!(!a.stdout.is_empty());
    }

    // Generated output parses back and re-serializes byte-identically.
    for path in [&c6, &w5, &rp] {
        let text = std::fs::read_to_string(path).unwrap();
        let parsed = parse_graph(&text).unwrap();
        let again = serialize_graph(
            &parsed.graph,
            parsed.rotation.as_deref(),
            parsed.outer.as_deref(),
        );
        assert_eq!(text, again, "round trip for {path:?}");
    }

    for path in [&c6, &w5, &rp] {
        let _ = std::fs::remove_file(path);
    }
    println!(
        "criterion 8 (CLI determinism over {} commands + round trips): PASS",
        commands.len()
    );
}
