//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line
//! each, and exits non-zero if any failed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scc_core::oracle::{reachability_partition, tarjan_scc};
use scc_core::{
    format_partition, generate_graph, parse_edge_list, solve, solve_counted, solve_observed,
    AugmentedDisjointSet, DirectedGraph, GeneratorSpec, GraphKind, OpCounters, SccPartition,
};

use common::{forest_partition, four_vertex_graph, random_small_graph, MinLevelAudit, NaiveDsu};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn generate(kind: GraphKind, seed: u64) -> DirectedGraph {
    generate_graph(&GeneratorSpec::new(kind, seed)).expect("valid spec")
}

fn exhaustive_four_vertex() -> Outcome {
    for mask in 0..=u16::MAX {
        let g = four_vertex_graph(mask);
        let got = solve(&g);
        let want = reachability_partition(&g);
        ensure!(
            got == want,
            "mask {mask:#06x}: solver {:?} vs oracle {:?}",
            got.members(),
            want.members()
        );
    }
    Ok("65536 graphs".into())
}

fn randomized_differential() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1FF);
    for i in 0..1000 {
        let g = random_small_graph(&mut rng, 64);
        let got = solve(&g);
        let by_reach = reachability_partition(&g);
        let by_tarjan = tarjan_scc(&g);
        ensure!(
            got == by_reach,
            "graph {i}: disagrees with reachability oracle"
        );
        ensure!(got == by_tarjan, "graph {i}: disagrees with tarjan");
    }
    Ok("1000 graphs, n <= 64, m <= 4n".into())
}

fn structured_generators() -> Outcome {
    let mut runs = 0;
    for n in [1, 2, 3, 10, 100, 1_000, 10_000] {
        let p = solve(&generate(GraphKind::Cycle { n }, 0));
        ensure!(
            p.component_count() == 1,
            "cycle({n}) gave {} components",
            p.component_count()
        );

        let p = solve(&generate(GraphKind::Path { n }, 0));
        ensure!(
            p.component_count() == n,
            "path({n}) gave {} components",
            p.component_count()
        );

        for seed in 0..3 {
            let m = if n < 2 { 0 } else { 4 * n };
            let p = solve(&generate(GraphKind::Dag { n, m }, seed));
            ensure!(
                p.component_count() == n,
                "dag({n},{m}) seed {seed}: {} components",
                p.component_count()
            );
        }

        for k in (1..=n).filter(|k| n % k == 0).take(12) {
            let p = solve(&generate(GraphKind::CycleChain { n, k }, 0));
            ensure!(
                p.component_count() == k,
                "cycle_chain({n},{k}): {} components",
                p.component_count()
            );
            ensure!(
                p.members().iter().all(|c| c.len() == n / k),
                "cycle_chain({n},{k}): unequal component sizes"
            );
            runs += 1;
        }
        runs += 5;
    }
    Ok(format!("{runs} generated graphs, n up to 10^4"))
}

fn proof_cases() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xCA5E);
    let mut intra = 0;
    for i in 0..1000 {
        let g = random_small_graph(&mut rng, 64);
        let got = solve(&g);
        let truth = reachability_partition(&g);
        for (u, v) in g.edges() {
            if truth.same_component(u, v) {
                intra += 1;
                ensure!(
                    got.same_component(u, v),
                    "graph {i}: intra-component edge {u}->{v} not merged"
                );
            }
        }
    }
    let mut acyclic = 0;
    for n in [1usize, 2, 5, 20, 64, 500] {
        for seed in 0..20 {
            acyclic += 1;
            let m = if n < 2 {
                0
            } else {
                rng.random_range(0..=4 * n)
            };
            let (p, c) = solve_counted(&generate(GraphKind::Dag { n, m }, seed));
            ensure!(
                c.unions_performed == 0,
                "dag({n},{m}) seed {seed}: {} unions",
                c.unions_performed
            );
            ensure!(
                p.component_count() == n,
                "dag({n},{m}) seed {seed}: not all singletons"
            );
        }
        acyclic += 1;
        let (_, c) = solve_counted(&generate(GraphKind::Path { n }, 0));
        ensure!(
            c.unions_performed == 0,
            "path({n}): {} unions",
            c.unions_performed
        );
    }
    Ok(format!(
        "{intra} intra-component edges merged; {acyclic} acyclic inputs with zero unions"
    ))
}

fn min_level_invariant() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1E7E1);
    let mut observations = 0;
    for i in 0..200 {
        let g = random_small_graph(&mut rng, 64);
        let mut audit = MinLevelAudit::default();
        let p = solve_observed(&g, &mut OpCounters::default(), &mut audit);
        ensure!(
            audit.violations.is_empty(),
            "graph {i}: {}",
            audit.violations.join("; ")
        );
        ensure!(p == tarjan_scc(&g), "graph {i}: wrong partition");
        observations += audit.observations;
    }
    Ok(format!("200 graphs, {observations} observation points"))
}

fn complexity_proxy() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in [1_000usize, 10_000, 100_000] {
        for seed in 0..3 {
            let g = generate(GraphKind::Random { n, m: 5 * n }, seed);
            let (p, c) = solve_counted(&g);
            let ratio = c.find_link_traversals as f64 / (n + 5 * n) as f64;
            worst = worst.max(ratio);
            ensure!(
                ratio <= 6.0,
                "n={n} seed={seed}: find links / (n+m) = {ratio:.3} > 6"
            );
            ensure!(
                c.unions_performed == (n - p.component_count()) as u64,
                "n={n} seed={seed}: {} unions but n - c = {}",
                c.unions_performed,
                n - p.component_count()
            );
        }
    }
    Ok(format!("worst find links / (n+m) = {worst:.3}"))
}

fn deep_cycle() -> Outcome {
    // A deliberately small stack: a recursive traversal of a 10^5-vertex
    // cycle could not fit in it.
    let handle = std::thread::Builder::new()
        .stack_size(256 * 1024)
        .spawn(|| solve(&generate(GraphKind::Cycle { n: 100_000 }, 0)).component_count())
        .map_err(|e| e.to_string())?;
    let count = handle
        .join()
        .map_err(|_| "solver thread panicked".to_string())?;
    ensure!(count == 1, "cycle(10^5) gave {count} components");
    Ok("cycle(10^5) on a 256 KiB stack".into())
}

fn golden_output() -> Outcome {
    let input = include_str!("data/triangle_tail.txt");
    let expected = include_str!("data/triangle_tail.out");
    ensure!(expected == "2\n1 2 3 \n4 \n", "golden file content drifted");
    let graph = parse_edge_list(input).map_err(|e| e.to_string())?;
    let out = format_partition(&solve(&graph));
    ensure!(out == expected, "got {out:?}");
    Ok("byte-exact".into())
}

fn dsu_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD5);

    // find idempotence and one-hop second lookup
    for _ in 0..200 {
        let n = rng.random_range(1..=200);
        let mut ds = AugmentedDisjointSet::new(n);
        for _ in 0..n {
            ds.union_components(rng.random_range(0..n), rng.random_range(0..n))
                .unwrap();
        }
        for x in 0..n {
            let root = ds.find(x).unwrap();
            ensure!(
                ds.find(root).unwrap() == root,
                "find(find({x})) != find({x})"
            );
            let before = ds.find_link_traversals();
            ensure!(ds.find(x).unwrap() == root, "second find({x}) changed root");
            let hops = ds.find_link_traversals() - before;
            let want = u64::from(x != root);
            ensure!(
                hops == want,
                "second find({x}) took {hops} hops, expected {want}"
            );
        }
    }

    // full compression of forced chains
    for len in 2..=64usize {
        let parents: Vec<usize> = (0..len).map(|i| (i + 1).min(len - 1)).collect();
        let mut ds =
            AugmentedDisjointSet::from_parent_forest(parents).map_err(|e| e.to_string())?;
        ensure!(ds.find(0).unwrap() == len - 1, "chain {len}: wrong root");
        ensure!(
            (0..len).all(|v| ds.parent(v) == Some(len - 1)),
            "chain {len}: path not fully compressed"
        );
    }

    // height bound after 10^5 random operations
    let n = 4096usize;
    let bound = n.ilog2() + 1;
    let mut ds = AugmentedDisjointSet::new(n);
    for _ in 0..100_000 {
        let x = rng.random_range(0..n);
        if rng.random_bool(0.5) {
            ds.union_components(x, rng.random_range(0..n)).unwrap();
        } else {
            ds.find(x).unwrap();
        }
    }
    for root in ds.roots() {
        let h = ds.height(root).unwrap();
        ensure!(h <= bound, "root {root} height {h} exceeds {bound}");
    }

    // partition equivalence with the naive oracle
    for seq in 0..10_000 {
        let n = rng.random_range(1..=40);
        let mut ds = AugmentedDisjointSet::new(n);
        let mut naive = NaiveDsu::new(n);
        for _ in 0..rng.random_range(0..=60) {
            let x = rng.random_range(0..n);
            let y = rng.random_range(0..n);
            if rng.random_bool(0.7) {
                ds.union_components(x, y).unwrap();
                naive.union(x, y);
            } else {
                ds.find(x).unwrap();
            }
        }
        let got: SccPartition = forest_partition(&ds);
        ensure!(
            got == naive.partition(),
            "sequence {seq}: partitions differ"
        );
    }
    Ok("idempotence, chain compression, height bound, 10^4 naive-oracle sequences".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "exhaustive oracle equivalence on all 4-vertex digraphs",
            exhaustive_four_vertex,
        ),
        (
            "randomized differential testing against both oracles",
            randomized_differential,
        ),
        ("structured generator identities", structured_generators),
        (
            "intra-component edges merged, acyclic inputs never merge",
            proof_cases,
        ),
        (
            "min-level table matches the traversal stack",
            min_level_invariant,
        ),
        ("operation-count complexity proxy", complexity_proxy),
        ("deep cycle without stack exhaustion", deep_cycle),
        ("byte-exact component listing", golden_output),
        ("disjoint-set unit suite", dsu_suite),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {}. {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
