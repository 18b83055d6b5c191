//! Acceptance suite. Each criterion is one test printing a single
//! `criterion N (...): pass|fail` line (visible under `--nocapture`).
//! The tests share a mutex so the timing-sensitive ones run alone.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::{Mutex, MutexGuard, OnceLock};
use std::time::{Duration, Instant};

use mincuts_cli::corpus::connected_graphs_up_to;
use mincuts_core::cactus::{build_cactus, validate_cactus, Cactus};
use mincuts_core::compact::{
    audit_bounds, build_xylem, check_minimal, compact_cactus, pattern_violations,
    prune_xylem,
};
use mincuts_core::connectivity::all_min_cuts;
use mincuts_core::enumerate::{
    build_d1, build_d2, contract_2cycles, embed_edges, enumerate_all_min_cuts,
    enumerate_from_cactus, CutDag,
};
use mincuts_core::flow::Dag;
use mincuts_core::generators::{random_connected, tightness_graph};
use mincuts_core::oracle::{enumerate_min_cuts_bruteforce, enumerate_min_cuts_maxflow};
use mincuts_core::sparsify::sparsify;
use mincuts_core::{Cut, EdgeCut, MultiGraph, VertexSet};

fn serial() -> MutexGuard<'static, ()> {
    static M: OnceLock<Mutex<()>> = OnceLock::new();
    M.get_or_init(|| Mutex::new(()))
        .lock()
        .unwrap_or_else(|e| e.into_inner())
}

fn report(n: usize, name: &str, failure: Option<String>) {
    println!(
        "criterion {} ({}): {}",
        n,
        name,
        if failure.is_none() { "pass" } else { "fail" }
    );
    if let Some(msg) = failure {
        panic!("criterion {} failed: {}", n, msg);
    }
}

/// 995 isomorphism representatives (n <= 7) plus 500 seeded random
/// connected graphs on 8..=10 vertices.
fn corpus() -> Vec<MultiGraph> {
    let mut out = connected_graphs_up_to(7);
    for seed in 0..500u64 {
        let n = 8 + (seed as usize) % 3;
        let p = 0.3 + 0.1 * ((seed % 4) as f64);
        out.push(random_connected(n, p, seed).unwrap());
    }
    out
}

/// Canonical bipartition: the side not containing vertex 0.
fn canon(side: &VertexSet) -> VertexSet {
    if side.contains(0) {
        side.complement()
    } else {
        side.clone()
    }
}

fn oracle_sides(g: &MultiGraph) -> BTreeSet<VertexSet> {
    enumerate_min_cuts_bruteforce(g)
        .unwrap()
        .iter()
        .map(|c| canon(c.side()))
        .collect()
}

fn enumerated(g: &MultiGraph) -> Vec<EdgeCut> {
    let mut out = Vec::new();
    enumerate_all_min_cuts(g, &mut |c| out.push(c.clone())).unwrap();
    out
}

fn pipeline(g: &MultiGraph) -> (Vec<Cut>, Cactus, Cactus) {
    let cuts = enumerate_min_cuts_bruteforce(g).unwrap();
    let kc = build_cactus(g, &cuts).unwrap();
    let kp = compact_cactus(&kc, g).unwrap();
    (cuts, kc, kp)
}

fn dag_family(g: &MultiGraph, kp: &Cactus) -> (MultiGraph, Vec<u32>, Vec<CutDag>) {
    let (h, g_to_h) = sparsify(g, kp).unwrap();
    let mut h_to_k1 = vec![0u32; h.n()];
    for v in 0..g.n() {
        h_to_k1[g_to_h[v] as usize] = kp.phi()[v];
    }
    let mut dags = build_d1(kp);
    let (k2, map) = contract_2cycles(kp).unwrap();
    dags.extend(build_d2(&k2, &map).unwrap());
    (h, h_to_k1, dags)
}

/// The big tightness instances (delta = 199, lambda = 4), built once and
/// shared by criteria 4 and 7: (r, graph, lambda, K', pre-phase time).
fn big_tightness() -> &'static [(usize, MultiGraph, u64, Cactus, Duration)] {
    static CACHE: OnceLock<Vec<(usize, MultiGraph, u64, Cactus, Duration)>> =
        OnceLock::new();
    CACHE.get_or_init(|| {
        [25usize, 50, 100]
            .iter()
            .map(|&r| {
                let g = tightness_graph(r * 200, 199, 4).unwrap();
                let t0 = Instant::now();
                let cuts = all_min_cuts(&g).unwrap();
                let lambda = cuts[0].size();
                let kc = build_cactus(&g, &cuts).unwrap();
                let kp = compact_cactus(&kc, &g).unwrap();
                (r, g, lambda, kp, t0.elapsed())
            })
            .collect()
    })
}

#[test]
fn criterion_1_oracle_equivalence() {
    let _lock = serial();
    let mut failure = None;
    for (i, g) in corpus().iter().enumerate() {
        let expected = oracle_sides(g);
        let cuts = enumerated(g);
        let got: BTreeSet<VertexSet> = cuts
            .iter()
            .map(|c| canon(&c.implied_side(g).unwrap()))
            .collect();
        if got.len() != cuts.len() {
            failure = Some(format!("graph {}: duplicate cut emitted", i));
            break;
        }
        if got != expected {
            failure = Some(format!(
                "graph {} (n={}): {} enumerated vs {} oracle cuts",
                i,
                g.n(),
                got.len(),
                expected.len()
            ));
            break;
        }
    }
    report(1, "oracle equivalence on the exhaustive corpus", failure);
}

#[test]
fn criterion_2_cactus_clauses() {
    let _lock = serial();
    let mut failure = None;
    for (i, g) in corpus().iter().enumerate() {
        let (cuts, kc, kp) = pipeline(g);
        if !validate_cactus(g, &kc, &cuts).pass() {
            failure = Some(format!("graph {}: cactus clauses violated", i));
            break;
        }
        let all: BTreeSet<VertexSet> = cuts.iter().map(|c| canon(c.side())).collect();
        let nc: BTreeSet<VertexSet> = cuts
            .iter()
            .filter(|c| !c.is_trivial())
            .map(|c| canon(c.side()))
            .collect();
        let repr: BTreeSet<VertexSet> =
            kp.represented_sides().iter().map(canon).collect();
        if !nc.iter().all(|s| repr.contains(s)) || !repr.iter().all(|s| all.contains(s))
        {
            failure = Some(format!("graph {}: sandwich violated", i));
            break;
        }
        if !check_minimal(&kp, g).unwrap().pass() {
            failure = Some(format!("graph {}: compact cactus not minimal", i));
            break;
        }
    }
    report(2, "cactus definition clauses and minimality", failure);
}

#[test]
fn criterion_3_tightness_counts() {
    let _lock = serial();
    let mut failure = None;
    'outer: for delta in [8usize, 12, 20] {
        for r in 3usize..=10 {
            let n = r * (delta + 1);
            let g = tightness_graph(n, delta, 4).unwrap();
            let cuts = enumerated(&g);
            let tag = format!("delta={} r={}", delta, r);
            if cuts.len() != r * (r - 1) / 2 {
                failure = Some(format!("{}: {} cuts", tag, cuts.len()));
                break 'outer;
            }
            for c in &cuts {
                let side = c.implied_side(&g).unwrap();
                if c.len() != 4 || side.len() < 2 || side.len() > n - 2 {
                    failure = Some(format!("{}: bad cut shape", tag));
                    break 'outer;
                }
            }
            if r <= 7 && n <= 64 {
                let expected: BTreeSet<VertexSet> = enumerate_min_cuts_maxflow(&g)
                    .unwrap()
                    .iter()
                    .map(|c| canon(c.side()))
                    .collect();
                let got: BTreeSet<VertexSet> = cuts
                    .iter()
                    .map(|c| canon(&c.implied_side(&g).unwrap()))
                    .collect();
                if got != expected {
                    failure = Some(format!("{}: max-flow oracle disagrees", tag));
                    break 'outer;
                }
            }
        }
    }
    report(3, "tightness family counts", failure);
}

#[test]
fn criterion_4_bound_audits() {
    let _lock = serial();
    let mut failure = None;

    let check = |tag: String, g: &MultiGraph, lambda: u64, kp: &Cactus| {
        let audit = audit_bounds(kp, g.n(), g.min_degree());
        if !audit.pass {
            return Some(format!("{}: |V(K')| bound violated", tag));
        }
        let (h, _) = sparsify(g, kp).unwrap();
        let vertex_budget = audit.cactus_vertices.saturating_sub(1) as u64;
        if h.m() as u64 > lambda * vertex_budget {
            return Some(format!("{}: |E(H)| bound violated", tag));
        }
        None
    };

    for (i, g) in corpus().iter().enumerate() {
        let (cuts, _, kp) = pipeline(g);
        failure = check(format!("corpus {}", i), g, cuts[0].size(), &kp);
        if failure.is_some() {
            break;
        }
    }
    if failure.is_none() {
        'outer: for delta in [8usize, 12, 20] {
            for r in 3usize..=10 {
                let g = tightness_graph(r * (delta + 1), delta, 4).unwrap();
                let cuts = all_min_cuts(&g).unwrap();
                let kc = build_cactus(&g, &cuts).unwrap();
                let kp = compact_cactus(&kc, &g).unwrap();
                failure = check(
                    format!("tightness delta={} r={}", delta, r),
                    &g,
                    cuts[0].size(),
                    &kp,
                );
                if failure.is_some() {
                    break 'outer;
                }
            }
        }
    }
    if failure.is_none() {
        for (r, g, lambda, kp, _) in big_tightness() {
            failure = check(format!("tightness delta=199 r={}", r), g, *lambda, kp);
            if failure.is_some() {
                break;
            }
        }
    }
    report(4, "vertex and edge bound audits up to n = 20,000", failure);
}

fn edge_distribution_failure(g: &MultiGraph, kc: &Cactus, lambda: u64) -> Option<String> {
    for (ci, cyc) in kc.cycles().iter().enumerate() {
        let k = cyc.len();
        if k < 3 {
            continue;
        }
        if lambda % 2 != 0 {
            return Some("odd lambda with a long cycle".into());
        }
        let sides: Vec<VertexSet> = cyc
            .iter()
            .map(|&v| kc.preimage(&kc.side_of_cycle(ci, v).unwrap()))
            .collect();
        for i in 0..k {
            for j in i + 1..k {
                let between = g
                    .edges()
                    .iter()
                    .filter(|e| {
                        sides[i].contains(e.u as usize) != sides[i].contains(e.v as usize)
                            && sides[j].contains(e.u as usize)
                                != sides[j].contains(e.v as usize)
                    })
                    .count() as u64;
                let adjacent = j == i + 1 || (i == 0 && j == k - 1);
                let want = if adjacent { lambda / 2 } else { 0 };
                if between != want {
                    return Some(format!(
                        "cycle {}: {} edges between positions {} and {}",
                        ci, between, i, j
                    ));
                }
            }
        }
    }
    None
}

fn singleton_adjacency_failure(kx: &Cactus) -> Option<String> {
    let jdeg = kx.junction_degrees();
    let pre = kx.preimage_counts();
    let s1j = |v: u32| jdeg[v as usize] == 1 && pre[v as usize] == 1;
    for cyc in kx.cycles() {
        let k = cyc.len();
        for p in 0..k {
            if s1j(cyc[p]) && s1j(cyc[(p + 1) % k]) {
                return Some("adjacent 1-junction singletons".into());
            }
        }
    }
    None
}

fn leaf_characterization_failure(g: &MultiGraph, kp: &Cactus) -> Option<String> {
    if kp.n_k() < 2 {
        return None;
    }
    let x = build_xylem(kp);
    let xp = prune_xylem(&x, kp);
    if !xp.is_tree() {
        return Some("pruned xylem is not a tree".into());
    }
    // the leaf characterization rests on singleton non-adjacency, which
    // needs delta >= 3
    if g.min_degree() < 3 {
        return None;
    }
    let jdeg = kp.junction_degrees();
    let pre = kp.preimage_counts();
    let expected: Vec<usize> = (0..kp.n_k())
        .filter(|&v| jdeg[v] == 1 && pre[v] > 1)
        .collect();
    if xp.leaves() != expected {
        return Some("pruned-xylem leaves are not the 1-junction non-singletons".into());
    }
    if expected.iter().any(|&l| pre[l] < g.min_degree()) {
        return Some("leaf preimage smaller than the minimum degree".into());
    }
    None
}

#[test]
fn criterion_5_structural_invariants() {
    let _lock = serial();
    let mut failure = None;
    for (i, g) in corpus().iter().enumerate() {
        let (cuts, kc, kp) = pipeline(g);
        let lambda = cuts[0].size();
        let violations = pattern_violations(&kp);
        let mut fail = if violations.is_empty() {
            None
        } else {
            Some(violations.join("; "))
        };
        if fail.is_none() {
            fail = edge_distribution_failure(g, &kc, lambda);
        }
        if fail.is_none() && g.min_degree() >= 3 {
            fail = singleton_adjacency_failure(&kc).or_else(|| singleton_adjacency_failure(&kp));
        }
        if fail.is_none() {
            fail = leaf_characterization_failure(g, &kp);
        }
        if let Some(msg) = fail {
            failure = Some(format!("graph {} (n={}): {}", i, g.n(), msg));
            break;
        }
    }
    report(5, "structural invariants suite", failure);
}

#[test]
fn criterion_6_closed_set_preservation() {
    let _lock = serial();
    let mut failure = None;
    let mut graphs = corpus();
    for delta in [8usize, 12] {
        for r in 3..=6 {
            graphs.push(tightness_graph(r * (delta + 1), delta, 4).unwrap());
        }
    }
    'outer: for (i, g) in graphs.iter().enumerate() {
        let kp = if g.n() <= 20 {
            pipeline(g).2
        } else {
            let cuts = all_min_cuts(g).unwrap();
            let kc = build_cactus(g, &cuts).unwrap();
            compact_cactus(&kc, g).unwrap()
        };
        let (h, h_to_k1, dags) = dag_family(g, &kp);
        for a in &dags {
            if a.dag.len() > 20 {
                continue;
            }
            let ap = embed_edges(a, &h, &h_to_k1).unwrap();
            let mut succ = vec![Vec::new(); ap.dag.len()];
            for &(u, v, _) in &ap.embedded {
                succ[u].push(v);
            }
            let rebuilt = Dag {
                succ,
                s: ap.dag.s,
                t: ap.dag.t,
            };
            let before: BTreeSet<VertexSet> = a.dag.closed_sets().into_iter().collect();
            let after: BTreeSet<VertexSet> = rebuilt.closed_sets().into_iter().collect();
            if before != after {
                failure = Some(format!("graph {}: closed sets changed by embedding", i));
                break 'outer;
            }
        }
    }
    report(6, "closed-set preservation A <=> A'", failure);
}

fn vm_hwm_bytes() -> u64 {
    let status = std::fs::read_to_string("/proc/self/status").unwrap();
    let line = status.lines().find(|l| l.starts_with("VmHWM:")).unwrap();
    let kib: u64 = line.split_whitespace().nth(1).unwrap().parse().unwrap();
    kib * 1024
}

#[test]
fn criterion_7_scaling_sanity() {
    let _lock = serial();
    let mut failure = None;
    let mut post = Vec::new();
    for (r, g, lambda, kp, pre) in big_tightness() {
        let t0 = Instant::now();
        let mut count = 0usize;
        enumerate_from_cactus(g, *lambda, kp, &mut |_c| count += 1).unwrap();
        let t_post = t0.elapsed();
        post.push((*r, t_post));
        if *r == 100 {
            let total = *pre + t_post;
            if count != 100 * 99 / 2 {
                failure = Some(format!("r=100: {} cuts", count));
            } else if total > Duration::from_secs(60) {
                failure = Some(format!("r=100: end-to-end {:?}", total));
            }
        }
    }
    if failure.is_none() {
        let hwm = vm_hwm_bytes();
        if hwm >= 1 << 30 {
            failure = Some(format!("peak memory {} bytes", hwm));
        }
    }
    if failure.is_none() {
        // post-cactus phase must grow at most quadratically in r = n / (delta+1)
        let t25 = post[0].1.as_secs_f64().max(0.005);
        let t100 = post[2].1.as_secs_f64();
        let slope = (t100 / t25).ln() / 4f64.ln();
        if slope > 2.3 {
            failure = Some(format!(
                "post-cactus slope {:.2} (times {:?})",
                slope, post
            ));
        }
    }
    report(7, "scaling sanity at n = 20,000", failure);
}

#[test]
fn criterion_8_determinism() {
    let _lock = serial();
    let bin = env!("CARGO_BIN_EXE_mincuts");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, random_connected(10, 0.45, 3).unwrap().to_text()).unwrap();
    let file = path.to_str().unwrap();

    let runs: Vec<Vec<&str>> = vec![
        vec!["gen", "--family", "tightness", "--n", "27", "--delta", "8", "--lambda", "4"],
        vec!["mincut", file, "--verify"],
        vec!["oracle", file],
        vec!["cactus", file, "--verify"],
        vec!["compact", file, "--verify"],
        vec!["sparsify", file, "--verify"],
        vec!["enumerate", file, "--verify"],
        vec!["audit", file],
        vec!["bench", "--delta", "8", "--lambda", "4", "--rs", "3,4"],
    ];
    let mut failure = None;
    for args in &runs {
        let run = || {
            let out = Command::new(bin).args(args).output().unwrap();
            assert!(out.status.success(), "{:?}: {:?}", args, out);
            out.stdout
        };
        if run() != run() {
            failure = Some(format!("{:?}: output differs between runs", args));
            break;
        }
    }
    report(8, "byte-identical output across runs", failure);
}
