use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use mincuts_core::cactus::{build_cactus, validate_cactus, Cactus};
use mincuts_core::compact::{audit_bounds, check_minimal, compact_cactus};
use mincuts_core::connectivity::all_min_cuts;
use mincuts_core::enumerate::enumerate_all_min_cuts;
use mincuts_core::generators;
use mincuts_core::graph::parse_graph;
use mincuts_core::oracle;
use mincuts_core::sparsify::{sparsify, verify_sparsifier};
use mincuts_core::{Cut, EdgeCut, MultiGraph};

#[derive(Parser)]
#[command(
    name = "mincuts",
    version,
    about = "Min-cut cactus pipeline: connectivity, cactus representations, \
             contraction sparsifier and explicit min-cut enumeration"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Edge connectivity and min-cut counts
    Mincut {
        /// Graph file (p/e lines); stdin when omitted
        input: Option<PathBuf>,
        /// Cross-check against the brute-force oracle (small graphs only)
        #[arg(long)]
        verify: bool,
        /// Vertex limit for the brute-force oracle
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        oracle_limit: usize,
    },
    /// Brute-force min-cut listing (ground truth, small graphs only)
    Oracle {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        oracle_limit: usize,
        /// Print only the counts
        #[arg(long)]
        count_only: bool,
    },
    /// Cactus representation of all min-cuts (cactus text format)
    Cactus {
        input: Option<PathBuf>,
        /// Validate both representation clauses before printing
        #[arg(long)]
        verify: bool,
    },
    /// Compact cactus for the non-trivial min-cuts, with bound audit
    Compact {
        input: Option<PathBuf>,
        /// Oracle-check the cut-family sandwich and minimality
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        oracle_limit: usize,
    },
    /// Contraction-based sparsifier H (graph text plus map lines)
    Sparsify {
        input: Option<PathBuf>,
        /// Oracle-check that every non-trivial min-cut survives
        #[arg(long)]
        verify: bool,
    },
    /// List every min-cut as its crossing edge ids
    Enumerate {
        input: Option<PathBuf>,
        /// Cross-check the listing against the brute-force oracle
        #[arg(long)]
        verify: bool,
        /// Print only the counts
        #[arg(long)]
        count_only: bool,
        /// Accepted for compatibility; enumeration is single-threaded so
        /// that output is byte-identical across runs
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        oracle_limit: usize,
    },
    /// Emit a generated graph in the text format
    Gen {
        /// One of: tightness, cycle, clique, random
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        lambda: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bound audit report for the full pipeline (key=value lines)
    Audit { input: Option<PathBuf> },
    /// Timing rows for a tightness-family sweep
    Bench {
        #[arg(long, default_value_t = 199)]
        delta: usize,
        #[arg(long, default_value_t = 4)]
        lambda: usize,
        /// Comma-separated clique counts r (n = r * (delta + 1))
        #[arg(long, default_value = "25,50,100")]
        rs: String,
    },
}

fn read_graph(input: &Option<PathBuf>) -> Result<MultiGraph> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .with_context(|| format!("reading {}", p.display()))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(parse_graph(&text)?)
}

fn oracle_cuts(g: &MultiGraph, limit: usize) -> Result<Vec<Cut>> {
    Ok(oracle::enumerate_min_cuts_bruteforce_with_limit(g, limit)?)
}

/// The pipeline prefix shared by compact/sparsify/audit.
fn compact_pipeline(g: &MultiGraph) -> Result<(Vec<Cut>, Cactus, Cactus)> {
    let cuts = all_min_cuts(g)?;
    let kc = build_cactus(g, &cuts)?;
    let kp = compact_cactus(&kc, g)?;
    Ok((cuts, kc, kp))
}

fn main() -> Result<()> {
    match Cli::parse().cmd {
        Command::Mincut {
            input,
            verify,
            oracle_limit,
        } => {
            let g = read_graph(&input)?;
            let cuts = all_min_cuts(&g)?;
            let lambda = cuts.first().map(|c| c.size()).unwrap_or(0);
            let trivial = cuts.iter().filter(|c| c.is_trivial()).count();
            println!("n={}", g.n());
            println!("m={}", g.m());
            println!("lambda={}", lambda);
            println!("min_cuts={}", cuts.len());
            println!("trivial={}", trivial);
            println!("non_trivial={}", cuts.len() - trivial);
            if verify {
                let expected = oracle_cuts(&g, oracle_limit)?;
                if cuts != expected {
                    bail!("verification failed: min-cut set differs from the oracle");
                }
                println!("verified=true");
            }
        }
        Command::Oracle {
            input,
            oracle_limit,
            count_only,
        } => {
            let g = read_graph(&input)?;
            let cuts = oracle_cuts(&g, oracle_limit)?;
            if !count_only {
                for c in &cuts {
                    println!("{}", g.crossing_edges(c.side())?.to_line(&g));
                }
            }
            let trivial = cuts.iter().filter(|c| c.is_trivial()).count();
            println!("lambda={}", cuts.first().map(|c| c.size()).unwrap_or(0));
            println!("min_cuts={}", cuts.len());
            println!("trivial={}", trivial);
            println!("non_trivial={}", cuts.len() - trivial);
        }
        Command::Cactus { input, verify } => {
            let g = read_graph(&input)?;
            let cuts = all_min_cuts(&g)?;
            let kc = build_cactus(&g, &cuts)?;
            if verify {
                let report = validate_cactus(&g, &kc, &cuts);
                if !report.pass() {
                    bail!("cactus validation failed: {:?}", report);
                }
                println!("# verified=true");
            }
            print!("{}", kc.to_text());
        }
        Command::Compact {
            input,
            verify,
            oracle_limit,
        } => {
            let g = read_graph(&input)?;
            let (cuts, _, kp) = compact_pipeline(&g)?;
            if verify {
                let nc: std::collections::BTreeSet<_> = cuts
                    .iter()
                    .filter(|c| !c.is_trivial())
                    .map(|c| c.side().clone())
                    .collect();
                let all: std::collections::BTreeSet<_> =
                    cuts.iter().map(|c| c.side().clone()).collect();
                let repr = kp.represented_sides();
                if !nc.iter().all(|s| repr.contains(s))
                    || !repr.iter().all(|s| all.contains(s))
                {
                    bail!("compact cactus violates the cut-family sandwich");
                }
                if g.n() > oracle_limit.max(64) {
                    bail!("graph too large for --verify minimality check");
                }
                if !check_minimal(&kp, &g)?.pass() {
                    bail!("compact cactus is not contraction-minimal");
                }
                println!("# verified=true");
            }
            print!("{}", kp.to_text());
            let audit = audit_bounds(&kp, g.n(), g.min_degree());
            println!("vertices_Kprime={}", audit.cactus_vertices);
            println!("bound={:.2}", audit.bound);
            println!("pass={}", audit.pass);
            println!("xylem_nodes={}", audit.xylem_nodes);
            println!("pruned_nodes={}", audit.pruned_nodes);
            println!("pruned_leaves={}", audit.pruned_leaves);
            println!("pruned_high_degree={}", audit.pruned_high_degree);
            println!("lean_paths={}", audit.lean_paths);
        }
        Command::Sparsify { input, verify } => {
            let g = read_graph(&input)?;
            let (_, _, kp) = compact_pipeline(&g)?;
            let (h, map) = sparsify(&g, &kp)?;
            if verify {
                let report = verify_sparsifier(&g, &h, &map)?;
                if !report.pass() {
                    bail!("sparsifier verification failed: {:?}", report.violations);
                }
                println!("# verified=true");
            }
            print!("{}", h.to_text());
            for (v, b) in map.iter().enumerate() {
                println!("map {} {}", v, b);
            }
        }
        Command::Enumerate {
            input,
            verify,
            count_only,
            threads: _,
            oracle_limit,
        } => {
            let g = read_graph(&input)?;
            let mut collected: Vec<EdgeCut> = Vec::new();
            let stats = {
                let mut sink = |c: &EdgeCut| {
                    if !count_only {
                        println!("{}", c.to_line(&g));
                    }
                    if verify {
                        collected.push(c.clone());
                    }
                };
                enumerate_all_min_cuts(&g, &mut sink)?
            };
            println!("lambda={}", stats.lambda);
            println!("dags={}", stats.dag_count);
            println!("from_dags={}", stats.from_dags);
            println!("trivial_added={}", stats.trivial_added);
            println!("min_cuts={}", stats.total);
            if verify {
                let expected: std::collections::BTreeSet<EdgeCut> =
                    oracle_cuts(&g, oracle_limit)?
                        .iter()
                        .map(|c| g.crossing_edges(c.side()).unwrap())
                        .collect();
                let got: std::collections::BTreeSet<EdgeCut> =
                    collected.iter().cloned().collect();
                if got.len() != collected.len() {
                    bail!("verification failed: duplicate cut emitted");
                }
                if got != expected {
                    bail!("verification failed: listing differs from the oracle");
                }
                println!("verified=true");
            }
        }
        Command::Gen {
            family,
            n,
            delta,
            lambda,
            p,
            seed,
        } => {
            let g = match family.as_str() {
                "tightness" => generators::tightness_graph(n, delta, lambda)?,
                "cycle" => generators::cycle_graph(n)?,
                "clique" => generators::clique(n)?,
                "random" => generators::random_connected(n, p, seed)?,
                other => bail!("unknown family: {}", other),
            };
            print!("{}", g.to_text());
        }
        Command::Audit { input } => {
            let g = read_graph(&input)?;
            let delta = g.min_degree();
            let (cuts, kc, kp) = compact_pipeline(&g)?;
            let lambda = cuts.first().map(|c| c.size()).unwrap_or(0);
            let trivial = cuts.iter().filter(|c| c.is_trivial()).count();
            let non_trivial = cuts.len() - trivial;
            let (h, _) = sparsify(&g, &kp)?;
            let audit = audit_bounds(&kp, g.n(), delta);
            println!("n={}", g.n());
            println!("m={}", g.m());
            println!("delta={}", delta);
            println!("lambda={}", lambda);
            println!("min_cuts={}", cuts.len());
            println!("trivial={}", trivial);
            println!("non_trivial={}", non_trivial);
            println!("vertices_K={}", kc.n_k());
            println!("vertices_Kprime={}", audit.cactus_vertices);
            println!("bound={:.2}", audit.bound);
            println!("pass={}", audit.pass);
            println!("h_vertices={}", h.n());
            println!("h_edges={}", h.m());
            let edge_bound = lambda * (audit.cactus_vertices.max(1) as u64 - 1);
            println!("edge_bound={}", edge_bound);
            println!("edge_bound_ok={}", h.m() as u64 <= edge_bound || h.n() < 2);
            // count audit: non-trivial cuts vs (n/delta)^2
            let ratio = if delta > 0 {
                non_trivial as f64 / (g.n() as f64 / delta as f64).powi(2)
            } else {
                0.0
            };
            println!("nc_per_ndelta_sq={:.4}", ratio);
            println!("xylem_nodes={}", audit.xylem_nodes);
            println!("pruned_nodes={}", audit.pruned_nodes);
            println!("pruned_leaves={}", audit.pruned_leaves);
            println!("pruned_high_degree={}", audit.pruned_high_degree);
            println!("lean_paths={}", audit.lean_paths);
        }
        Command::Bench { delta, lambda, rs } => {
            for tok in rs.split(',').filter(|t| !t.is_empty()) {
                let r: usize = tok.trim().parse().context("bad r value")?;
                let n = r * (delta + 1);
                let t0 = Instant::now();
                let g = generators::tightness_graph(n, delta, lambda)?;
                let t_gen = t0.elapsed();
                let t1 = Instant::now();
                let cuts = all_min_cuts(&g)?;
                let t_cuts = t1.elapsed();
                let t2 = Instant::now();
                let kc = build_cactus(&g, &cuts)?;
                let kp = compact_cactus(&kc, &g)?;
                let t_cactus = t2.elapsed();
                let t3 = Instant::now();
                let mut count = 0usize;
                let stats = enumerate_all_min_cuts(&g, &mut |_c| count += 1)?;
                let t_enum = t3.elapsed();
                // counts on stdout (deterministic), timings on stderr
                println!(
                    "bench r={} n={} m={} lambda={} kprime={} cuts={}",
                    r,
                    n,
                    g.m(),
                    stats.lambda,
                    kp.n_k(),
                    count
                );
                eprintln!(
                    "bench r={} t_gen_ms={} t_cuts_ms={} t_cactus_ms={} t_enum_ms={}",
                    r,
                    t_gen.as_millis(),
                    t_cuts.as_millis(),
                    t_cactus.as_millis(),
                    t_enum.as_millis()
                );
            }
        }
    }
    Ok(())
}
