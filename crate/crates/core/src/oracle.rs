//! Ground truth: brute-force enumeration of all min-cuts. Deliberately
//! simple and obviously correct; every other module is checked against it.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Cut, MultiGraph};
use crate::vertex_set::VertexSet;

/// Default vertex limit for the 2^(n-1) bitmask scan.
pub const DEFAULT_LIMIT: usize = 20;

/// Every min-cut of `g`, once, in canonical form, sorted. Scans all
/// 2^(n-1) canonical bipartitions.
pub fn enumerate_min_cuts_bruteforce(g: &MultiGraph) -> Result<Vec<Cut>> {
    enumerate_min_cuts_bruteforce_with_limit(g, DEFAULT_LIMIT)
}

pub fn enumerate_min_cuts_bruteforce_with_limit(
    g: &MultiGraph,
    limit: usize,
) -> Result<Vec<Cut>> {
    let n = g.n();
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    if n < 2 {
        return Err(Error::TooFewVertices(2));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // bit b of a mask is vertex b+1; vertex 0 always on the other side
    let edge_bits: Vec<(u64, u64)> = g
        .edges()
        .iter()
        .map(|e| {
            let bit = |v: u32| -> u64 {
                if v == 0 {
                    0
                } else {
                    1u64 << (v - 1)
                }
            };
            (bit(e.u), bit(e.v))
        })
        .collect();
    let mut best = u64::MAX;
    let mut sides: Vec<u64> = Vec::new();
    for mask in 1u64..1 << (n - 1) {
        let mut size = 0u64;
        for &(bu, bv) in &edge_bits {
            if (mask & bu != 0) != (mask & bv != 0) {
                size += 1;
            }
        }
        if size < best {
            best = size;
            sides.clear();
        }
        if size == best {
            sides.push(mask);
        }
    }
    Ok(sides
        .into_iter()
        .map(|mask| {
            let side = VertexSet::from_iter(
                n,
                (0..n - 1).filter(|&b| mask >> b & 1 == 1).map(|b| b + 1),
            );
            Cut::from_canonical(side, best)
        })
        .collect())
}

/// (total, trivial, non_trivial) min-cut counts.
pub fn count_min_cuts(g: &MultiGraph) -> Result<(usize, usize, usize)> {
    let cuts = enumerate_min_cuts_bruteforce(g)?;
    let trivial = cuts.iter().filter(|c| c.is_trivial()).count();
    Ok((cuts.len(), trivial, cuts.len() - trivial))
}

/// Slower oracle for medium scale (n up to ~64): collects every minimum
/// s-t cut of value lambda between vertex 0 and each other vertex from
/// the residual DAG, then dedupes. Used to validate generators beyond
/// the bitmask range.
pub fn enumerate_min_cuts_maxflow(g: &MultiGraph) -> Result<Vec<Cut>> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices(2));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lambda = edge_connectivity(g)?;
    let mut out: BTreeSet<Cut> = BTreeSet::new();
    for t in 1..g.n() {
        let mut net = FlowNetwork::from_multigraph(g);
        if net.max_flow(0, t, lambda) != lambda {
            continue;
        }
        let pq = net.residual_scc_dag(0, t);
        for closed in pq.dag.closed_sets() {
            // closed set holds the 0-side; canonical side is its complement
            let side = VertexSet::from_iter(
                g.n(),
                (0..g.n()).filter(|&v| !closed.contains(pq.comp_of[v])),
            );
            debug_assert_eq!(g.cut_size(&side), Ok(lambda));
            out.insert(Cut::from_canonical(side, lambda));
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{clique, cycle_graph, disjoint_cliques, tightness_graph};

    #[test]
    fn c4_has_six_min_cuts() {
        let g = cycle_graph(4).unwrap();
        let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
        assert_eq!(cuts.len(), 6);
        assert!(cuts.iter().all(|c| c.size() == 2));
        let sides: Vec<Vec<usize>> = cuts.iter().map(|c| c.side().iter().collect()).collect();
        assert!(sides.contains(&alloc::vec![1]));
        assert!(sides.contains(&alloc::vec![1, 2, 3]));
        assert_eq!(count_min_cuts(&g).unwrap(), (6, 4, 2));
    }

    #[test]
    fn k4_min_cuts_all_trivial() {
        let g = clique(4).unwrap();
        assert_eq!(count_min_cuts(&g).unwrap(), (4, 4, 0));
    }

    #[test]
    fn tightness_fixture() {
        // n = 15 keeps the bitmask oracle in range
        let g = tightness_graph(15, 4, 2).unwrap();
        let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
        assert_eq!(cuts.len(), 3);
        assert!(cuts.iter().all(|c| c.size() == 2 && !c.is_trivial()));
        // each separates a run of cliques: sides are unions of cliques
        for c in cuts {
            let len = c.side().len();
            assert!(len == 5 || len == 10);
        }
        // the flagship instance via the max-flow oracle
        let g = tightness_graph(27, 8, 4).unwrap();
        let cuts = enumerate_min_cuts_maxflow(&g).unwrap();
        assert_eq!(cuts.len(), 3);
        assert!(cuts.iter().all(|c| c.size() == 4 && !c.is_trivial()));
    }

    #[test]
    fn rejects_disconnected_and_oversize() {
        assert!(matches!(
            enumerate_min_cuts_bruteforce(&disjoint_cliques(12, 3).unwrap()),
            Err(Error::Disconnected)
        ));
        let g = tightness_graph(27, 8, 4).unwrap();
        assert!(matches!(
            enumerate_min_cuts_bruteforce_with_limit(&g, 25),
            Err(Error::OracleLimit { n: 27, limit: 25 })
        ));
    }

    #[test]
    fn oracle_output_has_no_duplicates_and_lambda_edges() {
        let g = crate::generators::random_connected(9, 0.4, 11).unwrap();
        let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
        for w in cuts.windows(2) {
            assert!(w[0] < w[1]);
        }
        let lambda = edge_connectivity(&g).unwrap();
        for c in &cuts {
            assert_eq!(g.crossing_edges(c.side()).unwrap().len() as u64, lambda);
        }
    }

    #[test]
    fn maxflow_oracle_matches_bruteforce() {
        for seed in 0..8 {
            let g = crate::generators::random_connected(9, 0.5, seed).unwrap();
            let a = enumerate_min_cuts_bruteforce(&g).unwrap();
            let b = enumerate_min_cuts_maxflow(&g).unwrap();
            assert_eq!(a, b, "seed {}", seed);
        }
        let t = tightness_graph(36, 8, 4).unwrap();
        let cuts = enumerate_min_cuts_maxflow(&t).unwrap();
        assert_eq!(cuts.len(), 6); // r=4 -> C(4,2)
    }
}
