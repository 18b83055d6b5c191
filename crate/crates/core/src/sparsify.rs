//! Contraction-based sparsification: collapse the compact cactus's
//! preimage classes to get a small multigraph preserving every
//! non-trivial min-cut.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cactus::Cactus;
use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::vertex_set::VertexSet;

/// Contracts each non-empty phi-preimage class of the compact cactus into
/// one vertex. Returns H and the map from G-vertices to H-vertices. Edge
/// ids of H are the surviving G-edge ids; parallel edges are kept.
///
/// Empty cactus vertices (possible for junction vertices) contribute no
/// H-vertex, so |V(H)| is the number of non-empty classes, at most |V(K')|.
pub fn sparsify(g: &MultiGraph, kprime: &Cactus) -> Result<(MultiGraph, Vec<u32>)> {
    if kprime.g_n() != g.n() {
        return Err(Error::InvalidParameter(
            "phi domain does not match the graph".into(),
        ));
    }
    let pre = kprime.preimage_counts();
    let mut block_of = vec![u32::MAX; kprime.n_k()];
    let mut blocks = 0u32;
    for v in 0..kprime.n_k() {
        if pre[v] > 0 {
            block_of[v] = blocks;
            blocks += 1;
        }
    }
    let map: Vec<u32> = kprime
        .phi()
        .iter()
        .map(|&p| block_of[p as usize])
        .collect();
    if map.iter().any(|&b| b == u32::MAX) {
        return Err(Error::InternalInvariant(
            "phi maps a vertex to an empty class".into(),
        ));
    }
    let h = g.contract_by_map(&map, blocks as usize);
    Ok((h, map))
}

/// Report from [`verify_sparsifier`].
#[derive(Debug, Clone, Default)]
pub struct SparsifierReport {
    pub lambda: u64,
    pub non_trivial_cuts: usize,
    /// Non-trivial min-cut sides that are not unions of blocks, or whose
    /// images do not cut H at size lambda.
    pub violations: Vec<String>,
    pub edge_bound_ok: bool,
    pub h_vertices: usize,
    pub h_edges: usize,
}

impl SparsifierReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty() && self.edge_bound_ok
    }
}

/// Oracle-checks the sparsifier: every non-trivial min-cut of G must be a
/// union of blocks whose H-image still cuts exactly lambda edges, and H
/// must satisfy the |E(H)| <= lambda (|V(H)|-1) bound.
pub fn verify_sparsifier(
    g: &MultiGraph,
    h: &MultiGraph,
    vertex_map: &[u32],
) -> Result<SparsifierReport> {
    let cuts = if g.n() <= crate::oracle::DEFAULT_LIMIT {
        crate::oracle::enumerate_min_cuts_bruteforce(g)?
    } else {
        crate::oracle::enumerate_min_cuts_maxflow(g)?
    };
    let lambda = edge_connectivity(g)?;
    let mut report = SparsifierReport {
        lambda,
        h_vertices: h.n(),
        h_edges: h.m(),
        ..Default::default()
    };
    for cut in cuts.iter().filter(|c| !c.is_trivial()) {
        report.non_trivial_cuts += 1;
        let side = cut.side();
        // block membership must be constant on each side
        let mut block_side = vec![u8::MAX; h.n()];
        let mut ok = true;
        for v in 0..g.n() {
            let b = vertex_map[v] as usize;
            let s = side.contains(v) as u8;
            if block_side[b] == u8::MAX {
                block_side[b] = s;
            } else if block_side[b] != s {
                ok = false;
            }
        }
        if !ok {
            report
                .violations
                .push(format!("cut side {:?} splits a block", side));
            continue;
        }
        let h_side = VertexSet::from_iter(
            h.n(),
            (0..h.n()).filter(|&b| block_side[b] == 1),
        );
        if h.cut_size(&h_side) != Ok(lambda) {
            report
                .violations
                .push(format!("image of {:?} is not a lambda-cut in H", side));
        }
    }
    report.edge_bound_ok =
        h.n() < 2 || (h.m() as u64) <= lambda * (h.n() as u64 - 1);
    Ok(report)
}
