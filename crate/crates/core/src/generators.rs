//! Deterministic graph families used for tightness checks and testing.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// `r = n/(delta+1)` cliques `K_{delta+1}` linked by `lambda/2` vertex-disjoint
/// cycles of length `r`. Minimum degree `delta`, edge connectivity `lambda`,
/// exactly `r(r-1)/2` min-cuts, all non-trivial.
///
/// Vertex `(i, j)` (clique `i`, slot `j`) has index `i*(delta+1) + j`.
pub fn tightness_graph(n: usize, delta: usize, lambda: usize) -> Result<MultiGraph> {
    if delta < 2 {
        return Err(Error::InvalidParameter("delta must be at least 2".into()));
    }
    if lambda == 0 || lambda % 2 != 0 {
        return Err(Error::InvalidParameter(
            "lambda must be a positive even integer".into(),
        ));
    }
    if 2 * lambda > delta {
        return Err(Error::InvalidParameter(
            "lambda must be at most delta/2".into(),
        ));
    }
    if n < 3 * (delta + 1) {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 3(delta+1) = {}",
            3 * (delta + 1)
        )));
    }
    if n % (delta + 1) != 0 {
        return Err(Error::InvalidParameter(
            "n must be a multiple of delta+1".into(),
        ));
    }
    let r = n / (delta + 1);
    let k = delta + 1;
    let idx = |i: usize, j: usize| (i * k + j) as u32;
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..k {
            for l in j + 1..k {
                edges.push((idx(i, j), idx(i, l)));
            }
        }
    }
    for j in 0..lambda / 2 {
        for i in 0..r {
            edges.push((idx(i, j), idx((i + 1) % r, j)));
        }
    }
    MultiGraph::new_simple(n, &edges)
}

/// `n/(delta+1)` disjoint cliques `K_{delta+1}` (disconnected for `n > delta+1`).
pub fn disjoint_cliques(n: usize, delta: usize) -> Result<MultiGraph> {
    if n % (delta + 1) != 0 {
        return Err(Error::InvalidParameter(
            "n must be a multiple of delta+1".into(),
        ));
    }
    let k = delta + 1;
    let mut edges = Vec::new();
    for i in 0..n / k {
        for j in 0..k {
            for l in j + 1..k {
                edges.push(((i * k + j) as u32, (i * k + l) as u32));
            }
        }
    }
    MultiGraph::new_simple(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<MultiGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<(u32, u32)> = (0..n)
        .map(|i| (i as u32, ((i + 1) % n) as u32))
        .collect();
    MultiGraph::new_simple(n, &edges)
}

pub fn clique(k: usize) -> Result<MultiGraph> {
    if k < 1 {
        return Err(Error::TooFewVertices(1));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i as u32, j as u32));
        }
    }
    MultiGraph::new_simple(k, &edges)
}

/// Seeded G(n, p) made connected by linking leftover components to the
/// component of vertex 0. Deterministic across platforms.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<MultiGraph> {
    if n < 2 {
        return Err(Error::TooFewVertices(2));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter("p must be in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u as u32, v as u32));
            }
        }
    }
    // connect components: attach each non-root component's representative
    // to a vertex already reachable from 0
    loop {
        let g = MultiGraph::new_simple(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
        let comp = components(&g);
        let root = comp[0];
        let rep = (0..n).find(|&v| comp[v] != root).unwrap();
        let anchor = rng.random_range(0..n);
        let anchor = (0..n)
            .map(|i| (anchor + i) % n)
            .find(|&v| comp[v] == root)
            .unwrap();
        edges.push((anchor.min(rep) as u32, anchor.max(rep) as u32));
    }
}

fn components(g: &MultiGraph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut comp = alloc::vec![usize::MAX; g.n()];
    let mut c = 0;
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = alloc::vec![s];
        comp[s] = c;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if comp[w as usize] == usize::MAX {
                    comp[w as usize] = c;
                    stack.push(w as usize);
                }
            }
        }
        c += 1;
    }
    comp
}
