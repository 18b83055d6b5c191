//! Undirected multigraph over dense vertex ids, contraction and cut-size
//! queries, plus the line-oriented text format.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Stable edge identifier. Contractions keep the ids of surviving edges,
/// so cuts of a contracted graph map back to edge sets of the original.
pub type EdgeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: u32,
    pub v: u32,
}

/// Undirected multigraph. Parallel edges are stored as repeated entries,
/// self-loops are rejected. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    // Sorted by id; ids unique. Fresh graphs use ids 0..m.
    edges: Vec<Edge>,
}

impl MultiGraph {
    /// Builds a multigraph with edge ids `0..edges.len()`.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewVertices(1));
        }
        let mut es = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange { index: w, n: n as u32 });
                }
            }
            es.push(Edge { id: i as EdgeId, u, v });
        }
        Ok(MultiGraph { n, edges: es })
    }

    /// Like [`MultiGraph::new`] but rejects parallel edges.
    pub fn new_simple(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let g = Self::new(n, edges)?;
        let mut seen: Vec<(u32, u32)> = g
            .edges
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(g)
    }

    pub(crate) fn from_parts(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable_by_key(|e| e.id);
        MultiGraph { n, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, with multiplicity.
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Endpoints of the edge with the given stable id.
    pub fn endpoints(&self, id: EdgeId) -> Option<(u32, u32)> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| (self.edges[i].u, self.edges[i].v))
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.edges
            .iter()
            .filter(|e| e.u as usize == v || e.v as usize == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            d[e.u as usize] += 1;
            d[e.v as usize] += 1;
        }
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<Vec<(u32, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u as usize].push((e.v, e.id));
            adj[e.v as usize].push((e.u, e.id));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w as usize);
                }
            }
        }
        count == self.n
    }

    /// Number of edges (with multiplicity) with exactly one endpoint in `side`.
    pub fn cut_size(&self, side: &VertexSet) -> Result<u64> {
        if side.is_empty() || side.is_full() {
            return Err(Error::NotAProperCut);
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| side.contains(e.u as usize) != side.contains(e.v as usize))
            .count() as u64)
    }

    /// The edges crossing `side`, as a sorted id list.
    pub fn crossing_edges(&self, side: &VertexSet) -> Result<EdgeCut> {
        if side.is_empty() || side.is_full() {
            return Err(Error::NotAProperCut);
        }
        let mut ids: Vec<EdgeId> = self
            .edges
            .iter()
            .filter(|e| side.contains(e.u as usize) != side.contains(e.v as usize))
            .map(|e| e.id)
            .collect();
        ids.sort_unstable();
        Ok(EdgeCut { edges: ids })
    }

    /// Contracts each block of the partition to a single vertex. Self-loops
    /// are dropped, parallel edges kept, edge ids preserved. Returns the new
    /// graph and the map from old vertices to new ones.
    pub fn contract(&self, blocks: &[Vec<u32>]) -> Result<(MultiGraph, Vec<u32>)> {
        let mut map = vec![u32::MAX; self.n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::NotAPartition);
            }
            for &v in block {
                if v as usize >= self.n || map[v as usize] != u32::MAX {
                    return Err(Error::NotAPartition);
                }
                map[v as usize] = b as u32;
            }
        }
        if map.iter().any(|&b| b == u32::MAX) {
            return Err(Error::NotAPartition);
        }
        Ok((self.contract_by_map(&map, blocks.len()), map))
    }

    /// Contraction by an explicit vertex -> block map (`map[v] < k` for all v).
    pub fn contract_by_map(&self, map: &[u32], k: usize) -> MultiGraph {
        debug_assert_eq!(map.len(), self.n);
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.u as usize] != map[e.v as usize])
            .map(|e| Edge {
                id: e.id,
                u: map[e.u as usize],
                v: map[e.v as usize],
            })
            .collect();
        MultiGraph { n: k, edges }
    }

    /// Serializes to the `p`/`e` line format.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            let (a, b) = (e.u.min(e.v), e.u.max(e.v));
            out.push_str(&format!("e {} {}\n", a, b));
        }
        out
    }
}

/// Parses the line format: `p <n> <m>` header, one `e <u> <v>` per edge,
/// `#` comments. The graph is required to be simple.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    parse(text, true)
}

/// Same format, but parallel edges are allowed (contracted graphs).
pub fn parse_multigraph(text: &str) -> Result<MultiGraph> {
    parse(text, false)
}

fn parse(text: &str, simple: bool) -> Result<MultiGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: &str| Error::Parse {
            line: lineno + 1,
            msg: msg.to_string(),
        };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        match it.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err("duplicate header"));
                }
                let n = it
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("bad vertex count"))?;
                let m = it
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("bad edge count"))?;
                if it.next().is_some() {
                    return Err(err("trailing tokens in header"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(err("edge before header"));
                }
                let u = it
                    .next()
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| err("bad endpoint"))?;
                let v = it
                    .next()
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| err("bad endpoint"))?;
                if it.next().is_some() {
                    return Err(err("trailing tokens in edge line"));
                }
                edges.push((u, v));
            }
            _ => return Err(err("unknown line type")),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing header".to_string(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {} edges, found {}", m, edges.len()),
        });
    }
    if simple {
        MultiGraph::new_simple(n, &edges)
    } else {
        MultiGraph::new(n, &edges)
    }
}

/// A min-cut as a canonical vertex side: the side NOT containing vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    side: VertexSet,
    size: u64,
}

impl Cut {
    /// Canonicalizes `side` (complementing if it contains vertex 0) and
    /// caches the cut size.
    pub fn new(g: &MultiGraph, side: VertexSet) -> Result<Cut> {
        if side.is_empty() || side.is_full() {
            return Err(Error::NotAProperCut);
        }
        let side = if side.contains(0) { side.complement() } else { side };
        let size = g.cut_size(&side)?;
        Ok(Cut { side, size })
    }

    /// For callers that already know the size (must match `cut_size`).
    pub(crate) fn from_canonical(side: VertexSet, size: u64) -> Cut {
        debug_assert!(!side.contains(0));
        Cut { side, size }
    }

    #[inline]
    pub fn side(&self) -> &VertexSet {
        &self.side
    }

    #[inline]
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Trivial iff the side or its complement is a singleton.
    pub fn is_trivial(&self) -> bool {
        let k = self.side.len();
        k == 1 || k == self.side.universe() - 1
    }
}

/// A cut as the sorted list of its crossing edge ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeCut {
    edges: Vec<EdgeId>,
}

impl EdgeCut {
    pub fn new(mut edges: Vec<EdgeId>) -> EdgeCut {
        edges.sort_unstable();
        edges.dedup();
        EdgeCut { edges }
    }

    #[inline]
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Output line: `c <k> <u1>-<v1> ...`, u<v per token, tokens sorted
    /// lexicographically. Endpoints are looked up in `g`, so `g` must be
    /// the graph the edge ids refer to.
    pub fn to_line(&self, g: &MultiGraph) -> String {
        let mut tokens: Vec<String> = self
            .edges
            .iter()
            .map(|&id| {
                let (u, v) = g.endpoints(id).expect("edge id not in graph");
                let (a, b) = (u.min(v), u.max(v));
                format!("{}-{}", a, b)
            })
            .collect();
        tokens.sort_unstable();
        let mut line = format!("c {}", self.edges.len());
        for t in tokens {
            line.push(' ');
            line.push_str(&t);
        }
        line
    }

    /// The bipartition implied by removing the cut edges: the component
    /// structure of `g` minus the cut, as the canonical side.
    pub fn implied_side(&self, g: &MultiGraph) -> Result<VertexSet> {
        let mut adj = vec![Vec::new(); g.n()];
        for e in g.edges() {
            if self.edges.binary_search(&e.id).is_err() {
                adj[e.u as usize].push(e.v as usize);
                adj[e.v as usize].push(e.u as usize);
            }
        }
        // component of vertex 0
        let mut seen = vec![false; g.n()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let side = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| !seen[v]));
        if side.is_empty() {
            return Err(Error::InternalInvariant(
                "removing the cut edges does not disconnect the graph".into(),
            ));
        }
        Ok(side)
    }
}
