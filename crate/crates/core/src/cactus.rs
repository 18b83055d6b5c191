//! Cactus representations (K, phi) of min-cut families: the type and its
//! structural queries, an oracle-driven constructor, the validator, and
//! the cactus text format.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::{Cut, MultiGraph};
use crate::vertex_set::VertexSet;

/// A cactus multigraph with its explicit cycle list and the mapping
/// `phi: V(G) -> V(K)`. Every edge of K lies in exactly one listed cycle;
/// length-2 cycles are parallel-edge pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cactus {
    graph: MultiGraph,
    cycles: Vec<Vec<u32>>,
    phi: Vec<u32>,
}

/// Classification of a cactus vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CactusVertexClass {
    pub is_empty: bool,
    pub is_singleton: bool,
    pub junction_degree: usize,
}

/// One min-cut of the cactus: the pair of edges `(e_i, e_j)` of a cycle
/// and the K-vertex side they cut off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusMinCut {
    pub cycle: usize,
    pub edge_pair: (usize, usize),
    pub side: VertexSet,
}

impl Cactus {
    /// Validates the cactus structure: cycles of length >= 2 with distinct
    /// vertices, and blocks of K exactly the listed cycles (equivalently,
    /// the vertex/cycle incidence graph is a tree).
    pub fn try_new(nk: usize, cycles: Vec<Vec<u32>>, phi: Vec<u32>) -> Result<Cactus> {
        let c = Self::new_unchecked(nk, cycles, phi)?;
        c.check_structure()?;
        Ok(c)
    }

    /// Builds without the block-structure check (test fixtures for the
    /// validator's failure paths).
    pub fn new_unchecked(nk: usize, cycles: Vec<Vec<u32>>, phi: Vec<u32>) -> Result<Cactus> {
        if nk == 0 {
            return Err(Error::TooFewVertices(1));
        }
        let mut edges = Vec::new();
        for cyc in &cycles {
            if cyc.len() < 2 {
                return Err(Error::InvalidCactus("cycle of length < 2".into()));
            }
            let mut sorted = cyc.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidCactus("repeated vertex in a cycle".into()));
            }
            for &v in cyc {
                if v as usize >= nk {
                    return Err(Error::VertexOutOfRange {
                        index: v,
                        n: nk as u32,
                    });
                }
            }
            for i in 0..cyc.len() {
                edges.push((cyc[i], cyc[(i + 1) % cyc.len()]));
            }
        }
        for &p in &phi {
            if p as usize >= nk {
                return Err(Error::VertexOutOfRange {
                    index: p,
                    n: nk as u32,
                });
            }
        }
        let graph = MultiGraph::new(nk, &edges)?;
        Ok(Cactus {
            graph,
            cycles,
            phi,
        })
    }

    fn check_structure(&self) -> Result<()> {
        let nk = self.graph.n();
        let ncyc = self.cycles.len();
        let incidences: usize = self.cycles.iter().map(|c| c.len()).sum();
        // vertex/cycle incidence graph must be a tree on nk + ncyc nodes
        if incidences + 1 != nk + ncyc {
            return Err(Error::InvalidCactus(
                "cycle incidence structure is not a tree".into(),
            ));
        }
        if nk > 1 && !self.graph.is_connected() {
            return Err(Error::InvalidCactus("cactus is disconnected".into()));
        }
        Ok(())
    }

    #[inline]
    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    #[inline]
    pub fn n_k(&self) -> usize {
        self.graph.n()
    }

    #[inline]
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    #[inline]
    pub fn phi(&self) -> &[u32] {
        &self.phi
    }

    pub fn g_n(&self) -> usize {
        self.phi.len()
    }

    pub fn preimage_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n_k()];
        for &p in &self.phi {
            counts[p as usize] += 1;
        }
        counts
    }

    pub fn junction_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n_k()];
        for cyc in &self.cycles {
            for &v in cyc {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    pub fn classify(&self, v: usize) -> CactusVertexClass {
        let count = self.phi.iter().filter(|&&p| p as usize == v).count();
        CactusVertexClass {
            is_empty: count == 0,
            is_singleton: count == 1,
            junction_degree: self.cycles.iter().filter(|c| c.contains(&(v as u32))).count(),
        }
    }

    /// Preimage of a K-vertex set under phi.
    pub fn preimage(&self, k_side: &VertexSet) -> VertexSet {
        VertexSet::from_iter(
            self.phi.len(),
            self.phi
                .iter()
                .enumerate()
                .filter(|(_, &p)| k_side.contains(p as usize))
                .map(|(v, _)| v),
        )
    }

    /// The component of `K - e - f` containing `v`, where e, f are v's two
    /// edges in cycle `c`.
    pub fn side_of_cycle(&self, c: usize, v: u32) -> Result<VertexSet> {
        let cyc = self
            .cycles
            .get(c)
            .ok_or_else(|| Error::InvalidParameter("no such cycle".into()))?;
        if !cyc.contains(&v) {
            return Err(Error::InvalidParameter(
                "vertex not on the given cycle".into(),
            ));
        }
        let mut seen = VertexSet::new(self.n_k());
        seen.insert(v as usize);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for (ci, cyc) in self.cycles.iter().enumerate() {
                if let Some(p) = cyc.iter().position(|&x| x == u) {
                    if ci == c && u == v {
                        continue; // the two removed edges
                    }
                    let k = cyc.len();
                    for w in [cyc[(p + 1) % k], cyc[(p + k - 1) % k]] {
                        if !seen.contains(w as usize) {
                            seen.insert(w as usize);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        Ok(seen)
    }

    /// Every unordered pair of edges within one cycle, with the K-vertex
    /// side it cuts off. Each min-cut of K appears exactly once.
    pub fn min_cuts(&self) -> Vec<CactusMinCut> {
        let mut out = Vec::new();
        for (ci, cyc) in self.cycles.iter().enumerate() {
            let k = cyc.len();
            // hanging component of each cycle position
            let hang: Vec<VertexSet> = cyc
                .iter()
                .map(|&v| self.side_of_cycle(ci, v).unwrap())
                .collect();
            // edge e_p joins positions p and p+1; pair (e_i, e_j) with i < j
            // cuts off positions i+1 ..= j
            for i in 0..k {
                for j in i + 1..k {
                    let mut side = VertexSet::new(self.n_k());
                    for p in i + 1..=j {
                        side.union_with(&hang[p]);
                    }
                    out.push(CactusMinCut {
                        cycle: ci,
                        edge_pair: (i, j),
                        side,
                    });
                }
            }
        }
        out
    }

    /// Canonical G-sides of all represented bipartitions (clause-(i)
    /// material). Improper preimages (empty or full) are skipped; the
    /// validator reports them separately.
    pub fn represented_sides(&self) -> BTreeSet<VertexSet> {
        let mut out = BTreeSet::new();
        for mc in self.min_cuts() {
            let side = self.preimage(&mc.side);
            if side.is_empty() || side.is_full() {
                continue;
            }
            let side = if side.contains(0) { side.complement() } else { side };
            out.insert(side);
        }
        out
    }

    /// Contracts the cactus edge joining `v` and `w` (they must be adjacent
    /// in some cycle) and revises phi; `w` merges into `v`.
    pub fn contract_edge(&self, v: u32, w: u32) -> Result<Cactus> {
        let mut found = None;
        'outer: for (ci, cyc) in self.cycles.iter().enumerate() {
            let k = cyc.len();
            for p in 0..k {
                let (a, b) = (cyc[p], cyc[(p + 1) % k]);
                if (a, b) == (v, w) || (a, b) == (w, v) {
                    found = Some(ci);
                    break 'outer;
                }
            }
        }
        let ci = found.ok_or_else(|| {
            Error::InvalidParameter("vertices are not adjacent in any cycle".into())
        })?;
        let mut cycles = Vec::new();
        for (i, cyc) in self.cycles.iter().enumerate() {
            let mut nc: Vec<u32> = if i == ci {
                cyc.iter().copied().filter(|&x| x != w).collect()
            } else {
                cyc.iter().map(|&x| if x == w { v } else { x }).collect()
            };
            if i == ci && nc.len() < 2 {
                continue; // a contracted 2-cycle disappears
            }
            // relabel: remove w's id, shift the rest down
            for x in nc.iter_mut() {
                if *x > w {
                    *x -= 1;
                }
            }
            cycles.push(nc);
        }
        let v_new = if v > w { v - 1 } else { v };
        let phi = self
            .phi
            .iter()
            .map(|&p| {
                if p == w {
                    v_new
                } else if p > w {
                    p - 1
                } else {
                    p
                }
            })
            .collect();
        Cactus::try_new(self.n_k() - 1, cycles, phi)
    }

    /// Serializes to the cactus text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("cactus {} {}\n", self.n_k(), self.cycles.len());
        for cyc in &self.cycles {
            out.push_str(&format!("y {}", cyc.len()));
            for &v in cyc {
                out.push_str(&format!(" {}", v));
            }
            out.push('\n');
        }
        for (g_v, &k_v) in self.phi.iter().enumerate() {
            out.push_str(&format!("map {} {}\n", g_v, k_v));
        }
        out
    }
}

/// Parses the cactus text format: `cactus <|V(K)|> <#cycles>`, one
/// `y <k> <v1> ... <vk>` per cycle, `map <g> <k>` lines for phi.
pub fn parse_cactus(text: &str) -> Result<Cactus> {
    let mut header: Option<(usize, usize)> = None;
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut maps: Vec<(usize, u32)> = Vec::new();
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
            Some("cactus") => {
                let nk = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad vertex count"))?;
                let nc = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad cycle count"))?;
                header = Some((nk, nc));
            }
            Some("y") => {
                let k: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad cycle length"))?;
                let vs: Vec<u32> = it.map(|t| t.parse()).collect::<core::result::Result<_, _>>()
                    .map_err(|_| err("bad cycle vertex"))?;
                if vs.len() != k {
                    return Err(err("cycle length mismatch"));
                }
                cycles.push(vs);
            }
            Some("map") => {
                let g: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad map line"))?;
                let k: u32 = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad map line"))?;
                maps.push((g, k));
            }
            _ => return Err(err("unknown line type")),
        }
    }
    let (nk, nc) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing cactus header".to_string(),
    })?;
    if cycles.len() != nc {
        return Err(Error::Parse {
            line: 0,
            msg: "cycle count mismatch".to_string(),
        });
    }
    let g_n = maps.iter().map(|&(g, _)| g + 1).max().unwrap_or(0);
    let mut phi = vec![u32::MAX; g_n];
    for (g, k) in maps {
        phi[g] = k;
    }
    if phi.iter().any(|&p| p == u32::MAX) {
        return Err(Error::Parse {
            line: 0,
            msg: "phi is not total".to_string(),
        });
    }
    Cactus::try_new(nk, cycles, phi)
}

/// Report from [`validate_cactus`].
#[derive(Debug, Clone, Default)]
pub struct CactusValidation {
    /// Cuts of S with no representing cactus min-cut (clause i violations).
    pub missing: Vec<VertexSet>,
    /// Cactus min-cuts whose preimages are not min-cuts of G (clause ii).
    pub extra: Vec<VertexSet>,
    /// Structural problems (not a cactus, phi not total, ...).
    pub structure: Vec<String>,
}

impl CactusValidation {
    pub fn pass(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.structure.is_empty()
    }
}

/// Checks both clauses of the representation definition: every cut of `s`
/// is the preimage of some cactus min-cut, and every cactus min-cut's
/// preimage is a min-cut of G.
pub fn validate_cactus(g: &MultiGraph, kc: &Cactus, s: &[Cut]) -> CactusValidation {
    let mut report = CactusValidation::default();
    if let Err(e) = kc.check_structure() {
        report.structure.push(format!("{}", e));
        return report;
    }
    if kc.phi().len() != g.n() {
        report
            .structure
            .push("phi domain does not match V(G)".to_string());
        return report;
    }
    let lambda = match edge_connectivity(g) {
        Ok(l) => l,
        Err(e) => {
            report.structure.push(format!("{}", e));
            return report;
        }
    };
    // clause (ii): every cactus min-cut lifts to a min-cut of G
    let mut represented: BTreeSet<VertexSet> = BTreeSet::new();
    for mc in kc.min_cuts() {
        let side = kc.preimage(&mc.side);
        if side.is_empty() || side.is_full() {
            report.extra.push(side);
            continue;
        }
        let side = if side.contains(0) { side.complement() } else { side };
        if g.cut_size(&side) != Ok(lambda) {
            report.extra.push(side.clone());
        }
        represented.insert(side);
    }
    // clause (i): every cut of S is represented
    for cut in s {
        if !represented.contains(cut.side()) {
            report.missing.push(cut.side().clone());
        }
    }
    report
}

/// Builds a cactus representation for the given complete min-cut family.
///
/// Crossing classes of the family induce circular partitions that become
/// cycles; the remaining (pairwise laminar) cuts become 2-cycles hung on
/// the laminar forest of all cut regions. Correctness is enforced by
/// [`validate_cactus`], which the test suite runs over the whole corpus.
pub fn build_cactus(g: &MultiGraph, cuts: &[Cut]) -> Result<Cactus> {
    let n = g.n();
    if cuts.is_empty() {
        return Cactus::try_new(1, vec![], vec![0; n]);
    }
    let lambda = cuts[0].size();
    if cuts.iter().any(|c| c.size() != lambda) {
        return Err(Error::InconsistentCuts(
            "cuts do not all have the same size".into(),
        ));
    }

    // --- atoms: coarsest partition of V refining every cut ---
    let mut atom_of: Vec<u32> = vec![0; n];
    let mut atom_count = 1usize;
    for cut in cuts {
        // split each atom into (inside, outside) parts
        let mut new_id = vec![u32::MAX; atom_count];
        let mut next = atom_count as u32;
        for v in 0..n {
            if cut.side().contains(v) {
                let a = atom_of[v] as usize;
                if new_id[a] == u32::MAX {
                    new_id[a] = next;
                    next += 1;
                }
                atom_of[v] = new_id[a];
            }
        }
        // compact ids
        let mut remap = vec![u32::MAX; next as usize];
        let mut compacted = 0u32;
        for v in 0..n {
            let a = atom_of[v] as usize;
            if remap[a] == u32::MAX {
                remap[a] = compacted;
                compacted += 1;
            }
            atom_of[v] = remap[a];
        }
        atom_count = compacted as usize;
    }
    let num_atoms = atom_count;
    let root_atom = atom_of[0] as usize;
    let mut atom_members: Vec<Vec<u32>> = vec![Vec::new(); num_atoms];
    for v in 0..n {
        atom_members[atom_of[v] as usize].push(v as u32);
    }
    // each cut side as an atom set
    let atom_sides: Vec<VertexSet> = cuts
        .iter()
        .map(|c| {
            VertexSet::from_iter(
                num_atoms,
                (0..num_atoms).filter(|&a| c.side().contains(atom_members[a][0] as usize)),
            )
        })
        .collect();

    // --- crossing classes ---
    let crosses = |x: &VertexSet, y: &VertexSet| -> bool {
        x.intersects(y)
            && !x.is_subset(y)
            && !y.is_subset(x)
            && !x.union(y).is_full()
    };
    let mut class_dsu: Vec<usize> = (0..cuts.len()).collect();
    fn find(dsu: &mut Vec<usize>, i: usize) -> usize {
        if dsu[i] != i {
            let r = find(dsu, dsu[i]);
            dsu[i] = r;
        }
        dsu[i]
    }
    for i in 0..cuts.len() {
        for j in i + 1..cuts.len() {
            if crosses(&atom_sides[i], &atom_sides[j]) {
                let (ri, rj) = (find(&mut class_dsu, i), find(&mut class_dsu, j));
                if ri != rj {
                    class_dsu[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut class_members: Vec<Vec<usize>> = vec![Vec::new(); cuts.len()];
    for i in 0..cuts.len() {
        let r = find(&mut class_dsu, i);
        class_members[r].push(i);
    }

    // --- rings from crossing classes ---
    struct Ring {
        /// non-root blocks in ring order, each an atom set
        blocks: Vec<VertexSet>,
        /// union of the non-root blocks
        support: VertexSet,
    }
    let mut rings: Vec<Ring> = Vec::new();
    let mut covered: BTreeSet<VertexSet> = BTreeSet::new();
    let mut laminar_cut_ids: Vec<usize> = Vec::new();
    for members in class_members.iter().filter(|m| !m.is_empty()) {
        if members.len() == 1 {
            laminar_cut_ids.push(members[0]);
            continue;
        }
        // blocks: atoms grouped by membership pattern across the class
        let mut sig: Vec<Vec<bool>> = vec![Vec::new(); num_atoms];
        for a in 0..num_atoms {
            sig[a] = members.iter().map(|&i| atom_sides[i].contains(a)).collect();
        }
        let mut block_of = vec![usize::MAX; num_atoms];
        let mut block_sigs: Vec<(Vec<bool>, usize)> = Vec::new();
        for a in 0..num_atoms {
            match block_sigs.iter().find(|(s, _)| *s == sig[a]) {
                Some(&(_, b)) => block_of[a] = b,
                None => {
                    let b = block_sigs.len();
                    block_sigs.push((sig[a].clone(), b));
                    block_of[a] = b;
                }
            }
        }
        let num_blocks = block_sigs.len();
        if num_blocks < 4 {
            return Err(Error::InconsistentCuts(
                "crossing class with fewer than four blocks".into(),
            ));
        }
        let block_atoms: Vec<VertexSet> = (0..num_blocks)
            .map(|b| {
                VertexSet::from_iter(num_atoms, (0..num_atoms).filter(|&a| block_of[a] == b))
            })
            .collect();
        // ring adjacency: blocks whose union is a class cut or its complement
        let mut keyset: BTreeSet<VertexSet> = BTreeSet::new();
        for &i in members {
            keyset.insert(atom_sides[i].clone());
            keyset.insert(atom_sides[i].complement());
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); num_blocks];
        for b in 0..num_blocks {
            for c in b + 1..num_blocks {
                if keyset.contains(&block_atoms[b].union(&block_atoms[c])) {
                    adj[b].push(c);
                    adj[c].push(b);
                }
            }
        }
        if adj.iter().any(|a| a.len() != 2) {
            return Err(Error::InconsistentCuts(
                "crossing class blocks do not form a ring".into(),
            ));
        }
        // trace the ring starting at the root block
        let root_block = block_of[root_atom];
        let start = *adj[root_block]
            .iter()
            .min_by_key(|&&b| block_atoms[b].iter().next())
            .unwrap();
        let mut order = vec![root_block, start];
        while order.len() < num_blocks {
            let last = *order.last().unwrap();
            let prev = order[order.len() - 2];
            let next = *adj[last].iter().find(|&&b| b != prev).unwrap();
            order.push(next);
        }
        // mark every consecutive run avoiding the root block as covered
        let line: Vec<usize> = order[1..].to_vec();
        let mut support = VertexSet::new(num_atoms);
        for &b in &line {
            support.union_with(&block_atoms[b]);
        }
        for i in 0..line.len() {
            let mut run = VertexSet::new(num_atoms);
            for &b in &line[i..] {
                run.union_with(&block_atoms[b]);
                covered.insert(run.clone());
            }
        }
        rings.push(Ring {
            blocks: line.iter().map(|&b| block_atoms[b].clone()).collect(),
            support,
        });
    }
    laminar_cut_ids.sort_unstable();

    // --- regions: ring blocks plus uncovered laminar cut sides ---
    let mut regions: Vec<VertexSet> = Vec::new();
    for ring in &rings {
        for b in &ring.blocks {
            regions.push(b.clone());
        }
    }
    for &i in &laminar_cut_ids {
        if !covered.contains(&atom_sides[i]) {
            regions.push(atom_sides[i].clone());
        }
    }
    regions.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    regions.dedup();

    // cactus vertex ids: 0 is the root, regions follow in sorted order
    let vertex_of_region = |r: usize| (r + 1) as u32;
    // smallest region containing `q` (allowing equality unless `proper`)
    let enclosing = |q: &VertexSet, proper: bool| -> Option<usize> {
        regions
            .iter()
            .enumerate()
            .find(|(_, r)| q.is_subset(r) && !(proper && *r == q))
            .map(|(r, _)| r)
    };

    let mut cycles: Vec<Vec<u32>> = Vec::new();
    for ring in &rings {
        let anchor = match enclosing(&ring.support, false) {
            Some(r) => vertex_of_region(r),
            None => 0,
        };
        let mut cyc = vec![anchor];
        for b in &ring.blocks {
            let r = regions.binary_search_by(|x| {
                x.len().cmp(&b.len()).then(x.cmp(b))
            });
            let r = r.map_err(|_| {
                Error::InternalInvariant("ring block lost from the region list".into())
            })?;
            cyc.push(vertex_of_region(r));
        }
        cycles.push(cyc);
    }
    for (r, region) in regions.iter().enumerate() {
        // ring blocks already sit on their cycle; only laminar cut sides
        // get a 2-cycle of their own
        let is_ring_block = rings.iter().any(|ring| ring.blocks.contains(region));
        if is_ring_block {
            continue;
        }
        let anchor = match enclosing(region, true) {
            Some(p) => vertex_of_region(p),
            None => 0,
        };
        cycles.push(vec![anchor, vertex_of_region(r)]);
    }

    // phi: each vertex goes to the smallest region containing its atom
    let mut phi = vec![0u32; n];
    let mut atom_vertex = vec![0u32; num_atoms];
    for a in 0..num_atoms {
        let mut single = VertexSet::new(num_atoms);
        single.insert(a);
        atom_vertex[a] = match enclosing(&single, false) {
            Some(r) => vertex_of_region(r),
            None => 0,
        };
    }
    for v in 0..n {
        phi[v] = atom_vertex[atom_of[v] as usize];
    }
    Cactus::try_new(regions.len() + 1, cycles, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{clique, cycle_graph, tightness_graph};
    use crate::oracle::enumerate_min_cuts_bruteforce;

    fn build_validated(g: &MultiGraph) -> Cactus {
        let cuts = if g.n() <= crate::oracle::DEFAULT_LIMIT {
            enumerate_min_cuts_bruteforce(g).unwrap()
        } else {
            crate::oracle::enumerate_min_cuts_maxflow(g).unwrap()
        };
        let kc = build_cactus(g, &cuts).unwrap();
        let report = validate_cactus(g, &kc, &cuts);
        assert!(report.pass(), "validation failed: {:?}", report);
        kc
    }

    #[test]
    fn c4_cactus_is_a_four_cycle() {
        let g = cycle_graph(4).unwrap();
        let kc = build_validated(&g);
        assert_eq!(kc.n_k(), 4);
        assert_eq!(kc.cycles().len(), 1);
        assert_eq!(kc.cycles()[0].len(), 4);
        assert_eq!(kc.min_cuts().len(), 6);
    }

    #[test]
    fn k4_cactus_represents_exactly_the_trivial_cuts() {
        let g = clique(4).unwrap();
        let kc = build_validated(&g);
        assert_eq!(kc.represented_sides().len(), 4);
    }

    #[test]
    fn tightness_cactus_validates() {
        let g = tightness_graph(27, 8, 4).unwrap();
        let kc = build_validated(&g);
        // all vertices of one clique share a cactus vertex
        for i in 0..3 {
            let base = kc.phi()[i * 9] ;
            assert!((0..9).all(|j| kc.phi()[i * 9 + j] == base));
        }
    }

    #[test]
    fn side_of_cycle_on_single_cycle() {
        let kc = Cactus::try_new(4, vec![vec![0, 1, 2, 3]], vec![0, 1, 2, 3]).unwrap();
        for v in 0..4u32 {
            let side = kc.side_of_cycle(0, v).unwrap();
            assert_eq!(side.iter().collect::<Vec<_>>(), [v as usize]);
        }
    }

    #[test]
    fn side_of_cycle_on_chained_two_cycles() {
        // a-b and b-c
        let kc = Cactus::try_new(3, vec![vec![0, 1], vec![1, 2]], vec![0, 1, 2]).unwrap();
        assert_eq!(
            kc.side_of_cycle(0, 0).unwrap().iter().collect::<Vec<_>>(),
            [0]
        );
        assert_eq!(
            kc.side_of_cycle(0, 1).unwrap().iter().collect::<Vec<_>>(),
            [1, 2]
        );
        assert_eq!(kc.min_cuts().len(), 2);
        assert!(kc.side_of_cycle(0, 2).is_err());
    }

    #[test]
    fn min_cut_count_follows_cycle_lengths() {
        // one 4-cycle and a pendant 2-cycle: C(4,2) + C(2,2)... 6 + 1
        let kc = Cactus::try_new(
            5,
            vec![vec![0, 1, 2, 3], vec![3, 4]],
            vec![0, 1, 2, 3, 4],
        )
        .unwrap();
        assert_eq!(kc.min_cuts().len(), 7);
    }

    #[test]
    fn structure_check_rejects_broken_cactus() {
        // two 2-cycles on the same vertex pair: one block, not two cycles
        assert!(Cactus::try_new(2, vec![vec![0, 1], vec![0, 1]], vec![0, 1]).is_err());
        // disconnected
        assert!(Cactus::try_new(4, vec![vec![0, 1], vec![2, 3]], vec![0, 1, 2, 3]).is_err());
    }

    #[test]
    fn validator_fails_on_wrong_cactus() {
        let g = cycle_graph(4).unwrap();
        let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
        // a 2-cycle separating {1,2}: represents only one cut
        let bad = Cactus::try_new(2, vec![vec![0, 1]], vec![0, 1, 1, 0]).unwrap();
        let report = validate_cactus(&g, &bad, &cuts);
        assert!(!report.pass());
        assert!(!report.missing.is_empty());
    }

    #[test]
    fn validator_flags_non_min_preimages() {
        let g = clique(4).unwrap();
        // 2-cycle splitting {0,1} | {2,3}: preimage cut has size 4 > 3
        let bad = Cactus::try_new(2, vec![vec![0, 1]], vec![0, 0, 1, 1]).unwrap();
        let report = validate_cactus(&g, &bad, &[]);
        assert!(!report.pass());
        assert!(!report.extra.is_empty());
    }

    #[test]
    fn validator_passes_vacuous_clause_one() {
        let g = clique(4).unwrap();
        let kc = build_validated(&g);
        let report = validate_cactus(&g, &kc, &[]);
        assert!(report.pass());
    }

    #[test]
    fn contract_edge_drops_a_cut() {
        let g = cycle_graph(4).unwrap();
        let kc = build_validated(&g);
        let before = kc.represented_sides().len();
        let cyc = &kc.cycles()[0];
        let smaller = kc.contract_edge(cyc[0], cyc[1]).unwrap();
        assert!(smaller.represented_sides().len() < before);
    }

    #[test]
    fn text_round_trip() {
        let g = tightness_graph(27, 8, 4).unwrap();
        let kc = build_validated(&g);
        let parsed = parse_cactus(&kc.to_text()).unwrap();
        assert_eq!(parsed, kc);
    }

    #[test]
    fn build_cactus_rejects_mixed_sizes() {
        let g = cycle_graph(5).unwrap();
        let a = Cut::new(&g, VertexSet::from_iter(5, [1])).unwrap();
        let b = Cut::new(&g, VertexSet::from_iter(5, [1, 3])).unwrap(); // size 4
        assert!(matches!(
            build_cactus(&g, &[a, b]),
            Err(Error::InconsistentCuts(_))
        ));
    }

    #[test]
    fn every_oracle_graph_round_trips_through_its_cactus() {
        for seed in 0..10 {
            let g = crate::generators::random_connected(8, 0.45, seed).unwrap();
            let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
            let kc = build_cactus(&g, &cuts).unwrap();
            let report = validate_cactus(&g, &kc, &cuts);
            assert!(report.pass(), "seed {}: {:?}", seed, report);
            // clause (i) is tight: represented set equals the oracle set
            let sides: BTreeSet<VertexSet> =
                cuts.iter().map(|c| c.side().clone()).collect();
            assert_eq!(kc.represented_sides(), sides, "seed {}", seed);
        }
    }
}
