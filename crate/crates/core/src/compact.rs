//! Compaction of a cactus for all min-cuts into the minimal cactus for the
//! non-trivial min-cuts, plus the xylem machinery and bound audits.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::cactus::Cactus;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::vertex_set::VertexSet;

/// Reports every place where one of the four compaction rules would still
/// fire; empty on a properly compacted cactus.
pub fn pattern_violations(kp: &Cactus) -> Vec<alloc::string::String> {
    use alloc::format;
    let jdeg = kp.junction_degrees();
    let pre = kp.preimage_counts();
    let singleton_1j = |v: u32| jdeg[v as usize] == 1 && pre[v as usize] == 1;
    let empty_2j = |v: u32| jdeg[v as usize] == 2 && pre[v as usize] == 0;
    let mut out = Vec::new();
    for (ci, cyc) in kp.cycles().iter().enumerate() {
        match cyc.len() {
            2 => {
                if cyc.iter().any(|&v| singleton_1j(v)) {
                    out.push(format!("cycle {}: pattern (i)", ci));
                }
                if cyc.iter().any(|&v| empty_2j(v)) {
                    out.push(format!("cycle {}: pattern (iii)", ci));
                }
            }
            3 => {
                if cyc.iter().any(|&v| singleton_1j(v)) {
                    out.push(format!("cycle {}: pattern (ii)", ci));
                }
                if cyc.iter().filter(|&&v| empty_2j(v)).count() >= 2 {
                    out.push(format!("cycle {}: pattern (iv)", ci));
                }
            }
            _ => {}
        }
    }
    out
}

/// Applies the four compaction rules until none fires:
///
/// (i)   a 2-cycle with a 1-junction singleton v — contract v into the other
///       vertex;
/// (ii)  a 3-cycle with a 1-junction singleton v and others a, b — delete
///       ab, add av and bv (the 3-cycle becomes two 2-cycles through v);
/// (iii) a 2-cycle with an empty 2-junction v — contract v into the other
///       vertex;
/// (iv)  a 3-cycle with two empty 2-junctions — contract them.
///
/// (i) and (ii) each destroy exactly one trivial cut; (iii) and (iv)
/// destroy none, so the result represents a family sandwiched between the
/// non-trivial min-cuts and all min-cuts, and is contraction-minimal.
pub fn compact_cactus(kc: &Cactus, g: &MultiGraph) -> Result<Cactus> {
    if kc.g_n() != g.n() {
        return Err(Error::InvalidParameter(
            "phi domain does not match the graph".into(),
        ));
    }
    let nk = kc.n_k();
    let mut parent: Vec<u32> = (0..nk as u32).collect();
    let mut pre: Vec<usize> = kc.preimage_counts();
    let mut cycles: Vec<Vec<u32>> = kc.cycles().to_vec();
    let mut incid: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nk];
    for (ci, cyc) in cycles.iter().enumerate() {
        for &v in cyc {
            incid[v as usize].insert(ci);
        }
    }

    fn find(parent: &mut [u32], mut v: u32) -> u32 {
        while parent[v as usize] != v {
            let gp = parent[parent[v as usize] as usize];
            parent[v as usize] = gp;
            v = gp;
        }
        v
    }

    let mut queue: VecDeque<usize> = (0..cycles.len()).collect();
    let mut in_queue: Vec<bool> = vec![true; cycles.len()];
    let push = |q: &mut VecDeque<usize>, iq: &mut Vec<bool>, c: usize| {
        if !iq[c] {
            iq[c] = true;
            q.push_back(c);
        }
    };

    while let Some(c) = queue.pop_front() {
        in_queue[c] = false;
        if cycles[c].len() < 2 {
            continue;
        }
        let cyc = cycles[c].clone();
        let k = cyc.len();
        let jdeg = |v: u32, incid: &[BTreeSet<usize>]| incid[v as usize].len();

        // pick the contraction (loser merges into keeper), if any rule fires
        let mut contraction: Option<(u32, u32)> = None; // (keeper, loser)
        if k == 2 {
            let (x, y) = (cyc[0], cyc[1]);
            if jdeg(x, &incid) == 1 && pre[x as usize] == 1 {
                contraction = Some((y, x)); // (i)
            } else if jdeg(y, &incid) == 1 && pre[y as usize] == 1 {
                contraction = Some((x, y)); // (i)
            } else if jdeg(x, &incid) == 2 && pre[x as usize] == 0 {
                contraction = Some((y, x)); // (iii)
            } else if jdeg(y, &incid) == 2 && pre[y as usize] == 0 {
                contraction = Some((x, y)); // (iii)
            }
        } else if k == 3 {
            if let Some(p) = (0..3).find(|&p| {
                jdeg(cyc[p], &incid) == 1 && pre[cyc[p] as usize] == 1
            }) {
                // (ii): split the 3-cycle into two 2-cycles through v
                let (v, a, b) = (cyc[p], cyc[(p + 1) % 3], cyc[(p + 2) % 3]);
                cycles[c] = vec![v, a];
                let nc = cycles.len();
                cycles.push(vec![v, b]);
                in_queue.push(false);
                incid[v as usize].insert(nc);
                incid[b as usize].remove(&c);
                incid[b as usize].insert(nc);
                push(&mut queue, &mut in_queue, c);
                push(&mut queue, &mut in_queue, nc);
                continue;
            }
            let empties: Vec<u32> = cyc
                .iter()
                .copied()
                .filter(|&v| jdeg(v, &incid) == 2 && pre[v as usize] == 0)
                .collect();
            if empties.len() >= 2 {
                contraction = Some((empties[0], empties[1])); // (iv)
            }
        }

        let Some((keep, lose)) = contraction else {
            continue;
        };
        pre[keep as usize] += pre[lose as usize];
        parent[lose as usize] = keep;
        for ci in core::mem::take(&mut incid[lose as usize]) {
            let list = &mut cycles[ci];
            for x in list.iter_mut() {
                if *x == lose {
                    *x = keep;
                }
            }
            // the shared cycle now repeats `keep` in adjacent positions
            let mut dedup = Vec::with_capacity(list.len());
            for &x in list.iter() {
                if dedup.last() != Some(&x) {
                    dedup.push(x);
                }
            }
            if dedup.len() > 1 && dedup.first() == dedup.last() {
                dedup.pop();
            }
            *list = dedup;
            if cycles[ci].len() < 2 {
                for &v in &cycles[ci].clone() {
                    incid[v as usize].remove(&ci);
                }
                incid[keep as usize].remove(&ci);
                cycles[ci].clear();
            } else {
                incid[keep as usize].insert(ci);
                push(&mut queue, &mut in_queue, ci);
            }
        }
        for &ci in incid[keep as usize].clone().iter() {
            push(&mut queue, &mut in_queue, ci);
        }
    }

    // rebuild with compact vertex ids
    let mut new_id = vec![u32::MAX; nk];
    let mut count = 0u32;
    for v in 0..nk as u32 {
        if find(&mut parent, v) == v {
            new_id[v as usize] = count;
            count += 1;
        }
    }
    let out_cycles: Vec<Vec<u32>> = cycles
        .iter()
        .filter(|c| c.len() >= 2)
        .map(|c| c.iter().map(|&v| new_id[v as usize]).collect())
        .collect();
    let phi = kc
        .phi()
        .iter()
        .map(|&p| new_id[find(&mut parent, p) as usize])
        .collect();
    Cactus::try_new(count as usize, out_cycles, phi)
}

/// The tree on cactus vertices plus one center node per cycle, with an edge
/// between a vertex and a center iff the vertex lies on that cycle. Nodes
/// `0..n_cactus` are cactus vertices; the rest are centers in cycle order.
#[derive(Debug, Clone)]
pub struct Xylem {
    n_cactus: usize,
    adj: Vec<Vec<usize>>,
    present: Vec<bool>,
}

impl Xylem {
    #[inline]
    pub fn is_center(&self, node: usize) -> bool {
        node >= self.n_cactus
    }

    pub fn node_count(&self) -> usize {
        self.present.iter().filter(|&&p| p).count()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.present[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node]
            .iter()
            .filter(|&&w| self.present[w])
            .count()
    }

    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[node].iter().copied().filter(|&w| self.present[w])
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.adj.len())
            .filter(|&v| self.present[v] && self.degree(v) == 1)
            .collect()
    }

    pub fn is_tree(&self) -> bool {
        let nodes: Vec<usize> = (0..self.adj.len()).filter(|&v| self.present[v]).collect();
        if nodes.is_empty() {
            return false;
        }
        let edges: usize = nodes.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
        if edges + 1 != nodes.len() {
            return false;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![nodes[0]];
        seen[nodes[0]] = true;
        let mut visited = 0;
        while let Some(v) = stack.pop() {
            visited += 1;
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        visited == nodes.len()
    }
}

pub fn build_xylem(kc: &Cactus) -> Xylem {
    let nk = kc.n_k();
    let total = nk + kc.cycles().len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (ci, cyc) in kc.cycles().iter().enumerate() {
        let center = nk + ci;
        for &v in cyc {
            adj[v as usize].push(center);
            adj[center].push(v as usize);
        }
    }
    Xylem {
        n_cactus: nk,
        adj,
        present: vec![true; total],
    }
}

/// Deletes every 1-junction singleton of the cactus from the xylem. The
/// leaves of the result are exactly the 1-junction non-singletons; no
/// center becomes a leaf.
pub fn prune_xylem(x: &Xylem, kc: &Cactus) -> Xylem {
    let mut pruned = x.clone();
    let jdeg = kc.junction_degrees();
    let pre = kc.preimage_counts();
    for v in 0..kc.n_k() {
        if jdeg[v] == 1 && pre[v] == 1 {
            pruned.present[v] = false;
        }
    }
    pruned
}

/// Report from [`audit_bounds`]: the vertex-count bound plus the pruned-
/// xylem statistics behind the counting argument.
#[derive(Debug, Clone)]
pub struct BoundsAudit {
    pub cactus_vertices: usize,
    pub bound: f64,
    pub pass: bool,
    pub xylem_nodes: usize,
    pub pruned_nodes: usize,
    pub pruned_leaves: usize,
    pub pruned_high_degree: usize,
    pub lean_paths: usize,
    pub lean_path_lengths: Vec<usize>,
}

/// Checks `|V(K')| < 30 n / delta` and collects the pruned-xylem shape
/// statistics (leaves, degree >= 3 nodes, maximal lean paths).
pub fn audit_bounds(kprime: &Cactus, n: usize, delta: usize) -> BoundsAudit {
    let x = build_xylem(kprime);
    let xp = prune_xylem(&x, kprime);
    let total = kprime.n_k() + kprime.cycles().len();
    let leaves = xp.leaves().len();
    let high = (0..total)
        .filter(|&v| xp.contains(v) && xp.degree(v) >= 3)
        .count();
    // maximal lean paths: components of the degree-2 nodes
    let mut lengths = Vec::new();
    let mut seen = vec![false; total];
    for s in 0..total {
        if seen[s] || !xp.contains(s) || xp.degree(s) != 2 {
            continue;
        }
        let mut len = 0usize;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            len += 1;
            for w in xp.neighbors(v) {
                if !seen[w] && xp.degree(w) == 2 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    let bound = 30.0 * n as f64 / delta as f64;
    BoundsAudit {
        cactus_vertices: kprime.n_k(),
        bound,
        pass: (kprime.n_k() as f64) < bound,
        xylem_nodes: x.node_count(),
        pruned_nodes: xp.node_count(),
        pruned_leaves: leaves,
        pruned_high_degree: high,
        lean_paths: lengths.len(),
        lean_path_lengths: lengths,
    }
}

/// Report from [`check_minimal`].
#[derive(Debug, Clone)]
pub struct MinimalityReport {
    pub edges_checked: usize,
    /// Cactus edges whose contraction loses no non-trivial min-cut.
    pub redundant_edges: Vec<(u32, u32)>,
}

impl MinimalityReport {
    pub fn pass(&self) -> bool {
        self.redundant_edges.is_empty()
    }
}

/// Verifies contraction-minimality against the oracle: contracting any
/// cactus edge must lose some non-trivial min-cut of G.
pub fn check_minimal(kprime: &Cactus, g: &MultiGraph) -> Result<MinimalityReport> {
    let cuts = if g.n() <= crate::oracle::DEFAULT_LIMIT {
        crate::oracle::enumerate_min_cuts_bruteforce(g)?
    } else {
        crate::oracle::enumerate_min_cuts_maxflow(g)?
    };
    let nc: BTreeSet<VertexSet> = cuts
        .iter()
        .filter(|c| !c.is_trivial())
        .map(|c| c.side().clone())
        .collect();
    let mut pairs: BTreeSet<(u32, u32)> = BTreeSet::new();
    for cyc in kprime.cycles() {
        let k = cyc.len();
        for p in 0..k {
            let (a, b) = (cyc[p], cyc[(p + 1) % k]);
            pairs.insert((a.min(b), a.max(b)));
        }
    }
    let mut report = MinimalityReport {
        edges_checked: pairs.len(),
        redundant_edges: Vec::new(),
    };
    for &(v, w) in &pairs {
        let contracted = kprime.contract_edge(v, w)?;
        let represented = contracted.represented_sides();
        if nc.iter().all(|side| represented.contains(side)) {
            report.redundant_edges.push((v, w));
        }
    }
    Ok(report)
}
