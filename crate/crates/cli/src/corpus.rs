//! Exhaustive small-graph corpus: one representative per isomorphism
//! class of simple graphs, built by single-vertex extension with
//! min-over-permutations canonical forms. Fits comfortably up to n = 8.

use mincuts_core::graph::MultiGraph;

/// Bit index of the pair (i, j), i < j, in the upper-triangle encoding.
fn bit(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort_unstable();
    out
}

fn canonical(mask: u32, n: usize, perms: &[Vec<usize>]) -> u32 {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask >> bit(i, j, n) & 1 == 1)
        .collect();
    let mut best = u32::MAX;
    for p in perms {
        let mut m = 0u32;
        for &(i, j) in &pairs {
            let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
            m |= 1 << bit(a, b, n);
        }
        best = best.min(m);
    }
    best
}

/// Canonical masks of all simple graphs on exactly `n` vertices (connected
/// or not), one per isomorphism class.
fn all_representatives(n: usize) -> Vec<u32> {
    assert!((1..=8).contains(&n));
    if n == 1 {
        return vec![0];
    }
    let smaller = all_representatives(n - 1);
    let perms = permutations(n);
    let mut set = std::collections::BTreeSet::new();
    for &small in &smaller {
        // re-index the (n-1)-vertex edges into the n-vertex encoding
        let mut base = 0u32;
        for i in 0..n - 1 {
            for j in i + 1..n - 1 {
                if small >> bit(i, j, n - 1) & 1 == 1 {
                    base |= 1 << bit(i, j, n);
                }
            }
        }
        for nbrs in 0u32..1 << (n - 1) {
            let mut mask = base;
            for v in 0..n - 1 {
                if nbrs >> v & 1 == 1 {
                    mask |= 1 << bit(v, n - 1, n);
                }
            }
            set.insert(canonical(mask, n, &perms));
        }
    }
    set.into_iter().collect()
}

fn graph_from_mask(mask: u32, n: usize) -> MultiGraph {
    let edges: Vec<(u32, u32)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask >> bit(i, j, n) & 1 == 1)
        .map(|(i, j)| (i as u32, j as u32))
        .collect();
    MultiGraph::new_simple(n, &edges).unwrap()
}

/// One representative per isomorphism class of connected simple graphs on
/// exactly `n` vertices.
pub fn connected_representatives(n: usize) -> Vec<MultiGraph> {
    all_representatives(n)
        .into_iter()
        .map(|m| graph_from_mask(m, n))
        .filter(|g| g.is_connected())
        .collect()
}

/// All connected representatives for 2 <= n <= n_max.
pub fn connected_graphs_up_to(n_max: usize) -> Vec<MultiGraph> {
    (2..=n_max).flat_map(connected_representatives).collect()
}
