//! Randomized property tests over seeded connected graphs, with the
//! brute-force oracle as ground truth.

use std::collections::BTreeSet;

use proptest::prelude::*;

use mincuts_core::cactus::{build_cactus, parse_cactus, validate_cactus};
use mincuts_core::compact::{audit_bounds, compact_cactus, pattern_violations};
use mincuts_core::enumerate::enumerate_all_min_cuts;
use mincuts_core::generators::random_connected;
use mincuts_core::oracle::enumerate_min_cuts_bruteforce;
use mincuts_core::sparsify::{sparsify, verify_sparsifier};
use mincuts_core::{EdgeCut, MultiGraph, VertexSet};

fn graphs() -> impl Strategy<Value = MultiGraph> {
    (4usize..=9, 25u32..=70, any::<u64>())
        .prop_map(|(n, p, seed)| random_connected(n, p as f64 / 100.0, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn enumeration_matches_the_oracle(g in graphs()) {
        let oracle: BTreeSet<EdgeCut> = enumerate_min_cuts_bruteforce(&g)
            .unwrap()
            .iter()
            .map(|c| g.crossing_edges(c.side()).unwrap())
            .collect();
        let mut got = Vec::new();
        enumerate_all_min_cuts(&g, &mut |c| got.push(c.clone())).unwrap();
        let set: BTreeSet<EdgeCut> = got.iter().cloned().collect();
        prop_assert_eq!(set.len(), got.len(), "duplicate cut");
        prop_assert_eq!(set, oracle);
    }

    #[test]
    fn cactus_is_valid_and_compaction_is_sandwiched(g in graphs()) {
        let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
        let kc = build_cactus(&g, &cuts).unwrap();
        prop_assert!(validate_cactus(&g, &kc, &cuts).pass());
        let kp = compact_cactus(&kc, &g).unwrap();
        prop_assert!(pattern_violations(&kp).is_empty());
        let all: BTreeSet<VertexSet> = cuts.iter().map(|c| c.side().clone()).collect();
        let nc: BTreeSet<VertexSet> = cuts
            .iter()
            .filter(|c| !c.is_trivial())
            .map(|c| c.side().clone())
            .collect();
        let repr = kp.represented_sides();
        prop_assert!(nc.is_subset(&repr));
        prop_assert!(repr.is_subset(&all));
        prop_assert!(audit_bounds(&kp, g.n(), g.min_degree()).pass);
    }

    #[test]
    fn sparsifier_preserves_nontrivial_cuts(g in graphs()) {
        let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
        let kc = build_cactus(&g, &cuts).unwrap();
        let kp = compact_cactus(&kc, &g).unwrap();
        let (h, map) = sparsify(&g, &kp).unwrap();
        prop_assert!(verify_sparsifier(&g, &h, &map).unwrap().pass());
    }

    #[test]
    fn singletons_cover_at_most_half_a_cycle_when_delta_three(g in graphs()) {
        if g.min_degree() < 3 {
            return Ok(());
        }
        let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
        let kc = build_cactus(&g, &cuts).unwrap();
        let kp = compact_cactus(&kc, &g).unwrap();
        for kx in [&kc, &kp] {
            let jdeg = kx.junction_degrees();
            let pre = kx.preimage_counts();
            for cyc in kx.cycles() {
                let singles = cyc
                    .iter()
                    .filter(|&&v| jdeg[v as usize] == 1 && pre[v as usize] == 1)
                    .count();
                prop_assert!(2 * singles <= cyc.len());
            }
        }
    }

    #[test]
    fn cactus_text_round_trips(g in graphs()) {
        let cuts = enumerate_min_cuts_bruteforce(&g).unwrap();
        let kc = build_cactus(&g, &cuts).unwrap();
        prop_assert_eq!(parse_cactus(&kc.to_text()).unwrap(), kc);
    }
}
