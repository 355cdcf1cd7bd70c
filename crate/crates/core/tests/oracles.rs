//! Cross-checks of the library against independent brute-force oracles.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use status_lab::enumeration::{
    canonical_code, enumerate_connected_graphs, enumerate_tree_codes, enumerate_trees,
    graph_canonical_key, random_tree, tree_from_prufer, TreeCode,
};
use status_lab::invariants::{
    domination_number_bruteforce, domination_number_tree, matching_number_bruteforce,
    matching_number_tree,
};
use status_lab::status::{branch_profile, status_profile};
use status_lab::Graph;

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn automorphisms(t: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .filter(|p| t.edges().all(|(u, v)| t.has_edge(p[u], p[v])))
        .count() as u64
}

fn prufer_sequence(n: usize, mut index: u64) -> Vec<usize> {
    (0..n - 2)
        .map(|_| {
            let x = (index % n as u64) as usize;
            index /= n as u64;
            x
        })
        .collect()
}

/// Labelled trees grouped by isomorphism class, via every Prüfer sequence.
fn prufer_classes(n: usize) -> BTreeMap<TreeCode, u64> {
    let total = (n as u64).pow(n as u32 - 2);
    (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, i| {
            let t = tree_from_prufer(n, &prufer_sequence(n, i)).unwrap();
            *acc.entry(canonical_code(&t).unwrap()).or_insert(0u64) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

#[test]
fn tree_enumeration_matches_prufer_dedup() {
    for n in 3..=9 {
        let classes = prufer_classes(n);
        let enumerated: Vec<TreeCode> = enumerate_tree_codes(n).unwrap();
        let from_prufer: Vec<TreeCode> = classes.keys().cloned().collect();
        assert_eq!(enumerated, from_prufer, "n={n}");
    }
}

#[test]
fn labelled_counts_follow_automorphism_groups() {
    // Each class contributes n!/|Aut(T)| labelled trees; the total is n^(n-2).
    for n in 3..=8 {
        let perms = permutations(n);
        let classes = prufer_classes(n);
        let mut total = 0;
        for code in enumerate_tree_codes(n).unwrap() {
            let labelled = factorial(n) / automorphisms(&code.to_graph(), &perms);
            assert_eq!(classes[&code], labelled, "n={n} {code}");
            total += labelled;
        }
        assert_eq!(total, (n as u64).pow(n as u32 - 2));
    }
}

#[test]
fn enumerated_trees_are_pairwise_non_isomorphic_trees() {
    for n in 1..=11 {
        let trees: Vec<Graph> = enumerate_trees(n).unwrap().collect();
        assert!(trees.iter().all(|t| t.is_tree() && t.n() == n));
        let codes: BTreeSet<TreeCode> = trees.iter().map(|t| canonical_code(t).unwrap()).collect();
        assert_eq!(codes.len(), trees.len());
    }
}

fn connected(n: usize, mask: u32, pairs: &[(usize, usize)]) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0u32;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if frontier >> a & 1 == 1 && seen >> b & 1 == 0 {
                    next |= 1 << b;
                }
                if frontier >> b & 1 == 1 && seen >> a & 1 == 0 {
                    next |= 1 << a;
                }
            }
        }
        seen |= next;
        frontier = next;
    }
    seen == (1 << n) - 1
}

#[test]
fn connected_graphs_match_labelled_brute_force() {
    for n in 2..=5 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let perms = permutations(n);
        let index: BTreeMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut classes: BTreeMap<u32, Graph> = BTreeMap::new();
        for mask in 0u32..(1 << pairs.len()) {
            if !connected(n, mask, &pairs) {
                continue;
            }
            let canonical = perms
                .iter()
                .map(|p| {
                    pairs.iter().enumerate().fold(0u32, |acc, (i, &(a, b))| {
                        if mask >> i & 1 == 1 {
                            let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                            acc | 1 << index[&(x, y)]
                        } else {
                            acc
                        }
                    })
                })
                .min()
                .unwrap();
            classes.entry(canonical).or_insert_with(|| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                Graph::from_edges(n, edges).unwrap()
            });
        }
        let expected: BTreeSet<u64> = classes
            .values()
            .map(|g| graph_canonical_key(g).unwrap())
            .collect();
        assert_eq!(
            expected.len(),
            classes.len(),
            "key separates classes, n={n}"
        );
        let enumerated: BTreeSet<u64> = enumerate_connected_graphs(n)
            .unwrap()
            .map(|g| graph_canonical_key(&g).unwrap())
            .collect();
        assert_eq!(enumerated, expected, "n={n}");
    }
}

#[test]
fn tree_dps_agree_with_brute_force() {
    for n in 1..=10 {
        for t in enumerate_trees(n).unwrap() {
            let m = matching_number_tree(&t).unwrap();
            let d = domination_number_tree(&t).unwrap();
            assert!(m.is_valid_for(&t) && d.is_valid_for(&t));
            assert_eq!(m.size, matching_number_bruteforce(&t).unwrap().size, "{t}");
            assert_eq!(
                d.size,
                domination_number_bruteforce(&t).unwrap().size,
                "{t}"
            );
        }
    }
}

#[test]
fn status_agrees_with_floyd_warshall() {
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let profile = status_profile(&g);
            assert_eq!(profile.statuses, common::floyd_statuses(&g));
        }
    }
    for seed in 0..200 {
        let t = random_tree(5 + (seed as usize % 60), seed);
        assert_eq!(status_profile(&t).statuses, common::floyd_statuses(&t));
    }
}

#[test]
fn centroid_agrees_with_component_sizes() {
    for n in 1..=10 {
        for t in enumerate_trees(n).unwrap() {
            assert_eq!(
                branch_profile(&t).unwrap().centroid,
                common::naive_centroid(&t)
            );
        }
    }
    for seed in 0..100 {
        let t = random_tree(150, seed);
        assert_eq!(
            branch_profile(&t).unwrap().centroid,
            common::naive_centroid(&t)
        );
    }
}
