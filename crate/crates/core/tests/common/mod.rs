//! Independent oracles and input generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use status_lab::enumeration::random_tree;
use status_lab::transforms::cut_edges;
use status_lab::Graph;

/// Statuses by Floyd-Warshall on the adjacency matrix.
pub fn floyd_statuses(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d.iter().map(|row| row.iter().sum()).collect()
}

pub fn floyd_min_status(g: &Graph) -> u64 {
    floyd_statuses(g).into_iter().min().unwrap_or(0)
}

/// Centroid straight from the definition: delete `u`, measure the components.
pub fn naive_centroid(t: &Graph) -> Vec<usize> {
    let n = t.n();
    let weight = |u: usize| -> usize {
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut largest = 0;
        for &start in t.neighbors(u) {
            let mut stack = vec![start];
            seen[start] = true;
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for &y in t.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            largest = largest.max(size);
        }
        largest
    };
    let weights: Vec<usize> = (0..n).map(weight).collect();
    let min = weights.iter().copied().min().unwrap_or(0);
    (0..n).filter(|&u| weights[u] == min).collect()
}

/// Vertices of the component of `start` in `t - u`.
pub fn branch(t: &Graph, u: usize, start: usize) -> Vec<usize> {
    let mut seen = vec![false; t.n()];
    seen[u] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(x) = stack.pop() {
        out.push(x);
        for &y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    out
}

/// A random tree of order `n` plus one chord: a connected unicyclic graph.
pub fn random_unicyclic(n: usize, seed: u64) -> Graph {
    assert!(n >= 3);
    let t = random_tree(n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    loop {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && !t.has_edge(a, b) {
            let edges = t.edges().chain(std::iter::once((a.min(b), a.max(b))));
            return Graph::from_edges(n, edges).expect("adding a chord keeps it simple");
        }
    }
}

/// A random valid contraction input: `(graph, u, v)` with `u-v` a non-pendant
/// cut edge, or `None` when the drawn graph has none.
pub fn contraction_case(seed: u64) -> Option<(Graph, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(4..=64);
    let g = if rng.gen_bool(0.5) {
        random_tree(n, seed)
    } else {
        random_unicyclic(n, seed)
    };
    let candidates: Vec<_> = cut_edges(&g).into_iter().filter(|e| !e.pendant).collect();
    let e = candidates.choose(&mut rng)?;
    let (u, v) = if rng.gen_bool(0.5) {
        (e.u, e.v)
    } else {
        (e.v, e.u)
    };
    Some((g, u, v))
}

/// A random valid branch move: `(tree, u, w, moved)` meeting every
/// precondition, or `None` when the drawn tree has no vertex of degree >= 3.
pub fn branch_move_case(seed: u64) -> Option<(Graph, usize, usize, Vec<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(4..=64);
    let t = random_tree(n, seed);
    let hubs: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 3).collect();
    let &u = hubs.choose(&mut rng)?;
    let mut roots: Vec<usize> = t.neighbors(u).to_vec();
    roots.shuffle(&mut rng);
    let size = |r: usize| branch(&t, u, r).len();
    // B2 is any branch with some other branch at least as large.
    let b2_choices: Vec<usize> = roots
        .iter()
        .copied()
        .filter(|&r| roots.iter().any(|&o| o != r && size(o) >= size(r)))
        .collect();
    let &b2 = b2_choices
        .choose(&mut rng)
        .expect("the smallest branch qualifies");
    let b1 = *roots
        .iter()
        .find(|&&o| o != b2 && size(o) >= size(b2))
        .expect("b2 was chosen with a partner");
    let rest: Vec<usize> = roots
        .iter()
        .copied()
        .filter(|&r| r != b1 && r != b2)
        .collect();
    let mut moved: Vec<usize> = rest.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    if moved.is_empty() {
        moved.push(*rest.choose(&mut rng).expect("degree >= 3"));
    }
    let b2_vertices = branch(&t, u, b2);
    let w = *b2_vertices.choose(&mut rng).expect("nonempty branch");
    Some((t, u, w, moved))
}
