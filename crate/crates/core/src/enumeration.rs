//! Canonical tree codes and exhaustive generation of small trees and graphs.
//!
//! Free trees are generated level by level: every tree on `k + 1` vertices is
//! a tree on `k` vertices plus a leaf, so attaching a leaf everywhere and
//! deduplicating by [`TreeCode`] yields each isomorphism class exactly once.
//! Connected graphs grow the same way (every connected graph has a vertex
//! whose removal keeps it connected), deduplicated by a minimum adjacency
//! bitstring.
//!
//! The leaf-extension step costs `O(T(n-1) * n)` canonical codes. Beyond the
//! supported budget the constant-delay successor scheme of Wright, Richmond,
//! Odlyzko and McKay is the natural replacement.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{rooted_order, Graph};
use crate::status::branch_profile;

/// Largest tree order [`enumerate_trees`] accepts.
pub const MAX_TREE_ORDER: usize = 18;
/// Largest order [`enumerate_connected_graphs`] and [`graph_canonical_key`] accept.
pub const MAX_GRAPH_ORDER: usize = 7;

const OPEN: u8 = b'(';
const CLOSE: u8 = b')';

/// AHU parenthesis code of a tree rooted at its centroid; for two centroid
/// vertices the smaller of the two rooted codes. Ordered by `n`, then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCode {
    n: usize,
    code: Vec<u8>,
}

impl TreeCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.code
    }

    /// Rebuilds the tree in preorder numbering, root (a centroid vertex) 0.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n.saturating_sub(1));
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0;
        for &b in &self.code {
            if b == OPEN {
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        Graph::from_edges(self.n, edges).expect("tree codes decode to trees")
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.code).expect("ascii"))
    }
}

impl Serialize for TreeCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn canonical_code(t: &Graph) -> Result<TreeCode> {
    let centroid = branch_profile(t)?.centroid;
    let code = centroid
        .iter()
        .map(|&root| rooted_code(t, root))
        .min()
        .expect("centroid is nonempty");
    Ok(TreeCode { n: t.n(), code })
}

fn rooted_code(t: &Graph, root: usize) -> Vec<u8> {
    let (parent, order) = rooted_order(t, root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.n()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&c| parent[c] == v)
            .map(|&c| std::mem::take(&mut codes[c]))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(OPEN);
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(CLOSE);
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

/// Canonical codes of all trees of order `n`, ascending.
pub fn enumerate_tree_codes(n: usize) -> Result<Vec<TreeCode>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::TooLarge(format!(
            "tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}, got {n}"
        )));
    }
    let mut level = vec![TreeCode {
        n: 1,
        code: vec![OPEN, CLOSE],
    }];
    for k in 1..n {
        let mut next: Vec<TreeCode> = level
            .par_iter()
            .flat_map_iter(|code| {
                let t = code.to_graph();
                (0..k).map(move |v| {
                    let edges = t.edges().chain([(v, k)]);
                    let grown = Graph::from_edges(k + 1, edges).expect("leaf extension");
                    canonical_code(&grown).expect("tree")
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    Ok(level)
}

/// One representative per isomorphism class of trees on `n` vertices, in
/// ascending canonical-code order. Each representative is
/// [`TreeCode::to_graph`] of its code.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(enumerate_tree_codes(n)?.into_iter().map(|c| c.to_graph()))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into its labelled tree.
pub fn tree_from_prufer(n: usize, sequence: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams("tree needs n >= 1".into()));
    }
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|v| (0, v)));
    }
    if sequence.len() != n - 2 {
        return Err(Error::InvalidParams(format!(
            "Prüfer sequence for n={n} must have length {}",
            n - 2
        )));
    }
    if let Some(&x) = sequence.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("some leaf");
    let mut leaf = ptr;
    for &x in sequence {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges)
}

/// Uniform labelled tree on `n` vertices from a seeded random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let n = n.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sequence: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    tree_from_prufer(n, &sequence).expect("valid Prüfer sequence")
}

/// Adjacency rows as bitmasks.
type Rows = Vec<u16>;

fn rows_of(g: &Graph) -> Rows {
    (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(0u16, |acc, &v| acc | (1 << v)))
        .collect()
}

/// Upper-triangle bitstring, pair `(0,1)` most significant.
fn key_of(rows: &Rows, perm: &[usize]) -> u64 {
    let n = rows.len();
    let mut key = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            key <<= 1;
            if rows[perm[i]] & (1 << perm[j]) != 0 {
                key |= 1;
            }
        }
    }
    key
}

/// Minimum bitstring over all labellings that list vertices by non-increasing
/// degree. That labelling set is isomorphism-invariant, so the minimum is a
/// canonical form.
fn canonical_key_of(rows: &Rows) -> u64 {
    let n = rows.len();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(rows[v].count_ones()));
    let slot_degree: Vec<u32> = by_degree.iter().map(|&v| rows[v].count_ones()).collect();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut best = u64::MAX;
    search_labellings(rows, &slot_degree, &mut perm, &mut used, &mut best);
    best
}

fn search_labellings(
    rows: &Rows,
    slot_degree: &[u32],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut u64,
) {
    let k = perm.len();
    if k == rows.len() {
        *best = (*best).min(key_of(rows, perm));
        return;
    }
    for v in 0..rows.len() {
        if !used[v] && rows[v].count_ones() == slot_degree[k] {
            used[v] = true;
            perm.push(v);
            search_labellings(rows, slot_degree, perm, used, best);
            perm.pop();
            used[v] = false;
        }
    }
}

fn graph_from_key(n: usize, key: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let bits = pairs.len();
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(idx, _)| key >> (bits - 1 - idx) & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("enumerated graphs are connected")
}

/// Isomorphism-invariant key of a graph with at most [`MAX_GRAPH_ORDER`] vertices.
pub fn graph_canonical_key(g: &Graph) -> Result<u64> {
    if g.n() > MAX_GRAPH_ORDER {
        return Err(Error::TooLarge(format!(
            "graph canonical form supports n <= {MAX_GRAPH_ORDER}, got {}",
            g.n()
        )));
    }
    Ok(canonical_key_of(&rows_of(g)))
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by canonical key; representatives are canonically labelled.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(2..=MAX_GRAPH_ORDER).contains(&n) {
        return Err(Error::TooLarge(format!(
            "connected-graph enumeration supports 2 <= n <= {MAX_GRAPH_ORDER}, got {n}"
        )));
    }
    let mut level: Vec<Rows> = vec![vec![0]];
    for k in 1..n {
        let mut keys: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|rows| {
                (1u16..(1 << k)).map(move |attach| {
                    let mut grown = rows.clone();
                    for (v, row) in grown.iter_mut().enumerate() {
                        if attach & (1 << v) != 0 {
                            *row |= 1 << k;
                        }
                    }
                    grown.push(attach);
                    canonical_key_of(&grown)
                })
            })
            .collect();
        keys.par_sort_unstable();
        keys.dedup();
        level = keys
            .into_iter()
            .map(|key| rows_of(&graph_from_key(k + 1, key)))
            .collect();
    }
    Ok(level.into_iter().map(move |rows| {
        let key = key_of(&rows, &(0..n).collect::<Vec<_>>());
        graph_from_key(n, key)
    }))
}
