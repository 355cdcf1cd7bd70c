//! Status, median, proximity, branch-weight and centroid.

use std::collections::VecDeque;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{bfs_into, rooted_order, Graph};

/// Per-vertex statuses (distance sums) of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatusProfile {
    pub statuses: Vec<u64>,
    pub min_status: u64,
    /// Vertices of minimum status, ascending.
    pub median: Vec<usize>,
    /// `min_status / (n - 1)`; zero for the single-vertex graph.
    pub proximity: Ratio<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchProfile {
    /// Order of the largest component of `T - u`.
    pub weights: Vec<usize>,
    pub min_weight: usize,
    /// Vertices of minimum branch-weight, ascending.
    pub centroid: Vec<usize>,
}

/// One BFS per vertex; only a single distance row is alive at a time.
pub fn status_profile(g: &Graph) -> StatusProfile {
    let n = g.n();
    let mut dist = vec![0usize; n];
    let mut queue = VecDeque::with_capacity(n);
    let statuses: Vec<u64> = (0..n)
        .map(|u| {
            bfs_into(g, u, &mut dist, &mut queue);
            dist.iter().map(|&d| d as u64).sum()
        })
        .collect();
    let min_status = statuses.iter().copied().min().unwrap_or(0);
    let median = argmin(&statuses, min_status);
    let proximity = if n > 1 {
        Ratio::new(min_status, (n - 1) as u64)
    } else {
        Ratio::from_integer(0)
    };
    StatusProfile {
        statuses,
        min_status,
        median,
        proximity,
    }
}

/// Minimum status `s(G)` without retaining the per-vertex profile.
pub fn min_status(g: &Graph) -> u64 {
    status_profile(g).min_status
}

pub fn branch_profile(t: &Graph) -> Result<BranchProfile> {
    t.require_tree()?;
    let n = t.n();
    let (parent, order) = rooted_order(t, 0);
    let mut size = vec![1usize; n];
    let mut heaviest_child = vec![0usize; n];
    for &v in order.iter().skip(1).rev() {
        let p = parent[v];
        size[p] += size[v];
        heaviest_child[p] = heaviest_child[p].max(size[v]);
    }
    let weights: Vec<usize> = (0..n).map(|u| heaviest_child[u].max(n - size[u])).collect();
    let min_weight = weights.iter().copied().min().unwrap_or(0);
    let centroid = argmin(&weights, min_weight);
    Ok(BranchProfile {
        weights,
        min_weight,
        centroid,
    })
}

/// Membership test `w_T(x) <= n/2` for the median of a tree.
pub fn is_median_vertex(t: &Graph, x: usize) -> Result<bool> {
    t.check_vertex(x)?;
    let profile = branch_profile(t)?;
    Ok(2 * profile.weights[x] <= t.n())
}

/// Checks on one tree that the median equals the centroid, that membership
/// agrees with `w_T(x) <= n/2` vertex by vertex, and that the median is a
/// single vertex or an edge.
pub fn median_centroid_agree(t: &Graph) -> Result<bool> {
    let branches = branch_profile(t)?;
    let median = status_profile(t).median;
    let criterion_matches = (0..t.n()).all(|x| {
        let by_weight = 2 * branches.weights[x] <= t.n();
        by_weight == median.binary_search(&x).is_ok()
    });
    let shape_ok = match median.as_slice() {
        [_] => true,
        [a, b] => t.has_edge(*a, *b),
        _ => false,
    };
    Ok(median == branches.centroid && criterion_matches && shape_ok)
}

pub fn diameter(g: &Graph) -> usize {
    let n = g.n();
    let mut dist = vec![0usize; n];
    let mut queue = VecDeque::with_capacity(n);
    (0..n)
        .map(|u| {
            bfs_into(g, u, &mut dist, &mut queue);
            dist.iter().copied().max().unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

fn argmin<T: PartialEq + Copy>(values: &[T], min: T) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x == min)
        .map(|(i, _)| i)
        .collect()
}
