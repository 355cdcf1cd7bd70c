//! Matching number and domination number.
//!
//! Trees use linear-time DPs rooted at vertex 0. The brute-force routines work
//! on any connected graph within their size budget and serve as oracles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{rooted_order, Graph};

/// Largest edge count accepted by [`matching_number_bruteforce`].
pub const MATCHING_BRUTEFORCE_MAX_EDGES: usize = 24;
/// Largest order accepted by [`domination_number_bruteforce`].
pub const DOMINATION_BRUTEFORCE_MAX_ORDER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingResult {
    pub size: usize,
    /// Matched pairs `(u, v)` with `u < v`, ascending.
    pub witness: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub size: usize,
    /// Dominating vertex set, ascending.
    pub witness: Vec<usize>,
}

impl MatchingResult {
    /// Witness edges exist, are pairwise disjoint and match `size`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.witness.len() == self.size
            && self.witness.iter().all(|&(u, v)| {
                let ok = g.has_edge(u, v) && !used[u] && !used[v];
                used[u] = true;
                used[v] = true;
                ok
            })
    }
}

impl DominationResult {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut inside = vec![false; g.n()];
        for &v in &self.witness {
            if v >= g.n() || inside[v] {
                return false;
            }
            inside[v] = true;
        }
        self.witness.len() == self.size
            && (0..g.n()).all(|v| inside[v] || g.neighbors(v).iter().any(|&w| inside[w]))
    }
}

/// Leaf-greedy maximum matching: scanning bottom-up, match a vertex to its
/// parent whenever both are still free.
pub fn matching_number_tree(t: &Graph) -> Result<MatchingResult> {
    t.require_tree()?;
    let (parent, order) = rooted_order(t, 0);
    let mut matched = vec![false; t.n()];
    let mut witness = Vec::new();
    for &v in order.iter().skip(1).rev() {
        let p = parent[v];
        if !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            witness.push((v.min(p), v.max(p)));
        }
    }
    witness.sort_unstable();
    let result = MatchingResult {
        size: witness.len(),
        witness,
    };
    debug_assert!(result.is_valid_for(t));
    Ok(result)
}

const INF: usize = usize::MAX / 4;

fn sat(a: usize, b: usize) -> usize {
    (a + b).min(INF)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum DomState {
    /// In the set.
    In,
    /// Outside, dominated by a child.
    Covered,
    /// Outside, not yet dominated; the parent must be in the set.
    Waiting,
}

/// Three-state tree DP (in set / dominated by a child / waiting for parent).
pub fn domination_number_tree(t: &Graph) -> Result<DominationResult> {
    t.require_tree()?;
    let n = t.n();
    let (parent, order) = rooted_order(t, 0);
    let parent = &parent;
    let children = |v: usize| {
        t.neighbors(v)
            .iter()
            .copied()
            .filter(move |&c| parent[c] == v && c != v)
    };

    let mut cost_in = vec![0usize; n];
    let mut cost_covered = vec![0usize; n];
    let mut cost_waiting = vec![0usize; n];
    for &v in order.iter().rev() {
        let mut inside = 1;
        let mut covered = 0;
        let mut waiting = 0;
        let mut best_extra = INF;
        for c in children(v) {
            inside = sat(inside, cost_in[c].min(cost_covered[c]).min(cost_waiting[c]));
            let free = cost_in[c].min(cost_covered[c]);
            covered = sat(covered, free);
            best_extra = best_extra.min(cost_in[c] - free);
            waiting = sat(waiting, cost_covered[c]);
        }
        cost_in[v] = inside;
        cost_covered[v] = sat(covered, best_extra);
        cost_waiting[v] = waiting;
    }

    // Top-down reconstruction with fixed preference In < Covered < Waiting.
    let mut state = vec![DomState::In; n];
    let root = order[0];
    state[root] = if cost_in[root] <= cost_covered[root] {
        DomState::In
    } else {
        DomState::Covered
    };
    for &v in &order {
        match state[v] {
            DomState::In => {
                for c in children(v) {
                    let best = cost_in[c].min(cost_covered[c]).min(cost_waiting[c]);
                    state[c] = if cost_in[c] == best {
                        DomState::In
                    } else if cost_covered[c] == best {
                        DomState::Covered
                    } else {
                        DomState::Waiting
                    };
                }
            }
            DomState::Covered => {
                // Force the child with the cheapest upgrade to In (first on ties).
                let forced = children(v)
                    .min_by_key(|&c| cost_in[c] - cost_in[c].min(cost_covered[c]))
                    .expect("covered vertex has a child");
                for c in children(v) {
                    state[c] = if c == forced || cost_in[c] <= cost_covered[c] {
                        DomState::In
                    } else {
                        DomState::Covered
                    };
                }
            }
            DomState::Waiting => {
                for c in children(v) {
                    state[c] = DomState::Covered;
                }
            }
        }
    }
    let witness: Vec<usize> = (0..n).filter(|&v| state[v] == DomState::In).collect();
    let result = DominationResult {
        size: witness.len(),
        witness,
    };
    debug_assert_eq!(result.size, cost_in[root].min(cost_covered[root]));
    debug_assert!(result.is_valid_for(t));
    Ok(result)
}

/// Exhaustive search over all matchings.
pub fn matching_number_bruteforce(g: &Graph) -> Result<MatchingResult> {
    if g.edge_count() > MATCHING_BRUTEFORCE_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "{} edges exceeds the brute-force matching budget of {}",
            g.edge_count(),
            MATCHING_BRUTEFORCE_MAX_EDGES
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    search_matchings(&edges, 0, 0u64, &mut current, &mut best);
    best.sort_unstable();
    Ok(MatchingResult {
        size: best.len(),
        witness: best,
    })
}

fn search_matchings(
    edges: &[(usize, usize)],
    next: usize,
    used: u64,
    current: &mut Vec<(usize, usize)>,
    best: &mut Vec<(usize, usize)>,
) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    for (i, &(u, v)) in edges.iter().enumerate().skip(next) {
        let mask = (1u64 << u) | (1u64 << v);
        if used & mask == 0 {
            current.push((u, v));
            search_matchings(edges, i + 1, used | mask, current, best);
            current.pop();
        }
    }
}

/// Subsets in ascending size, lexicographic within a size; the first
/// dominating set found is returned.
pub fn domination_number_bruteforce(g: &Graph) -> Result<DominationResult> {
    let n = g.n();
    if n > DOMINATION_BRUTEFORCE_MAX_ORDER {
        return Err(Error::TooLarge(format!(
            "order {n} exceeds the brute-force domination budget of {DOMINATION_BRUTEFORCE_MAX_ORDER}"
        )));
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let closed: Vec<u32> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u32 << v, |acc, &w| acc | (1 << w))
        })
        .collect();
    for k in 1..=n {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let covered = pick.iter().fold(0u32, |acc, &v| acc | closed[v]);
            if covered == full {
                return Ok(DominationResult {
                    size: k,
                    witness: pick,
                });
            }
            if !next_combination(&mut pick, n) {
                break;
            }
        }
    }
    unreachable!("the whole vertex set dominates")
}

/// Advances `pick` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    let Some(i) = (0..k).rev().find(|&i| pick[i] < n - k + i) else {
        return false;
    };
    pick[i] += 1;
    for j in i + 1..k {
        pick[j] = pick[j - 1] + 1;
    }
    true
}
