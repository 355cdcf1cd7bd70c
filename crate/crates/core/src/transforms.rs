//! Status-monotone surgeries on graphs and trees.
//!
//! Every transform returns a fresh graph that keeps the input's vertex
//! numbering; the relocated vertex keeps its index.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::families::{make_caterpillar, make_dumbbell};
use crate::graph::Graph;

/// A bridge `u-v` of a connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CutEdge {
    pub u: usize,
    pub v: usize,
    /// One endpoint has degree 1.
    pub pendant: bool,
}

impl CutEdge {
    pub fn new(g: &Graph, u: usize, v: usize) -> Result<Self> {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.has_edge(u, v) || !is_bridge(g, u, v) {
            return Err(Error::NotACutEdge(u, v));
        }
        Ok(CutEdge {
            u,
            v,
            pendant: g.degree(u) == 1 || g.degree(v) == 1,
        })
    }
}

/// Every bridge of `g`, in edge order.
pub fn cut_edges(g: &Graph) -> Vec<CutEdge> {
    g.edges()
        .filter(|&(u, v)| is_bridge(g, u, v))
        .map(|(u, v)| CutEdge {
            u,
            v,
            pendant: g.degree(u) == 1 || g.degree(v) == 1,
        })
        .collect()
}

fn is_bridge(g: &Graph, u: usize, v: usize) -> bool {
    !side_of(g, u, v)[v]
}

/// Vertices reachable from `start` without crossing the edge `start-blocked`.
fn side_of(g: &Graph, start: usize, blocked: usize) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if (x == start && y == blocked) || seen[y] {
                continue;
            }
            seen[y] = true;
            stack.push(y);
        }
    }
    seen
}

/// Contracts the non-pendant cut edge `u-v` into `u` and re-attaches `v` to
/// `u` as a pendant vertex.
pub fn contract_to_pendant(g: &Graph, e: CutEdge) -> Result<Graph> {
    let e = CutEdge::new(g, e.u, e.v)?;
    if e.pendant {
        return Err(Error::PendantEdge(e.u, e.v));
    }
    let (u, v) = (e.u, e.v);
    let edges = g.edges().map(|(a, b)| {
        if a == v && b != u {
            (u, b)
        } else if b == v && a != u {
            (a, u)
        } else {
            (a, b)
        }
    });
    Graph::from_edges(g.n(), edges)
}

/// Detaches the branches of `t` at `u` rooted at the vertices in `moved` and
/// hangs them on `w` instead.
///
/// `w` must lie in a branch `B2` at `u` that is not moved, and some other
/// unmoved branch `B1` at `u` must satisfy `|B1| >= |B2|`; both conditions are
/// checked here.
pub fn move_branches(t: &Graph, u: usize, w: usize, moved: &[usize]) -> Result<Graph> {
    t.require_tree()?;
    t.check_vertex(u)?;
    t.check_vertex(w)?;
    if t.degree(u) < 3 {
        return Err(Error::DegreeTooSmall {
            vertex: u,
            degree: t.degree(u),
        });
    }
    let moved: BTreeSet<usize> = moved.iter().copied().collect();
    if moved.is_empty() {
        return Err(Error::InvalidBranchSelection("no branch selected".into()));
    }
    if let Some(&x) = moved.iter().find(|&&x| !t.has_edge(u, x)) {
        return Err(Error::InvalidBranchSelection(format!(
            "{x} is not a neighbour of {u}"
        )));
    }
    if w == u {
        return Err(Error::InvalidBranchSelection(
            "target coincides with u".into(),
        ));
    }

    // Branch root and size for every neighbour of u.
    let branches: Vec<(usize, Vec<bool>)> = t
        .neighbors(u)
        .iter()
        .map(|&x| (x, side_of(t, x, u)))
        .collect();
    let size = |members: &[bool]| members.iter().filter(|&&b| b).count();
    let (target_root, target_members) = branches
        .iter()
        .find(|(_, members)| members[w])
        .expect("w lies in some branch at u");
    if moved.contains(target_root) {
        return Err(Error::InvalidBranchSelection(format!(
            "target {w} lies in a moved branch"
        )));
    }
    let target_size = size(target_members);
    let anchored = branches.iter().any(|(root, members)| {
        root != target_root && !moved.contains(root) && size(members) >= target_size
    });
    if !anchored {
        return Err(Error::InvalidBranchSelection(format!(
            "no unmoved branch at {u} is at least as large as the target branch ({target_size})"
        )));
    }

    let edges = t.edges().map(|(a, b)| {
        if a == u && moved.contains(&b) {
            (w, b)
        } else if b == u && moved.contains(&a) {
            (a, w)
        } else {
            (a, b)
        }
    });
    Graph::from_edges(t.n(), edges)
}

/// `(D_n(p, q), D_n(p + 1, q - 1))` for `p >= q >= 2`, `p + q + 2 <= n`.
pub fn dumbbell_shift(n: usize, p: usize, q: usize) -> Result<(Graph, Graph)> {
    if q < 2 || p < q || p + q + 2 > n {
        return Err(invalid(format!(
            "dumbbell shift needs p >= q >= 2 and p + q + 2 <= n, got n={n}, p={p}, q={q}"
        )));
    }
    Ok((make_dumbbell(n, p, q)?, make_dumbbell(n, p + 1, q - 1)?))
}

/// `(C_n(p - 1, q + 1), C_n(p, q))` for `p >= q + 2`, `2(p + q) < n`; the
/// first, more balanced caterpillar has the larger minimum status.
pub fn caterpillar_shift(n: usize, p: usize, q: usize) -> Result<(Graph, Graph)> {
    if q < 1 || p < q + 2 || 2 * (p + q) >= n {
        return Err(invalid(format!(
            "caterpillar shift needs p >= q + 2, q >= 1 and 2(p + q) < n, got n={n}, p={p}, q={q}"
        )));
    }
    Ok((
        make_caterpillar(n, p - 1, q + 1)?,
        make_caterpillar(n, p, q)?,
    ))
}
