//! Simple connected undirected graphs and the edge-list interchange format.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, every adjacency
//! list is sorted, and construction rejects self-loops, repeated edges and
//! disconnected inputs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Builds a graph on `n` vertices, validating every graph invariant.
pub fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges.iter().copied())
}

impl Graph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(invalid("a graph needs at least one vertex"));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let g = Graph {
            adjacency,
            edge_count,
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Order of the graph.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Connected with `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n()
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    pub(crate) fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n(),
            })
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n()
    }

    /// Writes the flattened single-line form `n e u v u v ...`.
    pub fn to_flat_edge_list(&self) -> String {
        let mut out = format!("{} {}", self.n(), self.edge_count);
        for (u, v) in self.edges() {
            out.push_str(&format!(" {u} {v}"));
        }
        out
    }
}

/// BFS distances from `u` to every vertex.
pub fn distances_from(g: &Graph, u: usize) -> Result<Vec<usize>> {
    g.check_vertex(u)?;
    let mut dist = vec![usize::MAX; g.n()];
    bfs_into(g, u, &mut dist, &mut VecDeque::with_capacity(g.n()));
    Ok(dist)
}

/// BFS reusing caller buffers; `dist` is overwritten completely.
pub(crate) fn bfs_into(g: &Graph, source: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) {
    dist.fill(usize::MAX);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let next = dist[x] + 1;
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = next;
                queue.push_back(y);
            }
        }
    }
}

/// BFS order of a tree from `root` with parent pointers (`parent[root] == root`).
pub(crate) fn rooted_order(t: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in t.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                order.push(y);
            }
        }
    }
    (parent, order)
}

/// Multi-line edge-list: header `n e`, then one `u v` per line.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.edge_count)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Parses one graph from a token stream; newlines are not significant, so both
/// the multi-line and the flattened forms are accepted.
impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let g = read_edge_list(&mut tokens)?.ok_or_else(|| Error::Parse("empty input".into()))?;
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse(format!("trailing token {extra:?}")));
        }
        Ok(g)
    }
}

/// Reads the next graph from a whitespace token stream, `None` at end of input.
pub fn read_edge_list<'a, I>(tokens: &mut I) -> Result<Option<Graph>>
where
    I: Iterator<Item = &'a str>,
{
    let Some(first) = tokens.next() else {
        return Ok(None);
    };
    let mut next_num = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("unexpected end of input, expected {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| Error::Parse(format!("expected {what}, found {tok:?}")))
    };
    let n = first
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected vertex count, found {first:?}")))?;
    let e = next_num("edge count")?;
    let mut edges = Vec::with_capacity(e);
    for _ in 0..e {
        let u = next_num("edge endpoint")?;
        let v = next_num("edge endpoint")?;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).map(Some)
}
