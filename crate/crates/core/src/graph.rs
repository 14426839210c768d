//! Small simple undirected graphs stored as adjacency bit rows.
//!
//! Text form, shared by every module and the command line:
//! `n:u1-v1,u2-v2,...` with 0-based vertices, each pair written `u<v`,
//! pairs sorted lexicographically. A graph without edges is written `n:`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex capacity of [`Graph`]. The census itself never exceeds 10
/// vertices; the extra room lets a 9-edge tree be subdivided.
pub const MAX_VERTICES: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    m: u8,
    rows: [u16; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n: n as u8,
            m: 0,
            rows: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows are validated.
    pub fn from_rows(rows: &[u16]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        for (u, &row) in rows.iter().enumerate() {
            if row >> n != 0 || row & (1 << u) != 0 {
                return Err(Error::InvalidGraph(format!("bad adjacency row {u}")));
            }
            for v in bits(row) {
                if rows[v] & (1 << u) == 0 {
                    return Err(Error::InvalidGraph("asymmetric adjacency".into()));
                }
            }
            g.rows[u] = row;
        }
        g.m = (rows.iter().map(|r| r.count_ones()).sum::<u32>() / 2) as u8;
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.rows[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in bits(self.rows[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        self.m += 1;
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        self.m -= 1;
    }

    /// Copy with the extra edge `u-v`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.vertex_count() || v >= self.vertex_count() || u == v || self.has_edge(u, v)
        {
            return Err(Error::InvalidGraph(format!("cannot add edge {u}-{v}")));
        }
        let mut g = *self;
        g.insert(u, v);
        Ok(g)
    }

    /// Copy with a fresh vertex attached to `v` by one edge.
    pub fn with_pendant(&self, v: usize) -> Result<Self> {
        let n = self.vertex_count();
        if n == MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n + 1,
                limit: MAX_VERTICES,
            });
        }
        if v >= n {
            return Err(Error::InvalidGraph(format!("vertex {v} out of range")));
        }
        let mut g = *self;
        g.n += 1;
        g.insert(v, n);
        Ok(g)
    }

    /// Removes edge `u-v`, then drops any vertex left isolated and
    /// relabels the survivors in increasing order.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.vertex_count() || v >= self.vertex_count() || !self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("no edge {u}-{v}")));
        }
        let mut g = *self;
        g.remove(u, v);
        Ok(g.without_isolated())
    }

    /// Drops isolated vertices (keeps at least one vertex).
    pub fn without_isolated(&self) -> Self {
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.rows[v] != 0)
            .collect();
        if keep.len() == self.vertex_count() {
            return *self;
        }
        if keep.is_empty() {
            return Graph::empty(1).expect("one vertex fits");
        }
        self.induced(&keep)
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut g = Graph::empty(keep.len()).expect("subset of a valid graph");
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        let mut g = *self;
        g.rows = [0; MAX_VERTICES];
        for (u, &pu) in perm.iter().enumerate() {
            let mut row = 0u16;
            for v in bits(self.rows[u]) {
                row |= 1 << perm[v];
            }
            g.rows[pu] = row;
        }
        g
    }

    /// Replaces edge `u-v` by a path `u-w-v` through a new vertex `w`.
    pub fn subdivided(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.vertex_count() || v >= self.vertex_count() || !self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("no edge {u}-{v}")));
        }
        let mut g = self.with_pendant(u)?;
        let w = g.vertex_count() - 1;
        g.remove(u, v);
        g.insert(w, v);
        Ok(g)
    }

    /// Vertices reachable from `start`, as a bit mask.
    pub fn component_of(&self, start: usize) -> u16 {
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u16;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    /// A connected graph is a tree iff |E| = |V| - 1.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    #[inline]
    pub fn vertex_mask(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows[..self.vertex_count()]
    }

    /// Whether removing `u-v` (and a vertex it leaves isolated) keeps the
    /// graph connected.
    pub fn is_deletable_edge(&self, u: usize, v: usize) -> bool {
        if self.degree(u) == 1 || self.degree(v) == 1 {
            return self.edge_count() > 1 || self.vertex_count() > 2;
        }
        let mut g = *self;
        g.remove(u, v);
        g.component_of(u) >> v & 1 == 1
    }
}

/// Indices of the set bits of `mask`, ascending.
pub fn bits(mut mask: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, "missing `:`"))?;
        let n: usize = head
            .parse()
            .map_err(|_| Error::parse(s, "bad vertex count"))?;
        let mut edges = Vec::new();
        if !tail.is_empty() {
            for pair in tail.split(',') {
                let (a, b) = pair
                    .split_once('-')
                    .ok_or_else(|| Error::parse(s, format!("bad edge `{pair}`")))?;
                let a: usize = a.parse().map_err(|_| Error::parse(s, "bad vertex"))?;
                let b: usize = b.parse().map_err(|_| Error::parse(s, "bad vertex"))?;
                if a >= b {
                    return Err(Error::parse(s, format!("edge `{pair}` not written u<v")));
                }
                edges.push((a, b));
            }
        }
        if edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(s, "edges not sorted"));
        }
        Graph::from_edges(n, &edges).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// Common named graphs, mostly for tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(edges: usize) -> Graph {
        let e: Vec<_> = (0..edges).map(|i| (i, i + 1)).collect();
        Graph::from_edges(edges + 1, &e).unwrap()
    }

    pub fn cycle(k: usize) -> Graph {
        let mut e: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
        e.push((0, k - 1));
        Graph::from_edges(k, &e).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &e).unwrap()
    }

    pub fn complete(k: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                e.push((i, j));
            }
        }
        Graph::from_edges(k, &e).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..a {
            for j in 0..b {
                e.push((i, a + j));
            }
        }
        Graph::from_edges(a + b, &e).unwrap()
    }
}
