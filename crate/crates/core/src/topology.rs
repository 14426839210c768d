//! Homeomorphism classes: degree-2 smoothing and multigraph keys.
//!
//! Two graphs are homeomorphic iff their smoothings are isomorphic as
//! multigraphs, loops and edge multiplicities included. A cycle smooths to a
//! single vertex carrying one loop. Loops count 2 toward a vertex's degree.

use std::fmt;
use std::str::FromStr;

use crate::canon::{label_matrix, WeightMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::planarity::is_planar;

/// Undirected multigraph with loops. Edges are stored as `(u, v)` with
/// `u <= v`, sorted, parallel edges repeated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 || vertex_count > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: vertex_count,
                limit: MAX_VERTICES,
            });
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} out of range")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        Ok(Multigraph {
            vertex_count,
            edges: norm,
        })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Multigraph {
            vertex_count: g.vertex_count(),
            edges: g.edges(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    fn matrix(&self) -> WeightMatrix {
        let mut m = WeightMatrix::new(self.vertex_count);
        for &(a, b) in &self.edges {
            m.w[a][b] += 1;
            if a != b {
                m.w[b][a] += 1;
            }
        }
        m
    }

    fn from_matrix(m: &WeightMatrix, alive: &[usize]) -> Self {
        let mut edges = Vec::new();
        for (i, &a) in alive.iter().enumerate() {
            for (j, &b) in alive.iter().enumerate().skip(i) {
                for _ in 0..m.w[a][b] {
                    edges.push((i, j));
                }
            }
        }
        Multigraph {
            vertex_count: alive.len(),
            edges,
        }
    }

    /// Suppresses degree-2 vertices until none can be removed.
    pub fn smoothed(&self) -> Multigraph {
        let mut m = self.matrix();
        let n = self.vertex_count;
        let mut alive = vec![true; n];
        let degree = |m: &WeightMatrix, v: usize| -> usize {
            (0..n).filter(|&u| u != v).map(|u| m.w[v][u] as usize).sum::<usize>()
                + 2 * m.w[v][v] as usize
        };
        loop {
            // A vertex whose only edge is a loop is a smoothed cycle.
            let Some(v) = (0..n).find(|&v| alive[v] && m.w[v][v] == 0 && degree(&m, v) == 2)
            else {
                break;
            };
            let nbrs: Vec<usize> = (0..n).filter(|&u| u != v && m.w[v][u] > 0).collect();
            match nbrs[..] {
                [u] => {
                    m.w[v][u] = 0;
                    m.w[u][v] = 0;
                    m.w[u][u] += 1;
                }
                [u, w] => {
                    m.w[v][u] = 0;
                    m.w[u][v] = 0;
                    m.w[v][w] = 0;
                    m.w[w][v] = 0;
                    m.w[u][w] += 1;
                    m.w[w][u] += 1;
                }
                _ => unreachable!("degree 2 without loops means one or two neighbours"),
            }
            alive[v] = false;
        }
        let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        Multigraph::from_matrix(&m, &keep)
    }

    /// Canonically relabelled copy.
    pub fn canonical(&self) -> Multigraph {
        let m = self.matrix();
        let lab = label_matrix(&m);
        Multigraph::from_matrix(&m, &lab.order)
    }

    pub fn key(&self) -> TopoKey {
        let lab = label_matrix(&self.matrix());
        let mut bytes = Vec::with_capacity(lab.encoding.len() + 1);
        bytes.push(self.vertex_count as u8);
        bytes.extend_from_slice(&lab.encoding);
        TopoKey(bytes)
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.vertex_count)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph({self})")
    }
}

impl FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, "missing `:`"))?;
        let n: usize = head.parse().map_err(|_| Error::parse(s, "bad vertex count"))?;
        let mut edges = Vec::new();
        if !tail.is_empty() {
            for pair in tail.split(',') {
                let (a, b) = pair
                    .split_once('-')
                    .ok_or_else(|| Error::parse(s, format!("bad edge `{pair}`")))?;
                let a: usize = a.parse().map_err(|_| Error::parse(s, "bad vertex"))?;
                let b: usize = b.parse().map_err(|_| Error::parse(s, "bad vertex"))?;
                edges.push((a, b));
            }
        }
        Multigraph::new(n, &edges).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// Homeomorphism-class key: vertex count followed by the canonical upper
/// triangle (diagonal included) of the smoothed multiplicity matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopoKey(Vec<u8>);

impl TopoKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical smoothed multigraph this key encodes.
    pub fn multigraph(&self) -> Multigraph {
        let n = self.0[0] as usize;
        let mut edges = Vec::new();
        let mut idx = 1;
        for i in 0..n {
            for j in i..n {
                for _ in 0..self.0[idx] {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Multigraph {
            vertex_count: n,
            edges,
        }
    }
}

impl fmt::Display for TopoKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.multigraph())
    }
}

impl fmt::Debug for TopoKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TopoKey({self})")
    }
}

pub fn smooth(g: &Graph) -> Multigraph {
    Multigraph::from_graph(g).smoothed()
}

pub fn topo_key(g: &Graph) -> TopoKey {
    smooth(g).key()
}

/// Faces of a planar drawing, outer region included: `|E| - |V| + 2`.
pub fn face_count(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_planar(g) {
        return Err(Error::NonPlanar);
    }
    Ok(g.edge_count() + 2 - g.vertex_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn paths_smooth_to_an_edge() {
        for k in 1..=9 {
            assert_eq!(smooth(&named::path(k)).to_string(), "2:0-1");
        }
    }

    #[test]
    fn cycles_smooth_to_a_loop() {
        for k in 3..=9 {
            assert_eq!(smooth(&named::cycle(k)).to_string(), "1:0-0");
        }
        assert_eq!(topo_key(&named::cycle(9)), topo_key(&named::cycle(3)));
    }

    #[test]
    fn triangle_with_pendant() {
        let g: Graph = "4:0-1,0-2,1-2,2-3".parse().unwrap();
        let s = smooth(&g).canonical();
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.loop_count(), 1);
        assert_eq!(s.edge_count(), 2);
        let looped = (0..2).find(|&v| s.edges().contains(&(v, v))).unwrap();
        assert_eq!(s.degree(looped), 3);
    }

    #[test]
    fn spiders_share_a_class() {
        let t113: Graph = "6:0-1,0-2,0-3,3-4,4-5".parse().unwrap();
        let t122: Graph = "6:0-1,0-2,0-4,2-3,4-5".parse().unwrap();
        assert_eq!(topo_key(&t113), topo_key(&t122));
        assert_eq!(topo_key(&t113), topo_key(&named::star(3)));
        assert_ne!(topo_key(&named::path(5)), topo_key(&named::star(5)));
    }

    #[test]
    fn theta_and_double_loop() {
        // C4 plus a chord smooths to three parallel edges.
        let theta: Graph = "4:0-1,0-3,1-2,1-3,2-3".parse().unwrap();
        assert_eq!(smooth(&theta).canonical().to_string(), "2:0-1,0-1,0-1");
        // Two triangles sharing a vertex: one vertex, two loops.
        let bowtie: Graph = "5:0-1,0-2,0-3,0-4,1-2,3-4".parse().unwrap();
        assert_eq!(smooth(&bowtie).to_string(), "1:0-0,0-0");
    }

    #[test]
    fn key_round_trips_through_multigraph() {
        let g: Graph = "6:0-1,0-2,1-2,2-3,3-4,3-5,4-5".parse().unwrap();
        let key = topo_key(&g);
        assert_eq!(key.multigraph().key(), key);
        let text = key.to_string();
        let parsed: Multigraph = text.parse().unwrap();
        assert_eq!(parsed.key(), key);
    }

    #[test]
    fn face_counts() {
        assert_eq!(face_count(&named::star(4)).unwrap(), 1);
        assert_eq!(face_count(&named::cycle(3)).unwrap(), 2);
        let g: Graph = "6:0-1,0-2,0-3,1-2,1-4,2-5,3-4,3-5,4-5".parse().unwrap();
        assert_eq!(face_count(&g).unwrap(), 5);
        assert!(matches!(
            face_count(&named::complete_bipartite(3, 3)),
            Err(Error::NonPlanar)
        ));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(face_count(&split), Err(Error::Disconnected)));
    }

    #[test]
    fn smoothing_is_idempotent() {
        let g: Graph = "7:0-1,0-2,1-2,2-3,3-4,4-5,4-6,5-6".parse().unwrap();
        let s = smooth(&g);
        assert_eq!(s.smoothed(), s);
    }
}
