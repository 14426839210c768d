//! Exact certificates that a graph has no unit-distance drawing at all.

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Four pairwise adjacent vertices: no four points in the plane are
    /// pairwise at unit distance.
    FourClique { vertices: [usize; 4] },
    /// Two vertices with three common neighbours: two distinct unit circles
    /// meet in at most two points.
    SharedNeighbors { pair: [usize; 2], common: [usize; 3] },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::FourClique { .. } => "four_clique",
            Certificate::SharedNeighbors { .. } => "shared_neighbors",
        }
    }

    pub fn witness(&self) -> Vec<usize> {
        match self {
            Certificate::FourClique { vertices } => vertices.to_vec(),
            Certificate::SharedNeighbors { pair, common } => {
                pair.iter().chain(common.iter()).copied().collect()
            }
        }
    }

    /// Checks the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let distinct = |vs: &[usize]| {
            vs.iter().all(|&v| v < n)
                && vs.iter().enumerate().all(|(i, a)| !vs[i + 1..].contains(a))
        };
        match self {
            Certificate::FourClique { vertices } => {
                distinct(vertices)
                    && (0..4).all(|i| (i + 1..4).all(|j| g.has_edge(vertices[i], vertices[j])))
            }
            Certificate::SharedNeighbors { pair, common } => {
                distinct(&self.witness())
                    && common
                        .iter()
                        .all(|&c| g.has_edge(pair[0], c) && g.has_edge(pair[1], c))
            }
        }
    }
}

/// First certificate found, four-cliques before shared neighbourhoods. `None`
/// does not mean the graph is realizable.
pub fn exact_obstruction(g: &Graph) -> Option<Certificate> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in bits(g.neighbors(a) >> (a + 1)).map(|x| x + a + 1) {
            let ab = g.neighbors(a) & g.neighbors(b);
            for c in bits(ab).filter(|&c| c > b) {
                if let Some(d) = bits(ab & g.neighbors(c)).find(|&d| d > c) {
                    return Some(Certificate::FourClique {
                        vertices: [a, b, c, d],
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let common: Vec<usize> = bits(g.neighbors(a) & g.neighbors(b)).take(3).collect();
            if let [x, y, z] = common[..] {
                return Some(Certificate::SharedNeighbors {
                    pair: [a, b],
                    common: [x, y, z],
                });
            }
        }
    }
    None
}
