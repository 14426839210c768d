//! Canonical labelling by partition refinement and individualisation.
//!
//! The engine works on a small symmetric matrix of non-negative weights, so
//! simple graphs (0/1 entries) and multigraphs (edge multiplicities, loops on
//! the diagonal) share one implementation. The canonical encoding is the
//! lexicographically smallest upper triangle, diagonal included, over every
//! leaf of the search tree.

use std::fmt;

use crate::graph::{Graph, MAX_VERTICES};

/// Symmetric weight matrix on at most [`MAX_VERTICES`] vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct WeightMatrix {
    pub n: usize,
    pub w: [[u8; MAX_VERTICES]; MAX_VERTICES],
}

impl WeightMatrix {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        WeightMatrix {
            n,
            w: [[0; MAX_VERTICES]; MAX_VERTICES],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut m = WeightMatrix::new(g.vertex_count());
        for (u, v) in g.edges() {
            m.w[u][v] = 1;
            m.w[v][u] = 1;
        }
        m
    }

    /// Upper triangle (diagonal included) read in the given vertex order.
    pub fn encode(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            let row = &self.w[order[i]];
            for &vj in &order[i..] {
                out.push(row[vj]);
            }
        }
        out
    }

    /// Whether swapping `u` and `v` is an automorphism.
    fn transposable(&self, u: usize, v: usize) -> bool {
        if self.w[u][u] != self.w[v][v] {
            return false;
        }
        (0..self.n)
            .filter(|&x| x != u && x != v)
            .all(|x| self.w[u][x] == self.w[v][x])
    }
}

pub(crate) struct Labeling {
    /// `order[i]` is the original vertex that receives canonical label `i`.
    pub order: Vec<usize>,
    pub encoding: Vec<u8>,
}

impl Labeling {
    /// Inverse of `order`: new label of each original vertex.
    pub fn relabel(&self) -> Vec<usize> {
        let mut perm = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            perm[v] = i;
        }
        perm
    }
}

type Partition = Vec<Vec<usize>>;

/// Refines an ordered partition to the coarsest equitable one below it.
/// Split fragments are ordered by their signature, so the result depends
/// only on the matrix and the input partition, not on vertex names.
fn refine(m: &WeightMatrix, mut cells: Partition) -> Partition {
    let n = m.n;
    let mut cell_of = [0usize; MAX_VERTICES];
    loop {
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let k = cells.len();
        let signature = |v: usize| -> Vec<u16> {
            let mut sig = vec![0u16; k + 1];
            sig[0] = m.w[v][v] as u16;
            for u in 0..n {
                if u != v {
                    sig[1 + cell_of[u]] += m.w[v][u] as u16;
                }
            }
            sig
        };
        let mut next: Partition = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut tagged: Vec<(Vec<u16>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            tagged.sort();
            let mut start = 0;
            for i in 1..=tagged.len() {
                if i == tagged.len() || tagged[i].0 != tagged[start].0 {
                    next.push(tagged[start..i].iter().map(|t| t.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Search<'a> {
    m: &'a WeightMatrix,
    twin_of: [usize; MAX_VERTICES],
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Partition) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let enc = self.m.encode(&order);
            if self.best.as_ref().map_or(true, |(b, _)| enc < *b) {
                self.best = Some((enc, order));
            }
            return;
        };
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::with_capacity(cell.len());
        for &v in cell {
            // Twins give identical subtrees.
            let class = self.twin_of[v];
            if tried.contains(&class) {
                continue;
            }
            tried.push(class);
            let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(rest);
            child.extend_from_slice(&cells[target + 1..]);
            let child = refine(self.m, child);
            self.visit(child);
        }
    }
}

pub(crate) fn label_matrix(m: &WeightMatrix) -> Labeling {
    let n = m.n;
    let mut twin_of = [0usize; MAX_VERTICES];
    for v in 0..n {
        twin_of[v] = (0..v).find(|&u| m.transposable(u, v)).unwrap_or(v);
    }
    let mut search = Search {
        m,
        twin_of,
        best: None,
    };
    search.visit(refine(m, vec![(0..n).collect()]));
    let (encoding, order) = search.best.expect("search reaches at least one leaf");
    Labeling { order, encoding }
}

/// Number of permutations preserving every entry of `m`.
pub(crate) fn automorphisms(m: &WeightMatrix) -> u64 {
    fn extend(m: &WeightMatrix, image: &mut Vec<usize>, used: &mut [bool], profile: &[Vec<u8>]) -> u64 {
        let v = image.len();
        if v == m.n {
            return 1;
        }
        let mut total = 0;
        for u in 0..m.n {
            if used[u] || profile[u] != profile[v] || m.w[v][v] != m.w[u][u] {
                continue;
            }
            if image.iter().enumerate().all(|(a, &ia)| m.w[v][a] == m.w[u][ia]) {
                used[u] = true;
                image.push(u);
                total += extend(m, image, used, profile);
                image.pop();
                used[u] = false;
            }
        }
        total
    }
    let profile: Vec<Vec<u8>> = (0..m.n)
        .map(|v| {
            let mut row: Vec<u8> = (0..m.n).filter(|&u| u != v).map(|u| m.w[v][u]).collect();
            row.sort_unstable();
            row
        })
        .collect();
    extend(m, &mut Vec::with_capacity(m.n), &mut vec![false; m.n], &profile)
}

/// Isomorphism-class key of a simple graph: the vertex count followed by the
/// upper triangle of the canonically relabelled adjacency matrix.
///
/// Keys order first by vertex count, then lexicographically by the
/// row-major upper triangle.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(u128);

const KEY_SHIFT: u32 = 120;

impl CanonicalKey {
    fn from_encoding(n: usize, enc: &[u8]) -> Self {
        let mut bits = 0u128;
        let mut idx = 0;
        for i in 0..n {
            idx += 1; // diagonal
            for _ in i + 1..n {
                bits = bits << 1 | enc[idx] as u128;
                idx += 1;
            }
        }
        CanonicalKey((n as u128) << KEY_SHIFT | bits)
    }

    pub fn vertex_count(&self) -> usize {
        (self.0 >> KEY_SHIFT) as usize
    }

    /// Big-endian fixed-width byte form.
    pub fn to_bytes(&self) -> [u8; 16] {
        self.0.to_be_bytes()
    }

    pub fn from_bytes(bytes: [u8; 16]) -> Self {
        CanonicalKey(u128::from_be_bytes(bytes))
    }

    /// The canonically labelled graph this key encodes.
    pub fn graph(&self) -> Graph {
        let n = self.vertex_count();
        let pairs = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n).expect("key holds a valid vertex count");
        let mut pos = pairs;
        for i in 0..n {
            for j in i + 1..n {
                pos -= 1;
                if self.0 >> pos & 1 == 1 {
                    g.insert(i, j);
                }
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.graph())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:032x}", self.0)
    }
}

/// Canonical key and the relabelling (`perm[old] = new`) that produces the
/// canonical graph.
pub fn canonical_labeling(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    let lab = label_matrix(&WeightMatrix::from_graph(g));
    (
        CanonicalKey::from_encoding(g.vertex_count(), &lab.encoding),
        lab.relabel(),
    )
}

pub fn canonical_form(g: &Graph) -> CanonicalKey {
    canonical_labeling(g).0
}

/// The member of `g`'s isomorphism class that its key encodes.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).graph()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && canonical_form(g) == canonical_form(h)
}

pub fn automorphism_count(g: &Graph) -> u64 {
    automorphisms(&WeightMatrix::from_graph(g))
}
