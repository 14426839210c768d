//! Planarity by path addition (Demoucron, Malgrange and Pertuiset) applied
//! to each biconnected block.
//!
//! A graph is planar iff every block is. For a 2-connected block we grow an
//! embedded subgraph from a cycle: each step computes the fragments of the
//! block relative to the embedded part, the faces that can host each
//! fragment, and embeds one path of the most constrained fragment. A fragment
//! with no admissible face proves non-planarity.

use crate::graph::{bits, Graph};

pub fn is_planar(g: &Graph) -> bool {
    let v = g.vertex_count();
    let e = g.edge_count();
    if v >= 3 && e > 3 * v - 6 {
        return false;
    }
    blocks(g).into_iter().all(|block| {
        // A bridge is a block on its own.
        block.len() < 3 || block_is_planar(g, &block)
    })
}

/// Edge sets of the biconnected blocks (Hopcroft-Tarjan with an edge stack).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for w in s.g.neighbor_iter(u) {
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, Some(u));
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(edge) = s.stack.pop() {
                        block.push(edge);
                        if edge == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if Some(w) != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let n = g.vertex_count();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

struct Fragment {
    attachments: u16,
    /// Path between two attachments, endpoints included.
    path: Vec<usize>,
}

fn block_is_planar(g: &Graph, block: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![0u16; n];
    for &(u, v) in block {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let block_vertices = adj
        .iter()
        .enumerate()
        .filter(|(_, &r)| r != 0)
        .fold(0u16, |m, (v, _)| m | 1 << v);

    let cycle = find_cycle(&adj, block_vertices.trailing_zeros() as usize);
    let mut embedded_v: u16 = cycle.iter().fold(0, |m, &v| m | 1 << v);
    let mut embedded_adj = vec![0u16; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_adj[a] |= 1 << b;
        embedded_adj[b] |= 1 << a;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let fragments = fragments(&adj, block_vertices, embedded_v, &embedded_adj);
        if fragments.is_empty() {
            return true;
        }
        let face_masks: Vec<u16> = faces
            .iter()
            .map(|f| f.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut chosen: Option<(usize, usize)> = None;
        let mut chosen_count = usize::MAX;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments & !face_masks[f] == 0)
                .collect();
            if admissible.is_empty() {
                return false;
            }
            if admissible.len() < chosen_count {
                chosen_count = admissible.len();
                chosen = Some((i, admissible[0]));
            }
        }
        let (fi, face_idx) = chosen.expect("at least one fragment");
        let path = &fragments[fi].path;
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            embedded_adj[w[0]] |= 1 << w[1];
            embedded_adj[w[1]] |= 1 << w[0];
            embedded_v |= 1 << w[0] | 1 << w[1];
        }
    }
}

fn find_cycle(adj: &[u16], start: usize) -> Vec<usize> {
    // DFS until a back edge closes a cycle.
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![start];
    depth[start] = 0;
    let mut iter_pos = vec![0u16; n];
    for v in 0..n {
        iter_pos[v] = adj[v];
    }
    while let Some(&u) = stack.last() {
        if iter_pos[u] == 0 {
            stack.pop();
            continue;
        }
        let w = iter_pos[u].trailing_zeros() as usize;
        iter_pos[u] &= iter_pos[u] - 1;
        if w == parent[u] {
            continue;
        }
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push(w);
        } else if depth[w] < depth[u] {
            let mut cycle = vec![u];
            let mut x = u;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    unreachable!("a 2-connected block with several edges has a cycle")
}

fn fragments(adj: &[u16], block_vertices: u16, embedded_v: u16, embedded_adj: &[u16]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    // Chords: unembedded edges between embedded vertices.
    for u in bits(embedded_v) {
        for v in bits(adj[u] & embedded_v & !embedded_adj[u]) {
            if u < v {
                out.push(Fragment {
                    attachments: 1 << u | 1 << v,
                    path: vec![u, v],
                });
            }
        }
    }
    // Components of the block outside the embedded part.
    let mut free = block_vertices & !embedded_v;
    while free != 0 {
        let start = free.trailing_zeros() as usize;
        let mut comp = 1u16 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            next &= free & !comp;
            comp |= next;
            frontier = next;
        }
        free &= !comp;
        let attachments = bits(comp).fold(0u16, |m, v| m | adj[v]) & embedded_v;
        let a = attachments.trailing_zeros() as usize;
        let b_mask = attachments & !(1 << a);
        debug_assert!(b_mask != 0, "blocks are 2-connected");
        let b = b_mask.trailing_zeros() as usize;
        // BFS inside the component from a's neighbours to a neighbour of b.
        let mut prev = vec![usize::MAX; n];
        let mut queue: std::collections::VecDeque<usize> = bits(adj[a] & comp).collect();
        let mut seen = adj[a] & comp;
        for v in bits(seen) {
            prev[v] = a;
        }
        let mut end = usize::MAX;
        while let Some(v) = queue.pop_front() {
            if adj[v] >> b & 1 == 1 {
                end = v;
                break;
            }
            for w in bits(adj[v] & comp & !seen) {
                seen |= 1 << w;
                prev[w] = v;
                queue.push_back(w);
            }
        }
        let mut path = vec![b];
        let mut x = end;
        while x != a {
            path.push(x);
            x = prev[x];
        }
        path.push(a);
        path.reverse();
        out.push(Fragment { attachments, path });
    }
    out
}

/// Splits a face boundary (cyclic vertex list) along a path joining two of
/// its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let len = face.len();
    let ia = face.iter().position(|&v| v == a).unwrap();
    let ib = face.iter().position(|&v| v == b).unwrap();
    let inner = &path[1..path.len() - 1];
    // a -> ... -> b along the face, then back through the path.
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % len;
    }
    f1.extend(inner.iter().rev());
    // b -> ... -> a along the face, then forward through the path.
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % len;
    }
    f2.extend(inner.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_examples() {
        assert!(is_planar(&named::cycle(3)));
        assert!(!is_planar(&named::complete_bipartite(3, 3)));
        assert!(!is_planar(&named::complete(5)));
        assert!(is_planar(&named::complete(4)));
        assert!(is_planar(&named::complete_bipartite(2, 7)));
    }

    #[test]
    fn subdivided_kuratowski_graphs() {
        let k33 = named::complete_bipartite(3, 3).subdivided(0, 3).unwrap();
        assert!(!is_planar(&k33));
        let k5 = named::complete(5).subdivided(0, 1).unwrap().subdivided(2, 3).unwrap();
        assert!(!is_planar(&k5));
    }

    #[test]
    fn planar_but_dense() {
        // Octahedron, wheel and triangular prism.
        let oct: Graph = "6:0-1,0-2,0-3,0-4,1-2,1-4,1-5,2-3,2-5,3-4,3-5,4-5".parse().unwrap();
        assert!(is_planar(&oct));
        let wheel: Graph = "7:0-1,0-2,0-3,0-4,0-5,0-6,1-2,1-6,2-3,3-4,4-5,5-6".parse().unwrap();
        assert!(is_planar(&wheel));
        let prism: Graph = "6:0-1,0-2,0-3,1-2,1-4,2-5,3-4,3-5,4-5".parse().unwrap();
        assert!(is_planar(&prism));
        // Petersen graph is not planar.
        let petersen: Graph =
            "10:0-1,0-4,0-5,1-2,1-6,2-3,2-7,3-4,3-8,4-9,5-7,5-8,6-8,6-9,7-9".parse().unwrap();
        assert!(!is_planar(&petersen));
    }

    #[test]
    fn blocks_of_bowtie() {
        let bowtie: Graph = "5:0-1,0-2,0-3,0-4,1-2,3-4".parse().unwrap();
        let b = blocks(&bowtie);
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|blk| blk.len() == 3));
    }
}
