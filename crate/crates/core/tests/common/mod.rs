//! Test oracles that share no code with the library's canonical labeling.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use matchstick::Graph;

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k % 2 == 0 { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Edge set as a bit mask over the `n(n-1)/2` vertex pairs.
pub fn mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    g.edges().iter().fold(0, |m, &(u, v)| m | 1 << pair_index(n, u, v))
}

fn permuted_mask(n: usize, edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    edges
        .iter()
        .fold(0, |m, &(u, v)| m | 1 << pair_index(n, perm[u], perm[v]))
}

/// Labelled copies of `g` on its own vertex set.
pub fn orbit(g: &Graph) -> HashSet<u64> {
    let n = g.vertex_count();
    let edges = g.edges();
    permutations(n)
        .iter()
        .map(|p| permuted_mask(n, &edges, p))
        .collect()
}

/// Brute-force class invariant: vertex count and the smallest mask in the orbit.
pub fn orbit_min(g: &Graph) -> (usize, u64) {
    (g.vertex_count(), orbit(g).into_iter().min().expect("non-empty orbit"))
}

fn combinations(m: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Connected graphs with `n` edges and no isolated vertex, one orbit-minimum
/// per isomorphism class, found by scanning every labelled edge set.
pub fn labelled_classes(n: usize) -> BTreeSet<(usize, u64)> {
    let mut classes = BTreeSet::new();
    for v in 2..=n + 1 {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .collect();
        let mut seen: HashSet<u64> = HashSet::new();
        combinations(pairs.len(), n, &mut |idx| {
            let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
            let g = Graph::from_edges(v, &edges).unwrap();
            if !g.is_connected() || seen.contains(&mask(&g)) {
                return;
            }
            let orbit = orbit(&g);
            classes.insert((v, *orbit.iter().min().unwrap()));
            seen.extend(orbit);
        });
    }
    classes
}

/// Graph on `n` vertices made of the given `m`-edge subset of `g`, with
/// isolated vertices removed.
pub fn edge_subgraph(g: &Graph, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(g.vertex_count(), edges).unwrap().without_isolated()
}

pub fn for_each_subset(m: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    combinations(m, k, f)
}

/// Random connected graph: a random tree on `v` vertices plus extra edges.
pub fn connected_from(v: usize, parents: &[u64], extra: &[(usize, usize)]) -> Graph {
    let mut edges = BTreeSet::new();
    for i in 1..v {
        let p = (parents[i - 1] % i as u64) as usize;
        edges.insert((p, i));
    }
    for &(a, b) in extra {
        let (a, b) = (a % v, b % v);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(v, &edges).unwrap()
}
