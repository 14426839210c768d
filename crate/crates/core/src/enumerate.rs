//! Isomorph-free generation of connected graphs by edge count.
//!
//! Each `n`-edge representative is extended by one edge, either between two
//! existing vertices or to a fresh pendant vertex. A child is kept only when
//! its designated deletion (the lexicographically last deletable edge of its
//! canonical graph) leads back to the parent's class, so every class of
//! `n + 1` edges has exactly one parent class and no global seen-set is
//! needed.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::planarity::is_planar;

/// Largest edge count the generator accepts.
pub const MAX_EDGES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_edges: usize,
    pub parallel_workers: usize,
}

impl EnumerationConfig {
    pub fn new(max_edges: usize) -> Self {
        EnumerationConfig {
            max_edges,
            parallel_workers: default_workers(),
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.parallel_workers = workers.max(1);
        self
    }

    fn validate(&self) -> Result<()> {
        check_edges(self.max_edges)?;
        if self.parallel_workers == 0 {
            return Err(Error::Config("parallel_workers must be at least 1".into()));
        }
        Ok(())
    }
}

/// Worker count from `MATCHSTICK_WORKERS`, else the number of CPUs.
pub fn default_workers() -> usize {
    std::env::var("MATCHSTICK_WORKERS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&w: &usize| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub(crate) fn check_edges(n: usize) -> Result<()> {
    if n == 0 || n > MAX_EDGES {
        return Err(Error::Capacity {
            what: "edge count",
            got: n,
            limit: MAX_EDGES,
        });
    }
    Ok(())
}

/// Runs `f` on a dedicated pool with `workers` threads.
pub(crate) fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}

/// One canonical representative per connected class, for every edge count
/// `1..=cfg.max_edges`. Level `i` holds the `i + 1`-edge graphs sorted by key.
pub fn enumerate_levels(cfg: &EnumerationConfig) -> Result<Vec<Vec<Graph>>> {
    cfg.validate()?;
    with_pool(cfg.parallel_workers, || {
        let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(cfg.max_edges);
        levels.push(vec![Graph::from_edges(2, &[(0, 1)]).expect("single edge")]);
        while levels.len() < cfg.max_edges {
            let parents = levels.last().expect("non-empty");
            let mut children: Vec<(CanonicalKey, Graph)> = parents
                .par_iter()
                .flat_map_iter(|p| accepted_children(p))
                .collect();
            children.sort_unstable_by_key(|c| c.0);
            levels.push(children.into_iter().map(|c| c.1).collect());
        }
        Ok(levels)
    })
}

/// Connected graphs with exactly `n` edges, one canonical representative per
/// isomorphism class, sorted by [`CanonicalKey`].
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected_with(n, default_workers())
}

pub fn enumerate_connected_with(n: usize, workers: usize) -> Result<Vec<Graph>> {
    let cfg = EnumerationConfig::new(n).with_workers(workers);
    Ok(enumerate_levels(&cfg)?.pop().expect("at least one level"))
}

pub fn planar_connected_count(n: usize) -> Result<usize> {
    Ok(enumerate_connected(n)?.iter().filter(|g| is_planar(g)).count())
}

/// The edge whose removal defines the canonical parent of a canonical graph.
pub(crate) fn designated_deletion(g: &Graph) -> Option<(usize, usize)> {
    g.edges()
        .into_iter()
        .rev()
        .find(|&(u, v)| g.is_deletable_edge(u, v))
}

fn accepted_children(parent: &Graph) -> Vec<(CanonicalKey, Graph)> {
    let parent_key = canonical_form(parent);
    let n = parent.vertex_count();
    let mut candidates = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !parent.has_edge(u, v) {
                candidates.push(parent.with_edge(u, v).expect("free pair"));
            }
        }
    }
    if n < MAX_VERTICES {
        for v in 0..n {
            candidates.push(parent.with_pendant(v).expect("room for a vertex"));
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for child in candidates {
        let key = canonical_form(&child);
        if seen.contains(&key) {
            continue;
        }
        let canon = key.graph();
        let (a, b) = designated_deletion(&canon).expect("connected graphs with 2+ edges");
        let reduced = canon.without_edge(a, b).expect("edge exists");
        if canonical_form(&reduced) == parent_key {
            seen.insert(key);
            out.push((key, canon));
        }
    }
    out
}
