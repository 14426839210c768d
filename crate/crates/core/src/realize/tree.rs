//! Direct drawing of trees with nested angular wedges.
//!
//! Every edge into the subtree of `c` points in a direction inside the wedge
//! assigned to `c`. Sibling wedges are disjoint and narrower than a half
//! turn, so each subtree stays inside the cone spanned by its wedge at its
//! parent and no two subtrees meet.

use std::f64::consts::PI;

use super::Embedding;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::Graph;

/// Fraction of each sub-wedge that is actually used; the rest separates
/// siblings.
const WEDGE_FILL: f64 = 0.8;
const MAX_WEDGE: f64 = 0.9 * PI;

pub fn realize_tree(g: &Graph) -> Result<Embedding> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_tree() {
        return Err(Error::HasCycle);
    }
    let n = g.vertex_count();
    let root = centre(g);
    let mut points = vec![Point::default(); n];
    let leaves = leaf_counts(g, root);
    place_children(g, root, None, -PI, PI, &leaves, &mut points);
    Ok(Embedding::new(points))
}

/// Vertex of minimum eccentricity, lowest index on ties.
fn centre(g: &Graph) -> usize {
    (0..g.vertex_count())
        .min_by_key(|&v| (eccentricity(g, v), v))
        .expect("non-empty graph")
}

fn eccentricity(g: &Graph, v: usize) -> usize {
    let mut seen = 1u16 << v;
    let mut frontier = seen;
    let mut depth = 0;
    loop {
        let mut next = 0u16;
        for u in crate::graph::bits(frontier) {
            next |= g.neighbors(u);
        }
        next &= !seen;
        if next == 0 {
            return depth;
        }
        seen |= next;
        frontier = next;
        depth += 1;
    }
}

/// Leaves below each vertex when the tree hangs from `root`.
fn leaf_counts(g: &Graph, root: usize) -> Vec<usize> {
    fn walk(g: &Graph, v: usize, parent: Option<usize>, out: &mut [usize]) -> usize {
        let mut total = 0;
        for c in g.neighbor_iter(v).filter(|&c| Some(c) != parent) {
            total += walk(g, c, Some(v), out);
        }
        out[v] = total.max(1);
        out[v]
    }
    let mut out = vec![0; g.vertex_count()];
    walk(g, root, None, &mut out);
    out
}

fn place_children(
    g: &Graph,
    v: usize,
    parent: Option<usize>,
    lo: f64,
    hi: f64,
    leaves: &[usize],
    points: &mut [Point],
) {
    let children: Vec<usize> = g.neighbor_iter(v).filter(|&c| Some(c) != parent).collect();
    let total: usize = children.iter().map(|&c| leaves[c]).sum();
    let mut start = lo;
    for c in children {
        let share = (hi - lo) * leaves[c] as f64 / total as f64;
        let mid = start + share / 2.0;
        let width = (share * WEDGE_FILL).min(MAX_WEDGE);
        points[c] = points[v].add(Point::polar(mid));
        place_children(g, c, Some(v), mid - width / 2.0, mid + width / 2.0, leaves, points);
        start += share;
    }
}
