//! Re-checks a catalog from its stored graphs and coordinates alone.

use std::collections::HashSet;

use super::{CatalogId, CatalogRecord};
use crate::canon::canonical_form;
use crate::graph::Graph;
use crate::planarity::is_planar;
use crate::realize::{validate_embedding, Embedding, SolveConfig};
use crate::topology::{face_count, topo_key, Multigraph, TopoKey};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub members: usize,
    pub problems: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Validates every embedding under `cfg`, recomputes keys, face counts,
/// degrees, IDs and the q/p counts, and lists every disagreement.
pub fn verify_catalog(catalog: &[CatalogRecord], cfg: &SolveConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut seen_n = HashSet::new();
    for r in catalog {
        if !seen_n.insert(r.n) {
            report.problems.push(format!("edge count {} appears twice", r.n));
        }
        verify_record(r, cfg, &mut report);
    }
    report
}

fn verify_record(r: &CatalogRecord, cfg: &SolveConfig, report: &mut VerifyReport) {
    let problems = &mut report.problems;
    let mut class_keys: Vec<TopoKey> = Vec::new();
    let mut member_keys = HashSet::new();
    let mut order: Vec<(usize, usize, TopoKey)> = Vec::new();
    let mut p = 0;
    for (c, class) in r.classes.iter().enumerate() {
        let expected_class = format!("{}-{}", r.n, c + 1);
        if class.id_class != expected_class {
            problems.push(format!("class {} should be {expected_class}", class.id_class));
        }
        let stored_key = match class.topo_key.parse::<Multigraph>() {
            Ok(m) => m.key(),
            Err(e) => {
                problems.push(format!("class {}: {e}", class.id_class));
                continue;
            }
        };
        if class.members.is_empty() {
            problems.push(format!("class {} has no members", class.id_class));
        }
        let mut prev_key = None;
        for (m, member) in class.members.iter().enumerate() {
            report.members += 1;
            p += 1;
            let id = CatalogId {
                n: r.n,
                class_index: c + 1,
                member_index: m + 1,
            };
            let at = format!("member {}", member.id);
            if member.id != id.to_string() {
                problems.push(format!("{at} should be {id}"));
            }
            let g: Graph = match member.graph.parse() {
                Ok(g) => g,
                Err(e) => {
                    problems.push(format!("{at}: {e}"));
                    continue;
                }
            };
            if g.edge_count() != r.n {
                problems.push(format!("{at} has {} edges, record says {}", g.edge_count(), r.n));
            }
            if !g.is_connected() || !is_planar(&g) {
                problems.push(format!("{at} is not a connected planar graph"));
                continue;
            }
            let key = canonical_form(&g);
            if key.graph() != g {
                problems.push(format!("{at} is not stored in canonical form"));
            }
            if !member_keys.insert(key) {
                problems.push(format!("{at} duplicates another member"));
            }
            if prev_key.is_some_and(|k| k >= key) {
                problems.push(format!("{at} is out of order"));
            }
            prev_key = Some(key);
            if topo_key(&g) != stored_key {
                problems.push(format!("{at} does not smooth to {}", class.topo_key));
            }
            if face_count(&g).ok() != Some(class.faces) {
                problems.push(format!("{at} does not have {} faces", class.faces));
            }
            if g.max_degree() != class.delta {
                problems.push(format!("{at} does not have maximum degree {}", class.delta));
            }
            let e = Embedding::new(member.coords.clone());
            match validate_embedding(&g, &e, cfg) {
                Ok(v) if v.passed() => {}
                Ok(v) => problems.push(format!("{at}: embedding fails {:?}", v.failures)),
                Err(err) => problems.push(format!("{at}: {err}")),
            }
        }
        if class_keys.contains(&stored_key) {
            problems.push(format!("class {} repeats a topological key", class.id_class));
        }
        class_keys.push(stored_key.clone());
        order.push((class.faces, class.delta, stored_key));
    }
    if order.windows(2).any(|w| w[0] >= w[1]) {
        problems.push(format!("classes of edge count {} are out of order", r.n));
    }
    if r.q != class_keys.len() {
        problems.push(format!("edge count {}: q is {} but {} classes are stored", r.n, r.q, class_keys.len()));
    }
    if r.p != p {
        problems.push(format!("edge count {}: p is {} but {p} members are stored", r.n, r.p));
    }
}
