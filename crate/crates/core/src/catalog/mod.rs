//! The census pipeline: enumerate, keep planar graphs, realize, group by
//! homeomorphism class and number the result.

mod emit;
mod published;
mod verify;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

pub use emit::{
    plots_csv, read_catalog, svg, table1_csv, table2_csv, to_catalog, write_artifacts,
    write_catalog, write_svgs, CatalogClass, CatalogMember, CatalogRecord,
};
pub use published::{
    discrepancy_report, extrapolate_lower_bounds, LowerBounds, Projection, PUBLISHED_BY_FACES,
    PUBLISHED_P, PUBLISHED_Q,
};
pub use verify::{verify_catalog, VerifyReport};

use crate::canon::{canonical_form, CanonicalKey};
use crate::enumerate::{enumerate_levels, with_pool, EnumerationConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::is_planar;
use crate::realize::{realize, Embedding, RealizeOutcome, SolveConfig};
use crate::topology::{face_count, topo_key, TopoKey};

/// Largest edge count the census runs to.
pub const CENSUS_MAX_EDGES: usize = 9;

#[derive(Debug, Clone, PartialEq)]
pub struct Member {
    pub key: CanonicalKey,
    /// The canonical graph of `key`; `embedding` is indexed by its vertices.
    pub graph: Graph,
    pub embedding: Embedding,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopoClass {
    pub topo_key: TopoKey,
    pub faces: usize,
    pub max_degree: usize,
    /// Sorted by canonical key.
    pub members: Vec<Member>,
}

/// A planar graph that did not make it into the census.
#[derive(Debug, Clone, PartialEq)]
pub struct Rejection {
    pub graph: Graph,
    pub outcome: RealizeOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CensusRecord {
    pub n: usize,
    /// Connected planar classes the realizability filter started from.
    pub planar_pool: usize,
    /// In catalog order: faces, then maximum degree, then topological key.
    pub classes: Vec<TopoClass>,
    pub rejected: Vec<Rejection>,
}

impl CensusRecord {
    /// Homeomorphism classes.
    pub fn q(&self) -> usize {
        self.classes.len()
    }

    /// Isomorphism classes.
    pub fn p(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    /// Face count to (classes, members).
    pub fn by_faces(&self) -> BTreeMap<usize, (usize, usize)> {
        let mut out = BTreeMap::new();
        for c in &self.classes {
            let e = out.entry(c.faces).or_insert((0, 0));
            e.0 += 1;
            e.1 += c.members.len();
        }
        out
    }

    pub fn exhausted(&self) -> impl Iterator<Item = &Rejection> {
        self.rejected
            .iter()
            .filter(|r| matches!(r.outcome, RealizeOutcome::Exhausted { .. }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CatalogId {
    pub n: usize,
    pub class_index: usize,
    pub member_index: usize,
}

impl CatalogId {
    /// The `n-c` prefix shared by a class.
    pub fn class_label(&self) -> String {
        format!("{}-{}", self.n, self.class_index)
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.n, self.class_index, self.member_index)
    }
}

/// IDs follow the record's class and member order, both 1-based.
pub fn assign_ids(record: &CensusRecord) -> HashMap<CanonicalKey, CatalogId> {
    let mut out = HashMap::new();
    for (c, class) in record.classes.iter().enumerate() {
        for (m, member) in class.members.iter().enumerate() {
            out.insert(
                member.key,
                CatalogId {
                    n: record.n,
                    class_index: c + 1,
                    member_index: m + 1,
                },
            );
        }
    }
    out
}

pub fn census(n_max: usize, cfg: &SolveConfig) -> Result<Vec<CensusRecord>> {
    census_with(n_max, cfg, crate::enumerate::default_workers())
}

/// Census for every edge count `1..=n_max` on `workers` threads. The result
/// does not depend on `workers`.
pub fn census_with(n_max: usize, cfg: &SolveConfig, workers: usize) -> Result<Vec<CensusRecord>> {
    if n_max == 0 || n_max > CENSUS_MAX_EDGES {
        return Err(Error::Capacity {
            what: "census edge count",
            got: n_max,
            limit: CENSUS_MAX_EDGES,
        });
    }
    cfg.validate()?;
    let levels = enumerate_levels(&EnumerationConfig::new(n_max).with_workers(workers))?;
    with_pool(workers, || {
        levels
            .iter()
            .enumerate()
            .map(|(i, level)| census_level(i + 1, level, cfg))
            .collect()
    })
}

fn census_level(n: usize, level: &[Graph], cfg: &SolveConfig) -> Result<CensusRecord> {
    let planar: Vec<Graph> = level
        .iter()
        .filter(|g| is_planar(g))
        .map(|g| canonical_form(g).graph())
        .collect();
    let outcomes: Vec<RealizeOutcome> = planar
        .par_iter()
        .map(|g| realize(g, cfg))
        .collect::<Result<_>>()?;

    let mut groups: BTreeMap<TopoKey, Vec<Member>> = BTreeMap::new();
    let mut rejected = Vec::new();
    for (g, outcome) in planar.iter().zip(outcomes) {
        match outcome {
            RealizeOutcome::Realized { embedding } => {
                groups.entry(topo_key(g)).or_default().push(Member {
                    key: canonical_form(g),
                    graph: *g,
                    embedding,
                });
            }
            outcome => rejected.push(Rejection { graph: *g, outcome }),
        }
    }

    let mut classes = Vec::with_capacity(groups.len());
    for (topo_key, mut members) in groups {
        members.sort_by_key(|m| m.key);
        let faces = face_count(&members[0].graph)?;
        let max_degree = members[0].graph.max_degree();
        for m in &members[1..] {
            if face_count(&m.graph)? != faces || m.graph.max_degree() != max_degree {
                return Err(Error::InvalidGraph(format!(
                    "class {topo_key} mixes face counts or maximum degrees"
                )));
            }
        }
        classes.push(TopoClass {
            topo_key,
            faces,
            max_degree,
            members,
        });
    }
    classes.sort_by(|a, b| {
        (a.faces, a.max_degree, &a.topo_key).cmp(&(b.faces, b.max_degree, &b.topo_key))
    });
    Ok(CensusRecord {
        n,
        planar_pool: planar.len(),
        classes,
        rejected,
    })
}
