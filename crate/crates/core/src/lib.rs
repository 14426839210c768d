pub mod canon;
pub mod catalog;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod planarity;
pub mod realize;
pub mod topology;

pub use canon::{automorphism_count, canonical_form, canonical_graph, is_isomorphic, CanonicalKey};
pub use enumerate::{enumerate_connected, planar_connected_count, EnumerationConfig};
pub use error::{Error, Result};
pub use graph::Graph;
pub use planarity::is_planar;
pub use topology::{face_count, smooth, topo_key, Multigraph, TopoKey};
pub use realize::{realize, validate_embedding, Certificate, Embedding, RealizeOutcome, SolveConfig};
pub use catalog::{assign_ids, census, census_with, extrapolate_lower_bounds, CatalogId, CensusRecord};
