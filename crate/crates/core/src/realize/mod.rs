//! Unit-edge, crossing-free drawings: exact obstructions, a direct tree
//! construction and a restarted numerical search, all judged by one
//! validator.

mod embedding;
mod obstruction;
mod solver;
mod tree;

use serde::{Deserialize, Serialize};

pub use embedding::{validate_embedding, Embedding, ValidationFailure, ValidationReport};
pub use obstruction::{exact_obstruction, Certificate};
pub use solver::{penalty_objective, restart_margin};
pub use tree::realize_tree;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::is_planar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveConfig {
    pub restarts: usize,
    pub length_tol: f64,
    pub cross_tol: f64,
    /// Radians.
    pub angle_tol: f64,
    pub vertex_sep: f64,
    pub rng_seed: u64,
    /// Levenberg-Marquardt iterations per restart.
    pub max_iterations: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            restarts: 512,
            length_tol: 1e-9,
            cross_tol: 1e-6,
            angle_tol: 1e-6,
            vertex_sep: 1e-6,
            rng_seed: 0x6d61_7463_6873,
            max_iterations: 300,
        }
    }
}

impl SolveConfig {
    /// Length tolerance divided by `factor`, the three margins multiplied.
    pub fn tightened(&self, factor: f64) -> SolveConfig {
        SolveConfig {
            length_tol: self.length_tol / factor,
            cross_tol: self.cross_tol * factor,
            angle_tol: self.angle_tol * factor,
            vertex_sep: self.vertex_sep * factor,
            ..self.clone()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("length_tol", self.length_tol),
            ("cross_tol", self.cross_tol),
            ("angle_tol", self.angle_tol),
            ("vertex_sep", self.vertex_sep),
        ];
        for (name, value) in positive {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Config(format!("{name} must be positive, got {value}")));
            }
        }
        if self.length_tol >= 0.5 {
            return Err(Error::Config("length_tol must be below 0.5".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::Config("max_iterations must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RealizeOutcome {
    Realized { embedding: Embedding },
    Obstructed { certificate: Certificate },
    /// No restart produced a valid drawing; this proves nothing.
    Exhausted { restarts: usize },
}

impl RealizeOutcome {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            RealizeOutcome::Realized { embedding } => Some(embedding),
            _ => None,
        }
    }

    pub fn is_realized(&self) -> bool {
        self.embedding().is_some()
    }
}

/// Looks for a matchstick drawing of a connected planar graph.
pub fn realize(g: &Graph, cfg: &SolveConfig) -> Result<RealizeOutcome> {
    cfg.validate()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_planar(g) {
        return Err(Error::NonPlanar);
    }
    if let Some(certificate) = exact_obstruction(g) {
        return Ok(RealizeOutcome::Obstructed { certificate });
    }
    if g.is_tree() {
        let embedding = realize_tree(g)?.normalized();
        if validate_embedding(g, &embedding, cfg)?.passed() {
            return Ok(RealizeOutcome::Realized { embedding });
        }
    }
    Ok(match solver::search(g, cfg) {
        Some((embedding, _)) => RealizeOutcome::Realized { embedding },
        None => RealizeOutcome::Exhausted {
            restarts: cfg.restarts,
        },
    })
}

/// Index of the first restart that succeeds, if any within the budget.
pub fn successful_restart(g: &Graph, cfg: &SolveConfig) -> Option<usize> {
    solver::search(g, cfg).map(|(_, r)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn triangle_is_realized() {
        let out = realize(&named::cycle(3), &SolveConfig::default()).unwrap();
        let e = out.embedding().expect("realized");
        assert!(validate_embedding(&named::cycle(3), e, &SolveConfig::default())
            .unwrap()
            .passed());
    }

    #[test]
    fn k4_is_obstructed() {
        let out = realize(&named::complete(4), &SolveConfig::default()).unwrap();
        assert!(matches!(
            out,
            RealizeOutcome::Obstructed {
                certificate: Certificate::FourClique { .. }
            }
        ));
    }

    #[test]
    fn rejects_bad_input() {
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(realize(&two, &SolveConfig::default()), Err(Error::Disconnected)));
        assert!(matches!(
            realize(&named::complete_bipartite(3, 3), &SolveConfig::default()),
            Err(Error::NonPlanar)
        ));
        let bad = SolveConfig {
            length_tol: -1.0,
            ..SolveConfig::default()
        };
        assert!(matches!(realize(&named::cycle(3), &bad), Err(Error::Config(_))));
    }

    #[test]
    fn trees_use_the_direct_construction() {
        let g = named::star(5);
        let out = realize(&g, &SolveConfig::default()).unwrap();
        assert_eq!(out.embedding().unwrap(), &realize_tree(&g).unwrap().normalized());
    }
}
