use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SolveConfig;
use crate::error::{Error, Result};
use crate::geometry::{angle_between, point_segment, segment_distance, Point};
use crate::graph::Graph;

/// Planar coordinates in unit-edge units, one point per vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Embedding {
    pub points: Vec<Point>,
}

impl Embedding {
    pub fn new(points: Vec<Point>) -> Self {
        Embedding { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Rotation by `theta` about the origin followed by a translation.
    pub fn moved(&self, theta: f64, shift: Point) -> Embedding {
        Embedding::new(self.points.iter().map(|p| p.rotated(theta).add(shift)).collect())
    }

    /// Translates so that the bounding box starts at the origin.
    pub fn normalized(&self) -> Embedding {
        let min_x = self.points.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
        let min_y = self.points.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
        let shift = Point::new(-min_x, -min_y);
        Embedding::new(self.points.iter().map(|p| p.add(shift)).collect())
    }
}

/// One line per vertex, `v x y`, coordinates with 17 significant digits.
impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (v, p) in self.points.iter().enumerate() {
            writeln!(out, "{v} {:.16e} {:.16e}", p.x, p.y)?;
        }
        f.write_str(&out)
    }
}

impl FromStr for Embedding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut points = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [v, x, y] = parts[..] else {
                return Err(Error::parse(line, "expected `v x y`"));
            };
            let v: usize = v.parse().map_err(|_| Error::parse(line, "bad vertex index"))?;
            if v != points.len() {
                return Err(Error::parse(line, "vertex indices must be 0, 1, 2, ..."));
            }
            let x: f64 = x.parse().map_err(|_| Error::parse(line, "bad x"))?;
            let y: f64 = y.parse().map_err(|_| Error::parse(line, "bad y"))?;
            points.push(Point::new(x, y));
        }
        Ok(Embedding { points })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValidationFailure {
    NonFinite,
    EdgeLength,
    Crossing,
    IncidentAngle,
    VertexSeparation,
    VertexOnEdge,
}

/// Geometric margins of a drawing. Each minimum is `f64::INFINITY` when the
/// graph has no pair of the corresponding kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub max_length_deviation: f64,
    /// Minimum segment distance between edges that share no endpoint.
    pub min_crossing_margin: f64,
    /// Minimum angle between two edges at a common endpoint, in radians.
    pub min_incident_angle: f64,
    pub min_vertex_separation: f64,
    pub min_vertex_edge_distance: f64,
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_embedding(g: &Graph, e: &Embedding, cfg: &SolveConfig) -> Result<ValidationReport> {
    let n = g.vertex_count();
    if e.len() != n {
        return Err(Error::PointCount {
            expected: n,
            got: e.len(),
        });
    }
    let p = &e.points;
    let edges = g.edges();
    let mut report = ValidationReport {
        max_length_deviation: 0.0,
        min_crossing_margin: f64::INFINITY,
        min_incident_angle: f64::INFINITY,
        min_vertex_separation: f64::INFINITY,
        min_vertex_edge_distance: f64::INFINITY,
        failures: Vec::new(),
    };
    if p.iter().any(|q| !q.is_finite()) {
        report.max_length_deviation = f64::NAN;
        report.failures.push(ValidationFailure::NonFinite);
        return Ok(report);
    }

    for &(u, v) in &edges {
        let dev = (p[u].dist(p[v]) - 1.0).abs();
        report.max_length_deviation = report.max_length_deviation.max(dev);
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let dist = segment_distance(p[a], p[b], p[c], p[d]);
            report.min_crossing_margin = report.min_crossing_margin.min(dist);
        }
    }
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbor_iter(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                let angle = angle_between(p[a].sub(p[v]), p[b].sub(p[v]));
                report.min_incident_angle = report.min_incident_angle.min(angle);
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            report.min_vertex_separation = report.min_vertex_separation.min(p[u].dist(p[v]));
        }
    }
    for &(a, b) in &edges {
        for k in (0..n).filter(|&k| k != a && k != b) {
            let (d, _) = point_segment(p[k], p[a], p[b]);
            report.min_vertex_edge_distance = report.min_vertex_edge_distance.min(d);
        }
    }

    let checks = [
        (report.max_length_deviation <= cfg.length_tol, ValidationFailure::EdgeLength),
        (report.min_crossing_margin >= cfg.cross_tol, ValidationFailure::Crossing),
        (report.min_incident_angle >= cfg.angle_tol, ValidationFailure::IncidentAngle),
        (report.min_vertex_separation >= cfg.vertex_sep, ValidationFailure::VertexSeparation),
        (report.min_vertex_edge_distance >= cfg.vertex_sep, ValidationFailure::VertexOnEdge),
    ];
    report.failures = checks
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, f)| f)
        .collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn triangle() -> Embedding {
        Embedding::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 3f64.sqrt() / 2.0),
        ])
    }

    #[test]
    fn equilateral_triangle_passes() {
        let r = validate_embedding(&named::cycle(3), &triangle(), &SolveConfig::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.max_length_deviation < 1e-15);
    }

    #[test]
    fn perturbed_square_fails_on_length() {
        let mut sq = Embedding::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ]);
        sq.points[2].x += 0.1;
        let r = validate_embedding(&named::cycle(4), &sq, &SolveConfig::default()).unwrap();
        assert!(r.failures.contains(&ValidationFailure::EdgeLength));
        assert!(r.max_length_deviation > 0.04);
    }

    #[test]
    fn crossing_segments_fail() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let e = Embedding::new(vec![
            Point::new(-0.5, 0.0),
            Point::new(0.5, 0.0),
            Point::new(0.0, -0.5),
            Point::new(0.0, 0.5),
        ]);
        let r = validate_embedding(&g, &e, &SolveConfig::default()).unwrap();
        assert!(r.failures.contains(&ValidationFailure::Crossing));
        assert_eq!(r.min_crossing_margin, 0.0);
    }

    #[test]
    fn folded_edges_fail_on_angle() {
        let e = Embedding::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 0.0)]);
        let r = validate_embedding(&named::path(2).permuted(&[1, 0, 2]), &e, &SolveConfig::default())
            .unwrap();
        assert!(r.failures.contains(&ValidationFailure::IncidentAngle));
        assert!(r.failures.contains(&ValidationFailure::VertexSeparation));
    }

    #[test]
    fn straight_path_is_legal() {
        let e = Embedding::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0)]);
        let r = validate_embedding(&named::path(2), &e, &SolveConfig::default()).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn point_count_mismatch() {
        assert!(matches!(
            validate_embedding(&named::cycle(4), &triangle(), &SolveConfig::default()),
            Err(Error::PointCount { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn text_format_is_exact() {
        let e = triangle();
        let text = e.to_string();
        assert!(text.starts_with("0 0.0000000000000000e0 0.0000000000000000e0\n"));
        let back: Embedding = text.parse().unwrap();
        assert_eq!(back, e);
    }
}
