//! File views of a census. `catalog.json` is the source of truth; the CSV,
//! SVG and report files are derived from it.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{assign_ids, published, CensusRecord};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::Graph;
use crate::realize::{Certificate, RealizeOutcome};

/// Pixels per unit edge length.
const SCALE: f64 = 100.0;
const PADDING: f64 = 10.0;
const FACE_COLUMNS: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub n: usize,
    pub q: usize,
    pub p: usize,
    pub classes: Vec<CatalogClass>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogClass {
    pub id_class: String,
    #[serde(rename = "F")]
    pub faces: usize,
    pub delta: usize,
    /// Smoothed multigraph in `n:u-v,...` form.
    pub topo_key: String,
    pub members: Vec<CatalogMember>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogMember {
    pub id: String,
    pub graph: String,
    pub coords: Vec<Point>,
}

#[derive(Serialize)]
struct Unresolved {
    n: usize,
    graph: String,
    restarts: usize,
}

#[derive(Serialize)]
struct Obstructed<'a> {
    n: usize,
    graph: String,
    certificate: &'a Certificate,
}

pub fn to_catalog(records: &[CensusRecord]) -> Vec<CatalogRecord> {
    records
        .iter()
        .map(|r| {
            let ids = assign_ids(r);
            let classes = r
                .classes
                .iter()
                .map(|c| CatalogClass {
                    id_class: ids[&c.members[0].key].class_label(),
                    faces: c.faces,
                    delta: c.max_degree,
                    topo_key: c.topo_key.to_string(),
                    members: c
                        .members
                        .iter()
                        .map(|m| CatalogMember {
                            id: ids[&m.key].to_string(),
                            graph: m.graph.to_string(),
                            coords: m.embedding.points.clone(),
                        })
                        .collect(),
                })
                .collect();
            CatalogRecord {
                n: r.n,
                q: r.q(),
                p: r.p(),
                classes,
            }
        })
        .collect()
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn json<T: Serialize>(value: &T, path: &Path) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    s.push('\n');
    Ok(s)
}

pub fn write_catalog(catalog: &[CatalogRecord], path: &Path) -> Result<()> {
    write_file(path, &json(&catalog, path)?)
}

pub fn read_catalog(path: &Path) -> Result<Vec<CatalogRecord>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })
}

pub fn table1_csv(catalog: &[CatalogRecord]) -> String {
    let mut out = String::from("n,q,p\n");
    for r in catalog {
        writeln!(out, "{},{},{}", r.n, r.q, r.p).unwrap();
    }
    out
}

/// Homeomorphism classes by edge count and face count.
pub fn table2_csv(catalog: &[CatalogRecord]) -> String {
    let mut out = String::from("n");
    for f in 1..=FACE_COLUMNS {
        write!(out, ",F{f}").unwrap();
    }
    out.push('\n');
    for r in catalog {
        let mut row = [0usize; FACE_COLUMNS];
        for c in &r.classes {
            row[c.faces - 1] += 1;
        }
        write!(out, "{}", r.n).unwrap();
        for x in row {
            write!(out, ",{x}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Growth data. Logarithms are natural; ratios against the previous edge
/// count are blank on the first row. `planar_counts[i]` belongs to
/// `catalog[i]`.
pub fn plots_csv(catalog: &[CatalogRecord], planar_counts: &[usize]) -> String {
    let mut out =
        String::from("n,q,p,log_q,log_p,q_ratio,p_ratio,p_over_q,planar_fraction\n");
    let mut prev: Option<&CatalogRecord> = None;
    for (r, &planar) in catalog.iter().zip(planar_counts) {
        let (q, p) = (r.q as f64, r.p as f64);
        let (q_ratio, p_ratio) = match prev {
            Some(prev) if prev.n + 1 == r.n => (
                format!("{:.6}", q / prev.q as f64),
                format!("{:.6}", p / prev.p as f64),
            ),
            _ => (String::new(), String::new()),
        };
        writeln!(
            out,
            "{},{},{},{:.6},{:.6},{},{},{:.6},{:.6}",
            r.n,
            r.q,
            r.p,
            q.ln(),
            p.ln(),
            q_ratio,
            p_ratio,
            p / q,
            p / planar as f64
        )
        .unwrap();
        prev = Some(r);
    }
    out
}

fn px(v: f64) -> String {
    let r = (v * 100.0).round() / 100.0;
    format!("{:.2}", if r == 0.0 { 0.0 } else { r })
}

/// Drawing of one embedding, y axis pointing up.
pub fn svg(g: &Graph, points: &[Point]) -> String {
    let screen: Vec<(f64, f64)> = points.iter().map(|p| (p.x * SCALE, -p.y * SCALE)).collect();
    let min_x = screen.iter().map(|s| s.0).fold(f64::INFINITY, f64::min) - PADDING;
    let min_y = screen.iter().map(|s| s.1).fold(f64::INFINITY, f64::min) - PADDING;
    let max_x = screen.iter().map(|s| s.0).fold(f64::NEG_INFINITY, f64::max) + PADDING;
    let max_y = screen.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max) + PADDING;
    let (w, h) = (max_x - min_x, max_y - min_y);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        px(min_x),
        px(min_y),
        px(w),
        px(h),
        px(w),
        px(h)
    )
    .unwrap();
    out.push_str("<g stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n");
    for (u, v) in g.edges() {
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(screen[u].0),
            px(screen[u].1),
            px(screen[v].0),
            px(screen[v].1)
        )
        .unwrap();
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    for s in &screen {
        writeln!(out, r#"<circle cx="{}" cy="{}" r="4"/>"#, px(s.0), px(s.1)).unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// One `<id>.svg` per member.
pub fn write_svgs(catalog: &[CatalogRecord], dir: &Path) -> Result<usize> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut count = 0;
    for m in catalog.iter().flat_map(|r| &r.classes).flat_map(|c| &c.members) {
        let g: Graph = m.graph.parse()?;
        if m.coords.len() != g.vertex_count() {
            return Err(Error::PointCount {
                expected: g.vertex_count(),
                got: m.coords.len(),
            });
        }
        write_file(&dir.join(format!("{}.svg", m.id)), &svg(&g, &m.coords))?;
        count += 1;
    }
    Ok(count)
}

/// Writes every artifact of a census into `dir`.
pub fn write_artifacts(records: &[CensusRecord], dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let catalog = to_catalog(records);
    write_catalog(&catalog, &dir.join("catalog.json"))?;
    write_file(&dir.join("table1.csv"), &table1_csv(&catalog))?;
    write_file(&dir.join("table2.csv"), &table2_csv(&catalog))?;
    let planar: Vec<usize> = records.iter().map(|r| r.planar_pool).collect();
    write_file(&dir.join("plots.csv"), &plots_csv(&catalog, &planar))?;

    let mut unresolved = Vec::new();
    let mut obstructed = Vec::new();
    for r in records {
        for x in &r.rejected {
            match &x.outcome {
                RealizeOutcome::Exhausted { restarts } => unresolved.push(Unresolved {
                    n: r.n,
                    graph: x.graph.to_string(),
                    restarts: *restarts,
                }),
                RealizeOutcome::Obstructed { certificate } => obstructed.push(Obstructed {
                    n: r.n,
                    graph: x.graph.to_string(),
                    certificate,
                }),
                RealizeOutcome::Realized { .. } => {}
            }
        }
    }
    let path = dir.join("unresolved.json");
    write_file(&path, &json(&unresolved, &path)?)?;
    let path = dir.join("obstructed.json");
    write_file(&path, &json(&obstructed, &path)?)?;
    write_file(&dir.join("report.txt"), &published::discrepancy_report(&catalog))?;
    write_svgs(&catalog, &dir.join("svg"))?;
    Ok(())
}
