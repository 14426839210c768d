//! Published census values and the comparison against them.

use std::fmt::Write as _;

use super::CatalogRecord;
use crate::error::{Error, Result};

/// Published homeomorphism-class counts for 1..=9 edges.
pub const PUBLISHED_Q: [u64; 9] = [1, 1, 3, 5, 10, 19, 39, 84, 197];
/// Published isomorphism-class counts for 1..=9 edges.
pub const PUBLISHED_P: [u64; 9] = [1, 1, 3, 5, 12, 28, 74, 207, 633];
/// Published homeomorphism classes by edge count (rows) and face count
/// 1..=6 (columns). The last row sums to 198, one more than `PUBLISHED_Q[8]`.
pub const PUBLISHED_BY_FACES: [[u64; 6]; 9] = [
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0],
    [3, 2, 0, 0, 0, 0],
    [5, 4, 1, 0, 0, 0],
    [7, 8, 4, 0, 0, 0],
    [11, 15, 12, 1, 0, 0],
    [16, 29, 31, 8, 0, 0],
    [26, 56, 75, 38, 3, 0],
];

/// One-step projection `f(n)^2 / f(n-1)` of a series whose consecutive
/// ratios do not decrease.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projection {
    pub exact: f64,
    /// `exact` rounded to the nearest integer.
    pub bound: u64,
    /// `exact` rounded up.
    pub ceiling: u64,
}

impl Projection {
    fn of(series: &[u64]) -> Result<Projection> {
        let [.., prev, last] = series else {
            return Err(Error::Series("need at least two terms".into()));
        };
        if *prev == 0 {
            return Err(Error::Series("second to last term is zero".into()));
        }
        let (a, b) = (*last as u128, *prev as u128);
        Ok(Projection {
            exact: (a * a) as f64 / b as f64,
            bound: ((2 * a * a + b) / (2 * b)) as u64,
            ceiling: ((a * a).div_ceil(b)) as u64,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBounds {
    pub q: Projection,
    pub p: Projection,
}

/// Lower bounds for the term after the last of each series.
pub fn extrapolate_lower_bounds(q: &[u64], p: &[u64]) -> Result<LowerBounds> {
    Ok(LowerBounds {
        q: Projection::of(q)?,
        p: Projection::of(p)?,
    })
}

fn faces_row(r: &CatalogRecord) -> [u64; 6] {
    let mut row = [0; 6];
    for c in &r.classes {
        row[c.faces - 1] += 1;
    }
    row
}

fn verdict(computed: u64, published: u64) -> String {
    if computed == published {
        "ok".into()
    } else {
        format!("differs by {:+}", computed as i64 - published as i64)
    }
}

fn bound_lines(out: &mut String, label: &str, q: &[u64], p: &[u64], b: &LowerBounds) {
    for (name, f, proj) in [("q", q, b.q), ("p", p, b.p)] {
        let (last, prev) = (f[f.len() - 1], f[f.len() - 2]);
        writeln!(
            out,
            "{label}: {name}(10) >= {} ({last}^2/{prev} = {:.4}, rounded up {})",
            proj.bound, proj.exact, proj.ceiling
        )
        .unwrap();
    }
}

/// Plain-text comparison of a catalog with the published tables, followed by
/// the extrapolated bounds from the published series and, when the catalog
/// reaches 9 edges, from the computed one.
pub fn discrepancy_report(catalog: &[CatalogRecord]) -> String {
    let mut out = String::from("Census compared with published values\n\nHomeomorphism and isomorphism classes\n");
    writeln!(out, "{:>2} {:>5} {:>9} {:>5} {:>9}", "n", "q", "published", "p", "published").unwrap();
    for r in catalog.iter().filter(|r| r.n <= PUBLISHED_Q.len()) {
        let (pq, pp) = (PUBLISHED_Q[r.n - 1], PUBLISHED_P[r.n - 1]);
        writeln!(
            out,
            "{:>2} {:>5} {:>9} {:>5} {:>9}  q {}, p {}",
            r.n,
            r.q,
            pq,
            r.p,
            pp,
            verdict(r.q as u64, pq),
            verdict(r.p as u64, pp)
        )
        .unwrap();
    }

    out.push_str("\nHomeomorphism classes by face count\n");
    for r in catalog.iter().filter(|r| r.n <= PUBLISHED_BY_FACES.len()) {
        let row = faces_row(r);
        let published = PUBLISHED_BY_FACES[r.n - 1];
        let status = if row == published {
            "ok".to_string()
        } else {
            let cells: Vec<String> = (0..6)
                .filter(|&f| row[f] != published[f])
                .map(|f| format!("F{} {:+}", f + 1, row[f] as i64 - published[f] as i64))
                .collect();
            format!("differs: {}", cells.join(", "))
        };
        writeln!(out, "{:>2} computed {:?} published {:?}  {status}", r.n, row, published).unwrap();
        let (sum, pub_sum) = (row.iter().sum::<u64>(), published.iter().sum::<u64>());
        if sum != r.q as u64 {
            writeln!(out, "   computed row sums to {sum}, computed q is {}", r.q).unwrap();
        }
        if pub_sum != PUBLISHED_Q[r.n - 1] {
            writeln!(
                out,
                "   published row sums to {pub_sum} but published q is {}; computed row sums to {sum} against computed q {}",
                PUBLISHED_Q[r.n - 1],
                r.q
            )
            .unwrap();
        }
    }

    out.push_str("\nExtrapolated lower bounds for 10 edges, f(10) >= f(9)^2 / f(8)\n");
    let published = extrapolate_lower_bounds(&PUBLISHED_Q, &PUBLISHED_P).expect("nine terms");
    bound_lines(&mut out, "published series", &PUBLISHED_Q, &PUBLISHED_P, &published);
    if catalog.iter().map(|r| r.n).eq(1..=PUBLISHED_Q.len()) {
        let q: Vec<u64> = catalog.iter().map(|r| r.q as u64).collect();
        let p: Vec<u64> = catalog.iter().map(|r| r.p as u64).collect();
        let computed = extrapolate_lower_bounds(&q, &p).expect("nine terms");
        bound_lines(&mut out, "computed series", &q, &p, &computed);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_bounds() {
        let b = extrapolate_lower_bounds(&PUBLISHED_Q, &PUBLISHED_P).unwrap();
        assert_eq!((b.q.bound, b.q.ceiling), (462, 463));
        assert_eq!((b.p.bound, b.p.ceiling), (1936, 1936));
        assert!((b.p.exact - 633.0 * 633.0 / 207.0).abs() < 1e-9);
    }

    #[test]
    fn constant_series() {
        let b = extrapolate_lower_bounds(&[7, 7], &[3, 3]).unwrap();
        assert_eq!((b.q.bound, b.p.bound), (7, 3));
        assert!(extrapolate_lower_bounds(&[1], &[1, 2]).is_err());
        assert!(extrapolate_lower_bounds(&[0, 2], &[1, 2]).is_err());
    }

    #[test]
    fn published_tables_disagree_at_nine() {
        let sums: Vec<u64> = PUBLISHED_BY_FACES.iter().map(|r| r.iter().sum()).collect();
        assert_eq!(&sums[..8], &PUBLISHED_Q[..8]);
        assert_eq!((sums[8], PUBLISHED_Q[8]), (198, 197));
    }
}
