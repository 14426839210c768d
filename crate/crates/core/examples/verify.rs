//! Builds a small catalog in memory, breaks one coordinate and re-checks it.

use matchstick::catalog::{to_catalog, verify_catalog};
use matchstick::{census, SolveConfig};

fn main() -> matchstick::Result<()> {
    let cfg = SolveConfig::default();
    let mut catalog = to_catalog(&census(6, &cfg)?);
    let report = verify_catalog(&catalog, &cfg);
    println!("fresh: {} members, {} problems", report.members, report.problems.len());

    catalog[5].classes[0].members[0].coords[0].x += 0.1;
    for problem in verify_catalog(&catalog, &cfg).problems {
        println!("{problem}");
    }
    Ok(())
}
