//! Counts of matchstick graphs by edge count, then by faces.
//!
//!     cargo run --release --example census -- 9

use matchstick::catalog::{table2_csv, to_catalog};
use matchstick::{census, SolveConfig};

fn main() -> matchstick::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let records = census(n_max, &SolveConfig::default())?;
    println!(" n    q    p  planar  rejected  unresolved");
    for r in &records {
        println!(
            "{:2} {:4} {:4} {:7} {:9} {:11}",
            r.n,
            r.q(),
            r.p(),
            r.planar_pool,
            r.rejected.len(),
            r.exhausted().count()
        );
    }
    print!("\n{}", table2_csv(&to_catalog(&records)));
    Ok(())
}
