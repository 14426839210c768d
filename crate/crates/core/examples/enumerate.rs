//! Connected graphs by edge count, with how many of them are planar.
//!
//!     cargo run --release --example enumerate -- 6

use matchstick::{enumerate_connected, is_planar};

fn main() -> matchstick::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let graphs = enumerate_connected(n)?;
    for g in &graphs {
        println!("{g}");
    }
    let planar = graphs.iter().filter(|g| is_planar(g)).count();
    eprintln!("{} connected graphs with {n} edges, {planar} planar", graphs.len());
    Ok(())
}
