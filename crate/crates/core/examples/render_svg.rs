//! Writes an SVG drawing of a realized graph.
//!
//!     cargo run --release --example render_svg -- "5:0-1,0-2,1-2,1-3,2-4,3-4" out.svg

use matchstick::catalog::svg;
use matchstick::realize::{realize, SolveConfig};
use matchstick::Graph;

fn main() -> matchstick::Result<()> {
    let mut args = std::env::args().skip(1);
    let g: Graph = args.next().unwrap_or_else(|| "5:0-1,0-2,1-2,1-3,2-4,3-4".into()).parse()?;
    let path = args.next().unwrap_or_else(|| "graph.svg".into());
    let outcome = realize(&g, &SolveConfig::default())?;
    let Some(e) = outcome.embedding() else {
        eprintln!("{g} was not realized: {outcome:?}");
        std::process::exit(1);
    };
    std::fs::write(&path, svg(&g, &e.points)).map_err(|source| matchstick::Error::Io {
        path: path.clone().into(),
        source,
    })?;
    println!("wrote {path}");
    Ok(())
}
