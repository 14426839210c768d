//! Planarity of a few classic graphs.

use matchstick::graph::named;
use matchstick::{is_planar, Graph};

fn main() -> matchstick::Result<()> {
    let prism: Graph = "6:0-1,0-2,0-3,1-2,1-4,2-5,3-4,3-5,4-5".parse()?;
    let cases = [
        ("K4", named::complete(4)),
        ("K5", named::complete(5)),
        ("K3,3", named::complete_bipartite(3, 3)),
        ("K2,3", named::complete_bipartite(2, 3)),
        ("prism", prism),
        ("C9", named::cycle(9)),
    ];
    for (name, g) in cases {
        println!("{name:6} {:2} edges  planar: {}", g.edge_count(), is_planar(&g));
    }
    Ok(())
}
