//! Unit-edge drawing of one graph, or the reason there is none.
//!
//!     cargo run --release --example realize -- "7:0-1,0-2,1-2,1-3,2-4,3-4,3-5,4-6"

use matchstick::realize::{realize, validate_embedding, RealizeOutcome, SolveConfig};
use matchstick::Graph;

fn main() -> matchstick::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "4:0-1,0-3,1-2,2-3".into());
    let g: Graph = text.parse()?;
    let cfg = SolveConfig::default();
    match realize(&g, &cfg)? {
        RealizeOutcome::Realized { embedding } => {
            print!("{embedding}");
            let r = validate_embedding(&g, &embedding, &cfg)?;
            eprintln!(
                "max |len-1| {:.1e}, min edge gap {:.3}, min angle {:.3} rad",
                r.max_length_deviation, r.min_crossing_margin, r.min_incident_angle
            );
        }
        RealizeOutcome::Obstructed { certificate } => {
            println!("no drawing: {} on vertices {:?}", certificate.kind(), certificate.witness());
        }
        RealizeOutcome::Exhausted { restarts } => {
            println!("no drawing found in {restarts} restarts");
        }
    }
    Ok(())
}
