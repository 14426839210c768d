//! Homeomorphism classes: smoothing away degree-2 vertices.

use matchstick::{face_count, smooth, topo_key, Graph};

fn main() -> matchstick::Result<()> {
    for text in [
        "4:0-1,1-2,2-3",
        "6:0-1,0-5,1-2,2-3,3-4,4-5",
        "5:0-1,0-2,1-2,2-3,3-4",
        "5:0-1,0-2,0-3,1-4,2-4,3-4",
    ] {
        let g: Graph = text.parse()?;
        println!(
            "{g:28} smooths to {:24} faces {}",
            smooth(&g).to_string(),
            face_count(&g)?
        );
    }
    let spider_a: Graph = "6:0-1,0-2,0-3,3-4,4-5".parse()?;
    let spider_b: Graph = "6:0-1,0-2,0-4,1-3,2-5".parse()?;
    println!("spiders homeomorphic: {}", topo_key(&spider_a) == topo_key(&spider_b));
    Ok(())
}
