//! Canonical keys ignore vertex labels.

use matchstick::{automorphism_count, canonical_form, canonical_graph, Graph};

fn main() -> matchstick::Result<()> {
    let bull: Graph = "5:0-1,0-2,1-2,1-3,2-4".parse()?;
    let relabelled = bull.permuted(&[4, 2, 3, 0, 1]);
    println!("{bull}  ->  {relabelled}");
    println!("keys equal: {}", canonical_form(&bull) == canonical_form(&relabelled));
    println!("canonical graph: {}", canonical_graph(&relabelled));
    println!("key: {}", canonical_form(&bull));
    println!("automorphisms: {}", automorphism_count(&bull));
    Ok(())
}
