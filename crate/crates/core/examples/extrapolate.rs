//! Growth ratios and the one-step lower bounds for ten edges.

use matchstick::catalog::{PUBLISHED_P, PUBLISHED_Q};
use matchstick::extrapolate_lower_bounds;

fn main() -> matchstick::Result<()> {
    for n in 2..=PUBLISHED_Q.len() {
        let (q, p) = (PUBLISHED_Q[n - 1] as f64, PUBLISHED_P[n - 1] as f64);
        println!(
            "n={n}  q ratio {:.4}  p ratio {:.4}  p/q {:.4}",
            q / PUBLISHED_Q[n - 2] as f64,
            p / PUBLISHED_P[n - 2] as f64,
            p / q
        );
    }
    let b = extrapolate_lower_bounds(&PUBLISHED_Q, &PUBLISHED_P)?;
    println!("q(10) >= {} (exact {:.4}, rounded up {})", b.q.bound, b.q.exact, b.q.ceiling);
    println!("p(10) >= {} (exact {:.4}, rounded up {})", b.p.bound, b.p.exact, b.p.ceiling);
    Ok(())
}
