//! Seeded random growth. Set TRIFREE_SEED to change the stream.
//!
//! ```text
//! TRIFREE_SEED=7 cargo run --example random_graphs
//! ```

use trifree::corpus::{gen_random, CorpusSpec, Mode, DEFAULT_SEED};
use trifree::solver::solve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = match std::env::var("TRIFREE_SEED") {
        Ok(s) => s.parse()?,
        Err(_) => DEFAULT_SEED,
    };
    let spec = CorpusSpec {
        mode: Mode::Random,
        n_max: 40,
        seed,
        count: 5,
    };
    for g in gen_random(&spec) {
        let r = solve(&g)?;
        let min_face = g.faces().iter().map(|f| f.len()).min().unwrap_or(0);
        println!(
            "n={} m={} shortest face {min_face}: solver {} >= {}",
            g.vertex_count(),
            g.edge_count(),
            r.size(),
            r.guarantee
        );
    }
    Ok(())
}
