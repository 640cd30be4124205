//! Exhaustive enumeration of small connected plane triangle-free graphs.
//!
//! ```text
//! cargo run --release --example enumerate_corpus -- 9
//! ```

use trifree::corpus::{enumerate_small, enumeration_counts};
use trifree::extremal::is_member;
use trifree::solver::exact_alpha;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: usize = std::env::args().nth(1).map_or(Ok(8), |s| s.parse())?;
    for (i, c) in enumeration_counts(n_max)?.iter().enumerate() {
        println!("n={:<2} {c}", i + 1);
    }

    // The tight graphs among them are exactly the family members.
    let mut tight = 0;
    for g in enumerate_small(n_max)? {
        let (alpha, _) = exact_alpha(&g)?;
        if 3 * alpha == g.vertex_count() + 1 {
            assert!(is_member(&g).is_member());
            tight += 1;
        }
    }
    println!("{tight} graphs with alpha = (n+1)/3");
    Ok(())
}
