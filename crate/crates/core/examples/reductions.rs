//! Applying one reduction, solving the smaller graph and lifting back.
//!
//! ```text
//! cargo run --example reductions
//! ```

use trifree::config::{find_all, Kind};
use trifree::extremal::{find_diamonds, generate_member_seeded};
use trifree::fixtures;
use trifree::plane::serialize;
use trifree::reduce::{diamond_lift_verified, diamond_reduce, lift, reduce};
use trifree::solver::exact_alpha;
use trifree::verify::is_independent;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::pendant_pentagon();
    let (alpha, _) = exact_alpha(&g)?;
    for c in find_all(&g).into_iter().filter(|c| c.kind() != Kind::C5) {
        let (h, step) = reduce(&g, &c)?;
        let (beta, small) = exact_alpha(&h)?;
        let big = lift(&step, &small)?;
        println!("{step}");
        println!(
            "  n {} -> {}, alpha {alpha} >= {beta} + {}, lifted {big:?} ok={}",
            g.vertex_count(),
            h.vertex_count(),
            step.gain,
            is_independent(&g, &big)
        );
    }

    // A diamond costs exactly one vertex of the independence number.
    let m = generate_member_seeded(2, 5);
    let d = find_diamonds(&m)[0];
    let (h, ctx) = diamond_reduce(&m, &d)?;
    let (beta, small) = exact_alpha(&h)?;
    let big = diamond_lift_verified(&m, &ctx, &small)?;
    println!("diamond {d}: alpha {} -> {beta}, lifted {big:?}", big.len());
    print!("{}", serialize(&h));
    Ok(())
}
