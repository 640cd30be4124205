//! Growing members of the extremal family and certifying membership.
//!
//! ```text
//! cargo run --example extremal_family -- 4 7
//! ```
//! The arguments are the number of replacement steps and the seed.

use trifree::extremal::{
    find_diamonds, generate_member_seeded, is_member, member_max_independent_set, replaceable_paths,
};
use trifree::fixtures;
use trifree::solver::exact_alpha;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let steps: usize = args.next().map_or(Ok(3), |s| s.parse())?;
    let seed: u64 = args.next().map_or(Ok(1), |s| s.parse())?;

    let g = generate_member_seeded(steps, seed);
    let n = g.vertex_count();
    println!(
        "member with {steps} steps: n={n}, {} diamonds, {} replaceable paths",
        find_diamonds(&g).len(),
        replaceable_paths(&g).len()
    );

    let trace = is_member(&g);
    print!("{trace}");
    let set = member_max_independent_set(&g, &trace)?;
    let (alpha, _) = exact_alpha(&g)?;
    println!("lifted set {set:?}");
    println!("size {} = alpha {alpha} = (n+1)/3 = {}", set.len(), (n + 1) / 3);

    for (name, h) in [("cube", fixtures::cube()), ("C6 with a chord", fixtures::c6_chord())] {
        println!("{name}: member={}", is_member(&h).is_member());
    }
    Ok(())
}
