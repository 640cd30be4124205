//! Listing reducible configurations and checking them against an outer face.
//!
//! ```text
//! cargo run --example find_configurations
//! ```

use std::collections::BTreeMap;

use trifree::config::{c5_to_c2, find_all, find_any, interferes, Kind};
use trifree::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::dodecahedron();
    let all = find_all(&g);
    let mut per_kind: BTreeMap<Kind, usize> = BTreeMap::new();
    for c in &all {
        *per_kind.entry(c.kind()).or_default() += 1;
    }
    println!("dodecahedron: {per_kind:?}");
    println!("first found: {}", find_any(&g)?);

    // Pick a pentagon as the outer face and keep what stays clear of it.
    let outer = g.faces()[0].clone();
    let drawn = g.re_embed(&outer)?;
    let k = outer.vertex_set();
    let free: Vec<_> = find_all(&drawn).into_iter().filter(|c| !interferes(c, &k)).collect();
    println!(
        "outer face {:?}: {} of {} instances avoid it",
        outer.vertices(),
        free.len(),
        all.len()
    );
    if let Some(c) = free.first() {
        println!("  e.g. {c}, role vertices {:?}", c.interference_set());
    }

    // A C5 instance always yields a C2 instance.
    let cube = fixtures::cube();
    if let Some(c5) = find_all(&cube).into_iter().find(|c| c.kind() == Kind::C5) {
        println!("cube: {c5} gives {}", c5_to_c2(&cube, &c5)?);
    }
    Ok(())
}
