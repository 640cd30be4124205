//! Reading a rotation-system file, walking its faces and writing it back.
//!
//! ```text
//! cargo run --example plane_graph_io
//! ```

use trifree::plane::{embed, parse, serialize};

const LADDER: &str = "\
# two squares sharing the edge 2-3
6 7
1: 2 4
2: 5 3 1
3: 6 4 2
4: 3 1
5: 6 2
6: 3 5
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse(LADDER)?;
    let (n, m, f) = (g.vertex_count(), g.edge_count(), g.faces().len());
    println!("n={n} m={m} faces={f} euler={}", n as i64 - m as i64 + f as i64);
    for face in g.faces() {
        println!("  face {:?} (length {})", face.vertices(), face.len());
    }
    println!("triangle-free: {}", g.is_triangle_free());

    // Any face can be the outer one; the file then carries an `outer:` line.
    let longest = g.faces().iter().max_by_key(|f| f.len()).expect("has faces");
    let drawn = g.re_embed(longest)?;
    print!("{}", serialize(&drawn));

    // Without a rotation system, an embedding is computed from the edges.
    let k23 = embed(&[1, 2, 3, 4, 5], &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])?;
    println!(
        "K2,3 faces: {:?}",
        k23.faces().iter().map(|f| f.vertices()).collect::<Vec<_>>()
    );

    match parse("3 3\n1: 2 3\n2: 1\n3: 1\n") {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("bad file rejected: {e}"),
    }
    Ok(())
}
