//! Solving a graph file with the reduction solver.
//!
//! ```text
//! cargo run --example solve -- crates/core/corpus/member14.graph
//! ```
//! Without an argument a seeded random graph is used.

use trifree::corpus::{gen_random, CorpusSpec, Mode};
use trifree::plane::parse;
use trifree::solver::{check_theorem_bounds, solve};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(path) => parse(&std::fs::read_to_string(path)?)?,
        None => {
            let spec = CorpusSpec {
                mode: Mode::Random,
                n_max: 30,
                seed: 11,
                count: 1,
            };
            gen_random(&spec).remove(0)
        }
    };
    let r = solve(&g)?;
    for step in &r.trace {
        println!("{step}");
    }
    println!("set {:?}", r.independent_set);
    println!("size {} guarantee {} met {}", r.size(), r.guarantee, r.met);
    println!("{}", check_theorem_bounds(&g)?);
    Ok(())
}
