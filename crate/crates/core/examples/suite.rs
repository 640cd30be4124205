//! Running the full check suite over a corpus.
//!
//! ```text
//! cargo run --release --example suite -- exhaustive 8
//! ```
//! Modes are exhaustive, random, extremal and golden.

use trifree::corpus::{run_suite, CorpusSpec, Mode, DEFAULT_SEED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let mode: Mode = args.next().as_deref().unwrap_or("golden").parse()?;
    let n_max: usize = args.next().map_or(Ok(20), |s| s.parse())?;
    let spec = CorpusSpec {
        mode,
        n_max,
        seed: DEFAULT_SEED,
        count: 10,
    };
    let report = run_suite(&spec)?;
    if report.rows.len() <= 20 {
        print!("{report}");
    }
    println!("{} graphs, {} violations", report.rows.len(), report.violation_count());
    Ok(())
}
