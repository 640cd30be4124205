//! Charges, the transfer ledger and the audit on a drawn graph.
//!
//! ```text
//! cargo run --example discharging
//! ```

use trifree::discharge::{apply_rules, audit, dangerous_cycles, outer_face_choices};
use trifree::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::dodecahedron();
    let drawn = outer_face_choices(&g).remove(0);
    let ledger = apply_rules(&drawn)?;
    println!(
        "{} transfers, total {} -> {}",
        ledger.transfers.len(),
        ledger.total_initial(),
        ledger.total_final()
    );
    for t in ledger.transfers.iter().take(5) {
        println!("  {t}");
    }

    let report = audit(&drawn);
    for v in &report.violations {
        println!("{} ends at {} (bound {})", v.element, v.charge, v.bound);
    }
    match &report.witness {
        Some(c) => println!("configuration clear of the outer face: {c}"),
        None => println!("no configuration clear of the outer face"),
    }
    println!("confirmed: {}", report.confirmed());

    // The cube has a separating hexagon whatever face is outside.
    let cube = outer_face_choices(&fixtures::cube()).remove(0);
    for d in dangerous_cycles(&cube)? {
        println!("cube: dangerous {:?} ({})", d.cycle, d.reason);
    }
    if let Some(h) = audit(&cube).rejected {
        println!("cube rejected: {h}");
    }
    Ok(())
}
