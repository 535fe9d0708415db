//! Checks that Calogero–Moser families are unions of Rouquier families.
//!
//!     cargo run --example martino -- crates/cherednik/examples/data/rouquier_B2.json

use std::sync::Arc;

use cherednik::center::Center;
use cherednik::families::{Families, RouquierData};
use cherednik::ReflectionGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/rouquier_B2.json").into());
    let data: RouquierData = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let g = ReflectionGroup::builtin("B2")?;
    let f = Families::new(Arc::new(Center::new(g, 0, None)?))?;
    let report = f.martino(&data)?;
    println!("generic: {}", report.generic);
    for c in &report.hyperplanes {
        println!("{:>12} (as {:>12}, essential: {:5}) holds: {}", c.hyperplane, c.twisted, c.essential, c.holds);
    }
    println!("overall: {}", report.holds);
    Ok(())
}
