//! Enumerate a shipped reflection group and print its character table.
//!
//!     cargo run --example group_info -- G4

use cherednik::ReflectionGroup;

fn main() -> cherednik::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "B2".into());
    let g = ReflectionGroup::builtin(&name)?;
    println!(
        "{}: order {}, rank {}, {} reflections, field Q(ζ{})",
        g.name,
        g.order(),
        g.dim,
        g.reflections.len(),
        g.conductor
    );
    println!("parameters C: {}   K: {}", g.c_names().join(" "), g.k_names().join(" "));
    let sizes: Vec<String> = g.classes().iter().map(|c| c.len().to_string()).collect();
    println!("class sizes  {}", sizes.join(" "));
    for ch in g.characters()? {
        let vals: Vec<String> = g.classes().iter().map(|c| ch.values[c[0]].to_string()).collect();
        println!("{:>4}  {}", ch.label, vals.join("  "));
    }
    Ok(())
}
