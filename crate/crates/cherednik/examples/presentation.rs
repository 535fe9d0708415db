//! Relations between center generators for a dihedral group.
//!
//!     cargo run --release --example presentation -- dih6

use cherednik::center::Center;
use cherednik::ReflectionGroup;
use cherednik_exact::groebner::GbOptions;

fn main() -> cherednik::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "dih6".into());
    let center = Center::new(ReflectionGroup::builtin(&name)?, 0, None)?;
    let t = std::time::Instant::now();
    let p = center.presentation(&GbOptions::default())?;
    println!("{name}: {} generators, {} relations ({:.1?})", center.len(), p.relations.len(), t.elapsed());
    for (r, (d, e)) in p.relations.iter().zip(&p.bidegrees) {
        println!("  ({d},{e})  {r}");
    }
    Ok(())
}
