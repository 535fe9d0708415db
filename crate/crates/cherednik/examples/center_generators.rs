//! Center generators of the restricted-rational Cherednik algebra of B2,
//! lifted from C[V×V*]^W by the truncation inverse.

use cherednik::center::Center;
use cherednik::ReflectionGroup;

fn main() -> cherednik::Result<()> {
    let g = ReflectionGroup::builtin("B2")?;
    let center = Center::new(g, 0, None)?;
    for (i, z) in center.gens.iter().enumerate() {
        let (d, e) = center.invariants.bidegrees[i];
        println!("z{} bidegree ({d},{e}), {} group elements in support", i + 1, z.support().count());
        println!("    trunc = {}", z.trunc());
    }
    if let Some(i) = center.euler_index() {
        println!("z{} is the Euler element: {}", i + 1, center.gens[i]);
    }
    Ok(())
}
