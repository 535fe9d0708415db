//! Calogero–Moser hyperplanes and families of B2, and families at a point via
//! the meet formula.

use std::sync::Arc;

use cherednik::center::Center;
use cherednik::families::Families;
use cherednik::params::ParamPoint;
use cherednik::ReflectionGroup;

fn main() -> cherednik::Result<()> {
    let g = ReflectionGroup::builtin("B2")?;
    let f = Families::new(Arc::new(Center::new(g.clone(), 0, None)?))?;
    println!("generic: {:?}", f.generic.labels(&g)?);
    for (h, s) in f.hyperplanes.iter().zip(f.hyperplane_strings()) {
        println!("{s:>12}: {:?}", h.families.labels(&g)?);
    }
    for at in ["k1=1,k2=1", "k1=1,k2=0", "k1=1,k2=-1", "k1=2,k2=3"] {
        let p = ParamPoint::parse(&g, at)?;
        println!("at {at:<11} {:?}", f.families_at_point(&p)?.labels(&g)?);
    }
    Ok(())
}
