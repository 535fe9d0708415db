//! Cuspidal Calogero–Moser families of the dihedral group of order 8.

use std::sync::Arc;

use cherednik::center::Center;
use cherednik::families::{Families, FamilyPartition};
use cherednik::params::ParamPoint;
use cherednik::ReflectionGroup;

fn main() -> cherednik::Result<()> {
    let g = ReflectionGroup::builtin("dih8")?;
    let center = Arc::new(Center::new(g.clone(), 0, None)?);
    let poisson = center.poisson_matrix()?;
    let f = Families::new(center)?;
    for at in ["a=1,b=1", "a=1,b=2", "a=1,b=0"] {
        let p = ParamPoint::parse(&g, at)?;
        let cusp = f.cuspidal_families(&p, &poisson)?;
        println!(
            "{at}: families {:?}, cuspidal {:?}",
            f.families_at_point(&p)?.labels(&g)?,
            FamilyPartition { parts: cusp }.labels(&g)?
        );
    }
    Ok(())
}
