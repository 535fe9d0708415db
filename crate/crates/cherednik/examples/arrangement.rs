//! Chamber counts of Calogero–Moser arrangements: G4 from its own
//! hyperplanes, G28 from the shipped data file.

use std::sync::Arc;

use cherednik::arrangement::{self, RealArrangement};
use cherednik::center::Center;
use cherednik::cli::factored_string;
use cherednik::families::Families;
use cherednik::ReflectionGroup;

fn report(name: &str, a: &RealArrangement) -> cherednik::Result<()> {
    let p = a.poincare_polynomial();
    println!(
        "{name}: {} hyperplanes, Poincaré {}, {} chambers, {} Q-factorial terminalizations",
        a.len(),
        factored_string(&p),
        a.chamber_count(),
        a.qft_count()?
    );
    Ok(())
}

fn main() -> cherednik::Result<()> {
    for name in ["B2", "G4"] {
        let g = ReflectionGroup::builtin(name)?;
        let f = Families::new(Arc::new(Center::new(g, 0, None)?))?;
        report(name, &RealArrangement::from_families(&f)?)?;
    }
    report("G28", &arrangement::builtin("G28")?)?;
    Ok(())
}
