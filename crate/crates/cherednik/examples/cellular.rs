//! Cellular characters from Gaudin operators.
//!
//!     cargo run --example cellular -- B2 k1=1,k2=1

use cherednik::cells;
use cherednik::params::ParamPoint;
use cherednik::ReflectionGroup;

fn main() -> cherednik::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "B2".into());
    let at = args.next().unwrap_or_else(|| "k1=1,k2=1".into());
    let g = ReflectionGroup::builtin(&name)?;
    let p = ParamPoint::parse(&g, &at)?;
    let r = cells::cellular_characters(&g, &p, 0)?;
    let chars = g.characters()?;
    println!("{name} at {at}: y = {:?}, v = {:?} after {} draws", r.y, r.v, r.attempts);
    for (c, (f, n)) in r.characters.iter().zip(&r.factors) {
        let terms: Vec<String> = c
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, m)| **m > 0)
            .map(|(i, m)| if *m == 1 { chars[i].label.clone() } else { format!("{m}·{}", chars[i].label) })
            .collect();
        println!("  {:<24} from ({})^{n}", terms.join(" + "), f.to_string_var("t"));
    }
    println!("sum identity: {}", r.verify_sum_identity());
    Ok(())
}
