//! Poisson brackets of the B2 center generators; the Euler row shows the
//! Z-grading {eu, z} = deg(z)·z.

use cherednik::center::Center;
use cherednik::ReflectionGroup;

fn main() -> cherednik::Result<()> {
    let center = Center::new(ReflectionGroup::builtin("B2")?, 0, None)?;
    let m = center.poisson_matrix()?;
    let eu = center.euler_index().expect("eu is a generator");
    let zdeg = center.invariants.z_degrees();
    for (j, e) in m[eu].iter().enumerate() {
        println!("{{z{}, z{}}} = {e}    (Z-degree {})", eu + 1, j + 1, zdeg[j]);
    }
    println!();
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate().skip(i + 1) {
            if !e.is_zero() {
                println!("{{z{}, z{}}} = {e}", i + 1, j + 1);
            }
        }
    }
    Ok(())
}
