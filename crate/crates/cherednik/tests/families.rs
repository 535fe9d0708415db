//! Calogero–Moser families: table shape, coarsening, the meet formula
//! against direct specialization, and cuspidality.

use std::sync::{Arc, OnceLock};

use cherednik::center::Center;
use cherednik::families::{omega, omega_chi, Families, FamilyPartition};
use cherednik::params::ParamPoint;
use cherednik::ReflectionGroup;
use cherednik_exact::Cyclo;
use proptest::prelude::*;

fn families(name: &'static str) -> &'static Families {
    static B2: OnceLock<Families> = OnceLock::new();
    static DIH8: OnceLock<Families> = OnceLock::new();
    static G4: OnceLock<Families> = OnceLock::new();
    let cell = match name {
        "B2" => &B2,
        "dih8" => &DIH8,
        "G4" => &G4,
        _ => unreachable!(),
    };
    cell.get_or_init(|| {
        let g = ReflectionGroup::builtin(name).unwrap();
        Families::new(Arc::new(Center::new(g, 0, None).unwrap())).unwrap()
    })
}

#[test]
fn table_shape() {
    for name in ["B2", "dih8", "G4"] {
        let f = families(name);
        let n = f.group().characters().unwrap().len();
        assert_eq!(f.table.rows.len(), n);
        for e in &f.table.euler {
            assert!(e.total_degree().unwrap_or(0) <= 1, "{name}: Euler entry {e}");
        }
        for h in &f.hyperplanes {
            assert!(h.families.is_union_of(&f.generic).unwrap(), "{name}: coarsening");
        }
    }
}

#[test]
fn hyperplane_counts() {
    assert_eq!(families("B2").hyperplanes.len(), 4);
    assert_eq!(families("G4").hyperplanes.len(), 6);
}

fn check_meet(name: &'static str, k: &[i64]) -> Result<(), TestCaseError> {
    let f = families(name);
    let g = f.group();
    let p = ParamPoint::from_k(g, k.iter().map(|&v| Cyclo::from_i64(v)).collect());
    prop_assume!(!p.is_zero());
    let meet = f.families_at_point(&p).unwrap();
    let direct = f.table.families_at_point_direct(&p);
    prop_assert_eq!(meet, direct, "{} at {:?}", name, k);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn meet_formula_b2(k in prop::array::uniform2(-2i64..=2)) {
        check_meet("B2", &k)?;
    }

    #[test]
    fn meet_formula_dih8(k in prop::array::uniform2(-2i64..=2)) {
        check_meet("dih8", &k)?;
    }

    #[test]
    fn meet_formula_g4(k in prop::array::uniform2(-2i64..=2)) {
        check_meet("G4", &k)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn omega_is_multiplicative(i in 0usize..8, j in 0usize..8, chi in 0usize..5) {
        let f = families("B2");
        let c = &f.center;
        let g = f.group();
        let k = &f.table.k_ring;
        let (a, b) = (&c.gens[i], &c.gens[j]);
        let w = |z: &cherednik::pbw::Pbw| omega_chi(g, &omega(z), chi, k).unwrap();
        let ab = a.mul(b);
        prop_assert_eq!(w(&ab), w(a).mul(&w(b)));
    }
}

#[test]
fn cuspidal_dih8() {
    let f = families("dih8");
    let g = f.group();
    let pm = f.center.poisson_matrix().unwrap();
    let p = ParamPoint::parse(g, "a=1,b=1").unwrap();
    let cusp = f.cuspidal_families(&p, &pm).unwrap();
    assert_eq!(cusp.len(), 1);
    assert_eq!(cusp[0].len(), 3);
    let generic = ParamPoint::parse(g, "a=1,b=2").unwrap();
    assert!(f.cuspidal_families(&generic, &pm).unwrap().is_empty());
}

#[test]
fn families_at_zero_are_everything() {
    let f = families("B2");
    let all = f.families_at_point(&ParamPoint::zero(f.group())).unwrap();
    assert_eq!(all, FamilyPartition::new(vec![(0..5).collect()]));
}
