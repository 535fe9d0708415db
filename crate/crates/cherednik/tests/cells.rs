//! Cellular characters: sum identity, integrality and seed independence.

use cherednik::cells::{cellular_characters, cellular_in_rep, gaudin_matrix, right_translation};
use cherednik::params::ParamPoint;
use cherednik::ReflectionGroup;
use cherednik_exact::Cyclo;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn b2_sum_identity(a in -3i64..=3, b in -3i64..=3, seed in 0u64..1000) {
        let g = ReflectionGroup::builtin("B2").unwrap();
        let p = ParamPoint::from_k(&g, vec![Cyclo::from_i64(a), Cyclo::from_i64(b)]);
        let r = cellular_characters(&g, &p, seed).unwrap();
        prop_assert!(r.verify_sum_identity());
        let other = cellular_characters(&g, &p, seed + 1).unwrap();
        prop_assert_eq!(r.character_set(), other.character_set());
        // the 2-dimensional character, on its own
        let rep = cellular_in_rep(&g, &p, seed, 4).unwrap();
        let reg: Vec<usize> = r.characters.iter().map(|c| c.multiplicities[4]).collect();
        prop_assert_eq!(rep, reg);
    }

    #[test]
    fn gaudin_commutes_with_right_translation(a in 1i64..4, y0 in -3i64..=3, y1 in -3i64..=3, w in 0usize..24) {
        let g = ReflectionGroup::builtin("G4").unwrap();
        let c = [Cyclo::from_i64(a), Cyclo::from_i64(1 - a)];
        let y = vec![Cyclo::from_i64(y0), Cyclo::from_i64(y1)];
        let d = gaudin_matrix(&g, &c[..g.num_params()], &y, &g.regular_vector(3)).unwrap();
        let r = right_translation(&g, w);
        prop_assert_eq!(d.mul(&r), r.mul(&d));
    }
}

#[test]
fn c_zero_gives_regular_character() {
    for name in ["mu3", "B2", "dih10", "G4"] {
        let g = ReflectionGroup::builtin(name).unwrap();
        let r = cellular_characters(&g, &ParamPoint::zero(&g), 5).unwrap();
        let chars = g.characters().unwrap();
        let regular: Vec<usize> = chars.iter().map(|c| c.degree).collect();
        assert_eq!(r.character_set(), vec![regular], "{name}");
    }
}

#[test]
fn g4_and_dihedral_runs() {
    for (name, at) in [("G4", "k1=1,k2=1"), ("G4", "k1=1,k2=0"), ("dih8", "a=1,b=1"), ("dih10", "c=1")] {
        let g = ReflectionGroup::builtin(name).unwrap();
        let p = ParamPoint::parse(&g, at).unwrap();
        let r = cellular_characters(&g, &p, 11).unwrap();
        assert!(r.verify_sum_identity(), "{name} at {at}");
    }
}
