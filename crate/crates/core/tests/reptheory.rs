mod common;

use common::{GF3, GF4, GF5};
use pfmatroid::matroid::{catalog, letters, Matroid};
use pfmatroid::pfield::{Homomorphism, PartialFieldId};
use pfmatroid::reptheory::{
    enumerate_representations, is_representable, normalized_representations, stabilizes_all_embeddings,
    strongly_stabilizes, Level, Representability, SearchSpace,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn every_enumerated_matrix_represents_the_matroid(m in common::matroid(GF4, 7)) {
        let reps = normalized_representations(&m, m.first_basis(), SearchSpace::finite(GF4)).unwrap();
        prop_assert!(!reps.is_empty());
        for a in &reps {
            prop_assert!(Matroid::from_pmatrix(a).unwrap().equal_up_to_order(&m));
        }
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                prop_assert!(reps[i].scaling_equivalent(&reps[j]).is_none());
            }
        }
    }

    #[test]
    fn counts_do_not_depend_on_labels(m in common::matroid(GF3, 7), rot in 0usize..7) {
        let n = m.len();
        let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
        let p = m.permuted(&perm);
        for level in [Level::Scaling, Level::Algebraic] {
            let a = enumerate_representations(&m, SearchSpace::finite(GF5), level).unwrap().len();
            let b = enumerate_representations(&p, SearchSpace::finite(GF5), level).unwrap().len();
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn homomorphic_images_stay_representations() {
    let space = SearchSpace::bounded(PartialFieldId::NearRegular, 1);
    for name in ["U24", "whirl3", "whirl4", "wheel3"] {
        let m = catalog(name).unwrap();
        let reps = normalized_representations(&m, m.first_basis(), space).unwrap();
        assert!(!reps.is_empty(), "{name}");
        for phi in Homomorphism::all_from(PartialFieldId::NearRegular) {
            let img = reps[0].apply_hom(&phi).unwrap();
            assert!(Matroid::from_pmatrix(&img).unwrap().equal_up_to_order(&m), "{name} via {phi}");
        }
    }
}

#[test]
fn representability_verdicts() {
    let f7 = catalog("F7").unwrap();
    assert!(is_representable(&f7, SearchSpace::finite(PartialFieldId::Prime(2))).unwrap().is_yes());
    assert!(matches!(is_representable(&f7, SearchSpace::finite(GF3)).unwrap(), Representability::No(_)));
    let u25 = Matroid::uniform(2, letters(5)).unwrap();
    assert!(matches!(
        is_representable(&u25, SearchSpace::bounded(PartialFieldId::Regular, 3)).unwrap(),
        Representability::No(_)
    ));
    // Excluded for near-regular: the image over GF(3) already fails.
    assert!(matches!(
        is_representable(&u25, SearchSpace::bounded(PartialFieldId::NearRegular, 1)).unwrap(),
        Representability::No(_)
    ));
    let w4 = catalog("whirl4").unwrap();
    assert!(is_representable(&w4, SearchSpace::bounded(PartialFieldId::NearRegular, 1)).unwrap().is_yes());
    assert!(is_representable(&catalog("P8").unwrap(), SearchSpace::finite(GF3)).unwrap().is_yes());
}

#[test]
fn stabilizers() {
    let u24 = Matroid::uniform(2, letters(4)).unwrap();
    let w3 = catalog("whirl3").unwrap();
    assert!(stabilizes_all_embeddings(&w3, &u24, SearchSpace::finite(GF4)).unwrap().is_none());
    let e = &pfmatroid::matroid::minor_embeddings(&w3, &u24)[0];
    let b = w3.basis_between(e.contract, e.delete).unwrap();
    assert!(strongly_stabilizes(&w3, b, e.contract, e.delete, SearchSpace::finite(GF4)).unwrap());
    let u25 = Matroid::uniform(2, letters(5)).unwrap();
    let (_, _, v) = stabilizes_all_embeddings(&u25, &u24, SearchSpace::finite(GF5)).unwrap().unwrap();
    assert!(!v.stabilizes && v.witness.is_some());
}
