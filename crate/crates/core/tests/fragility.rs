mod common;

use common::{GF4, GF5};
use pfmatroid::bits;
use pfmatroid::fragility::{classify, duality_swap_check, series_parallel_laws};
use pfmatroid::matroid::{has_minor, letters, Matroid};
use proptest::prelude::*;

fn u24() -> Matroid {
    Matroid::uniform(2, letters(4)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classes_partition_and_match_minor_queries(m in common::matroid(GF5, 8)) {
        let ns = [u24()];
        let r = classify(&m, &ns);
        prop_assert_eq!(r.contractible | r.deletable | r.essential, m.ground());
        prop_assert_eq!(r.essential & (r.contractible | r.deletable), 0);
        prop_assert_eq!(r.fragile, r.contractible & r.deletable == 0);
        for e in 0..m.len() {
            let b = bits::bit(e);
            prop_assert_eq!(bits::has(r.contractible, e), has_minor(&m.contract(b).unwrap(), &ns[0]));
            prop_assert_eq!(bits::has(r.deletable, e), has_minor(&m.delete(b).unwrap(), &ns[0]));
        }
    }

    #[test]
    fn duality_swaps_classes(m in common::matroid(GF4, 8)) {
        prop_assert!(duality_swap_check(&m, &[u24()]));
    }

    #[test]
    fn fragility_is_inherited_by_minors_with_the_minor(m in common::matroid(GF5, 8), e in 0usize..8, del in any::<bool>()) {
        let ns = [u24()];
        prop_assume!(classify(&m, &ns).fragile);
        let b = bits::bit(e % m.len());
        let minor = if del { m.delete(b) } else { m.contract(b) }.unwrap();
        prop_assume!(has_minor(&minor, &ns[0]));
        prop_assert!(classify(&minor, &ns).strict);
        prop_assert!(series_parallel_laws(&minor, &ns).unwrap());
    }
}
