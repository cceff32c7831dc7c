mod common;

use common::{matroid, GF3, GF4};
use pfmatroid::bits;
use pfmatroid::decomp::{branch_width, width_of};
use pfmatroid::matroid::{catalog, letters, Matroid};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn width_is_attained_and_self_dual(m in matroid(GF3, 8)) {
        let (w, d) = branch_width(&m).unwrap();
        prop_assert_eq!(width_of(&m, &d).unwrap(), w);
        prop_assert_eq!(branch_width(&m.dual()).unwrap().0, w);
    }

    #[test]
    fn minors_do_not_increase_width(m in matroid(GF4, 8), e in 0usize..8) {
        let e = e % m.len();
        let (w, _) = branch_width(&m).unwrap();
        let b = bits::bit(e);
        prop_assert!(branch_width(&m.delete(b).unwrap()).unwrap().0 <= w);
        prop_assert!(branch_width(&m.contract(b).unwrap()).unwrap().0 <= w);
    }
}

#[test]
fn small_values() {
    for n in 4..=8 {
        let u = Matroid::uniform(2, letters(n)).unwrap();
        assert_eq!(branch_width(&u).unwrap().0, 3, "U2{n}");
    }
    // Three cherries around a centre avoid the 3/3 split.
    assert_eq!(branch_width(&Matroid::uniform(3, letters(6)).unwrap()).unwrap().0, 3);
    assert_eq!(branch_width(&catalog("F7").unwrap()).unwrap().0, 3);
    // Every cubic tree on eight leaves displays a split with both sides at least 3.
    assert_eq!(branch_width(&Matroid::uniform(4, letters(8)).unwrap()).unwrap().0, 4);
    assert_eq!(branch_width(&catalog("wheel4").unwrap()).unwrap().0, 3);
}
