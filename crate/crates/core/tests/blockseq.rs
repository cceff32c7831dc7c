mod common;

use common::{GF3, GF4};
use pfmatroid::bits::{self, Set};
use pfmatroid::blockseq::{
    alternates, bridge_uncrossed_2seps, find_blocking_sequence, is_blocking_sequence, two_separations,
    uncrossed_2seps, BlockingOutcome,
};
use pfmatroid::matroid::{has_minor, letters, Matroid};
use proptest::prelude::*;

/// A matroid with a basis and a subset whose minor has an exact 2-separation.
fn instance(field: pfmatroid::pfield::PartialFieldId) -> impl Strategy<Value = (Matroid, Set, Set, Set)> {
    (common::matroid(field, 9), any::<u64>(), any::<u64>()).prop_filter_map("no exact 2-separation", |(m, s, t)| {
        let b = m.bases()[s as usize % m.bases().len()];
        let e = t as Set & m.ground();
        let elems = bits::elems(e);
        let minor = m.minor_by_basis(b, e).ok()?;
        let sep = two_separations(&minor).into_iter().find(|s| s.order == 1)?;
        let up = |x: Set| bits::from_elems(bits::elems(x).into_iter().map(|i| elems[i]));
        Some((m, b, up(sep.part1), up(sep.part2)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dichotomy((m, b, z1, z2) in prop_oneof![instance(GF3), instance(GF4)]) {
        match find_blocking_sequence(&m, b, z1, z2, 2).unwrap() {
            BlockingOutcome::Sequence(s) => {
                prop_assert!(is_blocking_sequence(&m, b, z1, z2, 2, &s.elements));
                prop_assert!(alternates(b, &s.elements));
                prop_assert!(s.elements.iter().all(|&e| !bits::has(z1 | z2, e)));
                let rest = m.ground() & !z1 & !z2;
                prop_assert!(bits::submasks(rest).all(|r| m.lambda(z1 | r) >= 2));
            }
            BlockingOutcome::Induced(sep) => {
                prop_assert_eq!(sep.part1 & z1, z1);
                prop_assert_eq!(sep.part2 & z2, z2);
                prop_assert_eq!(sep.part1 | sep.part2, m.ground());
                prop_assert!(m.lambda(sep.part1) < 2);
            }
        }
    }

    #[test]
    fn uncrossed_separations_exist(m in common::matroid(GF4, 9)) {
        let u24 = Matroid::uniform(2, letters(4)).unwrap();
        prop_assume!(m.is_connected() && has_minor(&m, &u24));
        let seps = two_separations(&m);
        prop_assert!(seps.is_empty() || !uncrossed_2seps(&m).is_empty());
    }

    #[test]
    fn bridging_reduces_separations((m, b, z1, z2) in instance(GF4)) {
        let e = z1 | z2;
        let start = m.minor_by_basis(b, e).unwrap();
        prop_assume!(start.is_connected() && has_minor(&start, &Matroid::uniform(2, letters(4)).unwrap()));
        let report = bridge_uncrossed_2seps(&m, b, e).unwrap();
        prop_assert_eq!(report.start, e);
        let mut cur = e;
        for r in &report.rounds {
            prop_assert!(r.seps_after < r.seps_before);
            prop_assert!(r.bw_after <= r.bw_before + 2);
            prop_assert!(r.sequence.iter().all(|&x| !bits::has(cur, x)));
            cur |= bits::from_elems(r.sequence.iter().copied());
        }
        prop_assert_eq!(cur, report.result);
    }
}
