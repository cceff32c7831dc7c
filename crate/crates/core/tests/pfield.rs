use pfmatroid::pfield::{Automorphism, Homomorphism, PartialField, PartialFieldId, PfValue};
use proptest::prelude::*;

const FIELDS: [PartialFieldId; 5] = [
    PartialFieldId::Prime(2),
    PartialFieldId::Prime(3),
    PartialFieldId::Prime(7),
    PartialFieldId::Gf4,
    PartialFieldId::Gf8,
];

const GROUPS: [PartialFieldId; 4] = [
    PartialFieldId::Regular,
    PartialFieldId::Dyadic,
    PartialFieldId::SixthRoots,
    PartialFieldId::NearRegular,
];

fn finite_triple() -> impl Strategy<Value = (PfValue, PfValue, PfValue)> {
    prop::sample::select(FIELDS.to_vec()).prop_flat_map(|f| {
        let e = PartialField::new(f).unwrap().elements().unwrap();
        let pick = prop::sample::select(e);
        (pick.clone(), pick.clone(), pick)
    })
}

fn unit_pair() -> impl Strategy<Value = (PfValue, PfValue)> {
    prop::sample::select(GROUPS.to_vec()).prop_flat_map(|f| {
        let u = PartialField::new(f).unwrap().units(2).unwrap();
        let pick = prop::sample::select(u);
        (pick.clone(), pick)
    })
}

proptest! {
    #[test]
    fn finite_field_axioms((a, b, c) in finite_triple()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&a.neg()), PfValue::zero(a.field()));
        prop_assert!(a.is_member());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert!(a.is_unit());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn unit_groups_are_closed((a, b) in unit_pair()) {
        prop_assert!(a.mul(&b).is_unit());
        prop_assert!(a.inv().unwrap().is_unit());
        prop_assert!(a.neg().is_unit());
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn homomorphisms_respect_operations((a, b) in unit_pair()) {
        for phi in Homomorphism::all_from(a.field()) {
            let (x, y) = (phi.apply(&a).unwrap(), phi.apply(&b).unwrap());
            prop_assert!(x.is_unit());
            prop_assert_eq!(phi.apply(&a.mul(&b)).unwrap(), x.mul(&y));
            prop_assert_eq!(phi.apply(&a.add(&b)).unwrap(), x.add(&y));
            prop_assert_eq!(phi.apply(&a.neg()).unwrap(), x.neg());
        }
    }

    #[test]
    fn automorphisms_are_bijective_ring_maps((a, b, _c) in finite_triple()) {
        let f = a.field();
        let elems = PartialField::new(f).unwrap().elements().unwrap();
        for s in Automorphism::all(f) {
            prop_assert_eq!(s.apply(&a.mul(&b)), s.apply(&a).mul(&s.apply(&b)));
            prop_assert_eq!(s.apply(&a.add(&b)), s.apply(&a).add(&s.apply(&b)));
            let mut image: Vec<PfValue> = elems.iter().map(|e| s.apply(e)).collect();
            image.sort();
            let mut sorted = elems.clone();
            sorted.sort();
            prop_assert_eq!(image, sorted);
        }
    }
}

#[test]
fn unit_counts() {
    for (f, n) in [(FIELDS[1], 2), (FIELDS[2], 6), (FIELDS[3], 3), (FIELDS[4], 7)] {
        assert_eq!(PartialField::new(f).unwrap().units(0).unwrap().len(), n);
    }
    assert_eq!(PartialField::new(PartialFieldId::Regular).unwrap().units(5).unwrap().len(), 2);
    assert_eq!(PartialField::new(PartialFieldId::SixthRoots).unwrap().units(0).unwrap().len(), 6);
}
