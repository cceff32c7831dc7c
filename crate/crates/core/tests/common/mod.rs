#![allow(dead_code)]

use pfmatroid::bits::Set;
use pfmatroid::matroid::{letters, Matroid};
use pfmatroid::pfield::{PartialField, PartialFieldId, PfValue};
use pfmatroid::pmatrix::LabeledMatrix;
use proptest::prelude::*;

pub const GF3: PartialFieldId = PartialFieldId::Prime(3);
pub const GF5: PartialFieldId = PartialFieldId::Prime(5);
pub const GF4: PartialFieldId = PartialFieldId::Gf4;

pub fn elements(field: PartialFieldId) -> Vec<PfValue> {
    PartialField::new(field).unwrap().elements().unwrap()
}

pub fn build(field: PartialFieldId, r: usize, c: usize, picks: &[usize]) -> LabeledMatrix {
    let elems = elements(field);
    let names = letters(r + c);
    let data = (0..r)
        .map(|i| (0..c).map(|j| elems[picks[i * c + j] % elems.len()].clone()).collect())
        .collect();
    LabeledMatrix::from_rows(field, names[..r].to_vec(), names[r..].to_vec(), data).unwrap()
}

/// Random `r x c` matrices over `field` with `1 <= r, c` and `r + c <= max`.
pub fn matrix(field: PartialFieldId, max_side: usize, max: usize) -> impl Strategy<Value = LabeledMatrix> {
    (1..=max_side, 1..=max_side)
        .prop_filter("too many elements", move |(r, c)| r + c <= max)
        .prop_flat_map(move |(r, c)| {
            prop::collection::vec(0usize..16, r * c).prop_map(move |p| build(field, r, c, &p))
        })
}

pub fn matroid(field: PartialFieldId, max: usize) -> impl Strategy<Value = Matroid> {
    matrix(field, max - 1, max).prop_map(|a| Matroid::from_pmatrix(&a).unwrap())
}

/// A matroid together with a subset of its ground set.
pub fn matroid_and_set(field: PartialFieldId, max: usize) -> impl Strategy<Value = (Matroid, Set)> {
    matroid(field, max).prop_flat_map(|m| {
        let g = m.ground();
        (Just(m), 0..=g).prop_map(move |(m, s)| (m, s & g))
    })
}
