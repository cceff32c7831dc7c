mod common;

use common::{build, matrix, GF3, GF4, GF5};
use pfmatroid::matroid::Matroid;
use pfmatroid::pfield::PfValue;
use pfmatroid::pmatrix::{det_of, rank_of, LabeledMatrix};
use proptest::prelude::*;

fn any_field_matrix(max_side: usize) -> impl Strategy<Value = LabeledMatrix> {
    prop_oneof![matrix(GF3, max_side, 2 * max_side), matrix(GF4, max_side, 2 * max_side), matrix(GF5, max_side, 2 * max_side)]
}

/// Determinant by expansion along the first row.
fn leibniz(m: &[Vec<PfValue>], zero: &PfValue) -> PfValue {
    if m.is_empty() {
        return PfValue::one(zero.field());
    }
    let mut total = zero.clone();
    for j in 0..m.len() {
        let minor: Vec<Vec<PfValue>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = m[0][j].mul(&leibniz(&minor, zero));
        total = if j % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

fn rows(a: &LabeledMatrix) -> Vec<Vec<PfValue>> {
    (0..a.nrows()).map(|i| (0..a.ncols()).map(|j| a.get(i, j).clone()).collect()).collect()
}

fn brute_rank(m: &[Vec<PfValue>], zero: &PfValue) -> usize {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    (1..=r.min(c))
        .rev()
        .find(|&k| {
            pfmatroid::bits::combinations(r, k).iter().any(|ri| {
                pfmatroid::bits::combinations(c, k).iter().any(|ci| {
                    let sub: Vec<Vec<PfValue>> = ri.iter().map(|&i| ci.iter().map(|&j| m[i][j].clone()).collect()).collect();
                    !leibniz(&sub, zero).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

proptest! {
    #[test]
    fn determinant_matches_expansion(picks in prop::collection::vec(0usize..8, 16), n in 1usize..=4, f in 0usize..3) {
        let field = [GF3, GF4, GF5][f];
        let a = build(field, n, n, &picks);
        let m = rows(&a);
        prop_assert_eq!(det_of(&m, field).unwrap(), leibniz(&m, &PfValue::zero(field)));
    }

    #[test]
    fn rank_matches_minors(a in any_field_matrix(4)) {
        let m = rows(&a);
        prop_assert_eq!(rank_of(&m, a.field()).unwrap(), brute_rank(&m, &PfValue::zero(a.field())));
    }

    #[test]
    fn pivoting_back_returns_a_scaling_of_the_original(a in any_field_matrix(4), i in 0usize..4, j in 0usize..4) {
        let (i, j) = (i % a.nrows(), j % a.ncols());
        prop_assume!(!a.get(i, j).is_zero());
        let (x, y) = (a.rows()[i].clone(), a.cols()[j].clone());
        let p = a.pivot(&x, &y).unwrap();
        prop_assert_eq!(p.entry(&y, &x).unwrap(), &a.get(i, j).inv().unwrap());
        let back = p.pivot(&y, &x).unwrap();
        prop_assert!(a.scaling_equivalent(&back).is_some());
        let ma = Matroid::from_pmatrix(&a).unwrap();
        prop_assert!(Matroid::from_pmatrix(&p).unwrap().equal_up_to_order(&ma));
    }

    #[test]
    fn normal_forms_are_scaling_invariants(a in any_field_matrix(4), s in prop::collection::vec(1usize..8, 8)) {
        let units = common::elements(a.field());
        let pick = |k: usize| units[1 + s[k] % (units.len() - 1)].clone();
        let row: Vec<PfValue> = (0..a.nrows()).map(pick).collect();
        let col: Vec<PfValue> = (0..a.ncols()).map(|j| pick(4 + j % 4)).collect();
        let b = a.scaled(&row, &col);
        let na = a.normal_form().unwrap();
        prop_assert_eq!(&na, &b.normal_form().unwrap());
        prop_assert_eq!(&na.normal_form().unwrap(), &na);
        let cert = a.scaling_equivalent(&b).unwrap();
        prop_assert_eq!(a.scaled(&cert.row, &cert.col), b);
    }

    #[test]
    fn dual_matrix_represents_the_dual(a in any_field_matrix(4)) {
        prop_assert_eq!(&a.dual().dual(), &a);
        let m = Matroid::from_pmatrix(&a).unwrap();
        prop_assert!(Matroid::from_pmatrix(&a.dual()).unwrap().equal_up_to_order(&m.dual()));
    }
}

#[test]
fn non_pmatrix_is_reported_with_a_witness() {
    let a = LabeledMatrix::from_ints(pfmatroid::pfield::PartialFieldId::Regular, &["a", "b"], &["c", "d"], &[vec![1, 1], vec![1, -1]]).unwrap();
    let cert = a.is_pmatrix();
    assert!(!cert.verdict);
    assert_eq!(cert.witness_det, Some(PfValue::from_int(a.field(), -2)));
    assert!(Matroid::from_pmatrix(&a).is_err());
}
