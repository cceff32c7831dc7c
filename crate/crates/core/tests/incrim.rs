mod common;

use common::GF5;
use pfmatroid::incrim::{find_incriminating, incrimination, represents, IncrimCase};
use pfmatroid::matroid::Matroid;
use pfmatroid::pmatrix::LabeledMatrix;
use proptest::prelude::*;

fn perturbed(a: &LabeledMatrix, i: usize, j: usize, k: usize) -> LabeledMatrix {
    let mut b = a.clone();
    let elems = common::elements(a.field());
    let v = elems[k % elems.len()].clone();
    b.set(i % a.nrows(), j % a.ncols(), v);
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn incriminating_sets_detect_wrong_matrices(a in common::matrix(GF5, 4, 8), i in 0usize..4, j in 0usize..4, k in 0usize..5) {
        let m = Matroid::from_pmatrix(&a).unwrap();
        prop_assert!(represents(&m, &a));
        prop_assert!(find_incriminating(&m, &a).unwrap().is_none());
        let b = perturbed(&a, i, j, k);
        let found = find_incriminating(&m, &b).unwrap();
        prop_assert_eq!(found.is_some(), !represents(&m, &b));
        if let Some(z) = found {
            // Re-derive the case from the determinant and the bases of M.
            let rows: Vec<&str> = z.rows.iter().map(String::as_str).collect();
            let cols: Vec<&str> = z.cols.iter().map(String::as_str).collect();
            let det = b.determinant(&rows, &cols).unwrap();
            let x = m.set(b.rows()).unwrap() ^ m.set(&rows).unwrap() ^ m.set(&cols).unwrap();
            let expected = if det.is_zero() {
                prop_assert!(m.is_basis(x));
                IncrimCase::ZeroButBasis
            } else {
                prop_assert!(!m.is_basis(x));
                IncrimCase::NonzeroButDependent
            };
            prop_assert_eq!(z.case, expected);
            prop_assert_eq!(incrimination(&m, &b, &z.rows, &z.cols).unwrap(), Some(expected));
        }
    }
}
