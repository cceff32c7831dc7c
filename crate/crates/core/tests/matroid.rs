mod common;

use common::{matroid, matroid_and_set, GF3, GF4};
use pfmatroid::bits;
use pfmatroid::matroid::{catalog, catalog_names, has_minor, is_isomorphic, Matroid};
use pfmatroid::pmatrix::LabeledMatrix;
use proptest::prelude::*;

fn rank_from_matrix(a: &LabeledMatrix, m: &Matroid, s: bits::Set) -> usize {
    // The rank of a set of columns of [I A].
    let ri: Vec<usize> = (0..a.nrows()).filter(|&i| !bits::has(s, m.index(&a.rows()[i]).unwrap())).collect();
    let ci: Vec<usize> = (0..a.ncols()).filter(|&j| bits::has(s, m.index(&a.cols()[j]).unwrap())).collect();
    a.rank_idx(&ri, &ci) + a.nrows() - ri.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_agrees_with_the_matrix(a in common::matrix(GF4, 5, 8), s in 0u32..256) {
        let m = Matroid::from_pmatrix(&a).unwrap();
        let s = s as bits::Set & m.ground();
        prop_assert_eq!(m.rank_of(s), rank_from_matrix(&a, &m, s));
    }

    #[test]
    fn connectivity_is_symmetric_and_self_dual((m, x) in matroid_and_set(GF3, 8)) {
        let g = m.ground();
        prop_assert_eq!(m.lambda(x), m.lambda(g & !x));
        prop_assert_eq!(m.lambda(x), m.dual().lambda(x));
        prop_assert!(m.lambda(x) <= m.rank_of(x).min(m.dual().rank_of(x)));
    }

    #[test]
    fn connectivity_is_submodular((m, x) in matroid_and_set(GF4, 8), y in 0u32..256) {
        let y = y as bits::Set & m.ground();
        prop_assert!(m.lambda(x) + m.lambda(y) >= m.lambda(x & y) + m.lambda(x | y));
    }

    #[test]
    fn minors_commute_with_duality((m, c) in matroid_and_set(GF3, 8), d in 0u32..256) {
        let d = d as bits::Set & m.ground() & !c;
        let lhs = m.minor(c, d).unwrap().dual();
        let rhs = m.dual().minor(d, c).unwrap();
        prop_assert!(lhs.same_as(&rhs));
        prop_assert!(m.dual().dual().same_as(&m));
    }

    #[test]
    fn bases_satisfy_exchange(m in matroid(GF4, 8)) {
        let bases: std::collections::HashSet<bits::Set> = m.bases().iter().copied().collect();
        for &b1 in m.bases() {
            for &b2 in m.bases() {
                for x in bits::elems(b1 & !b2) {
                    let ok = bits::elems(b2 & !b1).into_iter().any(|y| bases.contains(&(b1 & !bits::bit(x) | bits::bit(y))));
                    prop_assert!(ok);
                }
            }
        }
    }

    #[test]
    fn relabeling_preserves_isomorphism_class(m in matroid(GF3, 8), seed in any::<u64>()) {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = m.permuted(&perm);
        prop_assert!(is_isomorphic(&m, &p).is_some());
        prop_assert!(has_minor(&m, &p));
    }

    #[test]
    fn pivoting_keeps_the_matroid(a in common::matrix(GF4, 4, 8), i in 0usize..4, j in 0usize..4) {
        let (i, j) = (i % a.nrows(), j % a.ncols());
        prop_assume!(!a.get(i, j).is_zero());
        let m = Matroid::from_pmatrix(&a).unwrap();
        let p = a.pivot_idx(i, j).unwrap();
        prop_assert!(Matroid::from_pmatrix(&p).unwrap().equal_up_to_order(&m));
    }
}

#[test]
fn catalog_members_have_the_advertised_sizes() {
    let sizes = [
        ("U24", 4, 2), ("U25", 5, 2), ("U35", 5, 3), ("whirl3", 6, 3), ("whirl4", 8, 4),
        ("F7", 7, 3), ("F7-*", 7, 4), ("P8", 8, 4), ("AG23e", 8, 3),
    ];
    for (name, n, r) in sizes {
        let m = catalog(name).unwrap();
        assert_eq!((m.len(), m.rank()), (n, r), "{name}");
    }
    for name in catalog_names() {
        assert!(catalog(name).unwrap().is_3connected(), "{name}");
    }
}

#[test]
fn isomorphism_distinguishes_the_fano_relaxation() {
    let f7 = catalog("F7").unwrap();
    let f7m = catalog("F7-").unwrap();
    assert!(is_isomorphic(&f7, &f7m).is_none());
    assert!(is_isomorphic(&f7m.dual(), &catalog("F7-*").unwrap()).is_some());
    assert!(!has_minor(&f7, &catalog("U24").unwrap()));
    assert!(has_minor(&f7m, &catalog("U24").unwrap()));
}
