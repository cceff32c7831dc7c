//! Contractible, deletable and essential elements with respect to a set of
//! matroids, and fragility tests.

use rayon::prelude::*;

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::matroid::{has_minor, Matroid, MinorCache};

/// Classification of the ground set. `contractible` and `deletable` overlap
/// exactly when the matroid is not fragile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragilityReport {
    pub contractible: Set,
    pub deletable: Set,
    pub essential: Set,
    pub fragile: bool,
    pub strict: bool,
}

impl FragilityReport {
    fn assemble(m: &Matroid, con: Set, del: Set, has_any: bool) -> Self {
        let fragile = con & del == 0;
        FragilityReport {
            contractible: con,
            deletable: del,
            essential: m.ground() & !con & !del,
            fragile,
            strict: fragile && has_any,
        }
    }

    /// `C`, `D` and `E` as label lists in ground order.
    pub fn labels(&self, m: &Matroid) -> [Vec<String>; 3] {
        [m.names(self.contractible), m.names(self.deletable), m.names(self.essential)]
    }
}

fn has_any(m: &Matroid, ns: &[Matroid]) -> bool {
    ns.iter().any(|n| has_minor(m, n))
}

/// Classifies every element; single-element minors are checked in parallel.
pub fn classify(m: &Matroid, ns: &[Matroid]) -> FragilityReport {
    let flags: Vec<(bool, bool)> = (0..m.len())
        .into_par_iter()
        .map(|e| {
            let b = bits::bit(e);
            let c = has_any(&m.contract(b).expect("element of the ground set"), ns);
            let d = has_any(&m.delete(b).expect("element of the ground set"), ns);
            (c, d)
        })
        .collect();
    let (con, del) = fold_flags(&flags);
    FragilityReport::assemble(m, con, del, con | del != 0 || has_any(m, ns))
}

/// As `classify`, sharing minor queries through `cache`.
pub fn classify_cached(m: &Matroid, cache: &mut MinorCache) -> FragilityReport {
    let flags: Vec<(bool, bool)> = (0..m.len())
        .map(|e| {
            let b = bits::bit(e);
            let c = cache.has_any(&m.contract(b).expect("element of the ground set"));
            let d = cache.has_any(&m.delete(b).expect("element of the ground set"));
            (c, d)
        })
        .collect();
    let (con, del) = fold_flags(&flags);
    let any = con | del != 0 || cache.has_any(m);
    FragilityReport::assemble(m, con, del, any)
}

fn fold_flags(flags: &[(bool, bool)]) -> (Set, Set) {
    let mut con = 0;
    let mut del = 0;
    for (e, &(c, d)) in flags.iter().enumerate() {
        if c {
            con |= bits::bit(e);
        }
        if d {
            del |= bits::bit(e);
        }
    }
    (con, del)
}

/// Whether classifying the dual against the duals swaps `C` and `D` and keeps `E`.
pub fn duality_swap_check(m: &Matroid, ns: &[Matroid]) -> bool {
    let r = classify(m, ns);
    let duals: Vec<Matroid> = ns.iter().map(Matroid::dual).collect();
    let d = classify(&m.dual(), &duals);
    r.contractible == d.deletable && r.deletable == d.contractible && r.essential == d.essential
}

/// Connected, and every 2-separation has a side inside a parallel or series class.
pub fn is_3connected_up_to_series_parallel(m: &Matroid) -> bool {
    if !m.is_connected() {
        return false;
    }
    let classes: Vec<Set> = m
        .parallel_classes()
        .into_iter()
        .chain(m.series_classes())
        .collect();
    m.separations(2).iter().all(|s| {
        classes
            .iter()
            .any(|&c| s.part1 & !c == 0 || s.part2 & !c == 0)
    })
}

/// For a strictly fragile matroid: parallel pairs are deletable, series pairs
/// contractible, and the matroid is 3-connected up to series and parallel
/// classes. Vacuously true when the matroid is not strictly fragile.
pub fn series_parallel_laws(m: &Matroid, ns: &[Matroid]) -> Result<bool> {
    if let Some(n) = ns.iter().find(|n| n.len() < 4 || !n.is_3connected()) {
        return Err(Error::pre(format!(
            "every member must be 3-connected with at least 4 elements, not {n:?}"
        )));
    }
    let r = classify(m, ns);
    if !r.strict {
        return Ok(true);
    }
    let non_loops = m.ground() & !m.loops();
    let parallel_ok = m
        .parallel_classes()
        .iter()
        .filter(|&&c| bits::size(c & non_loops) >= 2)
        .all(|&c| c & !r.deletable == 0);
    let non_coloops = m.ground() & !m.coloops();
    let series_ok = m
        .series_classes()
        .iter()
        .filter(|&&c| bits::size(c & non_coloops) >= 2)
        .all(|&c| c & !r.contractible == 0);
    Ok(parallel_ok && series_ok && is_3connected_up_to_series_parallel(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{catalog, letters};

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, letters(n)).unwrap()
    }

    #[test]
    fn uniform_examples() {
        let ns = [u(2, 4)];
        let r = classify(&u(2, 5), &ns);
        assert_eq!((r.contractible, r.deletable, r.essential), (0, 0b11111, 0));
        assert!(r.strict);
        let r = classify(&u(2, 4), &ns);
        assert_eq!(r.essential, 0b1111);
        assert!(r.strict);
        let r = classify(&u(2, 3), &ns);
        assert!(r.fragile && !r.strict);
    }

    #[test]
    fn p6_is_not_fragile() {
        let r = classify(&catalog("P6").unwrap(), &[u(2, 4)]);
        assert!(!r.fragile);
        assert!(r.contractible & r.deletable != 0);
    }

    #[test]
    fn duality_swaps() {
        let ns = [u(2, 4)];
        assert!(duality_swap_check(&u(2, 5), &ns));
        assert!(duality_swap_check(&catalog("whirl3").unwrap(), &ns));
        let a = classify(&u(2, 5), &ns);
        let b = classify(&u(3, 5), &ns);
        assert_eq!((a.contractible, a.deletable), (b.deletable, b.contractible));
    }

    #[test]
    fn parallel_pair_is_deletable() {
        let a = crate::pmatrix::LabeledMatrix::from_ints(
            crate::pfield::PartialFieldId::Prime(5),
            &["a", "b"],
            &["c", "d", "e"],
            &[vec![1, 1, 1], vec![1, 2, 0]],
        )
        .unwrap();
        let m = Matroid::from_pmatrix(&a).unwrap();
        let ns = [u(2, 4)];
        let r = classify(&m, &ns);
        assert!(r.strict);
        let pair = m.set(&["a", "e"]).unwrap();
        assert_eq!(r.deletable & pair, pair);
        assert!(series_parallel_laws(&m, &ns).unwrap());
        let d = classify(&m.dual(), &ns);
        assert_eq!(d.contractible & pair, pair);
        assert!(series_parallel_laws(&m.dual(), &ns).unwrap());
        assert!(series_parallel_laws(&catalog("whirl3").unwrap(), &ns).unwrap());
        assert!(series_parallel_laws(&m, &[u(1, 2)]).is_err());
    }

    #[test]
    fn cached_matches_direct() {
        let ns = vec![u(2, 4)];
        let mut cache = MinorCache::new(ns.clone());
        for name in ["whirl3", "P6", "F7-", "U25"] {
            let m = catalog(name).unwrap();
            assert_eq!(classify(&m, &ns), classify_cached(&m, &mut cache), "{name}");
        }
    }
}
