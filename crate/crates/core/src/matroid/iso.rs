//! Isomorphism and minor testing by backtracking.

use std::collections::{HashMap, HashSet};

use super::Matroid;
use crate::bits::{self, Set};

/// Per-element invariants preserved by isomorphisms.
fn invariants(m: &Matroid) -> Vec<(usize, usize, usize)> {
    let deg = m.basis_degrees();
    let d = m.dual();
    (0..m.len())
        .map(|e| {
            let b = bits::bit(e);
            (deg[e], bits::size(m.closure(b)), bits::size(d.closure(b)))
        })
        .collect()
}

/// Finds a bijection `map` with `map[i]` the element of `n` matched to element
/// `i` of `m`, such that ranks agree on every subset.
pub fn is_isomorphic(m: &Matroid, n: &Matroid) -> Option<Vec<usize>> {
    if m.len() != n.len() || m.rank() != n.rank() || m.bases().len() != n.bases().len() {
        return None;
    }
    let im = invariants(m);
    let inn = invariants(n);
    let mut a = im.clone();
    let mut b = inn.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    // Assign rare invariant classes first.
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by_key(|&e| (im.iter().filter(|&&v| v == im[e]).count(), e));
    let mut map = vec![usize::MAX; m.len()];
    let mut used = vec![false; n.len()];
    if search(m, n, &im, &inn, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    m: &Matroid,
    n: &Matroid,
    im: &[(usize, usize, usize)],
    inn: &[(usize, usize, usize)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let e = order[depth];
    let prev = &order[..depth];
    let r = m.rank();
    for f in 0..n.len() {
        if used[f] || inn[f] != im[e] {
            continue;
        }
        map[e] = f;
        // Subsets of the assigned prefix together with e, up to size r + 1,
        // determine all ranks.
        let ok = (0u32..1 << prev.len()).all(|sub| {
            if sub.count_ones() as usize > r {
                return true;
            }
            let mut sm = bits::bit(e);
            let mut sn = bits::bit(f);
            for (k, &p) in prev.iter().enumerate() {
                if sub >> k & 1 == 1 {
                    sm |= bits::bit(p);
                    sn |= bits::bit(map[p]);
                }
            }
            m.rank_of(sm) == n.rank_of(sn)
        });
        if ok {
            used[f] = true;
            if search(m, n, im, inn, order, depth + 1, map, used) {
                return true;
            }
            used[f] = false;
        }
    }
    map[e] = usize::MAX;
    false
}

/// A minor `M / contract \ delete` isomorphic to a target, with `map[i]` the
/// element of `M` playing the role of target element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorEmbedding {
    pub contract: Set,
    pub delete: Set,
    pub map: Vec<usize>,
}

/// Calls `visit` on each candidate minor `(C, D, M/C\D)` with `C` independent,
/// `D` co-independent and the right sizes, once per pair (kept set, closure
/// of `C`). Stops when `visit` returns `true`.
fn for_each_candidate(m: &Matroid, target: &Matroid, mut visit: impl FnMut(Set, Set, &Matroid) -> bool) {
    if target.len() > m.len() || target.rank() > m.rank() || target.corank() > m.corank() {
        return;
    }
    let c = m.rank() - target.rank();
    let full = m.ground();
    let target_bases = target.bases().len();
    for kept in bits::combinations(m.len(), target.len()) {
        let k = bits::from_elems(kept);
        let rest = bits::elems(full & !k);
        let mut seen: HashSet<Set> = HashSet::new();
        for cs in bits::combinations(rest.len(), c) {
            let cset = bits::from_elems(cs.iter().map(|&i| rest[i]));
            if !m.is_independent(cset) || m.rank_of(k | cset) != m.rank() {
                continue;
            }
            if !seen.insert(m.closure(cset)) {
                continue;
            }
            let d = full & !k & !cset;
            let minor = m.minor(cset, d).expect("disjoint subsets of the ground set");
            if minor.bases().len() != target_bases {
                continue;
            }
            if visit(cset, d, &minor) {
                return;
            }
        }
    }
}

/// Whether `m` has a minor isomorphic to `target`.
pub fn has_minor(m: &Matroid, target: &Matroid) -> bool {
    let mut found = false;
    for_each_candidate(m, target, |_, _, minor| {
        found = is_isomorphic(minor, target).is_some();
        found
    });
    found
}

/// All minors of `m` isomorphic to `target`, one isomorphism each, up to
/// the choice of contracted set within its closure.
pub fn minor_embeddings(m: &Matroid, target: &Matroid) -> Vec<MinorEmbedding> {
    let mut out = Vec::new();
    for_each_candidate(m, target, |c, d, minor| {
        if let Some(iso) = is_isomorphic(target, minor) {
            let kept = bits::elems(m.ground() & !c & !d);
            out.push(MinorEmbedding {
                contract: c,
                delete: d,
                map: iso.into_iter().map(|i| kept[i]).collect(),
            });
        }
        false
    });
    out
}

/// Memoized minor queries against a fixed list of targets, keyed by the
/// labeled basis family of the host.
pub struct MinorCache {
    targets: Vec<Matroid>,
    memo: HashMap<(usize, Vec<Set>, usize), bool>,
}

impl MinorCache {
    pub fn new(targets: Vec<Matroid>) -> Self {
        MinorCache {
            targets,
            memo: HashMap::new(),
        }
    }

    pub fn targets(&self) -> &[Matroid] {
        &self.targets
    }

    pub fn has(&mut self, m: &Matroid, target: usize) -> bool {
        let key = (m.len(), m.bases().to_vec(), target);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = has_minor(m, &self.targets[target]);
        self.memo.insert(key, v);
        v
    }

    /// Whether `m` has a minor isomorphic to some target.
    pub fn has_any(&mut self, m: &Matroid) -> bool {
        (0..self.targets.len()).any(|t| self.has(m, t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::letters;

    #[test]
    fn identity_and_relabeling() {
        let m = Matroid::uniform(2, letters(5)).unwrap();
        let map = is_isomorphic(&m, &m).unwrap();
        assert_eq!(map.len(), 5);
        let p = m.permuted(&[4, 2, 0, 1, 3]);
        assert!(is_isomorphic(&m, &p).is_some());
        let u34 = Matroid::uniform(3, letters(5)).unwrap();
        assert!(is_isomorphic(&m, &u34).is_none());
    }

    #[test]
    fn uniform_minors() {
        let u24 = Matroid::uniform(2, letters(4)).unwrap();
        let u36 = Matroid::uniform(3, letters(6)).unwrap();
        assert!(has_minor(&u36, &u24));
        let u34 = Matroid::uniform(3, letters(4)).unwrap();
        assert!(!has_minor(&u34, &u24));
        let emb = minor_embeddings(&Matroid::uniform(2, letters(5)).unwrap(), &u24);
        assert_eq!(emb.len(), 5);
    }
}
