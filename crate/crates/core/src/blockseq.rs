//! Crossed and uncrossed 2-separations, blocking sequences, and bridging.
//!
//! All sets are in the index space of the host matroid `M`. A separation
//! `(Z1, Z2)` of the minor `M_B[E']` is given by its two sides, which
//! partition `E'`. The connectivity `lambda_B(X, Y)` is computed directly in
//! `M` without building the minor.

use std::collections::VecDeque;

use crate::bits::{self, Set};
use crate::decomp::branch_width;
use crate::error::{Error, Result};
use crate::matroid::{has_minor, Matroid, Separation};

/// A blocking sequence for the `k`-separation `(z1, z2)` together with the
/// values of `lambda_B` on its defining pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingSequence {
    pub elements: Vec<usize>,
    pub k: usize,
    pub z1: Set,
    pub z2: Set,
    /// `lambda_B` of `(Z1, Z2+v1)`, `(Z1+v_i, Z2+v_{i+1})`, ..., `(Z1+v_t, Z2)`.
    pub checks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockingOutcome {
    Sequence(BlockingSequence),
    /// A separation of `M` extending the given one, with its order.
    Induced(Separation),
}

/// All 2-separations, once each with element 0 on the first side.
pub fn two_separations(m: &Matroid) -> Vec<Separation> {
    m.separations(2)
}

fn cross(a: &Separation, b: &Separation) -> bool {
    [a.part1, a.part2]
        .iter()
        .all(|&x| [b.part1, b.part2].iter().all(|&y| x & y != 0))
}

/// Index pairs `(i, j)`, `i < j`, of crossing 2-separations.
pub fn crossing_pairs(m: &Matroid) -> Vec<(usize, usize)> {
    let seps = two_separations(m);
    let mut out = Vec::new();
    for i in 0..seps.len() {
        for j in i + 1..seps.len() {
            if cross(&seps[i], &seps[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// 2-separations crossed by no other 2-separation, in canonical order.
pub fn uncrossed_2seps(m: &Matroid) -> Vec<Separation> {
    let seps = two_separations(m);
    seps.iter()
        .filter(|s| !seps.iter().any(|t| cross(s, t)))
        .cloned()
        .collect()
}

/// 2-separations crossed by at least one other.
pub fn crossed_2seps(m: &Matroid) -> Vec<Separation> {
    let seps = two_separations(m);
    seps.iter()
        .filter(|s| seps.iter().any(|t| cross(s, t)))
        .cloned()
        .collect()
}

/// The `lambda_B` values of the defining pairs of a candidate sequence. For
/// the empty sequence the single value is `lambda_B(Z1, Z2)`.
pub fn sequence_checks(m: &Matroid, b: Set, z1: Set, z2: Set, seq: &[usize]) -> Vec<usize> {
    let lam = |x: Set, y: Set| m.lambda_b_unchecked(b, x, y);
    let Some((&first, _)) = seq.split_first() else {
        return vec![lam(z1, z2)];
    };
    let mut out = vec![lam(z1, z2 | bits::bit(first))];
    for w in seq.windows(2) {
        out.push(lam(z1 | bits::bit(w[0]), z2 | bits::bit(w[1])));
    }
    out.push(lam(z1 | bits::bit(*seq.last().expect("nonempty")), z2));
    out
}

/// Conditions (i) to (iii): every defining pair has connectivity `k`.
pub fn satisfies_conditions(m: &Matroid, b: Set, z1: Set, z2: Set, k: usize, seq: &[usize]) -> bool {
    sequence_checks(m, b, z1, z2, seq).iter().all(|&v| v == k)
}

/// Full check including minimality over all proper subsequences.
pub fn is_blocking_sequence(m: &Matroid, b: Set, z1: Set, z2: Set, k: usize, seq: &[usize]) -> bool {
    if !satisfies_conditions(m, b, z1, z2, k, seq) {
        return false;
    }
    let t = seq.len();
    (0u32..(1 << t) - 1).all(|mask| {
        let sub: Vec<usize> = (0..t).filter(|&i| mask >> i & 1 == 1).map(|i| seq[i]).collect();
        sub.is_empty() || !satisfies_conditions(m, b, z1, z2, k, &sub)
    })
}

/// Whether consecutive elements alternate between `b` and its complement.
pub fn alternates(b: Set, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| bits::has(b, w[0]) != bits::has(b, w[1]))
}

fn check_exact(m: &Matroid, b: Set, z1: Set, z2: Set, k: usize) -> Result<()> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis(m.word(b)));
    }
    if z1 & z2 != 0 || (z1 | z2) & !m.ground() != 0 {
        return Err(Error::pre("separation sides must be disjoint subsets of the ground set"));
    }
    if k == 0 || bits::size(z1) < k || bits::size(z2) < k {
        return Err(Error::pre(format!("both sides need at least {k} elements")));
    }
    let lam = m.lambda_b_unchecked(b, z1, z2);
    if lam != k - 1 {
        return Err(Error::pre(format!(
            "separation has connectivity {lam}, not an exact {k}-separation"
        )));
    }
    Ok(())
}

/// Returns the lexicographically least shortest blocking sequence for the
/// exact `k`-separation `(z1, z2)` of `M_B[z1 + z2]`, or, when none exists, the
/// least separation of `M` that induces it.
pub fn find_blocking_sequence(m: &Matroid, b: Set, z1: Set, z2: Set, k: usize) -> Result<BlockingOutcome> {
    check_exact(m, b, z1, z2, k)?;
    let rest = bits::elems(m.ground() & !z1 & !z2);
    let lam = |x: Set, y: Set| m.lambda_b_unchecked(b, x, y);
    let n = rest.len();
    let start: Vec<bool> = rest.iter().map(|&v| lam(z1, z2 | bits::bit(v)) == k).collect();
    let end: Vec<bool> = rest.iter().map(|&v| lam(z1 | bits::bit(v), z2) == k).collect();
    let edge = |i: usize, j: usize| i != j && lam(z1 | bits::bit(rest[i]), z2 | bits::bit(rest[j])) == k;
    let mut arcs = vec![vec![false; n]; n];
    for (i, row) in arcs.iter_mut().enumerate() {
        for (j, a) in row.iter_mut().enumerate() {
            *a = edge(i, j);
        }
    }
    // Distance to an end vertex, by reverse breadth-first search.
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for i in 0..n {
        if end[i] {
            dist[i] = 0;
            queue.push_back(i);
        }
    }
    while let Some(j) = queue.pop_front() {
        for i in 0..n {
            if arcs[i][j] && dist[i] == usize::MAX {
                dist[i] = dist[j] + 1;
                queue.push_back(i);
            }
        }
    }
    let first = (0..n)
        .filter(|&i| start[i] && dist[i] != usize::MAX)
        .min_by_key(|&i| (dist[i], i));
    if let Some(mut i) = first {
        let mut path = vec![rest[i]];
        while dist[i] > 0 {
            i = (0..n)
                .find(|&j| arcs[i][j] && dist[j] + 1 == dist[i])
                .expect("distance labels are consistent");
            path.push(rest[i]);
        }
        let checks = sequence_checks(m, b, z1, z2, &path);
        return Ok(BlockingOutcome::Sequence(BlockingSequence {
            elements: path,
            k,
            z1,
            z2,
            checks,
        }));
    }
    // No sequence: some extension of the separation must have order below k.
    let rest_set = bits::from_elems(rest.iter().copied());
    for r1 in bits::submasks(rest_set) {
        let x = z1 | r1;
        let order = m.lambda(x);
        if order < k {
            return Ok(BlockingOutcome::Induced(Separation {
                part1: x,
                part2: m.ground() & !x,
                order,
            }));
        }
    }
    Err(Error::Invariant(format!(
        "separation ({}, {}) is neither bridged nor induced",
        m.word(z1),
        m.word(z2)
    )))
}

/// Given a blocking sequence for `(z1, z2)` and `z2pp` inside `z2` with
/// `lambda_B(z1, z2pp) = k - 1`, returns `v_1..v_{t-1}` as a blocking
/// sequence for `(z1, z2pp + v_t)`. For `t = 1` the result is empty, meaning
/// that `lambda_B(z1, z2pp + v_1) = k` and so the new pair is not a
/// `k`-separation at all.
pub fn shorten_on_shrunk_side(m: &Matroid, b: Set, seq: &BlockingSequence, z2pp: Set) -> Result<BlockingSequence> {
    let (z1, z2, k) = (seq.z1, seq.z2, seq.k);
    if seq.elements.is_empty() || !is_blocking_sequence(m, b, z1, z2, k, &seq.elements) {
        return Err(Error::pre("input is not a blocking sequence"));
    }
    if z2pp & !z2 != 0 || bits::size(z2pp) < k {
        return Err(Error::pre("the shrunk side must be a subset of Z2 with at least k elements"));
    }
    if m.lambda_b_unchecked(b, z1, z2pp) != k - 1 {
        return Err(Error::pre("the shrunk pair must have connectivity k - 1"));
    }
    let t = seq.elements.len();
    let new_z2 = z2pp | bits::bit(seq.elements[t - 1]);
    let elements = seq.elements[..t - 1].to_vec();
    if !is_blocking_sequence(m, b, z1, new_z2, k, &elements) {
        return Err(Error::Invariant("shortened sequence fails the definition".into()));
    }
    let checks = sequence_checks(m, b, z1, new_z2, &elements);
    Ok(BlockingSequence {
        elements,
        k,
        z1,
        z2: new_z2,
        checks,
    })
}

/// One bridging step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeRound {
    /// The uncrossed 2-separation that was bridged, in host indices.
    pub z1: Set,
    pub z2: Set,
    pub sequence: Vec<usize>,
    pub seps_before: usize,
    pub seps_after: usize,
    pub bw_before: usize,
    pub bw_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport {
    pub start: Set,
    pub result: Set,
    pub rounds: Vec<BridgeRound>,
}

/// Maps a set of minor indices back to host indices, given the host
/// elements of the minor in increasing order.
pub(crate) fn lift(elems: &[usize], s: Set) -> Set {
    bits::from_elems(bits::elems(s).into_iter().map(|i| elems[i]))
}

/// Repeatedly bridges the least uncrossed 2-separation of `M_B[E']` that has a
/// blocking sequence, adjoining the sequence each time.
pub fn bridge_uncrossed_2seps(m: &Matroid, b: Set, eprime: Set) -> Result<BridgeReport> {
    bridge_avoiding(m, b, eprime, 0)
}

/// As `bridge_uncrossed_2seps`, but never adjoins elements of `avoid`. Any
/// separation whose sequence would need them is skipped.
pub fn bridge_avoiding(m: &Matroid, b: Set, eprime: Set, avoid: Set) -> Result<BridgeReport> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis(m.word(b)));
    }
    let first = m.minor_by_basis(b, eprime)?;
    if !first.is_connected() {
        return Err(Error::pre("M_B[E'] must be connected"));
    }
    let u24 = Matroid::uniform(2, crate::matroid::letters(4))?;
    if !has_minor(&first, &u24) {
        return Err(Error::pre("M_B[E'] must be nonbinary"));
    }
    let mut cur = eprime;
    let mut rounds = Vec::new();
    loop {
        let minor = m.minor_by_basis(b, cur)?;
        let elems = bits::elems(cur);
        let seps = two_separations(&minor);
        if seps.is_empty() {
            break;
        }
        let unc = uncrossed_2seps(&minor);
        if unc.is_empty() {
            return Err(Error::Invariant(
                "connected nonbinary matroid with 2-separations but none uncrossed".into(),
            ));
        }
        let mut bridged = None;
        for s in &unc {
            let (z1, z2) = (lift(&elems, s.part1), lift(&elems, s.part2));
            if let BlockingOutcome::Sequence(seq) = find_blocking_sequence_avoiding(m, b, z1, z2, 2, avoid)? {
                bridged = Some((z1, z2, seq));
                break;
            }
        }
        let Some((z1, z2, seq)) = bridged else {
            break;
        };
        let next = cur | bits::from_elems(seq.elements.iter().copied());
        let after = m.minor_by_basis(b, next)?;
        let seps_after = two_separations(&after);
        // Every surviving 2-separation keeps one old side together with the sequence.
        let vs = bits::from_elems(seq.elements.iter().copied());
        for t in &seps_after {
            let (t1, t2) = (lift(&bits::elems(next), t.part1), lift(&bits::elems(next), t.part2));
            let ok = [z1, z2]
                .iter()
                .any(|&zi| [t1, t2].iter().any(|&tj| (zi | vs) & !tj == 0));
            if !ok {
                return Err(Error::Invariant("a new 2-separation splits the bridged side".into()));
            }
        }
        if seps_after.len() >= seps.len() {
            return Err(Error::Invariant("bridging did not reduce the number of 2-separations".into()));
        }
        let bw_before = branch_width(&minor)?.0;
        let bw_after = branch_width(&after)?.0;
        if bw_after > bw_before + 2 {
            return Err(Error::Invariant("bridging increased branch width by more than 2".into()));
        }
        rounds.push(BridgeRound {
            z1,
            z2,
            sequence: seq.elements,
            seps_before: seps.len(),
            seps_after: seps_after.len(),
            bw_before,
            bw_after,
        });
        cur = next;
    }
    Ok(BridgeReport {
        start: eprime,
        result: cur,
        rounds,
    })
}

/// Shortest blocking sequence avoiding `avoid`, if one exists among those
/// found by `find_blocking_sequence` on the host with `avoid` removed from
/// consideration. Deleting non-basis elements and contracting basis elements
/// of `avoid` does not change `lambda_B` on the remaining elements.
fn find_blocking_sequence_avoiding(m: &Matroid, b: Set, z1: Set, z2: Set, k: usize, avoid: Set) -> Result<BlockingOutcome> {
    if avoid == 0 {
        return find_blocking_sequence(m, b, z1, z2, k);
    }
    let keep = m.ground() & !avoid;
    let host = m.minor_by_basis(b, keep)?;
    let elems = bits::elems(keep);
    let index = |s: Set| -> Set {
        bits::from_elems(bits::elems(s).into_iter().map(|e| elems.iter().position(|&x| x == e).expect("kept")))
    };
    let hb = index(b & keep);
    Ok(match find_blocking_sequence(&host, hb, index(z1), index(z2), k)? {
        BlockingOutcome::Sequence(s) => BlockingOutcome::Sequence(BlockingSequence {
            elements: s.elements.iter().map(|&i| elems[i]).collect(),
            k,
            z1,
            z2,
            checks: s.checks,
        }),
        BlockingOutcome::Induced(sep) => BlockingOutcome::Induced(Separation {
            part1: lift(&elems, sep.part1),
            part2: lift(&elems, sep.part2),
            order: sep.order,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{catalog, letters};

    fn whirl3() -> Matroid {
        catalog("whirl3").unwrap()
    }

    #[test]
    fn three_connected_has_no_2_separations() {
        let m = whirl3();
        assert!(crossing_pairs(&m).is_empty());
        assert!(uncrossed_2seps(&m).is_empty());
    }

    #[test]
    fn unique_2_separation_is_uncrossed() {
        // U24 with an element parallel to a.
        let a = crate::pmatrix::LabeledMatrix::from_ints(
            crate::pfield::PartialFieldId::Prime(5),
            &["a", "b"],
            &["c", "d", "e"],
            &[vec![1, 1, 1], vec![1, 2, 0]],
        )
        .unwrap();
        let m = Matroid::from_pmatrix(&a).unwrap();
        assert_eq!(two_separations(&m).len(), 1);
        assert_eq!(uncrossed_2seps(&m).len(), 1);
    }

    #[test]
    fn whole_ground_set_is_induced() {
        let a = crate::pmatrix::LabeledMatrix::from_ints(
            crate::pfield::PartialFieldId::Prime(5),
            &["a", "b"],
            &["c", "d", "e"],
            &[vec![1, 1, 1], vec![1, 2, 0]],
        )
        .unwrap();
        let m = Matroid::from_pmatrix(&a).unwrap();
        let s = &two_separations(&m)[0];
        let b = m.first_basis();
        match find_blocking_sequence(&m, b, s.part1, s.part2, 2).unwrap() {
            BlockingOutcome::Induced(sep) => assert_eq!(sep.part1, s.part1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn whirl_minor_separation_is_bridged() {
        let m = whirl3();
        let b = m.set(&["a", "b", "c"]).unwrap();
        let mut found = 0;
        for e in 0..6 {
            let ep = m.ground() & !bits::bit(e);
            let minor = m.minor_by_basis(b, ep).unwrap();
            let elems = bits::elems(ep);
            for s in two_separations(&minor) {
                if s.order != 1 {
                    continue;
                }
                let (z1, z2) = (lift(&elems, s.part1), lift(&elems, s.part2));
                match find_blocking_sequence(&m, b, z1, z2, 2).unwrap() {
                    BlockingOutcome::Sequence(seq) => {
                        assert!(is_blocking_sequence(&m, b, z1, z2, 2, &seq.elements));
                        assert!(alternates(b, &seq.elements));
                        found += 1;
                    }
                    BlockingOutcome::Induced(_) => panic!("whirl3 is 3-connected"),
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn rejects_non_exact_input() {
        let m = Matroid::uniform(2, letters(4)).unwrap();
        let b = m.first_basis();
        assert!(find_blocking_sequence(&m, b, 0b0011, 0b1100, 2).is_err());
    }
}
