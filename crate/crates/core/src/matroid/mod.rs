//! Matroids on at most sixteen labeled elements, stored by their rank function.
//!
//! The rank of every subset is tabulated once, so rank queries, minors and
//! connectivity are table lookups.

mod catalog;
mod iso;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::bipartite::BipartiteGraph;
use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::pmatrix::LabeledMatrix;

pub use catalog::{catalog, catalog_entry, catalog_matrix, catalog_names, CatalogEntry};
pub use iso::{has_minor, is_isomorphic, minor_embeddings, MinorCache, MinorEmbedding};

/// Hard cap on the ground set size.
pub const MAX_GROUND: usize = 16;

/// Ground sets up to this size have the exchange axiom verified on construction.
pub const EXCHANGE_CHECK_LIMIT: usize = 12;

#[derive(Clone)]
pub struct Matroid {
    labels: Vec<String>,
    rank: usize,
    ranks: Arc<Vec<u8>>,
    bases: Arc<Vec<Set>>,
}

/// A partition of the ground set with its connectivity value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub part1: Set,
    pub part2: Set,
    pub order: usize,
}

impl Separation {
    pub fn labels(&self, m: &Matroid) -> (Vec<String>, Vec<String>) {
        (m.names(self.part1), m.names(self.part2))
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_GROUND {
        return Err(Error::GroundTooLarge(labels.len(), MAX_GROUND));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || l.chars().any(|c| c.is_whitespace()) {
            return Err(Error::pre(format!("invalid label `{l}`")));
        }
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Rank table from a basis family via the downward closure of the bases.
fn ranks_from_bases(n: usize, bases: &[Set]) -> Vec<u8> {
    let size = 1usize << n;
    let full = bits::full(n);
    let mut indep = vec![false; size];
    for &b in bases {
        indep[b as usize] = true;
    }
    for s in (0..size).rev() {
        if indep[s] {
            continue;
        }
        let mut t = !(s as Set) & full;
        while t != 0 {
            let e = t & t.wrapping_neg();
            if indep[s | e as usize] {
                indep[s] = true;
                break;
            }
            t &= t - 1;
        }
    }
    let mut ranks = vec![0u8; size];
    for s in 1..size {
        if indep[s] {
            ranks[s] = (s as Set).count_ones() as u8;
        } else {
            let mut best = 0;
            let mut t = s as Set;
            while t != 0 {
                let e = t & t.wrapping_neg();
                best = best.max(ranks[s ^ e as usize]);
                t &= t - 1;
            }
            ranks[s] = best;
        }
    }
    ranks
}

impl Matroid {
    /// Builds a matroid from its bases, verifying the exchange axiom when the
    /// ground set is small enough.
    pub fn from_bases(labels: Vec<String>, bases: Vec<Set>) -> Result<Matroid> {
        check_labels(&labels)?;
        let n = labels.len();
        let full = bits::full(n);
        let mut bases = bases;
        bases.sort_unstable();
        bases.dedup();
        let Some(&first) = bases.first() else {
            return Err(Error::pre("a matroid needs at least one basis"));
        };
        let r = bits::size(first);
        if let Some(&b) = bases.iter().find(|&&b| b & !full != 0 || bits::size(b) != r) {
            return Err(Error::pre(format!(
                "basis {:?} has the wrong size or leaves the ground set",
                bits::elems(b)
            )));
        }
        if n <= EXCHANGE_CHECK_LIMIT {
            let mut is_basis = vec![false; 1 << n];
            for &b in &bases {
                is_basis[b as usize] = true;
            }
            let name = |s: Set| bits::elems(s).iter().map(|&i| labels[i].as_str()).collect::<String>();
            for &b1 in &bases {
                for &b2 in &bases {
                    for x in bits::elems(b1 & !b2) {
                        let ok = bits::elems(b2 & !b1)
                            .into_iter()
                            .any(|y| is_basis[((b1 & !bits::bit(x)) | bits::bit(y)) as usize]);
                        if !ok {
                            return Err(Error::Exchange(name(b1), name(b2), labels[x].clone()));
                        }
                    }
                }
            }
        }
        let ranks = ranks_from_bases(n, &bases);
        Ok(Matroid {
            labels,
            rank: r,
            ranks: Arc::new(ranks),
            bases: Arc::new(bases),
        })
    }

    /// Builds a matroid from a rank table known to satisfy the axioms.
    pub(crate) fn from_rank_table(labels: Vec<String>, ranks: Vec<u8>) -> Matroid {
        let n = labels.len();
        let full = bits::full(n);
        let rank = ranks[full as usize] as usize;
        let bases: Vec<Set> = (0..=full)
            .filter(|&s| bits::size(s) == rank && ranks[s as usize] as usize == rank)
            .collect();
        Matroid {
            labels,
            rank,
            ranks: Arc::new(ranks),
            bases: Arc::new(bases),
        }
    }

    /// The free matroid: the whole ground set is the unique basis.
    pub fn free(labels: Vec<String>) -> Result<Matroid> {
        let n = labels.len();
        Self::from_bases(labels, vec![bits::full(n)])
    }

    /// The uniform matroid `U(r, n)` on the given labels.
    pub fn uniform(r: usize, labels: Vec<String>) -> Result<Matroid> {
        let n = labels.len();
        if r > n {
            return Err(Error::pre(format!("U({r},{n}) needs r <= n")));
        }
        check_labels(&labels)?;
        let ranks = (0..1usize << n).map(|s| (s.count_ones() as usize).min(r) as u8).collect();
        Ok(Self::from_rank_table(labels, ranks))
    }

    /// The matroid of `[I A]` with ground set rows followed by columns. The
    /// matrix must be a P-matrix.
    pub fn from_pmatrix(a: &LabeledMatrix) -> Result<Matroid> {
        let cert = a.is_pmatrix();
        if !cert.verdict {
            let (r, c) = cert.witness.unwrap_or_default();
            return Err(Error::NotPMatrix(format!(
                "submatrix rows {{{}}} cols {{{}}} has determinant {}",
                r.join(","),
                c.join(","),
                cert.witness_det.map(|d| d.to_string()).unwrap_or_default()
            )));
        }
        Self::from_matrix_unchecked(a)
    }

    /// The basis family `{X ^ Z : det A[Z] != 0}` without the P-matrix check.
    /// Every ambient ring is a domain, so this is the column matroid of
    /// `[I A]` over the fraction field.
    pub fn from_matrix_unchecked(a: &LabeledMatrix) -> Result<Matroid> {
        let labels = a.labels();
        check_labels(&labels)?;
        let (m, n) = (a.nrows(), a.ncols());
        let xs = bits::full(m);
        let mut bases = Vec::new();
        for k in 0..=m.min(n) {
            for ri in bits::combinations(m, k) {
                for ci in bits::combinations(n, k) {
                    if !a.det_idx(&ri, &ci)?.is_zero() {
                        let r = bits::from_elems(ri.iter().copied());
                        let c = bits::from_elems(ci.iter().map(|j| j + m));
                        bases.push((xs & !r) | c);
                    }
                }
            }
        }
        bases.sort_unstable();
        let ranks = ranks_from_bases(labels.len(), &bases);
        Ok(Matroid {
            labels,
            rank: m,
            ranks: Arc::new(ranks),
            bases: Arc::new(bases),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn ground(&self) -> Set {
        bits::full(self.len())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.len() - self.rank
    }

    pub fn bases(&self) -> &[Set] {
        &self.bases
    }

    pub fn rank_table(&self) -> &[u8] {
        &self.ranks
    }

    #[inline]
    pub fn rank_of(&self, s: Set) -> usize {
        self.ranks[s as usize] as usize
    }

    pub fn is_independent(&self, s: Set) -> bool {
        self.rank_of(s) == bits::size(s)
    }

    pub fn is_basis(&self, s: Set) -> bool {
        bits::size(s) == self.rank && self.rank_of(s) == self.rank
    }

    pub fn closure(&self, s: Set) -> Set {
        let r = self.rank_of(s);
        (0..self.len())
            .filter(|&e| self.rank_of(s | bits::bit(e)) == r)
            .fold(s, |acc, e| acc | bits::bit(e))
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The set of the given labels.
    pub fn set<S: AsRef<str>>(&self, labels: &[S]) -> Result<Set> {
        labels
            .iter()
            .map(|l| self.index(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(bits::from_elems)
    }

    /// Parses a set written as concatenated labels, such as `abd`.
    pub fn set_from_word(&self, word: &str) -> Result<Set> {
        text::split_word(&self.labels, word).map(bits::from_elems)
    }

    pub fn names(&self, s: Set) -> Vec<String> {
        bits::elems(s).into_iter().map(|i| self.labels[i].clone()).collect()
    }

    /// The set as concatenated labels, in ground order.
    pub fn word(&self, s: Set) -> String {
        self.names(s).concat()
    }

    /// The same matroid with new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Matroid> {
        if labels.len() != self.len() {
            return Err(Error::Dimension("relabeling must keep the ground set size".into()));
        }
        check_labels(&labels)?;
        Ok(Matroid {
            labels,
            ..self.clone()
        })
    }

    /// The isomorphic matroid whose element `i` is element `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Matroid {
        let n = self.len();
        let labels = perm.iter().map(|&i| self.labels[i].clone()).collect();
        let mut map = vec![0 as Set; 1 << n];
        let mut ranks = vec![0u8; 1 << n];
        for s in 1..1usize << n {
            let low = s.trailing_zeros() as usize;
            map[s] = map[s & (s - 1)] | bits::bit(perm[low]);
            ranks[s] = self.ranks[map[s] as usize];
        }
        Self::from_rank_table(labels, ranks)
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground();
        let r = self.rank;
        let ranks = (0..=full)
            .map(|s| (bits::size(s) + self.rank_of(full & !s) - r) as u8)
            .collect();
        Self::from_rank_table(self.labels.clone(), ranks)
    }

    /// `M / contract \ delete`; remaining elements keep their relative order.
    pub fn minor(&self, contract: Set, delete: Set) -> Result<Matroid> {
        let full = self.ground();
        if (contract | delete) & !full != 0 {
            return Err(Error::pre("minor sets leave the ground set"));
        }
        if contract & delete != 0 {
            return Err(Error::pre("contracted and deleted sets overlap"));
        }
        let keep = bits::elems(full & !contract & !delete);
        let m = keep.len();
        let rc = self.rank_of(contract);
        let mut map = vec![0 as Set; 1 << m];
        let mut ranks = vec![0u8; 1 << m];
        for s in 1..1usize << m {
            let low = s.trailing_zeros() as usize;
            map[s] = map[s & (s - 1)] | bits::bit(keep[low]);
            ranks[s] = (self.rank_of(map[s] | contract) - rc) as u8;
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(Self::from_rank_table(labels, ranks))
    }

    pub fn delete(&self, d: Set) -> Result<Matroid> {
        self.minor(0, d)
    }

    pub fn contract(&self, c: Set) -> Result<Matroid> {
        self.minor(c, 0)
    }

    /// The restriction to `s`.
    pub fn restrict(&self, s: Set) -> Result<Matroid> {
        self.minor(0, self.ground() & !s)
    }

    fn require_basis(&self, b: Set) -> Result<()> {
        if !self.is_basis(b) {
            return Err(Error::NotABasis(format!("{{{}}}", self.names(b).join(","))));
        }
        Ok(())
    }

    /// `M_B[Z] = M / (B \ Z) \ (Y \ Z)` with `Y` the complement of `B`.
    pub fn minor_by_basis(&self, b: Set, z: Set) -> Result<Matroid> {
        self.require_basis(b)?;
        let full = self.ground();
        if z & !full != 0 {
            return Err(Error::pre("Z leaves the ground set"));
        }
        self.minor(b & !z, full & !b & !z)
    }

    /// `r(Z) + r(E \ Z) - r(M)`.
    pub fn lambda(&self, z: Set) -> usize {
        let full = self.ground();
        self.rank_of(z & full) + self.rank_of(full & !z) - self.rank
    }

    /// Two-argument connectivity relative to the basis `b`:
    /// `r_{M/(B\Y)}(X\B) + r_{M/(B\X)}(Y\B)`.
    pub fn lambda_b(&self, b: Set, x: Set, y: Set) -> Result<usize> {
        self.require_basis(b)?;
        Ok(self.lambda_b_unchecked(b, x, y))
    }

    #[inline]
    pub fn lambda_b_unchecked(&self, b: Set, x: Set, y: Set) -> usize {
        let by = b & !y;
        let bx = b & !x;
        self.rank_of((x & !b) | by) - bits::size(by) + self.rank_of((y & !b) | bx) - bits::size(bx)
    }

    /// All partitions `(X, Y)` with `|X|, |Y| >= k` and `lambda(X) < k`, listed
    /// once with element 0 in `X`, sorted by `X`.
    pub fn separations(&self, k: usize) -> Vec<Separation> {
        let n = self.len();
        if n < 2 * k.max(1) || n == 0 {
            return Vec::new();
        }
        let full = self.ground();
        let mut out = Vec::new();
        for x in 0..=full {
            if x & 1 == 0 {
                continue;
            }
            let y = full & !x;
            if bits::size(x) < k || bits::size(y) < k {
                continue;
            }
            let order = self.lambda(x);
            if order < k {
                out.push(Separation {
                    part1: x,
                    part2: y,
                    order,
                });
            }
        }
        out
    }

    fn has_separation(&self, k: usize) -> bool {
        let n = self.len();
        if n < 2 * k {
            return false;
        }
        let full = self.ground();
        (0..=full)
            .filter(|x| x & 1 == 1)
            .any(|x| bits::size(x) >= k && bits::size(full & !x) >= k && self.lambda(x) < k)
    }

    /// Largest `k <= 3` such that the matroid is `k`-connected.
    pub fn connectivity_degree(&self) -> usize {
        if self.has_separation(1) {
            1
        } else if self.has_separation(2) {
            2
        } else {
            3
        }
    }

    pub fn is_connected(&self) -> bool {
        !self.has_separation(1)
    }

    pub fn is_3connected(&self) -> bool {
        self.connectivity_degree() >= 3
    }

    pub fn loops(&self) -> Set {
        (0..self.len())
            .filter(|&e| self.rank_of(bits::bit(e)) == 0)
            .fold(0, |acc, e| acc | bits::bit(e))
    }

    pub fn coloops(&self) -> Set {
        let full = self.ground();
        (0..self.len())
            .filter(|&e| self.rank_of(full & !bits::bit(e)) < self.rank)
            .fold(0, |acc, e| acc | bits::bit(e))
    }

    /// Parallel classes of the non-loop elements, each sorted, ordered by
    /// their least element.
    pub fn parallel_classes(&self) -> Vec<Set> {
        let loops = self.loops();
        let mut classes: Vec<Set> = Vec::new();
        for e in 0..self.len() {
            if bits::has(loops, e) {
                continue;
            }
            match classes
                .iter_mut()
                .find(|c| self.rank_of(bits::bit(c.trailing_zeros() as usize) | bits::bit(e)) == 1)
            {
                Some(c) => *c |= bits::bit(e),
                None => classes.push(bits::bit(e)),
            }
        }
        classes
    }

    /// Series classes (parallel classes of the dual).
    pub fn series_classes(&self) -> Vec<Set> {
        self.dual().parallel_classes()
    }

    pub fn is_simple(&self) -> bool {
        self.loops() == 0 && self.parallel_classes().iter().all(|&c| bits::size(c) == 1)
    }

    /// Deletes loops and all but the least element of each parallel class.
    pub fn simplify(&self) -> Matroid {
        let keep = self
            .parallel_classes()
            .iter()
            .fold(0, |acc, &c| acc | (c & c.wrapping_neg()));
        self.restrict(keep).expect("subset of the ground set")
    }

    /// Contracts coloops and all but the least element of each series class.
    pub fn cosimplify(&self) -> Matroid {
        self.dual().simplify().dual()
    }

    /// Bipartite graph between `B` and its complement, with `b ~ d` when
    /// `B - b + d` is a basis.
    pub fn fundamental_graph(&self, b: Set) -> Result<BipartiteGraph> {
        self.require_basis(b)?;
        let left = bits::elems(b);
        let right = bits::elems(self.ground() & !b);
        let mut edges = Vec::new();
        for (i, &x) in left.iter().enumerate() {
            for (j, &y) in right.iter().enumerate() {
                if self.is_basis((b & !bits::bit(x)) | bits::bit(y)) {
                    edges.push((i, j));
                }
            }
        }
        Ok(BipartiteGraph::new(
            left.iter().map(|&i| self.labels[i].clone()).collect(),
            right.iter().map(|&i| self.labels[i].clone()).collect(),
            &edges,
        ))
    }

    /// The basis that is lexicographically least as an index list.
    pub fn first_basis(&self) -> Set {
        let mut b = 0;
        for e in 0..self.len() {
            if self.rank_of(b | bits::bit(e)) > bits::size(b) {
                b |= bits::bit(e);
            }
        }
        b
    }

    /// A basis containing the independent set `inside` and avoiding the
    /// co-independent set `avoid`, chosen greedily in ground order.
    pub fn basis_between(&self, inside: Set, avoid: Set) -> Result<Set> {
        if !self.is_independent(inside) || inside & avoid != 0 {
            return Err(Error::pre("no basis between the given sets"));
        }
        let mut b = inside;
        for e in 0..self.len() {
            if !bits::has(avoid, e) && self.rank_of(b | bits::bit(e)) > bits::size(b) {
                b |= bits::bit(e);
            }
        }
        if bits::size(b) != self.rank {
            return Err(Error::pre("the avoided set is not co-independent"));
        }
        Ok(b)
    }

    /// Number of bases containing each element.
    pub fn basis_degrees(&self) -> Vec<usize> {
        (0..self.len())
            .map(|e| self.bases.iter().filter(|&&b| bits::has(b, e)).count())
            .collect()
    }

    /// Whether the labeled matroids are equal (same labels in the same order
    /// and the same bases).
    pub fn same_as(&self, other: &Matroid) -> bool {
        self.labels == other.labels && self.bases == other.bases
    }

    /// Whether the two matroids are equal as set systems, allowing the ground
    /// labels to be listed in different orders.
    pub fn equal_up_to_order(&self, other: &Matroid) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let Ok(perm) = self
            .labels
            .iter()
            .map(|l| other.index(l))
            .collect::<Result<Vec<_>>>()
        else {
            return false;
        };
        other.permuted(&perm).same_as(self)
    }

    /// Text form: name, ground labels, rank and bases as concatenated labels.
    pub fn to_text(&self, name: &str) -> String {
        text::format_matroid(self, name)
    }

    pub fn parse_text(s: &str) -> Result<(String, Matroid)> {
        text::parse_matroid(s)
    }

    /// Short summary used in reports.
    pub fn summary(&self) -> BTreeMap<&'static str, String> {
        let mut m = BTreeMap::new();
        m.insert("elements", self.len().to_string());
        m.insert("rank", self.rank.to_string());
        m.insert("bases", self.bases.len().to_string());
        m.insert("connectivity", self.connectivity_degree().to_string());
        m
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid {{ ground: {}, rank: {}, bases: {} }}",
            self.labels.join(""),
            self.rank,
            self.bases.len()
        )
    }
}

/// Labels `a, b, c, ...` for small ground sets.
pub fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}
