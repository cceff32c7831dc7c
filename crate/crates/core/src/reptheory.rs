//! Representations of a matroid over a partial field, up to scaling,
//! geometric or algebraic equivalence, and stabilizer tests.
//!
//! Representations are enumerated in normal form: rows are a fixed basis
//! `X`, the support is the fundamental graph of `X`, and entries on its
//! canonical spanning forest are 1. Every representation is scaling-equivalent
//! to exactly one such matrix, so distinct normalized matrices are distinct
//! scaling classes. With the labeled row set fixed, geometric equivalence
//! adds nothing beyond scaling. Algebraic classes are orbits under the
//! automorphism list of the partial field, which fixes 1 and hence maps
//! normalized matrices to normalized matrices.

use std::fmt;

use rayon::prelude::*;

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::matroid::{minor_embeddings, Matroid};
use crate::pfield::{Automorphism, Homomorphism, PartialField, PartialFieldId, PfValue};
use crate::pmatrix::{det_of, LabeledMatrix};

/// Default exponent bound for partial fields with infinitely many units.
pub const DEFAULT_BOUND: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    Scaling,
    Geometric,
    Algebraic,
}

impl Level {
    pub fn parse(s: &str) -> Result<Level> {
        match s {
            "scaling" => Ok(Level::Scaling),
            "geometric" => Ok(Level::Geometric),
            "algebraic" => Ok(Level::Algebraic),
            _ => Err(Error::pre(format!("unknown equivalence level `{s}`"))),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Scaling => "scaling",
            Level::Geometric => "geometric",
            Level::Algebraic => "algebraic",
        })
    }
}

/// One equivalence class, with the number of normalized matrices it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationClass {
    pub representative: LabeledMatrix,
    pub level: Level,
    pub members: usize,
}

/// Search parameters: the exponent bound applies only to partial fields
/// with infinitely many units, where it is mandatory.
#[derive(Clone, Copy, Debug)]
pub struct SearchSpace {
    pub field: PartialFieldId,
    pub bound: Option<u32>,
}

impl SearchSpace {
    pub fn finite(field: PartialFieldId) -> Self {
        SearchSpace { field, bound: None }
    }

    pub fn bounded(field: PartialFieldId, bound: u32) -> Self {
        SearchSpace {
            field,
            bound: Some(bound),
        }
    }

    fn units(&self) -> Result<Vec<PfValue>> {
        let pf = PartialField::new(self.field)?;
        if self.field.has_finite_units() {
            return pf.units(0);
        }
        match self.bound {
            Some(b) => pf.units(b),
            None => Err(Error::pre(format!(
                "{} has infinitely many units; an exponent bound is required",
                self.field
            ))),
        }
    }

    /// Whether an empty search proves non-representability.
    pub fn is_exhaustive(&self) -> bool {
        self.field.has_finite_units()
    }
}

fn sort_matrices(v: &mut [LabeledMatrix]) {
    v.sort_by_cached_key(|a| a.entries().iter().map(PfValue::sort_key).collect::<Vec<_>>());
}

/// Square submatrices, as (row indices, column indices).
fn square_blocks(nr: usize, nc: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in 1..=nr.min(nc) {
        for r in bits::combinations(nr, k) {
            for c in bits::combinations(nc, k) {
                out.push((r.clone(), c));
            }
        }
    }
    out
}

struct Search<'a> {
    m: &'a Matroid,
    field: PartialFieldId,
    rows: Vec<usize>,
    cols: Vec<usize>,
    b: Set,
    units: Vec<PfValue>,
    /// Free positions in assignment order.
    free: Vec<(usize, usize)>,
    /// Blocks to check once free position `k` is set; index `free.len()`
    /// holds blocks with no free entry.
    checks: Vec<Vec<(Vec<usize>, Vec<usize>)>>,
    base: Vec<Vec<PfValue>>,
}

impl<'a> Search<'a> {
    fn new(m: &'a Matroid, b: Set, space: SearchSpace) -> Result<Self> {
        let g = m.fundamental_graph(b)?;
        Self::build(m, b, space, g.spanning_forest(), Vec::new())
    }

    /// Entries on `forest` are 1 and entries in `fixed` are pinned; the rest
    /// of the support is searched.
    fn build(
        m: &'a Matroid,
        b: Set,
        space: SearchSpace,
        forest: Vec<(usize, usize)>,
        fixed: Vec<((usize, usize), PfValue)>,
    ) -> Result<Self> {
        let g = m.fundamental_graph(b)?;
        let rows = bits::elems(b);
        let cols = bits::elems(m.ground() & !b);
        let mut free = Vec::new();
        for (i, j) in g.edges() {
            if !forest.contains(&(i, j)) && !fixed.iter().any(|(p, _)| *p == (i, j)) {
                free.push((i, j));
            }
        }
        free.sort_unstable();
        let pos = |i: usize, j: usize| free.iter().position(|&p| p == (i, j));
        let mut checks = vec![Vec::new(); free.len() + 1];
        for (r, c) in square_blocks(rows.len(), cols.len()) {
            let last = r
                .iter()
                .flat_map(|&i| c.iter().map(move |&j| (i, j)))
                .filter_map(|(i, j)| pos(i, j))
                .max();
            checks[last.unwrap_or(free.len())].push((r, c));
        }
        let units = space.units()?;
        let mut base = vec![vec![PfValue::zero(space.field); cols.len()]; rows.len()];
        for &(i, j) in &forest {
            base[i][j] = PfValue::one(space.field);
        }
        for ((i, j), v) in fixed {
            base[i][j] = v;
        }
        Ok(Search {
            m,
            field: space.field,
            rows,
            cols,
            b,
            units,
            free,
            checks,
            base,
        })
    }

    fn block_ok(&self, a: &[Vec<PfValue>], r: &[usize], c: &[usize]) -> bool {
        let sub: Vec<Vec<PfValue>> = r.iter().map(|&i| c.iter().map(|&j| a[i][j].clone()).collect()).collect();
        let d = det_of(&sub, self.field).expect("entries share a field");
        if !d.is_member() {
            return false;
        }
        let swap = r.iter().map(|&i| bits::bit(self.rows[i])).fold(0, |s, x| s | x)
            | c.iter().map(|&j| bits::bit(self.cols[j])).fold(0, |s, x| s | x);
        !d.is_zero() == self.m.is_basis(self.b ^ swap)
    }

    fn checks_pass(&self, a: &[Vec<PfValue>], k: usize) -> bool {
        self.checks[k].iter().all(|(r, c)| self.block_ok(a, r, c))
    }

    fn dfs(&self, a: &mut Vec<Vec<PfValue>>, k: usize, out: &mut Vec<Vec<Vec<PfValue>>>) {
        if k == self.free.len() {
            out.push(a.clone());
            return;
        }
        let (i, j) = self.free[k];
        for u in &self.units {
            a[i][j] = u.clone();
            if self.checks_pass(a, k) {
                self.dfs(a, k + 1, out);
            }
        }
        a[i][j] = PfValue::zero(self.field);
    }

    fn run(&self) -> Vec<LabeledMatrix> {
        let base = self.base.clone();
        if !self.checks_pass(&base, self.free.len()) {
            return Vec::new();
        }
        let found: Vec<Vec<Vec<PfValue>>> = if self.free.is_empty() {
            vec![base]
        } else {
            let (i, j) = self.free[0];
            self.units
                .par_iter()
                .flat_map_iter(|u| {
                    let mut a = base.clone();
                    a[i][j] = u.clone();
                    let mut out = Vec::new();
                    if self.checks_pass(&a, 0) {
                        self.dfs(&mut a, 1, &mut out);
                    }
                    out
                })
                .collect()
        };
        let labels = |idx: &[usize]| idx.iter().map(|&e| self.m.label(e).to_string()).collect::<Vec<_>>();
        let mut mats: Vec<LabeledMatrix> = found
            .into_iter()
            .map(|data| {
                LabeledMatrix::from_rows(self.field, labels(&self.rows), labels(&self.cols), data)
                    .expect("well formed")
            })
            .collect();
        sort_matrices(&mut mats);
        mats
    }
}

/// All normalized representations of `m` with row set `b`, sorted.
pub fn normalized_representations(m: &Matroid, b: Set, space: SearchSpace) -> Result<Vec<LabeledMatrix>> {
    Ok(Search::new(m, b, space)?.run())
}

/// Representations of `m` with row set `b` that are 1 on `forest` and
/// agree with `fixed` on its labels. When `forest` is a maximal spanning
/// forest of the fundamental graph, the result lists each scaling class
/// meeting these constraints once.
pub fn extensions(
    m: &Matroid,
    b: Set,
    space: SearchSpace,
    forest: &[(String, String)],
    fixed: &LabeledMatrix,
) -> Result<Vec<LabeledMatrix>> {
    let rows = bits::elems(b);
    let cols = bits::elems(m.ground() & !b);
    let locate = |x: &str, y: &str| -> Result<(usize, usize)> {
        let xi = m.index(x)?;
        let yi = m.index(y)?;
        match (rows.iter().position(|&e| e == xi), cols.iter().position(|&e| e == yi)) {
            (Some(i), Some(j)) => Ok((i, j)),
            _ => Err(Error::pre(format!("`{x}` must be a row and `{y}` a column"))),
        }
    };
    let g = m.fundamental_graph(b)?;
    let mut forest_idx = Vec::new();
    for (x, y) in forest {
        let p = locate(x, y)?;
        if !g.has_edge(p.0, p.1) {
            return Err(Error::InvalidForest(format!("{x}{y} is not an edge of the fundamental graph")));
        }
        forest_idx.push(p);
    }
    let mut pinned = Vec::new();
    for (i, x) in fixed.rows().iter().enumerate() {
        for (j, y) in fixed.cols().iter().enumerate() {
            let p = locate(x, y)?;
            let v = fixed.get(i, j).clone();
            if v.is_zero() == g.has_edge(p.0, p.1) {
                // Pinned block disagrees with the support.
                return Ok(Vec::new());
            }
            if forest_idx.contains(&p) {
                if !v.is_one() {
                    return Ok(Vec::new());
                }
            } else if !v.is_zero() {
                pinned.push((p, v));
            }
        }
    }
    Ok(Search::build(m, b, space, forest_idx, pinned)?.run())
}

/// Representation classes of `m` at the given level, using the first basis
/// as row set.
pub fn enumerate_representations(m: &Matroid, space: SearchSpace, level: Level) -> Result<Vec<RepresentationClass>> {
    enumerate_with_basis(m, m.first_basis(), space, level)
}

pub fn enumerate_with_basis(m: &Matroid, b: Set, space: SearchSpace, level: Level) -> Result<Vec<RepresentationClass>> {
    let mats = normalized_representations(m, b, space)?;
    if level != Level::Algebraic {
        return Ok(mats
            .into_iter()
            .map(|a| RepresentationClass {
                representative: a,
                level,
                members: 1,
            })
            .collect());
    }
    let auts = Automorphism::all(space.field);
    let mut classes: Vec<RepresentationClass> = Vec::new();
    let mut taken = vec![false; mats.len()];
    for i in 0..mats.len() {
        if taken[i] {
            continue;
        }
        let orbit: Vec<LabeledMatrix> = auts.iter().map(|s| mats[i].apply_aut(s)).collect();
        let mut members = 0;
        for (j, other) in mats.iter().enumerate() {
            if !taken[j] && orbit.contains(other) {
                taken[j] = true;
                members += 1;
            }
        }
        // Sorted input makes mats[i] the least member of its orbit.
        classes.push(RepresentationClass {
            representative: mats[i].clone(),
            level,
            members,
        });
    }
    Ok(classes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representability {
    Yes(LabeledMatrix),
    /// Proven: the search space was finite, or a homomorphic image is not
    /// representable; the string names the certificate.
    No(String),
    /// Nothing found within the exponent bound.
    BoundedNo(u32),
}

impl Representability {
    pub fn is_yes(&self) -> bool {
        matches!(self, Representability::Yes(_))
    }
}

/// Decides representability. Over partial fields with infinitely many units,
/// each homomorphism to a finite field is tried first: if the image field
/// admits no representation, neither does the source.
pub fn is_representable(m: &Matroid, space: SearchSpace) -> Result<Representability> {
    let b = m.first_basis();
    if space.is_exhaustive() {
        return Ok(match normalized_representations(m, b, space)?.into_iter().next() {
            Some(a) => Representability::Yes(a),
            None => Representability::No(format!("exhaustive search over {}", space.field)),
        });
    }
    for phi in Homomorphism::all_from(space.field) {
        if phi.target() == space.field {
            continue;
        }
        let target = SearchSpace::finite(phi.target());
        if normalized_representations(m, b, target)?.is_empty() {
            return Ok(Representability::No(format!("no representation over {} (via {phi})", phi.target())));
        }
    }
    let bound = space.bound.unwrap_or(DEFAULT_BOUND);
    Ok(match normalized_representations(m, b, SearchSpace::bounded(space.field, bound))?.into_iter().next() {
        Some(a) => Representability::Yes(a),
        None => Representability::BoundedNo(bound),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabVerdict {
    pub stabilizes: bool,
    /// Two representations agreeing on the minor block up to scaling that
    /// are not scaling-equivalent.
    pub witness: Option<(LabeledMatrix, LabeledMatrix)>,
}

fn minor_block(a: &LabeledMatrix, s: Set, t: Set, m: &Matroid) -> LabeledMatrix {
    let drop: Vec<&str> = bits::elems(s | t).into_iter().map(|e| m.label(e)).collect();
    a.remove(&drop)
}

fn check_minor_data(m: &Matroid, b: Set, s: Set, t: Set) -> Result<()> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis(m.word(b)));
    }
    if s & !b != 0 || t & b != 0 || t & !m.ground() != 0 {
        return Err(Error::pre("S must lie in the basis and T outside it"));
    }
    Ok(())
}

/// Whether `N = M / s \ t` stabilizes `M`, by comparing every pair of
/// scaling classes of `M` with row set `b`.
pub fn stabilizes(m: &Matroid, b: Set, s: Set, t: Set, space: SearchSpace) -> Result<StabVerdict> {
    check_minor_data(m, b, s, t)?;
    let reps = normalized_representations(m, b, space)?;
    let blocks: Vec<LabeledMatrix> = reps.iter().map(|a| minor_block(a, s, t, m)).collect();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if blocks[i].scaling_equivalent(&blocks[j]).is_some() {
                return Ok(StabVerdict {
                    stabilizes: false,
                    witness: Some((reps[i].clone(), reps[j].clone())),
                });
            }
        }
    }
    Ok(StabVerdict {
        stabilizes: true,
        witness: None,
    })
}

/// Stabilizes, and every scaling class of `N` extends to a representation of `M`.
pub fn strongly_stabilizes(m: &Matroid, b: Set, s: Set, t: Set, space: SearchSpace) -> Result<bool> {
    if !stabilizes(m, b, s, t, space)?.stabilizes {
        return Ok(false);
    }
    let n = m.minor(s, t)?;
    let nb = n.set(&m.names(b & !s))?;
    let n_reps = normalized_representations(&n, nb, space)?;
    let blocks: Vec<LabeledMatrix> = normalized_representations(m, b, space)?
        .iter()
        .map(|a| minor_block(a, s, t, m))
        .collect();
    Ok(n_reps
        .iter()
        .all(|d| blocks.iter().any(|blk| blk.scaling_equivalent(d).is_some())))
}

/// Stabilizer verdict for every embedding of `n` in `m`. Each embedding
/// `M / C \ D` is tested with the basis `X` that contains `C`, avoids `D`
/// and is otherwise greedy. Returns the first failing embedding, if any.
pub fn stabilizes_all_embeddings(m: &Matroid, n: &Matroid, space: SearchSpace) -> Result<Option<(Set, Set, StabVerdict)>> {
    for e in minor_embeddings(m, n) {
        let b = m.basis_between(e.contract, e.delete)?;
        let v = stabilizes(m, b, e.contract, e.delete, space)?;
        if !v.stabilizes {
            return Ok(Some((e.contract, e.delete, v)));
        }
    }
    Ok(None)
}
