//! Deletion pairs, incriminating sets and the reduction of an incriminating
//! set to four elements.
//!
//! Matrices are labeled by the ground labels of the matroid they are checked
//! against. A matrix `A` with rows `X` represents `M` when `X ^ Z` is a basis
//! exactly when `det A[Z]` is nonzero, for every square `Z`.

mod pipeline;

use std::fmt;

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::matroid::{has_minor, Matroid};
use crate::pmatrix::LabeledMatrix;
use crate::reptheory::{extensions, SearchSpace};

pub use pipeline::{bw_slack, certify_pipeline, sep_bound, PipelineOutcome, PipelineReport, StageBlock, SEP_BUDGET_K};

/// Verdicts behind a deletion pair `{u, v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionCertificate {
    /// `M \ {u, v}` is connected.
    pub minus_uv_connected: bool,
    /// For `co(M \ u)`, `co(M \ v)` and `co(M \ {u, v})`: 3-connected, and has an `N`-minor.
    pub co_u: (bool, bool),
    pub co_v: (bool, bool),
    pub co_uv: (bool, bool),
}

impl DeletionCertificate {
    pub fn holds(&self) -> bool {
        let ok = |p: (bool, bool)| p.0 && p.1;
        self.minus_uv_connected && ok(self.co_u) && ok(self.co_v) && ok(self.co_uv)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionPair {
    pub u: usize,
    pub v: usize,
    pub certificate: DeletionCertificate,
}

/// Evaluates the deletion-pair conditions for `{u, v}`.
pub fn deletion_certificate(m: &Matroid, n: &Matroid, u: usize, v: usize) -> Result<DeletionCertificate> {
    let (bu, bv) = (bits::bit(u), bits::bit(v));
    if u == v || (bu | bv) & !m.ground() != 0 {
        return Err(Error::pre("u and v must be distinct elements"));
    }
    let check = |d: Set| -> Result<(bool, bool)> {
        let co = m.delete(d)?.cosimplify();
        Ok((co.is_3connected(), has_minor(&co, n)))
    };
    Ok(DeletionCertificate {
        minus_uv_connected: m.delete(bu | bv)?.is_connected(),
        co_u: check(bu)?,
        co_v: check(bv)?,
        co_uv: check(bu | bv)?,
    })
}

/// All deletion pairs with `u < v`, in lexicographic order.
pub fn deletion_pairs(m: &Matroid, n: &Matroid) -> Result<Vec<DeletionPair>> {
    let mut out = Vec::new();
    for u in 0..m.len() {
        for v in u + 1..m.len() {
            let certificate = deletion_certificate(m, n, u, v)?;
            if certificate.holds() {
                out.push(DeletionPair { u, v, certificate });
            }
        }
    }
    Ok(out)
}

/// The lexicographically least deletion pair.
pub fn find_deletion_pair(m: &Matroid, n: &Matroid) -> Result<Option<DeletionPair>> {
    Ok(deletion_pairs(m, n)?.into_iter().next())
}

/// Why a square submatrix incriminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IncrimCase {
    /// The determinant is not in the partial field.
    NotInField,
    /// The determinant is zero but `X ^ Z` is a basis.
    ZeroButBasis,
    /// The determinant is nonzero but `X ^ Z` is dependent.
    NonzeroButDependent,
}

impl fmt::Display for IncrimCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IncrimCase::NotInField => "det-not-in-field",
            IncrimCase::ZeroButBasis => "zero-but-basis",
            IncrimCase::NonzeroButDependent => "nonzero-but-dependent",
        })
    }
}

/// An incriminating square submatrix, by row and column labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incriminating {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub case: IncrimCase,
}

/// Checks that `a` is labeled by the ground set of `m` and returns its row set.
fn row_set(m: &Matroid, a: &LabeledMatrix) -> Result<Set> {
    let x = m.set(a.rows())?;
    let y = m.set(a.cols())?;
    if x & y != 0 || x | y != m.ground() || a.nrows() + a.ncols() != m.len() {
        return Err(Error::pre("matrix labels must partition the ground set"));
    }
    Ok(x)
}

/// Whether `A[rows, cols]` incriminates `(M, A)`, and why.
pub fn incrimination<S: AsRef<str>>(m: &Matroid, a: &LabeledMatrix, rows: &[S], cols: &[S]) -> Result<Option<IncrimCase>> {
    let x = row_set(m, a)?;
    let r = m.set(rows)?;
    let c = m.set(cols)?;
    if r & !x != 0 || c & x != 0 || bits::size(r) != bits::size(c) {
        return Err(Error::pre("Z must give a square submatrix"));
    }
    let rl: Vec<&str> = rows.iter().map(|s| s.as_ref()).collect();
    let cl: Vec<&str> = cols.iter().map(|s| s.as_ref()).collect();
    let d = a.determinant(&rl, &cl)?;
    let basis = m.is_basis(x ^ r ^ c);
    Ok(if !d.is_member() {
        Some(IncrimCase::NotInField)
    } else if d.is_zero() && basis {
        Some(IncrimCase::ZeroButBasis)
    } else if !d.is_zero() && !basis {
        Some(IncrimCase::NonzeroButDependent)
    } else {
        None
    })
}

/// The first incriminating submatrix, scanning by size, then column subsets
/// and row subsets in lexicographic order of matrix positions.
pub fn find_incriminating(m: &Matroid, a: &LabeledMatrix) -> Result<Option<Incriminating>> {
    row_set(m, a)?;
    for k in 1..=a.nrows().min(a.ncols()) {
        for ci in bits::combinations(a.ncols(), k) {
            let cols: Vec<&str> = ci.iter().map(|&j| a.cols()[j].as_str()).collect();
            for ri in bits::combinations(a.nrows(), k) {
                let rows: Vec<&str> = ri.iter().map(|&i| a.rows()[i].as_str()).collect();
                if let Some(case) = incrimination(m, a, &rows, &cols)? {
                    return Ok(Some(Incriminating {
                        rows: rows.iter().map(|s| s.to_string()).collect(),
                        cols: cols.iter().map(|s| s.to_string()).collect(),
                        case,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Whether `a` represents `m`: a P-matrix with the same bases.
pub fn represents(m: &Matroid, a: &LabeledMatrix) -> bool {
    row_set(m, a).is_ok() && Matroid::from_pmatrix(a).is_ok_and(|n| n.equal_up_to_order(m))
}

/// A spanning tree of `G(M, B)` in which `u` and `v` are leaves, grown
/// greedily: first inside `E_N`, then inside `E - {u, v}`, then one edge each
/// for `u` and `v`. Edges are taken in increasing order, or decreasing order
/// when `reverse` is set. Pairs are `(row label, column label)`.
pub fn candidate_tree(m: &Matroid, b: Set, u: usize, v: usize, en: Set, reverse: bool) -> Result<Vec<(String, String)>> {
    let g = m.fundamental_graph(b)?;
    let rows = bits::elems(b);
    let cols = bits::elems(m.ground() & !b);
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(i, j)| (rows[i], cols[j])).collect();
    edges.sort_unstable();
    if reverse {
        edges.reverse();
    }
    let mut parent: Vec<usize> = (0..m.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let uv = bits::bit(u) | bits::bit(v);
    let mut tree = Vec::new();
    let mut grow = |inside: &dyn Fn(usize, usize) -> bool, tree: &mut Vec<(usize, usize)>| {
        for &(x, y) in &edges {
            if inside(x, y) {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                    tree.push((x, y));
                }
            }
        }
    };
    grow(&|x, y| bits::has(en, x) && bits::has(en, y), &mut tree);
    grow(&|x, y| !bits::has(uv, x) && !bits::has(uv, y), &mut tree);
    grow(&|_, _| true, &mut tree);
    if tree.len() + 1 != m.len() {
        return Err(Error::stage("candidate", "G(M, B) - {u, v} is not connected"));
    }
    for e in [u, v] {
        if tree.iter().filter(|&&(x, y)| x == e || y == e).count() != 1 {
            return Err(Error::stage("candidate", format!("`{}` is not a leaf of the tree", m.label(e))));
        }
    }
    Ok(tree
        .into_iter()
        .map(|(x, y)| (m.label(x).to_string(), m.label(y).to_string()))
        .collect())
}

/// The unique extension of `d` to `M \ w` normalized on `tree` minus `w`.
fn unique_extension(
    m: &Matroid,
    w: usize,
    b: Set,
    tree: &[(String, String)],
    d: &LabeledMatrix,
    space: SearchSpace,
) -> Result<LabeledMatrix> {
    let name = m.label(w);
    let mw = m.delete(bits::bit(w))?;
    let bw = mw.set(&m.names(b))?;
    let forest: Vec<(String, String)> = tree.iter().filter(|(_, y)| y != name).cloned().collect();
    let found = extensions(&mw, bw, space, &forest, d)?;
    match found.len() {
        1 => Ok(found.into_iter().next().expect("one element")),
        0 if space.is_exhaustive() => Err(Error::stage(
            "candidate",
            format!("D does not extend to a representation of M\\{name}"),
        )),
        0 => Err(Error::stage(
            "candidate",
            format!(
                "no extension of D to M\\{name} within exponent bound {}; hypothesis unverifiable",
                space.bound.unwrap_or(0)
            ),
        )),
        k => Err(Error::stage(
            "candidate",
            format!("N does not strongly stabilize M\\{name}: {k} extensions of D"),
        )),
    }
}

/// Glues the unique extensions of `d` to `M \ u` and `M \ v` into a matrix
/// over `E(M)`, normalized on `tree`.
pub fn assemble_with_tree(
    m: &Matroid,
    u: usize,
    v: usize,
    d: &LabeledMatrix,
    b: Set,
    tree: &[(String, String)],
    space: SearchSpace,
) -> Result<LabeledMatrix> {
    let en = m.set(&d.labels())?;
    let tn: Vec<(String, String)> = tree
        .iter()
        .filter(|(x, y)| m.set(&[x, y]).is_ok_and(|s| s & !en == 0))
        .cloned()
        .collect();
    let dn = d.normalize(&tn).map_err(|e| Error::stage("candidate", format!("cannot normalize D on the tree: {e}")))?;
    let au = unique_extension(m, u, b, tree, &dn, space)?;
    let av = unique_extension(m, v, b, tree, &dn, space)?;
    let (lu, lv) = (m.label(u), m.label(v));
    let common = au.remove(&[lv]);
    if common != av.remove(&[lu]).permuted(common.rows(), common.cols())? {
        return Err(Error::stage("candidate", "the two extensions disagree on M\\{u, v}"));
    }
    let rows = m.names(b);
    let cols = m.names(m.ground() & !b);
    let mut data = Vec::with_capacity(rows.len());
    for x in &rows {
        let mut row = Vec::with_capacity(cols.len());
        for y in &cols {
            let src = if y == lu { &av } else { &au };
            row.push(src.entry(x, y)?.clone());
        }
        data.push(row);
    }
    LabeledMatrix::from_rows(space.field, rows, cols, data)
}

/// The candidate matrix for the deletion pair `{u, v}`, built on the first
/// tree from `candidate_tree`. `d` represents `M_B[E_N]`, with `E_N` its labels.
pub fn assemble_candidate(m: &Matroid, u: usize, v: usize, d: &LabeledMatrix, b: Set, space: SearchSpace) -> Result<LabeledMatrix> {
    check_candidate_input(m, u, v, d, b)?;
    let en = m.set(&d.labels())?;
    let tree = candidate_tree(m, b, u, v, en, false)?;
    assemble_with_tree(m, u, v, d, b, &tree, space)
}

pub(crate) fn check_candidate_input(m: &Matroid, u: usize, v: usize, d: &LabeledMatrix, b: Set) -> Result<()> {
    let uv = bits::bit(u) | bits::bit(v);
    if !m.is_basis(b) || b & uv != 0 {
        return Err(Error::stage("candidate", "B must be a basis of M avoiding u and v"));
    }
    let en = m.set(&d.labels())?;
    if en & uv != 0 || m.set(d.rows())? != b & en {
        return Err(Error::stage("candidate", "D must have rows B & E_N and avoid u and v"));
    }
    if !represents(&m.minor_by_basis(b, en)?, d) {
        return Err(Error::stage("candidate", "D does not represent M_B[E_N]"));
    }
    Ok(())
}

/// Four labels `{a, b, u, v}` with `a, b` rows and `u, v` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncriminatingQuad {
    pub a: String,
    pub b: String,
    pub u: String,
    pub v: String,
    pub case: IncrimCase,
}

impl IncriminatingQuad {
    pub fn rows(&self) -> [&str; 2] {
        [&self.a, &self.b]
    }

    pub fn cols(&self) -> [&str; 2] {
        [&self.u, &self.v]
    }
}

/// Result of shrinking: the pivoted matrix, the pivots used and the quad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shrunk {
    pub matrix: LabeledMatrix,
    pub pivots: Vec<(String, String)>,
    pub quad: IncriminatingQuad,
}

fn deletions_represented(m: &Matroid, a: &LabeledMatrix, lu: &str, lv: &str) -> Result<bool> {
    let mu = m.delete(m.set(&[lu])?)?;
    let mv = m.delete(m.set(&[lv])?)?;
    Ok(represents(&mu, &a.remove(&[lu])) && represents(&mv, &a.remove(&[lv])))
}

/// Pivots an incriminating set down to one of the form `{a, b, u, v}`.
/// Requires `A - u` and `A - v` to represent `M \ u` and `M \ v`; every step
/// re-checks this and that the shrunk set still incriminates.
pub fn shrink_to_quad(m: &Matroid, a: &LabeledMatrix, u: usize, v: usize) -> Result<Shrunk> {
    let (lu, lv) = (m.label(u).to_string(), m.label(v).to_string());
    row_set(m, a)?;
    if !a.cols().contains(&lu) || !a.cols().contains(&lv) {
        return Err(Error::pre("u and v must be columns"));
    }
    if !deletions_represented(m, a, &lu, &lv)? {
        return Err(Error::pre("A - u and A - v must represent M\\u and M\\v"));
    }
    let Some(z) = find_incriminating(m, a)? else {
        return Err(Error::pre("no incriminating set: A represents M"));
    };
    let (mut rows, mut cols, mut case) = (z.rows, z.cols, z.case);
    if !cols.contains(&lu) || !cols.contains(&lv) {
        return Err(Error::Invariant("an incriminating set misses u or v".into()));
    }
    let mut a = a.clone();
    let mut pivots = Vec::new();
    while let Some(y) = cols.iter().find(|&c| *c != lu && *c != lv).cloned() {
        let x = rows
            .iter()
            .find(|r| a.entry(r, &y).is_ok_and(|e| !e.is_zero()))
            .cloned()
            .ok_or_else(|| Error::Invariant(format!("column `{y}` of the incriminating set is zero")))?;
        a = a.pivot(&x, &y)?;
        rows.retain(|r| *r != x);
        cols.retain(|c| *c != y);
        pivots.push((x, y));
        if !deletions_represented(m, &a, &lu, &lv)? {
            return Err(Error::Invariant("pivoting broke the representations of M\\u or M\\v".into()));
        }
        case = incrimination(m, &a, &rows, &cols)?
            .ok_or_else(|| Error::Invariant("the shrunk set no longer incriminates".into()))?;
    }
    if rows.len() != 2 {
        return Err(Error::Invariant("shrinking did not end with two rows".into()));
    }
    let quad = IncriminatingQuad {
        a: rows[0].clone(),
        b: rows[1].clone(),
        u: lu,
        v: lv,
        case,
    };
    Ok(Shrunk {
        matrix: a,
        pivots,
        quad,
    })
}

/// Which rule allows a pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// `x` is `a` or `b`; the quad trades `x` for `y`.
    InQuad,
    /// `A_xu = A_xv = 0` or `A_ay = A_by = 0`; the quad is unchanged.
    ZeroCross,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotCheck {
    pub allowed: bool,
    pub rule: Option<PivotRule>,
    /// The incriminating quad after the pivot, when allowed.
    pub quad_after: Option<IncriminatingQuad>,
}

/// Decides whether pivoting on `xy` is allowable for `quad`, with `x` a row
/// and `y` a column other than `u` and `v`. When it is, the pivoted matrix
/// is checked to keep an incriminating quad.
pub fn allowable_pivot_check(m: &Matroid, a: &LabeledMatrix, quad: &IncriminatingQuad, x: &str, y: &str) -> Result<PivotCheck> {
    if y == quad.u || y == quad.v || a.row_index(x).is_none() || a.col_index(y).is_none() {
        return Err(Error::pre("x must be a row and y a column other than u, v"));
    }
    if a.entry(x, y)?.is_zero() {
        return Err(Error::pre("the pivot entry is zero"));
    }
    let zero = |r: &str, c: &str| a.entry(r, c).map(|e| e.is_zero());
    let (rule, rows): (PivotRule, [String; 2]) = if x == quad.a {
        (PivotRule::InQuad, [y.to_string(), quad.b.clone()])
    } else if x == quad.b {
        (PivotRule::InQuad, [quad.a.clone(), y.to_string()])
    } else if (zero(x, &quad.u)? && zero(x, &quad.v)?) || (zero(&quad.a, y)? && zero(&quad.b, y)?) {
        (PivotRule::ZeroCross, [quad.a.clone(), quad.b.clone()])
    } else {
        return Ok(PivotCheck {
            allowed: false,
            rule: None,
            quad_after: None,
        });
    };
    let p = a.pivot(x, y)?;
    let cols = [quad.u.clone(), quad.v.clone()];
    let case = incrimination(m, &p, &rows, &cols)?
        .ok_or_else(|| Error::Invariant(format!("allowable pivot on {x}{y} lost the incriminating quad")))?;
    let [qa, qb] = rows;
    Ok(PivotCheck {
        allowed: true,
        rule: Some(rule),
        quad_after: Some(IncriminatingQuad {
            a: qa,
            b: qb,
            u: quad.u.clone(),
            v: quad.v.clone(),
            case,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{catalog, letters};
    use crate::pfield::PartialFieldId;

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, letters(n)).unwrap()
    }

    fn gf5(rows: &[&str], cols: &[&str], data: &[Vec<i64>]) -> LabeledMatrix {
        LabeledMatrix::from_ints(PartialFieldId::Prime(5), rows, cols, data).unwrap()
    }

    /// The matroid of `a` with the extra bases `extra` (a relaxation).
    fn relaxed(a: &LabeledMatrix, extra: &[&str]) -> Matroid {
        let base = Matroid::from_pmatrix(a).unwrap();
        let mut bases = base.bases().to_vec();
        for w in extra {
            bases.push(base.set_from_word(w).unwrap());
        }
        Matroid::from_bases(base.labels().to_vec(), bases).unwrap()
    }

    #[test]
    fn deletion_pairs_of_uniform_matroids() {
        let n = u(2, 4);
        let all = deletion_pairs(&u(2, 6), &n).unwrap();
        assert_eq!(all.len(), 15);
        assert!(all.iter().all(|p| p.certificate.holds()));
        assert_eq!(find_deletion_pair(&u(2, 4), &n).unwrap(), None);
        assert_eq!(find_deletion_pair(&u(3, 6), &n).unwrap(), None);
        let c = deletion_certificate(&u(3, 6), &n, 0, 1).unwrap();
        assert!(c.minus_uv_connected && c.co_uv.0 && !c.co_uv.1);
    }

    #[test]
    fn incriminating_cases() {
        let a = gf5(&["a", "b"], &["c", "d"], &[vec![1, 1], vec![1, 2]]);
        let m = Matroid::from_pmatrix(&a).unwrap();
        assert_eq!(find_incriminating(&m, &a).unwrap(), None);
        let zeroed = gf5(&["a", "b"], &["c", "d"], &[vec![1, 1], vec![0, 2]]);
        let z = find_incriminating(&m, &zeroed).unwrap().unwrap();
        assert_eq!((z.rows, z.cols, z.case), (vec!["b".to_string()], vec!["c".to_string()], IncrimCase::ZeroButBasis));

        let reg = LabeledMatrix::from_ints(PartialFieldId::Regular, &["a", "b"], &["c", "d"], &[vec![1, 1], vec![1, -1]]).unwrap();
        let z = find_incriminating(&u(2, 4), &reg).unwrap().unwrap();
        assert_eq!(z.case, IncrimCase::NotInField);
        assert_eq!(z.rows.len(), 2);

        let singular = gf5(&["a", "b"], &["c", "d"], &[vec![1, 1], vec![1, 1]]);
        let z = find_incriminating(&m, &singular).unwrap();
        assert_eq!(z.map(|z| z.case), Some(IncrimCase::ZeroButBasis));
        let parallel = Matroid::from_pmatrix(&singular).unwrap();
        let z = find_incriminating(&parallel, &a).unwrap().unwrap();
        assert_eq!(z.case, IncrimCase::NonzeroButDependent);
    }

    /// A 3x3 block whose columns `d, e, f` form a circuit-hyperplane that the
    /// matroid relaxes: only the full determinant is wrong.
    fn relaxed_instance() -> (Matroid, LabeledMatrix) {
        // Column f = d + e, and no row vector lies in the span of d and e.
        let a = gf5(&["a", "b", "c"], &["d", "e", "f"], &[vec![1, 1, 2], vec![1, 2, 3], vec![1, 3, 4]]);
        (relaxed(&a, &["def"]), a)
    }

    #[test]
    fn shrink_with_one_pivot() {
        let (m, a) = relaxed_instance();
        let (eu, ev) = (m.index("e").unwrap(), m.index("f").unwrap());
        let z = find_incriminating(&m, &a).unwrap().unwrap();
        assert_eq!(z.cols.len(), 3);
        let s = shrink_to_quad(&m, &a, eu, ev).unwrap();
        assert_eq!(s.pivots, vec![("a".to_string(), "d".to_string())]);
        let q = &s.quad;
        assert_eq!((q.a.as_str(), q.b.as_str(), q.u.as_str(), q.v.as_str()), ("b", "c", "e", "f"));
        // Independent re-check of the clause.
        let det = s.matrix.determinant(&q.rows(), &q.cols()).unwrap();
        let x = m.set(s.matrix.rows()).unwrap();
        let swapped = x ^ m.set(&["b", "c", "e", "f"]).unwrap();
        assert!(det.is_zero() && m.is_basis(swapped));
        assert_eq!(q.case, IncrimCase::ZeroButBasis);
    }

    #[test]
    fn shrink_of_a_quad_is_the_identity() {
        let a = gf5(&["a", "b"], &["c", "d"], &[vec![1, 1], vec![1, 1]]);
        let m = u(2, 4);
        let s = shrink_to_quad(&m, &a, 2, 3).unwrap();
        assert!(s.pivots.is_empty());
        assert_eq!(s.matrix, a);
        assert!(shrink_to_quad(&m, &gf5(&["a", "b"], &["c", "d"], &[vec![1, 1], vec![1, 2]]), 2, 3).is_err());
    }

    #[test]
    fn allowable_pivots() {
        let (m, a) = relaxed_instance();
        let s = shrink_to_quad(&m, &a, m.index("e").unwrap(), m.index("f").unwrap()).unwrap();
        let (a, q) = (s.matrix, s.quad);
        // x = a-member of the quad: allowed, quad trades x for y.
        let c = allowable_pivot_check(&m, &a, &q, "b", "a").unwrap();
        assert!(c.allowed);
        assert_eq!(c.rule, Some(PivotRule::InQuad));
        assert_eq!(c.quad_after.unwrap().rows(), ["a", "c"]);
        // Row d is outside the quad and every cross entry is nonzero.
        for (r, col) in [("d", "e"), ("d", "f"), ("b", "a"), ("c", "a")] {
            assert!(!a.entry(r, col).unwrap().is_zero());
        }
        let c = allowable_pivot_check(&m, &a, &q, "d", "a").unwrap();
        assert!(!c.allowed && c.quad_after.is_none());
        assert!(allowable_pivot_check(&m, &a, &q, "d", "e").is_err());
    }

    #[test]
    fn allowable_pivot_with_zero_cross() {
        // The relaxed instance plus a parallel pair {g, h} as a direct summand.
        let a = gf5(&["a", "b", "c", "g"], &["d", "e", "f", "h"], &[
            vec![1, 1, 2, 0],
            vec![1, 2, 3, 0],
            vec![1, 3, 4, 0],
            vec![0, 0, 0, 1],
        ]);
        let m = relaxed(&a, &["defg", "defh"]);
        let s = shrink_to_quad(&m, &a, m.index("e").unwrap(), m.index("f").unwrap()).unwrap();
        let c = allowable_pivot_check(&m, &s.matrix, &s.quad, "g", "h").unwrap();
        assert!(c.allowed);
        assert_eq!(c.rule, Some(PivotRule::ZeroCross));
        assert_eq!(c.quad_after.unwrap().rows(), s.quad.rows());
    }

    #[test]
    fn candidate_for_a_representable_matroid() {
        // whirl4 over GF(4): the glued matrix represents it.
        let n = u(2, 4);
        let space = SearchSpace::finite(PartialFieldId::Gf4);
        let whirl4 = catalog("whirl4").unwrap();
        let pair = find_deletion_pair(&whirl4, &n).unwrap().unwrap();
        let muv = whirl4.delete(bits::bit(pair.u) | bits::bit(pair.v)).unwrap();
        let emb = crate::matroid::minor_embeddings(&muv, &n).remove(0);
        let lift = |t: Set| whirl4.set(&muv.names(t)).unwrap();
        let uv = bits::bit(pair.u) | bits::bit(pair.v);
        let b = whirl4.basis_between(lift(emb.contract), lift(emb.delete) | uv).unwrap();
        let en = whirl4.ground() & !(lift(emb.contract) | lift(emb.delete) | uv);
        let mn = whirl4.minor_by_basis(b, en).unwrap();
        let d = crate::reptheory::normalized_representations(&mn, mn.set(&whirl4.names(b & en)).unwrap(), space)
            .unwrap()
            .remove(0);
        let a = assemble_candidate(&whirl4, pair.u, pair.v, &d, b, space).unwrap();
        assert!(represents(&whirl4, &a));
        assert_eq!(find_incriminating(&whirl4, &a).unwrap(), None);
        let t2 = candidate_tree(&whirl4, b, pair.u, pair.v, en, true).unwrap();
        let a2 = assemble_with_tree(&whirl4, pair.u, pair.v, &d, b, &t2, space).unwrap();
        assert!(a.scaling_equivalent(&a2).is_some());
    }
}
