//! Labeled matrices over partial fields.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::bipartite::BipartiteGraph;
use crate::bits;
use crate::error::{Error, Result};
use crate::pfield::{Automorphism, Homomorphism, PartialFieldId, PfValue};

/// An `X x Y` matrix with disjoint row and column labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledMatrix {
    field: PartialFieldId,
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<PfValue>,
}

/// Outcome of [`LabeledMatrix::is_pmatrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PCertificate {
    pub verdict: bool,
    /// Rows and columns of a square submatrix whose determinant is not in the
    /// partial field; present exactly when `verdict` is false.
    pub witness: Option<(Vec<String>, Vec<String>)>,
    pub witness_det: Option<PfValue>,
}

/// Row and column scalings with `other[i][j] = row[i] * self[i][j] * col[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingCertificate {
    pub row: Vec<PfValue>,
    pub col: Vec<PfValue>,
}

fn check_labels(rows: &[String], cols: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in rows.iter().chain(cols) {
        if l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == ':') {
            return Err(Error::pre(format!("invalid label `{l}`")));
        }
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Exact determinant by cofactor expansion along the first row.
fn det_cofactor(m: &[Vec<PfValue>], field: PartialFieldId) -> PfValue {
    let n = m.len();
    match n {
        0 => PfValue::one(field),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = PfValue::zero(field);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<PfValue>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det_cofactor(&minor, field));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Fraction-free elimination with exact division in the ambient ring.
fn det_bareiss(mut m: Vec<Vec<PfValue>>, field: PartialFieldId) -> Result<PfValue> {
    let n = m.len();
    let mut sign = false;
    let mut prev = PfValue::one(field);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = !sign;
                }
                None => return Ok(PfValue::zero(field)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}

/// Determinant of a square array of ring elements.
pub fn det_of(m: &[Vec<PfValue>], field: PartialFieldId) -> Result<PfValue> {
    if m.iter().any(|r| r.len() != m.len()) {
        return Err(Error::Dimension("determinant of a non-square array".into()));
    }
    if m.len() < 5 {
        Ok(det_cofactor(m, field))
    } else {
        det_bareiss(m.to_vec(), field)
    }
}

/// Rank of an array over the fraction field of its (domain) ambient ring.
pub fn rank_of(m: &[Vec<PfValue>], field: PartialFieldId) -> Result<usize> {
    let mut m = m.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = PfValue::one(field);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = m[r][c].mul(&m[i][j]).sub(&m[i][c].mul(&m[r][j]));
                m[i][j] = v.div_exact(&prev)?;
            }
            m[i][c] = PfValue::zero(field);
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Ok(r)
}

impl LabeledMatrix {
    pub fn new(
        field: PartialFieldId,
        rows: Vec<String>,
        cols: Vec<String>,
        entries: Vec<PfValue>,
    ) -> Result<Self> {
        check_labels(&rows, &cols)?;
        if entries.len() != rows.len() * cols.len() {
            return Err(Error::Dimension(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows.len(),
                cols.len()
            )));
        }
        if let Some(v) = entries.iter().find(|v| v.field() != field) {
            return Err(Error::FieldMismatch(v.field().to_string(), field.to_string()));
        }
        Ok(LabeledMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from integer entries given row by row.
    pub fn from_ints(
        field: PartialFieldId,
        rows: &[&str],
        cols: &[&str],
        data: &[Vec<i64>],
    ) -> Result<Self> {
        if data.len() != rows.len() || data.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Dimension("integer data does not match labels".into()));
        }
        let entries = data
            .iter()
            .flatten()
            .map(|&n| PfValue::from_int(field, n))
            .collect();
        Self::new(
            field,
            rows.iter().map(|s| s.to_string()).collect(),
            cols.iter().map(|s| s.to_string()).collect(),
            entries,
        )
    }

    /// Builds a matrix from rows of entries.
    pub fn from_rows(
        field: PartialFieldId,
        rows: Vec<String>,
        cols: Vec<String>,
        data: Vec<Vec<PfValue>>,
    ) -> Result<Self> {
        if data.len() != rows.len() || data.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Dimension("row data does not match labels".into()));
        }
        Self::new(field, rows, cols, data.into_iter().flatten().collect())
    }

    pub fn field(&self) -> PartialFieldId {
        self.field
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn cols(&self) -> &[String] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &PfValue {
        &self.entries[i * self.cols.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: PfValue) {
        assert_eq!(v.field(), self.field);
        let n = self.cols.len();
        self.entries[i * n + j] = v;
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.rows.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.cols.iter().position(|l| l == label)
    }

    fn row_idx(&self, label: &str) -> Result<usize> {
        self.row_index(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn col_idx(&self, label: &str) -> Result<usize> {
        self.col_index(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Entry at row label `x`, column label `y`.
    pub fn entry(&self, x: &str, y: &str) -> Result<&PfValue> {
        Ok(self.get(self.row_idx(x)?, self.col_idx(y)?))
    }

    /// All row and column labels, rows first.
    pub fn labels(&self) -> Vec<String> {
        self.rows.iter().chain(&self.cols).cloned().collect()
    }

    pub fn entries(&self) -> &[PfValue] {
        &self.entries
    }

    fn block(&self, ri: &[usize], ci: &[usize]) -> Vec<Vec<PfValue>> {
        ri.iter()
            .map(|&i| ci.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Determinant of the submatrix on the given row and column indices, in
    /// the given order.
    pub fn det_idx(&self, ri: &[usize], ci: &[usize]) -> Result<PfValue> {
        if ri.len() != ci.len() {
            return Err(Error::Dimension(format!(
                "{} rows and {} columns",
                ri.len(),
                ci.len()
            )));
        }
        det_of(&self.block(ri, ci), self.field)
    }

    /// Determinant of the submatrix on labeled rows and columns.
    pub fn determinant(&self, rowset: &[&str], colset: &[&str]) -> Result<PfValue> {
        let ri = rowset
            .iter()
            .map(|l| self.row_idx(l))
            .collect::<Result<Vec<_>>>()?;
        let ci = colset
            .iter()
            .map(|l| self.col_idx(l))
            .collect::<Result<Vec<_>>>()?;
        self.det_idx(&ri, &ci)
    }

    /// Exhaustive check that every square subdeterminant lies in the partial
    /// field. Submatrices are scanned by size, then row set, then column set,
    /// so the witness is the least one in that order.
    pub fn is_pmatrix(&self) -> PCertificate {
        let (m, n) = (self.nrows(), self.ncols());
        for k in 1..=m.min(n) {
            let rsets = bits::combinations(m, k);
            let csets = bits::combinations(n, k);
            for ri in &rsets {
                for ci in &csets {
                    let d = match self.det_idx(ri, ci) {
                        Ok(d) => d,
                        Err(_) => continue,
                    };
                    if !d.is_member() {
                        return PCertificate {
                            verdict: false,
                            witness: Some((
                                ri.iter().map(|&i| self.rows[i].clone()).collect(),
                                ci.iter().map(|&j| self.cols[j].clone()).collect(),
                            )),
                            witness_det: Some(d),
                        };
                    }
                }
            }
        }
        PCertificate {
            verdict: true,
            witness: None,
            witness_det: None,
        }
    }

    /// Pivot over the entry at row label `x`, column label `y`: the labels
    /// trade places and the entries transform by the pivoting formula.
    pub fn pivot(&self, x: &str, y: &str) -> Result<LabeledMatrix> {
        self.pivot_idx(self.row_idx(x)?, self.col_idx(y)?)
    }

    pub fn pivot_idx(&self, px: usize, py: usize) -> Result<LabeledMatrix> {
        let a = self.get(px, py);
        if !a.is_unit() {
            return Err(Error::NotInvertible(format!(
                "pivot entry {a} at ({}, {})",
                self.rows[px], self.cols[py]
            )));
        }
        let ainv = a.inv()?;
        let (m, n) = (self.nrows(), self.ncols());
        let mut entries = Vec::with_capacity(m * n);
        for u in 0..m {
            for v in 0..n {
                let e = match (u == px, v == py) {
                    (true, true) => ainv.clone(),
                    (true, false) => ainv.mul(self.get(px, v)),
                    (false, true) => self.get(u, py).mul(&ainv).neg(),
                    (false, false) => self
                        .get(u, v)
                        .sub(&self.get(u, py).mul(&ainv).mul(self.get(px, v))),
                };
                entries.push(e);
            }
        }
        let mut rows = self.rows.clone();
        let mut cols = self.cols.clone();
        std::mem::swap(&mut rows[px], &mut cols[py]);
        Ok(LabeledMatrix {
            field: self.field,
            rows,
            cols,
            entries,
        })
    }

    /// Largest size of a nonsingular square submatrix.
    pub fn rank(&self) -> usize {
        let all_r: Vec<usize> = (0..self.nrows()).collect();
        let all_c: Vec<usize> = (0..self.ncols()).collect();
        self.rank_idx(&all_r, &all_c)
    }

    pub fn rank_idx(&self, ri: &[usize], ci: &[usize]) -> usize {
        rank_of(&self.block(ri, ci), self.field).expect("ambient rings are domains")
    }

    pub fn transpose(&self) -> LabeledMatrix {
        let (m, n) = (self.nrows(), self.ncols());
        let entries = (0..n)
            .flat_map(|j| (0..m).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        LabeledMatrix {
            field: self.field,
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries,
        }
    }

    /// `-A^T`, the matrix of the dual matroid.
    pub fn dual(&self) -> LabeledMatrix {
        let t = self.transpose();
        LabeledMatrix {
            entries: t.entries.iter().map(|v| v.neg()).collect(),
            ..t
        }
    }

    /// The submatrix on the given row and column indices.
    pub fn submatrix_idx(&self, ri: &[usize], ci: &[usize]) -> LabeledMatrix {
        LabeledMatrix {
            field: self.field,
            rows: ri.iter().map(|&i| self.rows[i].clone()).collect(),
            cols: ci.iter().map(|&j| self.cols[j].clone()).collect(),
            entries: self.block(ri, ci).into_iter().flatten().collect(),
        }
    }

    /// The submatrix on the labels of `keep` (rows and columns alike), in the
    /// stored order.
    pub fn restrict(&self, keep: &[&str]) -> LabeledMatrix {
        let ri: Vec<usize> = (0..self.nrows())
            .filter(|&i| keep.contains(&self.rows[i].as_str()))
            .collect();
        let ci: Vec<usize> = (0..self.ncols())
            .filter(|&j| keep.contains(&self.cols[j].as_str()))
            .collect();
        self.submatrix_idx(&ri, &ci)
    }

    /// Removes the given labels, which may be rows or columns.
    pub fn remove(&self, drop: &[&str]) -> LabeledMatrix {
        let ri: Vec<usize> = (0..self.nrows())
            .filter(|&i| !drop.contains(&self.rows[i].as_str()))
            .collect();
        let ci: Vec<usize> = (0..self.ncols())
            .filter(|&j| !drop.contains(&self.cols[j].as_str()))
            .collect();
        self.submatrix_idx(&ri, &ci)
    }

    /// Reorders rows and columns to the given label orders.
    pub fn permuted(&self, rows: &[String], cols: &[String]) -> Result<LabeledMatrix> {
        let ri = rows
            .iter()
            .map(|l| self.row_idx(l))
            .collect::<Result<Vec<_>>>()?;
        let ci = cols
            .iter()
            .map(|l| self.col_idx(l))
            .collect::<Result<Vec<_>>>()?;
        if ri.len() != self.nrows() || ci.len() != self.ncols() {
            return Err(Error::Dimension("permutation must keep every label".into()));
        }
        Ok(self.submatrix_idx(&ri, &ci))
    }

    pub fn relabeled(&self, rename: impl Fn(&str) -> String) -> Result<LabeledMatrix> {
        let rows = self.rows.iter().map(|l| rename(l)).collect::<Vec<_>>();
        let cols = self.cols.iter().map(|l| rename(l)).collect::<Vec<_>>();
        Self::new(self.field, rows, cols, self.entries.clone())
    }

    pub fn scale_row(&self, i: usize, s: &PfValue) -> LabeledMatrix {
        let mut out = self.clone();
        for j in 0..self.ncols() {
            out.set(i, j, self.get(i, j).mul(s));
        }
        out
    }

    pub fn scale_col(&self, j: usize, s: &PfValue) -> LabeledMatrix {
        let mut out = self.clone();
        for i in 0..self.nrows() {
            out.set(i, j, self.get(i, j).mul(s));
        }
        out
    }

    /// Applies `diag(row) * A * diag(col)`.
    pub fn scaled(&self, row: &[PfValue], col: &[PfValue]) -> LabeledMatrix {
        let mut out = self.clone();
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                out.set(i, j, row[i].mul(self.get(i, j)).mul(&col[j]));
            }
        }
        out
    }

    pub fn map_entries(&self, field: PartialFieldId, f: impl Fn(&PfValue) -> Result<PfValue>) -> Result<LabeledMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Self::new(field, self.rows.clone(), self.cols.clone(), entries)
    }

    pub fn apply_hom(&self, phi: &Homomorphism) -> Result<LabeledMatrix> {
        self.map_entries(phi.target(), |v| phi.apply(v))
    }

    pub fn apply_aut(&self, s: &Automorphism) -> LabeledMatrix {
        self.map_entries(self.field, |v| Ok(s.apply(v)))
            .expect("automorphisms stay in the field")
    }

    /// Bipartite graph on rows and columns with an edge per nonzero entry.
    pub fn support_graph(&self) -> BipartiteGraph {
        let mut edges = Vec::new();
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                if !self.get(i, j).is_zero() {
                    edges.push((i, j));
                }
            }
        }
        BipartiteGraph::new(self.rows.clone(), self.cols.clone(), &edges)
    }

    /// The canonical maximal spanning forest of the support graph, as label pairs.
    pub fn canonical_forest(&self) -> Vec<(String, String)> {
        self.support_graph()
            .spanning_forest()
            .into_iter()
            .map(|(i, j)| (self.rows[i].clone(), self.cols[j].clone()))
            .collect()
    }

    fn forest_indices(&self, forest: &[(String, String)]) -> Result<Vec<(usize, usize)>> {
        forest
            .iter()
            .map(|(x, y)| {
                let i = self
                    .row_index(x)
                    .ok_or_else(|| Error::InvalidForest(format!("`{x}` is not a row label")))?;
                let j = self
                    .col_index(y)
                    .ok_or_else(|| Error::InvalidForest(format!("`{y}` is not a column label")))?;
                Ok((i, j))
            })
            .collect()
    }

    /// Row and column scalings that put the entries on `forest` to 1.
    pub fn normalizing_scalings(&self, forest: &[(String, String)]) -> Result<ScalingCertificate> {
        let g = self.support_graph();
        let idx = self.forest_indices(forest)?;
        if !g.is_maximal_spanning_forest(&idx) {
            return Err(Error::InvalidForest(
                "not a maximal spanning forest of the support graph".into(),
            ));
        }
        let (m, n) = (self.nrows(), self.ncols());
        let mut adj = vec![Vec::new(); m + n];
        for &(i, j) in &idx {
            adj[i].push(m + j);
            adj[m + j].push(i);
        }
        let one = PfValue::one(self.field);
        let mut scale: Vec<Option<PfValue>> = vec![None; m + n];
        for root in 0..m + n {
            if scale[root].is_some() {
                continue;
            }
            scale[root] = Some(one.clone());
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let su = scale[u].clone().expect("visited");
                for &w in &adj[u] {
                    if scale[w].is_some() {
                        continue;
                    }
                    let (i, j) = if u < m { (u, w - m) } else { (w, u - m) };
                    let e = su.mul(self.get(i, j));
                    scale[w] = Some(e.inv()?);
                    stack.push(w);
                }
            }
        }
        let scale: Vec<PfValue> = scale.into_iter().map(|s| s.expect("all visited")).collect();
        Ok(ScalingCertificate {
            row: scale[..m].to_vec(),
            col: scale[m..].to_vec(),
        })
    }

    /// The scaling-equivalent matrix with entry 1 on every edge of `forest`.
    pub fn normalize(&self, forest: &[(String, String)]) -> Result<LabeledMatrix> {
        let s = self.normalizing_scalings(forest)?;
        Ok(self.scaled(&s.row, &s.col))
    }

    /// Normal form with respect to the canonical forest.
    pub fn normal_form(&self) -> Result<LabeledMatrix> {
        self.normalize(&self.canonical_forest())
    }

    /// Decides scaling equivalence. On success the certificate maps `self` to
    /// `other` (after reordering `other` to the label order of `self`).
    pub fn scaling_equivalent(&self, other: &LabeledMatrix) -> Option<ScalingCertificate> {
        if self.field != other.field {
            return None;
        }
        let other = other.permuted(&self.rows, &self.cols).ok()?;
        if self.support_graph() != other.support_graph() {
            return None;
        }
        let forest = self.canonical_forest();
        let sa = self.normalizing_scalings(&forest).ok()?;
        let sb = other.normalizing_scalings(&forest).ok()?;
        if self.scaled(&sa.row, &sa.col) != other.scaled(&sb.row, &sb.col) {
            return None;
        }
        let div = |a: &PfValue, b: &PfValue| a.mul(&b.inv().expect("scalings are units"));
        Some(ScalingCertificate {
            row: sa.row.iter().zip(&sb.row).map(|(a, b)| div(a, b)).collect(),
            col: sa.col.iter().zip(&sb.col).map(|(a, b)| div(a, b)).collect(),
        })
    }

    /// Text form: header, row and column label lines, then one line per row.
    pub fn to_text(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "pmatrix {name} over {}", self.field);
        let _ = writeln!(s, "{}", std::iter::once("rows").chain(self.rows.iter().map(String::as_str)).collect::<Vec<_>>().join(" "));
        let _ = writeln!(s, "{}", std::iter::once("cols").chain(self.cols.iter().map(String::as_str)).collect::<Vec<_>>().join(" "));
        for (i, r) in self.rows.iter().enumerate() {
            let vals: Vec<String> = (0..self.ncols()).map(|j| self.get(i, j).to_string()).collect();
            if vals.is_empty() {
                let _ = writeln!(s, "{r}:");
            } else {
                let _ = writeln!(s, "{r}: {}", vals.join(" "));
            }
        }
        s
    }

    /// Parses the text form, returning the name and the matrix.
    pub fn parse_text(text: &str) -> Result<(String, LabeledMatrix)> {
        crate::textio::parse_matrix(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G5: PartialFieldId = PartialFieldId::Prime(5);

    fn m(field: PartialFieldId, data: &[Vec<i64>]) -> LabeledMatrix {
        let rows: Vec<String> = (1..=data.len()).map(|i| format!("x{i}")).collect();
        let cols: Vec<String> = (1..=data.first().map_or(0, Vec::len)).map(|i| format!("y{i}")).collect();
        let r: Vec<&str> = rows.iter().map(String::as_str).collect();
        let c: Vec<&str> = cols.iter().map(String::as_str).collect();
        LabeledMatrix::from_ints(field, &r, &c, data).unwrap()
    }

    #[test]
    fn determinants() {
        let a = m(G5, &[vec![1, 1], vec![1, 2]]);
        assert_eq!(a.determinant(&["x1", "x2"], &["y1", "y2"]).unwrap(), PfValue::from_int(G5, 1));
        let d = m(PartialFieldId::Dyadic, &[vec![1, 1], vec![1, -1]]);
        assert_eq!(d.det_idx(&[0, 1], &[0, 1]).unwrap(), PfValue::from_int(PartialFieldId::Dyadic, -2));
        for n in 0..7 {
            let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
            let all: Vec<usize> = (0..n).collect();
            if n == 0 {
                assert_eq!(det_of(&[], G5).unwrap(), PfValue::one(G5));
                continue;
            }
            assert!(m(PartialFieldId::Regular, &id).det_idx(&all, &all).unwrap().is_one());
        }
        assert!(a.det_idx(&[0], &[0, 1]).is_err());
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        // Integer matrices where exact division is exercised.
        let data = vec![
            vec![2, -1, 0, 3, 1, 4],
            vec![1, 3, -2, 0, 2, 1],
            vec![0, 1, 4, -1, 1, 0],
            vec![5, 0, 1, 2, -3, 2],
            vec![1, 1, 1, 1, 1, 1],
            vec![-2, 4, 0, 1, 0, 3],
        ];
        let f = PartialFieldId::Regular;
        let rows: Vec<Vec<PfValue>> = data.iter().map(|r| r.iter().map(|&v| PfValue::from_int(f, v)).collect()).collect();
        for n in 1..=6 {
            let sub: Vec<Vec<PfValue>> = rows[..n].iter().map(|r| r[..n].to_vec()).collect();
            assert_eq!(det_bareiss(sub.clone(), f).unwrap(), det_cofactor(&sub, f), "size {n}");
        }
    }

    #[test]
    fn pmatrix_examples() {
        let d = m(PartialFieldId::Dyadic, &[vec![1, 1], vec![1, -1]]);
        assert!(d.is_pmatrix().verdict);
        let r = m(PartialFieldId::Regular, &[vec![1, 1], vec![-1, 2]]);
        let cert = r.is_pmatrix();
        assert!(!cert.verdict);
        // The least witness is the single entry 2.
        assert_eq!(cert.witness, Some((vec!["x2".to_string()], vec!["y2".to_string()])));
        assert_eq!(r.det_idx(&[0, 1], &[0, 1]).unwrap(), PfValue::Regular(3));
        let e = LabeledMatrix::new(G5, vec![], vec![], vec![]).unwrap();
        assert!(e.is_pmatrix().verdict);
    }

    #[test]
    fn pivot_example() {
        let a = m(G5, &[vec![2, 1], vec![1, 1]]);
        let p = a.pivot("x1", "y1").unwrap();
        assert_eq!(p.rows(), ["y1", "x2"]);
        assert_eq!(p.cols(), ["x1", "y2"]);
        assert_eq!(p, LabeledMatrix::from_ints(G5, &["y1", "x2"], &["x1", "y2"], &[vec![3, 3], vec![2, 3]]).unwrap());
        let one = m(G5, &[vec![2]]);
        assert_eq!(one.pivot("x1", "y1").unwrap().get(0, 0), &PfValue::from_int(G5, 3));
        let back = p.pivot("y1", "x1").unwrap();
        assert!(back.scaling_equivalent(&a).is_some());
        assert!(m(G5, &[vec![0]]).pivot("x1", "y1").is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(m(G5, &[vec![0; 3], vec![0; 3], vec![0; 3]]).rank(), 0);
        assert_eq!(m(G5, &[vec![1, 1], vec![1, 2]]).rank(), 2);
        assert_eq!(m(PartialFieldId::Prime(3), &[vec![1, 1], vec![2, 2]]).rank(), 1);
        assert_eq!(m(PartialFieldId::Regular, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).rank(), 2);
    }

    #[test]
    fn normalization() {
        let a = m(G5, &[vec![2, 4], vec![1, 2]]);
        let t = vec![
            ("x1".to_string(), "y1".to_string()),
            ("x1".to_string(), "y2".to_string()),
            ("x2".to_string(), "y1".to_string()),
        ];
        // Singular input stays singular, so the remaining entry is forced to 1.
        assert_eq!(a.normalize(&t).unwrap(), m(G5, &[vec![1, 1], vec![1, 1]]));
        let b = m(G5, &[vec![1, 1], vec![1, 4]]);
        assert_eq!(b.normalize(&t).unwrap(), b);
        let d = m(G5, &[vec![3, 0], vec![0, 2]]);
        let diag = vec![("x1".to_string(), "y1".to_string()), ("x2".to_string(), "y2".to_string())];
        assert_eq!(d.normalize(&diag).unwrap(), m(G5, &[vec![1, 0], vec![0, 1]]));
        let bad = vec![("x1".to_string(), "y1".to_string())];
        assert!(matches!(b.normalize(&bad), Err(Error::InvalidForest(_))));
    }

    #[test]
    fn scaling_equivalence() {
        let a = m(G5, &[vec![1, 1], vec![1, 2]]);
        let s = a.scale_row(0, &PfValue::from_int(G5, 2));
        let cert = a.scaling_equivalent(&s).unwrap();
        assert_eq!(a.scaled(&cert.row, &cert.col), s);
        assert!(a.scaling_equivalent(&m(G5, &[vec![1, 1], vec![1, 3]])).is_none());
        assert!(a.scaling_equivalent(&m(G5, &[vec![1, 0], vec![1, 3]])).is_none());
    }

    #[test]
    fn text_round_trip() {
        let a = m(PartialFieldId::NearRegular, &[vec![1, 1], vec![1, 0]]);
        let a = a.scale_col(1, &PfValue::NearRegular(crate::pfield::NrValue::unit(-1, 2, -1)));
        let text = a.to_text("demo");
        let (name, b) = LabeledMatrix::parse_text(&text).unwrap();
        assert_eq!(name, "demo");
        assert_eq!(a, b);
    }

    #[test]
    fn support_of_identity_is_a_matching() {
        let id = m(G5, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let g = id.support_graph();
        assert_eq!(g.edges(), vec![(0, 0), (1, 1), (2, 2)]);
        let full = m(G5, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(full.support_graph().edge_count(), 4);
    }
}
