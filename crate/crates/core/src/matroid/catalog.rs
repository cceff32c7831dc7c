//! Named matroids with frozen ground labelings.
//!
//! Ground labels are the letters `a, b, c, ...`. Matroids built from a matrix
//! `[I A]` label the rows first, then the columns. Wheels and whirls of rank
//! `n` label the spokes `a..` and then the rim elements, with rim element `i`
//! joining spokes `i` and `i+1`. Uniform matroids come with a Cauchy matrix
//! over the smallest prime field with at least `n` elements.
//!
//! | name | field | matrix `A` (rows / columns) |
//! |------|-------|-----------------------------|
//! | `F7` | GF(2) | `[[0,1,1,1],[1,0,1,1],[1,1,0,1]]` |
//! | `F7-` | GF(3) | the same matrix |
//! | `P6` | GF(5) | `[[1,1,1],[1,2,3],[0,1,3]]` |
//! | `Q6` | GF(5) | `[[1,1,1],[1,0,2],[0,1,2]]` |
//! | `P7` | GF(3) | `[[2,1,1,0],[1,1,0,1],[1,0,1,1]]` |
//! | `O7` | GF(3) | `[[1,1,1,1],[0,1,2,2],[1,0,1,0]]` |
//! | `P8` | GF(3) | `[[0,1,1,-1],[1,0,1,1],[1,1,0,1],[-1,1,1,0]]` |
//! | `AG23e` | GF(3) | points `(x,y)` of AG(2,3) in x-major order, `(2,2)` removed |
//!
//! `DeltaAG23e` is the Delta-Y exchange of `AG23e` on its triangle `{a,b,c}`:
//! the generalized parallel connection with M(K4) along that triangle, minus
//! the triangle, with each new element named after the triangle element
//! opposite to it in K4. A suffix `*` denotes the dual, represented by `-A^T`.

use super::{letters, Matroid};
use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::pfield::{PartialFieldId, PfValue};
use crate::pmatrix::LabeledMatrix;

/// A catalog member with its stored representation, if any.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: Matroid,
    pub matrix: Option<LabeledMatrix>,
}

/// The names iterated by the test suites, all at most 16 elements.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "U24", "U25", "U35", "U26", "U36", "U46", "wheel3", "wheel4", "whirl2", "whirl3", "whirl4",
        "whirl5", "F7", "F7*", "F7-", "F7-*", "P6", "Q6", "P7", "O7", "P8", "AG23e", "AG23e*",
        "DeltaAG23e",
    ]
}

fn gf(p: u32) -> PartialFieldId {
    PartialFieldId::Prime(p)
}

fn matrix(field: PartialFieldId, rows: usize, data: &[Vec<i64>]) -> LabeledMatrix {
    let labels = letters(rows + data.first().map_or(0, Vec::len));
    let (r, c) = labels.split_at(rows);
    let r: Vec<&str> = r.iter().map(String::as_str).collect();
    let c: Vec<&str> = c.iter().map(String::as_str).collect();
    LabeledMatrix::from_ints(field, &r, &c, data).expect("catalog data is well formed")
}

/// The matroid of `[I A]` with its ground set sorted by label.
fn matroid_of(a: &LabeledMatrix) -> Matroid {
    let m = Matroid::from_pmatrix(a).expect("catalog matrices are P-matrices");
    sorted(&m)
}

fn sorted(m: &Matroid) -> Matroid {
    let mut perm: Vec<usize> = (0..m.len()).collect();
    perm.sort_by(|&i, &j| m.label(i).cmp(m.label(j)));
    m.permuted(&perm)
}

fn smallest_prime_at_least(n: usize) -> u32 {
    let mut p = n.max(2) as u32;
    while (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        p += 1;
    }
    p
}

fn uniform_matrix(r: usize, n: usize) -> LabeledMatrix {
    let p = smallest_prime_at_least(n);
    let f = gf(p);
    let data: Vec<Vec<PfValue>> = (0..r)
        .map(|i| {
            (0..n - r)
                .map(|j| {
                    let d = PfValue::from_int(f, i as i64 - (r + j) as i64);
                    d.inv().expect("distinct Cauchy nodes")
                })
                .collect()
        })
        .collect();
    let labels = letters(n);
    LabeledMatrix::from_rows(f, labels[..r].to_vec(), labels[r..].to_vec(), data)
        .expect("well formed")
}

/// Wheel (`whirl = false`, over the integers) or whirl (over GF(3)) of rank `n`.
fn wheel_matrix(n: usize, whirl: bool) -> LabeledMatrix {
    let mut data = vec![vec![0i64; n]; n];
    for i in 0..n - 1 {
        data[i][i] = 1;
        data[i + 1][i] = 1;
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    data[0][n - 1] = 1;
    data[n - 1][n - 1] += if whirl { -sign } else { sign };
    let field = if whirl { gf(3) } else { PartialFieldId::Regular };
    matrix(field, n, &data)
}

/// `[I A]` form of a set of column vectors over GF(p), using the greedy
/// basis in column order. Rows are labeled by the basis columns.
fn standard_form(p: u32, columns: &[Vec<i64>]) -> LabeledMatrix {
    let f = gf(p);
    let labels = letters(columns.len());
    let r = columns[0].len();
    let mut m: Vec<Vec<PfValue>> = (0..r)
        .map(|i| columns.iter().map(|c| PfValue::from_int(f, c[i])).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..columns.len() {
        if row == r {
            break;
        }
        let Some(p) = (row..r).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, row);
        let inv = m[row][c].inv().expect("nonzero in a field");
        m[row] = m[row].iter().map(|v| v.mul(&inv)).collect();
        for i in 0..r {
            if i != row && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let prow = m[row].clone();
                m[i] = m[i].iter().zip(&prow).map(|(a, b)| a.sub(&factor.mul(b))).collect();
            }
        }
        pivots.push(c);
        row += 1;
    }
    let others: Vec<usize> = (0..columns.len()).filter(|c| !pivots.contains(c)).collect();
    let data = (0..pivots.len())
        .map(|i| others.iter().map(|&c| m[i][c].clone()).collect())
        .collect();
    LabeledMatrix::from_rows(
        f,
        pivots.iter().map(|&c| labels[c].clone()).collect(),
        others.iter().map(|&c| labels[c].clone()).collect(),
        data,
    )
    .expect("well formed")
}

fn ag23e_matrix() -> LabeledMatrix {
    let mut cols = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            if (x, y) != (2, 2) {
                cols.push(vec![1, x, y]);
            }
        }
    }
    standard_form(3, &cols)
}

/// Generalized parallel connection of M(K4) with `m` along the triangle
/// `t = [t0, t1, t2]` of `m`, then deletion of the triangle. The K4 triad
/// element opposite `ti` takes the label of `ti`.
pub(crate) fn delta_y(m: &Matroid, t: [usize; 3]) -> Result<Matroid> {
    let tri = bits::from_elems(t);
    if m.rank_of(tri) != 2 || t.iter().any(|&e| m.rank_of(bits::bit(e)) != 1) {
        return Err(Error::pre("Delta-Y needs a triangle"));
    }
    // K4 on vertices 1..4: edges 12, 13, 23 (the triangle) then 34, 24, 14,
    // where edge 3+i is opposite edge i.
    let k4_edges = [(1, 2), (1, 3), (2, 3), (3, 4), (2, 4), (1, 4)];
    let k4_rank = |s: u32| -> usize {
        // Graphic rank: vertices touched minus components.
        let mut parent = [0usize, 1, 2, 3, 4];
        fn find(p: &mut [usize; 5], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            r
        }
        let mut rank = 0;
        for (i, &(u, v)) in k4_edges.iter().enumerate() {
            if s >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    rank += 1;
                }
            }
        }
        rank
    };
    let k4_flats: Vec<u32> = (0u32..64)
        .filter(|&s| (0..6).all(|e| s >> e & 1 == 1 || k4_rank(s | 1 << e) > k4_rank(s)))
        .collect();
    let n = m.len();
    let m_flats: Vec<Set> = (0..=m.ground()).filter(|&s| m.closure(s) == s).collect();
    // Combined ground: elements of m (indices 0..n), then the three triad edges.
    let total = n + 3;
    let to_k4 = |s: Set| -> u32 {
        let mut out = 0u32;
        for (i, &e) in t.iter().enumerate() {
            if bits::has(s, e) {
                out |= 1 << i;
            }
        }
        for i in 0..3 {
            if bits::has(s, n + i) {
                out |= 1 << (3 + i);
            }
        }
        out
    };
    // Compatible flat pairs with their ranks.
    let mut flats: Vec<(Set, usize)> = Vec::new();
    for &f2 in &m_flats {
        let on_t = f2 & tri;
        for &f1 in &k4_flats {
            if f1 & 7 != to_k4(on_t) & 7 {
                continue;
            }
            let mut s = f2;
            for i in 0..3 {
                if f1 >> (3 + i) & 1 == 1 {
                    s |= bits::bit(n + i);
                }
            }
            let r = k4_rank(f1) + m.rank_of(f2) - m.rank_of(on_t);
            flats.push((s, r));
        }
    }
    let ranks: Vec<u8> = (0..1u32 << total)
        .map(|x| {
            flats
                .iter()
                .filter(|&&(f, _)| x & !f == 0)
                .map(|&(_, r)| r)
                .min()
                .expect("the whole ground set is a flat") as u8
        })
        .collect();
    let mut labels: Vec<String> = m.labels().to_vec();
    for i in 0..3 {
        labels.push(format!("_{i}"));
    }
    let pc = Matroid::from_rank_table(labels, ranks);
    let del = pc.delete(tri)?;
    let mut new_labels = Vec::new();
    for l in del.labels() {
        match l.strip_prefix('_') {
            Some(i) => new_labels.push(m.label(t[i.parse::<usize>().expect("index")]).to_string()),
            None => new_labels.push(l.clone()),
        }
    }
    Ok(sorted(&del.relabeled(new_labels)?))
}

fn parse_uniform(name: &str) -> Option<(usize, usize)> {
    let body = name.strip_prefix('U')?;
    let body = body.trim_start_matches('(').trim_end_matches(')');
    if let Some((a, b)) = body.split_once(',') {
        return Some((a.trim().parse().ok()?, b.trim().parse().ok()?));
    }
    let digits: Vec<u32> = body.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
    match digits.as_slice() {
        [r, n] => Some((*r as usize, *n as usize)),
        [r, a, b] => Some((*r as usize, (*a * 10 + *b) as usize)),
        _ => None,
    }
}

fn parse_indexed(name: &str, prefix: &str) -> Option<usize> {
    let body = name.strip_prefix(prefix)?;
    body.trim_start_matches('(').trim_end_matches(')').parse().ok()
}

/// Looks up a catalog entry by name.
pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    let trimmed = name.trim();
    if let Some(base) = trimmed.strip_suffix('*') {
        let base = base.trim_start_matches('(').trim_end_matches(')');
        let e = catalog_entry(base)?;
        return Ok(CatalogEntry {
            name: trimmed.to_string(),
            matroid: e.matroid.dual(),
            matrix: e.matrix.map(|a| a.dual()),
        });
    }
    let (matroid, matrix) = match trimmed {
        "F7" => {
            let a = matrix(gf(2), 3, &[vec![0, 1, 1, 1], vec![1, 0, 1, 1], vec![1, 1, 0, 1]]);
            (matroid_of(&a), Some(a))
        }
        "F7-" => {
            let a = matrix(gf(3), 3, &[vec![0, 1, 1, 1], vec![1, 0, 1, 1], vec![1, 1, 0, 1]]);
            (matroid_of(&a), Some(a))
        }
        "P6" => {
            let a = matrix(gf(5), 3, &[vec![1, 1, 1], vec![1, 2, 3], vec![0, 1, 3]]);
            (matroid_of(&a), Some(a))
        }
        "Q6" => {
            let a = matrix(gf(5), 3, &[vec![1, 1, 1], vec![1, 0, 2], vec![0, 1, 2]]);
            (matroid_of(&a), Some(a))
        }
        "P7" => {
            let a = matrix(gf(3), 3, &[vec![2, 1, 1, 0], vec![1, 1, 0, 1], vec![1, 0, 1, 1]]);
            (matroid_of(&a), Some(a))
        }
        "O7" => {
            let a = matrix(gf(3), 3, &[vec![1, 1, 1, 1], vec![0, 1, 2, 2], vec![1, 0, 1, 0]]);
            (matroid_of(&a), Some(a))
        }
        "P8" => {
            let a = matrix(
                gf(3),
                4,
                &[vec![0, 1, 1, -1], vec![1, 0, 1, 1], vec![1, 1, 0, 1], vec![-1, 1, 1, 0]],
            );
            (matroid_of(&a), Some(a))
        }
        "AG23e" => {
            let a = ag23e_matrix();
            (matroid_of(&a), Some(a))
        }
        "DeltaAG23e" | "DeltaT(AG23e)" => {
            let ag = matroid_of(&ag23e_matrix());
            (delta_y(&ag, [0, 1, 2])?, None)
        }
        _ => {
            if let Some((r, n)) = parse_uniform(trimmed) {
                if r > n || n > super::MAX_GROUND {
                    return Err(unknown());
                }
                let a = uniform_matrix(r, n);
                (matroid_of(&a), Some(a))
            } else if let Some(n) = parse_indexed(trimmed, "wheel").or_else(|| parse_indexed(trimmed, "W")) {
                if !(2..=8).contains(&n) {
                    return Err(unknown());
                }
                let a = wheel_matrix(n, false);
                (matroid_of(&a), Some(a))
            } else if let Some(n) = parse_indexed(trimmed, "whirl") {
                if !(2..=8).contains(&n) {
                    return Err(unknown());
                }
                let a = wheel_matrix(n, true);
                (matroid_of(&a), Some(a))
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(CatalogEntry {
        name: trimmed.to_string(),
        matroid,
        matrix,
    })
}

/// The named matroid.
pub fn catalog(name: &str) -> Result<Matroid> {
    catalog_entry(name).map(|e| e.matroid)
}

/// The stored representation of a named matroid.
pub fn catalog_matrix(name: &str) -> Result<LabeledMatrix> {
    catalog_entry(name)?
        .matrix
        .ok_or_else(|| Error::pre(format!("`{name}` has no stored matrix")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{has_minor, is_isomorphic};

    #[test]
    fn sizes_and_ranks() {
        let expect = [
            ("U24", 4, 2, 6),
            ("F7", 7, 3, 28),
            ("F7*", 7, 4, 28),
            ("F7-", 7, 3, 29),
            ("P8", 8, 4, 0),
            ("AG23e", 8, 3, 0),
            ("DeltaAG23e", 8, 4, 0),
            ("wheel3", 6, 3, 16),
            ("whirl3", 6, 3, 17),
        ];
        for (name, n, r, b) in expect {
            let m = catalog(name).unwrap();
            assert_eq!((m.len(), m.rank()), (n, r), "{name}");
            if b > 0 {
                assert_eq!(m.bases().len(), b, "{name}");
            }
            assert_eq!(m.labels(), letters(n).as_slice());
        }
    }

    #[test]
    fn fano_lines_are_the_non_bases() {
        let m = catalog("F7").unwrap();
        let lines: Vec<Set> = bits::combinations(7, 3)
            .into_iter()
            .map(bits::from_elems)
            .filter(|&s| !m.is_basis(s))
            .collect();
        assert_eq!(lines.len(), 7);
        for e in 0..7 {
            let si = m.contract(bits::bit(e)).unwrap().simplify();
            assert!(is_isomorphic(&si, &Matroid::uniform(2, letters(3)).unwrap()).is_some());
        }
    }

    #[test]
    fn whirl2_is_u24_and_wheels_are_regular() {
        let w = catalog("whirl2").unwrap();
        assert!(w.same_as(&Matroid::uniform(2, letters(4)).unwrap()));
        for n in 3..=5 {
            let a = catalog_matrix(&format!("wheel{n}")).unwrap();
            assert!(a.is_pmatrix().verdict, "wheel{n}");
            let wh = catalog(&format!("whirl{n}")).unwrap();
            let wl = catalog(&format!("wheel{n}")).unwrap();
            assert_eq!(wh.bases().len(), wl.bases().len() + 1);
            assert!(wh.is_3connected() && wl.is_3connected());
        }
    }

    #[test]
    fn named_matroid_properties() {
        let p8 = catalog("P8").unwrap();
        assert!(is_isomorphic(&p8, &p8.dual()).is_some());
        let u24 = Matroid::uniform(2, letters(4)).unwrap();
        assert!(!has_minor(&catalog("F7").unwrap(), &u24));
        assert!(has_minor(&catalog("wheel3").unwrap().dual(), &catalog("wheel3").unwrap()));
        for name in catalog_names() {
            let m = catalog(name).unwrap();
            assert!(m.is_3connected(), "{name}");
        }
        let d = catalog("DeltaAG23e").unwrap();
        assert!(is_isomorphic(&d, &catalog("AG23e*").unwrap()).is_none());
        assert!(is_isomorphic(&d, &p8).is_none());
    }

    #[test]
    fn name_variants() {
        for n in ["U2,4", "U(2,4)", "U24"] {
            assert_eq!(catalog(n).unwrap().bases().len(), 6);
        }
        assert_eq!(catalog("(F7-)*").unwrap().rank(), 4);
        assert!(catalog("nonsense").is_err());
        assert!(catalog("U(5,3)").is_err());
    }
}
