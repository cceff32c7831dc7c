//! Exact branch width by dynamic programming over subsets.
//!
//! For a set `S`, `h(S)` is the least width of a rooted subcubic tree whose
//! leaves are `S`, counting the edge above the root. Splits `S = A + B` are
//! tried with `A` holding the least element of `S`, in increasing numeric
//! order of `A`, keeping the first strict improvement. This makes the
//! returned decomposition deterministic.

use std::collections::VecDeque;

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// A tree with leaves mapped to ground elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    /// `(vertex, element)` pairs.
    leaves: Vec<(usize, usize)>,
    width: usize,
    dump: String,
}

impl BranchDecomposition {
    /// An unvalidated decomposition; `width_of` checks the shape.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>, leaves: Vec<(usize, usize)>) -> Self {
        BranchDecomposition {
            vertices,
            edges,
            leaves,
            width: 0,
            dump: String::new(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn leaves(&self) -> &[(usize, usize)] {
        &self.leaves
    }

    /// Width recorded when the decomposition was computed (0 if unevaluated).
    pub fn width(&self) -> usize {
        self.width
    }

    /// Nested-parenthesis grouping of the leaves, e.g. `(a (b (c d)))`, where
    /// the outer pair is the edge chosen as root.
    pub fn dump(&self) -> &str {
        &self.dump
    }

    /// Ground sets displayed by each tree edge (the side containing the
    /// edge's first endpoint).
    fn displayed(&self) -> Vec<Set> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let elem: Vec<Option<usize>> = {
            let mut e = vec![None; self.vertices];
            for &(v, x) in &self.leaves {
                e[v] = Some(x);
            }
            e
        };
        self.edges
            .iter()
            .map(|&(u, v)| {
                let mut seen = vec![false; self.vertices];
                seen[u] = true;
                seen[v] = true;
                let mut side = 0;
                let mut queue = VecDeque::from([u]);
                while let Some(w) = queue.pop_front() {
                    if let Some(x) = elem[w] {
                        side |= bits::bit(x);
                    }
                    for &z in &adj[w] {
                        if !seen[z] {
                            seen[z] = true;
                            queue.push_back(z);
                        }
                    }
                }
                side
            })
            .collect()
    }
}

/// Width of `d` as a decomposition of `m`: the largest `lambda + 1` over
/// displayed separations, or 1 for an edgeless tree.
pub fn width_of(m: &Matroid, d: &BranchDecomposition) -> Result<usize> {
    let bad = |msg: &str| Err(Error::InvalidDecomposition(msg.to_string()));
    let n = d.vertices;
    if n == 0 {
        return bad("empty tree");
    }
    if d.edges.len() + 1 != n {
        return bad("edge count is not vertices - 1");
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in &d.edges {
        if u >= n || v >= n || u == v {
            return bad("edge endpoint out of range");
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut seen_elems = 0;
    let mut is_leaf_vertex = vec![false; n];
    for &(v, e) in &d.leaves {
        if v >= n || e >= m.len() || bits::has(seen_elems, e) || is_leaf_vertex[v] {
            return bad("leaf map is not a bijection");
        }
        seen_elems |= bits::bit(e);
        is_leaf_vertex[v] = true;
    }
    if seen_elems != m.ground() {
        return bad("leaf map does not cover the ground set");
    }
    if n == 1 {
        return Ok(1);
    }
    for v in 0..n {
        match (deg[v], is_leaf_vertex[v]) {
            (1, true) | (3, false) => {}
            (1, false) => return bad("unlabeled leaf"),
            _ => return bad("tree is not cubic"),
        }
    }
    let sides = d.displayed();
    // A connected tree displays nonempty proper subsets on every edge.
    if sides.iter().any(|&s| s == 0 || s == m.ground()) {
        return bad("tree is not connected");
    }
    Ok(sides.iter().map(|&s| m.lambda(s) + 1).max().unwrap_or(1))
}

enum Shape {
    Leaf(usize),
    Join(Box<Shape>, Box<Shape>),
}

/// Exact branch width together with one optimal decomposition.
pub fn branch_width(m: &Matroid) -> Result<(usize, BranchDecomposition)> {
    let n = m.len();
    if n == 0 {
        return Err(Error::pre("branch width needs a nonempty ground set"));
    }
    let full = m.ground();
    let table = m.rank_table();
    let r = m.rank();
    let lam = |s: Set| table[s as usize] as usize + table[(full & !s) as usize] as usize - r;
    let size = 1usize << n;
    // h[S] and the chosen A for S.
    let mut h = vec![u8::MAX; size];
    let mut choice = vec![0 as Set; size];
    let mut by_size: Vec<Set> = (1..=full).collect();
    by_size.sort_by_key(|&s| (s.count_ones(), s));
    for &s in &by_size {
        if s.count_ones() == 1 {
            h[s as usize] = (lam(s) + 1) as u8;
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let (best, a) = best_split(s, low, rest, &h);
        h[s as usize] = best.max((lam(s) + 1) as u8);
        choice[s as usize] = a;
    }
    let (width, top) = if n == 1 {
        (1, Shape::Leaf(0))
    } else {
        let low = full & full.wrapping_neg();
        let (best, a) = best_split(full, low, full & !low, &h);
        (best as usize, Shape::Join(Box::new(build(a, &choice)), Box::new(build(full & !a, &choice))))
    };
    let mut d = BranchDecomposition::new(0, Vec::new(), Vec::new());
    d.dump = render(&top, m);
    materialize(&top, None, &mut d);
    d.width = width;
    Ok((width, d))
}

/// Least `max(h(A), h(S - A))` over `A = low + T`, `T` a proper submask of `rest`.
fn best_split(s: Set, low: Set, rest: Set, h: &[u8]) -> (u8, Set) {
    let mut best = u8::MAX;
    let mut arg = 0;
    // Proper submasks of `rest` in increasing order.
    let mut t: Set = 0;
    while t != rest {
        let a = low | t;
        let v = h[a as usize].max(h[(s & !a) as usize]);
        if v < best {
            best = v;
            arg = a;
        }
        t = t.wrapping_sub(rest) & rest;
    }
    (best, arg)
}

fn build(s: Set, choice: &[Set]) -> Shape {
    if s.count_ones() == 1 {
        return Shape::Leaf(s.trailing_zeros() as usize);
    }
    let a = choice[s as usize];
    Shape::Join(Box::new(build(a, choice)), Box::new(build(s & !a, choice)))
}

fn render(s: &Shape, m: &Matroid) -> String {
    match s {
        Shape::Leaf(e) => m.label(*e).to_string(),
        Shape::Join(a, b) => format!("({} {})", render(a, m), render(b, m)),
    }
}

/// Adds the tree for `s`, attached to `parent` if given, and returns its root.
/// The top-level join becomes a single edge between the roots of its halves.
fn materialize(s: &Shape, parent: Option<usize>, d: &mut BranchDecomposition) -> usize {
    let attach = |d: &mut BranchDecomposition| {
        let v = d.vertices;
        d.vertices += 1;
        if let Some(p) = parent {
            d.edges.push((p, v));
        }
        v
    };
    match s {
        Shape::Leaf(e) => {
            let v = attach(d);
            d.leaves.push((v, *e));
            v
        }
        Shape::Join(a, b) if parent.is_none() && d.vertices == 0 => {
            let u = materialize(a, None, d);
            let v = materialize(b, None, d);
            d.edges.push((u, v));
            u
        }
        Shape::Join(a, b) => {
            let v = attach(d);
            materialize(a, Some(v), d);
            materialize(b, Some(v), d);
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{catalog, letters};

    #[test]
    fn small_widths() {
        let u24 = Matroid::uniform(2, letters(4)).unwrap();
        let (w, d) = branch_width(&u24).unwrap();
        assert_eq!(w, 3);
        assert_eq!(width_of(&u24, &d).unwrap(), 3);
        assert_eq!(d.dump(), "(a (b (c d)))");
        let one = Matroid::uniform(1, letters(1)).unwrap();
        let (w, d) = branch_width(&one).unwrap();
        assert_eq!((w, d.vertices(), d.edges().len()), (1, 1, 0));
        assert_eq!(width_of(&one, &d).unwrap(), 1);
    }

    #[test]
    fn whirls_have_width_three() {
        for n in 2..=4 {
            let m = catalog(&format!("whirl{n}")).unwrap();
            let (w, d) = branch_width(&m).unwrap();
            assert_eq!(w, 3, "whirl{n}");
            assert_eq!(width_of(&m, &d).unwrap(), 3);
        }
    }

    #[test]
    fn rejects_malformed_trees() {
        let u24 = Matroid::uniform(2, letters(4)).unwrap();
        // A path a - b - c - d is not cubic.
        let path = BranchDecomposition::new(4, vec![(0, 1), (1, 2), (2, 3)], vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert!(width_of(&u24, &path).is_err());
        // Star with four leaves has a degree-4 center.
        let star = BranchDecomposition::new(
            5,
            vec![(4, 0), (4, 1), (4, 2), (4, 3)],
            vec![(0, 0), (1, 1), (2, 2), (3, 3)],
        );
        assert!(width_of(&u24, &star).is_err());
    }

    #[test]
    fn separating_edge_of_a_direct_sum() {
        // U(1,2) + U(1,2): the edge between {a,b} and {c,d} displays a 1-separation.
        let m = Matroid::from_bases(letters(4), vec![0b0101, 0b0110, 0b1001, 0b1010]).unwrap();
        let d = BranchDecomposition::new(
            6,
            vec![(4, 0), (4, 1), (4, 5), (5, 2), (5, 3)],
            vec![(0, 0), (1, 1), (2, 2), (3, 3)],
        );
        assert_eq!(m.lambda(0b0011) + 1, 1);
        assert_eq!(width_of(&m, &d).unwrap(), 2);
    }
}
