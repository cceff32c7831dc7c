//! Subsets of a ground set of at most 32 elements, encoded as `u32` masks.

pub type Set = u32;

#[inline]
pub fn size(s: Set) -> usize {
    s.count_ones() as usize
}

#[inline]
pub fn has(s: Set, i: usize) -> bool {
    s >> i & 1 == 1
}

#[inline]
pub fn bit(i: usize) -> Set {
    1 << i
}

#[inline]
pub fn full(n: usize) -> Set {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Indices of the members of `s`, ascending.
pub fn elems(s: Set) -> Vec<usize> {
    let mut out = Vec::with_capacity(size(s));
    let mut t = s;
    while t != 0 {
        out.push(t.trailing_zeros() as usize);
        t &= t - 1;
    }
    out
}

pub fn from_elems<I: IntoIterator<Item = usize>>(it: I) -> Set {
    it.into_iter().fold(0, |acc, i| acc | bit(i))
}

/// Iterates over all submasks of `s`, including `0` and `s`.
pub fn submasks(s: Set) -> impl Iterator<Item = Set> {
    let mut next = Some(s);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & s) };
        Some(cur)
    })
}

/// All `k`-subsets of `{0, .., n-1}` in lexicographic order of their index lists.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Orders masks by their ascending index lists, lexicographically.
pub fn lex_cmp(a: Set, b: Set) -> std::cmp::Ordering {
    elems(a).cmp(&elems(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        let c = combinations(4, 2);
        assert_eq!(
            c,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn submasks_cover_everything() {
        let s = 0b1011;
        let mut all: Vec<Set> = submasks(s).collect();
        all.sort();
        assert_eq!(all, vec![0, 1, 2, 3, 8, 9, 10, 11]);
    }
}
