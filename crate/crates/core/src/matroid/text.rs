//! Line-oriented text form of matroids.
//!
//! ```text
//! matroid U24
//! ground a b c d
//! rank 2
//! bases ab ac ad bc bd cd
//! ```
//!
//! Bases are written as concatenated labels. The empty basis of a rank-0
//! matroid is written `-`.

use super::Matroid;
use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::textio::Lines;

/// Splits a concatenation of labels into indices, backtracking over label
/// prefixes so that multi-character labels are supported.
pub(crate) fn split_word(labels: &[String], word: &str) -> Result<Vec<usize>> {
    fn go(labels: &[String], rest: &str, acc: &mut Vec<usize>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for (i, l) in labels.iter().enumerate() {
            if rest.starts_with(l.as_str()) && !acc.contains(&i) {
                acc.push(i);
                if go(labels, &rest[l.len()..], acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    if word == "-" {
        return Ok(Vec::new());
    }
    let mut acc = Vec::new();
    if go(labels, word, &mut acc) {
        Ok(acc)
    } else {
        Err(Error::UnknownLabel(word.to_string()))
    }
}

pub(crate) fn format_matroid(m: &Matroid, name: &str) -> String {
    let words: Vec<String> = m
        .bases()
        .iter()
        .map(|&b| if b == 0 { "-".to_string() } else { m.word(b) })
        .collect();
    let mut sorted = words;
    sorted.sort();
    format!(
        "matroid {name}\nground {}\nrank {}\nbases {}\n",
        m.labels().join(" "),
        m.rank(),
        sorted.join(" ")
    )
}

pub(crate) fn parse_matroid(text: &str) -> Result<(String, Matroid)> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.expect_keyword("matroid")?;
    let name = match header.as_slice() {
        [(_, n)] => n.clone(),
        _ => return Err(Error::parse(ln, 1, "expected `matroid <name>`")),
    };
    let (_, ground) = lines.expect_keyword("ground")?;
    let labels: Vec<String> = ground.iter().map(|(_, l)| l.clone()).collect();
    let (ln, rank) = lines.expect_keyword("rank")?;
    let r: usize = match rank.as_slice() {
        [(c, v)] => v
            .parse()
            .map_err(|_| Error::parse(ln, *c, format!("bad rank `{v}`")))?,
        _ => return Err(Error::parse(ln, 1, "expected `rank <r>`")),
    };
    let (ln, words) = lines.expect_keyword("bases")?;
    lines.expect_end()?;
    let mut bases: Vec<Set> = Vec::new();
    for (col, w) in &words {
        let idx = split_word(&labels, w)
            .map_err(|_| Error::parse(ln, *col, format!("`{w}` is not a set of ground labels")))?;
        if idx.len() != r {
            return Err(Error::parse(ln, *col, format!("`{w}` does not have {r} elements")));
        }
        bases.push(bits::from_elems(idx));
    }
    let m = Matroid::from_bases(labels, bases)?;
    Ok((name, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::letters;

    #[test]
    fn round_trip() {
        let m = Matroid::uniform(2, letters(4)).unwrap();
        let t = m.to_text("U24");
        assert_eq!(t, "matroid U24\nground a b c d\nrank 2\nbases ab ac ad bc bd cd\n");
        let (name, back) = Matroid::parse_text(&t).unwrap();
        assert_eq!(name, "U24");
        assert!(back.same_as(&m));
    }

    #[test]
    fn multi_character_labels() {
        let labels: Vec<String> = ["x1", "x10", "y"].iter().map(|s| s.to_string()).collect();
        assert_eq!(split_word(&labels, "x10x1").unwrap(), vec![1, 0]);
        assert!(split_word(&labels, "x2").is_err());
    }

    #[test]
    fn rejects_bad_files() {
        let bad = "matroid bad\nground a b c d\nrank 2\nbases ab cd\n";
        assert!(matches!(Matroid::parse_text(bad), Err(Error::Exchange(..))));
        let wrong = "matroid w\nground a b\nrank 1\nbases ab\n";
        assert!(matches!(Matroid::parse_text(wrong), Err(Error::Parse { line: 4, col: 7, .. })));
        let rank0 = "matroid z\nground a\nrank 0\nbases -\n";
        assert_eq!(Matroid::parse_text(rank0).unwrap().1.rank(), 0);
    }
}
