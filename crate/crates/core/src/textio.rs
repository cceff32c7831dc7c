//! Shared tokenizer for the line-oriented file formats, and the matrix parser.
//!
//! Blank lines and text after `#` are ignored. Columns are 1-based.

use crate::error::{Error, Result};
use crate::pfield::{PartialField, PartialFieldId};
use crate::pmatrix::LabeledMatrix;

type Tokens = Vec<(usize, String)>;

pub(crate) struct Lines {
    lines: Vec<(usize, Tokens)>,
    pos: usize,
    last_line: usize,
}

fn tokenize(line: &str) -> Tokens {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, content[s..i].to_string()));
                start = None;
            }
            _ => {}
        }
    }
    out
}

impl Lines {
    pub(crate) fn new(text: &str) -> Self {
        let lines: Vec<(usize, Tokens)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, tokenize(l)))
            .filter(|(_, t)| !t.is_empty())
            .collect();
        let last_line = text.lines().count().max(1);
        Lines {
            lines,
            pos: 0,
            last_line,
        }
    }

    /// The next non-blank line, which must start with `kw`; returns the
    /// remaining tokens.
    pub(crate) fn expect_keyword(&mut self, kw: &str) -> Result<(usize, Tokens)> {
        let Some((ln, toks)) = self.lines.get(self.pos).cloned() else {
            return Err(Error::parse(self.last_line, 1, format!("expected `{kw}`, found end of input")));
        };
        if toks[0].1 != kw {
            return Err(Error::parse(ln, toks[0].0, format!("expected `{kw}`, found `{}`", toks[0].1)));
        }
        self.pos += 1;
        Ok((ln, toks[1..].to_vec()))
    }

    pub(crate) fn next_line(&mut self) -> Option<(usize, Tokens)> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l
    }

    pub(crate) fn expect_end(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some((ln, toks)) => Err(Error::parse(*ln, toks[0].0, "unexpected trailing content")),
        }
    }
}

pub(crate) fn parse_matrix(text: &str) -> Result<(String, LabeledMatrix)> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.expect_keyword("pmatrix")?;
    let (name, field) = match header.as_slice() {
        [(_, n), (_, over), (c, f)] if over == "over" => {
            let id = PartialFieldId::parse(f).map_err(|e| Error::parse(ln, *c, e.to_string()))?;
            (n.clone(), PartialField::new(id)?)
        }
        _ => return Err(Error::parse(ln, 1, "expected `pmatrix <name> over <field>`")),
    };
    let (_, rows) = lines.expect_keyword("rows")?;
    let (_, cols) = lines.expect_keyword("cols")?;
    let rows: Vec<String> = rows.into_iter().map(|(_, l)| l).collect();
    let cols: Vec<String> = cols.into_iter().map(|(_, l)| l).collect();
    let mut data = Vec::new();
    for r in &rows {
        let Some((ln, toks)) = lines.next_line() else {
            return Err(Error::parse(lines.last_line, 1, format!("missing row `{r}`")));
        };
        let head = &toks[0];
        if head.1 != format!("{r}:") {
            return Err(Error::parse(ln, head.0, format!("expected `{r}:`")));
        }
        if toks.len() - 1 != cols.len() {
            return Err(Error::parse(
                ln,
                head.0,
                format!("row `{r}` has {} entries, expected {}", toks.len() - 1, cols.len()),
            ));
        }
        let vals = toks[1..]
            .iter()
            .map(|(c, lit)| crate::pfield::parse_value_at(field.id(), lit, ln, c - 1))
            .collect::<Result<Vec<_>>>()?;
        data.push(vals);
    }
    lines.expect_end()?;
    let m = LabeledMatrix::from_rows(field.id(), rows, cols, data)?;
    Ok((name, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_reports_columns() {
        let t = "# demo\npmatrix A over gf5\nrows x1 x2\ncols y1 y2\nx1: 1 1\nx2: 1 2 # last\n";
        let (name, m) = parse_matrix(t).unwrap();
        assert_eq!(name, "A");
        assert_eq!(m.rank(), 2);
        let bad = "pmatrix A over gf5\nrows x1\ncols y1 y2\nx1: 1 q\n";
        match parse_matrix(bad) {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (4, 7)),
            other => panic!("{other:?}"),
        }
        assert!(parse_matrix("pmatrix A over gf6\nrows\ncols\n").is_err());
    }

    #[test]
    fn regular_non_unit_entries_are_accepted() {
        let t = "pmatrix A over regular\nrows x\ncols y\nx: 2\n";
        let (_, m) = parse_matrix(t).unwrap();
        assert!(!m.is_pmatrix().verdict);
    }
}
