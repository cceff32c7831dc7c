//! Element literals: a small expression language over integers and one symbol.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer | symbol | '(' expr ')'
//! exponent := '-'? integer | '(' '-'? integer ')'
//! ```
//!
//! Negative exponents are allowed on units only.

use super::{NrValue, PartialFieldId, PfValue};
use crate::error::{Error, Result};

struct Parser {
    field: PartialFieldId,
    symbol: Option<char>,
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

impl Parser {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col0 + self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>().map_err(|_| self.err("integer out of range"))
    }

    fn expr(&mut self) -> Result<PfValue> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<PfValue> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<PfValue> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let k = self.integer()?;
        if paren && !self.eat(')') {
            return Err(self.err("expected `)`"));
        }
        Ok(if neg { -k } else { k })
    }

    fn power(&mut self) -> Result<PfValue> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.pos;
            let e = self.exponent()?;
            return base.pow(e).map_err(|_| {
                Error::parse(
                    self.line,
                    self.col0 + at + 1,
                    "negative exponent on a non-unit",
                )
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PfValue> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(PfValue::from_int(self.field, self.integer()?)),
            Some(c) if Some(c) == self.symbol => {
                self.pos += 1;
                Ok(symbol_value(self.field))
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of literal")),
        }
    }
}

fn symbol_value(field: PartialFieldId) -> PfValue {
    match field {
        PartialFieldId::Gf4 => PfValue::Binary { deg: 2, bits: 2 },
        PartialFieldId::Gf8 => PfValue::Binary { deg: 3, bits: 2 },
        PartialFieldId::SixthRoots => PfValue::Sixth { a: 0, b: 1 },
        PartialFieldId::NearRegular => PfValue::NearRegular(NrValue::alpha()),
        _ => unreachable!("field without a symbol"),
    }
}

/// Parses a literal, reporting errors at `line` with columns offset by `col0`.
pub(crate) fn parse_value_at(
    field: PartialFieldId,
    s: &str,
    line: usize,
    col0: usize,
) -> Result<PfValue> {
    let mut p = Parser {
        field,
        symbol: field.symbol(),
        chars: s.chars().collect(),
        pos: 0,
        line,
        col0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing characters"));
    }
    Ok(v)
}

pub(crate) fn parse_value(field: PartialFieldId, s: &str) -> Result<PfValue> {
    parse_value_at(field, s, 1, 0)
}

fn pow_suffix(name: &str, e: i64) -> String {
    match e {
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

/// Formats a polynomial with integer coefficients, highest degree first.
fn format_poly(coeffs: &[i128], sym: char) -> String {
    let mut out = String::new();
    for (d, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let neg = c < 0;
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mono = pow_suffix(&sym.to_string(), d as i64);
        match (d, mag) {
            (0, m) => out.push_str(&m.to_string()),
            (_, 1) => out.push_str(&mono),
            (_, m) => out.push_str(&format!("{m}*{mono}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical literal of a value; `parse_value` inverts it.
pub(crate) fn format_value(v: &PfValue) -> String {
    match v {
        PfValue::Prime { v, .. } => v.to_string(),
        PfValue::Binary { deg, bits } => {
            let coeffs: Vec<i128> = (0..*deg).map(|k| (bits >> k & 1) as i128).collect();
            format_poly(&coeffs, 'w')
        }
        PfValue::Regular(n) => n.to_string(),
        PfValue::Dyadic { m, e } => match (*m, *e) {
            (0, _) => "0".into(),
            (m, 0) => m.to_string(),
            (1, e) => format!("2^{e}"),
            (-1, e) => format!("-2^{e}"),
            (m, e) => format!("{m}*2^{e}"),
        },
        PfValue::Sixth { a, b } => {
            if v.is_unit() {
                const NAMES: [&str; 6] = ["1", "z", "z^2", "-1", "-z", "-z^2"];
                let k = (0..6)
                    .find(|&k| PfValue::sixth_root_power(k) == *v)
                    .expect("unit is a sixth root of unity");
                NAMES[k as usize].to_string()
            } else {
                format_poly(&[*a as i128, *b as i128], 'z')
            }
        }
        PfValue::NearRegular(x) => format_nr(x),
    }
}

fn format_nr(x: &NrValue) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let (i, j) = x.exponents();
    let mut factors = Vec::new();
    if i != 0 {
        factors.push(pow_suffix("a", i as i64));
    }
    if j != 0 {
        factors.push(pow_suffix("(1-a)", j as i64));
    }
    let poly = x.poly();
    if x.is_unit() {
        let sign = if poly[0] < 0 { "-" } else { "" };
        if factors.is_empty() {
            return format!("{sign}1");
        }
        return format!("{sign}{}", factors.join("*"));
    }
    let p = format_poly(poly, 'a');
    if factors.is_empty() {
        p
    } else {
        format!("({p})*{}", factors.join("*"))
    }
}
