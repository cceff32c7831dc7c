//! Elements of Z[a, 1/a, 1/(1-a)].
//!
//! A nonzero element is stored as `P(a) * a^i * (1-a)^j` where `P` has integer
//! coefficients and is divisible by neither `a` nor `1-a`. Both are primes of
//! Z[a], so this form is unique.

use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NrValue {
    /// Coefficients of `P`, lowest degree first, no trailing zeros. Empty for zero.
    pub(crate) poly: Vec<i128>,
    pub(crate) a_exp: i32,
    pub(crate) b_exp: i32,
}

impl NrValue {
    pub fn zero() -> Self {
        NrValue {
            poly: Vec::new(),
            a_exp: 0,
            b_exp: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_parts(vec![n as i128], 0, 0)
    }

    /// `sign * a^i * (1-a)^j`.
    pub fn unit(sign: i64, i: i32, j: i32) -> Self {
        Self::from_parts(vec![sign.signum() as i128], i, j)
    }

    pub fn alpha() -> Self {
        Self::unit(1, 1, 0)
    }

    pub fn from_parts(poly: Vec<i128>, a_exp: i32, b_exp: i32) -> Self {
        let mut v = NrValue {
            poly,
            a_exp,
            b_exp,
        };
        v.normalize();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }

    /// True for `±a^i(1-a)^j`.
    pub fn is_unit(&self) -> bool {
        self.poly.len() == 1 && self.poly[0].abs() == 1
    }

    pub fn poly(&self) -> &[i128] {
        &self.poly
    }

    pub fn exponents(&self) -> (i32, i32) {
        (self.a_exp, self.b_exp)
    }

    fn normalize(&mut self) {
        trim(&mut self.poly);
        if self.poly.is_empty() {
            self.a_exp = 0;
            self.b_exp = 0;
            return;
        }
        while self.poly[0] == 0 {
            self.poly.remove(0);
            self.a_exp += 1;
        }
        loop {
            let at_one: i128 = self.poly.iter().sum();
            if at_one != 0 {
                break;
            }
            // P = (a - 1) Q by synthetic division, so P = (1 - a)(-Q).
            let n = self.poly.len();
            let mut q = vec![0i128; n - 1];
            let mut carry = 0i128;
            for k in (1..n).rev() {
                carry += self.poly[k];
                q[k - 1] = carry;
            }
            self.poly = q.into_iter().map(|c| -c).collect();
            self.b_exp += 1;
        }
        // Common integer content stays in P: integers other than ±1 are not units.
    }

    pub fn neg(&self) -> Self {
        NrValue {
            poly: self.poly.iter().map(|c| -c).collect(),
            a_exp: self.a_exp,
            b_exp: self.b_exp,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let i = self.a_exp.min(other.a_exp);
        let j = self.b_exp.min(other.b_exp);
        let p = shift(&self.poly, self.a_exp - i, self.b_exp - j);
        let q = shift(&other.poly, other.a_exp - i, other.b_exp - j);
        Self::from_parts(poly_add(&p, &q), i, j)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_parts(
            poly_mul(&self.poly, &other.poly),
            self.a_exp + other.a_exp,
            self.b_exp + other.b_exp,
        )
    }

    pub fn inv(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        Some(NrValue {
            poly: self.poly.clone(),
            a_exp: -self.a_exp,
            b_exp: -self.b_exp,
        })
    }

    /// Exact division in the ring, `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = poly_div_exact(&self.poly, &other.poly)?;
        Some(Self::from_parts(
            q,
            self.a_exp - other.a_exp,
            self.b_exp - other.b_exp,
        ))
    }

    /// Integer power of a unit, or a nonnegative power of anything.
    pub fn pow(&self, e: i32) -> Option<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::from_int(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Some(acc)
    }

    /// Total order used only for deterministic sorting.
    pub fn sort_key(&self) -> (i32, i32, Vec<i128>) {
        (self.a_exp, self.b_exp, self.poly.clone())
    }
}

impl PartialOrd for NrValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NrValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

fn trim(p: &mut Vec<i128>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// `p * a^di * (1-a)^dj` for `di, dj >= 0`.
fn shift(p: &[i128], di: i32, dj: i32) -> Vec<i128> {
    let mut out: Vec<i128> = vec![0; di as usize];
    out.extend_from_slice(p);
    for _ in 0..dj {
        out = poly_mul(&out, &[1, -1]);
    }
    out
}

pub(crate) fn poly_add(p: &[i128], q: &[i128]) -> Vec<i128> {
    let n = p.len().max(q.len());
    let mut out: Vec<i128> = (0..n)
        .map(|k| p.get(k).copied().unwrap_or(0) + q.get(k).copied().unwrap_or(0))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn poly_mul(p: &[i128], q: &[i128]) -> Vec<i128> {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(&mut out);
    out
}

fn poly_div_exact(p: &[i128], d: &[i128]) -> Option<Vec<i128>> {
    let mut rem = p.to_vec();
    trim(&mut rem);
    let dl = *d.last()?;
    if rem.len() < d.len() {
        return if rem.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut q = vec![0i128; rem.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let top = rem[k + d.len() - 1];
        if top % dl != 0 {
            return None;
        }
        let c = top / dl;
        q[k] = c;
        for (i, di) in d.iter().enumerate() {
            rem[k + i] -= c * di;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_minus_alpha_is_a_unit() {
        let one = NrValue::from_int(1);
        let b = one.add(&NrValue::alpha().neg());
        assert_eq!(b, NrValue::unit(1, 0, 1));
        assert!(b.is_unit());
    }

    #[test]
    fn alpha_plus_one_is_not_a_unit() {
        let v = NrValue::alpha().add(&NrValue::from_int(1));
        assert!(!v.is_unit());
        assert_eq!(v.poly(), &[1, 1]);
    }

    #[test]
    fn factors_are_extracted() {
        // a^2 - a = -a(1-a)
        let v = NrValue::from_parts(vec![0, -1, 1], 0, 0);
        assert_eq!(v, NrValue::unit(-1, 1, 1));
    }

    #[test]
    fn exact_division() {
        let p = NrValue::from_parts(vec![2, 3, 1], 0, 0); // (a+1)(a+2)
        let d = NrValue::from_parts(vec![1, 1], 0, 0);
        assert_eq!(p.div_exact(&d), Some(NrValue::from_parts(vec![2, 1], 0, 0)));
        assert_eq!(d.div_exact(&NrValue::from_int(2)), None);
    }
}
