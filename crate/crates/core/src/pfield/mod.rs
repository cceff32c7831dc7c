//! Partial fields and exact arithmetic in their ambient rings.
//!
//! A partial field is a commutative ring together with a subgroup of its units
//! containing `-1`. Its elements are zero and the members of that subgroup.
//! Sums and products are always computed in the ambient ring; [`PfValue::is_member`]
//! decides whether a ring element lies in the partial field.

mod hom;
mod literal;
mod nearreg;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub use hom::{hom_apply, Automorphism, Homomorphism};
pub use nearreg::NrValue;
pub(crate) use literal::parse_value_at;

/// The supported partial fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartialFieldId {
    /// The prime field of order `p`.
    Prime(u32),
    /// GF(4) = GF(2)[w] / (w^2 + w + 1).
    Gf4,
    /// GF(8) = GF(2)[w] / (w^3 + w + 1).
    Gf8,
    /// (Z, {1, -1}).
    Regular,
    /// (Z[1/2], <-1, 2>).
    Dyadic,
    /// (Z[z], <z>) with z^2 - z + 1 = 0.
    SixthRoots,
    /// (Z[a, 1/a, 1/(1-a)], <-1, a, 1-a>).
    NearRegular,
}

impl PartialFieldId {
    /// Parses identifiers such as `gf5`, `gf4`, `regular`, `dyadic`,
    /// `sixthroots`, `nearregular`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace(['(', ')', '-', '_'], "");
        let id = match t.as_str() {
            "gf4" => PartialFieldId::Gf4,
            "gf8" => PartialFieldId::Gf8,
            "regular" | "reg" => PartialFieldId::Regular,
            "dyadic" | "d" => PartialFieldId::Dyadic,
            "sixthroots" | "sru" | "s" => PartialFieldId::SixthRoots,
            "nearregular" | "u1" | "nreg" => PartialFieldId::NearRegular,
            _ => {
                let p = t
                    .strip_prefix("gf")
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(|| Error::UnsupportedField(s.to_string()))?;
                PartialFieldId::Prime(p)
            }
        };
        PartialField::new(id)?;
        Ok(id)
    }

    pub fn is_finite(self) -> bool {
        matches!(
            self,
            PartialFieldId::Prime(_) | PartialFieldId::Gf4 | PartialFieldId::Gf8
        )
    }

    /// Whether the unit group is finite, so that unit enumeration is exhaustive.
    pub fn has_finite_units(self) -> bool {
        self.is_finite() || matches!(self, PartialFieldId::Regular | PartialFieldId::SixthRoots)
    }

    /// Name of the adjoined symbol in element literals, if any.
    pub fn symbol(self) -> Option<char> {
        match self {
            PartialFieldId::Gf4 | PartialFieldId::Gf8 => Some('w'),
            PartialFieldId::SixthRoots => Some('z'),
            PartialFieldId::NearRegular => Some('a'),
            _ => None,
        }
    }
}

impl fmt::Display for PartialFieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartialFieldId::Prime(p) => write!(f, "gf{p}"),
            PartialFieldId::Gf4 => write!(f, "gf4"),
            PartialFieldId::Gf8 => write!(f, "gf8"),
            PartialFieldId::Regular => write!(f, "regular"),
            PartialFieldId::Dyadic => write!(f, "dyadic"),
            PartialFieldId::SixthRoots => write!(f, "sixthroots"),
            PartialFieldId::NearRegular => write!(f, "nearregular"),
        }
    }
}

/// Largest supported prime order.
const MAX_PRIME: u32 = 1 << 15;

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// A validated partial field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartialField {
    id: PartialFieldId,
}

impl PartialField {
    pub fn new(id: PartialFieldId) -> Result<Self> {
        if let PartialFieldId::Prime(p) = id {
            if !is_prime(p) || p > MAX_PRIME {
                return Err(Error::UnsupportedField(format!("GF({p})")));
            }
        }
        Ok(PartialField { id })
    }

    pub fn id(&self) -> PartialFieldId {
        self.id
    }

    pub fn zero(&self) -> PfValue {
        PfValue::zero(self.id)
    }

    pub fn one(&self) -> PfValue {
        PfValue::from_int(self.id, 1)
    }

    pub fn from_int(&self, n: i64) -> PfValue {
        PfValue::from_int(self.id, n)
    }

    /// The adjoined generator (`w`, `z` or `a`), if the field has one.
    pub fn generator(&self) -> Option<PfValue> {
        Some(match self.id {
            PartialFieldId::Gf4 => PfValue::Binary { deg: 2, bits: 2 },
            PartialFieldId::Gf8 => PfValue::Binary { deg: 3, bits: 2 },
            PartialFieldId::SixthRoots => PfValue::Sixth { a: 0, b: 1 },
            PartialFieldId::NearRegular => PfValue::NearRegular(NrValue::alpha()),
            _ => return None,
        })
    }

    /// Whether `v` is zero or a member of the distinguished unit group.
    pub fn contains(&self, v: &PfValue) -> bool {
        v.field() == self.id && v.is_member()
    }

    /// All elements of a finite field, zero first.
    pub fn elements(&self) -> Option<Vec<PfValue>> {
        let mut out = vec![self.zero()];
        out.extend(self.units(0).ok()?);
        if self.id.is_finite() {
            Some(out)
        } else {
            None
        }
    }

    /// The units of the partial field in a deterministic order. For partial
    /// fields with an infinite unit group, generator exponents are bounded by
    /// `bound` in absolute value; otherwise `bound` is ignored.
    pub fn units(&self, bound: u32) -> Result<Vec<PfValue>> {
        let b = bound as i32;
        let out = match self.id {
            PartialFieldId::Prime(p) => (1..p).map(|v| PfValue::Prime { p, v }).collect(),
            PartialFieldId::Gf4 => (1..4).map(|bits| PfValue::Binary { deg: 2, bits }).collect(),
            PartialFieldId::Gf8 => (1..8).map(|bits| PfValue::Binary { deg: 3, bits }).collect(),
            PartialFieldId::Regular => vec![PfValue::Regular(1), PfValue::Regular(-1)],
            PartialFieldId::SixthRoots => (0..6).map(PfValue::sixth_root_power).collect(),
            PartialFieldId::Dyadic => {
                let mut v = Vec::new();
                for e in -b..=b {
                    v.push(PfValue::Dyadic { m: 1, e });
                    v.push(PfValue::Dyadic { m: -1, e });
                }
                v
            }
            PartialFieldId::NearRegular => {
                let mut v = Vec::new();
                for i in -b..=b {
                    for j in -b..=b {
                        v.push(PfValue::NearRegular(NrValue::unit(1, i, j)));
                        v.push(PfValue::NearRegular(NrValue::unit(-1, i, j)));
                    }
                }
                v
            }
        };
        Ok(out)
    }

    pub fn parse(&self, s: &str) -> Result<PfValue> {
        literal::parse_value(self.id, s)
    }

    pub fn automorphisms(&self) -> Vec<Automorphism> {
        Automorphism::all(self.id)
    }

    pub fn homomorphisms(&self) -> Vec<Homomorphism> {
        Homomorphism::all_from(self.id)
    }
}

/// Builds the partial field object for `id`.
pub fn make_partial_field(id: PartialFieldId) -> Result<PartialField> {
    PartialField::new(id)
}

/// An element of the ambient ring of a partial field, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PfValue {
    /// Residue `v` modulo the prime `p`.
    Prime { p: u32, v: u32 },
    /// Polynomial over GF(2) in `w` of degree `< deg`, bit `k` holding the
    /// coefficient of `w^k`.
    Binary { deg: u8, bits: u8 },
    Regular(i64),
    /// `m * 2^e` with `m` odd, or `m = e = 0` for zero.
    Dyadic { m: i64, e: i32 },
    /// `a + b z` with `z^2 = z - 1`.
    Sixth { a: i64, b: i64 },
    NearRegular(NrValue),
}

const GF4_MODULUS: u16 = 0b111;
const GF8_MODULUS: u16 = 0b1011;

fn gf2_mul(x: u8, y: u8, deg: u8) -> u8 {
    let modulus = if deg == 2 { GF4_MODULUS } else { GF8_MODULUS };
    let mut acc: u16 = 0;
    for k in 0..deg {
        if y >> k & 1 == 1 {
            acc ^= (x as u16) << k;
        }
    }
    for k in (deg..2 * deg).rev() {
        if acc >> k & 1 == 1 {
            acc ^= modulus << (k - deg);
        }
    }
    acc as u8
}

fn mod_pow(base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut b = base % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl PfValue {
    pub fn zero(field: PartialFieldId) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: PartialFieldId) -> Self {
        Self::from_int(field, 1)
    }

    /// The image of the integer `n` in the ambient ring.
    pub fn from_int(field: PartialFieldId, n: i64) -> Self {
        match field {
            PartialFieldId::Prime(p) => PfValue::Prime {
                p,
                v: n.rem_euclid(p as i64) as u32,
            },
            PartialFieldId::Gf4 => PfValue::Binary {
                deg: 2,
                bits: (n & 1) as u8,
            },
            PartialFieldId::Gf8 => PfValue::Binary {
                deg: 3,
                bits: (n & 1) as u8,
            },
            PartialFieldId::Regular => PfValue::Regular(n),
            PartialFieldId::Dyadic => Self::dyadic(n as i128, 0),
            PartialFieldId::SixthRoots => PfValue::Sixth { a: n, b: 0 },
            PartialFieldId::NearRegular => PfValue::NearRegular(NrValue::from_int(n)),
        }
    }

    /// Canonical `m * 2^e`.
    pub fn dyadic(m: i128, e: i32) -> Self {
        if m == 0 {
            return PfValue::Dyadic { m: 0, e: 0 };
        }
        let tz = m.trailing_zeros() as i32;
        PfValue::Dyadic {
            m: (m >> tz) as i64,
            e: e + tz,
        }
    }

    /// `z^k` in the sixth-roots ring.
    pub fn sixth_root_power(k: i32) -> Self {
        let (a, b) = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)][k.rem_euclid(6) as usize];
        PfValue::Sixth { a, b }
    }

    pub fn field(&self) -> PartialFieldId {
        match self {
            PfValue::Prime { p, .. } => PartialFieldId::Prime(*p),
            PfValue::Binary { deg: 2, .. } => PartialFieldId::Gf4,
            PfValue::Binary { .. } => PartialFieldId::Gf8,
            PfValue::Regular(_) => PartialFieldId::Regular,
            PfValue::Dyadic { .. } => PartialFieldId::Dyadic,
            PfValue::Sixth { .. } => PartialFieldId::SixthRoots,
            PfValue::NearRegular(_) => PartialFieldId::NearRegular,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            PfValue::Prime { v, .. } => *v == 0,
            PfValue::Binary { bits, .. } => *bits == 0,
            PfValue::Regular(n) => *n == 0,
            PfValue::Dyadic { m, .. } => *m == 0,
            PfValue::Sixth { a, b } => *a == 0 && *b == 0,
            PfValue::NearRegular(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.field())
    }

    /// Membership in the distinguished unit group.
    pub fn is_unit(&self) -> bool {
        match self {
            PfValue::Prime { v, .. } => *v != 0,
            PfValue::Binary { bits, .. } => *bits != 0,
            PfValue::Regular(n) => n.abs() == 1,
            PfValue::Dyadic { m, .. } => m.abs() == 1,
            PfValue::Sixth { a, b } => a * a + a * b + b * b == 1,
            PfValue::NearRegular(x) => x.is_unit(),
        }
    }

    /// Whether the value is an element of the partial field (zero or a unit).
    pub fn is_member(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    fn check_same(&self, other: &Self) {
        if self.field() != other.field() {
            panic!(
                "arithmetic across partial fields: {} and {}",
                self.field(),
                other.field()
            );
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        match (self, other) {
            (PfValue::Prime { p, v }, PfValue::Prime { v: w, .. }) => PfValue::Prime {
                p: *p,
                v: ((*v as u64 + *w as u64) % *p as u64) as u32,
            },
            (PfValue::Binary { deg, bits }, PfValue::Binary { bits: c, .. }) => PfValue::Binary {
                deg: *deg,
                bits: bits ^ c,
            },
            (PfValue::Regular(x), PfValue::Regular(y)) => PfValue::Regular(x + y),
            (PfValue::Dyadic { m, e }, PfValue::Dyadic { m: n, e: f }) => {
                if *m == 0 {
                    return other.clone();
                }
                if *n == 0 {
                    return self.clone();
                }
                let lo = (*e).min(*f);
                let x = (*m as i128) << (e - lo);
                let y = (*n as i128) << (f - lo);
                Self::dyadic(x + y, lo)
            }
            (PfValue::Sixth { a, b }, PfValue::Sixth { a: c, b: d }) => PfValue::Sixth {
                a: a + c,
                b: b + d,
            },
            (PfValue::NearRegular(x), PfValue::NearRegular(y)) => PfValue::NearRegular(x.add(y)),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            PfValue::Prime { p, v } => PfValue::Prime {
                p: *p,
                v: (*p - *v) % *p,
            },
            PfValue::Binary { .. } => self.clone(),
            PfValue::Regular(x) => PfValue::Regular(-x),
            PfValue::Dyadic { m, e } => PfValue::Dyadic { m: -m, e: *e },
            PfValue::Sixth { a, b } => PfValue::Sixth { a: -a, b: -b },
            PfValue::NearRegular(x) => PfValue::NearRegular(x.neg()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        match (self, other) {
            (PfValue::Prime { p, v }, PfValue::Prime { v: w, .. }) => PfValue::Prime {
                p: *p,
                v: ((*v as u64 * *w as u64) % *p as u64) as u32,
            },
            (PfValue::Binary { deg, bits }, PfValue::Binary { bits: c, .. }) => PfValue::Binary {
                deg: *deg,
                bits: gf2_mul(*bits, *c, *deg),
            },
            (PfValue::Regular(x), PfValue::Regular(y)) => PfValue::Regular(x * y),
            (PfValue::Dyadic { m, e }, PfValue::Dyadic { m: n, e: f }) => {
                if *m == 0 || *n == 0 {
                    return Self::dyadic(0, 0);
                }
                PfValue::Dyadic { m: m * n, e: e + f }
            }
            (PfValue::Sixth { a, b }, PfValue::Sixth { a: c, b: d }) => PfValue::Sixth {
                a: a * c - b * d,
                b: a * d + b * c + b * d,
            },
            (PfValue::NearRegular(x), PfValue::NearRegular(y)) => PfValue::NearRegular(x.mul(y)),
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse; defined exactly for the units of the partial field.
    /// For the finite fields every nonzero element qualifies.
    pub fn inv(&self) -> Result<Self> {
        let fail = || Error::NotInvertible(format!("{} in {}", self, self.field()));
        if !self.is_unit() {
            return Err(fail());
        }
        Ok(match self {
            PfValue::Prime { p, v } => PfValue::Prime {
                p: *p,
                v: mod_pow(*v as u64, *p as u64 - 2, *p as u64) as u32,
            },
            PfValue::Binary { deg, bits } => {
                let inv = (1..1u8 << deg)
                    .find(|c| gf2_mul(*bits, *c, *deg) == 1)
                    .ok_or_else(fail)?;
                PfValue::Binary {
                    deg: *deg,
                    bits: inv,
                }
            }
            PfValue::Regular(x) => PfValue::Regular(*x),
            PfValue::Dyadic { m, e } => PfValue::Dyadic { m: *m, e: -e },
            // 1/(a + bz) = conj / norm with conj(a + bz) = (a + b) - bz and norm 1.
            PfValue::Sixth { a, b } => PfValue::Sixth { a: a + b, b: -b },
            PfValue::NearRegular(x) => PfValue::NearRegular(x.inv().ok_or_else(fail)?),
        })
    }

    /// Exact quotient in the ambient ring: returns `q` with `q * other == self`,
    /// or an error if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        self.check_same(other);
        let fail = || Error::NotInvertible(format!("{other} does not divide {self}"));
        if other.is_zero() {
            return Err(fail());
        }
        match (self, other) {
            (PfValue::Prime { .. }, _) | (PfValue::Binary { .. }, _) => Ok(self.mul(&other.inv()?)),
            (PfValue::Regular(x), PfValue::Regular(y)) => {
                if x % y == 0 {
                    Ok(PfValue::Regular(x / y))
                } else {
                    Err(fail())
                }
            }
            (PfValue::Dyadic { m, e }, PfValue::Dyadic { m: n, e: f }) => {
                if m % n == 0 {
                    Ok(Self::dyadic((m / n) as i128, e - f))
                } else {
                    Err(fail())
                }
            }
            (PfValue::Sixth { .. }, PfValue::Sixth { a: c, b: d }) => {
                let norm = c * c + c * d + d * d;
                let conj = PfValue::Sixth { a: c + d, b: -d };
                match self.mul(&conj) {
                    PfValue::Sixth { a: x, b: y } if x % norm == 0 && y % norm == 0 => {
                        Ok(PfValue::Sixth {
                            a: x / norm,
                            b: y / norm,
                        })
                    }
                    _ => Err(fail()),
                }
            }
            (PfValue::NearRegular(x), PfValue::NearRegular(y)) => {
                x.div_exact(y).map(PfValue::NearRegular).ok_or_else(fail)
            }
            _ => unreachable!(),
        }
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one(self.field());
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// A total order used for deterministic sorting of values.
    pub fn sort_key(&self) -> (u8, i128, i128, Vec<i128>) {
        match self {
            PfValue::Prime { v, .. } => (0, *v as i128, 0, vec![]),
            PfValue::Binary { bits, .. } => (1, *bits as i128, 0, vec![]),
            PfValue::Regular(x) => (2, *x as i128, 0, vec![]),
            PfValue::Dyadic { m, e } => (3, *e as i128, *m as i128, vec![]),
            PfValue::Sixth { a, b } => (4, *a as i128, *b as i128, vec![]),
            PfValue::NearRegular(x) => (5, x.a_exp as i128, x.b_exp as i128, x.poly.clone()),
        }
    }
}

impl fmt::Display for PfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&literal::format_value(self))
    }
}

impl PartialOrd for PfValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PfValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl<'a> Add<&'a PfValue> for &'a PfValue {
    type Output = PfValue;
    fn add(self, rhs: &'a PfValue) -> PfValue {
        PfValue::add(self, rhs)
    }
}

impl<'a> Sub<&'a PfValue> for &'a PfValue {
    type Output = PfValue;
    fn sub(self, rhs: &'a PfValue) -> PfValue {
        PfValue::sub(self, rhs)
    }
}

impl<'a> Mul<&'a PfValue> for &'a PfValue {
    type Output = PfValue;
    fn mul(self, rhs: &'a PfValue) -> PfValue {
        PfValue::mul(self, rhs)
    }
}

impl Neg for &PfValue {
    type Output = PfValue;
    fn neg(self) -> PfValue {
        PfValue::neg(self)
    }
}

/// Ring operation selector for [`ring_arithmetic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// Applies `op` to `p` (and `q` for the binary operations).
pub fn ring_arithmetic(p: &PfValue, q: &PfValue, op: RingOp) -> Result<PfValue> {
    if matches!(op, RingOp::Add | RingOp::Mul) && p.field() != q.field() {
        return Err(Error::FieldMismatch(
            p.field().to_string(),
            q.field().to_string(),
        ));
    }
    match op {
        RingOp::Add => Ok(p.add(q)),
        RingOp::Mul => Ok(p.mul(q)),
        RingOp::Neg => Ok(p.neg()),
        RingOp::Inv => p.inv(),
    }
}
