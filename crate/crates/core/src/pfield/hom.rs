//! The fixed catalog of partial-field homomorphisms and automorphisms.

use std::fmt;

use super::{NrValue, PartialField, PartialFieldId, PfValue};
use crate::error::{Error, Result};

/// Image of an integer in `to`.
fn int_image(to: PartialFieldId, c: i128) -> PfValue {
    match to {
        PartialFieldId::Prime(p) => PfValue::from_int(to, c.rem_euclid(p as i128) as i64),
        PartialFieldId::Gf4 | PartialFieldId::Gf8 => PfValue::from_int(to, (c & 1) as i64),
        _ => PfValue::from_int(to, c as i64),
    }
}

/// Evaluates `P(g) * g^i * (1-g)^j` in the ring of `g`.
fn eval_nr(x: &NrValue, g: &PfValue) -> Result<PfValue> {
    let to = g.field();
    if x.is_zero() {
        return Ok(PfValue::zero(to));
    }
    let mut acc = PfValue::zero(to);
    for &c in x.poly().iter().rev() {
        acc = acc.mul(g).add(&int_image(to, c));
    }
    let (i, j) = x.exponents();
    let h = PfValue::one(to).sub(g);
    Ok(acc.mul(&g.pow(i as i64)?).mul(&h.pow(j as i64)?))
}

/// A homomorphism from a partial field to another one, determined by the image
/// of the adjoined generator (if the source has one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    from: PartialFieldId,
    to: PartialFieldId,
    generator: Option<PfValue>,
}

impl Homomorphism {
    /// Validates and builds a homomorphism. Sources with an adjoined generator
    /// need its image; the others need `None`.
    pub fn new(from: PartialFieldId, to: PartialFieldId, generator: Option<PfValue>) -> Result<Self> {
        PartialField::new(from)?;
        PartialField::new(to)?;
        let bad = |why: &str| Error::UnsupportedField(format!("no homomorphism {from} -> {to}: {why}"));
        if let Some(g) = &generator {
            if g.field() != to {
                return Err(bad("generator image lies in the wrong field"));
            }
        }
        match (from, &generator) {
            (f, None) if f == to => {}
            (PartialFieldId::Regular, None) if to.is_finite() => {}
            (PartialFieldId::Dyadic, None) => {
                if !matches!(to, PartialFieldId::Prime(p) if p != 2) {
                    return Err(bad("2 must stay invertible"));
                }
            }
            (PartialFieldId::SixthRoots, Some(g)) if to.is_finite() => {
                // z^2 - z + 1 = 0
                let v = g.mul(g).sub(g).add(&PfValue::one(to));
                if !v.is_zero() {
                    return Err(bad("image is not a primitive sixth root of unity"));
                }
            }
            (PartialFieldId::NearRegular, Some(g)) if to.is_finite() => {
                if g.is_zero() || g.is_one() {
                    return Err(bad("a must avoid 0 and 1"));
                }
            }
            _ => return Err(bad("unsupported pair")),
        }
        Ok(Homomorphism {
            from,
            to,
            generator,
        })
    }

    pub fn source(&self) -> PartialFieldId {
        self.from
    }

    pub fn target(&self) -> PartialFieldId {
        self.to
    }

    /// The built-in homomorphisms out of `from`, in a fixed order.
    pub fn all_from(from: PartialFieldId) -> Vec<Homomorphism> {
        let targets: &[PartialFieldId] = &[
            PartialFieldId::Prime(2),
            PartialFieldId::Prime(3),
            PartialFieldId::Gf4,
            PartialFieldId::Prime(5),
            PartialFieldId::Prime(7),
            PartialFieldId::Gf8,
        ];
        let mut out = Vec::new();
        match from {
            PartialFieldId::Prime(_) | PartialFieldId::Gf4 | PartialFieldId::Gf8 => {
                out.extend(Self::new(from, from, None));
            }
            PartialFieldId::Regular | PartialFieldId::Dyadic => {
                for &t in targets {
                    out.extend(Self::new(from, t, None));
                }
            }
            PartialFieldId::SixthRoots => {
                out.extend(Self::new(from, PartialFieldId::Prime(3), Some(PfValue::from_int(PartialFieldId::Prime(3), 2))));
                out.extend(Self::new(from, PartialFieldId::Gf4, Some(PfValue::Binary { deg: 2, bits: 2 })));
                out.extend(Self::new(from, PartialFieldId::Prime(7), Some(PfValue::from_int(PartialFieldId::Prime(7), 3))));
            }
            PartialFieldId::NearRegular => {
                for &t in &targets[1..] {
                    let f = PartialField::new(t).expect("built-in field");
                    for g in f.units(0).expect("finite units") {
                        out.extend(Self::new(from, t, Some(g)));
                    }
                }
            }
        }
        out
    }

    /// Looks up a built-in homomorphism by its display name.
    pub fn by_name(name: &str) -> Result<Homomorphism> {
        let src = name.split("->").next().unwrap_or("");
        let from = PartialFieldId::parse(src)?;
        Self::all_from(from)
            .into_iter()
            .find(|h| h.to_string() == name.replace(' ', ""))
            .ok_or_else(|| Error::UnsupportedField(format!("unknown homomorphism `{name}`")))
    }

    pub fn apply(&self, p: &PfValue) -> Result<PfValue> {
        if p.field() != self.from {
            return Err(Error::FieldMismatch(p.field().to_string(), self.from.to_string()));
        }
        let to = self.to;
        match p {
            _ if self.from == to => Ok(p.clone()),
            PfValue::Regular(n) => Ok(int_image(to, *n as i128)),
            PfValue::Dyadic { m, e } => {
                let two = int_image(to, 2);
                Ok(int_image(to, *m as i128).mul(&two.pow(*e as i64)?))
            }
            PfValue::Sixth { a, b } => {
                let g = self.generator.as_ref().expect("validated");
                Ok(int_image(to, *a as i128).add(&int_image(to, *b as i128).mul(g)))
            }
            PfValue::NearRegular(x) => eval_nr(x, self.generator.as_ref().expect("validated")),
            _ => Err(Error::Invariant("homomorphism source mismatch".into())),
        }
    }
}

impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)?;
        if let (Some(g), Some(s)) = (&self.generator, self.from.symbol()) {
            write!(f, "[{s}={g}]")?;
        }
        Ok(())
    }
}

/// Applies a built-in homomorphism.
pub fn hom_apply(phi: &Homomorphism, p: &PfValue) -> Result<PfValue> {
    phi.apply(p)
}

/// A ring automorphism preserving the unit group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    field: PartialFieldId,
    index: usize,
}

impl Automorphism {
    /// All automorphisms in the fixed list of `field`, identity first.
    pub fn all(field: PartialFieldId) -> Vec<Automorphism> {
        let n = match field {
            PartialFieldId::Gf4 => 2,
            PartialFieldId::Gf8 => 3,
            PartialFieldId::SixthRoots => 2,
            PartialFieldId::NearRegular => 6,
            _ => 1,
        };
        (0..n).map(|index| Automorphism { field, index }).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.index == 0
    }

    /// Image of the near-regular generator under the `index`-th map.
    fn nr_image(index: usize) -> NrValue {
        match index {
            0 => NrValue::unit(1, 1, 0),
            1 => NrValue::unit(1, 0, 1),
            2 => NrValue::unit(1, -1, 0),
            3 => NrValue::unit(1, 0, -1),
            4 => NrValue::unit(-1, 1, -1),
            _ => NrValue::unit(-1, -1, 1),
        }
    }

    pub fn apply(&self, p: &PfValue) -> PfValue {
        assert_eq!(p.field(), self.field, "automorphism applied across fields");
        if self.index == 0 {
            return p.clone();
        }
        match p {
            PfValue::Binary { .. } => {
                let mut v = p.clone();
                for _ in 0..self.index {
                    v = v.mul(&v);
                }
                v
            }
            PfValue::Sixth { a, b } => PfValue::Sixth { a: a + b, b: -b },
            PfValue::NearRegular(x) => {
                let g = PfValue::NearRegular(Self::nr_image(self.index));
                eval_nr(x, &g).expect("images of units are units")
            }
            _ => p.clone(),
        }
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.field, self.index) {
            (_, 0) => write!(f, "id"),
            (PartialFieldId::Gf4 | PartialFieldId::Gf8, k) => write!(f, "frobenius^{k}"),
            (PartialFieldId::SixthRoots, _) => write!(f, "z->1-z"),
            (PartialFieldId::NearRegular, k) => {
                write!(f, "a->{}", PfValue::NearRegular(Self::nr_image(k)))
            }
            _ => write!(f, "id"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PartialFieldId {
        PartialFieldId::Prime(p)
    }

    #[test]
    fn documented_examples() {
        let nr = PartialFieldId::NearRegular;
        let phi = Homomorphism::new(nr, gf(3), Some(PfValue::from_int(gf(3), 2))).unwrap();
        let one_minus_a = PfValue::NearRegular(NrValue::unit(1, 0, 1));
        assert_eq!(phi.apply(&one_minus_a).unwrap(), PfValue::from_int(gf(3), 2));

        let d = Homomorphism::new(PartialFieldId::Dyadic, gf(3), None).unwrap();
        assert_eq!(d.apply(&PfValue::from_int(PartialFieldId::Dyadic, 4)).unwrap(), PfValue::from_int(gf(3), 1));

        let s = Homomorphism::new(PartialFieldId::SixthRoots, PartialFieldId::Gf4, Some(PfValue::Binary { deg: 2, bits: 2 })).unwrap();
        let z = PfValue::Sixth { a: 0, b: 1 };
        assert_eq!(s.apply(&z).unwrap(), PfValue::Binary { deg: 2, bits: 2 });
        let rel = z.mul(&z).sub(&z).add(&PfValue::one(PartialFieldId::SixthRoots));
        assert!(s.apply(&rel).unwrap().is_zero());
    }

    #[test]
    fn invalid_homomorphisms_are_rejected() {
        assert!(Homomorphism::new(PartialFieldId::Dyadic, gf(2), None).is_err());
        assert!(Homomorphism::new(PartialFieldId::SixthRoots, gf(5), Some(PfValue::from_int(gf(5), 2))).is_err());
        assert!(Homomorphism::new(PartialFieldId::NearRegular, gf(5), Some(PfValue::from_int(gf(5), 1))).is_err());
        assert!(Homomorphism::new(gf(3), gf(5), None).is_err());
    }

    #[test]
    fn every_field_is_finitary() {
        for id in [
            gf(2),
            gf(11),
            PartialFieldId::Gf4,
            PartialFieldId::Gf8,
            PartialFieldId::Regular,
            PartialFieldId::Dyadic,
            PartialFieldId::SixthRoots,
            PartialFieldId::NearRegular,
        ] {
            let homs = Homomorphism::all_from(id);
            assert!(!homs.is_empty(), "{id}");
            for h in homs {
                assert!(h.target().is_finite());
                assert_eq!(Homomorphism::by_name(&h.to_string()).unwrap(), h);
            }
        }
    }

    #[test]
    fn automorphisms_fix_units_and_membership() {
        let nr = PartialField::new(PartialFieldId::NearRegular).unwrap();
        let auts = nr.automorphisms();
        assert_eq!(auts.len(), 6);
        let mut images: Vec<PfValue> = auts.iter().map(|s| s.apply(&nr.generator().unwrap())).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 6);
        for s in &auts {
            for u in nr.units(2).unwrap() {
                assert!(s.apply(&u).is_unit());
            }
        }
        let g4 = PartialField::new(PartialFieldId::Gf4).unwrap();
        let frob = &g4.automorphisms()[1];
        let w = g4.generator().unwrap();
        assert_eq!(frob.apply(&w), w.add(&g4.one()));
    }

    fn nr_value() -> impl Strategy<Value = PfValue> {
        (prop::collection::vec(-4i128..=4, 0..4), -3i32..=3, -3i32..=3)
            .prop_map(|(p, i, j)| PfValue::NearRegular(NrValue::from_parts(p, i, j)))
    }

    proptest! {
        #[test]
        fn nearregular_homs_are_ring_maps(x in nr_value(), y in nr_value()) {
            for h in Homomorphism::all_from(PartialFieldId::NearRegular) {
                let s = h.apply(&x.add(&y)).unwrap();
                prop_assert_eq!(s, h.apply(&x).unwrap().add(&h.apply(&y).unwrap()));
                let m = h.apply(&x.mul(&y)).unwrap();
                prop_assert_eq!(m, h.apply(&x).unwrap().mul(&h.apply(&y).unwrap()));
            }
        }

        #[test]
        fn sixth_homs_are_ring_maps(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20) {
            let x = PfValue::Sixth { a, b };
            let y = PfValue::Sixth { a: c, b: d };
            for h in Homomorphism::all_from(PartialFieldId::SixthRoots) {
                prop_assert_eq!(h.apply(&x.add(&y)).unwrap(), h.apply(&x).unwrap().add(&h.apply(&y).unwrap()));
                prop_assert_eq!(h.apply(&x.mul(&y)).unwrap(), h.apply(&x).unwrap().mul(&h.apply(&y).unwrap()));
            }
        }

        #[test]
        fn dyadic_homs_are_ring_maps(m in -30i128..30, e in -4i32..4, n in -30i128..30, f in -4i32..4) {
            let x = PfValue::dyadic(m, e);
            let y = PfValue::dyadic(n, f);
            for h in Homomorphism::all_from(PartialFieldId::Dyadic) {
                prop_assert_eq!(h.apply(&x.add(&y)).unwrap(), h.apply(&x).unwrap().add(&h.apply(&y).unwrap()));
                prop_assert_eq!(h.apply(&x.mul(&y)).unwrap(), h.apply(&x).unwrap().mul(&h.apply(&y).unwrap()));
            }
        }

        #[test]
        fn automorphisms_are_ring_maps(x in nr_value(), y in nr_value()) {
            for s in Automorphism::all(PartialFieldId::NearRegular) {
                prop_assert_eq!(s.apply(&x.add(&y)), s.apply(&x).add(&s.apply(&y)));
                prop_assert_eq!(s.apply(&x.mul(&y)), s.apply(&x).mul(&s.apply(&y)));
            }
        }
    }
}
