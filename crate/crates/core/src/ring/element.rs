use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::descriptor::{RingDescriptor, RingKind};
use crate::arith::Poly;
use crate::error::{Error, Result};

/// Canonical payload of a ring element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementValue {
    Integer(BigInt),
    /// Residue in `[0, n)`.
    Residue(u64),
    Polynomial(Poly),
    /// One residue per product component.
    Tuple(Vec<u64>),
}

/// An element of a catalog ring in canonical form: equal payloads are equal
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    ring: RingDescriptor,
    value: ElementValue,
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn reduce_i128(v: i128, n: u64) -> u64 {
    v.rem_euclid(n as i128) as u64
}

impl RingDescriptor {
    pub fn zero(&self) -> RingElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    /// The image of an integer under the canonical map `Z -> R`.
    pub fn from_i64(&self, v: i64) -> RingElement {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> RingElement {
        let value = match self.kind() {
            RingKind::Integers => ElementValue::Integer(v.clone()),
            RingKind::ModularIntegers(n) => ElementValue::Residue(reduce_big(v, *n)),
            RingKind::PolynomialsOverPrimeField(p) => {
                ElementValue::Polynomial(Poly::constant(*p, reduce_big(v, *p)))
            }
            RingKind::FiniteProduct(ms) => {
                ElementValue::Tuple(ms.iter().map(|&n| reduce_big(v, n)).collect())
            }
        };
        RingElement {
            ring: self.clone(),
            value,
        }
    }

    pub fn polynomial(&self, poly: Poly) -> Result<RingElement> {
        match self.kind() {
            RingKind::PolynomialsOverPrimeField(p) if *p == poly.characteristic() => {
                Ok(RingElement {
                    ring: self.clone(),
                    value: ElementValue::Polynomial(poly),
                })
            }
            _ => Err(Error::InvalidElement(format!(
                "polynomial {poly} does not belong to {self}"
            ))),
        }
    }

    /// The variable `x` of `F_p[x]`.
    pub fn variable(&self) -> Result<RingElement> {
        match self.kind() {
            RingKind::PolynomialsOverPrimeField(p) => self.polynomial(Poly::monomial(*p, 1)),
            _ => Err(Error::InvalidElement(format!("{self} has no variable"))),
        }
    }

    pub fn tuple(&self, parts: &[i64]) -> Result<RingElement> {
        match self.kind() {
            RingKind::FiniteProduct(ms) if ms.len() == parts.len() => Ok(RingElement {
                ring: self.clone(),
                value: ElementValue::Tuple(
                    ms.iter()
                        .zip(parts)
                        .map(|(&n, &v)| reduce_i128(v as i128, n))
                        .collect(),
                ),
            }),
            RingKind::FiniteProduct(ms) => Err(Error::InvalidElement(format!(
                "tuple of length {} in a product of arity {}",
                parts.len(),
                ms.len()
            ))),
            _ => Err(Error::InvalidElement(format!("{self} is not a product ring"))),
        }
    }

    /// All elements of a finite ring in canonical order; `None` for infinite rings.
    pub fn elements(&self) -> Option<Vec<RingElement>> {
        let size = self.size()? as usize;
        Some((0..size).map(|i| self.element_at(i)).collect())
    }

    /// The element with canonical index `i` in a finite ring.
    pub fn element_at(&self, i: usize) -> RingElement {
        let value = match self.kind() {
            RingKind::ModularIntegers(_) => ElementValue::Residue(i as u64),
            RingKind::FiniteProduct(ms) => {
                let mut rest = i as u64;
                let mut parts = vec![0; ms.len()];
                for (slot, &n) in parts.iter_mut().zip(ms.iter()).rev() {
                    *slot = rest % n;
                    rest /= n;
                }
                ElementValue::Tuple(parts)
            }
            _ => panic!("element_at on an infinite ring"),
        };
        RingElement {
            ring: self.clone(),
            value,
        }
    }

    /// The units, which form a finite group for every catalog ring.
    pub fn units(&self) -> Vec<RingElement> {
        match self.kind() {
            RingKind::Integers => vec![self.from_i64(-1), self.from_i64(1)],
            RingKind::PolynomialsOverPrimeField(p) => (1..*p)
                .map(|c| self.from_i64(c as i64))
                .collect(),
            _ => self
                .elements()
                .unwrap()
                .into_iter()
                .filter(|e| e.is_unit())
                .collect(),
        }
    }
}

fn reduce_big(v: &BigInt, n: u64) -> u64 {
    v.mod_floor(&BigInt::from(n)).to_u64().unwrap()
}

impl RingElement {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn value(&self) -> &ElementValue {
        &self.value
    }

    pub(crate) fn from_parts(ring: RingDescriptor, value: ElementValue) -> Self {
        RingElement { ring, value }
    }

    /// Canonical index of an element in a finite ring.
    pub fn index(&self) -> Option<usize> {
        match (&self.value, self.ring.kind()) {
            (ElementValue::Residue(r), _) => Some(*r as usize),
            (ElementValue::Tuple(parts), RingKind::FiniteProduct(ms)) => Some(
                parts
                    .iter()
                    .zip(ms.iter())
                    .fold(0u64, |acc, (&r, &n)| acc * n + r) as usize,
            ),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            ElementValue::Integer(v) => v.is_zero(),
            ElementValue::Residue(r) => *r == 0,
            ElementValue::Polynomial(f) => f.is_zero(),
            ElementValue::Tuple(parts) => parts.iter().all(|&r| r == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    pub fn is_unit(&self) -> bool {
        match (&self.value, self.ring.kind()) {
            (ElementValue::Integer(v), _) => v.abs().is_one(),
            (ElementValue::Residue(r), RingKind::ModularIntegers(n)) => r.gcd(n) == 1,
            (ElementValue::Polynomial(f), _) => f.is_unit(),
            (ElementValue::Tuple(parts), RingKind::FiniteProduct(ms)) => {
                parts.iter().zip(ms.iter()).all(|(r, n)| r.gcd(n) == 1)
            }
            _ => unreachable!("payload does not match ring"),
        }
    }

    fn check(&self, other: &RingElement) {
        assert_eq!(
            self.ring, other.ring,
            "element arithmetic across different rings"
        );
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        self.check(other);
        let value = match (&self.value, &other.value, self.ring.kind()) {
            (ElementValue::Integer(a), ElementValue::Integer(b), _) => {
                ElementValue::Integer(a + b)
            }
            (ElementValue::Residue(a), ElementValue::Residue(b), RingKind::ModularIntegers(n)) => {
                ElementValue::Residue(((*a as u128 + *b as u128) % *n as u128) as u64)
            }
            (ElementValue::Polynomial(a), ElementValue::Polynomial(b), _) => {
                ElementValue::Polynomial(a.add(b))
            }
            (ElementValue::Tuple(a), ElementValue::Tuple(b), RingKind::FiniteProduct(ms)) => {
                ElementValue::Tuple(
                    a.iter()
                        .zip(b)
                        .zip(ms.iter())
                        .map(|((x, y), n)| (x + y) % n)
                        .collect(),
                )
            }
            _ => unreachable!("payload does not match ring"),
        };
        RingElement::from_parts(self.ring.clone(), value)
    }

    pub fn neg(&self) -> RingElement {
        let value = match (&self.value, self.ring.kind()) {
            (ElementValue::Integer(a), _) => ElementValue::Integer(-a),
            (ElementValue::Residue(a), RingKind::ModularIntegers(n)) => {
                ElementValue::Residue((n - a) % n)
            }
            (ElementValue::Polynomial(a), _) => ElementValue::Polynomial(a.neg()),
            (ElementValue::Tuple(a), RingKind::FiniteProduct(ms)) => ElementValue::Tuple(
                a.iter().zip(ms.iter()).map(|(x, n)| (n - x) % n).collect(),
            ),
            _ => unreachable!("payload does not match ring"),
        };
        RingElement::from_parts(self.ring.clone(), value)
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        self.check(other);
        let value = match (&self.value, &other.value, self.ring.kind()) {
            (ElementValue::Integer(a), ElementValue::Integer(b), _) => {
                ElementValue::Integer(a * b)
            }
            (ElementValue::Residue(a), ElementValue::Residue(b), RingKind::ModularIntegers(n)) => {
                ElementValue::Residue(mulmod(*a, *b, *n))
            }
            (ElementValue::Polynomial(a), ElementValue::Polynomial(b), _) => {
                ElementValue::Polynomial(a.mul(b))
            }
            (ElementValue::Tuple(a), ElementValue::Tuple(b), RingKind::FiniteProduct(ms)) => {
                ElementValue::Tuple(
                    a.iter()
                        .zip(b)
                        .zip(ms.iter())
                        .map(|((x, y), n)| mulmod(*x, *y, *n))
                        .collect(),
                )
            }
            _ => unreachable!("payload does not match ring"),
        };
        RingElement::from_parts(self.ring.clone(), value)
    }

    pub fn pow(&self, mut e: u32) -> RingElement {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Product of a list of elements (the identity for an empty list).
    pub fn product<'a>(ring: &RingDescriptor, items: impl IntoIterator<Item = &'a RingElement>) -> RingElement {
        items
            .into_iter()
            .fold(ring.one(), |acc, x| acc.mul(x))
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.value {
            ElementValue::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match &self.value {
            ElementValue::Polynomial(f) => Some(f),
            _ => None,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            ElementValue::Integer(v) => write!(f, "{v}"),
            ElementValue::Residue(r) => write!(f, "{r}"),
            ElementValue::Polynomial(p) => write!(f, "{p}"),
            ElementValue::Tuple(parts) => {
                let s: Vec<String> = parts.iter().map(|r| r.to_string()).collect();
                write!(f, "({})", s.join(","))
            }
        }
    }
}
