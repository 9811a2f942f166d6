use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::descriptor::{RingDescriptor, RingKind};
use super::element::{ElementValue, RingElement};
use crate::arith::{lattice, Generator, Poly};
use crate::error::{Error, Result};

/// Canonical generator of an ideal.
///
/// Every catalog ring is a principal ideal ring, so a single canonical
/// generator determines the ideal:
/// * `Integer(g)` with `g >= 0` (`0` is the zero ideal);
/// * `Divisor(d)` with `d | n` in `Z/n` (`d = n` is the zero ideal, `d = 1` the unit ideal);
/// * `Polynomial(f)` zero or monic;
/// * `Tuple(d_i)` one divisor per product component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealGenerator {
    Integer(BigUint),
    Divisor(u64),
    Polynomial(Poly),
    Tuple(Vec<u64>),
}

/// An ideal of a catalog ring in canonical form. Structural equality is
/// ideal equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    ring: RingDescriptor,
    generator: IdealGenerator,
}

#[derive(Clone, Copy)]
enum BinOp {
    Sum,
    Intersection,
    Product,
    Colon,
}

fn apply<T: Generator>(op: BinOp, a: &T, b: &T, m: &T) -> T {
    match op {
        BinOp::Sum => lattice::sum(a, b),
        BinOp::Intersection => lattice::intersection(a, b),
        BinOp::Product => lattice::product(a, b, m),
        BinOp::Colon => lattice::colon(a, b),
    }
}

fn big_abs(v: &BigInt) -> BigUint {
    v.abs().to_biguint().unwrap()
}

impl Ideal {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generator(&self) -> &IdealGenerator {
        &self.generator
    }

    /// The principal ideal `(x)`.
    pub fn principal(x: &RingElement) -> Ideal {
        let ring = x.ring().clone();
        let generator = match (x.value(), ring.kind()) {
            (ElementValue::Integer(v), _) => IdealGenerator::Integer(big_abs(v)),
            (ElementValue::Residue(r), RingKind::ModularIntegers(n)) => {
                IdealGenerator::Divisor(lattice::canonical(r, n))
            }
            (ElementValue::Polynomial(f), _) => IdealGenerator::Polynomial(f.monic()),
            (ElementValue::Tuple(parts), RingKind::FiniteProduct(ms)) => IdealGenerator::Tuple(
                parts
                    .iter()
                    .zip(ms.iter())
                    .map(|(r, n)| lattice::canonical(r, n))
                    .collect(),
            ),
            _ => unreachable!("payload does not match ring"),
        };
        Ideal { ring, generator }
    }

    /// The ideal generated by a list of elements (the zero ideal when empty).
    pub fn generated_by(ring: &RingDescriptor, gens: &[RingElement]) -> Result<Ideal> {
        let mut acc = Ideal::zero(ring);
        for g in gens {
            acc = ideal_sum(&acc, &Ideal::principal(g))?;
        }
        Ok(acc)
    }

    pub fn zero(ring: &RingDescriptor) -> Ideal {
        Ideal::principal(&ring.zero())
    }

    pub fn unit(ring: &RingDescriptor) -> Ideal {
        Ideal::principal(&ring.one())
    }

    /// The canonical generator as a ring element.
    pub fn generator_element(&self) -> RingElement {
        let value = match (&self.generator, self.ring.kind()) {
            (IdealGenerator::Integer(g), _) => ElementValue::Integer(BigInt::from(g.clone())),
            (IdealGenerator::Divisor(d), RingKind::ModularIntegers(n)) => {
                ElementValue::Residue(d % n)
            }
            (IdealGenerator::Polynomial(f), _) => ElementValue::Polynomial(f.clone()),
            (IdealGenerator::Tuple(ds), RingKind::FiniteProduct(ms)) => {
                ElementValue::Tuple(ds.iter().zip(ms.iter()).map(|(d, n)| d % n).collect())
            }
            _ => unreachable!("generator does not match ring"),
        };
        RingElement::from_parts(self.ring.clone(), value)
    }

    pub fn is_unit_ideal(&self) -> bool {
        match &self.generator {
            IdealGenerator::Integer(g) => Generator::is_one(g),
            IdealGenerator::Divisor(d) => *d == 1,
            IdealGenerator::Polynomial(f) => f.is_one(),
            IdealGenerator::Tuple(ds) => ds.iter().all(|&d| d == 1),
        }
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit_ideal()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generator_element().is_zero()
    }

    /// Membership test. Panics if `x` belongs to another ring.
    pub fn contains(&self, x: &RingElement) -> bool {
        assert_eq!(&self.ring, x.ring(), "membership test across different rings");
        match (&self.generator, x.value()) {
            (IdealGenerator::Integer(g), ElementValue::Integer(v)) => g.divides(&big_abs(v)),
            (IdealGenerator::Divisor(d), ElementValue::Residue(r)) => r % d == 0,
            (IdealGenerator::Polynomial(f), ElementValue::Polynomial(v)) => v.divisible_by(f),
            (IdealGenerator::Tuple(ds), ElementValue::Tuple(parts)) => {
                ds.iter().zip(parts).all(|(d, r)| r % d == 0)
            }
            _ => unreachable!("payload does not match ring"),
        }
    }

    /// `self ⊆ other`. Panics if the ideals live in different rings.
    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        other.contains(&self.generator_element())
    }

    /// Ideals containing `self`, in canonical order.
    pub fn divisor_ideals(&self) -> Result<Vec<Ideal>> {
        let ring = self.ring.clone();
        let wrap = |generator| Ideal {
            ring: ring.clone(),
            generator,
        };
        let unsupported = || {
            Error::UnsupportedEnumeration(format!(
                "the zero ideal of {} has infinitely many overideals",
                self.ring
            ))
        };
        let mut out: Vec<Ideal> = match &self.generator {
            IdealGenerator::Integer(g) => {
                if Generator::is_zero(g) {
                    return Err(unsupported());
                }
                lattice::divisors(g)
                    .into_iter()
                    .map(|d| wrap(IdealGenerator::Integer(d)))
                    .collect()
            }
            IdealGenerator::Divisor(d) => lattice::divisors(d)
                .into_iter()
                .map(|d| wrap(IdealGenerator::Divisor(d)))
                .collect(),
            IdealGenerator::Polynomial(f) => {
                if f.is_zero() {
                    return Err(unsupported());
                }
                lattice::divisors(f)
                    .into_iter()
                    .map(|d| wrap(IdealGenerator::Polynomial(d)))
                    .collect()
            }
            IdealGenerator::Tuple(ds) => {
                let mut tuples: Vec<Vec<u64>> = vec![vec![]];
                for d in ds {
                    let divs = lattice::divisors(d);
                    tuples = tuples
                        .into_iter()
                        .flat_map(|t| {
                            divs.iter().map(move |&x| {
                                let mut t = t.clone();
                                t.push(x);
                                t
                            })
                        })
                        .collect();
                }
                tuples
                    .into_iter()
                    .map(|t| wrap(IdealGenerator::Tuple(t)))
                    .collect()
            }
        };
        out.sort();
        Ok(out)
    }

    /// Classical minimal primary decomposition of a proper ideal: prime-power
    /// components of the canonical generator, componentwise in products.
    pub fn primary_components(&self) -> Result<Vec<Ideal>> {
        if self.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
        let ring = self.ring.clone();
        let wrap = |generator| Ideal {
            ring: ring.clone(),
            generator,
        };
        let mut out: Vec<Ideal> = match &self.generator {
            IdealGenerator::Integer(g) if Generator::is_zero(g) => vec![self.clone()],
            IdealGenerator::Polynomial(f) if f.is_zero() => vec![self.clone()],
            IdealGenerator::Integer(g) => lattice::prime_power_parts(g)
                .into_iter()
                .map(|(_, q)| wrap(IdealGenerator::Integer(q)))
                .collect(),
            IdealGenerator::Divisor(d) => lattice::prime_power_parts(d)
                .into_iter()
                .map(|(_, q)| wrap(IdealGenerator::Divisor(q)))
                .collect(),
            IdealGenerator::Polynomial(f) => lattice::prime_power_parts(f)
                .into_iter()
                .map(|(_, q)| wrap(IdealGenerator::Polynomial(q)))
                .collect(),
            IdealGenerator::Tuple(ds) => componentwise_parts(ds, |d| {
                lattice::prime_power_parts(d).into_iter().map(|(_, q)| q).collect()
            })
            .into_iter()
            .map(|t| wrap(IdealGenerator::Tuple(t)))
            .collect(),
        };
        out.sort();
        Ok(out)
    }

    /// Minimal prime ideals over `self`.
    pub fn minimal_primes(&self) -> Vec<Ideal> {
        if self.is_unit_ideal() {
            return vec![];
        }
        let ring = self.ring.clone();
        let wrap = |generator| Ideal {
            ring: ring.clone(),
            generator,
        };
        let mut out: Vec<Ideal> = match &self.generator {
            IdealGenerator::Integer(g) if Generator::is_zero(g) => vec![self.clone()],
            IdealGenerator::Polynomial(f) if f.is_zero() => vec![self.clone()],
            IdealGenerator::Integer(g) => g
                .factor()
                .into_iter()
                .map(|(p, _)| wrap(IdealGenerator::Integer(p)))
                .collect(),
            IdealGenerator::Divisor(d) => d
                .factor()
                .into_iter()
                .map(|(p, _)| wrap(IdealGenerator::Divisor(p)))
                .collect(),
            IdealGenerator::Polynomial(f) => f
                .factor()
                .into_iter()
                .map(|(p, _)| wrap(IdealGenerator::Polynomial(p)))
                .collect(),
            IdealGenerator::Tuple(ds) => {
                componentwise_parts(ds, |d| d.factor().into_iter().map(|(p, _)| p).collect())
                    .into_iter()
                    .map(|t| wrap(IdealGenerator::Tuple(t)))
                    .collect()
            }
        };
        out.sort();
        out
    }
}

/// For each component `i` and each part `q` of `ds[i]`, the tuple that is `q`
/// at `i` and the unit ideal elsewhere.
fn componentwise_parts(ds: &[u64], parts: impl Fn(&u64) -> Vec<u64>) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for (i, d) in ds.iter().enumerate() {
        if *d == 1 {
            continue;
        }
        for q in parts(d) {
            let mut t = vec![1; ds.len()];
            t[i] = q;
            out.push(t);
        }
    }
    out
}

fn binary(a: &Ideal, b: &Ideal, op: BinOp) -> Result<Ideal> {
    a.ring.ensure_same(&b.ring)?;
    let generator = match (&a.generator, &b.generator, a.ring.kind()) {
        (IdealGenerator::Integer(x), IdealGenerator::Integer(y), _) => {
            IdealGenerator::Integer(apply(op, x, y, &BigUint::zero()))
        }
        (IdealGenerator::Divisor(x), IdealGenerator::Divisor(y), RingKind::ModularIntegers(n)) => {
            IdealGenerator::Divisor(apply(op, x, y, n))
        }
        (IdealGenerator::Polynomial(x), IdealGenerator::Polynomial(y), _) => {
            let m = Poly::zero(x.characteristic());
            IdealGenerator::Polynomial(apply(op, x, y, &m))
        }
        (IdealGenerator::Tuple(xs), IdealGenerator::Tuple(ys), RingKind::FiniteProduct(ms)) => {
            IdealGenerator::Tuple(
                xs.iter()
                    .zip(ys)
                    .zip(ms.iter())
                    .map(|((x, y), n)| apply(op, x, y, n))
                    .collect(),
            )
        }
        _ => unreachable!("generator does not match ring"),
    };
    Ok(Ideal {
        ring: a.ring.clone(),
        generator,
    })
}

/// `a + b`.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    binary(a, b, BinOp::Sum)
}

/// `a ∩ b`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    binary(a, b, BinOp::Intersection)
}

/// Intersection of a nonempty list; the unit ideal of `ring` for an empty one.
pub fn intersect_all<'a>(
    ring: &RingDescriptor,
    ideals: impl IntoIterator<Item = &'a Ideal>,
) -> Result<Ideal> {
    let mut acc = Ideal::unit(ring);
    for i in ideals {
        acc = ideal_intersection(&acc, i)?;
    }
    Ok(acc)
}

/// `a · b`.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    binary(a, b, BinOp::Product)
}

/// `(a : b) = {x : x b ⊆ a}`.
pub fn ideal_colon(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    binary(a, b, BinOp::Colon)
}

/// `(a : s) = {x : x s ∈ a}`.
pub fn ideal_colon_element(a: &Ideal, s: &RingElement) -> Result<Ideal> {
    a.ring.ensure_same(s.ring())?;
    ideal_colon(a, &Ideal::principal(s))
}

pub fn radical(a: &Ideal) -> Ideal {
    let generator = match &a.generator {
        IdealGenerator::Integer(g) => IdealGenerator::Integer(lattice::radical(g)),
        IdealGenerator::Divisor(d) => IdealGenerator::Divisor(lattice::radical(d)),
        IdealGenerator::Polynomial(f) => IdealGenerator::Polynomial(lattice::radical(f)),
        IdealGenerator::Tuple(ds) => {
            IdealGenerator::Tuple(ds.iter().map(lattice::radical).collect())
        }
    };
    Ideal {
        ring: a.ring.clone(),
        generator,
    }
}

/// The quotient is an integral domain. In a product, exactly one component is
/// prime and the others are the unit ideal.
pub fn is_prime_ideal(a: &Ideal) -> bool {
    if a.is_unit_ideal() {
        return false;
    }
    match &a.generator {
        IdealGenerator::Integer(g) => lattice::is_prime(g),
        IdealGenerator::Divisor(d) => lattice::is_prime(d),
        IdealGenerator::Polynomial(f) => lattice::is_prime(f),
        IdealGenerator::Tuple(ds) => {
            let non_unit: Vec<&u64> = ds.iter().filter(|&&d| d != 1).collect();
            non_unit.len() == 1 && lattice::is_prime(non_unit[0])
        }
    }
}

/// Zero or a prime power, up to normalization; never the unit ideal.
pub fn is_primary_ideal(a: &Ideal) -> bool {
    if a.is_unit_ideal() {
        return false;
    }
    match &a.generator {
        IdealGenerator::Integer(g) => lattice::is_primary(g),
        IdealGenerator::Divisor(d) => lattice::is_primary(d),
        IdealGenerator::Polynomial(f) => lattice::is_primary(f),
        IdealGenerator::Tuple(ds) => {
            let non_unit: Vec<&u64> = ds.iter().filter(|&&d| d != 1).collect();
            non_unit.len() == 1 && lattice::is_primary(non_unit[0])
        }
    }
}

/// All ideals containing `a`, in canonical order.
pub fn enumerate_divisor_ideals(a: &Ideal) -> Result<Vec<Ideal>> {
    a.divisor_ideals()
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.generator {
            IdealGenerator::Tuple(_) => write!(f, "{}", self.generator_element()),
            _ => write!(f, "({})", self.generator_element()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(g: i64) -> Ideal {
        Ideal::principal(&RingDescriptor::integers().from_i64(g))
    }

    #[test]
    fn integer_examples() {
        assert_eq!(ideal_sum(&z(6), &z(4)).unwrap(), z(2));
        assert_eq!(ideal_sum(&z(6), &z(0)).unwrap(), z(6));
        assert_eq!(ideal_intersection(&z(4), &z(6)).unwrap(), z(12));
        assert_eq!(ideal_intersection(&z(2), &z(3)).unwrap(), z(6));
        assert_eq!(ideal_product(&z(4), &z(6)).unwrap(), z(24));
        assert_eq!(ideal_product(&z(1), &z(6)).unwrap(), z(6));
        assert_eq!(ideal_colon(&z(12), &z(8)).unwrap(), z(3));
        assert_eq!(ideal_colon(&z(36), &z(4)).unwrap(), z(9));
        assert_eq!(ideal_colon(&z(6), &z(1)).unwrap(), z(6));
        let r = RingDescriptor::integers();
        assert_eq!(ideal_colon_element(&z(6), &r.from_i64(2)).unwrap(), z(3));
        assert_eq!(ideal_colon_element(&z(9), &r.from_i64(2)).unwrap(), z(9));
        assert_eq!(radical(&z(12)), z(6));
        assert_eq!(radical(&z(4)), z(2));
        assert!(is_primary_ideal(&z(4)));
        assert!(!is_prime_ideal(&z(4)));
        assert!(is_prime_ideal(&z(0)));
        assert!(!is_primary_ideal(&z(1)) && !is_prime_ideal(&z(1)));
        assert_eq!(z(-6), z(6));
        assert_eq!(z(6).to_string(), "(6)");
    }

    #[test]
    fn modular_examples() {
        let r = RingDescriptor::modular(12).unwrap();
        let i = |v| Ideal::principal(&r.from_i64(v));
        assert_eq!(ideal_intersection(&i(4), &i(3)).unwrap(), i(0));
        assert_eq!(ideal_product(&i(4), &i(6)).unwrap(), i(0));
        assert!(is_prime_ideal(&i(2)));
        assert_eq!(i(8), i(4));
        assert_eq!(enumerate_divisor_ideals(&i(0)).unwrap().len(), 6);
        assert_eq!(i(0).to_string(), "(0)");
        assert!(i(0).is_zero_ideal());
    }

    #[test]
    fn product_examples() {
        let r = RingDescriptor::boolean(2).unwrap();
        let zero = Ideal::zero(&r);
        let e = Ideal::principal(&r.tuple(&[1, 0]).unwrap());
        assert_eq!(ideal_sum(&zero, &e).unwrap(), e);
        assert_eq!(e.to_string(), "(1,0)");
        assert_eq!(enumerate_divisor_ideals(&zero).unwrap().len(), 4);
        let primes = zero.minimal_primes();
        assert_eq!(primes.len(), 2);
        assert!(primes.iter().all(is_prime_ideal));
    }

    #[test]
    fn polynomial_examples() {
        let r = RingDescriptor::polynomials(2).unwrap();
        let x = r.variable().unwrap();
        let x2 = x.mul(&x);
        assert_eq!(radical(&Ideal::principal(&x2)), Ideal::principal(&x));
        let f = x2.add(&x);
        let comps = Ideal::principal(&f).primary_components().unwrap();
        let shown: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["(x)", "(x+1)"]);
    }

    #[test]
    fn zero_ideal_enumeration_is_rejected() {
        assert!(matches!(
            enumerate_divisor_ideals(&z(0)),
            Err(Error::UnsupportedEnumeration(_))
        ));
        assert_eq!(enumerate_divisor_ideals(&z(6)).unwrap(), vec![z(1), z(2), z(3), z(6)]);
    }

    #[test]
    fn mismatched_rings() {
        let m = Ideal::zero(&RingDescriptor::modular(4).unwrap());
        assert!(matches!(ideal_sum(&z(2), &m), Err(Error::RingMismatch { .. })));
    }
}
