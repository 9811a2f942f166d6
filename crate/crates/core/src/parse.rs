//! Text syntax for rings, elements, ideals and multiplicative sets.
//!
//! ```text
//! ring    := "Z" | "Z/" n ("x" "Z/" n)* | "GF(" p ")[x]"
//! ideal   := "(" elem ("," elem)* ")"      tuples: "(0,1,0)" or "((1,0),(0,1))"
//! set     := "units" | "complement(" elems ")" | "gen(" elems ")" | "set{" elems "}"
//! ```
//!
//! Whitespace is ignored everywhere.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::multiplicative::MultiplicativeSet;
use crate::ring::{Ideal, RingDescriptor, RingElement, RingKind};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigUint),
    Word(String),
    X,
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => n.to_string(),
            Tok::Word(w) => format!("'{w}'"),
            Tok::X => "'x'".into(),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Num(digits.parse().expect("ascii digits"))));
        } else if c == 'x' {
            out.push((pos, Tok::X));
            k += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len()
                && (chars[k].1.is_ascii_alphabetic() || chars[k].1 == '_')
                && chars[k].1 != 'x'
            {
                k += 1;
            }
            let word: String = chars[start..k].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Word(word)));
        } else if "()[]{},+-*^/;".contains(c) {
            out.push((pos, Tok::Sym(c)));
            k += 1;
        } else {
            return Err(Error::Parse {
                position: pos,
                expected: "a token".into(),
                found: format!("'{c}'"),
            });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse {
            position: self.pos(),
            expected: expected.into(),
            found: self.peek().describe(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("'{c}'"))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<()> {
        if self.peek() == &Tok::Word(w.into()) {
            self.bump();
            Ok(())
        } else {
            self.fail(&format!("'{w}'"))
        }
    }

    fn finish(&self) -> Result<()> {
        if self.peek() == &Tok::End {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }

    fn number(&mut self) -> Result<BigUint> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail("a number"),
        }
    }

    fn small(&mut self, what: &str) -> Result<u64> {
        let pos = self.pos();
        let n = self.number()?;
        n.to_u64().ok_or_else(|| Error::Parse {
            position: pos,
            expected: format!("{what} below 2^64"),
            found: n.to_string(),
        })
    }

    fn signed(&mut self) -> Result<BigInt> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let n = BigInt::from(self.number()?);
        Ok(if neg { -n } else { n })
    }

    /// Wraps a constructor failure as a parse error at `pos`.
    fn semantic<T>(pos: usize, expected: &str, found: String, r: Result<T>) -> Result<T> {
        r.map_err(|e| Error::Parse {
            position: pos,
            expected: expected.into(),
            found: format!("{found} ({e})"),
        })
    }

    fn ring(&mut self) -> Result<RingDescriptor> {
        match self.peek().clone() {
            Tok::Word(w) if w == "Z" => {
                let start = self.pos();
                self.bump();
                if !self.eat('/') {
                    return Ok(RingDescriptor::integers());
                }
                let mut moduli = vec![self.modulus()?];
                while self.peek() == &Tok::X {
                    self.bump();
                    self.expect_word("Z")?;
                    self.expect('/')?;
                    moduli.push(self.modulus()?);
                }
                let found = moduli.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" x ");
                let ring = if moduli.len() == 1 {
                    RingDescriptor::modular(moduli[0])
                } else {
                    RingDescriptor::product(&moduli)
                };
                Self::semantic(start, "a ring within desk scale", found, ring)
            }
            Tok::Word(w) if w == "GF" => {
                self.bump();
                self.expect('(')?;
                let pos = self.pos();
                let p = self.small("a prime")?;
                let ring = Self::semantic(pos, "a prime characteristic", p.to_string(), RingDescriptor::polynomials(p))?;
                self.expect(')')?;
                self.expect('[')?;
                if self.peek() != &Tok::X {
                    return self.fail("'x'");
                }
                self.bump();
                self.expect(']')?;
                Ok(ring)
            }
            _ => self.fail("'Z' or 'GF'"),
        }
    }

    fn modulus(&mut self) -> Result<u64> {
        let pos = self.pos();
        let n = self.small("a modulus")?;
        if n < 2 {
            return Err(Error::Parse {
                position: pos,
                expected: "a modulus of at least 2".into(),
                found: n.to_string(),
            });
        }
        Ok(n)
    }

    fn element(&mut self, ring: &RingDescriptor) -> Result<RingElement> {
        match ring.kind() {
            RingKind::Integers | RingKind::ModularIntegers(_) => {
                let v = self.signed()?;
                Ok(ring.from_bigint(&v))
            }
            RingKind::PolynomialsOverPrimeField(p) => self.polynomial(ring, *p),
            RingKind::FiniteProduct(ms) => {
                let arity = ms.len();
                let pos = self.pos();
                self.expect('(')?;
                let mut parts = vec![self.signed()?];
                while self.eat(',') {
                    parts.push(self.signed()?);
                }
                self.expect(')')?;
                if parts.len() != arity {
                    return Err(Error::Parse {
                        position: pos,
                        expected: format!("a tuple of {arity} entries"),
                        found: format!("{} entries", parts.len()),
                    });
                }
                let m = ms.iter().map(|&m| BigInt::from(m));
                let reduced: Vec<i64> = parts
                    .iter()
                    .zip(m)
                    .map(|(v, m)| {
                        let r = ((v % &m) + &m) % &m;
                        r.to_i64().expect("residue fits")
                    })
                    .collect();
                Self::semantic(pos, "an element of the ring", "tuple".into(), ring.tuple(&reduced))
            }
        }
    }

    fn polynomial(&mut self, ring: &RingDescriptor, p: u64) -> Result<RingElement> {
        let mut acc = Poly::zero(p);
        let mut first = true;
        loop {
            let neg = self.eat('-');
            if !neg && !self.eat('+') && !first {
                break;
            }
            first = false;
            let term = self.term(p)?;
            acc = if neg { acc.sub(&term) } else { acc.add(&term) };
        }
        Self::semantic(self.pos(), "an element of the ring", "polynomial".into(), ring.polynomial(acc))
    }

    /// A product of numbers and powers of `x`, with `*` optional.
    fn term(&mut self, p: u64) -> Result<Poly> {
        let mut acc = self.factor(p)?;
        while self.eat('*') || matches!(self.peek(), Tok::X | Tok::Num(_)) {
            acc = acc.mul(&self.factor(p)?);
        }
        Ok(acc)
    }

    fn factor(&mut self, p: u64) -> Result<Poly> {
        match self.peek() {
            Tok::Num(_) => {
                let n = self.number()? % BigUint::from(p);
                Ok(Poly::constant(p, n.to_u64().expect("reduced")))
            }
            Tok::X => {
                self.bump();
                let deg = if self.eat('^') {
                    self.small("an exponent")? as usize
                } else {
                    1
                };
                Ok(Poly::monomial(p, deg))
            }
            _ => self.fail("a number or 'x'"),
        }
    }

    fn ideal(&mut self, ring: &RingDescriptor) -> Result<Ideal> {
        let pos = self.pos();
        let gens = if matches!(ring.kind(), RingKind::FiniteProduct(_))
            && self.peek() == &Tok::Sym('(')
            && self.peek2() != &Tok::Sym('(')
        {
            vec![self.element(ring)?]
        } else {
            self.expect('(')?;
            let gens = self.elements(ring)?;
            self.expect(')')?;
            gens
        };
        Self::semantic(pos, "generators in the ring", "ideal".into(), Ideal::generated_by(ring, &gens))
    }

    fn elements(&mut self, ring: &RingDescriptor) -> Result<Vec<RingElement>> {
        let mut out = vec![self.element(ring)?];
        while self.eat(',') {
            out.push(self.element(ring)?);
        }
        Ok(out)
    }

    fn mult_set(&mut self, ring: &RingDescriptor) -> Result<MultiplicativeSet> {
        let Tok::Word(w) = self.peek().clone() else {
            return self.fail("'units', 'complement', 'gen' or 'set'");
        };
        match w.as_str() {
            "units" => {
                self.bump();
                Ok(MultiplicativeSet::units(ring))
            }
            "complement" | "gen" => {
                self.bump();
                self.expect('(')?;
                let elems = self.elements(ring)?;
                self.expect(')')?;
                if w == "gen" {
                    MultiplicativeSet::generated_by(ring, &elems)
                } else {
                    MultiplicativeSet::complement_of_primes(ring, &elems)
                }
            }
            "set" => {
                self.bump();
                self.expect('{')?;
                let elems = self.elements(ring)?;
                self.expect('}')?;
                MultiplicativeSet::explicit(ring, &elems)
            }
            _ => self.fail("'units', 'complement', 'gen' or 'set'"),
        }
    }
}

pub fn parse_ring(src: &str) -> Result<RingDescriptor> {
    let mut p = Parser::new(src)?;
    let r = p.ring()?;
    p.finish()?;
    Ok(r)
}

pub fn parse_element(ring: &RingDescriptor, src: &str) -> Result<RingElement> {
    let mut p = Parser::new(src)?;
    let e = p.element(ring)?;
    p.finish()?;
    Ok(e)
}

pub fn parse_ideal(ring: &RingDescriptor, src: &str) -> Result<Ideal> {
    let mut p = Parser::new(src)?;
    let i = p.ideal(ring)?;
    p.finish()?;
    Ok(i)
}

/// Ideals separated by `;`.
pub fn parse_ideal_list(ring: &RingDescriptor, src: &str) -> Result<Vec<Ideal>> {
    let mut p = Parser::new(src)?;
    let mut out = vec![p.ideal(ring)?];
    while p.eat(';') {
        out.push(p.ideal(ring)?);
    }
    p.finish()?;
    Ok(out)
}

/// Semantic failures (a non-prime in `complement`, a non-closed `set`) are
/// reported as multiplicative-set errors, not parse errors.
pub fn parse_mult_set(ring: &RingDescriptor, src: &str) -> Result<MultiplicativeSet> {
    let mut p = Parser::new(src)?;
    let s = p.mult_set(ring)?;
    p.finish()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rings() {
        for src in ["Z", "Z/12", "GF(5)[x]", "Z/2 x Z/2 x Z/2"] {
            assert_eq!(parse_ring(src).unwrap().to_string(), src);
        }
        assert_eq!(parse_ring(" Z / 2x Z/3 ").unwrap().to_string(), "Z/2 x Z/3");
        let err = parse_ring("GF(4)[x]").unwrap_err();
        assert!(matches!(err, Error::Parse { position: 3, .. }));
        let err = parse_ring("Z/").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                position: 2,
                expected: "a number".into(),
                found: "end of input".into()
            }
        );
        assert!(matches!(parse_ring("Q"), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_ring("Z/1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ring("Z Z"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn ideals() {
        let z = parse_ring("Z").unwrap();
        assert_eq!(parse_ideal(&z, "(6)").unwrap().to_string(), "(6)");
        assert_eq!(parse_ideal(&z, "(4, 6)").unwrap().to_string(), "(2)");
        assert_eq!(parse_ideal(&z, "(-6)").unwrap().to_string(), "(6)");
        let f = parse_ring("GF(2)[x]").unwrap();
        assert_eq!(parse_ideal(&f, "(x^2+1)").unwrap().to_string(), "(x^2+1)");
        assert_eq!(parse_ideal(&f, "(x^2 - 1, x*x + x)").unwrap().to_string(), "(x+1)");
        let f5 = parse_ring("GF(5)[x]").unwrap();
        assert_eq!(parse_element(&f5, "3x^2+2x+1").unwrap().to_string(), "3x^2+2x+1");
        assert_eq!(parse_element(&f5, "-x").unwrap().to_string(), "4x");
        let b = parse_ring("Z/2 x Z/2 x Z/2").unwrap();
        assert_eq!(parse_ideal(&b, "(0,1,0)").unwrap().to_string(), "(0,1,0)");
        assert_eq!(parse_ideal(&b, "((1,0,0),(0,1,0))").unwrap().to_string(), "(1,1,0)");
        assert!(matches!(parse_ideal(&b, "(0,1)"), Err(Error::Parse { position: 0, .. })));
        let list = parse_ideal_list(&z, "(4); (9)").unwrap();
        assert_eq!(list.len(), 2);
        assert!(matches!(parse_ideal(&z, "(6"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_ideal(&z, "(6)#"), Err(Error::Parse { position: 3, .. })));
    }

    #[test]
    fn sets() {
        let z = parse_ring("Z").unwrap();
        for src in ["units", "complement(3)", "complement(2,3)", "gen(2,5)"] {
            assert_eq!(parse_mult_set(&z, src).unwrap().to_string(), src);
        }
        let b = parse_ring("Z/2 x Z/2 x Z/2").unwrap();
        let s = parse_mult_set(&b, "set{(1,1,1),(1,0,0)}").unwrap();
        assert_eq!(s.to_string(), "set{(1,0,0),(1,1,1)}");
        assert!(matches!(parse_mult_set(&z, "complement(4)"), Err(Error::InvalidMultiplicativeSet(_))));
        assert!(matches!(parse_mult_set(&z, "all"), Err(Error::Parse { .. })));
    }

    fn ring_strategy() -> impl Strategy<Value = RingDescriptor> {
        prop_oneof![
            Just(RingDescriptor::integers()),
            (2u64..300).prop_map(|n| RingDescriptor::modular(n).unwrap()),
            prop::sample::select(vec![2u64, 3, 5, 7, 11]).prop_map(|p| RingDescriptor::polynomials(p).unwrap()),
            prop::collection::vec(2u64..9, 2..4).prop_map(|ms| RingDescriptor::product(&ms).unwrap()),
        ]
    }

    fn element_strategy() -> impl Strategy<Value = RingElement> {
        (ring_strategy(), prop::collection::vec(-1000i64..1000, 1..5)).prop_map(|(r, vs)| {
            match r.kind() {
                RingKind::PolynomialsOverPrimeField(p) => r.polynomial(Poly::from_signed(*p, &vs)).unwrap(),
                RingKind::FiniteProduct(ms) => {
                    let parts: Vec<i64> = ms.iter().enumerate().map(|(k, &m)| vs.get(k).copied().unwrap_or(0).rem_euclid(m as i64)).collect();
                    r.tuple(&parts).unwrap()
                }
                _ => r.from_i64(vs[0]),
            }
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(e in element_strategy()) {
            let ring = e.ring().clone();
            prop_assert_eq!(parse_ring(&ring.to_string())?, ring.clone());
            prop_assert_eq!(parse_element(&ring, &e.to_string())?, e.clone());
            let i = Ideal::principal(&e);
            prop_assert_eq!(parse_ideal(&ring, &i.to_string())?, i);
        }
    }
}
