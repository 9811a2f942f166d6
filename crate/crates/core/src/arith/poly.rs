//! Dense univariate polynomials over a prime field `F_p`.

use std::cmp::Ordering;
use std::fmt;

/// Polynomial over `F_p`, coefficients in ascending degree order.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl Poly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut poly = Poly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    /// Coefficients given as signed integers, reduced into `[0, p)`.
    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i128;
        Poly::new(
            p,
            coeffs
                .iter()
                .map(|&c| (c as i128).rem_euclid(pi) as u64)
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        Poly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Poly { p, coeffs: vec![1] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Poly::new(p, vec![c])
    }

    /// The monomial `x^k`.
    pub fn monomial(p: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Poly { p, coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Nonzero constants are the units of `F_p[x]`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Poly {
        let p = self.p as u128;
        Poly::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| ((a as u128 * c as u128) % p) as u64)
                .collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Poly::new(self.p, c)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(
            self.p,
            self.coeffs.iter().map(|&a| (self.p - a) % self.p).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let p = self.p as u128;
        let mut c = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a as u128 * b as u128) % p;
            }
        }
        Poly::new(self.p, c.into_iter().map(|v| v as u64).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(self.p);
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

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let p = self.p as u128;
        let dd = divisor.coeffs.len() - 1;
        let inv = inv_mod(divisor.leading(), self.p) as u128;
        let mut rem: Vec<u64> = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let coef = ((rem[k + dd] as u128 * inv) % p) as u64;
            quot[k] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let sub = (coef as u128 * b as u128) % p;
                rem[k + j] = ((rem[k + j] as u128 + p - sub) % p) as u64;
            }
        }
        (Poly::new(self.p, quot), Poly::new(self.p, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// `divisor | self`; the zero polynomial divides only zero.
    pub fn divisible_by(&self, divisor: &Poly) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        self.rem(divisor).is_zero()
    }

    /// Monic gcd, with `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Every monic polynomial of exact degree `d`, in canonical order.
    pub fn monic_of_degree(p: u64, d: usize) -> Vec<Poly> {
        let count = (p as usize).pow(d as u32);
        (0..count)
            .map(|mut idx| {
                let mut coeffs = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    coeffs.push((idx % p as usize) as u64);
                    idx /= p as usize;
                }
                coeffs.push(1);
                Poly { p, coeffs }
            })
            .collect()
    }

    /// All polynomials of degree below `d` (the residues modulo a degree-`d`
    /// polynomial), in canonical order.
    pub fn all_below_degree(p: u64, d: usize) -> Vec<Poly> {
        let mut out: Vec<Poly> = (0..d)
            .flat_map(|k| {
                Poly::monic_of_degree(p, k)
                    .into_iter()
                    .flat_map(move |m| (1..p).map(move |c| m.scale(c)))
            })
            .collect();
        out.push(Poly::zero(p));
        out.sort();
        out
    }

    /// Factorization of a nonzero polynomial into monic irreducibles with
    /// multiplicity, by trial division with monic candidates of increasing
    /// degree. The unit part is dropped.
    pub fn factor(&self) -> Vec<(Poly, u32)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut rest = self.monic();
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            for cand in Poly::monic_of_degree(self.p, d) {
                let mut e = 0;
                loop {
                    let (q, r) = rest.div_rem(&cand);
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    e += 1;
                }
                if e > 0 {
                    out.push((cand, e));
                }
            }
            d += 1;
        }
        if rest.degree().unwrap_or(0) >= 1 {
            match out.iter_mut().find(|(q, _)| *q == rest) {
                Some(slot) => slot.1 += 1,
                None => out.push((rest, 1)),
            }
        }
        out.sort();
        out
    }

    pub fn is_irreducible(&self) -> bool {
        if self.degree().unwrap_or(0) < 1 {
            return false;
        }
        let f = self.factor();
        f.len() == 1 && f[0].1 == 1
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}
