//! Exact arithmetic kernels: integer factorization, polynomials over `F_p`,
//! and the divisibility-lattice operations shared by every principal ideal
//! ring in the catalog.

pub mod integer;
pub mod poly;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use poly::Poly;

/// A canonical ideal generator in a Euclidean domain `D`.
///
/// Every catalog ring is `D/(m)` for `D` one of `Z`, `F_p[x]` and a modulus
/// `m` (zero for the domain itself). Ideals correspond to normalized divisors
/// of `m`, so sums, intersections, products, colons and radicals reduce to
/// gcd/lcm arithmetic on these generators.
pub(crate) trait Generator: Clone + Eq + Ord {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    /// Normalized gcd; `gcd(0, 0) = 0`.
    fn gcd(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `self / other`, exact division.
    fn div_exact(&self, other: &Self) -> Self;
    /// `self | other`.
    fn divides(&self, other: &Self) -> bool;
    /// Normalized prime factorization of a nonzero generator.
    fn factor(&self) -> Vec<(Self, u32)>;
    fn pow(&self, e: u32) -> Self;

    fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        self.div_exact(&self.gcd(other)).mul(other)
    }

    /// `self * other` reduced to the canonical divisor of `m`.
    fn mul_canonical(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).gcd(m)
    }
}

impl Generator for u64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn one_like(&self) -> Self {
        1
    }
    fn zero_like(&self) -> Self {
        0
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("generator product overflow")
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn divides(&self, other: &Self) -> bool {
        u64::is_multiple_of(*other, *self)
    }
    fn factor(&self) -> Vec<(Self, u32)> {
        integer::factor_u64(*self)
    }
    fn pow(&self, e: u32) -> Self {
        u64::pow(*self, e)
    }
    fn mul_canonical(&self, other: &Self, m: &Self) -> Self {
        if *m == 0 {
            return self.mul(other);
        }
        let r = ((*self as u128 * *other as u128) % *m as u128) as u64;
        Integer::gcd(&r, m)
    }
}

impl Generator for BigUint {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn one_like(&self) -> Self {
        BigUint::one()
    }
    fn zero_like(&self) -> Self {
        BigUint::zero()
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn divides(&self, other: &Self) -> bool {
        if Zero::is_zero(self) {
            Zero::is_zero(other)
        } else {
            Zero::is_zero(&(other % self))
        }
    }
    fn factor(&self) -> Vec<(Self, u32)> {
        integer::factor_biguint(self)
    }
    fn pow(&self, e: u32) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }
}

impl Generator for Poly {
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Poly::is_one(self)
    }
    fn one_like(&self) -> Self {
        Poly::one(self.characteristic())
    }
    fn zero_like(&self) -> Self {
        Poly::zero(self.characteristic())
    }
    fn gcd(&self, other: &Self) -> Self {
        Poly::gcd(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self.div_rem(other).0
    }
    fn divides(&self, other: &Self) -> bool {
        other.divisible_by(self)
    }
    fn factor(&self) -> Vec<(Self, u32)> {
        Poly::factor(self)
    }
    fn pow(&self, e: u32) -> Self {
        Poly::pow(self, e)
    }
}

/// Ideal lattice of `D/(m)` expressed on canonical generators.
///
/// All inputs are canonical: divisors of `m` (any normalized element when
/// `m = 0`).
pub(crate) mod lattice {
    use super::Generator;

    pub fn canonical<T: Generator>(g: &T, m: &T) -> T {
        g.gcd(m)
    }

    pub fn sum<T: Generator>(a: &T, b: &T) -> T {
        a.gcd(b)
    }

    pub fn intersection<T: Generator>(a: &T, b: &T) -> T {
        a.lcm(b)
    }

    pub fn product<T: Generator>(a: &T, b: &T, m: &T) -> T {
        a.mul_canonical(b, m)
    }

    /// `(a : b) = {x : x b in (a)}`.
    pub fn colon<T: Generator>(a: &T, b: &T) -> T {
        if a.is_zero() {
            return if b.is_zero() { a.one_like() } else { a.zero_like() };
        }
        a.div_exact(&a.gcd(b))
    }

    pub fn radical<T: Generator>(a: &T) -> T {
        if a.is_zero() {
            return a.clone();
        }
        a.factor()
            .into_iter()
            .fold(a.one_like(), |acc, (p, _)| acc.mul(&p))
    }

    /// `D/(a)` is a domain. The zero generator can only occur when `m = 0`,
    /// where `D` itself is a domain.
    pub fn is_prime<T: Generator>(a: &T) -> bool {
        if a.is_zero() {
            return true;
        }
        let f = a.factor();
        f.len() == 1 && f[0].1 == 1
    }

    pub fn is_primary<T: Generator>(a: &T) -> bool {
        a.is_zero() || a.factor().len() == 1
    }

    /// Normalized divisors of a nonzero `a`, ascending.
    pub fn divisors<T: Generator>(a: &T) -> Vec<T> {
        let mut divs = vec![a.one_like()];
        for (p, e) in a.factor() {
            let current = divs.clone();
            let mut pk = a.one_like();
            for _ in 0..e {
                pk = pk.mul(&p);
                divs.extend(current.iter().map(|d| d.mul(&pk)));
            }
        }
        divs.sort();
        divs
    }

    /// Prime-power components `p^e || a` of a nonzero `a`, by ascending prime.
    pub fn prime_power_parts<T: Generator>(a: &T) -> Vec<(T, T)> {
        a.factor()
            .into_iter()
            .map(|(p, e)| {
                let pe = p.pow(e);
                (p, pe)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::lattice::*;

    #[test]
    fn integer_lattice_examples() {
        assert_eq!(sum(&6u64, &4), 2);
        assert_eq!(sum(&6u64, &0), 6);
        assert_eq!(intersection(&4u64, &6), 12);
        assert_eq!(intersection(&2u64, &3), 6);
        assert_eq!(product(&4u64, &6, &0), 24);
        assert_eq!(colon(&12u64, &8), 3);
        assert_eq!(colon(&36u64, &4), 9);
        assert_eq!(colon(&6u64, &1), 6);
        assert_eq!(colon(&0u64, &0), 1);
        assert_eq!(colon(&0u64, &5), 0);
        assert_eq!(radical(&12u64), 6);
        assert_eq!(radical(&4u64), 2);
        assert!(is_primary(&4u64) && !is_prime(&4u64));
        assert_eq!(divisors(&6u64), vec![1, 2, 3, 6]);
    }

    #[test]
    fn modular_lattice_examples() {
        // Z/12: (4) ∩ (3) = (12) = zero ideal; (4)(6) = zero ideal.
        assert_eq!(canonical(&intersection(&4u64, &3), &12), 12);
        assert_eq!(product(&4u64, &6, &12), 12);
        assert!(is_prime(&2u64));
        assert_eq!(divisors(&12u64).len(), 6);
    }
}
