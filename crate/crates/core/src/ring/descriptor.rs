use std::fmt;
use std::sync::Arc;

use crate::arith::integer::is_prime_u64;
use crate::error::{Error, Result};

/// The kinds of ring in the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    /// The integers `Z`.
    Integers,
    /// `Z/n` with `n >= 2`.
    ModularIntegers(u64),
    /// `F_p[x]` for a prime `p`.
    PolynomialsOverPrimeField(u64),
    /// `Z/n_1 x ... x Z/n_k` with every `n_i >= 2`.
    FiniteProduct(Arc<[u64]>),
}

/// A validated ring from the catalog. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingDescriptor(RingKind);

impl RingDescriptor {
    pub fn integers() -> Self {
        RingDescriptor(RingKind::Integers)
    }

    pub fn modular(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("modulus {n} must be at least 2")));
        }
        if n > u32::MAX as u64 {
            return Err(Error::InvalidRing(format!("modulus {n} is beyond desk scale")));
        }
        Ok(RingDescriptor(RingKind::ModularIntegers(n)))
    }

    pub fn polynomials(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidRing(format!("characteristic {p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidRing(format!("characteristic {p} is beyond desk scale")));
        }
        Ok(RingDescriptor(RingKind::PolynomialsOverPrimeField(p)))
    }

    pub fn product(moduli: &[u64]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidRing("empty product".into()));
        }
        let mut size: u64 = 1;
        for &n in moduli {
            if n < 2 {
                return Err(Error::InvalidRing(format!(
                    "component modulus {n} must be at least 2"
                )));
            }
            size = size
                .checked_mul(n)
                .filter(|s| *s <= u32::MAX as u64)
                .ok_or_else(|| Error::InvalidRing("product ring is beyond desk scale".into()))?;
        }
        Ok(RingDescriptor(RingKind::FiniteProduct(moduli.into())))
    }

    /// The product `(Z/2)^k`, a finite truncation of the countable Boolean product.
    pub fn boolean(k: usize) -> Result<Self> {
        RingDescriptor::product(&vec![2; k])
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            self.0,
            RingKind::ModularIntegers(_) | RingKind::FiniteProduct(_)
        )
    }

    /// Number of elements for finite rings.
    pub fn size(&self) -> Option<u64> {
        match &self.0 {
            RingKind::ModularIntegers(n) => Some(*n),
            RingKind::FiniteProduct(ms) => Some(ms.iter().product()),
            _ => None,
        }
    }

    pub fn moduli(&self) -> Option<&[u64]> {
        match &self.0 {
            RingKind::FiniteProduct(ms) => Some(ms),
            _ => None,
        }
    }

    pub(crate) fn ensure_same(&self, other: &RingDescriptor) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::mismatch(self, other))
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            RingKind::Integers => write!(f, "Z"),
            RingKind::ModularIntegers(n) => write!(f, "Z/{n}"),
            RingKind::PolynomialsOverPrimeField(p) => write!(f, "GF({p})[x]"),
            RingKind::FiniteProduct(ms) => {
                let parts: Vec<String> = ms.iter().map(|n| format!("Z/{n}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert!(RingDescriptor::modular(1).is_err());
        assert!(RingDescriptor::polynomials(4).is_err());
        assert!(RingDescriptor::polynomials(5).is_ok());
        assert!(RingDescriptor::product(&[]).is_err());
        assert!(RingDescriptor::product(&[2, 1]).is_err());
        assert_eq!(RingDescriptor::boolean(3).unwrap().size(), Some(8));
        assert_eq!(RingDescriptor::integers().size(), None);
    }

    #[test]
    fn display() {
        assert_eq!(RingDescriptor::integers().to_string(), "Z");
        assert_eq!(RingDescriptor::modular(12).unwrap().to_string(), "Z/12");
        assert_eq!(RingDescriptor::polynomials(5).unwrap().to_string(), "GF(5)[x]");
        assert_eq!(
            RingDescriptor::boolean(3).unwrap().to_string(),
            "Z/2 x Z/2 x Z/2"
        );
    }
}
