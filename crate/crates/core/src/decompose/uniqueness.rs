use std::collections::BTreeMap;

use super::Decomposition;
use crate::error::{Error, Result};
use crate::multiplicative::{saturate, Caps, MultiplicativeSet};
use crate::ring::{ideal_colon_element, intersect_all, is_prime_ideal, radical, Ideal, RingElement};

fn require_minimal(dec: &Decomposition) -> Result<()> {
    if dec.minimal {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "decomposition of {} is not minimal",
            dec.ideal
        )))
    }
}

/// The saturated radicals `S(P_i)` of a minimal decomposition, sorted.
pub fn associated_s_primes(dec: &Decomposition) -> Result<Vec<Ideal>> {
    require_minimal(dec)?;
    let mut out: Vec<Ideal> = dec
        .components
        .iter()
        .map(|c| c.saturated_radical.clone())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstUniquenessReport {
    pub associated: Vec<Ideal>,
    /// Each prime of the form `S(rad(I : x))` with the first `x` producing it.
    pub observed: Vec<(Ideal, RingElement)>,
    pub test_set_size: usize,
    pub agrees: bool,
}

/// Elements `x` to scan. Finite rings: every element. Otherwise products of
/// divisors of the generator with `S`-residues, divisors first.
fn test_set(i: &Ideal, s: &MultiplicativeSet, caps: Caps) -> Result<Vec<RingElement>> {
    let ring = i.ring();
    if let Some(all) = ring.elements() {
        if all.len() > caps.max_elements {
            return Err(Error::CapExceeded {
                what: "ring elements".into(),
                needed: all.len().to_string(),
                cap: caps.max_elements,
            });
        }
        return Ok(all);
    }
    if i.is_zero_ideal() {
        return Err(Error::UnsupportedEnumeration(format!(
            "test elements for the zero ideal of {ring}"
        )));
    }
    let divisors: Vec<RingElement> = i
        .divisor_ideals()?
        .iter()
        .map(|d| d.generator_element())
        .collect();
    let residues = s
        .s_residues_mod(&i.generator_element(), caps)
        .unwrap_or_else(|_| vec![ring.one()]);
    let mut out = Vec::new();
    'fill: for r in std::iter::once(ring.one()).chain(residues.into_iter().filter(|r| !r.is_one())) {
        for d in &divisors {
            if out.len() >= caps.max_elements {
                break 'fill;
            }
            out.push(d.mul(&r));
        }
    }
    Ok(out)
}

/// Compares the associated S-primes of `dec` with the primes among
/// `S(rad(I : x))` as `x` runs over a test set.
pub fn first_uniqueness_report(
    i: &Ideal,
    s: &MultiplicativeSet,
    dec: &Decomposition,
    caps: Caps,
) -> Result<FirstUniquenessReport> {
    if &dec.ideal != i || &dec.mult_set != s {
        return Err(Error::Precondition(
            "decomposition is for a different ideal or set".into(),
        ));
    }
    let associated = associated_s_primes(dec)?;
    let xs = test_set(i, s, caps)?;
    // Many x share the colon ideal (I : x); saturate each one once.
    let mut colons: BTreeMap<Ideal, RingElement> = BTreeMap::new();
    for x in &xs {
        if !i.contains(x) {
            colons.entry(ideal_colon_element(i, x)?).or_insert_with(|| x.clone());
        }
    }
    let mut seen: BTreeMap<Ideal, RingElement> = BTreeMap::new();
    for (c, x) in colons {
        let v = saturate(s, &radical(&c))?.0;
        if is_prime_ideal(&v) {
            let e = seen.entry(v).or_insert_with(|| x.clone());
            if x < *e {
                *e = x;
            }
        }
    }
    let agrees = seen.keys().cloned().collect::<Vec<_>>() == associated;
    Ok(FirstUniquenessReport {
        associated,
        observed: seen.into_iter().collect(),
        test_set_size: xs.len(),
        agrees,
    })
}

/// 0-based indices `i` with `P_j ⊄ S(P_i)` for every `j ≠ i`.
pub fn isolated_s_primes(dec: &Decomposition) -> Result<Vec<usize>> {
    require_minimal(dec)?;
    let comps = &dec.components;
    Ok((0..comps.len())
        .filter(|&a| {
            comps
                .iter()
                .enumerate()
                .all(|(b, c)| b == a || !c.radical.is_subset_of(&comps[a].saturated_radical))
        })
        .collect())
}

/// Two minimal decompositions of the same ideal have the same intersection
/// of isolated components.
pub fn second_uniqueness_check(a: &Decomposition, b: &Decomposition) -> Result<bool> {
    if a.ideal != b.ideal || a.mult_set != b.mult_set {
        return Err(Error::Precondition(
            "decompositions are of different ideals or sets".into(),
        ));
    }
    let isolated_meet = |d: &Decomposition| -> Result<Ideal> {
        let idx = isolated_s_primes(d)?;
        intersect_all(d.ideal.ring(), idx.iter().map(|&k| &d.components[k].ideal))
    };
    let (ia, ib) = (isolated_s_primes(a)?, isolated_s_primes(b)?);
    let sat = |d: &Decomposition, idx: &[usize]| -> Vec<Ideal> {
        let mut v: Vec<Ideal> = idx.iter().map(|&k| d.components[k].saturated_radical.clone()).collect();
        v.sort();
        v
    };
    Ok(sat(a, &ia) == sat(b, &ib) && isolated_meet(a)? == isolated_meet(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::s_primary_decomposition;
    use crate::ring::RingDescriptor;

    fn zi(v: i64) -> Ideal {
        Ideal::principal(&RingDescriptor::integers().from_i64(v))
    }

    fn comp(ps: &[i64]) -> MultiplicativeSet {
        let z = RingDescriptor::integers();
        let ps: Vec<_> = ps.iter().map(|&p| z.from_i64(p)).collect();
        MultiplicativeSet::complement_of_primes(&z, &ps).unwrap()
    }

    #[test]
    fn first_uniqueness_on_integers() {
        let s = comp(&[2, 3]);
        let d = s_primary_decomposition(&zi(36), &s).unwrap();
        let r = first_uniqueness_report(&zi(36), &s, &d, Caps::default()).unwrap();
        assert!(r.agrees);
        assert_eq!(r.associated, [zi(2), zi(3)]);
        let s = comp(&[3, 5]);
        let d = s_primary_decomposition(&zi(450), &s).unwrap();
        let r = first_uniqueness_report(&zi(450), &s, &d, Caps::default()).unwrap();
        assert!(r.agrees);
        assert_eq!(r.associated, [zi(3), zi(5)]);
    }

    #[test]
    fn isolated_and_second_uniqueness() {
        let s = comp(&[3, 5]);
        let a = s_primary_decomposition(&zi(450), &s).unwrap();
        assert_eq!(isolated_s_primes(&a).unwrap(), [0, 1]);
        // (9) and (50) also decompose (450).
        let b = Decomposition::from_components(&zi(450), &s, &[zi(9), zi(50)], None).unwrap();
        assert!(b.minimal);
        assert_ne!(a.component_ideals(), b.component_ideals());
        assert!(second_uniqueness_check(&a, &b).unwrap());
    }

    #[test]
    fn non_minimal_rejected() {
        let u = MultiplicativeSet::units(&RingDescriptor::integers());
        let d = Decomposition::from_components(&zi(36), &u, &[zi(4), zi(9), zi(3)], None).unwrap();
        assert!(matches!(associated_s_primes(&d), Err(Error::Precondition(_))));
        assert!(matches!(isolated_s_primes(&d), Err(Error::Precondition(_))));
    }
}
