use super::{is_minimal_decomposition, s_primary_decomposition, Component, Decomposition};
use crate::classify::{is_s_primary, is_s_prime};
use crate::error::{Error, Result};
use crate::multiplicative::{
    count_restrict_check, saturate, Containment, MultiplicativeSet, WitnessCertificate,
    WitnessKind,
};
use crate::ring::{
    ideal_colon, ideal_intersection, ideal_product, intersect_all, is_primary_ideal,
    is_prime_ideal, radical, Ideal,
};

/// Intersects S-primary ideals sharing one saturated radical; the result is
/// S-primary with the same saturated radical.
pub fn intersect_same_prime_components(qs: &[Ideal], s: &MultiplicativeSet) -> Result<Ideal> {
    let first = qs
        .first()
        .ok_or_else(|| Error::Precondition("no ideals to intersect".into()))?;
    let comps = qs
        .iter()
        .map(|q| Component::new(q, s))
        .collect::<Result<Vec<_>>>()?;
    let key = &comps[0].saturated_radical;
    if comps.iter().any(|c| &c.saturated_radical != key) {
        return Err(Error::Precondition(
            "components have different saturated radicals".into(),
        ));
    }
    let meet = intersect_all(first.ring(), qs)?;
    let out = Component::new(&meet, s)
        .map_err(|_| Error::contract(format!("{meet} is not S-primary")))?;
    if &out.saturated_radical != key {
        return Err(Error::contract(format!(
            "saturated radical changed to {}",
            out.saturated_radical
        )));
    }
    if comps.iter().all(|c| c.radical == comps[0].radical) && out.radical != comps[0].radical {
        return Err(Error::contract(format!("radical changed to {}", out.radical)));
    }
    Ok(meet)
}

/// `Q ∩ J` for a primary `Q` disjoint from `S` and any `J` meeting `S`.
/// The result is S-primary with radical `rad Q ∩ rad J`.
pub fn cross_with_meeting_ideal(q: &Ideal, j: &Ideal, s: &MultiplicativeSet) -> Result<Ideal> {
    q.ring().ensure_same(j.ring())?;
    q.ring().ensure_same(s.ring())?;
    if !is_primary_ideal(q) {
        return Err(Error::Precondition(format!("{q} is not primary")));
    }
    if !s.is_disjoint(q)? {
        return Err(Error::Precondition(format!("{q} meets S")));
    }
    if s.is_disjoint(j)? {
        return Err(Error::Precondition(format!("{j} does not meet S")));
    }
    let out = ideal_intersection(q, j)?;
    if !is_s_primary(&out, s)?.holds {
        return Err(Error::contract(format!("{out} is not S-primary")));
    }
    if radical(&out) != ideal_intersection(&radical(q), &radical(j))? {
        return Err(Error::contract(format!("radical of {out} is wrong")));
    }
    Ok(out)
}

/// For an S-prime `P` containing `Q_1 ∩ … ∩ Q_n`, the first `k` with
/// `s·Q_k ⊆ P` together with `s`: 1 when `Q_k ⊆ P`, else the stabilizer of
/// `S(P)`.
pub fn covers_some_component(
    p: &Ideal,
    parts: &[Ideal],
    s: &MultiplicativeSet,
) -> Result<(usize, WitnessCertificate)> {
    let prime = is_s_prime(p, s)?;
    if !prime.holds {
        return Err(Error::Precondition(format!("{p} is not S-prime")));
    }
    if parts.is_empty() {
        return Err(Error::Precondition("no components given".into()));
    }
    if !intersect_all(p.ring(), parts)?.is_subset_of(p) {
        return Err(Error::Precondition(format!(
            "the intersection is not contained in {p}"
        )));
    }
    let (sat, stab) = saturate(s, p)?;
    for (k, qk) in parts.iter().enumerate() {
        let cert = if qk.is_subset_of(p) {
            WitnessCertificate::trivial(WitnessKind::SPrimeWitness, p.ring())
        } else if qk.is_subset_of(&sat) {
            stab.with_kind(WitnessKind::SPrimeWitness)
        } else {
            continue;
        };
        if !ideal_product(&Ideal::principal(&cert.witness), qk)?.is_subset_of(p) {
            return Err(Error::contract(format!(
                "{} does not push {qk} into {p}",
                cert.witness
            )));
        }
        return Ok((k, cert));
    }
    Err(Error::contract(format!("no component is covered by {p}")))
}

pub fn minimal_primes_over(i: &Ideal) -> Vec<Ideal> {
    i.minimal_primes()
}

/// `sx ∈ P` with `s ∈ S` forces `x ∈ P`, i.e. `S(P) = P`.
pub fn zero_divisor_condition(p: &Ideal, s: &MultiplicativeSet) -> Result<bool> {
    Ok(&saturate(s, p)?.0 == p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremMinReport {
    /// Per component: no element of `S` is a zero divisor modulo `P_i`.
    pub hypothesis: Vec<bool>,
    pub hypothesis_holds: bool,
    pub radicals: Vec<Ideal>,
    pub minimal_primes: Vec<Ideal>,
    /// Minimal primes of the zero ideal not among the radicals.
    pub missing: Vec<Ideal>,
    /// Only decided when the hypothesis holds.
    pub conclusion_holds: Option<bool>,
}

/// For a minimal S-primary decomposition of `(0)`: when every `P_i` is
/// saturated, every minimal prime of `R` is some `P_i`.
pub fn theorem_min_check(dec: &Decomposition) -> Result<TheoremMinReport> {
    if !dec.ideal.is_zero_ideal() {
        return Err(Error::Precondition(format!(
            "expected a decomposition of the zero ideal, got {}",
            dec.ideal
        )));
    }
    if !is_minimal_decomposition(dec) {
        return Err(Error::Precondition("decomposition is not minimal".into()));
    }
    let s = &dec.mult_set;
    let hypothesis = dec
        .components
        .iter()
        .map(|c| zero_divisor_condition(&c.radical, s))
        .collect::<Result<Vec<_>>>()?;
    let hypothesis_holds = hypothesis.iter().all(|&h| h);
    let mut radicals: Vec<Ideal> = dec.components.iter().map(|c| c.radical.clone()).collect();
    radicals.sort();
    radicals.dedup();
    let minimal_primes = minimal_primes_over(&dec.ideal);
    let missing: Vec<Ideal> = minimal_primes
        .iter()
        .filter(|m| !radicals.contains(m))
        .cloned()
        .collect();
    if hypothesis_holds && radicals.iter().any(|p| !is_prime_ideal(p)) {
        return Err(Error::contract(
            "a saturated S-prime radical is not prime".to_string(),
        ));
    }
    Ok(TheoremMinReport {
        conclusion_holds: hypothesis_holds.then_some(missing.is_empty()),
        hypothesis,
        hypothesis_holds,
        radicals,
        minimal_primes,
        missing,
    })
}

/// A radical ideal disjoint from `S` as an intersection of S-prime ideals.
pub fn s_prime_decomposition_of_radical(i: &Ideal, s: &MultiplicativeSet) -> Result<Vec<Ideal>> {
    if &radical(i) != i {
        return Err(Error::Precondition(format!("{i} is not radical")));
    }
    let dec = s_primary_decomposition(i, s)?;
    let mut out: Vec<Ideal> = dec.components.iter().map(|c| radical(&c.ideal)).collect();
    out.sort();
    out.dedup();
    for p in &out {
        if !is_s_prime(p, s)?.holds {
            return Err(Error::contract(format!("{p} is not S-prime")));
        }
    }
    if &intersect_all(i.ring(), &out)? != i {
        return Err(Error::contract(format!("S-primes do not intersect to {i}")));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub kept: Vec<Component>,
    pub dropped: Vec<Component>,
    /// `S'(I)` for the larger set.
    pub saturation: Ideal,
    /// `t ∈ S` with `t·S'(I) ⊆ ⋂ kept ⊆ S'(I)`.
    pub witness: WitnessCertificate,
}

/// Passing to a larger multiplicative set `S' ⊇ S`: components meeting `S'`
/// drop out and the rest intersect to `S'(I)` up to an element of `S`.
pub fn restrict_decomposition(dec: &Decomposition, larger: &MultiplicativeSet) -> Result<Restriction> {
    match dec.mult_set.restrict_to_larger(larger)? {
        Containment::Yes => {}
        c => {
            return Err(Error::Precondition(format!(
                "{} is not known to lie in {larger} ({c:?})",
                dec.mult_set
            )))
        }
    }
    if !is_minimal_decomposition(dec) {
        return Err(Error::Precondition("decomposition is not minimal".into()));
    }
    let (mut kept, mut dropped) = (Vec::new(), Vec::new());
    for c in &dec.components {
        if larger.is_disjoint(&c.ideal)? {
            kept.push(c.clone());
        } else {
            dropped.push(c.clone());
        }
    }
    let ring = dec.ideal.ring();
    let saturation = saturate(larger, &dec.ideal)?.0;
    let meet = intersect_all(ring, kept.iter().map(|c| &c.ideal))?;
    let colon = ideal_colon(&meet, &saturation)?;
    let t = dec.mult_set.meeting_witness(&colon)?.ok_or_else(|| {
        Error::contract(format!("no element of {} maps {saturation} into {meet}", dec.mult_set))
    })?;
    count_restrict_check();
    if !meet.is_subset_of(&saturation)
        || !ideal_product(&Ideal::principal(&t), &saturation)?.is_subset_of(&meet)
    {
        return Err(Error::contract(format!(
            "restriction of {} to {larger} fails with t = {t}",
            dec.ideal
        )));
    }
    Ok(Restriction {
        kept,
        dropped,
        saturation,
        witness: WitnessCertificate::new(WitnessKind::DecompositionWitness, vec![t], ring),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn z() -> RingDescriptor {
        RingDescriptor::integers()
    }

    fn zi(v: i64) -> Ideal {
        Ideal::principal(&z().from_i64(v))
    }

    fn comp(ps: &[i64]) -> MultiplicativeSet {
        let ps: Vec<_> = ps.iter().map(|&p| z().from_i64(p)).collect();
        MultiplicativeSet::complement_of_primes(&z(), &ps).unwrap()
    }

    fn gen(gs: &[i64]) -> MultiplicativeSet {
        let gs: Vec<_> = gs.iter().map(|&g| z().from_i64(g)).collect();
        MultiplicativeSet::generated_by(&z(), &gs).unwrap()
    }

    #[test]
    fn cross_examples() {
        let s = comp(&[2]);
        assert_eq!(cross_with_meeting_ideal(&zi(4), &zi(3), &s).unwrap(), zi(12));
        assert_eq!(cross_with_meeting_ideal(&zi(4), &zi(1), &s).unwrap(), zi(4));
        let e = |r: Result<Ideal>| match r {
            Err(Error::Precondition(m)) => m,
            other => panic!("{other:?}"),
        };
        assert!(e(cross_with_meeting_ideal(&zi(6), &zi(3), &s)).contains("not primary"));
        assert!(e(cross_with_meeting_ideal(&zi(9), &zi(3), &s)).contains("meets S"));
        assert!(e(cross_with_meeting_ideal(&zi(4), &zi(2), &s)).contains("does not meet S"));
    }

    #[test]
    fn same_prime_intersection() {
        let s = comp(&[2]);
        assert_eq!(intersect_same_prime_components(&[zi(4), zi(24)], &s).unwrap(), zi(24));
        assert!(intersect_same_prime_components(&[zi(4), zi(9)], &MultiplicativeSet::units(&z())).is_err());
    }

    #[test]
    fn covering() {
        let (k, w) = covers_some_component(&zi(3), &[zi(2), zi(9)], &MultiplicativeSet::units(&z())).unwrap();
        assert_eq!((k, w.witness), (1, z().one()));
        // (6) is S-prime for Z ∖ 3Z with stabilizer 2; (3) ⊄ (6).
        let (k, w) = covers_some_component(&zi(6), &[zi(3), zi(4)], &comp(&[3])).unwrap();
        assert_eq!((k, w.witness), (0, z().from_i64(2)));
        assert!(covers_some_component(&zi(3), &[zi(2), zi(9)], &comp(&[2])).is_err());
    }

    #[test]
    fn zero_divisors_and_theorem_min() {
        assert!(zero_divisor_condition(&zi(3), &comp(&[3])).unwrap());
        assert!(!zero_divisor_condition(&zi(6), &comp(&[3])).unwrap());
        let r = RingDescriptor::modular(12).unwrap();
        let u = MultiplicativeSet::units(&r);
        let d = s_primary_decomposition(&Ideal::zero(&r), &u).unwrap();
        let rep = theorem_min_check(&d).unwrap();
        assert!(rep.hypothesis_holds);
        assert_eq!(rep.conclusion_holds, Some(true));
        assert!(theorem_min_check(&s_primary_decomposition(&zi(12), &MultiplicativeSet::units(&z())).unwrap()).is_err());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(s_prime_decomposition_of_radical(&zi(30), &comp(&[2, 3, 5])).unwrap(), [zi(2), zi(3), zi(5)]);
        assert_eq!(s_prime_decomposition_of_radical(&zi(6), &comp(&[3])).unwrap(), [zi(6)]);
        assert_eq!(s_prime_decomposition_of_radical(&zi(30), &comp(&[5])).unwrap(), [zi(30)]);
        assert!(s_prime_decomposition_of_radical(&zi(12), &comp(&[2])).is_err());
    }

    #[test]
    fn restriction() {
        let d = s_primary_decomposition(&zi(36), &MultiplicativeSet::units(&z())).unwrap();
        let r = restrict_decomposition(&d, &comp(&[3])).unwrap();
        assert_eq!(r.saturation, zi(9));
        assert_eq!(r.kept.len(), 1);
        assert_eq!(r.kept[0].ideal, zi(9));
        assert_eq!(r.witness.witness, z().one());
        let d = s_primary_decomposition(&zi(96), &gen(&[3])).unwrap();
        let r = restrict_decomposition(&d, &gen(&[2, 3])).unwrap();
        assert!(r.kept.is_empty());
        assert!(r.saturation.is_unit_ideal());
        assert!(restrict_decomposition(&d, &gen(&[2])).is_err());
        let before = crate::multiplicative::restrict_contract_checks();
        let d = s_primary_decomposition(&zi(90), &comp(&[2, 3, 5])).unwrap();
        let r = restrict_decomposition(&d, &comp(&[3, 5])).unwrap();
        assert_eq!(r.dropped.len(), 1);
        assert!(crate::multiplicative::restrict_contract_checks() > before);
    }
}
