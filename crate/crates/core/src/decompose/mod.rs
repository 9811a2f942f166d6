//! S-primary decompositions: construction through the saturation/assembly
//! recipe, minimalization, and the uniqueness statements.

mod theorems;
mod uniqueness;

pub use theorems::{
    covers_some_component, cross_with_meeting_ideal, intersect_same_prime_components,
    minimal_primes_over, restrict_decomposition, s_prime_decomposition_of_radical,
    theorem_min_check, zero_divisor_condition, Restriction, TheoremMinReport,
};
pub use uniqueness::{
    associated_s_primes, first_uniqueness_report, isolated_s_primes, second_uniqueness_check,
    FirstUniquenessReport,
};

use std::collections::BTreeMap;

use crate::classify::is_s_primary;
use crate::error::{Error, Result};
use crate::multiplicative::{saturate, MultiplicativeSet, WitnessCertificate, WitnessKind};
use crate::ring::{
    ideal_colon_element, ideal_intersection, ideal_sum, intersect_all, radical, Ideal,
};

/// One S-primary component with its cached radical and saturations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub ideal: Ideal,
    pub radical: Ideal,
    /// `S(Q)`.
    pub saturation: Ideal,
    /// `S(rad Q)`.
    pub saturated_radical: Ideal,
    pub witness: WitnessCertificate,
}

impl Component {
    /// Fails with a precondition error unless `q` is S-primary.
    pub fn new(q: &Ideal, s: &MultiplicativeSet) -> Result<Component> {
        let verdict = is_s_primary(q, s)?;
        let witness = verdict
            .witness
            .ok_or_else(|| Error::Precondition(format!("{q} is not S-primary for {s}")))?;
        let rad = radical(q);
        Ok(Component {
            ideal: q.clone(),
            saturation: saturate(s, q)?.0,
            saturated_radical: saturate(s, &rad)?.0,
            radical: rad,
            witness,
        })
    }

    fn sort_key(&self) -> (&Ideal, &Ideal) {
        (&self.saturated_radical, &self.ideal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub ideal: Ideal,
    pub mult_set: MultiplicativeSet,
    pub components: Vec<Component>,
    pub minimal: bool,
    /// The `s` of `I = (I : s) ∩ (I + Rs)`.
    pub assembly_witness: WitnessCertificate,
}

impl Decomposition {
    /// Builds a decomposition from explicit components, checking that each
    /// is S-primary and that they intersect to `ideal`. Without an explicit
    /// assembly witness the saturation stabilizer of `ideal` is used.
    pub fn from_components(
        ideal: &Ideal,
        s: &MultiplicativeSet,
        components: &[Ideal],
        assembly_witness: Option<WitnessCertificate>,
    ) -> Result<Decomposition> {
        ideal.ring().ensure_same(s.ring())?;
        if components.is_empty() {
            return Err(Error::Precondition("a decomposition needs a component".into()));
        }
        let mut comps = components
            .iter()
            .map(|q| Component::new(q, s))
            .collect::<Result<Vec<_>>>()?;
        comps.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let meet = intersect_all(ideal.ring(), components)?;
        if &meet != ideal {
            return Err(Error::Precondition(format!(
                "components intersect to {meet}, not {ideal}"
            )));
        }
        let assembly_witness = match assembly_witness {
            Some(w) => w,
            None => saturate(s, ideal)?
                .1
                .with_kind(WitnessKind::DecompositionWitness),
        };
        let mut dec = Decomposition {
            ideal: ideal.clone(),
            mult_set: s.clone(),
            components: comps,
            minimal: false,
            assembly_witness,
        };
        dec.minimal = is_minimal_decomposition(&dec);
        Ok(dec)
    }

    pub fn component_ideals(&self) -> Vec<Ideal> {
        self.components.iter().map(|c| c.ideal.clone()).collect()
    }

    /// `(I : s) ∩ (I + Rs) = I` for the assembly witness `s`.
    pub fn assembly_identity_holds(&self) -> Result<bool> {
        let s = &self.assembly_witness.witness;
        let colon = ideal_colon_element(&self.ideal, s)?;
        let sum = ideal_sum(&self.ideal, &Ideal::principal(s))?;
        Ok(ideal_intersection(&colon, &sum)? == self.ideal)
    }
}

/// Classical minimal primary decomposition (`S` = units).
pub fn primary_decomposition(i: &Ideal) -> Result<Decomposition> {
    let s = MultiplicativeSet::units(i.ring());
    let comps = i.primary_components()?;
    let dec = Decomposition::from_components(
        i,
        &s,
        &comps,
        Some(WitnessCertificate::trivial(
            WitnessKind::DecompositionWitness,
            i.ring(),
        )),
    )?;
    if !dec.minimal {
        return Err(Error::contract(format!(
            "primary decomposition of {i} is not minimal"
        )));
    }
    Ok(dec)
}

/// Decomposes a proper ideal disjoint from `S`.
///
/// With `S(I) = (I : s)`, the primary components of `S(I)` are grouped by
/// saturated radical and each group intersection `I'_t` becomes
/// `S(I'_t) ∩ (I + Rs)`; the intersection of these is `I`.
pub fn s_primary_decomposition(i: &Ideal, s: &MultiplicativeSet) -> Result<Decomposition> {
    i.ring().ensure_same(s.ring())?;
    if i.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    if let Some(w) = s.meeting_witness(i)? {
        return Err(Error::NotDisjoint {
            witness: w.to_string(),
        });
    }
    let (sat, cert) = saturate(s, i)?;
    let mut groups: BTreeMap<Ideal, Vec<Ideal>> = BTreeMap::new();
    for q in sat.primary_components()? {
        let key = saturate(s, &radical(&q))?.0;
        groups.entry(key).or_default().push(q);
    }
    let assembly = ideal_sum(i, &Ideal::principal(&cert.witness))?;
    let mut parts = Vec::with_capacity(groups.len());
    for group in groups.values() {
        let merged = saturate(s, &intersect_all(i.ring(), group)?)?.0;
        parts.push(if assembly.is_unit_ideal() {
            merged
        } else {
            ideal_intersection(&merged, &assembly)?
        });
    }
    let witness = cert.with_kind(WitnessKind::DecompositionWitness);
    let dec = Decomposition::from_components(i, s, &parts, Some(witness)).map_err(|e| match e {
        Error::Precondition(m) => Error::contract(m),
        e => e,
    })?;
    if !dec.assembly_identity_holds()? {
        return Err(Error::contract(format!(
            "assembly identity fails for {i} with s = {}",
            dec.assembly_witness.witness
        )));
    }
    if !dec.minimal {
        return minimalize(&dec);
    }
    Ok(dec)
}

/// Conditions for minimality: distinct saturated radicals, and no `S(Q_i)`
/// containing the intersection of the other saturations.
pub fn is_minimal_decomposition(dec: &Decomposition) -> bool {
    let comps = &dec.components;
    for (a, c) in comps.iter().enumerate() {
        if comps[a + 1..]
            .iter()
            .any(|d| d.saturated_radical == c.saturated_radical)
        {
            return false;
        }
    }
    for (a, c) in comps.iter().enumerate() {
        let others: Vec<Ideal> = comps
            .iter()
            .enumerate()
            .filter(|(b, _)| *b != a)
            .map(|(_, d)| d.saturation.clone())
            .collect();
        let meet = intersect_all(dec.ideal.ring(), &others).expect("same ring");
        if meet.is_subset_of(&c.saturation) {
            return false;
        }
    }
    true
}

/// Merges components with equal saturated radical, prunes redundant ones in
/// ascending order (rescanning after each removal), and reassembles through
/// `I + Rs` if pruning lost exact recomposition.
pub fn minimalize(dec: &Decomposition) -> Result<Decomposition> {
    let ring = dec.ideal.ring();
    let s = &dec.mult_set;
    let mut groups: BTreeMap<Ideal, Vec<Ideal>> = BTreeMap::new();
    for c in &dec.components {
        groups
            .entry(c.saturated_radical.clone())
            .or_default()
            .push(c.ideal.clone());
    }
    let mut comps = groups
        .values()
        .map(|g| Component::new(&intersect_all(ring, g)?, s))
        .collect::<Result<Vec<_>>>()?;
    comps.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    'scan: loop {
        for a in 0..comps.len() {
            if comps.len() == 1 {
                break 'scan;
            }
            let others: Vec<Ideal> = comps
                .iter()
                .enumerate()
                .filter(|(b, _)| *b != a)
                .map(|(_, d)| d.saturation.clone())
                .collect();
            if intersect_all(ring, &others)?.is_subset_of(&comps[a].saturation) {
                comps.remove(a);
                continue 'scan;
            }
        }
        break;
    }
    let mut ideals: Vec<Ideal> = comps.iter().map(|c| c.ideal.clone()).collect();
    let mut witness = dec.assembly_witness.clone();
    if intersect_all(ring, &ideals)? != dec.ideal {
        let (_, cert) = saturate(s, &dec.ideal)?;
        witness = cert.with_kind(WitnessKind::DecompositionWitness);
        let assembly = ideal_sum(&dec.ideal, &Ideal::principal(&witness.witness))?;
        ideals = comps
            .iter()
            .map(|c| ideal_intersection(&c.saturation, &assembly))
            .collect::<Result<Vec<_>>>()?;
    }
    let out = Decomposition::from_components(&dec.ideal, s, &ideals, Some(witness))
        .map_err(|e| Error::contract(format!("minimalize lost validity: {e}")))?;
    if !out.minimal {
        return Err(Error::contract(format!(
            "minimalize of {} produced a non-minimal decomposition",
            dec.ideal
        )));
    }
    Ok(out)
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

    fn units() -> MultiplicativeSet {
        MultiplicativeSet::units(&z())
    }

    #[test]
    fn classical_examples() {
        assert_eq!(primary_decomposition(&zi(12)).unwrap().component_ideals(), [zi(4), zi(3)]);
        assert_eq!(primary_decomposition(&zi(36)).unwrap().component_ideals(), [zi(4), zi(9)]);
        let p = RingDescriptor::polynomials(2).unwrap();
        let x = p.variable().unwrap();
        let f = x.mul(&x).add(&x);
        let shown: Vec<String> = primary_decomposition(&Ideal::principal(&f))
            .unwrap()
            .component_ideals()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(shown, ["(x)", "(x+1)"]);
        assert!(matches!(primary_decomposition(&zi(1)), Err(Error::UnitIdeal)));
    }

    #[test]
    fn s_primary_examples() {
        let d = s_primary_decomposition(&zi(36), &comp(&[2, 3])).unwrap();
        assert_eq!(d.component_ideals(), [zi(4), zi(9)]);
        let d = s_primary_decomposition(&zi(6), &comp(&[3])).unwrap();
        assert_eq!(d.component_ideals(), [zi(6)]);
        assert_eq!(d.assembly_witness.witness, z().from_i64(2));
        let d = s_primary_decomposition(&zi(60), &comp(&[2])).unwrap();
        assert_eq!(d.component_ideals(), [zi(60)]);
        assert_eq!(d.assembly_witness.witness, z().from_i64(15));
        assert!(d.assembly_identity_holds().unwrap());
        let err = s_primary_decomposition(&zi(12), &comp(&[5])).unwrap_err();
        assert_eq!(err.to_string(), "ideal meets S (witness 12)");
    }

    #[test]
    fn minimalize_examples() {
        let redundant = Decomposition::from_components(&zi(36), &units(), &[zi(4), zi(9), zi(3)], None).unwrap();
        assert!(!redundant.minimal);
        let m = minimalize(&redundant).unwrap();
        assert_eq!(m.component_ideals(), [zi(4), zi(9)]);
        assert_eq!(minimalize(&m).unwrap(), m);
        let merged = Decomposition::from_components(&zi(8), &units(), &[zi(4), zi(8)], None).unwrap();
        assert_eq!(minimalize(&merged).unwrap().component_ideals(), [zi(8)]);
        let zero = Decomposition::from_components(&zi(0), &units(), &[zi(0), zi(4)], None).unwrap();
        assert_eq!(minimalize(&zero).unwrap().component_ideals(), [zi(0)]);
    }

    #[test]
    fn minimality_checks() {
        let d = Decomposition::from_components(&zi(36), &units(), &[zi(4), zi(9)], None).unwrap();
        assert!(is_minimal_decomposition(&d));
        let d = Decomposition::from_components(&zi(36), &units(), &[zi(4), zi(9), zi(3)], None).unwrap();
        assert!(!is_minimal_decomposition(&d));
        let d = Decomposition::from_components(&zi(0), &units(), &[zi(0), zi(4)], None).unwrap();
        assert!(!is_minimal_decomposition(&d));
        assert!(Decomposition::from_components(&zi(36), &units(), &[zi(4), zi(36)], None).is_err());
        let d = Decomposition::from_components(&zi(8), &units(), &[zi(8)], None).unwrap();
        assert!(is_minimal_decomposition(&d));
    }

    #[test]
    fn reassembly_after_pruning() {
        let s = comp(&[3, 5]);
        let d = s_primary_decomposition(&zi(2 * 9 * 25), &s).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d.assembly_identity_holds().unwrap());
        assert_eq!(minimalize(&d).unwrap(), d);
    }
}
