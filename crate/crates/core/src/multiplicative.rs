//! Multiplicative sets, membership, residue images, disjointness and
//! saturation `S(I) = {a : sa ∈ I for some s ∈ S}` with stabilizer witnesses.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::ring::{
    ideal_colon_element, ideal_product, intersect_all, is_prime_ideal,
    radical, ElementValue, Ideal, RingDescriptor, RingElement, RingKind,
};

/// Rings with at most this many elements get their generated sets materialized.
const MATERIALIZE_LIMIT: u64 = 1 << 16;

/// Desk-scale bounds shared by saturation, enumeration and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_elements: usize,
    pub max_witness_degree: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_elements: 4096,
            max_witness_degree: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetKind {
    UnitsOnly,
    /// `R` minus the union of the prime ideals generated by these elements.
    ComplementOfPrimes(Vec<RingElement>),
    /// Products of the generators, together with `1`.
    GeneratedBy(Vec<RingElement>),
    /// A finite set listed element by element (finite rings only).
    ExplicitFinite(Vec<RingElement>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicativeSet {
    ring: RingDescriptor,
    kind: SetKind,
    members: Option<Arc<[RingElement]>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessKind {
    SaturationStabilizer,
    SPrimaryWitness,
    SPrimeWitness,
    DecompositionWitness,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::SaturationStabilizer => "saturation-stabilizer",
            WitnessKind::SPrimaryWitness => "s-primary-witness",
            WitnessKind::SPrimeWitness => "s-prime-witness",
            WitnessKind::DecompositionWitness => "decomposition-witness",
        })
    }
}

/// An element of `S` certifying a property, with the factors from `S` whose
/// product it is.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WitnessCertificate {
    pub witness: RingElement,
    pub kind: WitnessKind,
    pub provenance: Vec<RingElement>,
}

impl WitnessCertificate {
    pub fn new(kind: WitnessKind, provenance: Vec<RingElement>, ring: &RingDescriptor) -> Self {
        WitnessCertificate {
            witness: RingElement::product(ring, &provenance),
            kind,
            provenance,
        }
    }

    pub fn trivial(kind: WitnessKind, ring: &RingDescriptor) -> Self {
        WitnessCertificate::new(kind, vec![], ring)
    }

    pub fn with_kind(&self, kind: WitnessKind) -> Self {
        WitnessCertificate {
            kind,
            ..self.clone()
        }
    }

    /// Product certificate: witness `a·b`, provenance concatenated.
    pub fn combine(&self, other: &WitnessCertificate, kind: WitnessKind) -> Self {
        let mut provenance = self.provenance.clone();
        provenance.extend(other.provenance.iter().cloned());
        WitnessCertificate {
            witness: self.witness.mul(&other.witness),
            kind,
            provenance,
        }
    }

    /// The witness lies in `S` and equals the product of its provenance.
    pub fn verify_membership(&self, s: &MultiplicativeSet) -> bool {
        s.contains(&self.witness)
            && RingElement::product(self.witness.ring(), &self.provenance) == self.witness
            && self.provenance.iter().all(|f| s.contains(f))
    }
}

/// Three-valued answer for set containment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Containment {
    Yes,
    No,
    Unknown,
}

static SATURATE_CHECKS: AtomicU64 = AtomicU64::new(0);
static RESTRICT_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of saturation calls whose contract has been verified in this process.
pub fn saturate_contract_checks() -> u64 {
    SATURATE_CHECKS.load(Ordering::Relaxed)
}

/// Number of decomposition restrictions whose contract has been verified.
pub fn restrict_contract_checks() -> u64 {
    RESTRICT_CHECKS.load(Ordering::Relaxed)
}

pub(crate) fn count_restrict_check() {
    RESTRICT_CHECKS.fetch_add(1, Ordering::Relaxed);
}

fn sorted_unique(mut v: Vec<RingElement>) -> Vec<RingElement> {
    v.sort();
    v.dedup();
    v
}

/// Multiplicative closure of `gens` together with `1` in a finite ring.
fn closure(ring: &RingDescriptor, gens: &[RingElement]) -> Vec<RingElement> {
    let mut seen: BTreeSet<RingElement> = BTreeSet::new();
    let mut frontier = vec![ring.one()];
    seen.insert(ring.one());
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

impl MultiplicativeSet {
    pub fn units(ring: &RingDescriptor) -> Self {
        MultiplicativeSet {
            ring: ring.clone(),
            kind: SetKind::UnitsOnly,
            members: None,
        }
    }

    /// `R ∖ (P_1 ∪ … ∪ P_k)` with `P_i = (p_i)` prime.
    pub fn complement_of_primes(ring: &RingDescriptor, primes: &[RingElement]) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::InvalidMultiplicativeSet(
                "complement of no primes contains 0".into(),
            ));
        }
        let mut gens = Vec::new();
        for p in primes {
            ring.ensure_same(p.ring())?;
            let ideal = Ideal::principal(p);
            if !is_prime_ideal(&ideal) {
                return Err(Error::InvalidMultiplicativeSet(format!(
                    "{p} does not generate a prime ideal of {ring}"
                )));
            }
            gens.push(ideal.generator_element());
        }
        Ok(MultiplicativeSet {
            ring: ring.clone(),
            kind: SetKind::ComplementOfPrimes(sorted_unique(gens)),
            members: None,
        })
    }

    /// The set of finite products of `gens`, together with `1`.
    pub fn generated_by(ring: &RingDescriptor, gens: &[RingElement]) -> Result<Self> {
        for g in gens {
            ring.ensure_same(g.ring())?;
            if g.is_zero() {
                return Err(Error::InvalidMultiplicativeSet("0 cannot generate S".into()));
            }
        }
        let gens = sorted_unique(gens.to_vec());
        if ring.is_finite() {
            let all = RingElement::product(ring, &gens);
            if radical(&Ideal::zero(ring)).contains(&all) {
                return Err(Error::InvalidMultiplicativeSet(format!(
                    "the generators have a nilpotent product {all}, so 0 ∈ S"
                )));
            }
        }
        let members = match ring.size() {
            Some(n) if n <= MATERIALIZE_LIMIT => Some(closure(ring, &gens).into()),
            _ => None,
        };
        Ok(MultiplicativeSet {
            ring: ring.clone(),
            kind: SetKind::GeneratedBy(gens),
            members,
        })
    }

    /// A finite set given by its elements; closure is verified exhaustively.
    pub fn explicit(ring: &RingDescriptor, elements: &[RingElement]) -> Result<Self> {
        if !ring.is_finite() {
            return Err(Error::InvalidMultiplicativeSet(format!(
                "explicit sets need a finite ring, got {ring}"
            )));
        }
        for e in elements {
            ring.ensure_same(e.ring())?;
        }
        let members = sorted_unique(elements.to_vec());
        let has = |x: &RingElement| members.binary_search(x).is_ok();
        if !has(&ring.one()) {
            return Err(Error::InvalidMultiplicativeSet("1 is not in the set".into()));
        }
        if has(&ring.zero()) {
            return Err(Error::InvalidMultiplicativeSet("0 is in the set".into()));
        }
        for a in &members {
            for b in &members {
                let c = a.mul(b);
                if !has(&c) {
                    return Err(Error::InvalidMultiplicativeSet(format!(
                        "not closed: {a}·{b} = {c} is missing"
                    )));
                }
            }
        }
        Ok(MultiplicativeSet {
            ring: ring.clone(),
            kind: SetKind::ExplicitFinite(members.clone()),
            members: Some(members.into()),
        })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn is_units_only(&self) -> bool {
        matches!(self.kind, SetKind::UnitsOnly)
    }

    /// All members, for finite rings.
    pub fn members(&self) -> Option<Vec<RingElement>> {
        if let Some(m) = &self.members {
            return Some(m.to_vec());
        }
        let elements = self.ring.elements()?;
        Some(elements.into_iter().filter(|x| self.contains(x)).collect())
    }

    fn excluded(&self) -> Vec<Ideal> {
        match &self.kind {
            SetKind::ComplementOfPrimes(ps) => ps.iter().map(Ideal::principal).collect(),
            _ => vec![],
        }
    }

    /// Decides `x ∈ S`. Panics if `x` belongs to another ring.
    pub fn contains(&self, x: &RingElement) -> bool {
        assert_eq!(&self.ring, x.ring(), "membership test across different rings");
        if let Some(m) = &self.members {
            return m.binary_search(x).is_ok();
        }
        match &self.kind {
            SetKind::UnitsOnly => x.is_unit(),
            SetKind::ComplementOfPrimes(_) => !self.excluded().iter().any(|p| p.contains(x)),
            SetKind::ExplicitFinite(m) => m.binary_search(x).is_ok(),
            SetKind::GeneratedBy(gens) => match x.value() {
                ElementValue::Integer(v) => integer_generated(v, gens),
                ElementValue::Polynomial(f) => poly_generated(f, gens),
                _ => closure(&self.ring, gens).binary_search(x).is_ok(),
            },
        }
    }

    /// The image of `S` in `R/(m)`, as sorted representatives. For finite
    /// rings `m` is ignored and the members are returned.
    pub fn s_residues_mod(&self, m: &RingElement, caps: Caps) -> Result<Vec<RingElement>> {
        self.ring.ensure_same(m.ring())?;
        if self.ring.is_finite() {
            let size = self.ring.size().unwrap();
            if size as usize > caps.max_elements {
                return Err(Error::CapExceeded {
                    what: format!("members of S in {}", self.ring),
                    needed: size.to_string(),
                    cap: caps.max_elements,
                });
            }
            return Ok(self.members().unwrap());
        }
        if m.is_zero() {
            return Err(Error::Precondition("residues modulo zero in an infinite ring".into()));
        }
        if m.is_unit() {
            return Err(Error::Precondition("residues modulo a unit".into()));
        }
        let all = residue_representatives(m, caps)?;
        let reduce = |x: &RingElement| reduce_mod(x, m);
        let image: BTreeSet<RingElement> = match &self.kind {
            SetKind::UnitsOnly => self.ring.units().iter().map(reduce).collect(),
            SetKind::ComplementOfPrimes(_) => {
                let dividing: Vec<Ideal> = self
                    .excluded()
                    .into_iter()
                    .filter(|p| p.contains(m))
                    .collect();
                all.into_iter()
                    .filter(|r| !dividing.iter().any(|p| p.contains(r)))
                    .collect()
            }
            SetKind::GeneratedBy(gens) => {
                let gens: Vec<RingElement> = gens.iter().map(reduce).collect();
                let mut seen = BTreeSet::new();
                let mut frontier = vec![reduce(&self.ring.one())];
                seen.insert(frontier[0].clone());
                while let Some(x) = frontier.pop() {
                    for g in &gens {
                        let y = reduce(&x.mul(g));
                        if seen.insert(y.clone()) {
                            frontier.push(y);
                        }
                    }
                }
                seen
            }
            SetKind::ExplicitFinite(_) => unreachable!("explicit sets live in finite rings"),
        };
        Ok(image.into_iter().collect())
    }

    /// Some element of `I ∩ S`, or `None` when they are disjoint.
    pub fn meeting_witness(&self, ideal: &Ideal) -> Result<Option<RingElement>> {
        self.ring.ensure_same(ideal.ring())?;
        if let Some(m) = &self.members {
            return Ok(m.iter().find(|x| ideal.contains(x)).cloned());
        }
        Ok(match &self.kind {
            SetKind::UnitsOnly => ideal.is_unit_ideal().then(|| self.ring.one()),
            SetKind::ComplementOfPrimes(_) => {
                if self.excluded().iter().any(|p| ideal.is_subset_of(p)) {
                    None
                } else {
                    Some(ideal.generator_element())
                }
            }
            _ => {
                let (sat, cert) = saturate(self, ideal)?;
                sat.is_unit_ideal().then_some(cert.witness)
            }
        })
    }

    /// `S ∩ I = ∅`.
    pub fn is_disjoint(&self, ideal: &Ideal) -> Result<bool> {
        Ok(self.meeting_witness(ideal)?.is_none())
    }

    /// Decides `self ⊆ larger`.
    pub fn restrict_to_larger(&self, larger: &MultiplicativeSet) -> Result<Containment> {
        self.ring.ensure_same(&larger.ring)?;
        let all_in = |xs: &[RingElement]| {
            if xs.iter().all(|x| larger.contains(x)) {
                Containment::Yes
            } else {
                Containment::No
            }
        };
        if let Some(members) = self.members() {
            return Ok(all_in(&members));
        }
        Ok(match &self.kind {
            SetKind::UnitsOnly => all_in(&self.ring.units()),
            SetKind::GeneratedBy(gens) => all_in(gens),
            SetKind::ExplicitFinite(m) => all_in(m),
            SetKind::ComplementOfPrimes(_) => match &larger.kind {
                SetKind::ComplementOfPrimes(_) => {
                    let mine = self.excluded();
                    let covered = larger
                        .excluded()
                        .iter()
                        .all(|q| mine.iter().any(|p| q.is_subset_of(p)));
                    if covered {
                        Containment::Yes
                    } else {
                        Containment::No
                    }
                }
                _ => {
                    // An infinite complement against a finitely generated set:
                    // look for a small prime of S outside the larger set.
                    let found = small_primes(&self.ring, 2000)
                        .into_iter()
                        .any(|q| self.contains(&q) && !larger.contains(&q));
                    if found {
                        Containment::No
                    } else {
                        Containment::Unknown
                    }
                }
            },
        })
    }
}

/// `x ∈ ⟨gens⟩` in `Z`: exact search over factorizations by the generators.
fn integer_generated(x: &BigInt, gens: &[RingElement]) -> bool {
    if x.is_zero() {
        return false;
    }
    let ints: Vec<BigInt> = gens.iter().filter_map(|g| g.as_integer().cloned()).collect();
    let minus_one = ints.iter().any(|g| *g == BigInt::from(-1));
    let proper: Vec<BigInt> = ints.into_iter().filter(|g| g.abs() > BigInt::one()).collect();
    let mut memo: HashMap<BigInt, bool> = HashMap::new();
    fn go(
        v: &BigInt,
        proper: &[BigInt],
        minus_one: bool,
        memo: &mut HashMap<BigInt, bool>,
    ) -> bool {
        if v.abs().is_one() {
            return v.is_one() || minus_one;
        }
        if let Some(&r) = memo.get(v) {
            return r;
        }
        let r = proper
            .iter()
            .any(|g| (v % g).is_zero() && go(&(v / g), proper, minus_one, memo));
        memo.insert(v.clone(), r);
        r
    }
    go(x, &proper, minus_one, &mut memo)
}

/// `f ∈ ⟨gens⟩` in `F_p[x]`: divide out nonconstant generators, then test
/// the leftover constant against the group generated by constant generators.
fn poly_generated(f: &Poly, gens: &[RingElement]) -> bool {
    if f.is_zero() {
        return false;
    }
    let polys: Vec<&Poly> = gens.iter().filter_map(|g| g.as_poly()).collect();
    let p = f.characteristic();
    let mut constants = BTreeSet::from([1u64]);
    let mut frontier = vec![1u64];
    let constant_gens: Vec<u64> = polys
        .iter()
        .filter(|g| g.degree() == Some(0))
        .map(|g| g.leading())
        .collect();
    while let Some(c) = frontier.pop() {
        for g in &constant_gens {
            let d = (c as u128 * *g as u128 % p as u128) as u64;
            if constants.insert(d) {
                frontier.push(d);
            }
        }
    }
    let proper: Vec<&Poly> = polys
        .into_iter()
        .filter(|g| g.degree().is_some_and(|d| d > 0))
        .collect();
    let mut memo: HashMap<Poly, bool> = HashMap::new();
    fn go(
        v: &Poly,
        proper: &[&Poly],
        constants: &BTreeSet<u64>,
        memo: &mut HashMap<Poly, bool>,
    ) -> bool {
        if v.degree() == Some(0) {
            return constants.contains(&v.leading());
        }
        if let Some(&r) = memo.get(v) {
            return r;
        }
        let r = proper.iter().any(|g| {
            let (q, rem) = v.div_rem(g);
            rem.is_zero() && go(&q, proper, constants, memo)
        });
        memo.insert(v.clone(), r);
        r
    }
    go(f, &proper, &constants, &mut memo)
}

/// Canonical representative of `x` modulo `m` in `Z` or `F_p[x]`.
fn reduce_mod(x: &RingElement, m: &RingElement) -> RingElement {
    let ring = x.ring();
    match (x.value(), m.value()) {
        (ElementValue::Integer(a), ElementValue::Integer(n)) => {
            let n = n.abs();
            ring.from_bigint(&(((a % &n) + &n) % &n))
        }
        (ElementValue::Polynomial(a), ElementValue::Polynomial(n)) => {
            ring.polynomial(a.rem(n)).unwrap()
        }
        _ => x.clone(),
    }
}

/// All residues modulo a nonzero nonunit `m` of `Z` or `F_p[x]`.
fn residue_representatives(m: &RingElement, caps: Caps) -> Result<Vec<RingElement>> {
    let ring = m.ring();
    let too_many = |needed: String| Error::CapExceeded {
        what: format!("residues modulo {m}"),
        needed,
        cap: caps.max_elements,
    };
    match m.value() {
        ElementValue::Integer(n) => {
            let n = n.abs();
            if n > BigInt::from(caps.max_elements) {
                return Err(too_many(n.to_string()));
            }
            let n: i64 = n.try_into().unwrap();
            Ok((0..n).map(|r| ring.from_i64(r)).collect())
        }
        ElementValue::Polynomial(f) => {
            let p = f.characteristic();
            let d = f.degree().unwrap();
            let count = (p as f64).powi(d as i32);
            if count > caps.max_elements as f64 {
                return Err(too_many(format!("{p}^{d}")));
            }
            Ok(Poly::all_below_degree(p, d)
                .into_iter()
                .map(|g| ring.polynomial(g).unwrap())
                .collect())
        }
        _ => unreachable!("residues are only taken in infinite rings"),
    }
}

/// The first few primes (or monic irreducibles) of an infinite catalog ring.
fn small_primes(ring: &RingDescriptor, limit: usize) -> Vec<RingElement> {
    match ring.kind() {
        RingKind::Integers => (2..)
            .filter(|&n| crate::arith::integer::is_prime_u64(n))
            .take(limit)
            .map(|n| ring.from_i64(n as i64))
            .collect(),
        RingKind::PolynomialsOverPrimeField(p) => (1..)
            .flat_map(|d| Poly::monic_of_degree(*p, d))
            .filter(|f| f.is_irreducible())
            .take(limit)
            .map(|f| ring.polynomial(f).unwrap())
            .collect(),
        _ => vec![],
    }
}

/// `S(I)` with a stabilizer `s₀ ∈ S` such that `S(I) = (I : s₀)`, under the
/// default caps.
pub fn saturate(s: &MultiplicativeSet, ideal: &Ideal) -> Result<(Ideal, WitnessCertificate)> {
    saturate_with(s, ideal, Caps::default())
}

/// `S(I)` with its stabilizer. The contract `I ⊆ S(I)`, `s₀ ∈ S` and
/// `s₀·S(I) ⊆ I` is verified on every call.
pub fn saturate_with(
    s: &MultiplicativeSet,
    ideal: &Ideal,
    caps: Caps,
) -> Result<(Ideal, WitnessCertificate)> {
    s.ring.ensure_same(ideal.ring())?;
    let ring = &s.ring;
    let (sat, provenance) = match &s.kind {
        SetKind::UnitsOnly => (ideal.clone(), vec![]),
        SetKind::ComplementOfPrimes(_) => complement_saturation(s, ideal)?,
        SetKind::GeneratedBy(gens) => stabilize(ideal, gens, caps)?,
        SetKind::ExplicitFinite(members) => {
            let gens: Vec<RingElement> = members.iter().filter(|m| !m.is_one()).cloned().collect();
            stabilize(ideal, &gens, caps)?
        }
    };
    let cert = WitnessCertificate::new(WitnessKind::SaturationStabilizer, provenance, ring);
    check_saturation_contract(s, ideal, &sat, &cert)?;
    Ok((sat, cert))
}

/// Keep the primary components whose prime avoids `S`; the intersection of
/// the dropped ones is generated by an element of `S` that stabilizes.
fn complement_saturation(
    s: &MultiplicativeSet,
    ideal: &Ideal,
) -> Result<(Ideal, Vec<RingElement>)> {
    if ideal.is_unit_ideal() {
        return Ok((ideal.clone(), vec![]));
    }
    let excluded = s.excluded();
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for q in ideal.primary_components()? {
        let p = radical(&q);
        if excluded.iter().any(|e| p.is_subset_of(e)) {
            kept.push(q);
        } else {
            dropped.push(q);
        }
    }
    let sat = intersect_all(&s.ring, &kept)?;
    let provenance = if dropped.is_empty() {
        vec![]
    } else {
        vec![intersect_all(&s.ring, &dropped)?.generator_element()]
    };
    Ok((sat, provenance))
}

/// Iterated colon stabilization: divide by each generator until no growth,
/// repeat passes until a full pass changes nothing.
fn stabilize(
    ideal: &Ideal,
    gens: &[RingElement],
    caps: Caps,
) -> Result<(Ideal, Vec<RingElement>)> {
    let mut current = ideal.clone();
    let mut provenance = Vec::new();
    for _ in 0..=caps.max_witness_degree {
        let mut grew = false;
        for g in gens {
            loop {
                let next = ideal_colon_element(&current, g)?;
                if next == current {
                    break;
                }
                current = next;
                provenance.push(g.clone());
                grew = true;
            }
        }
        if !grew {
            return Ok((current, provenance));
        }
    }
    Err(Error::CapExceeded {
        what: format!("saturation passes for {ideal}"),
        needed: "more".into(),
        cap: caps.max_witness_degree as usize,
    })
}

fn check_saturation_contract(
    s: &MultiplicativeSet,
    ideal: &Ideal,
    sat: &Ideal,
    cert: &WitnessCertificate,
) -> Result<()> {
    SATURATE_CHECKS.fetch_add(1, Ordering::Relaxed);
    if !ideal.is_subset_of(sat) {
        return Err(Error::contract(format!("{ideal} ⊄ S({ideal}) = {sat}")));
    }
    if !cert.verify_membership(s) {
        return Err(Error::contract(format!(
            "stabilizer {} is not in {s}",
            cert.witness
        )));
    }
    let scaled = ideal_product(&Ideal::principal(&cert.witness), sat)?;
    if !scaled.is_subset_of(ideal) {
        return Err(Error::contract(format!(
            "{}·S({ideal}) ⊄ {ideal}",
            cert.witness
        )));
    }
    Ok(())
}

fn join(items: &[RingElement]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for MultiplicativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SetKind::UnitsOnly => write!(f, "units"),
            SetKind::ComplementOfPrimes(ps) => write!(f, "complement({})", join(ps)),
            SetKind::GeneratedBy(gs) => write!(f, "gen({})", join(gs)),
            SetKind::ExplicitFinite(ms) => write!(f, "set{{{}}}", join(ms)),
        }
    }
}

impl fmt::Display for WitnessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.witness, self.kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingDescriptor {
        RingDescriptor::integers()
    }

    fn zi(v: i64) -> Ideal {
        Ideal::principal(&z().from_i64(v))
    }

    fn comp(ps: &[i64]) -> MultiplicativeSet {
        let ps: Vec<RingElement> = ps.iter().map(|&p| z().from_i64(p)).collect();
        MultiplicativeSet::complement_of_primes(&z(), &ps).unwrap()
    }

    fn gen(gs: &[i64]) -> MultiplicativeSet {
        let gs: Vec<RingElement> = gs.iter().map(|&g| z().from_i64(g)).collect();
        MultiplicativeSet::generated_by(&z(), &gs).unwrap()
    }

    #[test]
    fn membership() {
        let s = comp(&[3]);
        assert!(s.contains(&z().from_i64(2)));
        assert!(!s.contains(&z().from_i64(6)));
        let b = RingDescriptor::boolean(3).unwrap();
        let e = b.tuple(&[1, 0, 0]).unwrap();
        let s = MultiplicativeSet::explicit(&b, &[b.one(), e.clone()]).unwrap();
        assert!(s.contains(&e));
        let g = gen(&[2, 3]);
        assert!(g.contains(&z().from_i64(12)));
        assert!(!g.contains(&z().from_i64(10)));
        assert!(!g.contains(&z().from_i64(-2)));
        assert!(gen(&[-2]).contains(&z().from_i64(4)));
        assert!(!gen(&[-2]).contains(&z().from_i64(2)));
    }

    #[test]
    fn construction_rejects_bad_sets() {
        assert!(MultiplicativeSet::generated_by(&z(), &[z().zero()]).is_err());
        let r = RingDescriptor::modular(12).unwrap();
        assert!(MultiplicativeSet::generated_by(&r, &[r.from_i64(6)]).is_err());
        assert!(MultiplicativeSet::explicit(&r, &[r.one(), r.from_i64(5), r.from_i64(7)]).is_err());
        assert!(MultiplicativeSet::complement_of_primes(&z(), &[z().from_i64(4)]).is_err());
    }

    #[test]
    fn residues() {
        let caps = Caps::default();
        let six = z().from_i64(6);
        let show = |v: Vec<RingElement>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(show(comp(&[3]).s_residues_mod(&six, caps).unwrap()), ["1", "2", "4", "5"]);
        assert_eq!(
            show(gen(&[2]).s_residues_mod(&z().from_i64(9), caps).unwrap()),
            ["1", "2", "4", "5", "7", "8"]
        );
        assert_eq!(
            show(MultiplicativeSet::units(&z()).s_residues_mod(&six, caps).unwrap()),
            ["1", "5"]
        );
        assert!(comp(&[3]).s_residues_mod(&z().zero(), caps).is_err());
    }

    #[test]
    fn disjointness() {
        assert!(comp(&[2]).is_disjoint(&zi(4)).unwrap());
        assert!(!comp(&[5]).is_disjoint(&zi(12)).unwrap());
        assert_eq!(
            comp(&[5]).meeting_witness(&zi(12)).unwrap(),
            Some(z().from_i64(12))
        );
        assert!(gen(&[2]).is_disjoint(&zi(0)).unwrap());
        assert!(!gen(&[2]).is_disjoint(&zi(8)).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let (sat, cert) = saturate(&comp(&[3]), &zi(6)).unwrap();
        assert_eq!(sat, zi(3));
        assert_eq!(cert.witness, z().from_i64(2));
        let (sat, cert) = saturate(&comp(&[2, 3]), &zi(36)).unwrap();
        assert_eq!(sat, zi(36));
        assert!(cert.witness.is_one());
        let (sat, _) = saturate(&MultiplicativeSet::units(&z()), &zi(10)).unwrap();
        assert_eq!(sat, zi(10));
        let (sat, cert) = saturate(&gen(&[2]), &zi(96)).unwrap();
        assert_eq!(sat, zi(3));
        assert_eq!(cert.witness, z().from_i64(32));
        let (sat, cert) = saturate(&comp(&[2]), &zi(60)).unwrap();
        assert_eq!(sat, zi(4));
        assert_eq!(cert.witness, z().from_i64(15));
    }

    #[test]
    fn saturation_in_finite_rings() {
        let b = RingDescriptor::boolean(3).unwrap();
        let e = b.tuple(&[1, 0, 0]).unwrap();
        let s = MultiplicativeSet::explicit(&b, &[b.one(), e.clone()]).unwrap();
        let (sat, cert) = saturate(&s, &Ideal::zero(&b)).unwrap();
        assert_eq!(sat, Ideal::principal(&b.tuple(&[0, 1, 1]).unwrap()));
        assert_eq!(cert.witness, e);
    }

    #[test]
    fn containment() {
        let units = MultiplicativeSet::units(&z());
        assert_eq!(units.restrict_to_larger(&comp(&[3])).unwrap(), Containment::Yes);
        assert_eq!(comp(&[2, 3]).restrict_to_larger(&comp(&[3])).unwrap(), Containment::Yes);
        assert_eq!(comp(&[3]).restrict_to_larger(&comp(&[2, 3])).unwrap(), Containment::No);
        assert_eq!(gen(&[2]).restrict_to_larger(&comp(&[2])).unwrap(), Containment::No);
        assert_eq!(comp(&[2]).restrict_to_larger(&gen(&[3])).unwrap(), Containment::No);
        assert_eq!(units.restrict_to_larger(&gen(&[2])).unwrap(), Containment::No);
    }

    #[test]
    fn display() {
        assert_eq!(comp(&[3, 2]).to_string(), "complement(2,3)");
        assert_eq!(gen(&[5, 2]).to_string(), "gen(2,5)");
        assert_eq!(MultiplicativeSet::units(&z()).to_string(), "units");
    }
}
