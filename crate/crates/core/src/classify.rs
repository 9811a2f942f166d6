//! Decision procedures for S-prime, S-primary, S-irreducible and S-finite
//! ideals, with certificates that re-verify against the definitions.

use std::fmt;

use crate::error::{Error, Result};
use crate::multiplicative::{saturate, saturate_with, Caps, MultiplicativeSet, WitnessCertificate, WitnessKind};
use crate::ring::{
    ideal_intersection, ideal_product, is_primary_ideal, is_prime_ideal, radical, Ideal,
    RingElement,
};

/// A truth value that may be unknown when the search space is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn known(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Unknown => None,
        }
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        })
    }
}

/// Outcome of a predicate that carries a witness from `S` when it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<WitnessCertificate>,
}

/// `s(I ∩ J) ⊆ Q ⊆ I ∩ J` with neither `I` nor `J` pushed into `Q` by any
/// multiple of `s`. Here `k = I ∩ J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub k: Ideal,
    pub i: Ideal,
    pub j: Ideal,
    pub s: RingElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SIrreducibility {
    pub holds: bool,
    pub counterexample: Option<SplitWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFiniteness {
    pub holds: bool,
    pub s: RingElement,
    pub generators: Vec<RingElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub prime: Tri,
    pub primary: Tri,
    pub irreducible: Tri,
    pub s_prime: Tri,
    pub s_primary: Tri,
    pub s_irreducible: Tri,
    pub s_finite: Tri,
    pub disjoint_from_s: Tri,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub ideal: Ideal,
    pub mult_set: MultiplicativeSet,
    pub flags: Flags,
    pub s_prime_witness: Option<WitnessCertificate>,
    pub s_primary_witness: Option<WitnessCertificate>,
    pub s_irreducible_counterexample: Option<SplitWitness>,
    pub s_finite: SFiniteness,
    pub radical: Ideal,
    pub saturation: Ideal,
    pub saturation_witness: WitnessCertificate,
}

/// `Q` is S-prime iff `Q ∩ S = ∅` and `S(Q)` is prime; the saturation
/// stabilizer then serves as the uniform witness.
pub fn is_s_prime(q: &Ideal, s: &MultiplicativeSet) -> Result<Verdict> {
    if !s.is_disjoint(q)? {
        return Ok(Verdict {
            holds: false,
            witness: None,
        });
    }
    let (sat, cert) = saturate(s, q)?;
    let holds = is_prime_ideal(&sat);
    Ok(Verdict {
        holds,
        witness: holds.then(|| cert.with_kind(WitnessKind::SPrimeWitness)),
    })
}

/// `Q` is S-primary iff `Q ∩ S = ∅` and `S(Q)` is primary. With
/// `S(Q) = (Q : s₀)` and `S(rad Q) = (rad Q : t₀)` the witness is `s₀t₀`.
pub fn is_s_primary(q: &Ideal, s: &MultiplicativeSet) -> Result<Verdict> {
    if !s.is_disjoint(q)? {
        return Ok(Verdict {
            holds: false,
            witness: None,
        });
    }
    let (sat, s0) = saturate(s, q)?;
    if !is_primary_ideal(&sat) {
        return Ok(Verdict {
            holds: false,
            witness: None,
        });
    }
    let (_, t0) = saturate(s, &radical(q))?;
    Ok(Verdict {
        holds: true,
        witness: Some(s0.combine(&t0, WitnessKind::SPrimaryWitness)),
    })
}

/// Searches for `I, J ⊇ Q` with `I ∩ J ⊆ S(Q)` and `I, J ⊄ S(Q)`.
///
/// `s(I ∩ J) ⊆ Q` for some `s ∈ S` exactly when `I ∩ J ⊆ S(Q)`, and
/// `ss'I ⊆ Q` for some `s'` exactly when `I ⊆ S(Q)`, so the premise element
/// never affects the conclusion. The reported `s` is the least element of
/// `S` found with `s(I ∩ J) ⊆ Q`.
pub fn is_s_irreducible(q: &Ideal, s: &MultiplicativeSet) -> Result<SIrreducibility> {
    s_irreducible_search(q, s, Caps::default())
}

fn s_irreducible_search(q: &Ideal, s: &MultiplicativeSet, caps: Caps) -> Result<SIrreducibility> {
    if !s.is_disjoint(q)? {
        return Ok(SIrreducibility {
            holds: false,
            counterexample: None,
        });
    }
    let (sat, cert) = saturate_with(s, q, caps)?;
    let over = overideals(q, caps)?;
    let outside: Vec<&Ideal> = over.iter().filter(|i| !i.is_subset_of(&sat)).collect();
    let mut best: Option<(Ideal, Ideal, Ideal)> = None;
    for (a, i) in outside.iter().enumerate() {
        for j in &outside[a..] {
            let k = ideal_intersection(i, j)?;
            if !k.is_subset_of(&sat) {
                continue;
            }
            let candidate = (k, (*i).clone(), (*j).clone());
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    let counterexample = match best {
        None => None,
        Some((k, i, j)) => {
            let s_elem = least_absorbing(q, &k, s, &cert)?;
            Some(SplitWitness { k, i, j, s: s_elem })
        }
    };
    Ok(SIrreducibility {
        holds: counterexample.is_none(),
        counterexample,
    })
}

/// Least `s ∈ S` (among 1, residue representatives and the stabilizer) with
/// `sK ⊆ Q`.
fn least_absorbing(
    q: &Ideal,
    k: &Ideal,
    s: &MultiplicativeSet,
    fallback: &WitnessCertificate,
) -> Result<RingElement> {
    let ring = q.ring();
    let absorbs = |x: &RingElement| -> Result<bool> {
        Ok(ideal_product(&Ideal::principal(x), k)?.is_subset_of(q))
    };
    let mut candidates = vec![ring.one()];
    if let Ok(residues) = s.s_residues_mod(&q.generator_element(), Caps::default()) {
        candidates.extend(residues.into_iter().filter(|r| s.contains(r)));
    }
    candidates.push(fallback.witness.clone());
    for c in candidates {
        if s.contains(&c) && absorbs(&c)? {
            return Ok(c);
        }
    }
    Err(Error::contract(format!(
        "no element of {s} pushes {k} into {q}"
    )))
}

/// Ideals containing `q`, refused beyond the element cap since both
/// irreducibility searches are quadratic in their number.
fn overideals(q: &Ideal, caps: Caps) -> Result<Vec<Ideal>> {
    let over = q.divisor_ideals()?;
    let cap = caps.max_elements;
    if over.len() > cap {
        return Err(Error::CapExceeded {
            what: format!("ideals containing {q}"),
            needed: over.len().to_string(),
            cap,
        });
    }
    Ok(over)
}

/// Classical irreducibility: `Q` proper and never `I ∩ J` with `I, J ⊋ Q`.
pub fn is_irreducible(q: &Ideal) -> Result<bool> {
    irreducible_search(q, Caps::default())
}

fn irreducible_search(q: &Ideal, caps: Caps) -> Result<bool> {
    if q.is_unit_ideal() {
        return Ok(false);
    }
    let over: Vec<Ideal> = overideals(q, caps)?.into_iter().filter(|i| i != q).collect();
    for (a, i) in over.iter().enumerate() {
        for j in &over[a..] {
            if ideal_intersection(i, j)? == *q {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every catalog ideal is finitely generated, so `s = 1` and `J = I` work.
pub fn is_s_finite(i: &Ideal, s: &MultiplicativeSet) -> Result<SFiniteness> {
    i.ring().ensure_same(s.ring())?;
    Ok(SFiniteness {
        holds: true,
        s: i.ring().one(),
        generators: vec![i.generator_element()],
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessProperty {
    SPrime,
    SPrimary,
}

/// Probe elements for witness re-verification. In finite rings these are the
/// generators of all ideals, since membership of `xa` depends on `a` only up
/// to a unit. For a nonzero `Q = (q)` of `Z` or `F_p[x]` the divisors of `q`
/// suffice. Small residues are added for extra coverage.
fn probe_elements(q: &Ideal) -> Result<Vec<RingElement>> {
    let ring = q.ring();
    let mut probes: Vec<RingElement> = if ring.is_finite() {
        Ideal::zero(ring)
            .divisor_ideals()?
            .iter()
            .map(|i| i.generator_element())
            .collect()
    } else if q.is_zero_ideal() || q.is_unit_ideal() {
        vec![]
    } else {
        q.divisor_ideals()?
            .iter()
            .map(|i| i.generator_element())
            .collect()
    };
    match ring.size() {
        Some(n) if n <= 64 => probes.extend(ring.elements().unwrap()),
        Some(_) => {}
        None => {
            let small: Vec<RingElement> = match ring.kind() {
                crate::ring::RingKind::Integers => (-6..=12).map(|v| ring.from_i64(v)).collect(),
                _ => {
                    let x = ring.variable()?;
                    let mut v = vec![ring.zero(), ring.one(), x.clone()];
                    v.push(x.add(&ring.one()));
                    v.push(x.mul(&x));
                    v
                }
            };
            probes.extend(small);
        }
    }
    probes.sort();
    probes.dedup();
    Ok(probes)
}

/// Re-verifies `ab ∈ Q ⇒ sa ∈ Q or sb ∈ rad Q` (S-primary) or
/// `sb ∈ Q` (S-prime) over the probe set, together with `s ∈ S`.
pub fn verify_witness(
    q: &Ideal,
    s: &MultiplicativeSet,
    cert: &WitnessCertificate,
    property: WitnessProperty,
) -> Result<bool> {
    verify_witness_with(q, s, cert, property, Caps::default())
}

/// As [`verify_witness`]; the pairwise probe check is refused when the probe
/// set exceeds `caps.max_elements`.
pub fn verify_witness_with(
    q: &Ideal,
    s: &MultiplicativeSet,
    cert: &WitnessCertificate,
    property: WitnessProperty,
    caps: Caps,
) -> Result<bool> {
    if !cert.verify_membership(s) || q.contains(&cert.witness) {
        return Ok(false);
    }
    let w = &cert.witness;
    let target = match property {
        WitnessProperty::SPrime => q.clone(),
        WitnessProperty::SPrimary => radical(q),
    };
    let probes = probe_elements(q)?;
    if probes.len() > caps.max_elements {
        return Err(Error::CapExceeded {
            what: format!("witness probes for {q}"),
            needed: probes.len().to_string(),
            cap: caps.max_elements,
        });
    }
    for a in &probes {
        let wa_in = q.contains(&w.mul(a));
        for b in &probes {
            if q.contains(&a.mul(b)) && !wa_in && !target.contains(&w.mul(b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn tri_of(r: Result<bool>) -> Result<Tri> {
    match r {
        Ok(b) => Ok(b.into()),
        Err(Error::UnsupportedEnumeration(_) | Error::CapExceeded { .. }) => Ok(Tri::Unknown),
        Err(e) => Err(e),
    }
}

/// Runs every predicate, re-verifies witnesses and checks the implication
/// lattice among the flags.
pub fn classify(q: &Ideal, s: &MultiplicativeSet) -> Result<ClassificationReport> {
    classify_with(q, s, Caps::default())
}

/// As [`classify`] under explicit caps. Irreducibility flags beyond the caps
/// are unknown; witness re-verification beyond the caps is an error.
pub fn classify_with(q: &Ideal, s: &MultiplicativeSet, caps: Caps) -> Result<ClassificationReport> {
    q.ring().ensure_same(s.ring())?;
    let disjoint = s.is_disjoint(q)?;
    let prime = is_prime_ideal(q);
    let primary = is_primary_ideal(q);
    let irreducible = tri_of(irreducible_search(q, caps))?;
    let sp = is_s_prime(q, s)?;
    let spr = is_s_primary(q, s)?;
    let (s_irreducible, counterexample) = match s_irreducible_search(q, s, caps) {
        Ok(r) => (Tri::from(r.holds), r.counterexample),
        Err(Error::UnsupportedEnumeration(_) | Error::CapExceeded { .. }) => (Tri::Unknown, None),
        Err(e) => return Err(e),
    };
    let s_finite = is_s_finite(q, s)?;
    let (saturation, saturation_witness) = saturate_with(s, q, caps)?;
    let flags = Flags {
        prime: prime.into(),
        primary: primary.into(),
        irreducible,
        s_prime: sp.holds.into(),
        s_primary: spr.holds.into(),
        s_irreducible,
        s_finite: s_finite.holds.into(),
        disjoint_from_s: disjoint.into(),
    };
    let report = ClassificationReport {
        ideal: q.clone(),
        mult_set: s.clone(),
        flags,
        s_prime_witness: sp.witness,
        s_primary_witness: spr.witness,
        s_irreducible_counterexample: counterexample,
        s_finite,
        radical: radical(q),
        saturation,
        saturation_witness,
    };
    check_report(&report, caps)?;
    Ok(report)
}

fn implies(name: &str, a: Tri, b: Tri) -> Result<()> {
    if a == Tri::True && b == Tri::False {
        return Err(Error::contract(format!("implication failed: {name}")));
    }
    Ok(())
}

fn check_report(r: &ClassificationReport, caps: Caps) -> Result<()> {
    let f = &r.flags;
    let both = |a: Tri, b: Tri| match (a, b) {
        (Tri::True, Tri::True) => Tri::True,
        (Tri::Unknown, _) | (_, Tri::Unknown) => Tri::Unknown,
        _ => Tri::False,
    };
    implies("prime ⇒ primary", f.prime, f.primary)?;
    implies("prime ⇒ s_prime", both(f.prime, f.disjoint_from_s), f.s_prime)?;
    implies("primary ∧ disjoint ⇒ s_primary", both(f.primary, f.disjoint_from_s), f.s_primary)?;
    implies("s_prime ⇒ s_primary", f.s_prime, f.s_primary)?;
    implies(
        "irreducible ⇒ s_irreducible",
        both(f.irreducible, f.disjoint_from_s),
        f.s_irreducible,
    )?;
    if r.mult_set.is_units_only() {
        let proper = r.ideal.is_proper();
        let same = |a: Tri, b: bool| a.known().is_none_or(|a| a == b);
        if !same(f.s_primary, f.primary == Tri::True && proper)
            || !same(f.s_prime, f.prime == Tri::True && proper)
            || (f.irreducible != Tri::Unknown && f.s_irreducible != Tri::Unknown && f.irreducible != f.s_irreducible)
        {
            return Err(Error::contract("units-only collapse failed"));
        }
    }
    if let Some(w) = &r.s_prime_witness {
        if !verify_witness_with(&r.ideal, &r.mult_set, w, WitnessProperty::SPrime, caps)? {
            return Err(Error::contract(format!("S-prime witness {w} does not re-verify")));
        }
    }
    if let Some(w) = &r.s_primary_witness {
        if !verify_witness_with(&r.ideal, &r.mult_set, w, WitnessProperty::SPrimary, caps)? {
            return Err(Error::contract(format!("S-primary witness {w} does not re-verify")));
        }
        if !is_s_prime(&r.radical, &r.mult_set)?.holds {
            return Err(Error::contract(format!(
                "radical {} of an S-primary ideal is not S-prime",
                r.radical
            )));
        }
    }
    Ok(())
}
